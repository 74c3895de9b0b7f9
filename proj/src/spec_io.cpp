#include "spec_io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace hypbound {

using nlohmann::json;

namespace {

double number(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw Error(ErrorCode::ParseError, std::string("missing or non-numeric field \"") + key + "\"");
  return it->get<double>();
}

std::string type_of(const json& obj) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  const auto it = obj.find("type");
  if (it == obj.end() || !it->is_string()) throw Error(ErrorCode::ParseError, "missing string field \"type\"");
  return it->get<std::string>();
}

Complex point_pair(const json& p) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
    throw Error(ErrorCode::ParseError, "points must be [x, y] number pairs");
  return {p[0].get<double>(), p[1].get<double>()};
}

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

Primitive parse_primitive(const json& j) {
  const std::string type = type_of(j);
  if (type == "point") {
    const Complex p{number(j, "x"), number(j, "y")};
    if (p == Complex{})
      throw Error(ErrorCode::ParseError, "the origin is implicit and must not be listed as a point");
    return SinglePoint{p};
  }
  if (type == "segment")
    return Segment{{number(j, "x1"), number(j, "y1")}, {number(j, "x2"), number(j, "y2")}};
  if (type == "disk") return ObstacleDisk{{number(j, "cx"), number(j, "cy")}, number(j, "r")};
  throw Error(ErrorCode::ParseError, "unknown primitive type \"" + type + "\"");
}

SequenceSpec parse_sequence(const json& j) {
  const std::string type = type_of(j);
  if (type == "geometric") {
    const auto count = j.find("count");
    if (count == j.end() || !count->is_number_integer())
      throw Error(ErrorCode::ParseError, "geometric sequence needs integer \"count\"");
    return SequenceSpec::geometric(number(j, "delta"), number(j, "ratio"), count->get<int>());
  }
  if (type == "explicit") {
    const auto pts = j.find("points");
    if (pts == j.end() || !pts->is_array()) throw Error(ErrorCode::ParseError, "explicit sequence needs \"points\"");
    std::vector<Complex> points;
    for (const json& p : *pts) points.push_back(point_pair(p));
    return SequenceSpec::explicit_points(std::move(points));
  }
  throw Error(ErrorCode::ParseError, "unknown sequence type \"" + type + "\"");
}

}  // namespace

DomainSpec parse_domain_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::ParseError, "domain spec must be a JSON object");
  try {
    std::vector<Primitive> prims;
    if (const auto it = root.find("primitives"); it != root.end()) {
      if (!it->is_array()) throw Error(ErrorCode::ParseError, "\"primitives\" must be an array");
      for (const json& p : *it) prims.push_back(parse_primitive(p));
    }
    std::optional<SequenceSpec> seq;
    if (const auto it = root.find("sequence"); it != root.end() && !it->is_null()) seq = parse_sequence(*it);
    return DomainSpec(std::move(prims), std::move(seq));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) throw Error(ErrorCode::ParseError, e.what());
    throw;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

DomainSpec load_domain_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_domain_json(buf.str());
}

json domain_to_json(const DomainSpec& spec) {
  json prims = json::array();
  for (const Primitive& prim : spec.obstacles()) {
    if (const auto* p = std::get_if<SinglePoint>(&prim)) {
      prims.push_back({{"type", "point"}, {"x", p->p.real()}, {"y", p->p.imag()}});
    } else if (const auto* s = std::get_if<Segment>(&prim)) {
      prims.push_back({{"type", "segment"},
                       {"x1", s->p.real()},
                       {"y1", s->p.imag()},
                       {"x2", s->q.real()},
                       {"y2", s->q.imag()}});
    } else if (const auto* d = std::get_if<ObstacleDisk>(&prim)) {
      prims.push_back({{"type", "disk"}, {"cx", d->center.real()}, {"cy", d->center.imag()}, {"r", d->radius}});
    }
  }
  json out = {{"primitives", prims}};
  if (const auto& seq = spec.sequence()) {
    if (const auto* g = std::get_if<SequenceSpec::Geometric>(&seq->mode())) {
      out["sequence"] = {{"type", "geometric"}, {"delta", g->delta}, {"ratio", g->ratio}, {"count", g->count}};
    } else {
      json pts = json::array();
      for (const Complex& p : seq->points()) pts.push_back(pair(p));
      out["sequence"] = {{"type", "explicit"}, {"points", pts}};
    }
  }
  return out;
}

json certificate_to_json(const Certificate& cert, double c) {
  return {
      {"case", to_string(cert.case_tag)},
      {"z", pair(cert.z)},
      {"zeta", pair(cert.zeta)},
      {"b", pair(cert.b)},
      {"log_ratio", cert.log_ratio},
      {"case_log_cap", cert.case_log_cap},
      {"implied_lower", cert.implied_lower},
      {"c", c},
  };
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "certificate must be a JSON object");
  try {
    Certificate cert;
    const auto tag = proof_case_from_string(j.at("case").get<std::string>());
    if (!tag) throw Error(ErrorCode::ParseError, "unknown certificate case");
    cert.case_tag = *tag;
    cert.z = point_pair(j.at("z"));
    cert.zeta = point_pair(j.at("zeta"));
    cert.b = point_pair(j.at("b"));
    cert.log_ratio = number(j, "log_ratio");
    cert.case_log_cap = number(j, "case_log_cap");
    cert.implied_lower = number(j, "implied_lower");
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace hypbound
