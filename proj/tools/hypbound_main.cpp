// hypbound command line front end. Talks to the library only through the C
// interface in hypbound/hypbound.h.
//
// Exit codes: 0 success, 1 property violation or hypothesis failure,
// 2 I/O, parse or usage error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypbound/hypbound.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitIo = 2;

struct DomainDeleter {
  void operator()(hb_domain* d) const { hb_domain_free(d); }
};
using DomainPtr = std::unique_ptr<hb_domain, DomainDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hb_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int exit_code(hb_status st) {
  switch (st) {
    case HB_OK: return kExitOk;
    case HB_ERR_PARSE:
    case HB_ERR_IO:
    case HB_ERR_INVALID_ARGUMENT: return kExitIo;
    default: return kExitViolation;
  }
}

int report(hb_status st) {
  std::cerr << "hypbound: " << hb_status_name(st) << ": " << hb_last_error() << "\n";
  return exit_code(st);
}

std::optional<std::pair<double, double>> parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used_re = 0, used_im = 0;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double x = std::stod(re, &used_re);
    const double y = std::stod(im, &used_im);
    if (used_re != re.size() || used_im != im.size()) return std::nullopt;
    return std::make_pair(x, y);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Certificate tolerance, overridable through HYPBOUND_TOL.
std::optional<double> certificate_tolerance() {
  const char* env = std::getenv("HYPBOUND_TOL");
  if (!env || !*env) return 1e-9;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0.0)) return std::nullopt;
  return tol;
}

hb_status load(const std::string& path, DomainPtr& out) {
  hb_domain* raw = nullptr;
  const hb_status st = hb_domain_load(path.c_str(), &raw);
  out.reset(raw);
  return st;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// -- subcommands ------------------------------------------------------------

int cmd_validate(const std::string& spec_path) {
  DomainPtr dom;
  if (const hb_status st = load(spec_path, dom); st != HB_OK) return report(st);
  hb_validation v{};
  char* text = nullptr;
  if (const hb_status st = hb_validate(dom.get(), &v, &text); st != HB_OK) return report(st);
  const CString guard(text);
  std::cout << text;
  return v.ok ? kExitOk : kExitViolation;
}

int cmd_bounds(const std::string& spec_path, const std::string& z_text, bool csv) {
  const auto z = parse_point(z_text);
  if (!z) {
    std::cerr << "hypbound: --z expects RE,IM\n";
    return kExitIo;
  }
  DomainPtr dom;
  if (const hb_status st = load(spec_path, dom); st != HB_OK) return report(st);
  if (csv) {
    char* text = nullptr;
    if (const hb_status st = hb_bounds_csv(dom.get(), z->first, z->second, &text); st != HB_OK) return report(st);
    const CString guard(text);
    std::cout << text;
    return kExitOk;
  }
  hb_bounds b{};
  if (const hb_status st = hb_compute_bounds(dom.get(), z->first, z->second, &b); st != HB_OK) return report(st);
  std::cout << "z:          " << fmt(z->first) << "," << fmt(z->second) << "\n"
            << "d:          " << fmt(b.d) << "\n"
            << "L:          " << fmt(b.L) << "\n"
            << "witness a:  " << fmt(b.witness_a_re) << "," << fmt(b.witness_a_im) << "\n"
            << "witness s:  " << fmt(b.witness_s) << "\n"
            << "bp_lower:   " << fmt(b.lower) << "\n"
            << "bp_upper:   " << fmt(b.upper) << "\n";
  if (b.has_thm1) {
    std::cout << "thm1_bound: " << fmt(b.thm1_bound) << "\n"
              << "chain_ok:   " << (b.chain_ok ? "true" : "false") << "\n";
  }
  return b.chain_ok ? kExitOk : kExitViolation;
}

int cmd_certify(const std::string& spec_path, const std::string& z_text) {
  const auto z = parse_point(z_text);
  if (!z) {
    std::cerr << "hypbound: --z expects RE,IM\n";
    return kExitIo;
  }
  const auto tol = certificate_tolerance();
  if (!tol) {
    std::cerr << "hypbound: HYPBOUND_TOL must be a positive number\n";
    return kExitIo;
  }
  DomainPtr dom;
  if (const hb_status st = load(spec_path, dom); st != HB_OK) return report(st);
  hb_certificate cert{};
  char* json = nullptr;
  if (const hb_status st = hb_certify(dom.get(), z->first, z->second, *tol, &cert, &json); st != HB_OK)
    return report(st);
  const CString guard(json);
  std::cout << json;
  if (!cert.verified) {
    std::cerr << "hypbound: certificate rejected: " << cert.failure << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& spec_path, std::size_t n, std::uint64_t seed, unsigned threads,
              const std::string& out_path) {
  DomainPtr dom;
  if (const hb_status st = load(spec_path, dom); st != HB_OK) return report(st);
  hb_validation v{};
  char* text = nullptr;
  if (const hb_status st = hb_validate(dom.get(), &v, &text); st != HB_OK) return report(st);
  const CString vguard(text);
  if (!v.ok) {
    std::cerr << text << "hypbound: refusing to sweep a domain that fails validation\n";
    return kExitViolation;
  }
  hb_sweep_summary summary{};
  char* first = nullptr;
  if (const hb_status st = hb_sweep(dom.get(), n, seed, threads, out_path.c_str(), &summary, &first); st != HB_OK)
    return report(st);
  const CString fguard(first);
  std::cout << "rows: " << summary.rows << "\nviolations: " << summary.violations << "\n";
  if (summary.violations > 0) {
    std::cout << "first violating row (" << summary.first_violation << "):\n" << first << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_slit_audit(const std::vector<double>& deltas, const std::string& out_path) {
  hb_slit_summary summary{};
  char* csv = nullptr;
  char* text = nullptr;
  const bool to_file = !out_path.empty();
  const hb_status st = hb_slit_audit(deltas.data(), deltas.size(), to_file ? out_path.c_str() : nullptr, &summary,
                                     to_file ? nullptr : &csv, &text);
  const CString cguard(csv), tguard(text);
  if (st != HB_OK) return report(st);
  if (to_file) {
    std::cout << text;
  } else {
    std::cout << csv;
    std::cerr << text;
  }
  return summary.closed_form_ok ? kExitOk : kExitViolation;
}

int cmd_oracle_check(const std::string& kind, std::size_t n, std::uint64_t seed) {
  const hb_oracle_kind k = kind == "disk" ? HB_ORACLE_DISK : HB_ORACLE_PUNCTURED;
  hb_oracle_summary summary{};
  char* first = nullptr;
  if (const hb_status st = hb_oracle_check(k, n, seed, &summary, &first); st != HB_OK) return report(st);
  const CString guard(first);
  std::cout << "kind: " << kind << "\nchecked: " << summary.checked << "\nfailures: " << summary.failures << "\n";
  if (summary.failures > 0) {
    std::cout << "first failing row:\n" << first << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds for the hyperbolic metric of the unit disk minus an obstacle set"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hb_version()));

  std::string spec_path, z_text, out_path, kind = "punctured";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool csv = false;
  std::vector<double> deltas{0.2, 0.1, 0.01, 0.001};

  auto* validate = app.add_subcommand("validate", "Check the halving hypothesis and print the constants");
  validate->add_option("spec", spec_path, "Domain spec (JSON)")->required();

  auto* bounds = app.add_subcommand("bounds", "Density bounds at one point");
  bounds->add_option("spec", spec_path, "Domain spec (JSON)")->required();
  bounds->add_option("--z", z_text, "Point as RE,IM (use --z=RE,IM for negative RE)")->required();
  bounds->add_flag("--csv", csv, "Print a sweep-format CSV row");

  auto* certify = app.add_subcommand("certify", "Build and verify a lower-bound certificate at one point");
  certify->add_option("spec", spec_path, "Domain spec (JSON)")->required();
  certify->add_option("--z", z_text, "Point as RE,IM")->required();

  auto* sweep = app.add_subcommand("sweep", "Check bp_lower >= c/|z| at random points of G");
  sweep->add_option("spec", spec_path, "Domain spec (JSON)")->required();
  sweep->add_option("--n", n, "Number of sample points")->required();
  sweep->add_option("--seed", seed, "Random seed")->required();
  sweep->add_option("--out", out_path, "Output CSV")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* slit = app.add_subcommand("slit-audit", "Audit the slit disk D \\ [0, delta] at z = 1/2");
  slit->add_option("--deltas", deltas, "Comma-separated deltas in (0, 1/4)")->delimiter(',');
  slit->add_option("--out", out_path, "Output CSV (default: stdout)");

  auto* oracle = app.add_subcommand("oracle-check", "Sandwich closed-form densities between the bounds");
  oracle->add_option("--kind", kind, "disk or punctured")->check(CLI::IsMember({"disk", "punctured"}));
  oracle->add_option("--n", n, "Number of sample points")->required();
  oracle->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitIo;
  }

  if (*validate) return cmd_validate(spec_path);
  if (*bounds) return cmd_bounds(spec_path, z_text, csv);
  if (*certify) return cmd_certify(spec_path, z_text);
  if (*sweep) return cmd_sweep(spec_path, n, seed, threads, out_path);
  if (*slit) return cmd_slit_audit(deltas, out_path);
  if (*oracle) return cmd_oracle_check(kind, n, seed);
  return kExitIo;
}
