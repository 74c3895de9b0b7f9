#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "error.hpp"

namespace hypbound {

namespace {

constexpr double kClearanceWarning = 1e-6;
constexpr double kTruncationWarning = 1e-10;
constexpr std::size_t kPilotTrials = 100000;
constexpr std::size_t kMaxTrialsPerPoint = 10000000;

double cross(Complex a, Complex b) { return (std::conj(a) * b).imag(); }

bool segments_intersect(const Segment& s, const Segment& t) {
  const double d1 = cross(t.q - t.p, s.p - t.p);
  const double d2 = cross(t.q - t.p, s.q - t.p);
  const double d3 = cross(s.q - s.p, t.p - s.p);
  const double d4 = cross(s.q - s.p, t.q - s.p);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

double segment_segment_distance(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t)) return 0.0;
  return std::min({boundary_distance(t, s.p), boundary_distance(t, s.q), boundary_distance(s, t.p),
                   boundary_distance(s, t.q)});
}

// Gap between two non-point obstacles viewed as closed sets.
double clearance(const Primitive& a, const Primitive& b) {
  if (const auto* s = std::get_if<Segment>(&a)) {
    if (const auto* t = std::get_if<Segment>(&b)) return segment_segment_distance(*s, *t);
    const auto& d = std::get<ObstacleDisk>(b);
    return std::max(0.0, boundary_distance(*s, d.center) - d.radius);
  }
  const auto& d = std::get<ObstacleDisk>(a);
  if (const auto* t = std::get_if<Segment>(&b)) return std::max(0.0, boundary_distance(*t, d.center) - d.radius);
  const auto& e = std::get<ObstacleDisk>(b);
  return std::max(0.0, std::abs(d.center - e.center) - d.radius - e.radius);
}

double clearance_to_circle(const Primitive& a) {
  if (const auto* s = std::get_if<Segment>(&a)) return 1.0 - std::max(std::abs(s->p), std::abs(s->q));
  const auto& d = std::get<ObstacleDisk>(a);
  return 1.0 - std::abs(d.center) - d.radius;
}

std::string fmt(double x) { return format_double(x); }

}  // namespace

// ---------------------------------------------------------------------------

ValidationReport validate_domain(const DomainSpec& spec) {
  ValidationReport rep;
  if (!spec.sequence()) {
    rep.halving.ok = false;
    rep.halving.reason = "domain has no halving sequence";
  } else {
    rep.halving = check_halving(*spec.sequence());
    if (rep.halving.ok) rep.constants = constants(*spec.sequence());
    const double last = std::abs(spec.sequence()->points().back());
    if (last > kTruncationWarning)
      rep.warnings.push_back("sequence is truncated at |a| = " + fmt(last) + " > 1e-10; sweeps skip |z| < " +
                             fmt(10.0 * spec.sequence()->truncation_floor()));
  }

  // G can only be disconnected by segments and disks touching each other or
  // the unit circle.
  const auto prims = spec.primitives();
  std::vector<std::size_t> solid;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    if (std::holds_alternative<Segment>(prims[i]) || std::holds_alternative<ObstacleDisk>(prims[i]))
      solid.push_back(i);
  }
  for (std::size_t a = 0; a < solid.size(); ++a) {
    const double gap = clearance_to_circle(prims[solid[a]]);
    if (gap < kClearanceWarning)
      rep.warnings.push_back("primitive " + std::to_string(solid[a]) + " (" + primitive_name(prims[solid[a]]) +
                             ") is within " + fmt(gap) + " of the unit circle; G may be disconnected");
    for (std::size_t b = a + 1; b < solid.size(); ++b) {
      const double g = clearance(prims[solid[a]], prims[solid[b]]);
      if (g < kClearanceWarning)
        rep.warnings.push_back("primitives " + std::to_string(solid[a]) + " and " + std::to_string(solid[b]) +
                               " have clearance " + fmt(g) + "; G may be disconnected");
    }
  }

  for (std::size_t i = 0; i < prims.size(); ++i) {
    for (std::size_t j = 0; j < prims.size(); ++j) {
      const auto* disk = std::get_if<ObstacleDisk>(&prims[j]);
      if (!disk || i == j) continue;
      const Primitive& p = prims[i];
      bool hidden = false;
      if (const auto* s = std::get_if<SinglePoint>(&p)) hidden = std::abs(s->p - disk->center) < disk->radius;
      if (const auto* s = std::get_if<Segment>(&p))
        hidden = std::max(std::abs(s->p - disk->center), std::abs(s->q - disk->center)) < disk->radius;
      if (hidden)
        rep.warnings.push_back("primitive " + std::to_string(i) + " lies inside obstacle disk " + std::to_string(j) +
                               " and is not part of the boundary of G");
    }
  }
  return rep;
}

std::string format_validation(const ValidationReport& rep) {
  std::ostringstream out;
  if (rep.halving.ok) {
    out << "halving: ok\n";
  } else {
    out << "halving: FAILED";
    if (rep.halving.first_violation) out << " at index " << *rep.halving.first_violation;
    out << ": " << rep.halving.reason << "\n";
  }
  if (rep.constants) {
    const HalvingConstants& k = *rep.constants;
    out << "delta: " << fmt(k.delta) << "\n"
        << "c: " << fmt(k.c) << "\n"
        << "branch_log4delta: " << fmt(k.branch_log4delta) << "\n"
        << "branch_5log2: " << fmt(k.branch_5log2) << "\n"
        << "c_circle: " << fmt(k.c_circle) << "\n"
        << "c_deep_cap: " << fmt(k.c_deep_cap) << "\n";
  }
  for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

SweepRow compute_row(const DomainSpec& spec, const HalvingConstants* k, Complex z, std::optional<OracleKind> oracle) {
  const BPBounds bp = bp_bounds(spec, z);
  SweepRow row;
  row.z = z;
  row.abs_z = std::abs(z);
  row.d = bp.d;
  row.L = bp.L;
  row.bp_lower = bp.lower;
  row.bp_upper = bp.upper;
  if (k) {
    row.thm1_bound = lower_bound(*k, z);
    try {
      row.case_tag = build_certificate(spec, *k, z).case_tag;
    } catch (const Error& e) {
      // Below the truncation scale of the sequence there is no certificate;
      // the row keeps its bounds and leaves the case empty.
      if (e.code() != ErrorCode::TruncationExceeded) throw;
    }
    row.chain_ok = row.bp_lower >= *row.thm1_bound;
  }
  if (oracle) row.oracle = oracle_density(*oracle, z);
  return row;
}

std::string format_double(double x) {
  if (std::isnan(x)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_csv_row(const SweepRow& row) {
  std::string out;
  out += fmt(row.z.real()) + ',' + fmt(row.z.imag()) + ',' + fmt(row.abs_z) + ',' + fmt(row.d) + ',' + fmt(row.L) +
         ',' + fmt(row.bp_lower) + ',' + fmt(row.bp_upper) + ',';
  if (row.thm1_bound) out += fmt(*row.thm1_bound);
  out += ',';
  if (row.oracle) out += fmt(*row.oracle);
  out += ',';
  if (row.case_tag) out += to_string(*row.case_tag);
  out += ',';
  out += row.chain_ok ? "true" : "false";
  return out;
}

PointSampler::PointSampler(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  gen_.seed(seq);
}

double PointSampler::unit() {
  // 53 random bits -> [0, 1); avoids the implementation-defined
  // std::uniform_real_distribution so that samples are portable.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

Complex PointSampler::next() {
  const double x = 2.0 * unit() - 1.0;
  const double y = 2.0 * unit() - 1.0;
  return {x, y};
}

namespace {

bool acceptable(const DomainSpec& spec, double guard, Complex z) {
  return std::abs(z) >= guard && contains(spec, z) == Membership::InG;
}

}  // namespace

Complex sample_in_domain(const DomainSpec& spec, double guard, std::uint64_t seed, std::uint64_t index) {
  PointSampler sampler(seed, index);
  for (std::size_t t = 0; t < kMaxTrialsPerPoint; ++t) {
    const Complex z = sampler.next();
    if (acceptable(spec, guard, z)) return z;
  }
  throw Error(ErrorCode::RejectionStarvation, "no sample point found in G");
}

double sweep_guard(const DomainSpec& spec) {
  return spec.sequence() ? 10.0 * spec.sequence()->truncation_floor() : 0.0;
}

std::vector<SweepRow> sweep(const DomainSpec& spec, const SweepOptions& opts) {
  const ValidationReport rep = validate_domain(spec);
  if (!rep.ok()) throw Error(ErrorCode::HypothesisViolated, rep.halving.reason);
  const HalvingConstants k = *rep.constants;
  const double guard = sweep_guard(spec);
  std::vector<SweepRow> rows(opts.n);
  if (opts.n == 0) return rows;

  {
    PointSampler pilot(opts.seed, std::numeric_limits<std::uint64_t>::max());
    std::size_t accepted = 0;
    for (std::size_t t = 0; t < kPilotTrials; ++t) accepted += acceptable(spec, guard, pilot.next()) ? 1 : 0;
    if (accepted * 100 < kPilotTrials)
      throw Error(ErrorCode::RejectionStarvation, "fewer than 1% of trial points land in G");
  }

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, opts.n));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](unsigned tid) {
    try {
      for (std::size_t i = tid; i < opts.n; i += threads)
        rows[i] = compute_row(spec, &k, sample_in_domain(spec, guard, opts.seed, i));
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepRow& row : rows) {
    out += format_csv_row(row);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

DomainSpec slit_domain(double delta) {
  if (!(delta > 0.0 && delta < 0.25)) throw Error(ErrorCode::BadDelta, "slit audit needs delta in (0, 1/4)");
  return DomainSpec({Segment{{0.0, 0.0}, {delta, 0.0}}}, SequenceSpec::geometric(delta, 0.5, 60));
}

double slit_L_closed_form(double delta) {
  return std::min(std::log((0.5 - delta) / delta), std::log((1.0 - delta) / (0.5 - delta)));
}

SlitAuditRow slit_audit_row(double delta) {
  const DomainSpec spec = slit_domain(delta);
  const BPBounds bp = compute_L(spec, {0.5, 0.0});
  const double kap = kappa();
  const double top = kap + std::numbers::pi / 4.0;
  SlitAuditRow row;
  row.delta = delta;
  row.d = bp.d;
  row.L_paper = std::log((0.5 - delta) / delta);
  row.L_literal = bp.L;
  row.bp_upper_paper = bp_upper(row.d, row.L_paper);
  row.bp_upper_literal = bp_upper(row.d, row.L_literal);
  row.c_ceiling_paper = top / ((1.0 - 2.0 * delta) * (kap + row.L_paper));
  row.c_ceiling_literal = top / ((1.0 - 2.0 * delta) * (kap + row.L_literal));
  return row;
}

SlitAuditSummary slit_audit(const std::vector<double>& deltas) {
  SlitAuditSummary out;
  for (double delta : deltas) {
    const SlitAuditRow row = slit_audit_row(delta);
    const double log_inv = std::log(1.0 / delta);
    out.sup_product_paper = std::max(out.sup_product_paper, row.c_ceiling_paper * log_inv);
    out.sup_product_literal = std::max(out.sup_product_literal, row.c_ceiling_literal * log_inv);
    if (!(std::abs(row.L_literal - slit_L_closed_form(delta)) <= 1e-9)) out.closed_form_ok = false;
    out.rows.push_back(row);
  }
  return out;
}

std::string slit_csv(const SlitAuditSummary& summary) {
  std::string out(kSlitCsvHeader);
  out += '\n';
  for (const SlitAuditRow& r : summary.rows) {
    out += fmt(r.delta) + ',' + fmt(r.d) + ',' + fmt(r.L_paper) + ',' + fmt(r.L_literal) + ',' +
           fmt(r.bp_upper_paper) + ',' + fmt(r.bp_upper_literal) + ',' + fmt(r.c_ceiling_paper) + ',' +
           fmt(r.c_ceiling_literal) + '\n';
  }
  return out;
}

std::string format_slit_report(const SlitAuditSummary& summary) {
  std::ostringstream out;
  out << "slit disk D \\ [0, delta] at z = 1/2\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-12s %-12s %-12s %-14s %-14s\n", "delta", "L_paper", "L_literal",
                "L_gap", "c_ceil_paper", "c_ceil_literal");
  out << line;
  for (const SlitAuditRow& r : summary.rows) {
    std::snprintf(line, sizeof line, "%-10.4g %-12.6f %-12.6f %-12.3g %-14.6f %-14.6f\n", r.delta, r.L_paper,
                  r.L_literal, r.L_paper - r.L_literal, r.c_ceiling_paper, r.c_ceiling_literal);
    out << line;
  }
  out << "sup c_ceiling * ln(1/delta), paper L:   " << fmt(summary.sup_product_paper) << "\n"
      << "sup c_ceiling * ln(1/delta), literal L: " << fmt(summary.sup_product_literal) << "\n"
      << "literal L matches min(ln((1/2-d)/d), ln((1-d)/(1/2-d))): " << (summary.closed_form_ok ? "yes" : "NO")
      << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

OracleCheckResult oracle_check(OracleKind kind, std::size_t n, std::uint64_t seed) {
  const DomainSpec spec = oracle_domain(kind);
  OracleCheckResult out;
  for (std::size_t i = 0; i < n; ++i) {
    const SweepRow row = compute_row(spec, nullptr, sample_in_domain(spec, 0.0, seed, i), kind);
    ++out.checked;
    if (!(row.bp_lower <= *row.oracle && *row.oracle <= row.bp_upper)) {
      ++out.failures;
      if (!out.first_failure) out.first_failure = row;
    }
  }
  return out;
}

}  // namespace hypbound
