#pragma once

// Batch drivers behind the command line: hypothesis validation, seeded
// sweeps over G, oracle sandwich checks and the slit-disk audit.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bp_metric.hpp"
#include "domain.hpp"
#include "halving.hpp"
#include "oracle.hpp"

namespace hypbound {

struct ValidationReport {
  HalvingReport halving;
  std::optional<HalvingConstants> constants;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return constants.has_value(); }
};

/// Checks the halving hypothesis and collects heuristic warnings (near-touching
/// obstacles, coarse truncation, points hidden inside obstacle disks).
ValidationReport validate_domain(const DomainSpec& spec);

std::string format_validation(const ValidationReport& report);

struct SweepRow {
  Complex z;
  double abs_z = 0.0;
  double d = 0.0;
  double L = 0.0;
  double bp_lower = 0.0;
  double bp_upper = 0.0;
  std::optional<double> thm1_bound;
  std::optional<double> oracle;
  std::optional<ProofCase> case_tag;
  bool chain_ok = true;
};

inline constexpr std::string_view kSweepCsvHeader =
    "z_re,z_im,abs_z,d,L,bp_lower,bp_upper,thm1_bound,oracle,case,chain_ok";

/// One row at z. With constants, fills thm1_bound and the certificate case;
/// chain_ok is bp_lower >= thm1_bound (vacuously true without constants).
SweepRow compute_row(const DomainSpec& spec, const HalvingConstants* k, Complex z,
                     std::optional<OracleKind> oracle = std::nullopt);

/// %.17g, empty for NaN.
std::string format_double(double x);
std::string format_csv_row(const SweepRow& row);

/// Uniform points of [-1, 1)^2 from a generator seeded by (seed, index), so
/// that each sample point is independent of the schedule that produces it.
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, std::uint64_t index);
  Complex next();

 private:
  double unit();

  std::mt19937_64 gen_;
};

/// Rejection-samples z in G with |z| >= guard. Deterministic in (seed, index).
Complex sample_in_domain(const DomainSpec& spec, double guard, std::uint64_t seed, std::uint64_t index);

struct SweepOptions {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Guard radius 10 x truncation floor below which sweeps do not sample.
double sweep_guard(const DomainSpec& spec);

/// Rows in index order; identical for any thread count. Throws
/// Error(HypothesisViolated) on an invalid domain and
/// Error(RejectionStarvation) if fewer than 1% of 1e5 trial points land in G.
std::vector<SweepRow> sweep(const DomainSpec& spec, const SweepOptions& opts);

std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SlitAuditRow {
  double delta = 0.0;
  double d = 0.0;
  double L_paper = 0.0;
  double L_literal = 0.0;
  double bp_upper_paper = 0.0;
  double bp_upper_literal = 0.0;
  double c_ceiling_paper = 0.0;
  double c_ceiling_literal = 0.0;
};

/// D minus the segment [0, delta] (with the halving points delta 2^-n on it),
/// evaluated at z = 1/2. Throws Error(BadDelta) unless 0 < delta < 1/4.
SlitAuditRow slit_audit_row(double delta);

/// The domain used by slit_audit_row.
DomainSpec slit_domain(double delta);

/// min(ln((1/2 - delta)/delta), ln((1 - delta)/(1/2 - delta))).
double slit_L_closed_form(double delta);

struct SlitAuditSummary {
  std::vector<SlitAuditRow> rows;
  double sup_product_paper = 0.0;    // sup of c_ceiling_paper * ln(1/delta)
  double sup_product_literal = 0.0;  // sup of c_ceiling_literal * ln(1/delta)
  bool closed_form_ok = true;        // L_literal matches slit_L_closed_form to 1e-9
};

SlitAuditSummary slit_audit(const std::vector<double>& deltas);

inline constexpr std::string_view kSlitCsvHeader =
    "delta,d,L_paper,L_literal,bp_upper_paper,bp_upper_literal,c_ceiling_paper,c_ceiling_literal";

std::string slit_csv(const SlitAuditSummary& summary);
std::string format_slit_report(const SlitAuditSummary& summary);

struct OracleCheckResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<SweepRow> first_failure;
};

OracleCheckResult oracle_check(OracleKind kind, std::size_t n, std::uint64_t seed);

}  // namespace hypbound
