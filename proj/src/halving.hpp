#pragma once

// Lower bound lambda_G(z) >= c / |z| for domains whose obstacle set contains a
// halving sequence |a_{n+1}| >= |a_n| / 2 tending to 0, with the explicit
// constant
//
//   c = min{ 1 / (2 sqrt2 (kappa + ln(4/delta))), 1 / (2 sqrt2 (kappa + 5 ln 2)) },
//   delta = max |a_n|,
//
// and a certificate builder that, for a given z, produces the nearest point
// zeta and a second boundary point b whose gap |zeta - b| makes the
// Beardon-Pommerenke lower bound at least c / |z|.

#include <cstddef>
#include <optional>
#include <string>

#include "domain.hpp"

namespace hypbound {

struct HalvingReport {
  bool ok = true;
  std::optional<std::size_t> first_violation;
  std::string reason;
};

/// Nonzero, pairwise distinct points with |a_{n+1}| >= |a_n| / 2 whose
/// magnitudes decrease overall. first_violation is the index of the first
/// offending point (for the halving condition: the index n of the pair n, n+1).
HalvingReport check_halving(const SequenceSpec& seq);

struct HalvingConstants {
  double delta = 0.0;
  double c = 0.0;
  double branch_log4delta = 0.0;
  double branch_5log2 = 0.0;
  /// Constant sufficient when the nearest boundary point is on the unit circle.
  double c_circle = 0.0;
  /// Largest constant allowed by the small-gap case near the origin.
  double c_deep_cap = 0.0;
};

/// Throws Error(HypothesisViolated) if check_halving fails.
HalvingConstants constants(const SequenceSpec& seq);

/// Constants for a given delta in (0, 1), without a sequence.
HalvingConstants constants_for_delta(double delta);

/// Smallest index k with 2^-(n+1) delta < |a_k| <= 2^-n delta. Throws
/// Error(TruncationExceeded) if the resolved (finite) sequence has no such
/// point.
std::size_t dyadic_witness(const SequenceSpec& seq, int n);

/// c / |z|. Throws Error(ZeroArgument) for z == 0.
double lower_bound(const HalvingConstants& k, Complex z);

enum class ProofCase { CircleNearest, FarFromE, MidRange, DeepSmallGap, DeepComparable };

const char* to_string(ProofCase c) noexcept;
std::optional<ProofCase> proof_case_from_string(const std::string& s) noexcept;

struct Certificate {
  ProofCase case_tag = ProofCase::CircleNearest;
  Complex z;
  Complex zeta;
  Complex b;
  /// |ln(|z - zeta| / |zeta - b|)|
  double log_ratio = 0.0;
  double case_log_cap = 0.0;
  /// 1 / (2 sqrt2 |z - zeta| (kappa + log_ratio))
  double implied_lower = 0.0;
};

/// Cap on log_ratio proven for the case, as a function of the configuration.
double case_log_cap(ProofCase c, double delta, Complex z, Complex zeta);

inline constexpr double kCertificateTolerance = 1e-9;

/// Throws Error(NotInDomain), Error(HypothesisViolated) when the domain has no
/// sequence, or Error(TruncationExceeded) when z is below the scale the
/// truncated sequence can witness.
Certificate build_certificate(const DomainSpec& spec, const HalvingConstants& k, Complex z);

/// Independent re-check of every certificate invariant. Returns the first
/// failed check, or nullopt when the certificate is valid.
std::optional<std::string> certificate_failure(const DomainSpec& spec, const HalvingConstants& k,
                                               const Certificate& cert,
                                               double tol = kCertificateTolerance);

bool verify_certificate(const DomainSpec& spec, const HalvingConstants& k, const Certificate& cert,
                        double tol = kCertificateTolerance);

}  // namespace hypbound
