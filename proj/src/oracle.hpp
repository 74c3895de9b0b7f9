#pragma once

// Closed-form densities used as ground truth, normalized so that the unit
// disk has density 1 / (1 - |z|^2).

#include "domain.hpp"

namespace hypbound {

enum class OracleKind { UnitDisk, PuncturedDisk };

/// 1 / (1 - |z|^2). Throws Error(OutOfDomain) unless |z| < 1.
double disk_density(Complex z);

/// 1 / (2 |z| ln(1/|z|)). Throws Error(OutOfDomain) unless 0 < |z| < 1.
double punctured_disk_density(Complex z);

double oracle_density(OracleKind kind, Complex z);

/// The domain whose density the oracle gives.
DomainSpec oracle_domain(OracleKind kind);

}  // namespace hypbound
