#include "oracle.hpp"

#include <cmath>

#include "error.hpp"

namespace hypbound {

double disk_density(Complex z) {
  const double m = std::abs(z);
  if (!(m < 1.0)) throw Error(ErrorCode::OutOfDomain, "disk density needs |z| < 1");
  return 1.0 / ((1.0 - m) * (1.0 + m));
}

double punctured_disk_density(Complex z) {
  const double m = std::abs(z);
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorCode::OutOfDomain, "punctured disk density needs 0 < |z| < 1");
  return 1.0 / (2.0 * m * -std::log(m));
}

double oracle_density(OracleKind kind, Complex z) {
  return kind == OracleKind::UnitDisk ? disk_density(z) : punctured_disk_density(z);
}

DomainSpec oracle_domain(OracleKind kind) {
  return kind == OracleKind::UnitDisk ? DomainSpec::unit_disk() : DomainSpec::punctured_disk();
}

}  // namespace hypbound
