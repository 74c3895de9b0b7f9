#include "hypbound/hypbound.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <string>

#include "error.hpp"
#include "harness.hpp"
#include "spec_io.hpp"

struct hb_domain {
  hypbound::DomainSpec spec;
};

namespace {

using namespace hypbound;

thread_local std::string g_last_error;

hb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HB_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return HB_ERR_PARSE;
    case ErrorCode::IoError: return HB_ERR_IO;
    case ErrorCode::NotInDomain: return HB_ERR_NOT_IN_DOMAIN;
    case ErrorCode::NotOnBoundary: return HB_ERR_NOT_ON_BOUNDARY;
    case ErrorCode::EmptySet: return HB_ERR_EMPTY_SET;
    case ErrorCode::HypothesisViolated: return HB_ERR_HYPOTHESIS;
    case ErrorCode::TruncationExceeded: return HB_ERR_TRUNCATION;
    case ErrorCode::MalformedPath: return HB_ERR_MALFORMED_PATH;
    case ErrorCode::ZeroArgument: return HB_ERR_ZERO_ARGUMENT;
    case ErrorCode::OutOfDomain: return HB_ERR_OUT_OF_DOMAIN;
    case ErrorCode::RejectionStarvation: return HB_ERR_STARVATION;
    case ErrorCode::BadDelta: return HB_ERR_BAD_DELTA;
  }
  return HB_ERR_INTERNAL;
}

hb_status fail(hb_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
hb_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error.clear();
    fn();
    return HB_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HB_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

void emit(char** dst, const std::string& s) {
  if (!dst) return;
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *dst = buf;
}

void write_file(const char* path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, std::string("cannot write ") + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, std::string("write failed: ") + path);
}

hb_case to_c(ProofCase c) {
  switch (c) {
    case ProofCase::CircleNearest: return HB_CASE_CIRCLE_NEAREST;
    case ProofCase::FarFromE: return HB_CASE_FAR_FROM_E;
    case ProofCase::MidRange: return HB_CASE_MID_RANGE;
    case ProofCase::DeepSmallGap: return HB_CASE_DEEP_SMALL_GAP;
    case ProofCase::DeepComparable: return HB_CASE_DEEP_COMPARABLE;
  }
  return HB_CASE_CIRCLE_NEAREST;
}

OracleKind to_kind(hb_oracle_kind k) {
  switch (k) {
    case HB_ORACLE_DISK: return OracleKind::UnitDisk;
    case HB_ORACLE_PUNCTURED: return OracleKind::PuncturedDisk;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown oracle kind");
}

std::optional<HalvingConstants> constants_if_valid(const DomainSpec& spec) {
  if (!spec.sequence() || !check_halving(*spec.sequence()).ok) return std::nullopt;
  return constants(*spec.sequence());
}

double effective_tol(double tol) { return tol > 0.0 ? tol : kCertificateTolerance; }

}  // namespace

extern "C" {

const char* hb_version(void) { return "0.1.0"; }

const char* hb_status_name(hb_status status) {
  switch (status) {
    case HB_OK: return "ok";
    case HB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HB_ERR_PARSE: return "parse error";
    case HB_ERR_IO: return "i/o error";
    case HB_ERR_NOT_IN_DOMAIN: return "point not in domain";
    case HB_ERR_NOT_ON_BOUNDARY: return "point not on boundary";
    case HB_ERR_EMPTY_SET: return "empty distance set";
    case HB_ERR_HYPOTHESIS: return "hypothesis violated";
    case HB_ERR_TRUNCATION: return "sequence truncation exceeded";
    case HB_ERR_MALFORMED_PATH: return "malformed path";
    case HB_ERR_ZERO_ARGUMENT: return "zero argument";
    case HB_ERR_OUT_OF_DOMAIN: return "out of domain";
    case HB_ERR_STARVATION: return "rejection sampling starved";
    case HB_ERR_BAD_DELTA: return "bad delta";
    case HB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hb_last_error(void) { return g_last_error.c_str(); }

void hb_string_free(char* s) { std::free(s); }

double hb_kappa(void) { return kappa(); }

hb_status hb_domain_load(const char* path, hb_domain** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hb_domain{load_domain_file(path)};
  });
}

hb_status hb_domain_parse(const char* json, hb_domain** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new hb_domain{parse_domain_json(json)};
  });
}

hb_status hb_domain_oracle(hb_oracle_kind kind, hb_domain** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hb_domain{oracle_domain(to_kind(kind))};
  });
}

void hb_domain_free(hb_domain* domain) { delete domain; }

hb_status hb_contains(const hb_domain* domain, double re, double im, hb_membership* out) {
  return guarded([&] {
    require(domain, "domain");
    require(out, "out");
    switch (contains(domain->spec, {re, im})) {
      case Membership::InG: *out = HB_IN_G; break;
      case Membership::InE: *out = HB_IN_E; break;
      case Membership::OnUnitCircleOrOutside: *out = HB_OUTSIDE; break;
    }
  });
}

hb_status hb_validate(const hb_domain* domain, hb_validation* out, char** report) {
  return guarded([&] {
    require(domain, "domain");
    require(out, "out");
    const ValidationReport rep = validate_domain(domain->spec);
    *out = hb_validation{};
    out->ok = rep.ok() ? 1 : 0;
    out->first_violation = rep.halving.first_violation ? static_cast<long long>(*rep.halving.first_violation) : -1;
    if (rep.constants) {
      out->delta = rep.constants->delta;
      out->c = rep.constants->c;
      out->branch_log4delta = rep.constants->branch_log4delta;
      out->branch_5log2 = rep.constants->branch_5log2;
      out->c_circle = rep.constants->c_circle;
      out->c_deep_cap = rep.constants->c_deep_cap;
    }
    out->warning_count = rep.warnings.size();
    emit(report, format_validation(rep));
  });
}

hb_status hb_compute_bounds(const hb_domain* domain, double re, double im, hb_bounds* out) {
  return guarded([&] {
    require(domain, "domain");
    require(out, "out");
    const Complex z{re, im};
    const BPBounds bp = bp_bounds(domain->spec, z);
    *out = hb_bounds{};
    out->d = bp.d;
    out->L = bp.L;
    out->lower = bp.lower;
    out->upper = bp.upper;
    out->witness_a_re = bp.witness_a.real();
    out->witness_a_im = bp.witness_a.imag();
    out->witness_s = bp.witness_s;
    out->chain_ok = 1;
    if (const auto k = constants_if_valid(domain->spec)) {
      out->has_thm1 = 1;
      out->thm1_bound = lower_bound(*k, z);
      out->chain_ok = bp.lower >= out->thm1_bound ? 1 : 0;
    } else {
      out->thm1_bound = std::numeric_limits<double>::quiet_NaN();
    }
  });
}

hb_status hb_bounds_csv(const hb_domain* domain, double re, double im, char** csv) {
  return guarded([&] {
    require(domain, "domain");
    require(csv, "csv");
    const auto k = constants_if_valid(domain->spec);
    const SweepRow row = compute_row(domain->spec, k ? &*k : nullptr, {re, im});
    emit(csv, std::string(kSweepCsvHeader) + "\n" + format_csv_row(row) + "\n");
  });
}

hb_status hb_certify(const hb_domain* domain, double re, double im, double tol, hb_certificate* out, char** json) {
  return guarded([&] {
    require(domain, "domain");
    require(out, "out");
    const DomainSpec& spec = domain->spec;
    if (!spec.sequence()) throw Error(ErrorCode::HypothesisViolated, "domain has no halving sequence");
    const HalvingConstants k = constants(*spec.sequence());
    const Certificate cert = build_certificate(spec, k, {re, im});
    const auto failure = certificate_failure(spec, k, cert, effective_tol(tol));
    *out = hb_certificate{};
    out->case_tag = to_c(cert.case_tag);
    out->z_re = cert.z.real();
    out->z_im = cert.z.imag();
    out->zeta_re = cert.zeta.real();
    out->zeta_im = cert.zeta.imag();
    out->b_re = cert.b.real();
    out->b_im = cert.b.imag();
    out->log_ratio = cert.log_ratio;
    out->case_log_cap = cert.case_log_cap;
    out->implied_lower = cert.implied_lower;
    out->c = k.c;
    out->verified = failure ? 0 : 1;
    if (failure) std::snprintf(out->failure, sizeof out->failure, "%s", failure->c_str());
    emit(json, certificate_to_json(cert, k.c).dump(2) + "\n");
  });
}

hb_status hb_verify_certificate_json(const hb_domain* domain, const char* json, double tol, int* verified,
                                     char** failure) {
  return guarded([&] {
    require(domain, "domain");
    require(json, "json");
    require(verified, "verified");
    const DomainSpec& spec = domain->spec;
    if (!spec.sequence()) throw Error(ErrorCode::HypothesisViolated, "domain has no halving sequence");
    const HalvingConstants k = constants(*spec.sequence());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    const auto why = certificate_failure(spec, k, certificate_from_json(j), effective_tol(tol));
    *verified = why ? 0 : 1;
    emit(failure, why.value_or(""));
  });
}

hb_status hb_sweep(const hb_domain* domain, size_t n, uint64_t seed, unsigned threads, const char* out_path,
                   hb_sweep_summary* out, char** first_violation_row) {
  return guarded([&] {
    require(domain, "domain");
    require(out_path, "out_path");
    require(out, "out");
    const std::vector<SweepRow> rows = sweep(domain->spec, SweepOptions{n, seed, threads});
    write_file(out_path, sweep_csv(rows));
    *out = hb_sweep_summary{rows.size(), 0, -1};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].chain_ok) continue;
      if (out->violations++ == 0) {
        out->first_violation = static_cast<long long>(i);
        emit(first_violation_row, format_csv_row(rows[i]));
      }
    }
  });
}

hb_status hb_slit_audit(const double* deltas, size_t n, const char* out_path, hb_slit_summary* out, char** csv,
                        char** report) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(deltas, "deltas");
    const SlitAuditSummary summary = slit_audit(std::vector<double>(deltas, deltas + n));
    const std::string text = slit_csv(summary);
    if (out_path) write_file(out_path, text);
    *out = hb_slit_summary{summary.rows.size(), summary.sup_product_paper, summary.sup_product_literal,
                           summary.closed_form_ok ? 1 : 0};
    emit(csv, text);
    emit(report, format_slit_report(summary));
  });
}

hb_status hb_oracle_check(hb_oracle_kind kind, size_t n, uint64_t seed, hb_oracle_summary* out,
                          char** first_failure_row) {
  return guarded([&] {
    require(out, "out");
    const OracleCheckResult res = oracle_check(to_kind(kind), n, seed);
    *out = hb_oracle_summary{res.checked, res.failures};
    if (res.first_failure) emit(first_failure_row, format_csv_row(*res.first_failure));
  });
}

}  // extern "C"
