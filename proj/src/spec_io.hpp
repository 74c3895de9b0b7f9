#pragma once

// JSON domain specs and certificate serialization.
//
// Domain spec:
//   {"primitives": [{"type":"point","x":..,"y":..},
//                   {"type":"segment","x1":..,"y1":..,"x2":..,"y2":..},
//                   {"type":"disk","cx":..,"cy":..,"r":..}],
//    "sequence": {"type":"geometric","delta":..,"ratio":..,"count":..}
//              | {"type":"explicit","points":[[x,y], ...]}}
//
// The unit circle and the origin are implicit. "sequence" may be omitted,
// which describes a domain without the halving hypothesis (e.g. the punctured
// disk when "primitives" is empty too).

#include <string>
#include <string_view>

#include <json.hpp>

#include "domain.hpp"
#include "halving.hpp"

namespace hypbound {

/// Throws Error(ParseError) on malformed JSON, schema or geometry.
DomainSpec parse_domain_json(std::string_view text);

/// Throws Error(IoError) if the file cannot be read, else as parse_domain_json.
DomainSpec load_domain_file(const std::string& path);

nlohmann::json domain_to_json(const DomainSpec& spec);

/// {case, z, zeta, b, log_ratio, case_log_cap, implied_lower, c}; points as [x, y].
nlohmann::json certificate_to_json(const Certificate& cert, double c);

/// Inverse of certificate_to_json (the "c" field is ignored). Throws
/// Error(ParseError).
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace hypbound
