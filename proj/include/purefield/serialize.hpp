#pragma once

// JSON and human-readable renderings. JSON objects use sorted keys and
// no floating point, so dumps are canonical; integers beyond int64 are
// written as decimal strings.

#include <string>

#include <json.hpp>

#include "purefield/newton.hpp"
#include "purefield/oracle.hpp"
#include "purefield/periodicity.hpp"
#include "purefield/purebasis.hpp"

namespace purefield::serialize {

using Json = nlohmann::json;

Json integer_json(const Integer& a);

Json basis_json(const IntegralBasis& basis, const IndexReport& report);
Json index_json(const PureField& field, const IndexReport& report);
Json polygon_json(const newton::IndexBound& bound, const QPolynomial& f, std::uint64_t p);
Json atlas_json(const periodicity::PeriodAtlas& atlas);
Json certification_json(const oracle::CertificationReport& report);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

std::string basis_pretty(const IntegralBasis& basis, const IndexReport& report);
std::string index_pretty(const PureField& field, const IndexReport& report);
std::string polygon_pretty(const newton::IndexBound& bound, const QPolynomial& f, std::uint64_t p);
std::string certification_pretty(const oracle::CertificationReport& report);

}  // namespace purefield::serialize
