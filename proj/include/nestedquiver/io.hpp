#pragma once

// JSON forms of every data type. Rationals are strings "p/q" (or "p");
// matrices are {rows, cols, entries} with row-major entries.
// Malformed input throws Error(ParseError).

#include "json.hpp"

#include "nestedquiver/correspondence.hpp"
#include "nestedquiver/monad.hpp"

namespace nq {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Matrix& m);
Json to_json(const NuPoint& nu);
Json to_json(const HirzRep& x);
Json to_json(const EnhRep& x);
Json to_json(const AdhmData& a);
Json to_json(const NestedAdhmData& d);
/// {c, d, basis, generators}; generators are the basis rows as text.
Json to_json(const ZeroCycleIdeal& i);
Json to_json(const NestedIdealPair& p);
Json to_json(const StabilityVerdict& v);
Json to_json(const EnhThetaParam& p);
/// List of {exponents, coeff}.
Json to_json(const CoxPoly& f);
Json to_json(const CoxMatrix& m);

Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
NuPoint nu_from_json(const Json& j);
/// {n, c0, c1 | c, matrices}.
HirzRep hirz_from_json(const Json& j);
/// {n, c, cp, matrices}.
EnhRep enh_from_json(const Json& j);
AdhmData adhm_from_json(const Json& j);
/// Either {d, basis} or {generators: ["y", "x^2", ...]}.
ZeroCycleIdeal ideal_from_json(const Json& j);
NestedIdealPair pair_from_json(const Json& j);
EnhThetaParam theta_from_json(const Json& j);

/// Throws Error(ParseError) with the parser message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace nq
