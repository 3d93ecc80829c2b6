#pragma once

#include <string>

#include "json.hpp"
#include "qpade/classical.hpp"
#include "qpade/qpade.hpp"

namespace qpade::json_io {

using nlohmann::json;

// Rational functions are {"num": [...], "den": [...]}, integer strings ascending
// in q, in canonical reduced form. Zero is {"num": [], "den": ["1"]}.
json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j);

/// Coefficients ascending in the variable; pad > 0 extends with zeros.
json to_json(const QPoly& p, std::size_t pad = 0);
QPoly qpoly_from_json(const json& j, Variable var);

json to_json(const RatPoly& p, std::size_t pad = 0);
json to_json(const BigRat& x);

json to_json(const PadeProblem& p);
PadeProblem problem_from_json(const json& j);

/// problem, Pi, table (indexed [j-1][t]), P ([j-1], each padded to n+1), P0, P0bar.
json to_json(const PadeSolution& s);
PadeSolution solution_from_json(const json& j);

json to_json(const ClassicalSolution& s);

/// Two-space indented serialization; object keys come out sorted.
std::string dump(const json& j);

}  // namespace qpade::json_io
