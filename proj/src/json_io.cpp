#include "qpade/json_io.hpp"

#include "qpade/errors.hpp"

namespace qpade::json_io {

namespace {

json int_poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly int_poly_from_json(const json& a) {
  if (!a.is_array()) throw Error("expected an array of integer strings");
  std::vector<BigInt> c;
  for (const auto& x : a) {
    BigInt v;
    if (!x.is_string() || v.set_str(x.get<std::string>(), 10) != 0) throw Error("invalid integer string in JSON");
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

}  // namespace

json to_json(const RatFunc& f) { return json{{"num", int_poly_json(f.num())}, {"den", int_poly_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  IntPoly den = int_poly_from_json(j.at("den"));
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  return RatFunc::reduce(int_poly_from_json(j.at("num")), std::move(den));
}

json to_json(const QPoly& p, std::size_t pad) {
  json a = json::array();
  const std::size_t len = std::max(pad, p.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

QPoly qpoly_from_json(const json& j, Variable var) {
  std::vector<RatFunc> c;
  for (const auto& x : j) c.push_back(ratfunc_from_json(x));
  return QPoly(var, std::move(c));
}

json to_json(const BigRat& x) { return to_string(x); }

json to_json(const RatPoly& p, std::size_t pad) {
  json a = json::array();
  const std::size_t len = std::max(pad, p.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) a.push_back(to_json(p.coeff(i)));
  return a;
}

json to_json(const PadeProblem& p) {
  return json{{"A", p.A}, {"n", p.n}, {"rho", p.rho}, {"sigma", p.sigma}, {"nu", p.nu}};
}

PadeProblem problem_from_json(const json& j) {
  PadeProblem p{j.at("A").get<long>(), j.at("n").get<long>(), j.at("rho").get<long>(), j.at("sigma").get<long>(),
                j.at("nu").get<long>()};
  p.validate();
  return p;
}

json to_json(const PadeSolution& s) {
  const auto width = static_cast<std::size_t>(s.problem.n + 1);
  json table = json::array();
  json P = json::array();
  for (long j = 1; j <= s.problem.A; ++j) {
    json row = json::array();
    for (long t = 0; t <= s.problem.n; ++t) row.push_back(to_json(s.table.at(j, t)));
    table.push_back(std::move(row));
    P.push_back(to_json(s.P_j(j), width));
  }
  return json{{"problem", to_json(s.problem)},
              {"Pi", to_json(s.pi)},
              {"table", std::move(table)},
              {"P", std::move(P)},
              {"P0", to_json(s.P0, width)},
              {"P0bar", to_json(s.P0bar, width)}};
}

PadeSolution solution_from_json(const json& j) {
  const PadeProblem problem = problem_from_json(j.at("problem"));
  const json& table = j.at("table");
  if (!table.is_array() || static_cast<long>(table.size()) != problem.A) throw Error("table must have A rows");
  std::vector<RatFunc> flat;
  for (const auto& row : table) {
    if (!row.is_array() || static_cast<long>(row.size()) != problem.n + 1) throw Error("table rows must have n+1 entries");
    for (const auto& x : row) flat.push_back(ratfunc_from_json(x));
  }
  PadeSolution s;
  s.problem = problem;
  s.pi = qpoly_from_json(j.at("Pi"), Variable::s);
  s.table = CoefficientTable::from_flat(problem.A, problem.n, std::move(flat));
  for (const auto& p : j.at("P")) s.P.push_back(qpoly_from_json(p, Variable::z));
  if (static_cast<long>(s.P.size()) != problem.A) throw Error("P must list A polynomials");
  s.P0 = qpoly_from_json(j.at("P0"), Variable::z);
  s.P0bar = qpoly_from_json(j.at("P0bar"), Variable::z);
  return s;
}

json to_json(const ClassicalSolution& s) {
  const auto width = static_cast<std::size_t>(s.problem.n + 1);
  json table = json::array();
  json P = json::array();
  for (long j = 1; j <= s.problem.A; ++j) {
    json row = json::array();
    for (long t = 0; t <= s.problem.n; ++t) row.push_back(to_json(s.at(j, t)));
    table.push_back(std::move(row));
    P.push_back(to_json(s.P_j(j), width));
  }
  const ClassicalProblem& p = s.problem;
  return json{{"problem", {{"A", p.A}, {"n", p.n}, {"rho", p.rho}, {"sigma", p.sigma}}},
              {"Pi", to_json(s.pi)},
              {"table", std::move(table)},
              {"P", std::move(P)},
              {"P0", to_json(s.P0, width)},
              {"P0bar", to_json(s.P0bar, width)}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace qpade::json_io
