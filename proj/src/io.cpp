#include "nestedquiver/io.hpp"

#include <fstream>
#include <sstream>

namespace nq {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Matrix matrix_field(const Json& mats, const std::string& key, std::size_t rows, std::size_t cols) {
  auto it = mats.find(key);
  if (it == mats.end()) bad("missing matrix \"" + key + "\"");
  Matrix m = matrix_from_json(*it);
  if (m.rows() != rows || m.cols() != cols)
    bad("matrix \"" + key + "\" is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
        std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

Json hirz_matrices(const HirzRep& x) {
  Json m = Json::object();
  m["A1"] = to_json(x.A1);
  m["A2"] = to_json(x.A2);
  for (std::size_t q = 0; q < x.C.size(); ++q) m["C" + std::to_string(q + 1)] = to_json(x.C[q]);
  for (std::size_t q = 0; q < x.I.size(); ++q) m["I" + std::to_string(q + 1)] = to_json(x.I[q]);
  m["J"] = to_json(x.J);
  return m;
}

HirzRep hirz_from_matrices(const Json& mats, int n, std::size_t c0, std::size_t c1) {
  if (!mats.is_object()) bad("\"matrices\" must be an object");
  HirzRep x;
  x.n = n;
  x.c0 = c0;
  x.c1 = c1;
  x.A1 = matrix_field(mats, "A1", c1, c0);
  x.A2 = matrix_field(mats, "A2", c1, c0);
  for (int q = 1; q <= n; ++q) x.C.push_back(matrix_field(mats, "C" + std::to_string(q), c0, c1));
  for (int q = 1; q < n; ++q) x.I.push_back(matrix_field(mats, "I" + std::to_string(q), c0, 1));
  x.J = matrix_field(mats, "J", 1, c0);
  return x;
}

int n_field(const Json& j) {
  const std::size_t n = count_field(j, "n");
  if (n < 1 || n > 64) bad("n must be between 1 and 64");
  return static_cast<int>(n);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (const auto& v : m.entries()) entries.push_back(to_string(v));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const NuPoint& nu) { return Json::array({to_string(nu.nu1()), to_string(nu.nu2())}); }

Json to_json(const HirzRep& x) {
  return Json{{"n", x.n}, {"c0", x.c0}, {"c1", x.c1}, {"matrices", hirz_matrices(x)}};
}

Json to_json(const EnhRep& x) {
  Json m = hirz_matrices(x.left);
  m["Ap1"] = to_json(x.Ap1);
  m["Ap2"] = to_json(x.Ap2);
  for (std::size_t t = 0; t < x.Cp.size(); ++t) m["Cp" + std::to_string(t + 1)] = to_json(x.Cp[t]);
  m["F1"] = to_json(x.F1);
  m["F2"] = to_json(x.F2);
  return Json{{"n", x.n}, {"c", x.c}, {"cp", x.cp}, {"matrices", m}};
}

Json to_json(const AdhmData& a) {
  return Json{{"c", a.c}, {"b1", to_json(a.b1)}, {"b2", to_json(a.b2)}, {"e", to_json(a.e)}};
}

Json to_json(const NestedAdhmData& d) {
  return Json{{"small", to_json(d.small)}, {"big", to_json(d.big)}, {"incl", to_json(d.incl)},
              {"quot", to_json(d.quot)},   {"qb1", to_json(d.qb1)},   {"qb2", to_json(d.qb2)}};
}

Json to_json(const ZeroCycleIdeal& i) {
  Json gens = Json::array();
  for (const auto& p : i.polys()) gens.push_back(to_string(p));
  return Json{{"c", i.c()}, {"d", i.d()}, {"basis", to_json(i.basis())}, {"generators", gens}};
}

Json to_json(const NestedIdealPair& p) {
  return Json{{"nu", to_json(p.nu)}, {"big", to_json(p.big)}, {"small", to_json(p.small)}};
}

Json to_json(const StabilityVerdict& v) {
  return Json{{"verdict", v.stable ? "stable" : "unstable"},
              {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
              {"nu", v.nu ? to_json(*v.nu) : Json(nullptr)}};
}

Json to_json(const EnhThetaParam& p) {
  return Json::array({to_string(p.theta1), to_string(p.theta2), to_string(p.theta3), to_string(p.theta4)});
}

Json to_json(const CoxPoly& f) {
  Json out = Json::array();
  for (const auto& [e, v] : f.terms()) out.push_back(Json{{"exponents", e}, {"coeff", to_string(v)}});
  return out;
}

Json to_json(const CoxMatrix& m) {
  Json entries = Json::array();
  for (const auto& p : m.entries) entries.push_back(to_json(p));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  bad("rational must be a string \"p/q\" or an integer");
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows"), cols = count_field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) bad("matrix entries must be a list of rows*cols values");
  std::vector<Rational> values;
  for (const auto& v : entries) values.push_back(rational_from_json(v));
  return Matrix(rows, cols, std::move(values));
}

NuPoint nu_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("nu must be a pair of rationals");
  try {
    return NuPoint(rational_from_json(j[0]), rational_from_json(j[1]));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DomainError) bad(e.what());
    throw;
  }
}

HirzRep hirz_from_json(const Json& j) {
  const int n = n_field(j);
  std::size_t c0, c1;
  if (j.contains("c0")) {
    c0 = count_field(j, "c0");
    c1 = count_field(j, "c1");
  } else {
    c0 = c1 = count_field(j, "c");
  }
  return hirz_from_matrices(field(j, "matrices"), n, c0, c1);
}

EnhRep enh_from_json(const Json& j) {
  const int n = n_field(j);
  EnhRep x;
  x.n = n;
  x.c = count_field(j, "c");
  x.cp = count_field(j, "cp");
  if (x.cp > x.c) bad("cp must not exceed c");
  const Json& mats = field(j, "matrices");
  x.left = hirz_from_matrices(mats, n, x.c, x.c);
  const std::size_t s = x.c - x.cp;
  x.Ap1 = matrix_field(mats, "Ap1", s, s);
  x.Ap2 = matrix_field(mats, "Ap2", s, s);
  for (int t = 1; t <= n; ++t) x.Cp.push_back(matrix_field(mats, "Cp" + std::to_string(t), s, s));
  x.F1 = matrix_field(mats, "F1", s, x.c);
  x.F2 = matrix_field(mats, "F2", s, x.c);
  return x;
}

AdhmData adhm_from_json(const Json& j) {
  AdhmData a;
  a.c = count_field(j, "c");
  a.b1 = matrix_from_json(field(j, "b1"));
  a.b2 = matrix_from_json(field(j, "b2"));
  a.e = matrix_from_json(field(j, "e"));
  try {
    a.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return a;
}

ZeroCycleIdeal ideal_from_json(const Json& j) {
  if (j.is_object() && j.contains("basis")) {
    const std::size_t d = count_field(j, "d");
    if (d > 40) bad("degree bound too large");
    const Matrix basis = matrix_from_json(j["basis"]);
    if (basis.cols() != monomial_count(d)) bad("basis must have one column per monomial of degree <= d");
    ZeroCycleIdeal i(d, basis);
    if (j.contains("c") && count_field(j, "c") != i.c()) bad("stated colength does not match the basis");
    return i;
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators must be a list of polynomial strings");
  std::vector<Poly2> polys;
  for (const auto& g : gens) {
    if (!g.is_string()) bad("generators must be strings");
    polys.push_back(Poly2::parse(g.get<std::string>()));
  }
  return ZeroCycleIdeal::from_generators(polys);
}

NestedIdealPair pair_from_json(const Json& j) {
  NestedIdealPair p;
  p.nu = j.is_object() && j.contains("nu") ? nu_from_json(j["nu"]) : NuPoint(1, 0);
  p.big = ideal_from_json(field(j, "big"));
  p.small = ideal_from_json(field(j, "small"));
  return p;
}

EnhThetaParam theta_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("theta must be a list of four rationals");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace nq
