#include "nestedquiver/correspondence.hpp"

namespace nq {

NestedIdealPair rep_to_nested(const EnhRep& x, const EnhThetaParam& p, const std::optional<NuPoint>& forced) {
  const StabilityVerdict v = is_theta_stable(x, p);
  if (!v.stable) throw Error(ErrorCode::NotStable, "representation is not stable: " + *v.witness);
  const NuPoint nu = forced ? *forced : *v.nu;
  const HirzRep sub = kernel_subrep(x);
  NestedIdealPair out{nu, ideal_from_adhm(chart_extract(x.left, nu)), ideal_from_adhm(chart_extract(sub, nu))};
  return out;
}

NestedIdealPair rep_to_nested(const EnhRep& x) { return rep_to_nested(x, default_theta(x.c, x.cp)); }

Matrix nested_inclusion(const ZeroCycleIdeal& big, const AdhmData& small) {
  const auto stds = big.standard_monomials();
  std::size_t top = 0;
  for (const auto& m : stds) top = std::max<std::size_t>(top, m.first + m.second);
  const Matrix ev = evaluation_matrix(small, top);
  Matrix incl(stds.size(), small.c);
  for (std::size_t k = 0; k < stds.size(); ++k)
    for (std::size_t j = 0; j < small.c; ++j) incl(k, j) = ev(monomial_index(stds[k]), j);
  return incl;
}

NestedAdhmData nested_adhm(const NestedIdealPair& p) {
  if (p.big.c() < p.small.c() || !is_subideal(p.big, p.small))
    throw Error(ErrorCode::BadPair, "big ideal is not contained in small ideal");
  const AdhmData big = adhm_from_ideal(p.big);
  const AdhmData small = adhm_from_ideal(p.small);
  try {
    return build_nested_adhm(small, big, nested_inclusion(p.big, small));
  } catch (const Error& e) {
    throw Error(ErrorCode::BadPair, std::string("pair does not give a nested diagram: ") + e.what());
  }
}

EnhRep embed_nested(const NestedAdhmData& d, const NuPoint& nu, int n) {
  EnhRep x;
  x.n = n;
  x.c = d.big.c;
  x.cp = d.small.c;
  x.left = chart_embed(d.big, nu, n);
  const std::size_t s = x.c - x.cp;
  const HirzRep q = chart_embed(AdhmData{s, d.qb1, d.qb2, Matrix(1, s)}, nu, n);
  x.Ap1 = q.A1;
  x.Ap2 = q.A2;
  x.Cp = q.C;
  x.F1 = d.quot;
  x.F2 = d.quot;
  return x;
}

EnhRep nested_to_rep(const NestedIdealPair& p, int n) {
  if (p.big.c() <= p.small.c()) throw Error(ErrorCode::BadPair, "need colength(big) > colength(small)");
  const EnhRep x = embed_nested(nested_adhm(p), p.nu, n);
  if (sgn(determinant(pencil_a(x.left.A1, x.left.A2, p.nu))) == 0)
    throw Error(ErrorCode::ChartUnavailable, "chart " + to_string(p.nu) + " is singular for this pair");
  return x;
}

bool same_orbit(const EnhRep& x, const EnhRep& y, const EnhThetaParam& p) {
  if (x.n != y.n || x.c != y.c || x.cp != y.cp) return false;
  for (const EnhRep* r : {&x, &y}) {
    const StabilityVerdict v = is_theta_stable(*r, p);
    if (!v.stable) throw Error(ErrorCode::NotStable, "representation is not stable: " + *v.witness);
  }
  const auto rx = regular_nus(x.left.A1, x.left.A2, x.c + 1);
  const auto ry = regular_nus(y.left.A1, y.left.A2, y.c + 1);
  for (const auto& nu : rx)
    for (const auto& mu : ry)
      if (nu == mu) return rep_to_nested(x, p, nu) == rep_to_nested(y, p, nu);
  return false;
}

}  // namespace nq
