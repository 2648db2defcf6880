#pragma once

// Stable enhanced representations <-> nested ideal pairs on a chart of Xi_n.

#include <optional>

#include "nestedquiver/ideals.hpp"
#include "nestedquiver/stability.hpp"

namespace nq {

/// Splits off the kernel representation, reads both parts on one chart and
/// takes their ideals. The chart is `forced` when given, otherwise the first
/// regular nu of the left part. cp = 0 gives the unit ideal as `small`.
/// Throws Error(NotStable), Error(ConeViolation), Error(SingularAnu).
NestedIdealPair rep_to_nested(const EnhRep& x, const EnhThetaParam& p,
                              const std::optional<NuPoint>& forced = std::nullopt);
NestedIdealPair rep_to_nested(const EnhRep& x);  // default_theta(c, cp)

/// Inclusion of the dual quotients: row k is e_small m_k(b_small) for the
/// k-th standard monomial m_k of `big`.
Matrix nested_inclusion(const ZeroCycleIdeal& big, const AdhmData& small);

/// The nested ADHM diagram of a pair, in the ideals' standard bases.
NestedAdhmData nested_adhm(const NestedIdealPair& p);

/// Embeds a nested diagram on chart nu: left part chart_embed(big), quotient
/// part from (qb1, qb2) by the same formulas, F1 = F2 = quot, I = 0.
EnhRep embed_nested(const NestedAdhmData& d, const NuPoint& nu, int n);

/// Throws Error(BadPair) when big is not a subideal of small or the
/// colengths are not c > c'.
EnhRep nested_to_rep(const NestedIdealPair& p, int n);

/// Both representations are compared through their ideal pairs on the first
/// sample chart regular for both. Throws Error(NotStable).
bool same_orbit(const EnhRep& x, const EnhRep& y, const EnhThetaParam& p);

}  // namespace nq
