/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <map>
#include <memory>
#include <optional>

#include "pev/instances.hpp"
#include "pev/lp.hpp"
#include "pev/witness.hpp"

namespace pev {

struct AtomLess {
  bool operator()(const Atom& a, const Atom& b) const { return compare(a, b) < 0; }
};

/// A kernel k : A -> DA together with the distribution p it dilates.
/// Points outside the stored kernel map to their Dirac distribution.
struct Dilation {
  std::map<Atom, Expr, AtomLess> kernel;
  Expr base;

  Expr at(const Atom& a) const;
};

/// The Dirac kernel a -> delta_a on the support of p.
Dilation dirac_dilation(const Expr& p);

/// The transport LP deciding a partial evaluation p -> q in a convex
/// algebra. Variables are x_{b,a} for b in supp(q), a in supp(p), ordered
/// by (b, a).
LpProblem partial_evaluation_lp(const Expr& p, const Expr& q, std::size_t dim);

/// Decides whether p partially evaluates to q, returning a witness
/// xi = sum_b q(b) delta(s_b) with barycenter(s_b) = b when it does.
/// Throws DimensionMismatch when a support point is not in Q^dim.
std::optional<Witness> decide_pev(const Expr& p, const Expr& q, std::shared_ptr<const ConvexAlgebra> algebra);

/// Given mu(alpha) = f_* p, builds beta in DDX with f_** beta = alpha and
/// mu(beta) = p by conditioning p on the fibres of f.
Expr lift_decomposition(const Expr& p, const Expr& alpha, const AtomFunction& f);

/// Conditions a partial decomposition r of p (De(r) = p) into a p-dilation.
Dilation dilation_from_witness(const Expr& r, const Expr& p, const ConvexAlgebra& algebra);

/// r = Dk(p). Throws InvalidDilation if k moves a barycenter on supp(p).
Expr witness_from_dilation(const Dilation& k, const ConvexAlgebra& algebra);

/// The kernel a -> E(Dk2(k1(a))). Requires k2.base == E(Dk1(k1.base)),
/// otherwise throws DomainMismatch.
Dilation compose_kernels(const Dilation& k1, const Dilation& k2);

/// Composes distribution witnesses k : p -> q and h : q -> r through their
/// conditioning dilations.
Witness compose_distribution_witnesses(const Witness& k, const Witness& h);

/// Second-order stochastic dominance for distributions on Q^1.
bool sosd_1d(const Expr& p, const Expr& q);

/// Exact 1-Wasserstein distance on Q^1.
Rational wasserstein1_1d(const Expr& p, const Expr& q);

/// Mean of a distribution on Q^1.
Rational mean_1d(const Expr& p);

}  // namespace pev
