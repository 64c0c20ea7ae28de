/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/stochastics.hpp"

#include <algorithm>

#include "pev/errors.hpp"

namespace pev {

namespace {

const DistributionMonad& dist_monad() {
  static const DistributionMonad monad;
  return monad;
}

const Point& point_of(const Expr& x, std::size_t dim) {
  const auto* pt = x.is_atom() ? std::get_if<Point>(&x.atom_value()) : nullptr;
  if (pt == nullptr || pt->dim() != dim) {
    throw DimensionMismatch("expected a point of Q^" + std::to_string(dim) + ", got " +
                            (x.is_atom() ? to_string(x.atom_value()) : std::string("a nested value")));
  }
  return *pt;
}

void require_points(const Expr& p, std::size_t dim) {
  dist_monad().require_layer(p);
  for (const auto& e : p.entries()) point_of(e.value, dim);
}

Rational coordinate_1d(const Expr& x) { return point_of(x, 1).coords[0]; }

// Weighted sum of distributions, weights summing to one.
Expr mixture(const std::vector<std::pair<Rational, Expr>>& parts) {
  std::vector<Entry> entries;
  for (const auto& [w, d] : parts) {
    for (const auto& e : d.entries()) entries.push_back({e.value, w * e.weight});
  }
  return make_distribution(std::move(entries));
}

Expr barycenter_push(const Expr& r, std::size_t dim) {
  return dist_monad().map(r, [&](const Expr& s) { return Expr::atom(Atom{barycenter(dim, s)}); });
}

std::shared_ptr<const ConvexAlgebra> convex_of(const Witness& w) {
  auto convex = std::dynamic_pointer_cast<const ConvexAlgebra>(w.algebra);
  if (!convex) throw UnsupportedInstance("distribution witnesses need a convex algebra");
  return convex;
}

}  // namespace

Expr Dilation::at(const Atom& a) const {
  auto it = kernel.find(a);
  if (it == kernel.end()) return dirac(Expr::atom(a));
  return it->second;
}

Dilation dirac_dilation(const Expr& p) {
  dist_monad().require_layer(p);
  Dilation d{{}, p};
  for (const auto& e : p.entries()) d.kernel.emplace(e.value.atom_value(), dirac(e.value));
  return d;
}

LpProblem partial_evaluation_lp(const Expr& p, const Expr& q, std::size_t dim) {
  require_points(p, dim);
  require_points(q, dim);
  const auto& ps = p.entries();
  const auto& qs = q.entries();
  const std::size_t na = ps.size();
  const std::size_t nb = qs.size();
  LpProblem lp(na * nb);
  auto var = [&](std::size_t b, std::size_t a) { return b * na + a; };
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t a = 0; a < na; ++a) {
      lp.labels.push_back("x[" + to_string(qs[b].value.atom_value()) + "," + to_string(ps[a].value.atom_value()) + "]");
    }
  }
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (std::size_t a = 0; a < na; ++a) row[var(b, a)] = 1;
    lp.add_equality(std::move(row), qs[b].weight);
  }
  for (std::size_t a = 0; a < na; ++a) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (std::size_t b = 0; b < nb; ++b) row[var(b, a)] = 1;
    lp.add_equality(std::move(row), ps[a].weight);
  }
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& bp = point_of(qs[b].value, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rational> row(lp.num_vars, Rational(0));
      for (std::size_t a = 0; a < na; ++a) row[var(b, a)] = point_of(ps[a].value, dim).coords[c];
      lp.add_equality(std::move(row), qs[b].weight * bp.coords[c]);
    }
  }
  return lp;
}

std::optional<Witness> decide_pev(const Expr& p, const Expr& q, std::shared_ptr<const ConvexAlgebra> algebra) {
  const std::size_t dim = algebra->dim();
  auto lp = partial_evaluation_lp(p, q, dim);
  auto solution = lp_feasible(lp);
  if (!solution) return std::nullopt;

  const auto& ps = p.entries();
  const auto& qs = q.entries();
  std::vector<Entry> outer;
  for (std::size_t b = 0; b < qs.size(); ++b) {
    std::vector<Entry> inner;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      const Rational& x = (*solution)[b * ps.size() + a];
      if (x != 0) inner.push_back({ps[a].value, x / qs[b].weight});
    }
    outer.push_back({make_distribution(std::move(inner)), qs[b].weight});
  }
  auto w = witness_from_nested(algebra, make_distribution(std::move(outer)));
  if (w.source != p || w.target != q) throw InternalError("LP solution does not witness p -> q");
  return w;
}

Expr lift_decomposition(const Expr& p, const Expr& alpha, const AtomFunction& f) {
  const Expr pushed = dist_pushforward(f, p);
  if (dist_average(alpha) != pushed) {
    throw PreconditionViolated("the average of alpha differs from the pushforward of p");
  }
  // p conditioned on each fibre f^{-1}(y).
  std::map<Atom, std::vector<Entry>, AtomLess> fibres;
  for (const auto& e : p.entries()) fibres[f(e.value.atom_value())].push_back(e);
  std::map<Atom, Expr, AtomLess> conditioned;
  for (const auto& y : pushed.entries()) {
    const Atom& key = y.value.atom_value();
    std::vector<Entry> entries;
    for (const auto& e : fibres.at(key)) entries.push_back({e.value, e.weight / y.weight});
    conditioned.emplace(key, make_distribution(std::move(entries)));
  }

  std::vector<Entry> beta;
  for (const auto& outer : alpha.entries()) {
    std::vector<std::pair<Rational, Expr>> parts;
    for (const auto& inner : outer.value.entries()) {
      auto it = conditioned.find(inner.value.atom_value());
      if (it == conditioned.end()) {
        throw PreconditionViolated("cannot condition on " + to_string(inner.value.atom_value()) +
                                   ", which has zero mass under the pushforward");
      }
      parts.emplace_back(inner.weight, it->second);
    }
    beta.push_back({mixture(parts), outer.weight});
  }
  return make_distribution(std::move(beta));
}

Dilation dilation_from_witness(const Expr& r, const Expr& p, const ConvexAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  require_points(p, dim);
  dist_monad().require_layer(r);
  if (barycenter_push(r, dim) != p) {
    throw PreconditionViolated("the barycenters of r do not push forward to p");
  }
  std::map<Atom, std::vector<std::pair<Rational, Expr>>, AtomLess> classes;
  for (const auto& e : r.entries()) {
    classes[Atom{barycenter(dim, e.value)}].emplace_back(e.weight, e.value);
  }
  Dilation d{{}, p};
  for (const auto& e : p.entries()) {
    auto parts = classes.at(e.value.atom_value());
    for (auto& part : parts) part.first /= e.weight;
    d.kernel.emplace(e.value.atom_value(), mixture(parts));
  }
  return d;
}

Expr witness_from_dilation(const Dilation& k, const ConvexAlgebra& algebra) {
  const std::size_t dim = algebra.dim();
  require_points(k.base, dim);
  std::vector<Entry> out;
  for (const auto& e : k.base.entries()) {
    const Atom& a = e.value.atom_value();
    Expr spread = k.at(a);
    if (compare(Atom{barycenter(dim, spread)}, a) != 0) {
      throw InvalidDilation("kernel moves the barycenter of " + to_string(a));
    }
    out.push_back({std::move(spread), e.weight});
  }
  return make_distribution(std::move(out));
}

Dilation compose_kernels(const Dilation& k1, const Dilation& k2) {
  dist_monad().require_layer(k1.base);
  std::vector<std::pair<Rational, Expr>> spread;
  for (const auto& e : k1.base.entries()) spread.emplace_back(e.weight, k1.at(e.value.atom_value()));
  if (mixture(spread) != k2.base) {
    throw DomainMismatch("the second kernel is not a dilation of the first kernel's output");
  }
  Dilation out{{}, k1.base};
  for (const auto& b : k1.base.entries()) {
    const Atom& a = b.value.atom_value();
    std::vector<std::pair<Rational, Expr>> parts;
    for (const auto& e : k1.at(a).entries()) parts.emplace_back(e.weight, k2.at(e.value.atom_value()));
    out.kernel.emplace(a, mixture(parts));
  }
  return out;
}

Witness compose_distribution_witnesses(const Witness& k, const Witness& h) {
  auto algebra = convex_of(k);
  if (k.target != h.source) throw NotComposable("the first witness does not end where the second starts");
  // Decomposition orientation: r spreads into q, q spreads into p.
  const Dilation spread_r = dilation_from_witness(h.nested, h.target, *algebra);
  const Dilation spread_q = dilation_from_witness(k.nested, k.target, *algebra);
  const Dilation composite = compose_kernels(spread_r, spread_q);
  auto w = witness_from_nested(algebra, witness_from_dilation(composite, *algebra));
  if (w.source != k.source || w.target != h.target) {
    throw InternalError("kernel composition produced a witness with the wrong boundaries");
  }
  return w;
}

Rational mean_1d(const Expr& p) {
  require_points(p, 1);
  Rational m = 0;
  for (const auto& e : p.entries()) m += e.weight * coordinate_1d(e.value);
  return m;
}

bool sosd_1d(const Expr& p, const Expr& q) {
  if (mean_1d(p) != mean_1d(q)) return false;
  std::vector<Rational> thresholds;
  for (const auto* d : {&p, &q}) {
    for (const auto& e : d->entries()) thresholds.push_back(coordinate_1d(e.value));
  }
  auto expected_min = [](const Expr& d, const Rational& t) {
    Rational s = 0;
    for (const auto& e : d.entries()) s += e.weight * std::min(coordinate_1d(e.value), t);
    return s;
  };
  for (const auto& t : thresholds) {
    if (expected_min(p, t) > expected_min(q, t)) return false;
  }
  return true;
}

Rational wasserstein1_1d(const Expr& p, const Expr& q) {
  require_points(p, 1);
  require_points(q, 1);
  std::vector<std::pair<Rational, Rational>> steps;  // (point, mass of p minus mass of q)
  for (const auto& e : p.entries()) steps.emplace_back(coordinate_1d(e.value), e.weight);
  for (const auto& e : q.entries()) steps.emplace_back(coordinate_1d(e.value), -e.weight);
  std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total = 0;
  Rational cdf_gap = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    cdf_gap += steps[i].second;
    if (i + 1 < steps.size()) {
      const Rational gap = cdf_gap < 0 ? Rational(-cdf_gap) : cdf_gap;
      total += gap * (steps[i + 1].first - steps[i].first);
    }
  }
  return total;
}

}  // namespace pev
