/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "pev/bar.hpp"
#include "pev/engine.hpp"
#include "pev/errors.hpp"
#include "pev/instances.hpp"
#include "pev/io.hpp"
#include "pev/laws.hpp"
#include "pev/lp.hpp"
#include "pev/stochastics.hpp"
#include "pev/witness.hpp"

namespace pev::test {

inline Expr num(long long v) { return Expr::atom(int_atom(v)); }
inline Expr sym(const char* s) { return Expr::atom(sym_atom(s)); }

inline Expr ms(std::initializer_list<long long> xs) {
  std::vector<Expr> items;
  for (auto x : xs) items.push_back(num(x));
  return make_multiset(std::move(items));
}
inline Expr ms(std::vector<Expr> items) { return make_multiset(std::move(items)); }

inline Expr lst(std::initializer_list<long long> xs) {
  std::vector<Expr> items;
  for (auto x : xs) items.push_back(num(x));
  return make_list(std::move(items));
}
inline Expr lst(std::vector<Expr> items) { return make_list(std::move(items)); }

inline Expr act(long long g, Expr x) { return make_action(int_atom(g), std::move(x)); }

inline Expr pt(std::vector<Rational> coords) { return Expr::atom(point_atom(std::move(coords))); }
inline Expr pt1(Rational x) { return pt({std::move(x)}); }

inline Expr dist(std::vector<std::pair<Expr, Rational>> terms) {
  std::vector<Entry> entries;
  for (auto& [x, w] : terms) entries.push_back({x, w});
  return make_distribution(std::move(entries));
}
/// A distribution on Q^1 from (point, weight) pairs.
inline Expr line(std::vector<std::pair<Rational, Rational>> terms) {
  std::vector<Entry> entries;
  for (auto& [x, w] : terms) entries.push_back({pt1(x), w});
  return make_distribution(std::move(entries));
}
inline Rational q(long long n, long long d = 1) { return Rational(n, d); }

inline std::shared_ptr<const NatAddAlgebra> nat_multiset() {
  return std::make_shared<NatAddAlgebra>(std::make_shared<MultisetMonad>());
}
inline std::shared_ptr<const NatAddAlgebra> nat_list() {
  return std::make_shared<NatAddAlgebra>(std::make_shared<ListMonad>());
}
inline std::shared_ptr<const ActionAlgebra> cyclic_action(std::size_t n) {
  return ActionAlgebra::cayley(std::make_shared<ActionMonad>(Monoid::cyclic(n)));
}
inline std::shared_ptr<const ConvexAlgebra> convex(std::size_t dim) {
  return std::make_shared<ConvexAlgebra>(std::make_shared<DistributionMonad>(), dim);
}
inline std::shared_ptr<const UnitAlgebra> unit_algebra() {
  return std::make_shared<UnitAlgebra>(std::make_shared<TerminalMonad>());
}

/// The monoid {1, a, 0} with a*a = 0 and 0 absorbing; not a group.
inline Monoid nilpotent_monoid() {
  return Monoid::from_table({int_atom(0), int_atom(1), int_atom(2)}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}});
}

}  // namespace pev::test
