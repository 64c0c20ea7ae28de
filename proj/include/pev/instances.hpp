/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "pev/algebra.hpp"
#include "pev/monad.hpp"

namespace pev {

// ---------------------------------------------------------------------------
// Canonical constructors

/// Multiset with the given elements, each counted once.
Expr make_multiset(std::vector<Expr> items);
/// Multiset from (element, multiplicity) pairs; equal elements are merged
/// and zero multiplicities dropped. Multiplicities must be non-negative
/// integers.
Expr make_multiset(std::vector<Entry> entries);
Expr make_list(std::vector<Expr> items);
Expr make_action(Atom g, Expr x);
/// Distribution from (point, weight) pairs. Equal points are merged, zero
/// weights dropped; throws InvalidStructure unless the weights are
/// non-negative and sum to exactly one.
Expr make_distribution(std::vector<Entry> entries);
Expr dirac(Expr x);
Expr terminal_value();

// ---------------------------------------------------------------------------
// Monads

/// Free commutative monoid: finite multisets.
class MultisetMonad final : public Monad {
 public:
  MonadTag tag() const override { return MonadTag::Multiset; }
  Shape shape() const override { return Shape::Multiset; }
  std::string name() const override { return "multiset"; }
  Expr map(const Expr& x, const ExprFn& f) const override;
  Expr unit(const Expr& x) const override;
  Expr flatten(const Expr& x) const override;
  bool has_fiber_enumerator() const override { return true; }
  std::vector<Expr> mu_fiber(const Expr& x, std::size_t limit) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override;
};

/// Free monoid: finite lists.
class ListMonad final : public Monad {
 public:
  MonadTag tag() const override { return MonadTag::List; }
  Shape shape() const override { return Shape::List; }
  std::string name() const override { return "list"; }
  Expr map(const Expr& x, const ExprFn& f) const override;
  Expr unit(const Expr& x) const override;
  Expr flatten(const Expr& x) const override;
  bool has_fiber_enumerator() const override { return true; }
  std::vector<Expr> mu_fiber(const Expr& x, std::size_t limit) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override;
};

/// A finite monoid given by its Cayley table. Elements are addressed by
/// index; index order follows the canonical order of the element atoms.
class Monoid {
 public:
  /// `table[i][j]` is the index of elements[i] * elements[j]. Throws
  /// InvalidStructure unless the table is associative with a two-sided
  /// identity.
  static Monoid from_table(std::vector<Atom> elements, std::vector<std::vector<std::size_t>> table);
  /// The cyclic group Z/n with elements 0..n-1.
  static Monoid cyclic(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  const Atom& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Atom>& elements() const { return elements_; }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  bool is_group() const { return is_group_; }
  bool is_commutative() const;
  /// Only valid when is_group().
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// Throws CarrierMismatch for atoms outside the monoid.
  std::size_t index_of(const Atom& a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<Atom> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  bool is_group_ = false;
  std::vector<std::size_t> inverse_;
};

/// The action (writer) monad X -> G x X for a monoid G.
class ActionMonad final : public Monad {
 public:
  explicit ActionMonad(Monoid monoid) : monoid_(std::move(monoid)) {}

  const Monoid& monoid() const { return monoid_; }
  MonadTag tag() const override { return MonadTag::Action; }
  Shape shape() const override { return Shape::Action; }
  std::string name() const override { return "action"; }
  Expr map(const Expr& x, const ExprFn& f) const override;
  Expr unit(const Expr& x) const override;
  Expr flatten(const Expr& x) const override;
  bool has_fiber_enumerator() const override { return true; }
  std::vector<Expr> mu_fiber(const Expr& x, std::size_t limit) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override;

  /// Index of the monoid element labelling x.
  std::size_t element_of(const Expr& x) const;
  const Expr& payload(const Expr& x) const;

 private:
  Monoid monoid_;
};

/// Finitely supported probability distributions with exact weights.
class DistributionMonad final : public Monad {
 public:
  MonadTag tag() const override { return MonadTag::Distribution; }
  Shape shape() const override { return Shape::Distribution; }
  std::string name() const override { return "dist"; }
  Expr map(const Expr& x, const ExprFn& f) const override;
  Expr unit(const Expr& x) const override;
  Expr flatten(const Expr& x) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override;
};

/// TX = 1. Every nested value is the single point `*`.
class TerminalMonad final : public Monad {
 public:
  MonadTag tag() const override { return MonadTag::Terminal; }
  Shape shape() const override { return Shape::Unit; }
  std::string name() const override { return "terminal"; }
  Expr map(const Expr& x, const ExprFn& f) const override;
  Expr unit(const Expr& x) const override;
  Expr flatten(const Expr& x) const override;
  bool has_fiber_enumerator() const override { return true; }
  std::vector<Expr> mu_fiber(const Expr& x, std::size_t limit) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override;
};

// ---------------------------------------------------------------------------
// Algebras

/// (N, +) for the multiset or list monad.
class NatAddAlgebra final : public Algebra {
 public:
  explicit NatAddAlgebra(MonadPtr monad);
  const Monad& monad() const override { return *monad_; }
  MonadPtr monad_ptr() const override { return monad_; }
  const Carrier& carrier() const override { return carrier_; }
  std::string name() const override { return "nat-add"; }
  Atom evaluate(const Expr& x) const override;
  Atom random_atom(Rng& rng) const override;

 private:
  MonadPtr monad_;
  Carrier carrier_;
};

/// A finite monoid as an algebra of the list monad, or of the multiset
/// monad when commutative.
class MonoidTableAlgebra final : public Algebra {
 public:
  MonoidTableAlgebra(MonadPtr monad, Monoid monoid);
  const Monad& monad() const override { return *monad_; }
  MonadPtr monad_ptr() const override { return monad_; }
  const Carrier& carrier() const override { return carrier_; }
  std::string name() const override { return "table"; }
  Atom evaluate(const Expr& x) const override;
  Atom random_atom(Rng& rng) const override;
  const Monoid& monoid() const { return monoid_; }

 private:
  MonadPtr monad_;
  Monoid monoid_;
  Carrier carrier_;
};

/// A G-set: algebra of the action monad.
class ActionAlgebra final : public Algebra {
 public:
  /// `act[g][x]` is the carrier index of g . x. Throws InvalidStructure
  /// unless the table is a monoid action.
  ActionAlgebra(std::shared_ptr<const ActionMonad> monad, Carrier carrier,
                std::vector<std::vector<std::size_t>> act);
  /// The monoid acting on itself by left multiplication.
  static std::shared_ptr<const ActionAlgebra> cayley(std::shared_ptr<const ActionMonad> monad);

  const Monad& monad() const override { return *monad_; }
  MonadPtr monad_ptr() const override { return monad_; }
  const ActionMonad& action_monad() const { return *monad_; }
  const Carrier& carrier() const override { return carrier_; }
  std::string name() const override { return "cayley"; }
  Atom evaluate(const Expr& x) const override;
  Atom random_atom(Rng& rng) const override;
  /// g . x on carrier atoms.
  Atom act(std::size_t g, const Atom& x) const;

 private:
  std::shared_ptr<const ActionMonad> monad_;
  Carrier carrier_;
  std::vector<std::vector<std::size_t>> act_;
};

/// A convex subset of Q^d as an algebra of the distribution monad;
/// evaluation is the barycenter.
class ConvexAlgebra final : public Algebra {
 public:
  ConvexAlgebra(std::shared_ptr<const DistributionMonad> monad, std::size_t dim,
                std::function<bool(const Point&)> admissible = {});
  const Monad& monad() const override { return *monad_; }
  MonadPtr monad_ptr() const override { return monad_; }
  const Carrier& carrier() const override { return carrier_; }
  std::string name() const override { return "convex"; }
  Atom evaluate(const Expr& x) const override;
  Atom random_atom(Rng& rng) const override;
  std::size_t dim() const { return dim_; }

 private:
  std::shared_ptr<const DistributionMonad> monad_;
  std::size_t dim_;
  Carrier carrier_;
};

/// The one-point algebra of the terminal monad.
class UnitAlgebra final : public Algebra {
 public:
  explicit UnitAlgebra(std::shared_ptr<const TerminalMonad> monad);
  const Monad& monad() const override { return *monad_; }
  MonadPtr monad_ptr() const override { return monad_; }
  const Carrier& carrier() const override { return carrier_; }
  std::string name() const override { return "unit"; }
  Atom evaluate(const Expr& x) const override;
  Atom random_atom(Rng&) const override { return sym_atom("*"); }

 private:
  std::shared_ptr<const TerminalMonad> monad_;
  Carrier carrier_;
};

// ---------------------------------------------------------------------------
// Instance-specific operations

/// All multiset partitions of p into nonempty blocks, canonically ordered.
std::vector<Expr> multiset_mu_fiber(const Expr& p, std::size_t limit = kDefaultFiberLimit);
/// All compositions of the list p into contiguous nonempty blocks.
std::vector<Expr> list_mu_fiber(const Expr& p, std::size_t limit = kDefaultFiberLimit);

struct ActionTriple {
  Atom h;
  Atom ell;
  Atom x;
  friend bool operator==(const ActionTriple& a, const ActionTriple& b) {
    return compare(a.h, b.h) == 0 && compare(a.ell, b.ell) == 0 && compare(a.x, b.x) == 0;
  }
};

/// For p = (g, x) and q = (h, y): every (h, l, x) with h*l = g and l.x = y.
std::vector<ActionTriple> action_witnesses(const ActionAlgebra& algebra, const Expr& p, const Expr& q);

/// y -> sum of p(x) over f^{-1}(y).
Expr dist_pushforward(const AtomFunction& f, const Expr& p);
/// Mixture of a distribution over distributions.
Expr dist_average(const Expr& xi);
/// Exact convex combination of the support points of p. Throws
/// DimensionMismatch if a support point is not in Q^dim.
Point barycenter(const ConvexAlgebra& algebra, const Expr& p);
Point barycenter(std::size_t dim, const Expr& p);

}  // namespace pev
