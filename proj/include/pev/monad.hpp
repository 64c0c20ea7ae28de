/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pev/expr.hpp"
#include "pev/rng.hpp"

namespace pev {

enum class MonadTag { Multiset, List, Action, Distribution, Terminal };

std::string to_string(MonadTag tag);

using ExprFn = std::function<Expr(const Expr&)>;
using AtomFunction = std::function<Atom(const Atom&)>;

/// Default bound on the size of an expression whose mu-fiber is enumerated.
inline constexpr std::size_t kDefaultFiberLimit = 10;

/// A monad on sets, acting on one container layer at a time.
///
/// `map` is the functor on a single layer; deeper positions are reached by
/// composing it (see map_at). `unit` and `flatten` are the outermost
/// components of eta and mu. Implementations must return canonical forms.
class Monad {
 public:
  virtual ~Monad() = default;

  virtual MonadTag tag() const = 0;
  virtual Shape shape() const = 0;
  virtual std::string name() const = 0;

  /// Applies f to every immediate child of the layer x.
  virtual Expr map(const Expr& x, const ExprFn& f) const = 0;
  virtual Expr unit(const Expr& x) const = 0;
  /// Flattens the two outermost layers of x.
  virtual Expr flatten(const Expr& x) const = 0;

  virtual bool has_fiber_enumerator() const { return false; }
  /// Every y with flatten(y) == x, in canonical order. Throws
  /// EnumerationLimitExceeded when x is larger than `limit`, and
  /// UnsupportedInstance when the fiber is not finite.
  virtual std::vector<Expr> mu_fiber(const Expr& x, std::size_t limit) const;

  /// A random layer whose children are drawn from `child`.
  virtual Expr random_layer(Rng& rng, const std::function<Expr()>& child) const = 0;

  /// Throws DepthMismatch unless x is a layer of this monad's shape.
  void require_layer(const Expr& x) const;
};

using MonadPtr = std::shared_ptr<const Monad>;

/// Applies f under `level` layers (level 0 is f itself).
Expr map_at(const Monad& m, int level, const Expr& x, const ExprFn& f);
/// T^level mu.
Expr flatten_at(const Monad& m, int level, const Expr& x);
/// T^level eta.
Expr unit_at(const Monad& m, int level, const Expr& x);

/// Applies an atom function under every layer of x, preserving depth.
/// Throws PartialFunction when f is undefined on some atom.
Expr functor_apply(const Monad& m, const AtomFunction& f, const Expr& x);

/// An atom function backed by a finite table; lookups outside the table
/// throw PartialFunction.
AtomFunction table_function(std::vector<std::pair<Atom, Atom>> table);

/// Collects the atoms appearing anywhere in x.
void collect_atoms(const Expr& x, std::vector<Atom>& out);

}  // namespace pev
