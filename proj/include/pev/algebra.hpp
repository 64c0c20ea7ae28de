/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pev/expr.hpp"
#include "pev/monad.hpp"
#include "pev/rng.hpp"

namespace pev {

/// The underlying set of an algebra. Either an explicit finite list of
/// atoms or a lazily described countable set.
class Carrier {
 public:
  enum class Kind { Finite, Naturals, RationalSpace };

  /// Throws InvalidStructure on duplicate atoms.
  static Carrier finite(std::vector<Atom> atoms);
  static Carrier naturals();
  /// Points of Q^dim accepted by `admissible` (all of Q^dim by default).
  static Carrier rational_space(std::size_t dim,
                                std::function<bool(const Point&)> admissible = {});

  Kind kind() const { return kind_; }
  bool contains(const Atom& a) const;
  /// Canonically ordered atoms; empty for lazy carriers.
  const std::vector<Atom>& elements() const { return elements_; }
  /// Index of `a` in elements(); only meaningful for finite carriers.
  std::optional<std::size_t> index_of(const Atom& a) const;
  std::size_t dim() const { return dim_; }
  std::string describe() const;

 private:
  Kind kind_ = Kind::Finite;
  std::vector<Atom> elements_;
  std::size_t dim_ = 0;
  std::function<bool(const Point&)> admissible_;
};

/// An algebra (A, e) for a monad: a carrier plus an evaluation of depth-1
/// expressions that is compatible with unit and multiplication.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual const Monad& monad() const = 0;
  virtual MonadPtr monad_ptr() const = 0;
  virtual const Carrier& carrier() const = 0;
  virtual std::string name() const = 0;

  /// e : TA -> A. Throws CarrierMismatch when x mentions atoms outside the
  /// carrier and DepthMismatch when x is not a depth-1 expression.
  virtual Atom evaluate(const Expr& x) const = 0;

  virtual Atom random_atom(Rng& rng) const = 0;

  /// e packaged as an expression function, for use with map_at.
  Expr evaluate_expr(const Expr& x) const { return Expr::atom(evaluate(x)); }
  /// T^level e.
  Expr evaluate_at(int level, const Expr& x) const;
  /// Throws CarrierMismatch unless every atom of x lies in the carrier.
  void require_in_carrier(const Expr& x) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace pev
