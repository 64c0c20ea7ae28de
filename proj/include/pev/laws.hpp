/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pev/algebra.hpp"
#include "pev/monad.hpp"

namespace pev {

struct LawResult {
  std::string law;
  std::size_t checked = 0;
  /// The first offending sample, present iff the law failed.
  std::optional<Nested> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_passed() const;
  const LawResult* find(const std::string& law) const;
};

/// A monad whose multiplication loses information: the outer label of an
/// action, or the last entry of any other layer (distributions are
/// renormalized afterwards). Used to exercise failure reporting.
class FaultyMonad final : public Monad {
 public:
  explicit FaultyMonad(MonadPtr inner) : inner_(std::move(inner)) {}
  MonadTag tag() const override { return inner_->tag(); }
  Shape shape() const override { return inner_->shape(); }
  std::string name() const override { return inner_->name() + " (faulty)"; }
  Expr map(const Expr& x, const ExprFn& f) const override { return inner_->map(x, f); }
  Expr unit(const Expr& x) const override { return inner_->unit(x); }
  Expr flatten(const Expr& x) const override;
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override {
    return inner_->random_layer(rng, child);
  }

 private:
  MonadPtr inner_;
};

/// Checks the functor laws, mu . T eta = id, mu . eta T = id (depth >= 1)
/// and mu . T mu = mu . mu T (depth >= 3) on every sample. These are
/// tests on samples, not proofs.
LawReport check_monad_laws(const Monad& m, const std::vector<Nested>& samples);

/// Checks e . eta = id on every atom of the depth-1 samples and
/// e . Te = e . mu on the depth-2 samples.
LawReport check_algebra_laws(const Algebra& a, const std::vector<Nested>& samples);

/// Random expressions of the given depth over the algebra's carrier.
Expr random_expression(const Algebra& a, int depth, Rng& rng);
std::vector<Nested> random_samples(const Algebra& a, int depth, std::size_t count, Rng& rng);

}  // namespace pev
