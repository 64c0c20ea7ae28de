/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/witness.hpp"

#include "pev/errors.hpp"

namespace pev {

Witness witness_from_nested(AlgebraPtr algebra, Expr k) {
  Expr source = algebra->monad().flatten(k);
  Expr target = algebra->evaluate_at(1, k);
  return Witness{std::move(k), std::move(source), std::move(target), std::move(algebra)};
}

Witness identity_witness(const Expr& p, AlgebraPtr algebra) {
  algebra->require_in_carrier(p);
  const Monad& m = algebra->monad();
  Expr k = unit_at(m, 1, p);
  return Witness{std::move(k), p, p, std::move(algebra)};
}

Witness total_evaluation_witness(const Expr& p, AlgebraPtr algebra) {
  algebra->require_in_carrier(p);
  const Monad& m = algebra->monad();
  Expr target = m.unit(algebra->evaluate_expr(p));
  return Witness{m.unit(p), p, std::move(target), std::move(algebra)};
}

bool validate_witness(const Witness& w) {
  if (!w.algebra) return false;
  try {
    return w.algebra->monad().flatten(w.nested) == w.source && w.algebra->evaluate_at(1, w.nested) == w.target;
  } catch (const Error&) {
    return false;
  }
}

bool check_total_evaluation_law(const Witness& w) {
  if (!validate_witness(w)) throw InvalidWitness("witness does not satisfy mu(k) = source and Te(k) = target");
  return compare(w.algebra->evaluate(w.source), w.algebra->evaluate(w.target)) == 0;
}

}  // namespace pev
