/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include "pev/algebra.hpp"
#include "pev/expr.hpp"

namespace pev {

/// A partial evaluation of `source` into `target`: a depth-2 expression k
/// with mu(k) = source and Te(k) = target.
struct Witness {
  Expr nested;
  Expr source;
  Expr target;
  AlgebraPtr algebra;
};

/// Computes both boundaries of k. The result is valid by construction.
Witness witness_from_nested(AlgebraPtr algebra, Expr k);

/// T eta (p): the witness of p into itself.
Witness identity_witness(const Expr& p, AlgebraPtr algebra);

/// eta (p): the witness of p into eta(e(p)), its total evaluation.
Witness total_evaluation_witness(const Expr& p, AlgebraPtr algebra);

/// True iff mu(k) == source and Te(k) == target exactly. Malformed inputs
/// yield false rather than an exception.
bool validate_witness(const Witness& w);

/// e(source) == e(target). Throws InvalidWitness when w does not validate.
bool check_total_evaluation_law(const Witness& w);

}  // namespace pev
