/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pev/rational.hpp"

namespace pev {

/// Feasibility problem { x : A x = b, x >= 0 } with exact coefficients.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  /// Optional variable names, used only for diagnostics.
  std::vector<std::string> labels;

  explicit LpProblem(std::size_t vars = 0) : num_vars(vars) {}

  /// Appends the row sum_j coeffs[j] x_j = value. Throws DimensionMismatch
  /// if coeffs has the wrong length.
  void add_equality(std::vector<Rational> coeffs, Rational value);
  std::size_t num_rows() const { return rows.size(); }
};

/// Phase-one simplex with Bland's rule. Returns a basic feasible solution,
/// or nullopt when the system is infeasible. Deterministic and terminating.
std::optional<std::vector<Rational>> lp_feasible(const LpProblem& problem);

/// True iff x satisfies every equality and is non-negative.
bool lp_satisfies(const LpProblem& problem, const std::vector<Rational>& x);

}  // namespace pev
