/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/lp.hpp"

#include "pev/errors.hpp"

namespace pev {

void LpProblem::add_equality(std::vector<Rational> coeffs, Rational value) {
  if (coeffs.size() != num_vars) {
    throw DimensionMismatch("LP row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                            std::to_string(num_vars));
  }
  rows.push_back(std::move(coeffs));
  rhs.push_back(std::move(value));
}

namespace {

// Dense tableau over [x | artificials | rhs]. Row `m` is the phase-one
// objective, holding reduced costs and minus the current objective value.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : m_(p.num_rows()), n_(p.num_vars), width_(n_ + m_ + 1), cells_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = p.rhs[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = flip ? -p.rows[i][j] : p.rows[i][j];
      at(i, n_ + i) = 1;
      at(i, width_ - 1) = flip ? -p.rhs[i] : p.rhs[i];
      basis_[i] = n_ + i;
    }
    // Objective: minimize the sum of artificials, priced out of the basis.
    for (std::size_t j = 0; j < width_; ++j) {
      if (j >= n_ && j < n_ + m_) continue;
      Rational s = 0;
      for (std::size_t i = 0; i < m_; ++i) s -= at(i, j);
      at(m_, j) = s;
    }
  }

  std::optional<std::vector<Rational>> solve() {
    for (;;) {
      // Bland: lowest-index improving column. Artificials never re-enter.
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(m_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_) break;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so some row always limits.
      if (!leave) throw InternalError("phase-one simplex found an unbounded direction");
      pivot(*leave, enter);
    }

    if (at(m_, width_ - 1) != 0) return std::nullopt;
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = at(i, width_ - 1);
    }
    return x;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (at(row, j) != 0) at(row, j) /= p;
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Rational factor = at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (at(row, j) != 0) at(i, j) -= factor * at(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible(const LpProblem& problem) {
  if (problem.rows.size() != problem.rhs.size()) throw DimensionMismatch("LP rows and right-hand side differ in length");
  for (const auto& row : problem.rows) {
    if (row.size() != problem.num_vars) throw DimensionMismatch("LP row has the wrong number of coefficients");
  }
  return Tableau(problem).solve();
}

bool lp_satisfies(const LpProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.num_vars) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (std::size_t i = 0; i < problem.rows.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < problem.num_vars; ++j) s += problem.rows[i][j] * x[j];
    if (s != problem.rhs[i]) return false;
  }
  return true;
}

}  // namespace pev
