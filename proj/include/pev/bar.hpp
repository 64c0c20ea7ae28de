/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pev/engine.hpp"
#include "pev/laws.hpp"

namespace pev {

/// An element of T^{level+1} A.
struct Simplex {
  int level = 0;
  Expr value;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// d_j : A_{n} -> A_{n-1} for a simplex x at level n >= 1 and 0 <= j <= n.
/// For j < n this flattens layers j and j+1 counted from the outside
/// (T^j mu); d_n evaluates the innermost layer (T^n e). On
/// x = {{{1,1},{1,1}}} over (N,+): d_0 = {{1,1},{1,1}}, d_1 = {{1,1,1,1}},
/// d_2 = {{2,2}}.
Simplex face(const Algebra& algebra, int j, const Simplex& x);

/// s_j : A_n -> A_{n+1} for 0 <= j <= n, inserting a unit under j+1
/// layers (T^{j+1} eta).
Simplex degeneracy(const Algebra& algebra, int j, const Simplex& x);

/// Face and degeneracy maps under test. The default uses face/degeneracy.
struct SimplicialMaps {
  std::function<Simplex(int, const Simplex&)> face;
  std::function<Simplex(int, const Simplex&)> degeneracy;

  static SimplicialMaps of(const Algebra& algebra);
};

/// Checks every simplicial identity among the face and degeneracy maps on
/// each sample, for example d_i d_j = d_{j-1} d_i when i < j.
LawReport check_simplicial_identities(const SimplicialMaps& maps, const std::vector<Simplex>& samples);
LawReport check_simplicial_identities(const Algebra& algebra, const std::vector<Simplex>& samples);

/// Random simplices at each level 0..max_level, `per_level` of each.
std::vector<Simplex> random_simplices(const Algebra& algebra, int max_level, std::size_t per_level, Rng& rng);

/// The 2-simplex z with d_0(z) = k and d_2(z) = h, for 1-simplices with
/// d_1(k) = d_0(h). d_1(z) is the composite edge.
Simplex fill_inner_horn(const Simplex& k, const Simplex& h, AlgebraPtr algebra);

/// Levels 0..max_level of the bar construction reachable from a seed,
/// with face and degeneracy incidences stored as indices into the level
/// below / above.
struct TruncatedComplex {
  int max_level = 0;
  std::vector<std::vector<Expr>> levels;
  /// faces[n][i][j] = index in levels[n-1] of d_j(levels[n][i]); faces[0] is empty.
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  /// degeneracies[n][i][j] = index in levels[n+1] of s_j(levels[n][i]);
  /// empty at the top level.
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies;
};

inline constexpr int kMaxComplexLevel = 2;

TruncatedComplex build_truncated_complex(const Expr& seed, AlgebraPtr algebra, int max_level,
                                         const EngineLimits& limits = {});

}  // namespace pev
