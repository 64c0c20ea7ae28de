/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/bar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pev/errors.hpp"

namespace pev {

Simplex face(const Algebra& algebra, int j, const Simplex& x) {
  const int n = x.level;
  if (n < 1) throw IndexOutOfRange("vertices have no faces");
  if (j < 0 || j > n) {
    throw IndexOutOfRange("face index " + std::to_string(j) + " outside 0.." + std::to_string(n));
  }
  if (j < n) return {n - 1, flatten_at(algebra.monad(), j, x.value)};
  return {n - 1, algebra.evaluate_at(n, x.value)};
}

Simplex degeneracy(const Algebra& algebra, int j, const Simplex& x) {
  const int n = x.level;
  if (n < 0 || j < 0 || j > n) {
    throw IndexOutOfRange("degeneracy index " + std::to_string(j) + " outside 0.." + std::to_string(n));
  }
  return {n + 1, unit_at(algebra.monad(), j + 1, x.value)};
}

SimplicialMaps SimplicialMaps::of(const Algebra& algebra) {
  return {[&algebra](int j, const Simplex& x) { return pev::face(algebra, j, x); },
          [&algebra](int j, const Simplex& x) { return pev::degeneracy(algebra, j, x); }};
}

LawReport check_simplicial_identities(const SimplicialMaps& maps, const std::vector<Simplex>& samples) {
  LawResult faces{"d_i d_j = d_{j-1} d_i", 0, std::nullopt};
  LawResult degens{"s_i s_j = s_{j+1} s_i", 0, std::nullopt};
  LawResult mixed_low{"d_i s_j = s_{j-1} d_i (i < j)", 0, std::nullopt};
  LawResult mixed_id{"d_j s_j = d_{j+1} s_j = id", 0, std::nullopt};
  LawResult mixed_high{"d_i s_j = s_j d_{i-1} (i > j+1)", 0, std::nullopt};

  auto record = [](LawResult& r, bool holds, const Simplex& x) {
    ++r.checked;
    if (!holds && !r.counterexample) r.counterexample = Nested{x.value, x.level + 1};
  };
  const auto& d = maps.face;
  const auto& s = maps.degeneracy;

  for (const auto& x : samples) {
    if (!has_depth(x.value, x.level + 1)) throw DepthMismatch("simplex value does not match its level");
    const int n = x.level;
    for (int j = 1; j <= n && n >= 2; ++j) {
      for (int i = 0; i < j; ++i) record(faces, d(i, d(j, x)) == d(j - 1, d(i, x)), x);
    }
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) record(degens, s(i, s(j, x)) == s(j + 1, s(i, x)), x);
    }
    for (int j = 0; j <= n; ++j) {
      const Simplex up = s(j, x);
      for (int i = 0; i <= n + 1; ++i) {
        if (i < j) {
          record(mixed_low, d(i, up) == s(j - 1, d(i, x)), x);
        } else if (i == j || i == j + 1) {
          record(mixed_id, d(i, up) == x, x);
        } else {
          record(mixed_high, d(i, up) == s(j, d(i - 1, x)), x);
        }
      }
    }
  }
  LawReport report;
  for (auto* r : {&faces, &degens, &mixed_low, &mixed_id, &mixed_high}) report.results.push_back(std::move(*r));
  return report;
}

LawReport check_simplicial_identities(const Algebra& algebra, const std::vector<Simplex>& samples) {
  return check_simplicial_identities(SimplicialMaps::of(algebra), samples);
}

std::vector<Simplex> random_simplices(const Algebra& algebra, int max_level, std::size_t per_level, Rng& rng) {
  std::vector<Simplex> out;
  for (int level = 0; level <= max_level; ++level) {
    for (std::size_t i = 0; i < per_level; ++i) out.push_back({level, random_expression(algebra, level + 1, rng)});
  }
  return out;
}

Simplex fill_inner_horn(const Simplex& k, const Simplex& h, AlgebraPtr algebra) {
  if (k.level != 1 || h.level != 1) throw IndexOutOfRange("inner horns are filled from two 1-simplices");
  const Witness first = witness_from_nested(algebra, k.value);
  const Witness second = witness_from_nested(algebra, h.value);
  if (first.target != second.source) throw NotComposable("d_1 of the first edge differs from d_0 of the second");
  return {2, canonical_filler(first, second)};
}

namespace {

std::size_t locate(const std::vector<Expr>& level, const Expr& x) {
  auto it = std::lower_bound(level.begin(), level.end(), x);
  if (it == level.end() || *it != x) throw InternalError("bar complex is not closed under faces and degeneracies");
  return static_cast<std::size_t>(it - level.begin());
}

}  // namespace

TruncatedComplex build_truncated_complex(const Expr& seed, AlgebraPtr algebra, int max_level,
                                         const EngineLimits& limits) {
  if (max_level < 0 || max_level > kMaxComplexLevel) {
    throw IndexOutOfRange("truncation level must lie in 0.." + std::to_string(kMaxComplexLevel));
  }
  const Algebra& alg = *algebra;
  const Monad& m = alg.monad();
  TruncatedComplex c;
  c.max_level = max_level;
  c.levels.push_back(reduction_graph(seed, algebra, limits).nodes);

  if (max_level >= 1) {
    std::set<Expr> edges;
    for (const auto& v : c.levels[0]) {
      for (auto& k : m.mu_fiber(v, limits.fiber_limit)) edges.insert(std::move(k));
    }
    c.levels.emplace_back(edges.begin(), edges.end());
  }
  if (max_level >= 2) {
    std::map<Expr, std::vector<Witness>> by_source;
    std::vector<Witness> witnesses;
    for (const auto& k : c.levels[1]) {
      witnesses.push_back(witness_from_nested(algebra, k));
      by_source[witnesses.back().source].push_back(witnesses.back());
    }
    std::set<Expr> triangles;
    for (const auto& k : witnesses) {
      auto it = by_source.find(k.target);
      if (it == by_source.end()) continue;
      for (const auto& h : it->second) {
        for (auto& z : enumerate_fillers(k, h, limits)) triangles.insert(std::move(z));
      }
    }
    c.levels.emplace_back(triangles.begin(), triangles.end());
  }

  c.faces.resize(c.levels.size());
  c.degeneracies.resize(c.levels.size());
  for (int n = 0; n <= max_level; ++n) {
    for (const auto& x : c.levels[n]) {
      if (n >= 1) {
        std::vector<std::size_t> f;
        for (int j = 0; j <= n; ++j) f.push_back(locate(c.levels[n - 1], face(alg, j, {n, x}).value));
        c.faces[n].push_back(std::move(f));
      }
      if (n < max_level) {
        std::vector<std::size_t> s;
        for (int j = 0; j <= n; ++j) s.push_back(locate(c.levels[n + 1], degeneracy(alg, j, {n, x}).value));
        c.degeneracies[n].push_back(std::move(s));
      }
    }
  }
  return c;
}

}  // namespace pev
