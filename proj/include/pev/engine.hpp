/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pev/witness.hpp"

namespace pev {

struct EngineLimits {
  /// Largest expression whose mu-fiber is enumerated.
  std::size_t fiber_limit = kDefaultFiberLimit;
  /// Largest reduction graph, in nodes.
  std::size_t node_cap = 10000;
  /// Largest number of fillers enumerate_fillers may produce.
  std::size_t filler_cap = 100000;
};

/// Every witness of p -> q, in canonical order of the nested value. Empty
/// iff there is no partial evaluation. Distributions are rejected with
/// UnsupportedInstance; use decide_pev for them.
std::vector<Witness> enumerate_witnesses(const Expr& p, const Expr& q, AlgebraPtr algebra,
                                         const EngineLimits& limits = {});

/// The deterministic depth-3 filler a of the horn (k, h): mu(a) = k.nested
/// and TTe(a) = h.nested. Multisets match blocks of k to occurrences in h
/// value by value in canonical order; lists and actions admit exactly one.
Expr canonical_filler(const Witness& k, const Witness& h);

/// All fillers of the horn (k, h), one per value-preserving matching of
/// k's blocks onto the elements of h. Distinct matchings of equal blocks
/// yield equal values, which are kept.
std::vector<Expr> enumerate_fillers(const Witness& k, const Witness& h, const EngineLimits& limits = {});

/// Composite of k : p -> q and h : q -> r, a witness p -> r.
Witness compose_witnesses(const Witness& k, const Witness& h);

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t witnesses = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// The partial-evaluation relation restricted to everything reachable from
/// a seed expression.
struct ReductionGraph {
  std::vector<Expr> nodes;  // canonical order
  std::vector<GraphEdge> edges;  // sorted by (from, to)
  std::size_t seed = 0;
  std::size_t total_evaluation = 0;

  std::optional<std::size_t> index_of(const Expr& x) const;
  bool has_edge(std::size_t from, std::size_t to) const;
};

ReductionGraph reduction_graph(const Expr& p, AlgebraPtr algebra, const EngineLimits& limits = {});

struct ArsReport {
  bool reflexive = false;
  bool confluent = false;
  bool transitive = false;
  /// One description per failed property.
  std::vector<std::string> counterexamples;
};

ArsReport check_ars_properties(const ReductionGraph& g);

}  // namespace pev
