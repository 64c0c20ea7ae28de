/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pev/errors.hpp"
#include "pev/instances.hpp"
#include "pev/stochastics.hpp"

namespace pev {

namespace {

struct AtomOrder {
  bool operator()(const Atom& a, const Atom& b) const { return compare(a, b) < 0; }
};

void require_enumerable(const Algebra& algebra) {
  if (!algebra.monad().has_fiber_enumerator()) {
    throw UnsupportedInstance("the " + algebra.monad().name() +
                              " monad has an infinite mu-fiber; decide distributions with decide_pev");
  }
}

void require_composable(const Witness& k, const Witness& h) {
  if (!k.algebra || !h.algebra || k.algebra->monad().tag() != h.algebra->monad().tag()) {
    throw NotComposable("witnesses belong to different monads");
  }
  if (k.target != h.source) throw NotComposable("the first witness does not end where the second starts");
  if (!validate_witness(k) || !validate_witness(h)) throw InvalidWitness("cannot compose an invalid witness");
}

void check_filler(const Witness& k, const Witness& h, const Expr& a) {
  const Algebra& alg = *k.algebra;
  if (alg.monad().flatten(a) != k.nested || alg.evaluate_at(2, a) != h.nested) {
    throw InternalError("constructed filler does not fit the horn");
  }
}

std::size_t multiplicity(const Entry& e) { return numerator(e.weight).convert_to<std::size_t>(); }

// Blocks of k grouped by their value, and the element slots of h (one per
// occurrence, naming the h-block copy it belongs to) grouped the same way.
struct MultisetHorn {
  std::map<Atom, std::vector<Expr>, AtomOrder> blocks;
  std::map<Atom, std::vector<std::size_t>, AtomOrder> slots;
  std::size_t groups = 0;

  MultisetHorn(const Witness& k, const Witness& h) {
    const Algebra& alg = *k.algebra;
    for (const auto& e : k.nested.entries()) {
      auto& bucket = blocks[alg.evaluate(e.value)];
      for (std::size_t c = multiplicity(e); c > 0; --c) bucket.push_back(e.value);
    }
    for (const auto& block : h.nested.entries()) {
      for (std::size_t copy = multiplicity(block); copy > 0; --copy) {
        for (const auto& element : block.value.entries()) {
          auto& bucket = slots[element.value.atom_value()];
          for (std::size_t c = multiplicity(element); c > 0; --c) bucket.push_back(groups);
        }
        ++groups;
      }
    }
    if (blocks.size() != slots.size()) throw InternalError("horn values do not match");
    for (const auto& [value, list] : blocks) {
      auto it = slots.find(value);
      if (it == slots.end() || it->second.size() != list.size()) throw InternalError("horn values do not match");
    }
  }

  // `perms[v][i]` is the k-block sent to the i-th slot of value v.
  Expr build(const std::vector<std::vector<std::size_t>>& perms) const {
    std::vector<std::vector<Expr>> grouped(groups);
    std::size_t v = 0;
    for (const auto& [value, list] : blocks) {
      const auto& targets = slots.at(value);
      for (std::size_t i = 0; i < targets.size(); ++i) grouped[targets[i]].push_back(list[perms[v][i]]);
      ++v;
    }
    std::vector<Expr> outer;
    outer.reserve(groups);
    for (auto& g : grouped) outer.push_back(make_multiset(std::move(g)));
    return make_multiset(std::move(outer));
  }

  std::vector<std::vector<std::size_t>> identity_perms() const {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& [value, list] : blocks) {
      std::vector<std::size_t> p(list.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
      perms.push_back(std::move(p));
    }
    return perms;
  }
};

Expr list_filler(const Witness& k, const Witness& h) {
  const auto& blocks = k.nested.entries();
  std::size_t next = 0;
  std::vector<Expr> outer;
  for (const auto& group : h.nested.entries()) {
    std::vector<Expr> inner;
    for (std::size_t i = 0; i < group.value.entries().size(); ++i) {
      if (next >= blocks.size()) throw InternalError("list horn is too short");
      inner.push_back(blocks[next++].value);
    }
    outer.push_back(make_list(std::move(inner)));
  }
  if (next != blocks.size()) throw InternalError("list horn is too long");
  return make_list(std::move(outer));
}

Expr action_filler(const Witness& k, const Witness& h) {
  const auto& monad = dynamic_cast<const ActionMonad&>(k.algebra->monad());
  const Expr& outer = h.nested;
  const Expr& middle = monad.payload(outer);
  return make_action(*outer.label(), make_action(*middle.label(), monad.payload(k.nested)));
}

}  // namespace

std::vector<Witness> enumerate_witnesses(const Expr& p, const Expr& q, AlgebraPtr algebra,
                                         const EngineLimits& limits) {
  require_enumerable(*algebra);
  algebra->require_in_carrier(p);
  std::vector<Witness> out;
  for (auto& k : algebra->monad().mu_fiber(p, limits.fiber_limit)) {
    Expr target = algebra->evaluate_at(1, k);
    if (target == q) out.push_back(Witness{std::move(k), p, std::move(target), algebra});
  }
  return out;
}

Expr canonical_filler(const Witness& k, const Witness& h) {
  require_composable(k, h);
  Expr a = [&] {
    switch (k.algebra->monad().tag()) {
      case MonadTag::Multiset: {
        MultisetHorn horn(k, h);
        return horn.build(horn.identity_perms());
      }
      case MonadTag::List: return list_filler(k, h);
      case MonadTag::Action: return action_filler(k, h);
      case MonadTag::Terminal: return terminal_value();
      case MonadTag::Distribution: break;
    }
    throw UnsupportedInstance("distribution witnesses compose through dilations, not explicit fillers");
  }();
  check_filler(k, h, a);
  return a;
}

std::vector<Expr> enumerate_fillers(const Witness& k, const Witness& h, const EngineLimits& limits) {
  require_composable(k, h);
  if (k.algebra->monad().tag() != MonadTag::Multiset) return {canonical_filler(k, h)};

  MultisetHorn horn(k, h);
  auto perms = horn.identity_perms();
  double count = 1;
  for (const auto& p : perms) {
    for (std::size_t i = 2; i <= p.size(); ++i) count *= static_cast<double>(i);
  }
  if (count > static_cast<double>(limits.filler_cap)) {
    throw EnumerationLimitExceeded("horn has more than " + std::to_string(limits.filler_cap) + " fillers");
  }
  std::vector<Expr> out;
  // Odometer over the per-value permutations.
  for (;;) {
    Expr a = horn.build(perms);
    check_filler(k, h, a);
    out.push_back(std::move(a));
    std::size_t v = 0;
    while (v < perms.size() && !std::next_permutation(perms[v].begin(), perms[v].end())) ++v;
    if (v == perms.size()) break;
  }
  return out;
}

Witness compose_witnesses(const Witness& k, const Witness& h) {
  require_composable(k, h);
  if (k.algebra->monad().tag() == MonadTag::Distribution) return compose_distribution_witnesses(k, h);
  const Expr a = canonical_filler(k, h);
  auto w = witness_from_nested(k.algebra, flatten_at(k.algebra->monad(), 1, a));
  if (w.source != k.source || w.target != h.target) {
    throw InternalError("composite witness has the wrong boundaries");
  }
  return w;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> ReductionGraph::index_of(const Expr& x) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
  if (it == nodes.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

bool ReductionGraph::has_edge(std::size_t from, std::size_t to) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{from, to}, [](const GraphEdge& e, const auto& key) {
    return std::pair{e.from, e.to} < key;
  });
  return it != edges.end() && it->from == from && it->to == to;
}

ReductionGraph reduction_graph(const Expr& p, AlgebraPtr algebra, const EngineLimits& limits) {
  require_enumerable(*algebra);
  algebra->require_in_carrier(p);
  const Monad& m = algebra->monad();

  std::map<Expr, std::size_t> discovered{{p, 0}};
  std::vector<Expr> order{p};
  std::vector<GraphEdge> raw;
  for (std::size_t cursor = 0; cursor < order.size(); ++cursor) {
    const Expr node = order[cursor];
    std::map<Expr, std::size_t> counts;
    for (const auto& k : m.mu_fiber(node, limits.fiber_limit)) ++counts[algebra->evaluate_at(1, k)];
    for (const auto& [target, count] : counts) {
      auto [it, inserted] = discovered.emplace(target, order.size());
      if (inserted) {
        if (order.size() >= limits.node_cap) {
          throw EnumerationLimitExceeded("reduction graph exceeds the node cap of " + std::to_string(limits.node_cap));
        }
        order.push_back(target);
      }
      raw.push_back({cursor, it->second, count});
    }
  }

  ReductionGraph g;
  g.nodes.reserve(discovered.size());
  std::vector<std::size_t> rank(order.size());
  for (const auto& [expr, index] : discovered) {
    rank[index] = g.nodes.size();
    g.nodes.push_back(expr);
  }
  for (auto e : raw) g.edges.push_back({rank[e.from], rank[e.to], e.witnesses});
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return std::pair{a.from, a.to} < std::pair{b.from, b.to}; });
  g.seed = rank[0];
  auto total = g.index_of(m.unit(algebra->evaluate_expr(p)));
  if (!total) throw InternalError("total evaluation missing from the reduction graph");
  g.total_evaluation = *total;
  return g;
}

ArsReport check_ars_properties(const ReductionGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& e : g.edges) succ[e.from].push_back(e.to);

  ArsReport report;
  report.reflexive = true;
  for (std::size_t s = 0; s < n && report.reflexive; ++s) {
    if (!g.has_edge(s, s)) {
      report.reflexive = false;
      report.counterexamples.push_back("no self-loop at node " + std::to_string(s));
    }
  }

  report.transitive = true;
  for (std::size_t a = 0; a < n && report.transitive; ++a) {
    for (auto b : succ[a]) {
      for (auto c : succ[b]) {
        if (!g.has_edge(a, c)) {
          report.transitive = false;
          report.counterexamples.push_back("edges " + std::to_string(a) + "->" + std::to_string(b) + "->" +
                                           std::to_string(c) + " without " + std::to_string(a) + "->" +
                                           std::to_string(c));
          break;
        }
      }
      if (!report.transitive) break;
    }
  }

  report.confluent = true;
  auto joinable = [&](std::size_t t, std::size_t u) {
    if (g.has_edge(t, g.total_evaluation) && g.has_edge(u, g.total_evaluation)) return true;
    const auto& st = succ[t];
    const auto& su = succ[u];
    std::size_t i = 0, j = 0;
    while (i < st.size() && j < su.size()) {
      if (st[i] == su[j]) return true;
      if (st[i] < su[j]) ++i; else ++j;
    }
    return false;
  };
  for (std::size_t s = 0; s < n && report.confluent; ++s) {
    for (std::size_t i = 0; i < succ[s].size() && report.confluent; ++i) {
      for (std::size_t j = i + 1; j < succ[s].size(); ++j) {
        if (!joinable(succ[s][i], succ[s][j])) {
          report.confluent = false;
          report.counterexamples.push_back("fork " + std::to_string(s) + " -> {" + std::to_string(succ[s][i]) + ", " +
                                           std::to_string(succ[s][j]) + "} has no common successor");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace pev
