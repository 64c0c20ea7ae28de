/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace pev;
using namespace pev::test;

namespace {

std::vector<Expr> nested_of(const std::vector<Witness>& ws) {
  std::vector<Expr> out;
  for (const auto& w : ws) out.push_back(w.nested);
  return out;
}

Witness nat(const Expr& k) { return witness_from_nested(nat_multiset(), k); }

}  // namespace

TEST_CASE("enumerate_witnesses worked cases") {
  const auto a = nat_multiset();
  CHECK(nested_of(enumerate_witnesses(ms({1, 1, 2}), ms({2, 2}), a)) == std::vector<Expr>{ms({ms({1, 1}), ms({2})})});
  CHECK(nested_of(enumerate_witnesses(ms({1, 1, 2}), ms({4}), a)) == std::vector<Expr>{ms({ms({1, 1, 2})})});
  CHECK(nested_of(enumerate_witnesses(ms({3, 4, 5}), ms({7, 5}), a)) == std::vector<Expr>{ms({ms({3, 4}), ms({5})})});
  CHECK(enumerate_witnesses(ms({3, 4, 5}), ms({8, 5}), a).empty());
  CHECK_THROWS_AS(enumerate_witnesses(line({{0, 1}}), line({{0, 1}}), convex(1)), UnsupportedInstance);
  CHECK_THROWS_AS(enumerate_witnesses(ms({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), ms({11}), a), EnumerationLimitExceeded);
}

TEST_CASE("enumerate_witnesses on lists and actions") {
  const auto l = nat_list();
  const auto ws = enumerate_witnesses(lst({1, 2, 3, 4}), lst({3, 7}), l);
  REQUIRE(ws.size() == 1);
  CHECK(ws[0].nested == lst({lst({1, 2}), lst({3, 4})}));
  CHECK(enumerate_witnesses(lst({1, 2, 3}), lst({4, 2}), l).empty());
  // zeros make several compositions evaluate alike
  CHECK(enumerate_witnesses(lst({0, 1, 0}), lst({1}), l).size() == 1);
  CHECK(enumerate_witnesses(lst({0, 0, 1}), lst({0, 1}), l).size() == 2);
  CHECK(enumerate_witnesses(lst(std::vector<Expr>{}), lst({0}), l).size() == 1);

  const auto c4 = cyclic_action(4);
  const auto aw = enumerate_witnesses(act(3, num(0)), act(2, num(1)), c4);
  REQUIRE(aw.size() == 1);
  CHECK(aw[0].nested == act(2, act(1, num(0))));
}

TEST_CASE("witness enumeration agrees with a generate-and-filter oracle") {
  const auto a = nat_multiset();
  const MultisetMonad m;
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Expr> items;
    const auto n = rng.uniform(1, 6);
    for (long long i = 0; i < n; ++i) items.push_back(num(rng.uniform(0, 3)));
    const Expr p = ms(items);
    std::set<Expr> targets;
    for (const auto& k : multiset_mu_fiber(p)) targets.insert(a->evaluate_at(1, k));
    for (const auto& t : targets) {
      std::vector<Expr> want;
      for (const auto& k : multiset_mu_fiber(p)) {
        if (a->evaluate_at(1, k) == t) want.push_back(k);
      }
      std::sort(want.begin(), want.end());
      CHECK(nested_of(enumerate_witnesses(p, t, a)) == want);
    }
  }
}

TEST_CASE("composition worked example") {
  const Witness k = nat(ms({ms({1, 1}), ms({1, 1})}));
  const Witness h = nat(ms({ms({2, 2})}));
  CHECK(k.target == h.source);
  CHECK(canonical_filler(k, h) == ms({ms({ms({1, 1}), ms({1, 1})})}));
  const auto c = compose_witnesses(k, h);
  CHECK(c.nested == ms({ms({1, 1, 1, 1})}));
  CHECK(c.source == ms({1, 1, 1, 1}));
  CHECK(c.target == ms({4}));
  const auto fillers = enumerate_fillers(k, h);
  CHECK(std::find(fillers.begin(), fillers.end(), ms({ms({ms({1, 1}), ms({1, 1})})})) != fillers.end());
  CHECK_THROWS_AS(compose_witnesses(h, k), NotComposable);
}

TEST_CASE("identity witnesses are units for composition") {
  const auto a = nat_multiset();
  const Expr p = ms({1, 2, 3, 3});
  for (const auto& h : enumerate_witnesses(p, ms({3, 6}), a)) {
    CHECK(compose_witnesses(identity_witness(p, a), h).nested == h.nested);
    CHECK(compose_witnesses(h, identity_witness(h.target, a)).nested == h.nested);
  }
}

TEST_CASE("filler counts") {
  const Witness k = nat(ms({ms({1}), ms({1})}));
  const Witness h = nat(ms({ms({1}), ms({1})}));
  const auto fillers = enumerate_fillers(k, h);
  CHECK(fillers.size() == 2);
  for (const auto& a : fillers) {
    CHECK(flatten_at(MultisetMonad{}, 0, a) == k.nested);
    CHECK(nat_multiset()->evaluate_at(2, a) == h.nested);
  }

  const auto l = nat_list();
  const auto lk = witness_from_nested(l, lst({lst({1}), lst({1})}));
  const auto lh = witness_from_nested(l, lst({lst({1}), lst({1})}));
  CHECK(enumerate_fillers(lk, lh).size() == 1);

  const auto c4 = cyclic_action(4);
  const auto ak = witness_from_nested(c4, act(2, act(1, num(0))));
  const auto ah = witness_from_nested(c4, act(0, act(2, num(1))));
  CHECK(enumerate_fillers(ak, ah).size() == 1);
  const auto composite = compose_witnesses(ak, ah);
  CHECK(composite.nested == act(0, act(3, num(0))));
  CHECK(composite.source == act(3, num(0)));
  CHECK(composite.target == act(0, num(3)));
}

TEST_CASE("reduction graph of {1,1,2}") {
  const auto g = reduction_graph(ms({1, 1, 2}), nat_multiset());
  const std::vector<Expr> nodes{ms({1, 1, 2}), ms({1, 3}), ms({2, 2}), ms({4})};
  CHECK(g.nodes.size() == 4);
  for (const auto& n : nodes) CHECK(g.index_of(n).has_value());
  const auto four = *g.index_of(ms({4}));
  CHECK(g.total_evaluation == four);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(g.has_edge(i, i));
    CHECK(g.has_edge(i, four));
  }
  CHECK(g.edges.size() == 9);
  CHECK_FALSE(g.has_edge(*g.index_of(ms({2, 2})), *g.index_of(ms({1, 3}))));
  const auto ars = check_ars_properties(g);
  CHECK(ars.reflexive);
  CHECK(ars.confluent);
  CHECK(ars.transitive);
}

TEST_CASE("reduction graph small cases") {
  const auto single = reduction_graph(ms({5}), nat_multiset());
  CHECK(single.nodes.size() == 1);
  CHECK(single.edges == std::vector<GraphEdge>{{0, 0, 1}});
  const auto ars = check_ars_properties(single);
  CHECK((ars.reflexive && ars.confluent && ars.transitive));

  const auto g = reduction_graph(ms({1, 1, 1, 1}), nat_multiset());
  const auto p = *g.index_of(ms({1, 1, 1, 1}));
  const auto mid = *g.index_of(ms({2, 2}));
  const auto top = *g.index_of(ms({4}));
  CHECK(g.has_edge(p, mid));
  CHECK(g.has_edge(mid, top));
  CHECK(g.has_edge(p, top));

  const auto t = reduction_graph(terminal_value(), unit_algebra());
  CHECK(t.nodes == std::vector<Expr>{terminal_value()});
  CHECK(t.edges == std::vector<GraphEdge>{{0, 0, 1}});
}

TEST_CASE("ars checker catches a missing transitive edge") {
  auto g = reduction_graph(ms({1, 1, 1, 1}), nat_multiset());
  const auto p = *g.index_of(ms({1, 1, 1, 1}));
  const auto top = *g.index_of(ms({4}));
  std::erase_if(g.edges, [&](const GraphEdge& e) { return e.from == p && e.to == top; });
  const auto ars = check_ars_properties(g);
  CHECK_FALSE(ars.transitive);
  CHECK_FALSE(ars.counterexamples.empty());

  auto h = reduction_graph(ms({1, 2}), nat_multiset());
  std::erase_if(h.edges, [](const GraphEdge& e) { return e.from == e.to && e.from == 0; });
  CHECK_FALSE(check_ars_properties(h).reflexive);
}

TEST_CASE("reduction graphs are reflexive and transitive across instances") {
  Rng rng(8);
  const std::vector<AlgebraPtr> algebras{nat_multiset(), nat_list(), cyclic_action(4), cyclic_action(6),
                                         std::make_shared<MonoidTableAlgebra>(std::make_shared<ListMonad>(),
                                                                              nilpotent_monoid())};
  for (const auto& a : algebras) {
    for (int i = 0; i < 15; ++i) {
      const Expr p = random_expression(*a, 1, rng);
      const auto g = reduction_graph(p, a);
      const auto ars = check_ars_properties(g);
      CHECK(ars.reflexive);
      CHECK(ars.transitive);
      CHECK(ars.confluent);
      for (std::size_t n = 0; n < g.nodes.size(); ++n) CHECK(g.has_edge(n, g.total_evaluation));
    }
  }
}

TEST_CASE("node cap") {
  EngineLimits tight;
  tight.node_cap = 3;
  CHECK_THROWS_AS(reduction_graph(ms({1, 2, 4, 8}), nat_multiset(), tight), EnumerationLimitExceeded);
}
