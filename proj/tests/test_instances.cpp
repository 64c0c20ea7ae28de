/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace pev;
using namespace pev::test;

namespace {

// All multiset partitions of xs by brute force: assign each position a block
// label in restricted-growth form, then canonicalize.
std::set<Expr> brute_partitions(const std::vector<long long>& xs) {
  std::set<Expr> out;
  const std::size_t n = xs.size();
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<std::vector<Expr>> parts(blocks);
      for (std::size_t j = 0; j < n; ++j) parts[label[j]].push_back(num(xs[j]));
      std::vector<Expr> outer;
      for (auto& b : parts) outer.push_back(ms(b));
      out.insert(ms(outer));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      assign(i + 1, std::max(blocks, b + 1));
    }
  };
  assign(0, 0);
  return out;
}

}  // namespace

TEST_CASE("multiset fiber of {1,1,2}") {
  const auto fiber = multiset_mu_fiber(ms({1, 1, 2}));
  CHECK(fiber.size() == 4);
  const std::set<Expr> got(fiber.begin(), fiber.end());
  const std::set<Expr> want{ms({ms({1}), ms({1}), ms({2})}), ms({ms({1, 1}), ms({2})}), ms({ms({1, 2}), ms({1})}),
                            ms({ms({1, 1, 2})})};
  CHECK(got == want);
  CHECK(std::is_sorted(fiber.begin(), fiber.end()));
}

TEST_CASE("multiset fiber small cases") {
  CHECK(multiset_mu_fiber(ms({7})) == std::vector<Expr>{ms({ms({7})})});
  const auto f = multiset_mu_fiber(ms({3, 4, 5}));
  CHECK(std::find(f.begin(), f.end(), ms({ms({3, 4}), ms({5})})) != f.end());
  const Expr empty = ms(std::vector<Expr>{});
  CHECK(multiset_mu_fiber(empty) == std::vector<Expr>{empty, ms({empty})});
  CHECK(list_mu_fiber(lst(std::vector<Expr>{})).size() == 2);
  CHECK_THROWS_AS(multiset_mu_fiber(ms({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), EnumerationLimitExceeded);
}

TEST_CASE("multiset fiber agrees with brute force") {
  Rng rng(7);
  const MultisetMonad m;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<long long> xs;
    const auto n = rng.uniform(1, 6);
    for (long long i = 0; i < n; ++i) xs.push_back(rng.uniform(0, 3));
    std::vector<Expr> items;
    for (auto x : xs) items.push_back(num(x));
    const auto fiber = multiset_mu_fiber(ms(items));
    const std::set<Expr> got(fiber.begin(), fiber.end());
    CHECK(got.size() == fiber.size());
    CHECK(got == brute_partitions(xs));
    for (const auto& k : fiber) CHECK(m.flatten(k) == ms(items));
  }
}

TEST_CASE("multiset fiber sizes are Bell numbers for distinct atoms") {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877};
  for (long long n = 1; n <= 7; ++n) {
    std::vector<Expr> items;
    for (long long i = 0; i < n; ++i) items.push_back(num(i));
    CHECK(multiset_mu_fiber(ms(items)).size() == bell[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("list fiber") {
  const auto ab = list_mu_fiber(make_list({sym("a"), sym("b")}));
  CHECK(ab.size() == 2);
  CHECK(std::find(ab.begin(), ab.end(), make_list({make_list({sym("a")}), make_list({sym("b")})})) != ab.end());
  CHECK(std::find(ab.begin(), ab.end(), make_list({make_list({sym("a"), sym("b")})})) != ab.end());
  CHECK(list_mu_fiber(lst({5})) == std::vector<Expr>{lst({lst({5})})});
  const ListMonad m;
  for (long long n = 1; n <= 10; ++n) {
    std::vector<Expr> items;
    for (long long i = 0; i < n; ++i) items.push_back(num(i % 3));
    const auto f = list_mu_fiber(lst(items));
    CHECK(f.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::set<Expr>(f.begin(), f.end()).size() == f.size());
    for (const auto& k : f) CHECK(m.flatten(k) == lst(items));
  }
  CHECK_THROWS_AS(list_mu_fiber(lst({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), EnumerationLimitExceeded);
}

TEST_CASE("monoid tables") {
  const auto c4 = Monoid::cyclic(4);
  CHECK(c4.is_group());
  CHECK(c4.is_commutative());
  CHECK(c4.inverse(1) == 3);
  const auto nil = nilpotent_monoid();
  CHECK_FALSE(nil.is_group());
  CHECK_THROWS_AS(Monoid::from_table({int_atom(0), int_atom(1)}, {{0, 1}, {0, 0}}), InvalidStructure);
  CHECK_THROWS_AS(Monoid::from_table({int_atom(0), int_atom(1)}, {{0, 1}}), InvalidStructure);
}

TEST_CASE("action witnesses") {
  const auto c4 = cyclic_action(4);
  const auto w = action_witnesses(*c4, act(3, num(0)), act(2, num(1)));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == ActionTriple{int_atom(2), int_atom(1), int_atom(0)});

  const auto self = action_witnesses(*c4, act(1, num(2)), act(1, num(2)));
  REQUIRE(self.size() == 1);
  CHECK(self[0] == ActionTriple{int_atom(1), int_atom(0), int_atom(2)});

  // group case: exactly one witness whenever q = (h, h^-1 g x)
  const auto c6 = cyclic_action(6);
  for (long long g = 0; g < 6; ++g) {
    for (long long h = 0; h < 6; ++h) {
      for (long long x = 0; x < 6; ++x) {
        const long long ell = ((g - h) % 6 + 6) % 6;
        const auto ws = action_witnesses(*c6, act(g, num(x)), act(h, num((ell + x) % 6)));
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].ell == int_atom(ell));
        CHECK(action_witnesses(*c6, act(g, num(x)), act(h, num((ell + x + 1) % 6))).empty());
      }
    }
  }
}

TEST_CASE("action witnesses over a monoid scan all elements") {
  auto monad = std::make_shared<ActionMonad>(nilpotent_monoid());
  const auto alg = ActionAlgebra::cayley(monad);
  // g = 2 (absorbing) from x = 0: every ell with h*ell = 2 and ell*0 = y
  const auto ws = action_witnesses(*alg, act(2, num(0)), act(2, num(2)));
  CHECK(ws.size() == 1);
  CHECK(ws[0].ell == int_atom(2));
  const auto more = action_witnesses(*alg, act(2, num(1)), act(2, num(2)));
  CHECK(more.size() == 2);
}

TEST_CASE("pushforward and averaging") {
  const Expr p = dist({{num(0), q(1, 4)}, {num(1), q(1, 4)}, {num(2), q(1, 2)}});
  const AtomFunction f = table_function({{int_atom(0), sym_atom("a")}, {int_atom(1), sym_atom("a")},
                                         {int_atom(2), sym_atom("b")}});
  CHECK(dist_pushforward(f, p) == dist({{sym("a"), q(1, 2)}, {sym("b"), q(1, 2)}}));
  CHECK(dist_pushforward([](const Atom& a) { return a; }, p) == p);
  CHECK(dist_pushforward([](const Atom&) { return sym_atom("c"); }, p) == dirac(sym("c")));
  CHECK_THROWS_AS(dist_pushforward(table_function({{int_atom(0), int_atom(0)}}), p), PartialFunction);

  const Expr fair = dist({{sym("H"), q(1, 2)}, {sym("T"), q(1, 2)}});
  const Expr xi = dist({{fair, q(1, 2)}, {dirac(sym("H")), q(1, 2)}});
  CHECK(dist_average(xi) == dist({{sym("H"), q(3, 4)}, {sym("T"), q(1, 4)}}));
  CHECK(dist_average(dirac(p)) == p);
  CHECK(dist_average(dist({{dirac(sym("a")), q(1, 2)}, {dirac(sym("b")), q(1, 2)}})) ==
        dist({{sym("a"), q(1, 2)}, {sym("b"), q(1, 2)}}));
}

TEST_CASE("averaging commutes with merging equal inner distributions") {
  const Expr a = line({{0, q(1, 3)}, {3, q(2, 3)}});
  const Expr b = line({{1, 1}});
  // a written twice with split weight versus once
  const Expr merged = dist({{a, q(1, 2)}, {b, q(1, 2)}});
  CHECK(dist_average(merged) == line({{0, q(1, 6)}, {1, q(1, 2)}, {3, q(1, 3)}}));
  const Expr split = make_distribution({{a, q(1, 4)}, {a, q(1, 4)}, {b, q(1, 2)}});
  CHECK(split == merged);
  CHECK(dist_average(split) == dist_average(merged));
}

TEST_CASE("barycenter") {
  const auto r1 = convex(1);
  CHECK(barycenter(*r1, dirac(pt1(5))) == Point{{q(5)}});
  CHECK(barycenter(*r1, line({{0, q(1, 2)}, {2, q(1, 2)}})) == Point{{q(1)}});
  const auto r2 = convex(2);
  const Expr tri = dist({{pt({0, 0}), q(1, 3)}, {pt({3, 0}), q(1, 3)}, {pt({0, 3}), q(1, 3)}});
  CHECK(barycenter(*r2, tri) == Point{{q(1), q(1)}});
  CHECK_THROWS_AS(barycenter(*r1, tri), DimensionMismatch);
}

TEST_CASE("terminal monad collapses everything") {
  const TerminalMonad t;
  CHECK(t.flatten(terminal_value()) == terminal_value());
  CHECK(t.unit(num(4)) == terminal_value());
  const auto alg = unit_algebra();
  CHECK(to_string(alg->evaluate(terminal_value())) == "*");
}
