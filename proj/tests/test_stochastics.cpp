/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "doctest.h"
#include "support.hpp"

using namespace pev;
using namespace pev::test;

namespace {

const Expr half02 = line({{0, q(1, 2)}, {2, q(1, 2)}});
const Expr spread012 = line({{0, q(1, 4)}, {1, q(1, 2)}, {2, q(1, 4)}});

Expr random_line(Rng& rng, long long max_points) {
  const auto n = rng.uniform(1, max_points);
  std::vector<std::pair<Rational, Rational>> terms;
  for (long long i = 0; i < n; ++i) terms.emplace_back(Rational(rng.uniform(-4, 4), rng.uniform(1, 3)), rng.uniform(1, 5));
  Rational total = 0;
  for (auto& t : terms) total += t.second;
  for (auto& t : terms) t.second /= total;
  return line(terms);
}

}  // namespace

TEST_CASE("decide_pev worked cases") {
  const auto r1 = convex(1);
  const auto total = decide_pev(half02, dirac(pt1(1)), r1);
  REQUIRE(total);
  CHECK(total->nested == dirac(half02));

  const auto w = decide_pev(half02, spread012, r1);
  REQUIRE(w);
  CHECK(validate_witness(*w));
  CHECK(w->source == half02);
  CHECK(w->target == spread012);
  CHECK(w->nested == dist({{dirac(pt1(0)), q(1, 4)}, {half02, q(1, 2)}, {dirac(pt1(2)), q(1, 4)}}));

  CHECK_FALSE(decide_pev(dirac(pt1(1)), half02, r1));
  CHECK_THROWS_AS(decide_pev(dist({{pt({0, 0}), 1}}), dirac(pt1(0)), r1), DimensionMismatch);
}

TEST_CASE("decide_pev in the plane") {
  const auto r2 = convex(2);
  const Expr square = dist({{pt({0, 0}), q(1, 4)}, {pt({2, 0}), q(1, 4)}, {pt({0, 2}), q(1, 4)}, {pt({2, 2}), q(1, 4)}});
  const Expr columns = dist({{pt({1, 0}), q(1, 2)}, {pt({1, 2}), q(1, 2)}});
  const Expr diagonal = dist({{pt({0, 0}), q(1, 2)}, {pt({2, 2}), q(1, 2)}});
  const auto w = decide_pev(square, dist({{pt({1, 1}), 1}}), r2);
  REQUIRE(w);
  CHECK(check_total_evaluation_law(*w));
  CHECK(decide_pev(square, columns, r2));
  CHECK_FALSE(decide_pev(columns, square, r2));
  CHECK_FALSE(decide_pev(square, diagonal, r2));
  CHECK_FALSE(decide_pev(diagonal, square, r2));
}

TEST_CASE("decide_pev is reflexive and respects means") {
  const auto r1 = convex(1);
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const Expr p = random_line(rng, 4);
    const auto self = decide_pev(p, p, r1);
    REQUIRE(self);
    CHECK(validate_witness(*self));
    const Expr shifted = dist_pushforward(
        [](const Atom& a) { return point_atom({std::get<Point>(a).coords[0] + 1}); }, p);
    CHECK_FALSE(decide_pev(p, shifted, r1));
  }
}

TEST_CASE("sosd_1d") {
  CHECK(sosd_1d(half02, dirac(pt1(1))));
  CHECK_FALSE(sosd_1d(dirac(pt1(1)), half02));
  CHECK(sosd_1d(half02, half02));
  CHECK(sosd_1d(half02, spread012));
  CHECK_FALSE(sosd_1d(half02, dirac(pt1(2))));
}

TEST_CASE("wasserstein1_1d") {
  CHECK(wasserstein1_1d(half02, half02) == 0);
  CHECK(wasserstein1_1d(dirac(pt1(0)), dirac(pt1(1))) == 1);
  CHECK(wasserstein1_1d(half02, dirac(pt1(1))) == 1);
  CHECK(wasserstein1_1d(dirac(pt1(1)), half02) == 1);
  CHECK(wasserstein1_1d(dirac(pt1(q(-1, 2))), dirac(pt1(q(1, 3)))) == q(5, 6));
}

TEST_CASE("lift_decomposition") {
  const AtomFunction id = [](const Atom& a) { return a; };
  const Expr p = dist({{num(0), q(1, 4)}, {num(1), q(1, 4)}, {num(2), q(1, 2)}});
  CHECK(lift_decomposition(p, dirac(p), id) == dirac(p));

  const AtomFunction f = table_function({{int_atom(0), sym_atom("a")}, {int_atom(1), sym_atom("a")},
                                         {int_atom(2), sym_atom("b")}});
  const Expr ab = dist({{sym("a"), q(1, 2)}, {sym("b"), q(1, 2)}});
  CHECK(lift_decomposition(p, dirac(ab), f) == dirac(p));

  const Expr alpha = dist({{dirac(sym("a")), q(1, 2)}, {dirac(sym("b")), q(1, 2)}});
  const Expr beta = lift_decomposition(p, alpha, f);
  CHECK(beta == dist({{dist({{num(0), q(1, 2)}, {num(1), q(1, 2)}}), q(1, 2)}, {dirac(num(2)), q(1, 2)}}));
  CHECK(dist_average(beta) == p);

  CHECK_THROWS_AS(lift_decomposition(p, dirac(dirac(sym("a"))), f), PreconditionViolated);
}

TEST_CASE("dilations from witnesses") {
  const auto r1 = convex(1);
  const auto single = dilation_from_witness(dirac(half02), dirac(pt1(1)), *r1);
  CHECK(single.at(point_atom({1})) == half02);

  const auto dirac_kernel = dilation_from_witness(identity_witness(spread012, r1).nested, spread012, *r1);
  for (const auto& e : spread012.entries()) CHECK(dirac_kernel.at(e.value.atom_value()) == dirac(e.value));

  const Expr r = dist({{dirac(pt1(0)), q(1, 4)}, {half02, q(1, 2)}, {dirac(pt1(2)), q(1, 4)}});
  const auto k = dilation_from_witness(r, spread012, *r1);
  CHECK(k.at(point_atom({0})) == dirac(pt1(0)));
  CHECK(k.at(point_atom({1})) == half02);
  CHECK(k.at(point_atom({2})) == dirac(pt1(2)));
  CHECK(witness_from_dilation(k, *r1) == r);

  // two inner distributions with the same barycenter merge by conditioning
  const Expr two = dist({{line({{0, q(1, 2)}, {2, q(1, 2)}}), q(1, 2)}, {line({{-1, q(1, 2)}, {3, q(1, 2)}}), q(1, 2)}});
  const auto merged = dilation_from_witness(two, dirac(pt1(1)), *r1);
  CHECK(merged.at(point_atom({1})) == line({{-1, q(1, 4)}, {0, q(1, 4)}, {2, q(1, 4)}, {3, q(1, 4)}}));
  const Expr back = witness_from_dilation(merged, *r1);
  CHECK(dist_average(back) == dist_average(two));

  CHECK_THROWS_AS(dilation_from_witness(dirac(half02), dirac(pt1(2)), *r1), PreconditionViolated);
  Dilation bad{{{point_atom({1}), dirac(pt1(0))}}, dirac(pt1(1))};
  CHECK_THROWS_AS(witness_from_dilation(bad, *r1), InvalidDilation);
  CHECK(witness_from_dilation(dirac_dilation(half02), *r1) == identity_witness(half02, r1).nested);
}

TEST_CASE("compose_kernels") {
  Dilation k1{{{point_atom({1}), half02}}, dirac(pt1(1))};
  Dilation k2{{{point_atom({0}), line({{-1, q(1, 2)}, {1, q(1, 2)}})}, {point_atom({2}), line({{1, q(1, 2)}, {3, q(1, 2)}})}},
              half02};
  const auto c = compose_kernels(k1, k2);
  CHECK(c.at(point_atom({1})) == line({{-1, q(1, 4)}, {1, q(1, 2)}, {3, q(1, 4)}}));
  CHECK(barycenter(1, c.at(point_atom({1}))) == Point{{q(1)}});

  const auto right = compose_kernels(k1, dirac_dilation(half02));
  CHECK(right.at(point_atom({1})) == k1.at(point_atom({1})));
  const auto left = compose_kernels(dirac_dilation(half02), k2);
  for (const auto& e : half02.entries()) CHECK(left.at(e.value.atom_value()) == k2.at(e.value.atom_value()));

  CHECK_THROWS_AS(compose_kernels(k1, dirac_dilation(dirac(pt1(1)))), DomainMismatch);
}

TEST_CASE("distribution witnesses compose") {
  const auto r1 = convex(1);
  const Expr wide = line({{-1, q(1, 4)}, {1, q(1, 2)}, {3, q(1, 4)}});
  const auto k = decide_pev(wide, half02, r1);
  const auto h = decide_pev(half02, dirac(pt1(1)), r1);
  REQUIRE(k);
  REQUIRE(h);
  const auto c = compose_witnesses(*k, *h);
  CHECK(c.source == wide);
  CHECK(c.target == dirac(pt1(1)));
  CHECK(validate_witness(c));
  CHECK(decide_pev(wide, dirac(pt1(1)), r1));
  CHECK_THROWS_AS(compose_witnesses(*h, *k), NotComposable);
}

TEST_CASE("sosd agrees with decide_pev on random pairs") {
  const auto r1 = convex(1);
  Rng rng(31);
  int yes = 0;
  for (int i = 0; i < 200; ++i) {
    const Expr p = random_line(rng, 4);
    // Mix in a spread of p half the time so positive cases are common.
    Expr qd = random_line(rng, 3);
    if (rng.coin()) {
      const auto lifted = decide_pev(p, total_evaluation_witness(p, r1).target, r1);
      qd = rng.coin() ? lifted->target : p;
    }
    const bool s = sosd_1d(p, qd);
    const auto w = decide_pev(p, qd, r1);
    CHECK(s == w.has_value());
    if (w) {
      ++yes;
      CHECK(validate_witness(*w));
      CHECK(check_total_evaluation_law(*w));
    }
  }
  CHECK(yes > 20);
}
