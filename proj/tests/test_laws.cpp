/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "doctest.h"
#include "support.hpp"

using namespace pev;
using namespace pev::test;

namespace {

class DroppingMultiset final : public Monad {
 public:
  MonadTag tag() const override { return inner_.tag(); }
  Shape shape() const override { return inner_.shape(); }
  std::string name() const override { return "dropping"; }
  Expr map(const Expr& x, const ExprFn& f) const override { return inner_.map(x, f); }
  Expr unit(const Expr& x) const override { return inner_.unit(x); }
  Expr flatten(const Expr& x) const override {
    auto entries = inner_.flatten(x).entries();
    if (!entries.empty()) entries.erase(entries.begin());
    return make_multiset(std::move(entries));
  }
  Expr random_layer(Rng& rng, const std::function<Expr()>& child) const override {
    return inner_.random_layer(rng, child);
  }

 private:
  MultisetMonad inner_;
};

class ZeroAlgebra final : public Algebra {
 public:
  const Monad& monad() const override { return base_->monad(); }
  MonadPtr monad_ptr() const override { return base_->monad_ptr(); }
  const Carrier& carrier() const override { return base_->carrier(); }
  std::string name() const override { return "zero"; }
  Atom evaluate(const Expr&) const override { return int_atom(0); }
  Atom random_atom(Rng& rng) const override { return base_->random_atom(rng); }

 private:
  AlgebraPtr base_ = nat_multiset();
};

std::vector<Nested> samples_up_to(const Algebra& a, int depth, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Nested> out;
  for (int d = 1; d <= depth; ++d) {
    auto s = random_samples(a, d, n, rng);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace

TEST_CASE("monad laws on the worked sample") {
  const MultisetMonad m;
  const auto r = check_monad_laws(m, {{ms({1, 1, 2}), 1}});
  CHECK(r.all_passed());
  CHECK(r.find("mu . T mu = mu . mu T")->checked == 0);
}

TEST_CASE("list unit laws by hand") {
  const ListMonad m;
  const Expr x = make_list({make_list({sym("a")}), make_list({sym("b"), sym("c")})});
  // mu . eta T: wrap then flatten
  CHECK(m.unit(x) == make_list({x}));
  CHECK(m.flatten(make_list({x})) == x);
  // mu . T eta: wrap each element then flatten
  CHECK(m.map(x, [&](const Expr& y) { return m.unit(y); }) ==
        make_list({make_list({make_list({sym("a")})}), make_list({make_list({sym("b"), sym("c")})})}));
  const auto r = check_monad_laws(m, {{x, 2}});
  CHECK(r.find("mu . eta T = id")->passed());
  CHECK(r.find("mu . T eta = id")->passed());
}

TEST_CASE("laws hold on every instance") {
  const std::vector<AlgebraPtr> algebras{nat_multiset(), nat_list(), cyclic_action(4), convex(1), convex(2),
                                         unit_algebra(),
                                         std::make_shared<MonoidTableAlgebra>(std::make_shared<ListMonad>(),
                                                                              nilpotent_monoid())};
  for (const auto& a : algebras) {
    CAPTURE(a->name());
    const auto monad = check_monad_laws(a->monad(), samples_up_to(*a, 3, 60, 11));
    CHECK(monad.all_passed());
    CHECK(monad.find("mu . T mu = mu . mu T")->checked == 60);
    CHECK(check_algebra_laws(*a, samples_up_to(*a, 2, 60, 12)).all_passed());
  }
}

TEST_CASE("injected faults are caught") {
  const DroppingMultiset bad;
  const auto r = check_monad_laws(bad, samples_up_to(*nat_multiset(), 3, 50, 3));
  const auto* assoc = r.find("mu . T mu = mu . mu T");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed());
  REQUIRE(assoc->counterexample);
  CHECK(assoc->counterexample->depth == 3);

  const ZeroAlgebra zero;
  const auto z = check_algebra_laws(zero, {{ms({1}), 1}});
  const auto* unit = z.find("e . eta = id");
  REQUIRE(unit->counterexample);
  CHECK(unit->counterexample->value == num(1));
}

TEST_CASE("algebra laws on the worked sample") {
  const auto a = nat_multiset();
  const Expr k = ms({ms({3, 4}), ms({5})});
  CHECK(a->evaluate(a->evaluate_at(1, k)) == int_atom(12));
  CHECK(a->evaluate(a->monad().flatten(k)) == int_atom(12));
  CHECK(check_algebra_laws(*a, {{k, 2}}).all_passed());
}

TEST_CASE("law preconditions") {
  const auto a = nat_multiset();
  CHECK_THROWS_AS(check_monad_laws(a->monad(), {{num(1), 0}}), DepthMismatch);
  CHECK_THROWS_AS(check_monad_laws(a->monad(), {{ms({1}), 2}}), DepthMismatch);
  CHECK_THROWS_AS(check_algebra_laws(*a, {{ms({-1}), 1}}), CarrierMismatch);
  const auto c4 = cyclic_action(4);
  CHECK_THROWS_AS(check_algebra_laws(*c4, {{act(1, num(9)), 1}}), CarrierMismatch);
}

TEST_CASE("random samples are reproducible") {
  const auto a = nat_multiset();
  Rng r1(42), r2(42);
  const auto s1 = random_samples(*a, 3, 20, r1);
  const auto s2 = random_samples(*a, 3, 20, r2);
  CHECK(s1 == s2);
  for (const auto& s : s1) CHECK(has_depth(s.value, 3));
}
