/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/laws.hpp"

#include "pev/errors.hpp"

namespace pev {

bool LawReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& r : results) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string law) { result_.law = std::move(law); }

  void record(bool holds, const Nested& sample) {
    ++result_.checked;
    if (!holds && !result_.counterexample) result_.counterexample = sample;
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

void require_sample(const Nested& s, int min_depth) {
  if (s.depth < min_depth) {
    throw DepthMismatch("sample of depth " + std::to_string(s.depth) + " cannot feed a law needing depth " +
                        std::to_string(min_depth));
  }
  if (!has_depth(s.value, s.depth)) {
    throw DepthMismatch("sample does not have uniform depth " + std::to_string(s.depth));
  }
}

// Two unrelated atom functions for the composition law.
Atom scramble(const Atom& a) { return Atom{Integer(to_string(a).size() % 3)}; }
Atom shift(const Atom& a) {
  if (const auto* i = std::get_if<Integer>(&a)) return Atom{*i * 2 + 1};
  return a;
}

}  // namespace

Expr FaultyMonad::flatten(const Expr& x) const {
  const Expr y = inner_->flatten(x);
  switch (y.shape()) {
    case Shape::Action:
      return x.entries().front().value;
    case Shape::Unit:
      return y;
    case Shape::Distribution: {
      auto entries = y.entries();
      if (entries.size() < 2) return y;
      entries.pop_back();
      Rational total = 0;
      for (const auto& e : entries) total += e.weight;
      for (auto& e : entries) e.weight /= total;
      return Expr::layer(y.shape(), std::move(entries), y.label());
    }
    default: {
      auto entries = y.entries();
      if (entries.empty()) return y;
      entries.pop_back();
      return Expr::layer(y.shape(), std::move(entries), y.label());
    }
  }
}

LawReport check_monad_laws(const Monad& m, const std::vector<Nested>& samples) {
  Tally functor_identity("functor identity");
  Tally functor_composition("functor composition");
  Tally left_unit("mu . eta T = id");
  Tally right_unit("mu . T eta = id");
  Tally associativity("mu . T mu = mu . mu T");

  const ExprFn identity = [](const Expr& y) { return y; };
  const ExprFn unit = [&](const Expr& y) { return m.unit(y); };
  const ExprFn flatten = [&](const Expr& y) { return m.flatten(y); };

  for (const auto& s : samples) {
    require_sample(s, 1);
    const Expr& x = s.value;
    functor_identity.record(m.map(x, identity) == x, s);
    const Expr fg = functor_apply(m, shift, functor_apply(m, scramble, x));
    const Expr composed = functor_apply(m, [](const Atom& a) { return shift(scramble(a)); }, x);
    functor_composition.record(fg == composed, s);
    left_unit.record(m.flatten(m.unit(x)) == x, s);
    right_unit.record(m.flatten(m.map(x, unit)) == x, s);
    if (s.depth >= 3) {
      associativity.record(m.flatten(m.map(x, flatten)) == m.flatten(m.flatten(x)), s);
    }
  }

  LawReport report;
  report.results.push_back(functor_identity.take());
  report.results.push_back(functor_composition.take());
  report.results.push_back(left_unit.take());
  report.results.push_back(right_unit.take());
  report.results.push_back(associativity.take());
  return report;
}

LawReport check_algebra_laws(const Algebra& a, const std::vector<Nested>& samples) {
  Tally unit_law("e . eta = id");
  Tally mult_law("e . Te = e . mu");
  const Monad& m = a.monad();

  auto check_atom = [&](const Atom& atom) {
    const bool holds = compare(a.evaluate(m.unit(Expr::atom(atom))), atom) == 0;
    unit_law.record(holds, Nested{Expr::atom(atom), 0});
  };

  for (const auto& s : samples) {
    require_sample(s, 1);
    if (s.depth > 2) {
      throw DepthMismatch("algebra laws take depth-1 and depth-2 samples, got depth " + std::to_string(s.depth));
    }
    a.require_in_carrier(s.value);
    if (s.depth == 1) {
      for (const auto& e : s.value.entries()) check_atom(e.value.atom_value());
    } else {
      const Atom lhs = a.evaluate(a.evaluate_at(1, s.value));
      const Atom rhs = a.evaluate(m.flatten(s.value));
      mult_law.record(compare(lhs, rhs) == 0, s);
    }
  }
  if (a.carrier().kind() == Carrier::Kind::Finite) {
    for (const auto& atom : a.carrier().elements()) check_atom(atom);
  }

  LawReport report;
  report.results.push_back(unit_law.take());
  report.results.push_back(mult_law.take());
  return report;
}

Expr random_expression(const Algebra& a, int depth, Rng& rng) {
  if (depth <= 0) return Expr::atom(a.random_atom(rng));
  return a.monad().random_layer(rng, [&] { return random_expression(a, depth - 1, rng); });
}

std::vector<Nested> random_samples(const Algebra& a, int depth, std::size_t count, Rng& rng) {
  std::vector<Nested> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back({random_expression(a, depth, rng), depth});
  return out;
}

}  // namespace pev
