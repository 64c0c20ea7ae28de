/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/instances.hpp"

#include <algorithm>
#include <numeric>

#include "pev/errors.hpp"

namespace pev {

namespace {

const Rational& one() {
  static const Rational value(1);
  return value;
}

bool expr_less(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

// Sorts by value, merges equal values and drops zero weights.
std::vector<Entry> canonical_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return expr_less(a.value, b.value); });
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (e.weight < 0) throw InvalidStructure("negative weight " + to_string(e.weight));
    if (!out.empty() && out.back().value == e.value) {
      out.back().weight += e.weight;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const Entry& e) { return e.weight == 0; });
  return out;
}

std::size_t integral_weight(const Entry& e) {
  if (!is_integral(e.weight)) {
    throw InvalidStructure("multiset multiplicity " + to_string(e.weight) + " is not an integer");
  }
  return numerator(e.weight).convert_to<std::size_t>();
}

std::size_t random_size(Rng& rng) { return rng.coin(10) ? 0 : static_cast<std::size_t>(rng.uniform(1, 3)); }

}  // namespace

// ---------------------------------------------------------------------------
// Canonical constructors

Expr make_multiset(std::vector<Expr> items) {
  std::vector<Entry> entries;
  entries.reserve(items.size());
  for (auto& x : items) entries.push_back({std::move(x), one()});
  return make_multiset(std::move(entries));
}

Expr make_multiset(std::vector<Entry> entries) {
  auto canon = canonical_entries(std::move(entries));
  for (const auto& e : canon) integral_weight(e);
  return Expr::layer(Shape::Multiset, std::move(canon));
}

Expr make_list(std::vector<Expr> items) {
  std::vector<Entry> entries;
  entries.reserve(items.size());
  for (auto& x : items) entries.push_back({std::move(x), one()});
  return Expr::layer(Shape::List, std::move(entries));
}

Expr make_action(Atom g, Expr x) {
  return Expr::layer(Shape::Action, {Entry{std::move(x), one()}}, std::move(g));
}

Expr make_distribution(std::vector<Entry> entries) {
  auto canon = canonical_entries(std::move(entries));
  Rational total = 0;
  for (const auto& e : canon) total += e.weight;
  if (total != 1) throw InvalidStructure("distribution weights sum to " + to_string(total) + ", not 1");
  return Expr::layer(Shape::Distribution, std::move(canon));
}

Expr dirac(Expr x) { return Expr::layer(Shape::Distribution, {Entry{std::move(x), one()}}); }

Expr terminal_value() {
  static const Expr value = Expr::layer(Shape::Unit, {});
  return value;
}

// ---------------------------------------------------------------------------
// Multiset

Expr MultisetMonad::map(const Expr& x, const ExprFn& f) const {
  require_layer(x);
  std::vector<Entry> out;
  out.reserve(x.entries().size());
  for (const auto& e : x.entries()) out.push_back({f(e.value), e.weight});
  return Expr::layer(Shape::Multiset, canonical_entries(std::move(out)));
}

Expr MultisetMonad::unit(const Expr& x) const { return Expr::layer(Shape::Multiset, {Entry{x, one()}}); }

Expr MultisetMonad::flatten(const Expr& x) const {
  require_layer(x);
  std::vector<Entry> out;
  for (const auto& outer : x.entries()) {
    require_layer(outer.value);
    for (const auto& inner : outer.value.entries()) {
      out.push_back({inner.value, outer.weight * inner.weight});
    }
  }
  return Expr::layer(Shape::Multiset, canonical_entries(std::move(out)));
}

std::vector<Expr> MultisetMonad::mu_fiber(const Expr& x, std::size_t limit) const {
  return multiset_mu_fiber(x, limit);
}

Expr MultisetMonad::random_layer(Rng& rng, const std::function<Expr()>& child) const {
  std::vector<Expr> items;
  const auto n = random_size(rng);
  for (std::size_t i = 0; i < n; ++i) items.push_back(child());
  return make_multiset(std::move(items));
}

namespace {

using Counts = std::vector<std::size_t>;

// Blocks are emitted in non-increasing lexicographic order of their count
// vectors, which makes each partition appear exactly once.
class MultisetPartitioner {
 public:
  MultisetPartitioner(const std::vector<Entry>& atoms, Counts counts)
      : atoms_(atoms), remaining_(std::move(counts)) {}

  std::vector<Expr> run() {
    recurse(std::nullopt);
    std::sort(out_.begin(), out_.end(), expr_less);
    return std::move(out_);
  }

 private:
  void recurse(const std::optional<Counts>& bound) {
    auto first = std::find_if(remaining_.begin(), remaining_.end(), [](std::size_t c) { return c > 0; });
    if (first == remaining_.end()) {
      emit();
      return;
    }
    Counts block(remaining_.size(), 0);
    choose(0, static_cast<std::size_t>(first - remaining_.begin()), bound, true, block);
  }

  // Fills block[i..] with every admissible count, then recurses on the rest.
  void choose(std::size_t i, std::size_t first, const std::optional<Counts>& bound, bool tight,
              Counts& block) {
    if (i == block.size()) {
      if (block[first] == 0) return;
      for (std::size_t j = 0; j < block.size(); ++j) remaining_[j] -= block[j];
      blocks_.push_back(block);
      recurse(block);
      blocks_.pop_back();
      for (std::size_t j = 0; j < block.size(); ++j) remaining_[j] += block[j];
      return;
    }
    std::size_t hi = remaining_[i];
    if (bound && tight) hi = std::min(hi, (*bound)[i]);
    for (std::size_t c = 0; c <= hi; ++c) {
      block[i] = c;
      choose(i + 1, first, bound, tight && bound && c == (*bound)[i], block);
    }
    block[i] = 0;
  }

  void emit() {
    std::vector<Expr> parts;
    parts.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      std::vector<Entry> entries;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] > 0) entries.push_back({atoms_[j].value, Rational(b[j])});
      }
      parts.push_back(Expr::layer(Shape::Multiset, std::move(entries)));
    }
    out_.push_back(make_multiset(std::move(parts)));
  }

  const std::vector<Entry>& atoms_;
  Counts remaining_;
  std::vector<Counts> blocks_;
  std::vector<Expr> out_;
};

}  // namespace

std::vector<Expr> multiset_mu_fiber(const Expr& p, std::size_t limit) {
  MultisetMonad{}.require_layer(p);
  Counts counts;
  std::size_t total = 0;
  for (const auto& e : p.entries()) {
    counts.push_back(integral_weight(e));
    total += counts.back();
  }
  if (total > limit) {
    throw EnumerationLimitExceeded("multiset of total multiplicity " + std::to_string(total) +
                                   " exceeds the fiber limit " + std::to_string(limit));
  }
  if (total == 0) return {make_multiset(std::vector<Expr>{}), make_multiset(std::vector<Expr>{p})};
  return MultisetPartitioner(p.entries(), std::move(counts)).run();
}

// ---------------------------------------------------------------------------
// List

Expr ListMonad::map(const Expr& x, const ExprFn& f) const {
  require_layer(x);
  std::vector<Entry> out;
  out.reserve(x.entries().size());
  for (const auto& e : x.entries()) out.push_back({f(e.value), one()});
  return Expr::layer(Shape::List, std::move(out));
}

Expr ListMonad::unit(const Expr& x) const { return Expr::layer(Shape::List, {Entry{x, one()}}); }

Expr ListMonad::flatten(const Expr& x) const {
  require_layer(x);
  std::vector<Entry> out;
  for (const auto& outer : x.entries()) {
    require_layer(outer.value);
    for (const auto& inner : outer.value.entries()) out.push_back(inner);
  }
  return Expr::layer(Shape::List, std::move(out));
}

std::vector<Expr> ListMonad::mu_fiber(const Expr& x, std::size_t limit) const { return list_mu_fiber(x, limit); }

Expr ListMonad::random_layer(Rng& rng, const std::function<Expr()>& child) const {
  std::vector<Expr> items;
  const auto n = random_size(rng);
  for (std::size_t i = 0; i < n; ++i) items.push_back(child());
  return make_list(std::move(items));
}

std::vector<Expr> list_mu_fiber(const Expr& p, std::size_t limit) {
  ListMonad{}.require_layer(p);
  const auto& items = p.entries();
  const std::size_t n = items.size();
  if (n > limit) {
    throw EnumerationLimitExceeded("list of length " + std::to_string(n) + " exceeds the fiber limit " +
                                   std::to_string(limit));
  }
  // The empty list also flattens [[]]; it is the only nesting with an empty
  // block that is kept, so that [] reaches its total evaluation.
  if (n == 0) return {Expr::layer(Shape::List, {}), make_list({Expr::layer(Shape::List, {})})};
  std::vector<Expr> out;
  // Bit i of `cuts` set means a block boundary after item i.
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<Expr> blocks;
    std::vector<Entry> current;
    for (std::size_t i = 0; i < n; ++i) {
      current.push_back(items[i]);
      if (i + 1 == n || (cuts >> i) & 1U) {
        blocks.push_back(Expr::layer(Shape::List, std::move(current)));
        current.clear();
      }
    }
    out.push_back(make_list(std::move(blocks)));
  }
  std::sort(out.begin(), out.end(), expr_less);
  return out;
}

// ---------------------------------------------------------------------------
// Monoid and action monad

Monoid Monoid::from_table(std::vector<Atom> elements, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) throw InvalidStructure("a monoid needs at least one element");
  if (table.size() != n) throw InvalidStructure("Cayley table has the wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidStructure("Cayley table row has the wrong length");
    for (auto v : row) {
      if (v >= n) throw InvalidStructure("Cayley table entry out of range");
    }
  }
  // Reindex so that index order is the canonical atom order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return compare(elements[a], elements[b]) < 0; });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  Monoid m;
  m.elements_.reserve(n);
  for (auto i : order) m.elements_.push_back(elements[i]);
  for (std::size_t i = 1; i < n; ++i) {
    if (compare(m.elements_[i - 1], m.elements_[i]) == 0) {
      throw InvalidStructure("duplicate monoid element " + to_string(m.elements_[i]));
    }
  }
  m.table_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.table_[rank[a]][rank[b]] = rank[table[a][b]];
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (m.op(m.op(a, b), c) != m.op(a, m.op(b, c))) {
          throw InvalidStructure("Cayley table is not associative at (" + to_string(m.elements_[a]) + ", " +
                                 to_string(m.elements_[b]) + ", " + to_string(m.elements_[c]) + ")");
        }
      }
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = m.op(e, x) == x && m.op(x, e) == x;
    if (ok) {
      m.identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidStructure("Cayley table has no two-sided identity");

  m.is_group_ = true;
  m.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (m.op(a, b) == m.identity_ && m.op(b, a) == m.identity_) {
        m.inverse_[a] = b;
        has_inverse = true;
        break;
      }
    }
    m.is_group_ = m.is_group_ && has_inverse;
  }
  if (!m.is_group_) m.inverse_.clear();
  return m;
}

Monoid Monoid::cyclic(std::size_t n) {
  std::vector<Atom> elements;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(int_atom(static_cast<long long>(i)));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return from_table(std::move(elements), std::move(table));
}

bool Monoid::is_commutative() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

std::size_t Monoid::index_of(const Atom& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a,
                             [](const Atom& x, const Atom& y) { return compare(x, y) < 0; });
  if (it == elements_.end() || compare(*it, a) != 0) {
    throw CarrierMismatch(to_string(a) + " is not a monoid element");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t ActionMonad::element_of(const Expr& x) const {
  require_layer(x);
  if (!x.label() || x.entries().size() != 1) throw InvalidStructure("malformed action layer");
  return monoid_.index_of(*x.label());
}

const Expr& ActionMonad::payload(const Expr& x) const {
  require_layer(x);
  if (x.entries().size() != 1) throw InvalidStructure("malformed action layer");
  return x.entries().front().value;
}

Expr ActionMonad::map(const Expr& x, const ExprFn& f) const {
  const auto g = element_of(x);
  return make_action(monoid_.element(g), f(payload(x)));
}

Expr ActionMonad::unit(const Expr& x) const { return make_action(monoid_.element(monoid_.identity()), x); }

Expr ActionMonad::flatten(const Expr& x) const {
  const auto g = element_of(x);
  const auto& inner = payload(x);
  const auto h = element_of(inner);
  return make_action(monoid_.element(monoid_.op(g, h)), payload(inner));
}

std::vector<Expr> ActionMonad::mu_fiber(const Expr& x, std::size_t) const {
  const auto g = element_of(x);
  const auto& inner = payload(x);
  std::vector<Expr> out;
  for (std::size_t a = 0; a < monoid_.size(); ++a) {
    for (std::size_t b = 0; b < monoid_.size(); ++b) {
      if (monoid_.op(a, b) == g) {
        out.push_back(make_action(monoid_.element(a), make_action(monoid_.element(b), inner)));
      }
    }
  }
  std::sort(out.begin(), out.end(), expr_less);
  return out;
}

Expr ActionMonad::random_layer(Rng& rng, const std::function<Expr()>& child) const {
  const auto g = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(monoid_.size()) - 1));
  return make_action(monoid_.element(g), child());
}

// ---------------------------------------------------------------------------
// Distribution

Expr DistributionMonad::map(const Expr& x, const ExprFn& f) const {
  require_layer(x);
  std::vector<Entry> out;
  out.reserve(x.entries().size());
  for (const auto& e : x.entries()) out.push_back({f(e.value), e.weight});
  return Expr::layer(Shape::Distribution, canonical_entries(std::move(out)));
}

Expr DistributionMonad::unit(const Expr& x) const { return dirac(x); }

Expr DistributionMonad::flatten(const Expr& x) const {
  require_layer(x);
  std::vector<Entry> out;
  for (const auto& outer : x.entries()) {
    require_layer(outer.value);
    for (const auto& inner : outer.value.entries()) {
      out.push_back({inner.value, outer.weight * inner.weight});
    }
  }
  return Expr::layer(Shape::Distribution, canonical_entries(std::move(out)));
}

Expr DistributionMonad::random_layer(Rng& rng, const std::function<Expr()>& child) const {
  const auto n = rng.uniform(1, 3);
  std::vector<Entry> entries;
  Integer total = 0;
  std::vector<Integer> raw;
  for (long long i = 0; i < n; ++i) {
    raw.emplace_back(rng.uniform(1, 4));
    total += raw.back();
  }
  for (long long i = 0; i < n; ++i) entries.push_back({child(), Rational(raw[i], total)});
  return make_distribution(std::move(entries));
}

Expr dist_pushforward(const AtomFunction& f, const Expr& p) {
  static const DistributionMonad monad;
  monad.require_layer(p);
  return monad.map(p, [&](const Expr& x) { return Expr::atom(f(x.atom_value())); });
}

Expr dist_average(const Expr& xi) { return DistributionMonad{}.flatten(xi); }

// ---------------------------------------------------------------------------
// Terminal

Expr TerminalMonad::map(const Expr& x, const ExprFn&) const {
  require_layer(x);
  return terminal_value();
}

Expr TerminalMonad::unit(const Expr&) const { return terminal_value(); }

Expr TerminalMonad::flatten(const Expr& x) const {
  require_layer(x);
  return terminal_value();
}

std::vector<Expr> TerminalMonad::mu_fiber(const Expr& x, std::size_t) const {
  require_layer(x);
  return {terminal_value()};
}

Expr TerminalMonad::random_layer(Rng&, const std::function<Expr()>&) const { return terminal_value(); }

// ---------------------------------------------------------------------------
// Algebras

NatAddAlgebra::NatAddAlgebra(MonadPtr monad) : monad_(std::move(monad)), carrier_(Carrier::naturals()) {
  if (monad_->tag() != MonadTag::Multiset && monad_->tag() != MonadTag::List) {
    throw InvalidStructure("nat-add is an algebra for the multiset and list monads only");
  }
}

Atom NatAddAlgebra::evaluate(const Expr& x) const {
  monad_->require_layer(x);
  Integer sum = 0;
  for (const auto& e : x.entries()) {
    const auto& a = e.value.atom_value();
    if (!carrier_.contains(a)) throw CarrierMismatch(to_string(a) + " is not a natural number");
    sum += numerator(e.weight) * std::get<Integer>(a);
  }
  return Atom{sum};
}

Atom NatAddAlgebra::random_atom(Rng& rng) const { return int_atom(rng.uniform(0, 9)); }

MonoidTableAlgebra::MonoidTableAlgebra(MonadPtr monad, Monoid monoid)
    : monad_(std::move(monad)), monoid_(std::move(monoid)), carrier_(Carrier::finite(monoid_.elements())) {
  if (monad_->tag() == MonadTag::Multiset && !monoid_.is_commutative()) {
    throw InvalidStructure("a multiset algebra needs a commutative monoid table");
  }
  if (monad_->tag() != MonadTag::Multiset && monad_->tag() != MonadTag::List) {
    throw InvalidStructure("monoid tables are algebras for the multiset and list monads only");
  }
}

Atom MonoidTableAlgebra::evaluate(const Expr& x) const {
  monad_->require_layer(x);
  std::size_t acc = monoid_.identity();
  for (const auto& e : x.entries()) {
    const auto v = monoid_.index_of(e.value.atom_value());
    for (std::size_t k = integral_weight(e); k > 0; --k) acc = monoid_.op(acc, v);
  }
  return monoid_.element(acc);
}

Atom MonoidTableAlgebra::random_atom(Rng& rng) const {
  return monoid_.element(static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(monoid_.size()) - 1)));
}

ActionAlgebra::ActionAlgebra(std::shared_ptr<const ActionMonad> monad, Carrier carrier,
                             std::vector<std::vector<std::size_t>> act)
    : monad_(std::move(monad)), carrier_(std::move(carrier)), act_(std::move(act)) {
  if (carrier_.kind() != Carrier::Kind::Finite) throw InvalidStructure("action algebras need a finite carrier");
  const auto& m = monad_->monoid();
  const auto n = carrier_.elements().size();
  if (act_.size() != m.size()) throw InvalidStructure("action table has the wrong number of rows");
  for (const auto& row : act_) {
    if (row.size() != n) throw InvalidStructure("action table row has the wrong length");
    for (auto v : row) {
      if (v >= n) throw InvalidStructure("action table entry out of range");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (act_[m.identity()][x] != x) throw InvalidStructure("identity does not act trivially");
    for (std::size_t g = 0; g < m.size(); ++g) {
      for (std::size_t h = 0; h < m.size(); ++h) {
        if (act_[m.op(g, h)][x] != act_[g][act_[h][x]]) throw InvalidStructure("action table is not an action");
      }
    }
  }
}

std::shared_ptr<const ActionAlgebra> ActionAlgebra::cayley(std::shared_ptr<const ActionMonad> monad) {
  const auto& m = monad->monoid();
  auto carrier = Carrier::finite(m.elements());
  return std::make_shared<const ActionAlgebra>(std::move(monad), std::move(carrier), m.table());
}

Atom ActionAlgebra::act(std::size_t g, const Atom& x) const {
  const auto i = carrier_.index_of(x);
  if (!i) throw CarrierMismatch(to_string(x) + " is not in carrier " + carrier_.describe());
  return carrier_.elements()[act_[g][*i]];
}

Atom ActionAlgebra::evaluate(const Expr& x) const {
  const auto g = monad_->element_of(x);
  return act(g, monad_->payload(x).atom_value());
}

Atom ActionAlgebra::random_atom(Rng& rng) const {
  const auto& els = carrier_.elements();
  return els[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(els.size()) - 1))];
}

ConvexAlgebra::ConvexAlgebra(std::shared_ptr<const DistributionMonad> monad, std::size_t dim,
                             std::function<bool(const Point&)> admissible)
    : monad_(std::move(monad)), dim_(dim), carrier_(Carrier::rational_space(dim, std::move(admissible))) {
  if (dim_ == 0) throw InvalidStructure("convex algebras need dimension at least 1");
}

Atom ConvexAlgebra::evaluate(const Expr& x) const {
  monad_->require_layer(x);
  for (const auto& e : x.entries()) {
    if (!carrier_.contains(e.value.atom_value())) {
      throw CarrierMismatch(to_string(e.value.atom_value()) + " is not an admissible point of " +
                            carrier_.describe());
    }
  }
  return Atom{barycenter(dim_, x)};
}

Atom ConvexAlgebra::random_atom(Rng& rng) const {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < dim_; ++i) coords.emplace_back(rng.uniform(-3, 3));
    Atom a = point_atom(std::move(coords));
    if (carrier_.contains(a)) return a;
  }
  throw InvalidStructure("could not sample an admissible point");
}

Point barycenter(std::size_t dim, const Expr& p) {
  DistributionMonad{}.require_layer(p);
  Point out{std::vector<Rational>(dim, Rational(0))};
  for (const auto& e : p.entries()) {
    const auto* pt = e.value.is_atom() ? std::get_if<Point>(&e.value.atom_value()) : nullptr;
    if (pt == nullptr || pt->dim() != dim) {
      throw DimensionMismatch("support point " + (e.value.is_atom() ? to_string(e.value.atom_value()) : "<nested>") +
                              " is not a point of Q^" + std::to_string(dim));
    }
    for (std::size_t i = 0; i < dim; ++i) out.coords[i] += e.weight * pt->coords[i];
  }
  return out;
}

Point barycenter(const ConvexAlgebra& algebra, const Expr& p) { return barycenter(algebra.dim(), p); }

UnitAlgebra::UnitAlgebra(std::shared_ptr<const TerminalMonad> monad)
    : monad_(std::move(monad)), carrier_(Carrier::finite({sym_atom("*")})) {}

Atom UnitAlgebra::evaluate(const Expr& x) const {
  monad_->require_layer(x);
  return sym_atom("*");
}

// ---------------------------------------------------------------------------

std::vector<ActionTriple> action_witnesses(const ActionAlgebra& algebra, const Expr& p, const Expr& q) {
  const auto& monad = algebra.action_monad();
  const auto& m = monad.monoid();
  const auto g = monad.element_of(p);
  const auto h = monad.element_of(q);
  const Atom& x = monad.payload(p).atom_value();
  const Atom& y = monad.payload(q).atom_value();
  std::vector<ActionTriple> out;
  auto consider = [&](std::size_t ell) {
    if (m.op(h, ell) == g && compare(algebra.act(ell, x), y) == 0) {
      out.push_back({m.element(h), m.element(ell), x});
    }
  };
  if (m.is_group()) {
    consider(m.op(m.inverse(h), g));
  } else {
    for (std::size_t ell = 0; ell < m.size(); ++ell) consider(ell);
  }
  return out;
}

}  // namespace pev
