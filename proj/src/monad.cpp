/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/monad.hpp"

#include <algorithm>

#include "pev/algebra.hpp"
#include "pev/errors.hpp"

namespace pev {

std::string to_string(MonadTag tag) {
  switch (tag) {
    case MonadTag::Multiset: return "multiset";
    case MonadTag::List: return "list";
    case MonadTag::Action: return "action";
    case MonadTag::Distribution: return "dist";
    case MonadTag::Terminal: return "terminal";
  }
  return "?";
}

std::vector<Expr> Monad::mu_fiber(const Expr&, std::size_t) const {
  throw UnsupportedInstance("the " + name() + " monad has no finite mu-fiber enumerator");
}

void Monad::require_layer(const Expr& x) const {
  if (x.is_atom()) {
    throw DepthMismatch("expected a " + to_string(shape()) + " layer, found atom " +
                        to_string(x.atom_value()));
  }
  if (x.shape() != shape()) {
    throw DepthMismatch("expected a " + to_string(shape()) + " layer, found a " +
                        to_string(x.shape()) + " layer");
  }
}

Expr map_at(const Monad& m, int level, const Expr& x, const ExprFn& f) {
  if (level <= 0) return f(x);
  return m.map(x, [&](const Expr& child) { return map_at(m, level - 1, child, f); });
}

Expr flatten_at(const Monad& m, int level, const Expr& x) {
  return map_at(m, level, x, [&](const Expr& y) { return m.flatten(y); });
}

Expr unit_at(const Monad& m, int level, const Expr& x) {
  return map_at(m, level, x, [&](const Expr& y) { return m.unit(y); });
}

Expr functor_apply(const Monad& m, const AtomFunction& f, const Expr& x) {
  if (x.is_atom()) return Expr::atom(f(x.atom_value()));
  return m.map(x, [&](const Expr& child) { return functor_apply(m, f, child); });
}

AtomFunction table_function(std::vector<std::pair<Atom, Atom>> table) {
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  return [table = std::move(table)](const Atom& a) -> Atom {
    auto it = std::lower_bound(table.begin(), table.end(), a, [](const auto& entry, const Atom& key) {
      return compare(entry.first, key) < 0;
    });
    if (it == table.end() || compare(it->first, a) != 0) {
      throw PartialFunction("function undefined at " + to_string(a));
    }
    return it->second;
  };
}

void collect_atoms(const Expr& x, std::vector<Atom>& out) {
  if (x.is_atom()) {
    out.push_back(x.atom_value());
    return;
  }
  if (x.label()) out.push_back(*x.label());
  for (const auto& e : x.entries()) collect_atoms(e.value, out);
}

// ---------------------------------------------------------------------------

Carrier Carrier::finite(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return compare(a, b) < 0; });
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (compare(atoms[i - 1], atoms[i]) == 0) {
      throw InvalidStructure("duplicate carrier atom " + to_string(atoms[i]));
    }
  }
  Carrier c;
  c.kind_ = Kind::Finite;
  c.elements_ = std::move(atoms);
  return c;
}

Carrier Carrier::naturals() {
  Carrier c;
  c.kind_ = Kind::Naturals;
  return c;
}

Carrier Carrier::rational_space(std::size_t dim, std::function<bool(const Point&)> admissible) {
  Carrier c;
  c.kind_ = Kind::RationalSpace;
  c.dim_ = dim;
  c.admissible_ = std::move(admissible);
  return c;
}

bool Carrier::contains(const Atom& a) const {
  switch (kind_) {
    case Kind::Finite:
      return index_of(a).has_value();
    case Kind::Naturals: {
      const auto* i = std::get_if<Integer>(&a);
      return i != nullptr && *i >= 0;
    }
    case Kind::RationalSpace: {
      const auto* p = std::get_if<Point>(&a);
      if (p == nullptr || p->dim() != dim_) return false;
      return !admissible_ || admissible_(*p);
    }
  }
  return false;
}

std::optional<std::size_t> Carrier::index_of(const Atom& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a,
                             [](const Atom& x, const Atom& y) { return compare(x, y) < 0; });
  if (it == elements_.end() || compare(*it, a) != 0) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string Carrier::describe() const {
  switch (kind_) {
    case Kind::Finite: {
      std::string out = "{";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ",";
        out += to_string(elements_[i]);
      }
      return out + "}";
    }
    case Kind::Naturals: return "N";
    case Kind::RationalSpace: return "Q^" + std::to_string(dim_);
  }
  return "?";
}

Expr Algebra::evaluate_at(int level, const Expr& x) const {
  return map_at(monad(), level, x, [this](const Expr& y) { return evaluate_expr(y); });
}

void Algebra::require_in_carrier(const Expr& x) const {
  if (x.is_atom()) {
    if (!carrier().contains(x.atom_value())) {
      throw CarrierMismatch("atom " + to_string(x.atom_value()) + " is not in carrier " +
                            carrier().describe());
    }
    return;
  }
  for (const auto& e : x.entries()) require_in_carrier(e.value);
}

}  // namespace pev
