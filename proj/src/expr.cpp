/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/expr.hpp"

#include <functional>
#include <limits>

#include "pev/errors.hpp"

namespace pev {

std::string to_string(const Integer& i) { return i.str(); }

std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_integer(const Integer& i) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (i >= lo && i <= hi) return std::hash<long long>{}(i.convert_to<long long>());
  return std::hash<std::string>{}(i.str());
}

std::size_t hash_rational(const Rational& r) {
  return mix(hash_integer(numerator(r)), hash_integer(denominator(r)));
}

std::size_t hash_atom(const Atom& a) {
  std::size_t h = a.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          h = mix(h, hash_integer(v));
        } else if constexpr (std::is_same_v<T, std::string>) {
          h = mix(h, std::hash<std::string>{}(v));
        } else {
          for (const auto& c : v.coords) h = mix(h, hash_rational(c));
        }
      },
      a);
  return h;
}

}  // namespace

std::strong_ordering compare(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  switch (a.index()) {
    case 0:
      return compare_numbers(std::get<0>(a), std::get<0>(b));
    case 1:
      return std::get<1>(a).compare(std::get<1>(b)) <=> 0;
    default: {
      const auto& pa = std::get<2>(a).coords;
      const auto& pb = std::get<2>(b).coords;
      for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
        if (auto c = compare_numbers(pa[i], pb[i]); c != 0) return c;
      }
      return pa.size() <=> pb.size();
    }
  }
}

std::string to_string(const Atom& a) {
  if (const auto* i = std::get_if<Integer>(&a)) return i->str();
  if (const auto* s = std::get_if<std::string>(&a)) return *s;
  const auto& p = std::get<Point>(a);
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(p.coords[i]);
  }
  return out + ")";
}

Atom point_atom(std::vector<Rational> coords) { return Atom{Point{std::move(coords)}}; }

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Multiset: return "multiset";
    case Shape::List: return "list";
    case Shape::Action: return "action";
    case Shape::Distribution: return "distribution";
    case Shape::Unit: return "unit";
  }
  return "?";
}

struct Expr::Node {
  struct Layer {
    Shape shape;
    std::optional<Atom> label;
    std::vector<Entry> entries;
  };
  std::variant<Atom, Layer> content;
  std::size_t hash = 0;
};

Expr Expr::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->hash = mix(0x51ed27, hash_atom(a));
  node->content = std::move(a);
  return Expr(std::move(node));
}

Expr Expr::layer(Shape shape, std::vector<Entry> entries, std::optional<Atom> label) {
  auto node = std::make_shared<Node>();
  std::size_t h = mix(0x1a7e4, static_cast<std::size_t>(shape));
  if (label) h = mix(h, hash_atom(*label));
  for (const auto& e : entries) {
    h = mix(h, e.value.hash());
    h = mix(h, hash_rational(e.weight));
  }
  node->hash = h;
  node->content = Node::Layer{shape, std::move(label), std::move(entries)};
  return Expr(std::move(node));
}

bool Expr::is_atom() const { return node_->content.index() == 0; }

const Atom& Expr::atom_value() const {
  if (!is_atom()) throw DepthMismatch("expected an atom, found a " + to_string(shape()) + " layer");
  return std::get<Atom>(node_->content);
}

Shape Expr::shape() const {
  if (is_atom()) throw DepthMismatch("expected a container layer, found atom " + to_string(atom_value()));
  return std::get<Node::Layer>(node_->content).shape;
}

const std::vector<Entry>& Expr::entries() const {
  if (is_atom()) throw DepthMismatch("expected a container layer, found atom " + to_string(atom_value()));
  return std::get<Node::Layer>(node_->content).entries;
}

const std::optional<Atom>& Expr::label() const {
  if (is_atom()) throw DepthMismatch("expected a container layer, found atom " + to_string(atom_value()));
  return std::get<Node::Layer>(node_->content).label;
}

std::size_t Expr::hash() const { return node_->hash; }

std::strong_ordering compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const bool aa = a.is_atom();
  const bool ba = b.is_atom();
  if (aa != ba) return aa ? std::strong_ordering::less : std::strong_ordering::greater;
  if (aa) return compare(a.atom_value(), b.atom_value());
  if (auto c = a.shape() <=> b.shape(); c != 0) return c;
  const auto& la = a.label();
  const auto& lb = b.label();
  if (la.has_value() != lb.has_value()) return la.has_value() <=> lb.has_value();
  if (la) {
    if (auto c = compare(*la, *lb); c != 0) return c;
  }
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
    if (auto c = compare(ea[i].value, eb[i].value); c != 0) return c;
    if (auto c = compare_numbers(ea[i].weight, eb[i].weight); c != 0) return c;
  }
  return ea.size() <=> eb.size();
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

bool has_depth(const Expr& x, int depth) {
  if (depth < 0) return false;
  if (depth == 0) return x.is_atom();
  if (x.is_atom()) return false;
  for (const auto& e : x.entries()) {
    if (!has_depth(e.value, depth - 1)) return false;
  }
  return true;
}

}  // namespace pev
