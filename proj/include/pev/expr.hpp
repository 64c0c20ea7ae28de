/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pev/rational.hpp"

namespace pev {

/// A point of Q^d, the carrier of convex algebras.
struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

/// The atoms formal expressions are built from: naturals / group elements,
/// symbolic names, and rational points.
using Atom = std::variant<Integer, std::string, Point>;

std::strong_ordering compare(const Atom& a, const Atom& b);
std::string to_string(const Atom& a);

inline Atom int_atom(long long v) { return Atom{Integer(v)}; }
inline Atom sym_atom(std::string s) { return Atom{std::move(s)}; }
Atom point_atom(std::vector<Rational> coords);

/// Container shape of one layer of a nested expression.
enum class Shape : std::uint8_t { Multiset, List, Action, Distribution, Unit };

std::string to_string(Shape s);

struct Entry;

/// Immutable nested formal expression.
///
/// A value is either an atom or one container layer whose entries are again
/// expressions. Every layer carries a weight per entry: multiplicities for
/// multisets, probabilities for distributions, 1 for lists and actions.
/// Action layers additionally carry the acting monoid element as a label.
/// Nodes are shared, so copies are cheap.
class Expr {
 public:
  static Expr atom(Atom a);
  /// Builds a layer verbatim. Callers are responsible for canonical form;
  /// the monad instances provide canonicalizing constructors.
  static Expr layer(Shape shape, std::vector<Entry> entries,
                    std::optional<Atom> label = std::nullopt);

  bool is_atom() const;
  const Atom& atom_value() const;
  Shape shape() const;
  const std::vector<Entry>& entries() const;
  const std::optional<Atom>& label() const;
  std::size_t hash() const;

  friend std::strong_ordering compare(const Expr& a, const Expr& b);
  friend bool operator==(const Expr& a, const Expr& b);
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) { return compare(a, b); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Entry {
  Expr value;
  Rational weight;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.weight == b.weight && a.value == b.value;
  }
};

/// True when every branch of `x` reaches an atom after exactly `depth`
/// layers. Empty layers satisfy any positive depth.
bool has_depth(const Expr& x, int depth);

/// A nested expression together with its declared nesting depth. The depth
/// cannot always be recovered from the value (empty layers, the terminal
/// monad), so it travels alongside.
struct Nested {
  Expr value;
  int depth = 1;

  friend bool operator==(const Nested&, const Nested&) = default;
};

struct ExprHash {
  std::size_t operator()(const Expr& x) const { return x.hash(); }
};

}  // namespace pev
