/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/io.hpp"

#include <limits>
#include <sstream>

#include "pev/errors.hpp"
#include "pev/instances.hpp"

namespace pev {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& i) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (i < lo || i > hi) throw ParseError("integer " + i.str() + " does not fit the JSON encoding");
  return Json(i.convert_to<std::int64_t>());
}

Atom atom_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Atom{integer_from_json(j)};
  if (j.is_string()) return Atom{j.get<std::string>()};
  if (j.is_array()) {
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    if (coords.empty()) throw ParseError("points need at least one coordinate");
    return point_atom(std::move(coords));
  }
  throw ParseError("expected an atom (integer, string or point), got " + j.dump());
}

Json atom_to_json(const Atom& a) {
  if (const auto* i = std::get_if<Integer>(&a)) return integer_to_json(*i);
  if (const auto* s = std::get_if<std::string>(&a)) return Json(*s);
  Json out = Json::array();
  for (const auto& c : std::get<Point>(a).coords) out.push_back(rational_to_json(c));
  return out;
}

Expr element_from_json(const Json& j) {
  if (j.is_object()) return expr_from_json(j);
  return Expr::atom(atom_from_json(j));
}

const Json& single_key(const Json& j, std::string& key) {
  if (!j.is_object() || j.size() != 1) {
    throw ParseError("expected an expression envelope with exactly one key, got " + j.dump());
  }
  key = j.begin().key();
  return j.begin().value();
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string render_weighted(const Expr& x) {
  std::string out = "<";
  bool first = true;
  for (const auto& e : x.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e.weight) + ":" + render(e.value);
  }
  return out + ">";
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j));
  if (j.is_array() && j.size() == 2) {
    const Integer num = integer_from_json(j[0]);
    const Integer den = integer_from_json(j[1]);
    if (den == 0) throw ParseError("zero denominator in " + j.dump());
    return Rational(num, den);
  }
  throw ParseError("expected a rational as an integer or [num, den], got " + j.dump());
}

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(numerator(r)), integer_to_json(denominator(r))});
}

Expr expr_from_json(const Json& j) {
  std::string key;
  const Json& body = single_key(j, key);
  try {
    if (key == "ms") {
      if (!body.is_array()) throw ParseError("\"ms\" takes an array of [element, multiplicity] pairs");
      std::vector<Entry> entries;
      for (const auto& item : body) {
        if (!item.is_array() || item.size() != 2) {
          throw ParseError("multiset entries are [element, multiplicity] pairs, got " + item.dump());
        }
        const Integer mult = integer_from_json(item[1]);
        if (mult <= 0) throw ParseError("multiplicities must be positive, got " + item[1].dump());
        entries.push_back({element_from_json(item[0]), Rational(mult)});
      }
      return make_multiset(std::move(entries));
    }
    if (key == "list") {
      if (!body.is_array()) throw ParseError("\"list\" takes an array of elements");
      std::vector<Expr> items;
      for (const auto& item : body) items.push_back(element_from_json(item));
      return make_list(std::move(items));
    }
    if (key == "act") {
      if (!body.is_object() || !body.contains("g") || !body.contains("x") || body.size() != 2) {
        throw ParseError("\"act\" takes an object {\"g\": element, \"x\": value}");
      }
      return make_action(atom_from_json(body.at("g")), element_from_json(body.at("x")));
    }
    if (key == "dist") {
      if (!body.is_array() || body.empty()) throw ParseError("\"dist\" takes a non-empty array of [point, weight] pairs");
      std::vector<Entry> entries;
      for (const auto& item : body) {
        if (!item.is_array() || item.size() != 2) {
          throw ParseError("distribution entries are [point, [num, den]] pairs, got " + item.dump());
        }
        Rational w = rational_from_json(item[1]);
        if (w <= 0) throw ParseError("distribution weights must be positive, got " + item[1].dump());
        entries.push_back({element_from_json(item[0]), std::move(w)});
      }
      return make_distribution(std::move(entries));
    }
    if (key == "unit") {
      if (!body.is_null()) throw ParseError("\"unit\" takes null");
      return terminal_value();
    }
  } catch (const InvalidStructure& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown expression envelope \"" + key + "\"");
}

Json expr_to_json(const Expr& x) {
  if (x.is_atom()) return atom_to_json(x.atom_value());
  switch (x.shape()) {
    case Shape::Multiset: {
      Json items = Json::array();
      for (const auto& e : x.entries()) items.push_back(Json::array({expr_to_json(e.value), integer_to_json(numerator(e.weight))}));
      return Json{{"ms", items}};
    }
    case Shape::List: {
      Json items = Json::array();
      for (const auto& e : x.entries()) items.push_back(expr_to_json(e.value));
      return Json{{"list", items}};
    }
    case Shape::Action:
      return Json{{"act", Json{{"g", atom_to_json(*x.label())}, {"x", expr_to_json(x.entries().front().value)}}}};
    case Shape::Distribution: {
      Json items = Json::array();
      for (const auto& e : x.entries()) items.push_back(Json::array({expr_to_json(e.value), rational_to_json(e.weight)}));
      return Json{{"dist", items}};
    }
    case Shape::Unit:
      return Json{{"unit", nullptr}};
  }
  return nullptr;
}

std::string render(const Expr& x) {
  if (x.is_atom()) return to_string(x.atom_value());
  switch (x.shape()) {
    case Shape::Multiset: {
      std::string out = "{";
      bool first = true;
      for (const auto& e : x.entries()) {
        const std::string item = render(e.value);
        for (auto c = numerator(e.weight); c > 0; --c) {
          if (!first) out += ",";
          first = false;
          out += item;
        }
      }
      return out + "}";
    }
    case Shape::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < x.entries().size(); ++i) {
        if (i) out += ",";
        out += render(x.entries()[i].value);
      }
      return out + "]";
    }
    case Shape::Action:
      return "(" + to_string(*x.label()) + "," + render(x.entries().front().value) + ")";
    case Shape::Distribution:
      return render_weighted(x);
    case Shape::Unit:
      return "*";
  }
  return "?";
}

std::optional<MonadTag> envelope_tag(const Json& j) {
  if (!j.is_object() || j.size() != 1) return std::nullopt;
  const auto& key = j.begin().key();
  if (key == "ms") return MonadTag::Multiset;
  if (key == "list") return MonadTag::List;
  if (key == "act") return MonadTag::Action;
  if (key == "dist") return MonadTag::Distribution;
  if (key == "unit") return MonadTag::Terminal;
  return std::nullopt;
}

std::optional<MonadTag> parse_monad_tag(const std::string& name) {
  if (name == "multiset" || name == "ms") return MonadTag::Multiset;
  if (name == "list") return MonadTag::List;
  if (name == "action" || name == "act") return MonadTag::Action;
  if (name == "dist" || name == "distribution") return MonadTag::Distribution;
  if (name == "terminal" || name == "unit") return MonadTag::Terminal;
  return std::nullopt;
}

namespace {

const Json& algebra_body(const Json& j) {
  if (!j.is_object() || !j.contains("alg") || j.size() != 1) {
    throw ParseError("algebras are described as {\"alg\": ...}, got " + j.dump());
  }
  return j.at("alg");
}

Monoid monoid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("op")) {
    throw ParseError("monoid tables need \"elements\" and \"op\"");
  }
  std::vector<Atom> elements;
  for (const auto& e : j.at("elements")) elements.push_back(atom_from_json(e));
  auto index = [&](const Json& e) {
    const Atom a = atom_from_json(e);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (compare(elements[i], a) == 0) return i;
    }
    throw ParseError("table entry " + e.dump() + " is not a listed element");
  };
  const auto& op = j.at("op");
  if (!op.is_array()) throw ParseError("\"op\" must be a square array of elements");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : op) {
    if (!row.is_array()) throw ParseError("\"op\" must be a square array of elements");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(index(e));
    table.push_back(std::move(r));
  }
  return Monoid::from_table(std::move(elements), std::move(table));
}

}  // namespace

std::optional<MonadTag> algebra_tag(const Json& j) {
  const Json& body = algebra_body(j);
  if (body.is_string()) {
    if (body == "unit") return MonadTag::Terminal;
    return std::nullopt;
  }
  if (body.is_object() && body.size() == 1) {
    const auto& key = body.begin().key();
    if (key == "convex") return MonadTag::Distribution;
    if (key == "cayley") return MonadTag::Action;
  }
  return std::nullopt;
}

AlgebraPtr algebra_from_json(const Json& j, std::optional<MonadTag> tag) {
  const Json& body = algebra_body(j);
  if (!tag) tag = algebra_tag(j);
  if (!tag) throw ParseError("cannot tell which monad the algebra " + j.dump() + " belongs to; pass an instance");
  try {
    if (body.is_string()) {
      const auto name = body.get<std::string>();
      if (name == "nat-add") {
        if (*tag == MonadTag::Multiset) return std::make_shared<NatAddAlgebra>(std::make_shared<MultisetMonad>());
        if (*tag == MonadTag::List) return std::make_shared<NatAddAlgebra>(std::make_shared<ListMonad>());
        throw ParseError("nat-add is an algebra for the multiset and list instances");
      }
      if (name == "unit") {
        if (*tag != MonadTag::Terminal) throw ParseError("the unit algebra belongs to the terminal instance");
        return std::make_shared<UnitAlgebra>(std::make_shared<TerminalMonad>());
      }
      throw ParseError("unknown algebra \"" + name + "\"");
    }
    if (!body.is_object() || body.size() != 1) throw ParseError("malformed algebra description " + j.dump());
    const auto& key = body.begin().key();
    const Json& spec = body.begin().value();
    if (key == "table") {
      MonadPtr monad;
      if (*tag == MonadTag::Multiset) monad = std::make_shared<MultisetMonad>();
      else if (*tag == MonadTag::List) monad = std::make_shared<ListMonad>();
      else throw ParseError("monoid tables are algebras for the multiset and list instances");
      return std::make_shared<MonoidTableAlgebra>(std::move(monad), monoid_from_json(spec));
    }
    if (key == "convex") {
      if (*tag != MonadTag::Distribution) throw ParseError("convex algebras belong to the dist instance");
      if (!spec.is_object() || !spec.contains("dim")) throw ParseError("\"convex\" needs {\"dim\": d}");
      const auto dim = integer_from_json(spec.at("dim"));
      if (dim < 1) throw ParseError("convex dimension must be positive");
      return std::make_shared<ConvexAlgebra>(std::make_shared<DistributionMonad>(), dim.convert_to<std::size_t>());
    }
    if (key == "cayley") {
      if (*tag != MonadTag::Action) throw ParseError("cayley algebras belong to the action instance");
      if (!spec.is_object()) throw ParseError("\"cayley\" takes an object");
      Monoid monoid = spec.contains("cyclic") ? Monoid::cyclic(integer_from_json(spec.at("cyclic")).convert_to<std::size_t>())
                                              : monoid_from_json(spec);
      auto monad = std::make_shared<ActionMonad>(std::move(monoid));
      if (!spec.contains("carrier")) return ActionAlgebra::cayley(std::move(monad));
      std::vector<Atom> atoms;
      for (const auto& a : spec.at("carrier")) atoms.push_back(atom_from_json(a));
      auto carrier = Carrier::finite(atoms);
      if (!spec.contains("act")) throw ParseError("a cayley algebra with a carrier needs an \"act\" table");
      const auto& m = monad->monoid();
      // act rows follow the listed order of "elements", columns the listed carrier order.
      std::vector<std::vector<std::size_t>> act(m.size());
      const auto& rows = spec.at("act");
      const auto& listed = spec.contains("elements") ? spec.at("elements") : Json::array();
      if (!rows.is_array() || rows.size() != m.size()) throw ParseError("\"act\" needs one row per monoid element");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::size_t g = listed.empty() ? r : m.index_of(atom_from_json(listed[r]));
        if (!rows[r].is_array() || rows[r].size() != atoms.size()) {
          throw ParseError("\"act\" rows need one entry per carrier atom");
        }
        act[g].assign(atoms.size(), 0);
        for (std::size_t c = 0; c < atoms.size(); ++c) {
          const auto x = carrier.index_of(atoms[c]);
          const auto y = carrier.index_of(atom_from_json(rows[r][c]));
          if (!y) throw ParseError("\"act\" entry " + rows[r][c].dump() + " is not a carrier atom");
          act[g][*x] = *y;
        }
      }
      return std::make_shared<ActionAlgebra>(std::move(monad), std::move(carrier), std::move(act));
    }
    throw ParseError("unknown algebra kind \"" + key + "\"");
  } catch (const InvalidStructure& e) {
    throw ParseError(e.what());
  } catch (const CarrierMismatch& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json witness_to_json(const Witness& w) {
  return Json{{"witness", expr_to_json(w.nested)},
              {"source", expr_to_json(w.source)},
              {"target", expr_to_json(w.target)},
              {"text", render(w.nested)}};
}

Json law_report_to_json(const LawReport& r) {
  Json laws = Json::array();
  for (const auto& law : r.results) {
    Json item{{"law", law.law}, {"checked", law.checked}, {"passed", law.passed()}};
    if (law.counterexample) {
      item["counterexample"] = Json{{"depth", law.counterexample->depth},
                                    {"value", expr_to_json(law.counterexample->value)},
                                    {"text", render(law.counterexample->value)}};
    }
    laws.push_back(std::move(item));
  }
  return Json{{"passed", r.all_passed()}, {"laws", laws}};
}

std::string law_report_to_text(const LawReport& r) {
  std::ostringstream out;
  for (const auto& law : r.results) {
    out << (law.passed() ? "PASS " : "FAIL ") << law.law << " (" << law.checked << " checks)";
    if (law.counterexample) out << "  counterexample: " << render(law.counterexample->value);
    out << "\n";
  }
  return out.str();
}

Json graph_to_json(const ReductionGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(Json{{"text", render(n)}, {"value", expr_to_json(n)}});
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"witnesses", e.witnesses}});
  return Json{{"nodes", nodes}, {"edges", edges}, {"seed", g.seed}, {"total_evaluation", g.total_evaluation}};
}

std::string graph_to_dot(const ReductionGraph& g) {
  std::ostringstream out;
  out << "digraph reduction {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape_dot(render(g.nodes[i])) << "\"";
    if (i == g.total_evaluation) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.witnesses << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_text(const ReductionGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) out << i << ": " << render(g.nodes[i]) << "\n";
  for (const auto& e : g.edges) out << e.from << " -> " << e.to << " x" << e.witnesses << "\n";
  return out.str();
}

Json complex_to_json(const TruncatedComplex& c) {
  Json levels = Json::array();
  for (const auto& level : c.levels) {
    Json items = Json::array();
    for (const auto& x : level) items.push_back(Json{{"text", render(x)}, {"value", expr_to_json(x)}});
    levels.push_back(std::move(items));
  }
  return Json{{"max_level", c.max_level}, {"levels", levels}, {"faces", c.faces}, {"degeneracies", c.degeneracies}};
}

std::string complex_skeleton_dot(const TruncatedComplex& c) {
  std::ostringstream out;
  out << "digraph skeleton {\n";
  for (std::size_t i = 0; i < c.levels[0].size(); ++i) {
    out << "  v" << i << " [label=\"" << escape_dot(render(c.levels[0][i])) << "\"];\n";
  }
  if (c.levels.size() > 1) {
    for (std::size_t i = 0; i < c.levels[1].size(); ++i) {
      const auto& f = c.faces[1][i];
      out << "  v" << f[0] << " -> v" << f[1] << " [label=\"" << escape_dot(render(c.levels[1][i])) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pev
