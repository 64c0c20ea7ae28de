/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "pev/bar.hpp"
#include "pev/engine.hpp"
#include "pev/laws.hpp"

namespace pev {

using Json = nlohmann::json;

// Expression envelopes:
//   {"ms": [[elem, mult], ...]}     {"list": [elem, ...]}
//   {"act": {"g": g, "x": elem}}    {"dist": [[elem, [num, den]], ...]}
//   {"unit": null}
// where elem is an atom (integer, string, or point array whose coordinates
// are integers or [num, den] pairs) or another envelope.

Expr expr_from_json(const Json& j);
Json expr_to_json(const Expr& x);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);

/// Compact text form: {3,4,5}, [a,b], (g,x), <1/2:(0), 1/2:(2)>, *.
std::string render(const Expr& x);

/// Shape of the outermost layer of an envelope, if it is one.
std::optional<MonadTag> envelope_tag(const Json& j);
std::optional<MonadTag> parse_monad_tag(const std::string& name);

/// Builds the algebra described by {"alg": ...} for the given monad.
/// Throws ParseError on malformed or mismatched descriptions.
AlgebraPtr algebra_from_json(const Json& j, std::optional<MonadTag> tag);
/// The monad an algebra description forces, if any.
std::optional<MonadTag> algebra_tag(const Json& j);

Json witness_to_json(const Witness& w);
Json law_report_to_json(const LawReport& r);
std::string law_report_to_text(const LawReport& r);

Json graph_to_json(const ReductionGraph& g);
std::string graph_to_dot(const ReductionGraph& g);
std::string graph_to_text(const ReductionGraph& g);

Json complex_to_json(const TruncatedComplex& c);
/// Vertices and 1-simplices of a complex as a multigraph.
std::string complex_skeleton_dot(const TruncatedComplex& c);

}  // namespace pev
