/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "pev/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pev/bar.hpp"
#include "pev/errors.hpp"
#include "pev/instances.hpp"
#include "pev/io.hpp"
#include "pev/laws.hpp"
#include "pev/stochastics.hpp"

namespace pev::cli {

namespace {

Json load_json(const std::string& source) {
  const auto start = source.find_first_not_of(" \t\r\n");
  const bool inline_json = start != std::string::npos && (source[start] == '{' || source[start] == '[');
  std::string text;
  if (inline_json) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open " + source);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError((inline_json ? std::string("inline JSON") : source) + ": " + e.what());
  }
}

struct Context {
  MonadTag tag;
  AlgebraPtr algebra;
};

Expr depth_one(const Json& j) {
  Expr x = expr_from_json(j);
  if (!has_depth(x, 1)) throw ParseError("expected a flat expression (depth 1), got " + render(x));
  return x;
}

Context resolve(const JobConfig& job, const std::vector<Json>& expressions) {
  std::optional<MonadTag> tag;
  if (job.instance) {
    tag = parse_monad_tag(*job.instance);
    if (!tag) throw ParseError("unknown instance \"" + *job.instance + "\"");
  }
  if (job.algebra.empty()) throw ParseError("an --algebra is required");
  const Json alg = load_json(job.algebra);
  if (!tag) tag = algebra_tag(alg);
  if (!tag && !expressions.empty()) tag = envelope_tag(expressions.front());
  for (const auto& e : expressions) {
    const auto t = envelope_tag(e);
    if (t && tag && *t != *tag) {
      throw ParseError("expression " + e.dump() + " does not belong to the " + to_string(*tag) + " instance");
    }
  }
  auto algebra = algebra_from_json(alg, tag);
  return {*tag, std::move(algebra)};
}

std::vector<Json> load_inputs(const JobConfig& job, std::size_t expected) {
  if (job.inputs.size() != expected) {
    throw ParseError(job.command + " takes " + std::to_string(expected) + " expression file(s), got " +
                     std::to_string(job.inputs.size()));
  }
  std::vector<Json> out;
  for (const auto& in : job.inputs) out.push_back(load_json(in));
  return out;
}

int report_witness(const JobConfig& job, const Witness& w, std::size_t count, std::ostream& out, std::ostream& err) {
  if (!validate_witness(w) || !check_total_evaluation_law(w)) {
    err << "internal error: produced witness " << render(w.nested) << " does not validate\n";
    return kInconsistent;
  }
  if (job.format == "json") {
    Json j = witness_to_json(w);
    j["holds"] = true;
    if (count > 0) j["count"] = count;
    out << j.dump() << "\n";
  } else {
    out << "partial evaluation: " << render(w.source) << " -> " << render(w.target) << "\n";
    out << "witness: " << render(w.nested) << "\n";
    if (count > 0) out << "witnesses: " << count << "\n";
  }
  return kYes;
}

int cmd_check(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const auto inputs = load_inputs(job, 2);
  const Context ctx = resolve(job, inputs);
  const Expr p = depth_one(inputs[0]);
  const Expr q = depth_one(inputs[1]);
  ctx.algebra->require_in_carrier(p);
  ctx.algebra->require_in_carrier(q);

  if (job.witness) {
    Witness w{expr_from_json(load_json(*job.witness)), p, q, ctx.algebra};
    if (!validate_witness(w)) {
      out << (job.format == "json" ? Json{{"valid", false}}.dump() : std::string("invalid witness")) << "\n";
      return kNo;
    }
    if (!check_total_evaluation_law(w)) {
      err << "internal error: a valid witness breaks the total-evaluation law\n";
      return kInconsistent;
    }
    out << (job.format == "json" ? Json{{"valid", true}}.dump() : std::string("valid witness")) << "\n";
    return kYes;
  }

  std::optional<Witness> found;
  std::size_t count = 0;
  if (ctx.tag == MonadTag::Distribution) {
    auto convex = std::dynamic_pointer_cast<const ConvexAlgebra>(ctx.algebra);
    if (!convex) throw ParseError("the dist instance needs a convex algebra");
    const auto vars = p.entries().size() * q.entries().size();
    if (vars > job.lp_cap) {
      throw EnumerationLimitExceeded("LP with " + std::to_string(vars) + " variables exceeds --lp-cap " +
                                     std::to_string(job.lp_cap));
    }
    found = decide_pev(p, q, convex);
  } else {
    auto all = enumerate_witnesses(p, q, ctx.algebra, job.limits);
    count = all.size();
    if (!all.empty()) found = all.front();
  }
  if (!found) {
    if (job.format == "json") {
      out << Json{{"holds", false}}.dump() << "\n";
    } else {
      out << "no partial evaluation: " << render(p) << " -/-> " << render(q) << "\n";
    }
    return kNo;
  }
  return report_witness(job, *found, count, out, err);
}

int cmd_graph(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const auto inputs = load_inputs(job, 1);
  const Context ctx = resolve(job, inputs);
  const auto g = reduction_graph(depth_one(inputs[0]), ctx.algebra, job.limits);
  const auto ars = check_ars_properties(g);
  if (job.format == "json") {
    out << graph_to_json(g).dump() << "\n";
  } else if (job.format == "text") {
    out << graph_to_text(g);
  } else {
    out << graph_to_dot(g);
  }
  if (!ars.reflexive || !ars.transitive || !ars.confluent) {
    for (const auto& c : ars.counterexamples) err << "internal error: " << c << "\n";
    return kInconsistent;
  }
  return kYes;
}

int cmd_bar(const JobConfig& job, std::ostream& out, std::ostream&) {
  const auto inputs = load_inputs(job, 1);
  const Context ctx = resolve(job, inputs);
  const auto c = build_truncated_complex(depth_one(inputs[0]), ctx.algebra, job.level, job.limits);
  if (job.format == "dot") {
    out << complex_skeleton_dot(c);
  } else {
    out << complex_to_json(c).dump() << "\n";
  }
  return kYes;
}

int cmd_laws(const JobConfig& job, std::ostream& out, std::ostream&) {
  const Context ctx = resolve(job, {});
  const Algebra& alg = *ctx.algebra;
  Rng rng(job.seed);
  std::vector<Nested> monad_samples;
  for (int depth = 1; depth <= 3; ++depth) {
    auto s = random_samples(alg, depth, job.samples, rng);
    monad_samples.insert(monad_samples.end(), s.begin(), s.end());
  }
  std::vector<Nested> algebra_samples;
  for (int depth = 1; depth <= 2; ++depth) {
    auto s = random_samples(alg, depth, job.samples, rng);
    algebra_samples.insert(algebra_samples.end(), s.begin(), s.end());
  }
  const FaultyMonad faulty(alg.monad_ptr());
  const Monad& tested = job.inject_fault ? static_cast<const Monad&>(faulty) : alg.monad();
  const LawReport monad_report = check_monad_laws(tested, monad_samples);
  const LawReport algebra_report = check_algebra_laws(alg, algebra_samples);
  const bool passed = monad_report.all_passed() && algebra_report.all_passed();
  if (job.format == "json") {
    out << Json{{"passed", passed},
                {"monad", law_report_to_json(monad_report)},
                {"algebra", law_report_to_json(algebra_report)}}
               .dump()
        << "\n";
  } else {
    out << "monad laws (" << tested.name() << "):\n" << law_report_to_text(monad_report);
    out << "algebra laws (" << alg.name() << "):\n" << law_report_to_text(algebra_report);
  }
  return passed ? kYes : kNo;
}

int cmd_sosd(const JobConfig& job, std::ostream& out, std::ostream& err) {
  const auto inputs = load_inputs(job, 2);
  const Expr p = depth_one(inputs[0]);
  const Expr q = depth_one(inputs[1]);
  auto line = std::make_shared<const ConvexAlgebra>(std::make_shared<DistributionMonad>(), 1);
  line->require_in_carrier(p);
  line->require_in_carrier(q);
  const bool dominated = sosd_1d(p, q);
  const auto witness = decide_pev(p, q, line);
  const bool agree = dominated == witness.has_value();
  if (job.format == "json") {
    Json j{{"sosd", dominated}, {"partial_evaluation", witness.has_value()}, {"agree", agree}};
    if (witness) j["witness"] = witness_to_json(*witness);
    out << j.dump() << "\n";
  } else {
    out << "sosd: " << (dominated ? "true" : "false") << "\n";
    out << "partial evaluation: " << (witness ? "true" : "false") << "\n";
    if (witness) out << "witness: " << render(witness->nested) << "\n";
  }
  if (!agree) {
    err << "internal error: dominance and partial evaluation disagree\n";
    return kInconsistent;
  }
  return dominated ? kYes : kNo;
}

void validate_job(const JobConfig& job) {
  if (job.limits.fiber_limit == 0 || job.limits.node_cap == 0 || job.limits.filler_cap == 0 || job.lp_cap == 0) {
    throw ParseError("limits must be positive");
  }
  if (job.samples == 0) throw ParseError("--samples must be positive");
}

}  // namespace

int execute(const JobConfig& job, std::ostream& out, std::ostream& err) {
  try {
    validate_job(job);
    if (job.command == "check") return cmd_check(job, out, err);
    if (job.command == "graph") return cmd_graph(job, out, err);
    if (job.command == "bar") return cmd_bar(job, out, err);
    if (job.command == "laws") return cmd_laws(job, out, err);
    if (job.command == "sosd") return cmd_sosd(job, out, err);
    err << "error: unknown command \"" << job.command << "\"\n";
    return kInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial evaluations of formal expressions"};
  app.require_subcommand(1);
  JobConfig job;

  auto add_common = [&](CLI::App* sub, bool needs_algebra) {
    sub->add_option("--instance", job.instance, "multiset | list | action | dist | terminal");
    auto* alg = sub->add_option("--algebra", job.algebra, "algebra description: JSON file or inline JSON");
    if (needs_algebra) alg->required();
    sub->add_option("--fiber-limit", job.limits.fiber_limit, "largest expression whose fiber is enumerated");
    sub->add_option("--node-cap", job.limits.node_cap, "largest reduction graph, in nodes");
    sub->add_option("--filler-cap", job.limits.filler_cap, "most fillers enumerated per horn");
  };

  auto* check = app.add_subcommand("check", "decide whether p partially evaluates to q");
  add_common(check, true);
  check->add_option("inputs", job.inputs, "expression files (or inline JSON)")->expected(2)->required();
  check->add_option("--lp-cap", job.lp_cap, "largest LP, in variables, for distributions");
  check->add_option("--witness", job.witness, "validate this witness instead of searching");
  check->add_option("--format", job.format)->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("graph", "reduction graph reachable from a seed");
  add_common(graph, true);
  graph->add_option("seed", job.inputs, "seed expression")->expected(1)->required();
  bool dot = false;
  graph->add_flag("--dot", dot, "shorthand for --format dot");
  std::string graph_format = "dot";
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json", "text"}));

  auto* bar = app.add_subcommand("bar", "truncated bar construction reachable from a seed");
  add_common(bar, true);
  bar->add_option("seed", job.inputs, "seed expression")->expected(1)->required();
  bar->add_option("--level", job.level, "top level, 0..2");
  std::string bar_format = "json";
  bar->add_option("--format", bar_format)->check(CLI::IsMember({"json", "dot"}));

  auto* laws = app.add_subcommand("laws", "check monad and algebra laws on random samples");
  add_common(laws, true);
  laws->add_option("--samples", job.samples, "samples per depth");
  laws->add_option("--seed", job.seed, "random seed");
  laws->add_flag("--inject-fault", job.inject_fault, "corrupt the multiplication to exercise failure reporting");
  laws->add_option("--format", job.format)->check(CLI::IsMember({"text", "json"}));

  auto* sosd = app.add_subcommand("sosd", "second-order stochastic dominance versus partial evaluation on Q^1");
  sosd->add_option("inputs", job.inputs, "distribution files (or inline JSON)")->expected(2)->required();
  sosd->add_option("--format", job.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  for (auto* sub : {check, graph, bar, laws, sosd}) {
    if (sub->parsed()) job.command = sub->get_name();
  }
  if (graph->parsed()) job.format = dot ? "dot" : graph_format;
  if (bar->parsed()) job.format = bar_format;
  return execute(job, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("pev");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pev::cli
