// Copyright 2026 The hypsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypsub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "hypsub/bijection.hpp"
#include "hypsub/error.hpp"
#include "hypsub/report.hpp"
#include "hypsub/rho.hpp"

namespace hypsub::cli {

int exit_code(Status s) {
  switch (s) {
    case Status::Proved: return kExitOk;
    case Status::Disproved: return kExitNegative;
    case Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int exit_code(SolidityStatus s) {
  switch (s) {
    case SolidityStatus::Supported: return kExitOk;
    case SolidityStatus::Violated: return kExitNegative;
    case SolidityStatus::Inconclusive: return kExitUnknown;
  }
  return kExitUnknown;
}

int exit_code(Conclusion c) {
  switch (c) {
    case Conclusion::Supported: return kExitOk;
    case Conclusion::NotSupported: return kExitNegative;
    case Conclusion::Inconclusive: return kExitUnknown;
  }
  return kExitUnknown;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) detail::fail<ParseError>("cannot read '", path, "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string sig_path;
  std::vector<std::string> hyp_paths;
  std::string rho = "ext";
  std::string term;
  bool json = false;

  std::string pres_path;
  std::string identity;
  unsigned gamma_n = 1;
  std::string solid_rho;
  std::vector<std::string> solid_hyps;
  std::optional<unsigned> all_hyps_depth;
  Limits limits;

  unsigned depth = 0;
  VarIndex vars = 1;
  unsigned max_order = kMaxModelOrder;
  bool list = false;
};

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

Signature load_signature(const Options& o) { return parse_signature(read_file(o.sig_path)); }

Hypersubstitution load_hyp(const std::string& path, const Signature& sig) {
  return parse_hypersubstitution(read_file(path), sig);
}

int cmd_apply(const Options& o, std::ostream& out) {
  const auto sig = load_signature(o);
  if (o.hyp_paths.size() != 1) detail::fail<ParseError>("apply takes exactly one --hyp");
  const auto sigma = load_hyp(o.hyp_paths[0], sig);
  const auto kind = parse_rho(o.rho);
  const auto term = parse_term(o.term, sig);
  const auto image = apply_rho(kind, sigma, term);
  std::optional<Word> word;
  if (sig.is_semigroup_type()) word = term_to_word(image, sig);
  if (o.json) {
    nlohmann::json j{{"rho", render_rho(kind)}, {"term", render_term(image, sig)}};
    j["word"] = word ? nlohmann::json(render_word(*word)) : nlohmann::json(nullptr);
    emit_json(out, j);
  } else {
    out << render_term(image, sig) << '\n';
    if (word) out << "word " << render_word(*word) << '\n';
  }
  return kExitOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const auto sig = load_signature(o);
  if (o.hyp_paths.size() != 2)
    detail::fail<ParseError>("compose takes exactly two --hyp files (outer first)");
  const auto composed = compose(load_hyp(o.hyp_paths[0], sig), load_hyp(o.hyp_paths[1], sig));
  if (o.json) emit_json(out, hypersubstitution_json(composed));
  else out << render_hypersubstitution(composed);
  return kExitOk;
}

int cmd_bij(const Options& o, std::ostream& out) {
  const auto sig = load_signature(o);
  if (o.hyp_paths.size() != 1) detail::fail<ParseError>("bij takes exactly one --hyp");
  const auto cert = bij_certificate(load_hyp(o.hyp_paths[0], sig));
  if (o.json) {
    emit_json(out, certificate_json(cert, sig));
  } else if (cert) {
    out << "bijective\n" << render_certificate(*cert, sig);
  } else {
    out << "not bijective\n";
  }
  return cert ? kExitOk : kExitNegative;
}

int cmd_bij_enum(const Options& o, std::ostream& out) {
  const auto sig = load_signature(o);
  const auto all = enumerate_bijective(sig);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : all) list.push_back(hypersubstitution_json(s));
    emit_json(out, {{"count", all.size()}, {"hypersubstitutions", list}});
    return kExitOk;
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    out << "# " << i + 1 << '\n' << render_hypersubstitution(all[i]);
  out << "count " << all.size() << '\n';
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sig = load_signature(o);
  if (o.hyp_paths.size() != 1) detail::fail<ParseError>("invert takes exactly one --hyp");
  const auto sigma = load_hyp(o.hyp_paths[0], sig);
  if (!bij_certificate(sigma)) {
    err << "error: hypersubstitution is not bijective\n";
    return kExitNegative;
  }
  const auto inverse = invert(sigma);
  if (o.json) emit_json(out, hypersubstitution_json(inverse));
  else out << render_hypersubstitution(inverse);
  return kExitOk;
}

int cmd_enum_terms(const Options& o, std::ostream& out) {
  const auto sig = load_signature(o);
  const auto terms = enumerate_terms(sig, o.depth, o.vars);
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& t : terms) list.push_back(render_term(t, sig));
    emit_json(out, {{"count", terms.size()}, {"terms", list}});
    return kExitOk;
  }
  for (const auto& t : terms) out << render_term(t, sig) << '\n';
  out << "count " << terms.size() << '\n';
  return kExitOk;
}

int cmd_enum_models(const Options& o, std::ostream& out) {
  const auto models = enumerate_finite_semigroups(o.max_order);
  nlohmann::json counts = nlohmann::json::object();
  for (unsigned n = 1; n <= o.max_order; ++n) {
    auto c = std::count_if(models.begin(), models.end(),
                           [&](const FiniteSemigroup& s) { return s.order() == n; });
    counts[std::to_string(n)] = c;
    if (!o.json) out << "order " << n << ": " << c << '\n';
  }
  if (o.list && !o.json) {
    for (const auto& m : models) out << "# order " << m.order() << '\n' << model_text(m);
  }
  if (o.json) {
    nlohmann::json j{{"counts", counts}};
    if (o.list) {
      nlohmann::json tables = nlohmann::json::array();
      for (const auto& m : models) tables.push_back(std::vector<int>(m.table().begin(), m.table().end()));
      j["tables"] = tables;
    }
    emit_json(out, j);
  }
  return kExitOk;
}

Presentation load_presentation(const Options& o) {
  return parse_presentation(read_file(o.pres_path));
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto pres = load_presentation(o);
  const auto v = decide(pres, parse_identity(o.identity), o.limits.budget, o.limits.max_order);
  if (o.json) emit_json(out, verdict_json(v, o.limits));
  else out << verdict_text(v, o.limits);
  return exit_code(v.status);
}

int cmd_gamma_solid(const Options& o, std::ostream& out) {
  const auto pres = load_presentation(o);
  const auto v = classify_gamma_solid(pres, o.gamma_n, o.limits.budget, o.limits.max_order);
  if (o.json) {
    auto j = verdict_json(v, o.limits);
    j["gamma"] = o.gamma_n;
    emit_json(out, j);
  } else {
    out << "gamma_" << o.gamma_n << "-solid iff " << render_identity(v.goal) << '\n'
        << verdict_text(v, o.limits);
  }
  return exit_code(v.status);
}

int cmd_criteria(const Options& o, bool sa, std::ostream& out) {
  const auto pres = load_presentation(o);
  const auto r = sa ? check_bij2_sa_criteria(pres, o.limits.budget, o.limits.max_order)
                    : check_bij2_fa_criteria(pres, o.limits.budget, o.limits.max_order);
  if (o.json) emit_json(out, criteria_json(r, o.limits));
  else out << criteria_text(r, o.limits);
  return exit_code(r.conclusion);
}

int cmd_rho_solid(const Options& o, std::ostream& out) {
  const auto pres = load_presentation(o);
  const auto kind = parse_rho(o.solid_rho);
  const auto sig = semigroup_signature();
  std::vector<Hypersubstitution> hyps;
  if (o.all_hyps_depth) hyps = enumerate_hypersubstitutions(sig, *o.all_hyps_depth);
  for (const auto& path : o.solid_hyps) hyps.push_back(load_hyp(path, sig));
  if (hyps.empty())
    detail::fail<ParseError>("rho-solid needs hypersubstitution files or --all-hyps <depth>");
  std::vector<Identity> sample(pres.axioms().begin(), pres.axioms().end());
  const auto r = check_rho_solidity(pres, kind, hyps, sample, o.limits.budget, o.limits.max_order);
  if (o.json) emit_json(out, solidity_json(r, o.limits));
  else out << solidity_text(r, o.limits);
  return exit_code(r.status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypersubstitutions, rho-mappings and semigroup variety verdicts", "hypsub"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Structured output");

  auto* apply = app.add_subcommand("apply", "Apply a rho-mapping of a hypersubstitution to a term");
  apply->add_option("--sig", o.sig_path, "Signature file")->required();
  apply->add_option("--hyp", o.hyp_paths, "Hypersubstitution file")->required();
  apply->add_option("--rho", o.rho, "ext | fa | sa | gamma:<n>");
  apply->add_option("term", o.term, "Term text")->required();

  auto* comp = app.add_subcommand("compose", "Compose two hypersubstitutions (first o_h second)");
  comp->add_option("--sig", o.sig_path, "Signature file")->required();
  comp->add_option("--hyp", o.hyp_paths, "Hypersubstitution files")->required();

  auto* bij = app.add_subcommand("bij", "Bijectivity certificate");
  bij->add_option("--sig", o.sig_path, "Signature file")->required();
  bij->add_option("--hyp", o.hyp_paths, "Hypersubstitution file")->required();

  auto* bij_enum = app.add_subcommand("bij-enum", "List all bijective hypersubstitutions");
  bij_enum->add_option("--sig", o.sig_path, "Signature file")->required();

  auto* inv = app.add_subcommand("invert", "Inverse of a bijective hypersubstitution");
  inv->add_option("--sig", o.sig_path, "Signature file")->required();
  inv->add_option("--hyp", o.hyp_paths, "Hypersubstitution file")->required();

  auto* terms = app.add_subcommand("enum-terms", "List all terms up to a depth");
  terms->add_option("--sig", o.sig_path, "Signature file")->required();
  terms->add_option("--depth", o.depth, "Maximum depth")->required();
  terms->add_option("--vars", o.vars, "Number of variables")->required();

  auto* models = app.add_subcommand("enum-models", "Count labelled finite semigroups");
  models->add_option("--max-order", o.max_order, "Largest order (at most 4)");
  models->add_flag("--list", o.list, "Print the tables");

  auto* variety = app.add_subcommand("variety", "Verdicts about a semigroup variety");
  variety->require_subcommand(1);
  variety->fallthrough();
  variety->add_option("presentation", o.pres_path, "Presentation file")->required();
  variety->add_option("--budget-nodes", o.limits.budget.max_nodes, "Derivation node budget");
  variety->add_option("--max-word-len", o.limits.budget.max_word_len, "Longest intermediate word");
  variety->add_option("--max-subst-len", o.limits.budget.max_subst_len,
                      "Longest word substituted for a variable");
  variety->add_option("--max-order", o.limits.max_order, "Largest counter-model order")
      ->check(CLI::Range(1u, kMaxModelOrder));

  auto* v_decide = variety->add_subcommand("decide", "Decide membership of an identity");
  v_decide->add_option("identity", o.identity, "e.g. 'xy = yx'")->required();
  auto* v_gamma = variety->add_subcommand("gamma-solid", "Classify gamma_n-solidity");
  v_gamma->add_option("n", o.gamma_n, "n >= 1")->required()->check(CLI::PositiveNumber);
  auto* v_sa = variety->add_subcommand("sa-criteria", "Bij(2)-sa-solidity criteria");
  auto* v_fa = variety->add_subcommand("fa-criteria", "Bij(2)-fa-solidity criteria");
  auto* v_rho = variety->add_subcommand("rho-solid", "Check rho-solidity on the axioms");
  v_rho->add_option("rho", o.solid_rho, "ext | fa | sa | gamma:<n>")->required();
  v_rho->add_option("hyps", o.solid_hyps, "Hypersubstitution files");
  v_rho->add_option("--all-hyps", o.all_hyps_depth,
                    "Use every hypersubstitution with image depth <= N");
  for (auto* sub : {v_decide, v_gamma, v_sa, v_fa, v_rho}) sub->fallthrough();
  for (auto* sub : {apply, comp, bij, bij_enum, inv, terms, models}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (apply->parsed()) return cmd_apply(o, out);
    if (comp->parsed()) return cmd_compose(o, out);
    if (bij->parsed()) return cmd_bij(o, out);
    if (bij_enum->parsed()) return cmd_bij_enum(o, out);
    if (inv->parsed()) return cmd_invert(o, out, err);
    if (terms->parsed()) return cmd_enum_terms(o, out);
    if (models->parsed()) return cmd_enum_models(o, out);
    if (v_decide->parsed()) return cmd_decide(o, out);
    if (v_gamma->parsed()) return cmd_gamma_solid(o, out);
    if (v_sa->parsed()) return cmd_criteria(o, true, out);
    if (v_fa->parsed()) return cmd_criteria(o, false, out);
    if (v_rho->parsed()) return cmd_rho_solid(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: no subcommand\n";
  return kExitInputError;
}

}  // namespace hypsub::cli
