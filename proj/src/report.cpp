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

#include "hypsub/report.hpp"

#include <sstream>

namespace hypsub {

using nlohmann::json;

namespace {

json budget_json(const BudgetReport& used, const Limits& limits) {
  return {
      {"nodes_visited", used.nodes_visited},
      {"max_nodes", limits.budget.max_nodes},
      {"node_budget_exhausted", used.node_budget_exhausted},
      {"max_word_len", limits.budget.max_word_len},
      {"max_subst_len", limits.budget.max_subst_len},
      {"rewrites_pruned_by_length", used.rewrites_pruned_by_length},
      {"max_order", limits.max_order},
      {"max_order_searched", used.max_order_searched},
      {"models_checked", used.models_checked},
  };
}

json table_json(const FiniteSemigroup& s) {
  json rows = json::array();
  for (unsigned a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (unsigned b = 0; b < s.order(); ++b) row.push_back(s.multiply(a, b));
    rows.push_back(row);
  }
  return rows;
}

json identity_json(const Identity& id) { return render_identity(id); }

json verdict_witness(const Verdict& v, const Limits& limits) {
  if (v.status == Status::Proved && v.derivation) {
    json steps = json::array();
    for (const auto& s : v.derivation->steps)
      steps.push_back({{"word", render_word(s.word)},
                       {"axiom", s.axiom},
                       {"reversed", s.reversed},
                       {"position", s.position}});
    return {{"kind", "derivation"}, {"start", render_word(v.derivation->start)},
            {"steps", steps}};
  }
  if (v.status == Status::Disproved && v.counter_model) {
    const auto& cm = *v.counter_model;
    json assignment = json::object();
    for (const auto& [var, value] : cm.assignment) assignment[render_variable(var)] = value;
    return {{"kind", "counter_model"},
            {"order", cm.model.order()},
            {"table", table_json(cm.model)},
            {"assignment", assignment},
            {"lhs_value", cm.lhs_value},
            {"rhs_value", cm.rhs_value}};
  }
  json report = budget_json(v.used, limits);
  report["kind"] = "budget";
  return report;
}

void indent_lines(std::ostringstream& out, const std::string& text, std::string_view pad) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out << pad << line << '\n';
}

std::string budget_line(const BudgetReport& used, const Limits& limits) {
  std::ostringstream out;
  out << "budget: nodes " << used.nodes_visited << "/" << limits.budget.max_nodes
      << (used.node_budget_exhausted ? " (exhausted)" : "") << ", word length <= "
      << limits.budget.max_word_len << ", substitution length <= "
      << limits.budget.max_subst_len << ", pruned by length " << used.rewrites_pruned_by_length
      << ", models checked " << used.models_checked << " up to order "
      << used.max_order_searched << "/" << limits.max_order;
  return out.str();
}

}  // namespace

json verdict_json(const Verdict& v, const Limits& limits) {
  return {{"status", status_name(v.status)},
          {"goal", identity_json(v.goal)},
          {"witness", verdict_witness(v, limits)},
          {"budget_used", budget_json(v.used, limits)}};
}

json solidity_json(const SolidityReport& r, const Limits& limits) {
  json witness = nullptr;
  if (r.witness) {
    const Signature sig = semigroup_signature();
    witness = {{"hyp_index", r.witness->hyp_index},
               {"hypersubstitution", hypersubstitution_json(r.witness->sigma)},
               {"source", identity_json(r.witness->source)},
               {"lhs_bracketing", render_term(r.witness->lhs_bracketing, sig)},
               {"rhs_bracketing", render_term(r.witness->rhs_bracketing, sig)},
               {"image", identity_json(r.witness->image)},
               {"verdict", verdict_json(r.witness->verdict, limits)}};
  }
  json checked = json::array();
  for (const auto& id : r.identities_checked) checked.push_back(identity_json(id));
  return {{"status", solidity_name(r.status)},
          {"witness", witness},
          {"identities_checked", checked},
          {"first_unknown", r.first_unknown ? identity_json(*r.first_unknown) : json(nullptr)},
          {"budget_used",
           {{"checks", r.checks},
            {"unknown", r.unknown},
            {"max_nodes", limits.budget.max_nodes},
            {"max_word_len", limits.budget.max_word_len},
            {"max_subst_len", limits.budget.max_subst_len},
            {"max_order", limits.max_order}}}};
}

json criteria_json(const CriteriaReport& r, const Limits& limits) {
  json scanned = json::array();
  for (const auto& id : r.scanned_axioms) scanned.push_back(identity_json(id));
  json closure = json::array();
  for (const auto& w : r.closure) closure.push_back(render_word(w));
  return {{"status", conclusion_name(r.conclusion)},
          {"witness",
           {{"condition_i", verdict_json(r.condition_i, limits)},
            {"trigger", trigger_name(r.trigger)},
            {"trigger_witness",
             r.trigger_witness ? identity_json(*r.trigger_witness) : json(nullptr)},
            {"condition_ii",
             r.condition_ii ? verdict_json(*r.condition_ii, limits) : json(nullptr)},
            {"scanned_axioms", scanned},
            {"closure_start", render_word(r.closure_start)},
            {"closure", closure}}},
          {"budget_used",
           {{"closure_words", r.closure.size()},
            {"max_nodes", limits.budget.max_nodes},
            {"max_word_len", limits.budget.max_word_len},
            {"max_subst_len", limits.budget.max_subst_len},
            {"max_order", limits.max_order}}}};
}

json hypersubstitution_json(const Hypersubstitution& sigma) {
  json out = json::object();
  const auto& sig = sigma.signature();
  for (SymbolIndex i = 0; i < sig.size(); ++i)
    out[sig[i].name] = render_term(sigma.image(i), sig);
  return out;
}

json certificate_json(const std::optional<BijCertificate>& cert, const Signature& sig) {
  if (!cert) return {{"bijective", false}};
  json h = json::object();
  json p = json::object();
  for (SymbolIndex i = 0; i < sig.size(); ++i) {
    h[sig[i].name] = sig[cert->symbol_map[i]].name;
    p[sig[i].name] = cert->permutations[i];
  }
  return {{"bijective", true}, {"h", h}, {"p", p}};
}

std::string model_text(const FiniteSemigroup& s) {
  std::ostringstream out;
  for (unsigned a = 0; a < s.order(); ++a) {
    for (unsigned b = 0; b < s.order(); ++b) out << (b ? " " : "") << int{s.multiply(a, b)};
    out << '\n';
  }
  return out.str();
}

std::string verdict_text(const Verdict& v, const Limits& limits) {
  std::ostringstream out;
  out << status_name(v.status) << ": " << render_identity(v.goal) << '\n';
  if (v.status == Status::Proved && v.derivation) {
    out << "  " << render_word(v.derivation->start) << '\n';
    for (const auto& s : v.derivation->steps)
      out << "  = " << render_word(s.word) << "   [axiom " << s.axiom + 1
          << (s.reversed ? " reversed" : "") << ", at " << s.position << "]\n";
  } else if (v.status == Status::Disproved && v.counter_model) {
    const auto& cm = *v.counter_model;
    out << "  " << render_identity(v.goal) << " refuted in order-" << cm.model.order()
        << " model\n";
    indent_lines(out, model_text(cm.model), "    ");
    out << "  assignment:";
    for (const auto& [var, value] : cm.assignment) out << ' ' << render_variable(var) << '=' << value;
    out << "\n  lhs = " << cm.lhs_value << ", rhs = " << cm.rhs_value << '\n';
  }
  out << budget_line(v.used, limits) << '\n';
  return out.str();
}

std::string solidity_text(const SolidityReport& r, const Limits& limits) {
  std::ostringstream out;
  out << solidity_name(r.status) << '\n';
  out << "identities checked:";
  for (const auto& id : r.identities_checked) out << ' ' << render_identity(id) << ';';
  out << "\nchecks: " << r.checks << ", unknown: " << r.unknown << '\n';
  if (r.first_unknown) out << "first unknown: " << render_identity(*r.first_unknown) << '\n';
  if (r.witness) {
    const Signature sig = semigroup_signature();
    out << "witness: hypersubstitution #" << r.witness->hyp_index + 1 << '\n';
    indent_lines(out, render_hypersubstitution(r.witness->sigma), "  ");
    out << "  from " << render_identity(r.witness->source) << " via "
        << render_term(r.witness->lhs_bracketing, sig) << " / "
        << render_term(r.witness->rhs_bracketing, sig) << '\n';
    out << "  image " << render_identity(r.witness->image) << '\n';
    indent_lines(out, verdict_text(r.witness->verdict, limits), "  ");
  }
  return out.str();
}

std::string criteria_text(const CriteriaReport& r, const Limits& limits) {
  std::ostringstream out;
  out << conclusion_name(r.conclusion) << '\n';
  out << "condition (i):\n";
  indent_lines(out, verdict_text(r.condition_i, limits), "  ");
  out << "condition (ii) trigger: " << trigger_name(r.trigger);
  if (r.trigger_witness) out << " by " << render_identity(*r.trigger_witness);
  out << '\n';
  out << "  scanned axioms:";
  if (r.scanned_axioms.empty()) out << " (none)";
  for (const auto& id : r.scanned_axioms) out << ' ' << render_identity(id) << ';';
  out << "\n  closure of " << render_word(r.closure_start) << ": " << r.closure.size()
      << " words\n";
  if (r.condition_ii) {
    out << "condition (ii):\n";
    indent_lines(out, verdict_text(*r.condition_ii, limits), "  ");
  }
  return out.str();
}

}  // namespace hypsub
