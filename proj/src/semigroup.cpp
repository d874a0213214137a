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

#include "hypsub/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "hypsub/error.hpp"

namespace hypsub {

Word::Word(std::vector<VarIndex> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) detail::fail<ValidationError>("words must be non-empty");
  for (auto v : letters_)
    if (v == 0) detail::fail<ValidationError>("variable indices start at 1");
}

std::set<VarIndex> Word::variables() const {
  return {letters_.begin(), letters_.end()};
}

Word word_of_range(VarIndex first, VarIndex last) {
  std::vector<VarIndex> letters;
  for (VarIndex v = first; v <= last; ++v) letters.push_back(v);
  return Word(std::move(letters));
}

namespace {

std::size_t read_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (start == pos || ec != std::errc())
    detail::fail<ParseError>("expected a number at offset ", start, " in '", text, "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<VarIndex> letters;
  std::size_t pos = 0;
  std::size_t last_token_start = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '^') {
      if (letters.empty()) detail::fail<ParseError>("exponent without a letter in '", text, "'");
      ++pos;
      auto k = read_number(text, pos);
      if (k == 0) detail::fail<ParseError>("zero exponent in '", text, "'");
      std::vector<VarIndex> token(letters.begin() + last_token_start, letters.end());
      for (std::size_t i = 1; i < k; ++i) letters.insert(letters.end(), token.begin(), token.end());
      continue;
    }
    last_token_start = letters.size();
    if (c == 'x' && pos + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
      ++pos;
      auto k = read_number(text, pos);
      if (k == 0) detail::fail<ParseError>("variable x0 in '", text, "'");
      letters.push_back(static_cast<VarIndex>(k));
      continue;
    }
    auto v = alias_variable(c);
    if (!v) detail::fail<ParseError>("unknown letter '", c, "' in word '", text, "'");
    letters.push_back(*v);
    ++pos;
  }
  if (letters.empty()) detail::fail<ParseError>("empty word");
  return Word(std::move(letters));
}

std::string render_word(const Word& w) {
  std::string out;
  for (auto v : w.letters()) out += render_variable(v);
  return out;
}

Identity parse_identity(std::string_view text) {
  static constexpr std::string_view separators[] = {"\xE2\x89\x88", "=", "~"};
  for (auto sep : separators) {
    auto at = text.find(sep);
    if (at == std::string_view::npos) continue;
    auto rest = text.substr(at + sep.size());
    for (auto other : separators)
      if (rest.find(other) != std::string_view::npos)
        detail::fail<ParseError>("more than one '=' in identity '", text, "'");
    return {parse_word(trim(text.substr(0, at))), parse_word(trim(rest))};
  }
  detail::fail<ParseError>("identity '", text, "' needs the form '<word> = <word>'");
}

std::string render_identity(const Identity& id) {
  return render_word(id.lhs) + " = " + render_word(id.rhs);
}

Presentation::Presentation(std::vector<Identity> axioms) {
  for (auto& a : axioms) {
    bool duplicate = std::any_of(axioms_.begin(), axioms_.end(), [&](const Identity& b) {
      return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
    });
    if (!duplicate) axioms_.push_back(std::move(a));
  }
}

Presentation parse_presentation(std::string_view text) {
  std::vector<Identity> axioms;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      axioms.push_back(parse_identity(line));
    } catch (const ParseError& e) {
      detail::fail<ParseError>("line ", line_no, ": ", e.what());
    }
  }
  return Presentation(std::move(axioms));
}

Word term_to_word(const Term& t, const Signature& sig) {
  if (!sig.is_semigroup_type())
    detail::fail<ValidationError>("words need the signature of one binary symbol");
  std::vector<VarIndex> letters;
  std::function<void(const Term&)> walk = [&](const Term& s) {
    if (s.is_var()) {
      letters.push_back(s.var_index());
      return;
    }
    for (const auto& c : s.children()) walk(c);
  };
  walk(t);
  return Word(std::move(letters));
}

namespace {

std::vector<Term> bracket_range(std::span<const VarIndex> letters) {
  if (letters.size() == 1) return {Term::var(letters[0])};
  std::vector<Term> out;
  for (std::size_t split = letters.size() - 1; split >= 1; --split) {
    auto lefts = bracket_range(letters.first(split));
    auto rights = bracket_range(letters.subspan(split));
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(Term::app(0, {l, r}));
  }
  return out;
}

}  // namespace

std::vector<Term> bracketings(const Word& w, std::size_t cap) {
  if (w.length() > cap)
    detail::fail<CapExceeded>("word of length ", w.length(), " exceeds bracketing cap ", cap);
  return bracket_range(w.letters());
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Disproved: return "Disproved";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace hypsub
