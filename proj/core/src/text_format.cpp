#include "forestbetti/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "forestbetti/error.hpp"

namespace forestbetti {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Visits the non-blank, non-comment lines with their 1-based line numbers.
template <class Visit>
void for_each_content_line(std::string_view text, Visit&& visit) {
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    const auto raw = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    visit(line, number);
  }
}

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && is_space(line[k])) ++k;
    const std::size_t start = k;
    while (k < line.size() && !is_space(line[k])) ++k;
    if (k > start) tokens.emplace_back(line.substr(start, k - start));
  }
  return tokens;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what);
}

bool is_indexed_letter(std::string_view name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), is_digit);
}

Monomial parse_generator(std::string_view line, std::size_t number,
                         std::vector<std::string>& variables,
                         std::unordered_map<std::string, VariableId>& ids) {
  if (line == "1") return Monomial{};
  std::vector<Monomial::Term> terms;
  std::size_t k = 0;
  while (k < line.size()) {
    const char c = line[k];
    if (is_space(c) || c == '*') {
      ++k;
      continue;
    }
    if (!is_alpha(c)) {
      parse_error(number, std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = k++;
    while (k < line.size() && is_digit(line[k])) ++k;
    std::string name(line.substr(start, k - start));

    std::uint32_t power = 1;
    if (k < line.size() && line[k] == '^') {
      ++k;
      const std::size_t digits = k;
      while (k < line.size() && is_digit(line[k])) ++k;
      const auto [ptr, ec] =
          std::from_chars(line.data() + digits, line.data() + k, power);
      if (k == digits || ec != std::errc{}) {
        parse_error(number, "bad exponent after '" + name + "^'");
      }
    }
    auto [it, inserted] =
        ids.try_emplace(name, static_cast<VariableId>(variables.size()));
    if (inserted) variables.push_back(name);
    terms.emplace_back(it->second, power);
  }
  auto m = Monomial::from_terms(std::move(terms));
  if (m.is_one()) parse_error(number, "generator has no variables");
  return m;
}

// Splits a name into alternating text and digit runs for natural ordering.
int natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      auto da = a.substr(i, ie - i);
      auto db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
      if (const int c = da.compare(db); c != 0) return c;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return a.compare(b);
}

std::vector<Monomial::Term> named_terms(const Monomial& m,
                                        const std::vector<std::string>& names) {
  auto terms = m.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const Monomial::Term& x, const Monomial::Term& y) {
              return natural_name_less(names[x.first], names[y.first]);
            });
  return terms;
}

}  // namespace

bool natural_name_less(std::string_view a, std::string_view b) {
  return natural_compare(a, b) < 0;
}

bool named_lex_before(const Monomial& a, const Monomial& b,
                      const std::vector<std::string>& names) {
  const auto ta = named_terms(a, names);
  const auto tb = named_terms(b, names);
  std::size_t k = 0;
  for (; k < ta.size() && k < tb.size(); ++k) {
    if (ta[k] == tb[k]) continue;
    if (ta[k].first != tb[k].first) {
      return natural_name_less(names[ta[k].first], names[tb[k].first]);
    }
    return ta[k].second > tb[k].second;
  }
  return k < ta.size() && k == tb.size();
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<std::string>> raw;
  for_each_content_line(text, [&](std::string_view line, std::size_t) {
    raw.push_back(split_whitespace(line));
  });
  return normalize_facets(raw);
}

std::string format_complex(const SimplicialComplex& g) {
  std::ostringstream out;
  for (const auto& facet : g.facet_names()) {
    for (std::size_t k = 0; k < facet.size(); ++k) {
      out << (k ? " " : "") << facet[k];
    }
    out << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::vector<std::string> variables;
  std::unordered_map<std::string, VariableId> ids;
  std::vector<Monomial> gens;
  for_each_content_line(text, [&](std::string_view line, std::size_t number) {
    gens.push_back(parse_generator(line, number, variables, ids));
  });
  return MonomialIdeal::minimalize(std::move(variables), std::move(gens));
}

std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  const auto terms = named_terms(m, names);
  const bool juxtapose =
      std::all_of(terms.begin(), terms.end(), [&](const Monomial::Term& t) {
        return is_indexed_letter(names[t.first]);
      });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && !juxtapose) out += '*';
    out += names[terms[k].first];
    if (terms[k].second > 1) out += '^' + std::to_string(terms[k].second);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    out += format_monomial(g, ideal.variables());
    out += '\n';
  }
  return out;
}

InputKind detect_input_kind(std::string_view text) {
  bool monomial_syntax = false;
  bool multi_token = false;
  for_each_content_line(text, [&](std::string_view line, std::size_t) {
    if (line.find_first_of("*^") != std::string_view::npos) {
      monomial_syntax = true;
    }
    if (split_whitespace(line).size() > 1) multi_token = true;
  });
  if (monomial_syntax) return InputKind::kIdeal;
  if (multi_token) return InputKind::kComplex;
  return InputKind::kIdeal;
}

ParsedInput parse_input(std::string_view text, InputKind kind) {
  if (kind == InputKind::kAuto) kind = detect_input_kind(text);
  if (kind == InputKind::kIdeal) return parse_ideal(text);
  return parse_complex(text);
}

bool equivalent(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto named = [](const SimplicialComplex& g) {
    std::set<std::set<std::string>> out;
    for (const auto& f : g.facet_names()) out.emplace(f.begin(), f.end());
    return out;
  };
  return a.num_facets() == b.num_facets() && named(a) == named(b);
}

bool equivalent(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto named = [](const MonomialIdeal& ideal) {
    std::set<std::string> out;
    for (const auto& g : ideal.generators()) {
      out.insert(format_monomial(g, ideal.variables()));
    }
    return out;
  };
  return a.num_generators() == b.num_generators() && named(a) == named(b);
}

}  // namespace forestbetti
