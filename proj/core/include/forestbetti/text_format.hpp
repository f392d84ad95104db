#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "forestbetti/monomial.hpp"
#include "forestbetti/simplicial_complex.hpp"

namespace forestbetti {

// Complex format: one facet per line, vertex names separated by whitespace.
// Blank lines and lines starting with '#' are skipped.
SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& g);

// Ideal format: one generator per line. A variable is a letter followed by
// an optional numeric index (a, x1, y12), optionally raised to a power with
// '^'. Factors may be separated by '*' or whitespace or simply juxtaposed, so
// "ab", "a*b" and "a b" all denote the same generator; "1" is the unit.
// Throws kParse with the offending line number.
MonomialIdeal parse_ideal(std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);

// Renders m with variables in natural name order (x2 before x10). Factors
// are juxtaposed when every name is a letter with an optional numeric index,
// and joined with '*' otherwise.
std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names);

// Natural order on variable names: alphabetic prefix, then numeric suffix.
bool natural_name_less(std::string_view a, std::string_view b);

// Lexicographic order on monomials with variables ranked by natural name
// order; at the first differing variable the larger exponent comes first.
bool named_lex_before(const Monomial& a, const Monomial& b,
                      const std::vector<std::string>& names);

enum class InputKind { kAuto, kIdeal, kComplex };

// '*' or '^' anywhere selects the ideal format. Otherwise a line with two or
// more whitespace-separated tokens selects the complex format, and input made
// of single tokens is read as an ideal ("ab" is the generator a*b).
InputKind detect_input_kind(std::string_view text);

using ParsedInput = std::variant<MonomialIdeal, SimplicialComplex>;
ParsedInput parse_input(std::string_view text, InputKind kind = InputKind::kAuto);

// Equality of the named facets (resp. named generators) as sets, ignoring
// the order of the vertex table.
bool equivalent(const SimplicialComplex& a, const SimplicialComplex& b);
bool equivalent(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace forestbetti
