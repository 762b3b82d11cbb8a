#pragma once

// Surface syntax for U(gl_n) and gl_2n elements.
//
//   element  := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := atom ('^' uint)?
//   atom     := rational | 'e[' uint ',' uint ']' | '(' element ')'
//   rational := uint ('/' uint)?
//
// Juxtaposition and '*' both multiply; products are noncommutative and
// left-associative. Whitespace is ignored.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gl2n/matrix.hpp"
#include "gl2n/module_action.hpp"
#include "gl2n/pbw.hpp"

namespace gl2n {

/// Largest exponent accepted after '^'.
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

/// Parses and PBW-normalises. Indices must lie in [1, n]. Throws ParseError.
UeaElement parse_uea(std::string_view text, Rank n);

/// Parses a linear combination of units e[i,j], 1 <= i,j <= 2n. Throws ParseError.
Gl2nElement parse_gl2n(std::string_view text, Rank n);

/// Deterministic rendering: terms by degree then PBW-lex, factors in PBW
/// order, reduced rational coefficients. parse_uea inverts it.
std::string print_normal(const UeaElement& a);
std::string print_monomial(const Monomial& m);
std::string print_gl2n(const Gl2nElement& x);
std::string print_matrix(const RationalMatrix& m);

/// [[ [[i,j,exp],...], "p/q" ], ...]
nlohmann::json uea_to_json(const UeaElement& a);
/// Factor lists are read as words and straightened, so any order is accepted.
UeaElement uea_from_json(const nlohmann::json& j, Rank n);

/// Array of arrays of rational strings.
nlohmann::json matrix_to_json(const RationalMatrix& m);
/// Accepts rational strings or JSON integers; floats are rejected.
RationalMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace gl2n
