#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monideal/decomp.hpp"
#include "monideal/ideal.hpp"
#include "monideal/monomial.hpp"

namespace monideal {

// Literal grammar (whitespace between tokens is ignored):
//
//   ideal    := "(" monomial ("," monomial)* ")" | "(0)"
//   monomial := "1" | factor ("*" factor)*
//   factor   := "x" INT ("^" INT)?
//
// INT is a positive decimal integer. Variables are 1-based. Without an
// explicit `dim` the dimension is the largest variable index seen (1 for the
// zero ideal). All failures throw ParseError.

Monomial parse_monomial(std::string_view text, std::optional<std::size_t> dim = std::nullopt);
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// Generators in variable order: `(x1^2, x2)`.
std::string to_string(const ParametricIdeal& q);

enum class Notation { Ascii, Unicode };

/// Components joined by ` /\ ` (ASCII) or ` ∩ ` (Unicode).
std::string to_string(const Decomposition& decomposition, Notation notation = Notation::Ascii);

/// `{{1},{1,2}}`
std::string to_string(const std::vector<PrimeSupport>& supports);

}  // namespace monideal
