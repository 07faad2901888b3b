#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "quadrics/quadric.hpp"
#include "quadrics/varieties.hpp"

namespace quadrics {

/// Form-text error with the offending position (0-based offset).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses a homogeneous form: a sum of signed terms
///   term  ::= coeff | [coeff '*'] factor ('*' factor)*
///   factor::= 'x' index ['^' exponent]
///   coeff ::= integer | '[' integer (',' integer)* ']'
/// Whitespace is ignored; like terms combine; 'x1*x0' normalizes to 'x0*x1'.
/// Integer coefficients reduce mod p; bracketed vectors are extension-field
/// coefficients (little-endian in the modulus basis). All terms must share
/// one total degree >= 1 and all indices must be <= n; the zero form is
/// rejected.
Form parse_form(std::string_view text, int n, const Field& field);

/// parse_form restricted to degree exactly 2.
QuadraticForm parse_quadratic(std::string_view text, int n, const Field& field);

/// Canonical text: terms in monomial order, '+'-joined, coefficients printed
/// unless 1, repeated variables as 'xI^k'. Reparsing yields the same form.
std::string print_form(const Form& f);
std::string print_quadratic(const QuadraticForm& f);

}  // namespace quadrics
