#pragma once

#include <string_view>

#include "idcert/poly/mpoly.hpp"

namespace idcert {

/// Parses a polynomial in the variables x<i>_<j> (group i from 1, index j from 0)
/// with integer or rational coefficients and + - * / ^ and parentheses. Division
/// is by constants only. Throws ParseError (with the byte offset) on syntax errors
/// and unknown variables, DomainError naming the first offending monomial when the
/// result is not multihomogeneous of the space's degree.
MPoly<RationalField> parse_polynomial(std::string_view text, const TensorSpace& space);

/// Same, without the homogeneity check.
MPoly<RationalField> parse_polynomial_raw(std::string_view text, const TensorSpace& space);

/// "3", "-2/5": a single rational number. Throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace idcert
