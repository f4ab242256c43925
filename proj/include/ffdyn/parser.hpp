/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFDYN_PARSER_HPP
#define FFDYN_PARSER_HPP

#include <memory>

#include "ffdyn/dynamics.hpp"

namespace ffdyn {

/**
 * Expression tree for the text front-end: integer literals, the
 * variables T and z, the four arithmetic operators, powers with
 * nonnegative integer exponents, and parentheses.
 */
struct ExprAST {
    enum class Kind { Literal, VarT, VarZ, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind;
    Int literal;                     // Literal
    long exponent = 0;               // Pow
    std::unique_ptr<ExprAST> lhs;    // unary/binary
    std::unique_ptr<ExprAST> rhs;    // binary
};

/// Parse into an AST; SyntaxError carries the offending position.
std::unique_ptr<ExprAST> parse_expression(const std::string& src);

/// Evaluate to a polynomial in z over K. Division by a z-dependent value
/// raises NotPolynomialInZ.
ZPoly eval_expression(const ExprAST& ast, ConstField field);

/// Full map pipeline: parse, evaluate, check degree >= 2.
PolyMap parse_map(const std::string& src, ConstField field);

/// Point parser: "inf" for infinity, otherwise a z-free expression.
ProjPoint parse_point(const std::string& src, ConstField field);

/// z-free expression to a field element (test/CLI convenience).
KElem parse_kelem(const std::string& src, ConstField field);

} // namespace ffdyn

#endif
