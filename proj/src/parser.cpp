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

#include "ffdyn/parser.hpp"

#include <cctype>

#include "ffdyn/errors.hpp"

namespace ffdyn {

namespace {

struct Token {
    enum class Kind { Integer, T, Z, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Int value;       // Integer
    std::size_t pos; // for error messages
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t pos = i_;
        if (i_ >= src_.size()) { tok_ = {Token::Kind::End, Int(0), pos}; return; }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Token::Kind::Integer, Int(src_.substr(i_, j - i_), 10), pos};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case 'T': tok_ = {Token::Kind::T, Int(0), pos}; return;
            case 'z': tok_ = {Token::Kind::Z, Int(0), pos}; return;
            case '+': tok_ = {Token::Kind::Plus, Int(0), pos}; return;
            case '-': tok_ = {Token::Kind::Minus, Int(0), pos}; return;
            case '*': tok_ = {Token::Kind::Star, Int(0), pos}; return;
            case '/': tok_ = {Token::Kind::Slash, Int(0), pos}; return;
            case '^': tok_ = {Token::Kind::Caret, Int(0), pos}; return;
            case '(': tok_ = {Token::Kind::LParen, Int(0), pos}; return;
            case ')': tok_ = {Token::Kind::RParen, Int(0), pos}; return;
            default:
                raise(ErrorCode::SyntaxError,
                      "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(pos));
        }
    }

  private:
    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, Int(0), 0};
};

std::unique_ptr<ExprAST> make_node(ExprAST::Kind k) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    return n;
}

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    std::unique_ptr<ExprAST> parse() {
        auto e = expr();
        if (lex_.current().kind != Token::Kind::End)
            raise(ErrorCode::SyntaxError,
                  "trailing input at position " + std::to_string(lex_.current().pos));
        return e;
    }

  private:
    std::unique_ptr<ExprAST> expr() {
        auto lhs = term();
        for (;;) {
            Token::Kind k = lex_.current().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return lhs;
            lex_.advance();
            auto node = make_node(k == Token::Kind::Plus ? ExprAST::Kind::Add : ExprAST::Kind::Sub);
            node->lhs = std::move(lhs);
            node->rhs = term();
            lhs = std::move(node);
        }
    }

    std::unique_ptr<ExprAST> term() {
        auto lhs = factor();
        for (;;) {
            Token::Kind k = lex_.current().kind;
            if (k != Token::Kind::Star && k != Token::Kind::Slash) return lhs;
            lex_.advance();
            auto node = make_node(k == Token::Kind::Star ? ExprAST::Kind::Mul : ExprAST::Kind::Div);
            node->lhs = std::move(lhs);
            node->rhs = factor();
            lhs = std::move(node);
        }
    }

    std::unique_ptr<ExprAST> factor() {
        if (lex_.current().kind == Token::Kind::Minus) {
            std::size_t pos = lex_.current().pos;
            lex_.advance();
            auto node = make_node(ExprAST::Kind::Neg);
            node->lhs = factor();
            if (!node->lhs)
                raise(ErrorCode::SyntaxError, "dangling '-' at position " + std::to_string(pos));
            return node;
        }
        return power();
    }

    std::unique_ptr<ExprAST> power() {
        auto base = primary();
        if (lex_.current().kind != Token::Kind::Caret) return base;
        lex_.advance();
        const Token& t = lex_.current();
        if (t.kind != Token::Kind::Integer)
            raise(ErrorCode::SyntaxError,
                  "exponent must be a nonnegative integer literal (position " + std::to_string(t.pos) + ")");
        if (t.value > 1000000)
            raise(ErrorCode::ResourceLimit, "exponent too large");
        auto node = make_node(ExprAST::Kind::Pow);
        node->exponent = static_cast<long>(mpz_get_si(t.value.get_mpz_t()));
        node->lhs = std::move(base);
        lex_.advance();
        return node;
    }

    std::unique_ptr<ExprAST> primary() {
        const Token t = lex_.current();
        switch (t.kind) {
            case Token::Kind::Integer: {
                lex_.advance();
                auto node = make_node(ExprAST::Kind::Literal);
                node->literal = t.value;
                return node;
            }
            case Token::Kind::T: lex_.advance(); return make_node(ExprAST::Kind::VarT);
            case Token::Kind::Z: lex_.advance(); return make_node(ExprAST::Kind::VarZ);
            case Token::Kind::LParen: {
                lex_.advance();
                auto inner = expr();
                if (lex_.current().kind != Token::Kind::RParen)
                    raise(ErrorCode::SyntaxError,
                          "missing ')' at position " + std::to_string(lex_.current().pos));
                lex_.advance();
                return inner;
            }
            default:
                raise(ErrorCode::SyntaxError,
                      "unexpected token at position " + std::to_string(t.pos));
        }
    }

    Lexer lex_;
};

constexpr int kMaxExprDegree = 2048;

void check_degree(const ZPoly& p) {
    if (p.degree() > kMaxExprDegree) raise(ErrorCode::ResourceLimit, "expression degree too large");
}

ZPoly eval_node(const ExprAST& ast, ConstField field) {
    switch (ast.kind) {
        case ExprAST::Kind::Literal:
            return ZPoly::constant(KElem::from_const(field.from_integer(ast.literal)));
        case ExprAST::Kind::VarT:
            return ZPoly::constant(KElem::variable(field));
        case ExprAST::Kind::VarZ:
            return ZPoly::variable(field);
        case ExprAST::Kind::Neg:
            return -eval_node(*ast.lhs, field);
        case ExprAST::Kind::Add:
            return eval_node(*ast.lhs, field) + eval_node(*ast.rhs, field);
        case ExprAST::Kind::Sub:
            return eval_node(*ast.lhs, field) - eval_node(*ast.rhs, field);
        case ExprAST::Kind::Mul: {
            ZPoly out = eval_node(*ast.lhs, field) * eval_node(*ast.rhs, field);
            check_degree(out);
            return out;
        }
        case ExprAST::Kind::Div: {
            ZPoly num = eval_node(*ast.lhs, field);
            ZPoly den = eval_node(*ast.rhs, field);
            if (den.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero in expression");
            if (den.degree() > 0)
                raise(ErrorCode::NotPolynomialInZ, "division by a z-dependent expression");
            return num * den.coeff(0).inverse();
        }
        case ExprAST::Kind::Pow: {
            ZPoly base = eval_node(*ast.lhs, field);
            if (base.degree() > 0 &&
                static_cast<long long>(base.degree()) * ast.exponent > kMaxExprDegree)
                raise(ErrorCode::ResourceLimit, "power degree too large");
            ZPoly acc = ZPoly::constant(KElem::from_const(field.one()));
            for (long i = 0; i < ast.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    raise(ErrorCode::Internal, "unhandled expression node");
}

bool mentions_z(const ExprAST& ast) {
    if (ast.kind == ExprAST::Kind::VarZ) return true;
    if (ast.lhs && mentions_z(*ast.lhs)) return true;
    if (ast.rhs && mentions_z(*ast.rhs)) return true;
    return false;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::unique_ptr<ExprAST> parse_expression(const std::string& src) {
    return Parser(src).parse();
}

ZPoly eval_expression(const ExprAST& ast, ConstField field) { return eval_node(ast, field); }

PolyMap parse_map(const std::string& src, ConstField field) {
    ZPoly p = eval_expression(*parse_expression(src), field);
    if (p.degree() < 2)
        raise(ErrorCode::DegreeTooLow, "map must be polynomial in z of degree at least 2");
    return PolyMap(std::move(p));
}

ProjPoint parse_point(const std::string& src, ConstField field) {
    if (trimmed(src) == "inf") return ProjPoint::infinity(field);
    return ProjPoint::finite(parse_kelem(src, field));
}

KElem parse_kelem(const std::string& src, ConstField field) {
    auto ast = parse_expression(src);
    if (mentions_z(*ast)) raise(ErrorCode::SyntaxError, "points must not mention z");
    ZPoly p = eval_expression(*ast, field);
    return p.coeff(0);
}

} // namespace ffdyn
