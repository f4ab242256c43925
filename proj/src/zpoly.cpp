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

#include "ffdyn/zpoly.hpp"

#include "ffdyn/errors.hpp"

namespace ffdyn {

ZPoly::ZPoly(ConstField f, std::vector<KElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const KElem& c : c_)
        if (c.field() != field_) raise(ErrorCode::FieldMismatch, "coefficient field mismatch");
    normalize();
}

void ZPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPoly ZPoly::constant(KElem c) {
    ConstField f = c.field();
    return ZPoly(f, std::vector<KElem>{std::move(c)});
}

ZPoly ZPoly::variable(ConstField f) {
    return ZPoly(f, std::vector<KElem>{KElem(f), KElem::from_const(f.one())});
}

KElem ZPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return KElem(field_);
    return c_[static_cast<std::size_t>(i)];
}

const KElem& ZPoly::leading() const {
    if (c_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

ZPoly ZPoly::operator-() const {
    std::vector<KElem> v;
    v.reserve(c_.size());
    for (const KElem& c : c_) v.push_back(-c);
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    if (field_ != o.field_) raise(ErrorCode::FieldMismatch, "adding polynomials over different fields");
    std::vector<KElem> v;
    std::size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        KElem a = i < c_.size() ? c_[i] : KElem(field_);
        KElem b = i < o.c_.size() ? o.c_[i] : KElem(field_);
        v.push_back(a + b);
    }
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (field_ != o.field_) raise(ErrorCode::FieldMismatch, "multiplying polynomials over different fields");
    if (is_zero() || o.is_zero()) return ZPoly(field_);
    std::vector<KElem> v(c_.size() + o.c_.size() - 1, KElem(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
    }
    return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::operator*(const KElem& s) const {
    std::vector<KElem> v;
    v.reserve(c_.size());
    for (const KElem& c : c_) v.push_back(c * s);
    return ZPoly(field_, std::move(v));
}

KElem ZPoly::eval(const KElem& x) const {
    KElem acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ZPoly ZPoly::compose_affine(const KElem& a, const KElem& b) const {
    // Horner on the replacement z := a*z + b
    ZPoly lin(field_, std::vector<KElem>{b, a});
    ZPoly acc(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + ZPoly::constant(c_[i]);
    return acc;
}

bool ZPoly::operator==(const ZPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        KElem c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        // single terms bind fine under left-associative * and /; only
        // multi-term coefficients (they contain spaces) need wrapping
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (out.empty()) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        std::string coeff_part = cs.find(' ') == std::string::npos ? cs : "(" + cs + ")";
        if (i == 0) {
            out += coeff_part;
        } else {
            std::string var_part = i == 1 ? "z" : "z^" + std::to_string(i);
            if (cs == "1")
                out += var_part;
            else
                out += coeff_part + "*" + var_part;
        }
    }
    return out;
}

} // namespace ffdyn
