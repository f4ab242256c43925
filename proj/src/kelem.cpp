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

#include "ffdyn/kelem.hpp"

#include "ffdyn/errors.hpp"

namespace ffdyn {

KElem KElem::from_poly(FPoly num) {
    ConstField f = num.field();
    return KElem(std::move(num), FPoly::constant(f.one()));
}

KElem KElem::ratio(FPoly num, FPoly den) {
    if (num.field() != den.field())
        raise(ErrorCode::FieldMismatch, "numerator and denominator over different fields");
    if (den.is_zero()) raise(ErrorCode::DivisionByZero, "zero denominator in K element");
    if (num.is_zero()) return KElem(num.field());
    if (!den.is_one()) {
        FPoly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.exact_div(g);
            den = den.exact_div(g);
        }
        FElem lead_inv = den.leading().inverse();
        num = num * lead_inv;
        den = den * lead_inv;
    }
    return KElem(std::move(num), std::move(den));
}

FElem KElem::constant_value() const {
    if (!is_constant()) raise(ErrorCode::Internal, "constant_value on non-constant element");
    return num_.is_zero() ? field().zero() : num_.coeff(0);
}

KElem KElem::operator-() const { return KElem(-num_, den_); }

KElem KElem::operator+(const KElem& o) const {
    // common fast path: both denominators trivial (orbit iteration of
    // polynomial-coefficient maps stays in F[T])
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ + o.num_);
    return ratio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

KElem KElem::operator-(const KElem& o) const {
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ - o.num_);
    return ratio(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

KElem KElem::operator*(const KElem& o) const {
    if (den_.is_one() && o.den_.is_one()) return from_poly(num_ * o.num_);
    return ratio(num_ * o.num_, den_ * o.den_);
}

KElem KElem::operator/(const KElem& o) const {
    if (o.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero in K");
    return ratio(num_ * o.den_, den_ * o.num_);
}

KElem KElem::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero in K");
    return ratio(den_, num_);
}

KElem KElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    KElem acc = from_const(field().one());
    KElem base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FElem KElem::specialize(const FElem& t) const {
    FElem d = den_.eval(t);
    if (d.is_zero()) raise(ErrorCode::DivisionByZero, "denominator vanishes at specialization point");
    return num_.eval(t) / d;
}

bool KElem::operator<(const KElem& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

std::string KElem::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

const KElem& ProjPoint::value() const {
    if (is_infinity()) raise(ErrorCode::Internal, "value() on the point at infinity");
    return *x_;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return *x_ == *o.x_;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (is_infinity()) return false;
    if (o.is_infinity()) return true;
    return *x_ < *o.x_;
}

} // namespace ffdyn
