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

#ifndef FFDYN_KELEM_HPP
#define FFDYN_KELEM_HPP

#include <optional>
#include <string>

#include "ffdyn/fpoly.hpp"

namespace ffdyn {

/**
 * Element of the function field K = F(T), kept in canonical form:
 * gcd(num, den) = 1 and den monic. Canonical form is unique per value,
 * so equality is structural. The universal scalar of the library.
 */
class KElem {
  public:
    explicit KElem(ConstField f) : num_(f), den_(FPoly::constant(f.one())) {} // zero

    static KElem from_poly(FPoly num);
    static KElem from_const(const FElem& c) { return from_poly(FPoly::constant(c)); }
    static KElem variable(ConstField f) { return from_poly(FPoly::variable(f)); }
    /// num/den reduced to canonical form; throws DivisionByZero when den = 0.
    static KElem ratio(FPoly num, FPoly den);

    const ConstField& field() const noexcept { return num_.field(); }
    const FPoly& num() const noexcept { return num_; }
    const FPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the value lies in the constant field F (including 0).
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Payload for constant values; throws otherwise.
    FElem constant_value() const;

    KElem operator-() const;
    KElem operator+(const KElem& o) const;
    KElem operator-(const KElem& o) const;
    KElem operator*(const KElem& o) const;
    KElem operator/(const KElem& o) const; // throws DivisionByZero
    KElem inverse() const;
    KElem pow(long e) const; // negative e allowed for nonzero values

    /// Evaluation T := t; throws DivisionByZero when the denominator
    /// vanishes at t.
    FElem specialize(const FElem& t) const;

    bool operator==(const KElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const KElem& o) const { return !(*this == o); }
    bool operator<(const KElem& o) const; // canonical order for containers

    std::string to_string() const;

  private:
    KElem(FPoly num, FPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    FPoly num_;
    FPoly den_;
};

/// A point of the projective line over K: a field element or infinity.
class ProjPoint {
  public:
    static ProjPoint infinity(ConstField f) { return ProjPoint(f, std::nullopt); }
    static ProjPoint finite(KElem x) {
        ConstField f = x.field();
        return ProjPoint(f, std::move(x));
    }

    const ConstField& field() const noexcept { return field_; }
    bool is_infinity() const noexcept { return !x_.has_value(); }
    const KElem& value() const; // pre: finite

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    /// Finite points in canonical order, infinity last.
    bool operator<(const ProjPoint& o) const;

    std::string to_string() const { return is_infinity() ? "inf" : x_->to_string(); }

  private:
    ProjPoint(ConstField f, std::optional<KElem> x) : field_(f), x_(std::move(x)) {}

    ConstField field_;
    std::optional<KElem> x_;
};

} // namespace ffdyn

#endif
