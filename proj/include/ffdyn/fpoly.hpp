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

#ifndef FFDYN_FPOLY_HPP
#define FFDYN_FPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ffdyn/const_field.hpp"

namespace ffdyn {

/**
 * Dense univariate polynomial over the constant field, in the variable T.
 *
 * Coefficients are stored low degree first with no trailing zeros; the
 * zero polynomial is the empty coefficient vector and reports the
 * distinguished degree sentinel -1. Immutable after construction.
 */
class FPoly {
  public:
    static constexpr int kZeroDegree = -1;

    explicit FPoly(ConstField f) : field_(f) {} // zero polynomial
    FPoly(ConstField f, std::vector<FElem> coeffs);

    static FPoly constant(const FElem& c);
    /// The monomial c * T^e.
    static FPoly monomial(const FElem& c, int e);
    static FPoly variable(ConstField f) { return monomial(f.one(), 1); }

    const ConstField& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const;
    bool is_monic() const;

    /// Zero element for out-of-range indices.
    FElem coeff(int i) const;
    const FElem& leading() const; // pre: nonzero

    FPoly operator-() const;
    FPoly operator+(const FPoly& o) const;
    FPoly operator-(const FPoly& o) const;
    FPoly operator*(const FPoly& o) const;
    FPoly operator*(const FElem& s) const;

    /// Euclidean division; throws DivisionByZero on zero divisor.
    std::pair<FPoly, FPoly> divrem(const FPoly& d) const;
    /// Division that must be exact; throws Internal if a remainder is left.
    FPoly exact_div(const FPoly& d) const;
    bool divides(const FPoly& f) const;

    FPoly monic() const; // pre: nonzero
    FPoly derivative() const;
    FPoly pow(int e) const;
    FElem eval(const FElem& t) const;

    bool operator==(const FPoly& o) const;
    bool operator!=(const FPoly& o) const { return !(*this == o); }
    /// Canonical total order: by degree, then coefficients from the top.
    bool operator<(const FPoly& o) const;

    std::string to_string(const std::string& var = "T") const;

  private:
    void normalize();

    ConstField field_;
    std::vector<FElem> c_;
};

/// Monic gcd; throws BothZero when both arguments vanish.
FPoly poly_gcd(const FPoly& a, const FPoly& b);

/// Exact evaluation, kept as a free function mirroring poly_gcd.
FElem poly_eval(const FPoly& a, const FElem& t);

} // namespace ffdyn

#endif
