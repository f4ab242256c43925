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

#ifndef FFDYN_ZPOLY_HPP
#define FFDYN_ZPOLY_HPP

#include <string>
#include <vector>

#include "ffdyn/kelem.hpp"

namespace ffdyn {

/**
 * Dense polynomial in the dynamical variable z with coefficients in K.
 * Same conventions as FPoly: low degree first, no trailing zeros, zero
 * polynomial empty with degree -1.
 */
class ZPoly {
  public:
    explicit ZPoly(ConstField f) : field_(f) {}
    ZPoly(ConstField f, std::vector<KElem> coeffs);

    static ZPoly constant(KElem c);
    static ZPoly variable(ConstField f);

    const ConstField& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    KElem coeff(int i) const;
    const KElem& leading() const;
    const std::vector<KElem>& coeffs() const noexcept { return c_; }

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const KElem& s) const;

    KElem eval(const KElem& x) const;
    /// Substitute z := a*z + b.
    ZPoly compose_affine(const KElem& a, const KElem& b) const;

    bool operator==(const ZPoly& o) const;
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    void normalize();

    ConstField field_;
    std::vector<KElem> c_;
};

} // namespace ffdyn

#endif
