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

#ifndef FFDYN_CONST_FIELD_HPP
#define FFDYN_CONST_FIELD_HPP

#include <cstdint>
#include <string>

#include "ffdyn/rational.hpp"

namespace ffdyn {

class FElem;

/**
 * The constant field F of K = F(T): either Q or a prime field F_p.
 *
 * Every element, polynomial and map in the system carries one of these
 * descriptors; mixing fields is rejected at the arithmetic boundary.
 * All arithmetic is exact, nothing is rounded anywhere.
 */
class ConstField {
  public:
    enum class Kind : std::uint8_t { Rationals, PrimeField };

    static ConstField rationals() { return ConstField(Kind::Rationals, 0); }
    /// Throws NotPrime unless p is a prime (checked deterministically).
    static ConstField prime_field(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
    /// 0 for Q, p for F_p.
    std::uint64_t characteristic() const noexcept { return p_; }

    FElem zero() const;
    FElem one() const;
    FElem from_integer(long n) const;
    FElem from_integer(const Int& n) const;
    /// Over F_p reduces numerator and denominator mod p; throws
    /// NonIntegralResidue if the denominator vanishes.
    FElem from_rational(const Rat& q) const;

    bool operator==(const ConstField& o) const noexcept { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const ConstField& o) const noexcept { return !(*this == o); }

    std::string to_string() const; // "Q" or "F<p>"

  private:
    ConstField(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

/**
 * An element of the constant field. Immutable value type; all operations
 * are pure and exact. Over Q the payload is a GMP rational in lowest
 * terms, over F_p a residue in [0, p).
 */
class FElem {
  public:
    FElem() = delete;

    const ConstField& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    FElem operator-() const;
    FElem operator+(const FElem& o) const;
    FElem operator-(const FElem& o) const;
    FElem operator*(const FElem& o) const;
    /// Throws DivisionByZero.
    FElem operator/(const FElem& o) const;
    FElem inverse() const;
    FElem pow(long e) const; // negative e allowed for nonzero elements

    bool operator==(const FElem& o) const;
    bool operator!=(const FElem& o) const { return !(*this == o); }
    /// Canonical total order (used only for deterministic output, not math).
    bool operator<(const FElem& o) const;

    /// Payload accessors; precondition: matching field kind. On a
    /// temporary element the rational payload is returned by value, so
    /// expressions like poly.coeff(i).rational() cannot dangle.
    const Rat& rational() const&;
    Rat rational() const&&;
    std::uint64_t residue() const;

    std::string to_string() const;

  private:
    friend class ConstField;
    FElem(ConstField f, Rat q, std::uint64_t r) : field_(f), q_(std::move(q)), r_(r) {}

    ConstField field_;
    Rat q_;           // Rationals payload
    std::uint64_t r_; // PrimeField payload
};

} // namespace ffdyn

#endif
