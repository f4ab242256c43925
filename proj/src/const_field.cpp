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

#include "ffdyn/const_field.hpp"

#include "ffdyn/errors.hpp"

namespace ffdyn {

namespace {

void require_same_field(const FElem& a, const FElem& b) {
    if (a.field() != b.field())
        raise(ErrorCode::FieldMismatch, "operands live in different constant fields");
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) raise(ErrorCode::DivisionByZero, "inverse of zero residue");
    // extended Euclid on signed 128-bit to stay exact for p near 2^63
    __int128 t = 0, newt = 1;
    __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_int(const Int& n, std::uint64_t p) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

} // namespace

ConstField ConstField::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) raise(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
    return ConstField(Kind::PrimeField, p);
}

FElem ConstField::zero() const { return FElem(*this, Rat(0), 0); }

FElem ConstField::one() const {
    return kind_ == Kind::Rationals ? FElem(*this, Rat(1), 0) : FElem(*this, Rat(0), 1 % p_);
}

FElem ConstField::from_integer(long n) const { return from_integer(Int(n)); }

FElem ConstField::from_integer(const Int& n) const {
    if (kind_ == Kind::Rationals) return FElem(*this, Rat(n), 0);
    return FElem(*this, Rat(0), reduce_int(n, p_));
}

FElem ConstField::from_rational(const Rat& q) const {
    if (kind_ == Kind::Rationals) {
        Rat c = q;
        c.canonicalize();
        return FElem(*this, c, 0);
    }
    std::uint64_t den = reduce_int(Int(q.get_den()), p_);
    if (den == 0)
        raise(ErrorCode::NonIntegralResidue,
              "denominator of " + rat_to_string(q) + " vanishes mod " + std::to_string(p_));
    std::uint64_t num = reduce_int(Int(q.get_num()), p_);
    return FElem(*this, Rat(0), mulmod(num, invmod(den, p_), p_));
}

std::string ConstField::to_string() const {
    return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
}

bool FElem::is_zero() const {
    return field_.kind() == ConstField::Kind::Rationals ? q_ == 0 : r_ == 0;
}

bool FElem::is_one() const {
    return field_.kind() == ConstField::Kind::Rationals ? q_ == 1 : r_ == 1 % field_.characteristic();
}

FElem FElem::operator-() const {
    if (field_.kind() == ConstField::Kind::Rationals) return FElem(field_, -q_, 0);
    return FElem(field_, Rat(0), r_ == 0 ? 0 : field_.characteristic() - r_);
}

FElem FElem::operator+(const FElem& o) const {
    require_same_field(*this, o);
    if (field_.kind() == ConstField::Kind::Rationals) return FElem(field_, q_ + o.q_, 0);
    return FElem(field_, Rat(0), addmod(r_, o.r_, field_.characteristic()));
}

FElem FElem::operator-(const FElem& o) const {
    require_same_field(*this, o);
    if (field_.kind() == ConstField::Kind::Rationals) return FElem(field_, q_ - o.q_, 0);
    return FElem(field_, Rat(0), submod(r_, o.r_, field_.characteristic()));
}

FElem FElem::operator*(const FElem& o) const {
    require_same_field(*this, o);
    if (field_.kind() == ConstField::Kind::Rationals) return FElem(field_, q_ * o.q_, 0);
    return FElem(field_, Rat(0), mulmod(r_, o.r_, field_.characteristic()));
}

FElem FElem::operator/(const FElem& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero constant");
    if (field_.kind() == ConstField::Kind::Rationals) return FElem(field_, q_ / o.q_, 0);
    return FElem(field_, Rat(0), mulmod(r_, invmod(o.r_, field_.characteristic()), field_.characteristic()));
}

FElem FElem::inverse() const { return field_.one() / *this; }

FElem FElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FElem base = *this;
    FElem acc = field_.one();
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool FElem::operator==(const FElem& o) const {
    require_same_field(*this, o);
    return field_.kind() == ConstField::Kind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

bool FElem::operator<(const FElem& o) const {
    require_same_field(*this, o);
    return field_.kind() == ConstField::Kind::Rationals ? q_ < o.q_ : r_ < o.r_;
}

const Rat& FElem::rational() const& {
    if (field_.kind() != ConstField::Kind::Rationals)
        raise(ErrorCode::FieldMismatch, "rational payload requested from prime-field element");
    return q_;
}

Rat FElem::rational() const&& {
    if (field_.kind() != ConstField::Kind::Rationals)
        raise(ErrorCode::FieldMismatch, "rational payload requested from prime-field element");
    return q_;
}

std::uint64_t FElem::residue() const {
    if (field_.kind() != ConstField::Kind::PrimeField)
        raise(ErrorCode::FieldMismatch, "residue payload requested from rational element");
    return r_;
}

std::string FElem::to_string() const {
    return field_.kind() == ConstField::Kind::Rationals ? rat_to_string(q_) : std::to_string(r_);
}

} // namespace ffdyn
