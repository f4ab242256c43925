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

#include "ffdyn/fpoly.hpp"

#include <optional>

#include "ffdyn/errors.hpp"
#include "modfilter.hpp"

namespace ffdyn {

namespace {

void require_same_field(const FPoly& a, const FPoly& b) {
    if (a.field() != b.field())
        raise(ErrorCode::FieldMismatch, "polynomials live over different constant fields");
}

// ---- integer subresultant gcd ------------------------------------------
//
// Plain monic Euclid over Q suffers from mid-sequence coefficient blowup,
// and KElem reduction calls gcd constantly. Over Q we therefore clear
// denominators and run the subresultant pseudo-remainder sequence on
// primitive integer polynomials, whose growth stays polynomial.

using IPoly = std::vector<Int>; // low degree first, no trailing zeros

void istrip(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly iprimitive(IPoly p) {
    Int content(0);
    for (const Int& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (Int& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return p;
}

// pseudo-remainder: lc(B)^(degA-degB+1) * A reduced by B, computed in place
IPoly iprem(IPoly A, const IPoly& B) {
    const Int& lb = B.back();
    long e = static_cast<long>(A.size()) - static_cast<long>(B.size()) + 1;
    while (!A.empty() && A.size() >= B.size()) {
        Int s = A.back();
        for (Int& c : A) c *= lb;
        std::size_t off = A.size() - B.size();
        for (std::size_t i = 0; i < B.size(); ++i) A[off + i] -= s * B[i];
        istrip(A);
        --e;
    }
    if (e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (Int& c : A) c *= scale;
    }
    return A;
}

IPoly isubresultant_gcd(IPoly A, IPoly B) {
    if (A.size() < B.size()) std::swap(A, B);
    Int g(1), h(1);
    for (;;) {
        long delta = static_cast<long>(A.size()) - static_cast<long>(B.size());
        IPoly R = iprem(A, B);
        if (R.empty()) return iprimitive(std::move(B));
        if (R.size() == 1) return IPoly{Int(1)};
        A = std::move(B);
        B = std::move(R);
        Int divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        for (Int& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        g = A.back();
        if (delta > 0) {
            Int gp;
            mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta > 1) {
                Int hp;
                mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
                mpz_divexact(gp.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            }
            h = gp;
        }
    }
}

IPoly to_integer_poly(const FPoly& f) {
    Int lcm(1);
    for (int i = 0; i <= f.degree(); ++i) {
        FElem c = f.coeff(i);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    IPoly out;
    out.reserve(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        FElem c = f.coeff(i);
        Rat scaled = c.rational() * Rat(lcm);
        out.push_back(Int(scaled.get_num()));
    }
    return iprimitive(std::move(out));
}

FPoly from_integer_poly(const IPoly& p, ConstField F) {
    std::vector<FElem> coeffs;
    coeffs.reserve(p.size());
    for (const Int& c : p) coeffs.push_back(F.from_rational(Rat(c)));
    return FPoly(F, std::move(coeffs));
}

} // namespace

FPoly::FPoly(ConstField f, std::vector<FElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const FElem& c : c_)
        if (c.field() != field_) raise(ErrorCode::FieldMismatch, "coefficient field mismatch");
    normalize();
}

void FPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FPoly FPoly::constant(const FElem& c) {
    return FPoly(c.field(), std::vector<FElem>{c});
}

FPoly FPoly::monomial(const FElem& c, int e) {
    if (e < 0) raise(ErrorCode::Internal, "negative monomial exponent");
    std::vector<FElem> v(static_cast<std::size_t>(e) + 1, c.field().zero());
    v.back() = c;
    return FPoly(c.field(), std::move(v));
}

bool FPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool FPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FElem FPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return field_.zero();
    return c_[static_cast<std::size_t>(i)];
}

const FElem& FPoly::leading() const {
    if (c_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

FPoly FPoly::operator-() const {
    std::vector<FElem> v;
    v.reserve(c_.size());
    for (const FElem& c : c_) v.push_back(-c);
    return FPoly(field_, std::move(v));
}

FPoly FPoly::operator+(const FPoly& o) const {
    require_same_field(*this, o);
    std::vector<FElem> v;
    std::size_t n = std::max(c_.size(), o.c_.size());
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FElem a = i < c_.size() ? c_[i] : field_.zero();
        FElem b = i < o.c_.size() ? o.c_[i] : field_.zero();
        v.push_back(a + b);
    }
    return FPoly(field_, std::move(v));
}

FPoly FPoly::operator-(const FPoly& o) const { return *this + (-o); }

FPoly FPoly::operator*(const FPoly& o) const {
    require_same_field(*this, o);
    if (is_zero() || o.is_zero()) return FPoly(field_);
    std::vector<FElem> v(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            v[i + j] = v[i + j] + c_[i] * o.c_[j];
        }
    }
    return FPoly(field_, std::move(v));
}

FPoly FPoly::operator*(const FElem& s) const {
    std::vector<FElem> v;
    v.reserve(c_.size());
    for (const FElem& c : c_) v.push_back(c * s);
    return FPoly(field_, std::move(v));
}

std::pair<FPoly, FPoly> FPoly::divrem(const FPoly& d) const {
    require_same_field(*this, d);
    if (d.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {FPoly(field_), *this};
    std::vector<FElem> rem = c_;
    std::vector<FElem> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, field_.zero());
    FElem inv_lead = d.leading().inverse();
    for (int i = degree(); i >= d.degree(); --i) {
        FElem q = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (q.is_zero()) continue;
        quo[static_cast<std::size_t>(i - d.degree())] = q;
        for (int j = 0; j <= d.degree(); ++j) {
            std::size_t k = static_cast<std::size_t>(i - d.degree() + j);
            rem[k] = rem[k] - q * d.coeff(j);
        }
    }
    return {FPoly(field_, std::move(quo)), FPoly(field_, std::move(rem))};
}

FPoly FPoly::exact_div(const FPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) raise(ErrorCode::Internal, "division expected to be exact left a remainder");
    return q;
}

bool FPoly::divides(const FPoly& f) const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "divisibility by the zero polynomial");
    if (f.is_zero()) return true;
    if (degree() > f.degree()) return false;
    if (degree() == 0) return true;
    std::uint64_t M = internal::filter_modulus(field_);
    auto fi = internal::mod_image(f, M);
    auto gi = internal::mod_image(*this, M);
    if (fi && gi && !internal::divisible_mod(*fi, *gi, M)) return false;
    return f.divrem(*this).second.is_zero();
}

FPoly FPoly::monic() const {
    if (is_zero()) raise(ErrorCode::ZeroPolynomial, "cannot normalize zero polynomial to monic");
    return *this * leading().inverse();
}

FPoly FPoly::derivative() const {
    if (c_.size() <= 1) return FPoly(field_);
    std::vector<FElem> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(c_[i] * field_.from_integer(static_cast<long>(i)));
    return FPoly(field_, std::move(v));
}

FPoly FPoly::pow(int e) const {
    if (e < 0) raise(ErrorCode::Internal, "negative polynomial power");
    FPoly acc = constant(field_.one());
    FPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FElem FPoly::eval(const FElem& t) const {
    FElem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

bool FPoly::operator==(const FPoly& o) const {
    require_same_field(*this, o);
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

bool FPoly::operator<(const FPoly& o) const {
    require_same_field(*this, o);
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] < o.c_[i]) return true;
        if (o.c_[i] < c_[i]) return false;
    }
    return false;
}

std::string FPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        FElem c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool needs_paren = cs.find('/') != std::string::npos;
        std::string coeff_part = needs_paren ? "(" + cs + ")" : cs;
        if (i == 0) {
            out += coeff_part;
        } else {
            std::string var_part = i == 1 ? var : var + "^" + std::to_string(i);
            if (cs == "1")
                out += var_part;
            else
                out += coeff_part + "*" + var_part;
        }
    }
    return out;
}

FPoly poly_gcd(const FPoly& a, const FPoly& b) {
    if (a.field() != b.field())
        raise(ErrorCode::FieldMismatch, "gcd of polynomials over different fields");
    if (a.is_zero() && b.is_zero()) raise(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    ConstField F = a.field();
    FPoly one = FPoly::constant(F.one());
    if ((!a.is_zero() && a.degree() == 0) || (!b.is_zero() && b.degree() == 0)) return one;
    if (!a.is_zero() && !b.is_zero()) {
        std::uint64_t M = internal::filter_modulus(F);
        auto ia = internal::mod_image(a, M);
        auto ib = internal::mod_image(b, M);
        if (ia && ib && internal::gcd_degree_mod(std::move(*ia), std::move(*ib), M) == 0) return one;
    }
    if (F.kind() == ConstField::Kind::Rationals && !a.is_zero() && !b.is_zero())
        return from_integer_poly(isubresultant_gcd(to_integer_poly(a), to_integer_poly(b)), F)
            .monic();
    FPoly x = a, y = b;
    while (!y.is_zero()) {
        y = y.monic();
        FPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

FElem poly_eval(const FPoly& a, const FElem& t) { return a.eval(t); }

} // namespace ffdyn
