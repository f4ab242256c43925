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

#include "ffdyn/rational.hpp"

#include "ffdyn/errors.hpp"

namespace ffdyn {

Rat make_rat(long n, long d) {
    if (d == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

std::string int_to_string(const Int& n) { return n.get_str(); }

Int int_from_string(const std::string& s) {
    if (s.empty()) raise(ErrorCode::SyntaxError, "empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) raise(ErrorCode::SyntaxError, "bare sign is not an integer");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') raise(ErrorCode::SyntaxError, "bad integer literal '" + s + "'");
    return Int(s, 10);
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is known to be deterministic below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NonIntegralResidue: return "NonIntegralResidue";
        case ErrorCode::CharDividesDegree: return "CharDividesDegree";
        case ErrorCode::IsotrivialOverK: return "IsotrivialOverK";
        case ErrorCode::EqualPoints: return "EqualPoints";
        case ErrorCode::ConstantFieldNotFinite: return "ConstantFieldNotFinite";
        case ErrorCode::DegreeLimitExceeded: return "DegreeLimitExceeded";
        case ErrorCode::InsufficientSpecializationPoints: return "InsufficientSpecializationPoints";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NotPolynomialInZ: return "NotPolynomialInZ";
        case ErrorCode::DegreeTooLow: return "DegreeTooLow";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace ffdyn
