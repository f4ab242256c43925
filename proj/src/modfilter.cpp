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

#include "modfilter.hpp"

namespace ffdyn::internal {

namespace {

constexpr std::uint64_t kFilterPrime = 1000003;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t r = 1, base = a % m, e = m - 2; // m prime
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

void strip(Img& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a := a mod b (b nonempty with unit lead)
void rem_inplace(Img& a, const Img& b, std::uint64_t M) {
    std::uint64_t inv = invmod(b.back(), M);
    while (a.size() >= b.size()) {
        std::uint64_t factor = mulmod(a.back(), inv, M);
        if (factor) {
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = mulmod(factor, b[i], M);
                std::uint64_t& slot = a[off + i];
                slot = slot >= sub ? slot - sub : slot + (M - sub);
            }
        }
        a.pop_back();
        strip(a);
        if (a.empty()) return;
    }
}

} // namespace

std::uint64_t filter_modulus(const ConstField& F) {
    return F.kind() == ConstField::Kind::PrimeField ? F.characteristic() : kFilterPrime;
}

std::optional<Img> mod_image(const FPoly& f, std::uint64_t M) {
    Img img(static_cast<std::size_t>(f.degree()) + 1);
    if (f.field().kind() == ConstField::Kind::PrimeField) {
        for (int i = 0; i <= f.degree(); ++i) img[static_cast<std::size_t>(i)] = f.coeff(i).residue();
        return img;
    }
    for (int i = 0; i <= f.degree(); ++i) {
        FElem c = f.coeff(i);
        const Rat& q = c.rational();
        std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), M);
        if (den == 0) return std::nullopt;
        // fdiv gives the nonnegative floor remainder, also for negatives
        std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), M);
        img[static_cast<std::size_t>(i)] = mulmod(num, invmod(den, M), M);
    }
    if (img.back() == 0) return std::nullopt; // degree must be preserved
    return img;
}

int gcd_degree_mod(Img a, Img b, std::uint64_t M) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        rem_inplace(a, b, M);
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

bool divisible_mod(const Img& f, const Img& g, std::uint64_t M) {
    Img a = f;
    rem_inplace(a, g, M);
    return a.empty();
}

} // namespace ffdyn::internal
