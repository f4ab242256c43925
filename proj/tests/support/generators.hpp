#ifndef FFDYN_TEST_GENERATORS_HPP
#define FFDYN_TEST_GENERATORS_HPP

#include <random>

#include "ffdyn/dynamics.hpp"
#include "ffdyn/parser.hpp"

namespace ffdyn::testing {

// deterministic value generators for the property suites

inline FElem random_felem(ConstField F, std::mt19937_64& rng) {
    if (F.kind() == ConstField::Kind::Rationals) {
        long n = static_cast<long>(rng() % 19) - 9;
        long d = static_cast<long>(rng() % 8) + 1;
        return F.from_rational(make_rat(n, d));
    }
    return F.from_integer(static_cast<long>(rng() % F.characteristic()));
}

inline FElem random_nonzero_felem(ConstField F, std::mt19937_64& rng) {
    for (;;) {
        FElem x = random_felem(F, rng);
        if (!x.is_zero()) return x;
    }
}

inline FPoly random_fpoly(ConstField F, int max_deg, std::mt19937_64& rng, bool nonzero = false) {
    for (;;) {
        int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_deg + 1));
        std::vector<FElem> c;
        c.reserve(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) c.push_back(random_felem(F, rng));
        FPoly p(F, std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline KElem random_kelem(ConstField F, int max_deg, std::mt19937_64& rng, bool nonzero = false) {
    for (;;) {
        KElem x = KElem::ratio(random_fpoly(F, max_deg, rng, nonzero), random_fpoly(F, max_deg, rng, true));
        if (!nonzero || !x.is_zero()) return x;
    }
}

/// Random map of degree 2 or 3 with small coefficients.
inline PolyMap random_polymap(ConstField F, std::mt19937_64& rng) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<KElem> c;
    for (int i = 0; i < d; ++i) c.push_back(random_kelem(F, 1, rng));
    c.push_back(random_kelem(F, 1, rng, true));
    return PolyMap(ZPoly(F, std::move(c)));
}

/// Random invertible affine change with small coefficients.
inline AffineMap random_affine(ConstField F, std::mt19937_64& rng) {
    return AffineMap(random_kelem(F, 1, rng, true), random_kelem(F, 1, rng));
}

inline KElem kq(const std::string& text) {
    return parse_kelem(text, ConstField::rationals());
}

inline FPoly fpq(const std::string& text) {
    KElem x = kq(text);
    if (!x.den().is_one()) throw std::runtime_error("not a polynomial: " + text);
    return x.num();
}

} // namespace ffdyn::testing

#endif
