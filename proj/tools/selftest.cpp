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

#include <iostream>
#include <random>

#include "ffdyn/classify.hpp"
#include "ffdyn/parser.hpp"

namespace {

using namespace ffdyn;

FElem random_felem(ConstField F, std::mt19937_64& rng) {
    if (F.kind() == ConstField::Kind::Rationals) {
        long n = static_cast<long>(rng() % 19) - 9;
        long d = static_cast<long>(rng() % 8) + 1;
        return F.from_rational(make_rat(n, d));
    }
    return F.from_integer(static_cast<long>(rng() % F.characteristic()));
}

FPoly random_fpoly(ConstField F, int max_deg, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_deg + 1));
        std::vector<FElem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(random_felem(F, rng));
        FPoly p(F, std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

KElem random_kelem(ConstField F, int max_deg, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        FPoly num = random_fpoly(F, max_deg, rng, nonzero);
        FPoly den = random_fpoly(F, max_deg, rng, true);
        KElem x = KElem::ratio(num, den);
        if (!nonzero || !x.is_zero()) return x;
    }
}

bool suite_product_formula() {
    for (ConstField F : {ConstField::rationals(), ConstField::prime_field(5)}) {
        PlaceContext ctx(F);
        std::mt19937_64 rng(20260301);
        for (int i = 0; i < 1000; ++i) {
            KElem x = random_kelem(F, 5, rng, true);
            if (ctx.product_formula_check(x) != 0) {
                std::cerr << "product formula failed for " << x.to_string() << " over "
                          << F.to_string() << "\n";
                return false;
            }
        }
    }
    return true;
}

bool suite_functional_equation() {
    ConstField Q = ConstField::rationals();
    PlaceContext ctx(Q);
    std::mt19937_64 rng(20260302);
    std::vector<PolyMap> maps{parse_map("z^2 + T", Q), parse_map("T*z^3", Q),
                              parse_map("z^2 - T^2 + T", Q)};
    for (const PolyMap& phi : maps) {
        for (int i = 0; i < 40; ++i) {
            KElem x = random_kelem(Q, 2, rng, false);
            HeightValue hx = canonical_height(ctx, phi, ProjPoint::finite(x));
            HeightValue hfx = canonical_height(ctx, phi, ProjPoint::finite(phi.apply(x)));
            if (!hx.is_exact() || !hfx.is_exact()) continue;
            if (hfx.exact_value() != Rat(phi.degree()) * hx.exact_value()) {
                std::cerr << "functional equation failed for " << phi.to_string() << " at "
                          << x.to_string() << "\n";
                return false;
            }
        }
    }
    return true;
}

bool suite_oracle_agreement() {
    ConstField F3 = ConstField::prime_field(3);
    PlaceContext ctx(F3);
    PolyMap phi = parse_map("z^2 + T", F3);
    // all points of height <= 1: f/g with deg f, deg g <= 1, g monic
    std::vector<ProjPoint> points{ProjPoint::infinity(F3)};
    std::vector<FPoly> nums, dens;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::vector<FElem> c{F3.from_integer(a), F3.from_integer(b)};
            nums.emplace_back(F3, c);
        }
    for (int a = 0; a < 3; ++a) {
        std::vector<FElem> c{F3.from_integer(a), F3.one()};
        dens.emplace_back(F3, c);
        dens.push_back(FPoly::constant(F3.one()));
    }
    for (const FPoly& n : nums)
        for (const FPoly& d : dens) {
            if (d.is_zero()) continue;
            points.push_back(ProjPoint::finite(KElem::ratio(n, d)));
        }
    for (const ProjPoint& x : points) {
        bool oracle = oracle_preperiodic(ctx, phi, x);
        bool direct = is_preperiodic(ctx, phi, x).first;
        if (oracle != direct) {
            std::cerr << "oracle disagreement at " << x.to_string() << "\n";
            return false;
        }
    }
    return true;
}

int report(const char* name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    return ok ? 0 : 1;
}

} // namespace

int run_selftest() {
    int failures = 0;
    try {
        failures += report("product-formula suite (1000 random over Q(T) and F5(T))",
                           suite_product_formula());
        failures += report("functional-equation suite", suite_functional_equation());
        failures += report("oracle-agreement suite (F3(T), height <= 1)", suite_oracle_agreement());
    } catch (const std::exception& e) {
        std::cerr << "selftest aborted: " << e.what() << "\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
