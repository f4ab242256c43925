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

#include <algorithm>
#include <random>

#include "ffdyn/classify.hpp"
#include "ffdyn/errors.hpp"

namespace ffdyn {

namespace {

// ---------------------------------------------------------------- integers

void factor_into(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        }
    }
    long trial = 17;
    while (n > 1 && Int(trial) * trial <= n && trial < 100000) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(trial))) {
            ++out[Int(trial)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(trial));
        }
        trial += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        ++out[n];
        return;
    }
    // Pollard rho (Floyd) for the remaining composite
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        auto step = [&](Int v) {
            Int r = (v * v + static_cast<long>(c)) % n;
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x >= y ? x - y : y - x;
            if (diff == 0) break; // cycle without factor, retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

std::vector<Int> divisors_of(const Int& n, std::size_t limit) {
    std::map<Int, int> fac;
    factor_into(n, fac);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > limit)
                    raise(ErrorCode::ResourceLimit, "too many divisors in rational root search");
            }
        }
    }
    return divs;
}

// ------------------------------------------------------- roots over F = Q

std::vector<FElem> roots_over_rationals(const FPoly& poly) {
    ConstField F = poly.field();
    std::vector<FElem> out;

    // squarefree part (char 0, always safe) keeps the divisor search small
    FPoly sf = poly;
    if (sf.degree() >= 2) {
        FPoly g = poly_gcd(sf, sf.derivative());
        if (g.degree() >= 1) sf = sf.exact_div(g);
    }

    int low = 0;
    while (sf.coeff(low).is_zero()) ++low;
    if (low > 0) out.push_back(F.zero());
    int deg = sf.degree();
    if (deg == low) return out;

    // primitive integer coefficients c_low..c_deg
    Int lcm_den(1);
    for (int i = low; i <= deg; ++i)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), sf.coeff(i).rational().get_den_mpz_t());
    std::vector<Int> c;
    for (int i = low; i <= deg; ++i) {
        Rat scaled = sf.coeff(i).rational() * Rat(lcm_den);
        c.push_back(Int(scaled.get_num()));
    }
    Int content(0);
    for (const Int& ci : c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ci.get_mpz_t());
    if (content > 1)
        for (Int& ci : c) mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), content.get_mpz_t());

    const int D = static_cast<int>(c.size()) - 1;
    Int a0 = c.front() >= 0 ? c.front() : -c.front();
    Int aD = c.back() >= 0 ? c.back() : -c.back();
    std::vector<Int> num_divs = divisors_of(a0, 20000);
    std::vector<Int> den_divs = divisors_of(aD, 20000);
    if (num_divs.size() * den_divs.size() > 400000)
        raise(ErrorCode::ResourceLimit, "rational root candidate space too large");

    // quick filter modulo a machine prime before the exact check
    constexpr unsigned long M = 1000003ul;
    std::vector<unsigned long> c_mod;
    c_mod.reserve(c.size());
    for (const Int& ci : c) {
        Int r = ((ci % static_cast<long>(M)) + static_cast<long>(M)) % static_cast<long>(M);
        c_mod.push_back(mpz_get_ui(r.get_mpz_t()));
    }
    auto filter_passes = [&](const Int& p, const Int& q, int sign) {
        Int qm = q % static_cast<long>(M);
        unsigned long qv = mpz_get_ui(qm.get_mpz_t());
        if (qv == 0) return true; // cannot filter, go exact
        Int pm = ((p % static_cast<long>(M)) + static_cast<long>(M)) % static_cast<long>(M);
        unsigned long pv = mpz_get_ui(pm.get_mpz_t());
        if (sign < 0 && pv) pv = M - pv;
        // r = p * q^{-1} mod M, Horner
        unsigned long qinv = 1, base = qv, e = M - 2;
        while (e) {
            if (e & 1) qinv = static_cast<unsigned long>((static_cast<__uint128_t>(qinv) * base) % M);
            base = static_cast<unsigned long>((static_cast<__uint128_t>(base) * base) % M);
            e >>= 1;
        }
        unsigned long r = static_cast<unsigned long>((static_cast<__uint128_t>(pv) * qinv) % M);
        unsigned long acc = 0;
        for (std::size_t i = c_mod.size(); i-- > 0;)
            acc = static_cast<unsigned long>((static_cast<__uint128_t>(acc) * r + c_mod[i]) % M);
        return acc == 0;
    };
    auto is_exact_root = [&](const Int& p, const Int& q, int sign) {
        // sum c_i (s p)^i q^(D-i) == 0
        Int sp = sign < 0 ? Int(-p) : p;
        Int acc(0);
        Int ppow(1);
        std::vector<Int> qpow(static_cast<std::size_t>(D) + 1, Int(1));
        for (int i = 1; i <= D; ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
        for (int i = 0; i <= D; ++i) {
            acc += c[static_cast<std::size_t>(i)] * ppow * qpow[static_cast<std::size_t>(D - i)];
            ppow *= sp;
        }
        return acc == 0;
    };

    for (const Int& p : num_divs) {
        for (const Int& q : den_divs) {
            Int g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                if (p == 0 && sign < 0) continue;
                if (!filter_passes(p, q, sign)) continue;
                if (!is_exact_root(p, q, sign)) continue;
                Rat r = make_rat(sign < 0 ? Int(-p) : p, q);
                out.push_back(F.from_rational(r));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ------------------------------------------------------ roots over F = F_p

FPoly poly_mulmod(const FPoly& a, const FPoly& b, const FPoly& m) {
    return (a * b).divrem(m).second;
}

FPoly poly_powmod(FPoly base, std::uint64_t e, const FPoly& m) {
    FPoly acc = FPoly::constant(m.field().one()).divrem(m).second;
    base = base.divrem(m).second;
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

void split_linear_product(const FPoly& g, std::uint64_t p, std::mt19937_64& rng,
                          std::vector<FElem>& out) {
    if (g.degree() < 1) return;
    if (g.degree() == 1) {
        out.push_back(-(g.coeff(0) / g.coeff(1)));
        return;
    }
    ConstField F = g.field();
    FPoly z = FPoly::variable(F);
    for (;;) {
        FElem a = F.from_integer(static_cast<long>(rng() % p));
        FPoly h = poly_powmod(z + FPoly::constant(a), (p - 1) / 2, g) - FPoly::constant(F.one());
        if (h.is_zero()) continue;
        FPoly d = poly_gcd(h, g);
        if (d.degree() >= 1 && d.degree() < g.degree()) {
            split_linear_product(d, p, rng, out);
            split_linear_product(g.exact_div(d).monic(), p, rng, out);
            return;
        }
    }
}

std::vector<FElem> roots_over_prime_field(const FPoly& poly) {
    ConstField F = poly.field();
    std::uint64_t p = F.characteristic();
    std::vector<FElem> out;
    if (p <= 4096) {
        for (std::uint64_t r = 0; r < p; ++r) {
            FElem t = F.from_integer(static_cast<long>(r));
            if (poly.eval(t).is_zero()) out.push_back(t);
        }
        return out;
    }
    // distinct linear part: gcd(z^p - z, poly), then split it
    FPoly m = poly.monic();
    FPoly z = FPoly::variable(F);
    FPoly frob = poly_powmod(z, p, m);
    FPoly lin_part = frob - z;
    FPoly g = lin_part.is_zero() ? m : poly_gcd(lin_part, m);
    std::mt19937_64 rng(0x5eedf00dULL);
    split_linear_product(g.monic(), p, rng, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FElem> field_roots(const FPoly& poly) {
    if (poly.is_zero()) raise(ErrorCode::ZeroPolynomial, "root search on zero polynomial");
    if (poly.degree() < 1) return {};
    return poly.field().kind() == ConstField::Kind::Rationals ? roots_over_rationals(poly)
                                                              : roots_over_prime_field(poly);
}

// ------------------------------------------------- reconstruction over F

/// Any nonzero nullspace vector of the (n x n) homogeneous system, or empty.
std::vector<FElem> nullspace_vector(std::vector<std::vector<FElem>> m, ConstField F) {
    const std::size_t rows = m.size();
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        FElem inv = m[r][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            FElem factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    if (pivot_col.size() == cols) return {}; // only the trivial solution
    // pick the first free column, set it to 1
    std::size_t free_col = 0;
    {
        std::size_t k = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (k < pivot_col.size() && pivot_col[k] == col) { ++k; continue; }
            free_col = col;
            break;
        }
    }
    std::vector<FElem> sol(cols, F.zero());
    sol[free_col] = F.one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        sol[pivot_col[i]] = -m[i][free_col];
    return sol;
}

} // namespace

std::set<KElem> rational_roots(const ZPoly& P, long height_bound) {
    if (P.is_zero()) raise(ErrorCode::ZeroPolynomial, "rational_roots on the zero polynomial");
    if (height_bound < 1) raise(ErrorCode::Internal, "height bound must be at least 1");
    std::set<KElem> out;
    if (P.degree() < 1) return out;

    ConstField F = P.field();
    const std::size_t hb = static_cast<std::size_t>(height_bound);
    const std::size_t n_pts = 2 * hb + 2;

    // admissible specialization points: the lead numerator must not vanish
    // (this also forces candidate roots to stay finite there) and no
    // coefficient denominator may vanish
    auto admissible = [&](const FElem& t) {
        if (P.leading().num().eval(t).is_zero()) return false;
        for (int i = 0; i <= P.degree(); ++i) {
            const KElem& c = P.coeff(i);
            if (!c.is_zero() && c.den().eval(t).is_zero()) return false;
        }
        return true;
    };

    std::vector<FElem> points;
    if (F.kind() == ConstField::Kind::Rationals) {
        for (long k = 0; points.size() < n_pts; ++k) {
            std::vector<long> cands = k == 0 ? std::vector<long>{0} : std::vector<long>{k, -k};
            for (long cand : cands) {
                FElem t = F.from_integer(cand);
                if (admissible(t)) points.push_back(t);
                if (points.size() == n_pts) break;
            }
        }
    } else {
        for (std::uint64_t r = 0; r < F.characteristic() && points.size() < n_pts; ++r) {
            FElem t = F.from_integer(static_cast<long>(r));
            if (admissible(t)) points.push_back(t);
        }
        if (points.size() < n_pts)
            raise(ErrorCode::InsufficientSpecializationPoints,
                  "field has too few admissible specialization points for height bound " +
                      std::to_string(height_bound));
    }

    // per-point rational roots of the specialized polynomial
    std::vector<std::vector<FElem>> point_roots;
    point_roots.reserve(n_pts);
    std::size_t tuple_count = 1;
    for (const FElem& t : points) {
        std::vector<FElem> coeffs;
        coeffs.reserve(static_cast<std::size_t>(P.degree()) + 1);
        for (int i = 0; i <= P.degree(); ++i) {
            const KElem& c = P.coeff(i);
            coeffs.push_back(c.is_zero() ? F.zero() : c.specialize(t));
        }
        std::vector<FElem> roots = field_roots(FPoly(F, std::move(coeffs)));
        if (roots.empty()) return out; // a K-rational root would show up at every point
        tuple_count *= roots.size();
        if (tuple_count > 250000)
            raise(ErrorCode::ResourceLimit, "specialization root combinations exceed the search limit");
        point_roots.push_back(std::move(roots));
    }

    // walk all tuples; each consistent one pins a unique candidate of
    // height <= hb, which is then verified exactly
    std::vector<std::size_t> idx(n_pts, 0);
    for (;;) {
        std::vector<std::vector<FElem>> matrix;
        matrix.reserve(n_pts);
        for (std::size_t j = 0; j < n_pts; ++j) {
            const FElem& t = points[j];
            const FElem& y = point_roots[j][idx[j]];
            std::vector<FElem> row;
            row.reserve(2 * (hb + 1));
            FElem tp = F.one();
            for (std::size_t i = 0; i <= hb; ++i) {
                row.push_back(tp);
                tp = tp * t;
            }
            tp = F.one();
            for (std::size_t i = 0; i <= hb; ++i) {
                row.push_back(-(y * tp));
                tp = tp * t;
            }
            matrix.push_back(std::move(row));
        }
        std::vector<FElem> sol = nullspace_vector(std::move(matrix), F);
        if (!sol.empty()) {
            std::vector<FElem> fc(sol.begin(), sol.begin() + static_cast<long>(hb) + 1);
            std::vector<FElem> gc(sol.begin() + static_cast<long>(hb) + 1, sol.end());
            FPoly f(F, std::move(fc));
            FPoly g(F, std::move(gc));
            if (!g.is_zero()) {
                KElem x = KElem::ratio(f, g);
                if (!out.count(x) && P.eval(x).is_zero()) out.insert(x);
            }
        }
        // next tuple
        std::size_t j = 0;
        while (j < n_pts) {
            if (++idx[j] < point_roots[j].size()) break;
            idx[j] = 0;
            ++j;
        }
        if (j == n_pts) break;
    }
    return out;
}

} // namespace ffdyn
