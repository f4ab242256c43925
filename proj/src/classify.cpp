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

#include "ffdyn/classify.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "ffdyn/errors.hpp"

namespace ffdyn {

const char* iso_verdict_name(IsoVerdict::Kind k) {
    switch (k) {
        case IsoVerdict::Kind::NotIsotrivial: return "NotIsotrivial";
        case IsoVerdict::Kind::IsotrivialOverExtension: return "IsotrivialOverExtension";
        case IsoVerdict::Kind::IsotrivialOverK: return "IsotrivialOverK";
    }
    return "Unknown";
}

IsoVerdict is_isotrivial(PlaceContext& ctx, const PolyMap& phi) {
    IsoInvariants inv = iso_invariants(phi); // throws CharDividesDegree
    for (std::size_t i = 0; i < inv.values.size(); ++i) {
        if (!inv.values[i].is_constant())
            return IsoVerdict{IsoVerdict::Kind::NotIsotrivial, static_cast<int>(i), std::nullopt,
                              std::nullopt};
    }

    // all invariants constant: conjugate to a constant map over at worst a
    // (d-1)-st root extension of the lead coefficient. It is K-rational
    // exactly when every finite order of the depressed lead is divisible
    // by d-1 (the infinite place then balances by the product formula).
    int d = phi.degree();
    DepressedForm dep = depress(phi);
    const KElem& lead = dep.map.coeff(d);
    FPoly num_scale = FPoly::constant(phi.field().one());
    FPoly den_scale = num_scale;
    for (const auto& [v, ls] : ctx.support(lead)) {
        if (v.is_infinity()) continue;
        // ls = -ord * deg v
        Rat ord_rat = -ls.value() / Rat(v.degree());
        long ord = static_cast<long>(mpz_get_si(Rat(ord_rat).get_num_mpz_t()));
        if (ord % (d - 1) != 0)
            return IsoVerdict{IsoVerdict::Kind::IsotrivialOverExtension, std::nullopt, std::nullopt,
                              std::nullopt};
        long e = -ord / (d - 1);
        if (e > 0)
            num_scale = num_scale * v.generator().pow(static_cast<int>(e));
        else if (e < 0)
            den_scale = den_scale * v.generator().pow(static_cast<int>(-e));
    }
    KElem a = KElem::ratio(num_scale, den_scale);
    AffineMap gamma(a, dep.shift);
    PolyMap psi = conjugate(phi, gamma);
    for (int i = 0; i <= d; ++i) {
        if (!psi.coeff(i).is_constant())
            raise(ErrorCode::Internal, "constructed conjugate failed the constancy check");
    }
    return IsoVerdict{IsoVerdict::Kind::IsotrivialOverK, std::nullopt, std::move(gamma),
                      std::move(psi)};
}

TwoPointConjugation two_point_conjugation(const PolyMap& phi, const KElem& z0, const KElem& z1) {
    if (z0 == z1) raise(ErrorCode::EqualPoints, "conjugation needs two distinct points");
    AffineMap gamma(z1 - z0, z0);
    PolyMap psi = conjugate(phi, gamma);
    bool constant = true;
    for (int i = 0; i <= psi.degree(); ++i)
        if (!psi.coeff(i).is_constant()) { constant = false; break; }
    return TwoPointConjugation{std::move(gamma), std::move(psi), constant};
}

long long cap_formula(int d, int s) {
    if (s == 0) return 2;
    long long cap = 1;
    const long long limit = std::numeric_limits<long long>::max();
    for (int i = 0; i < 2 * s; ++i) {
        if (cap > limit / d) return limit; // saturate; callers compare against limits
        cap *= d;
    }
    return cap >= limit - 1 ? limit : cap + 1;
}

double refined_formula(int d, int s) {
    if (s < 1) raise(ErrorCode::Internal, "refined bound needs s >= 1");
    double q = static_cast<double>(d) * d - 2.0 * d + 2.0;
    double log_d = std::log(static_cast<double>(d));
    double logd_s = std::log(static_cast<double>(s)) / log_d;
    if (s <= d - 1) return 1.0 + q * (s * logd_s + 3.0 * s);
    double logd_logd_s = std::log(logd_s) / log_d;
    return 1.0 + q * (s * logd_s + s * logd_logd_s + 3.0 * s);
}

MapProfile analyze_map(PlaceContext& ctx, const PolyMap& phi) {
    MapProfile out{is_isotrivial(ctx, phi), bad_places(ctx, phi), std::nullopt};
    if (!out.verdict.is_over_k()) {
        int s = out.bad.size();
        int d = phi.degree();
        BoundReport bounds{cap_formula(d, s), std::nullopt, s, d};
        if (s >= 1) bounds.refined = refined_formula(d, s);
        out.bounds = bounds;
    }
    return out;
}

BoundReport preperiodic_cap(PlaceContext& ctx, const PolyMap& phi) {
    MapProfile profile = analyze_map(ctx, phi);
    if (profile.verdict.is_over_k())
        raise(ErrorCode::IsotrivialOverK,
              "map is conjugate over K to a constant-coefficient map; the preperiodic cap does not apply");
    return *profile.bounds;
}

std::pair<bool, PreperiodicCertificate> is_preperiodic(PlaceContext& ctx, const PolyMap& phi,
                                                       const ProjPoint& x, bool allow_escape_early) {
    return is_preperiodic(ctx, phi, analyze_map(ctx, phi), x, allow_escape_early);
}

std::pair<bool, PreperiodicCertificate> is_preperiodic(PlaceContext& ctx, const PolyMap& phi,
                                                       const MapProfile& profile, const ProjPoint& x,
                                                       bool allow_escape_early) {
    if (profile.verdict.is_over_k())
        raise(ErrorCode::IsotrivialOverK,
              "map is conjugate over K to a constant-coefficient map; the orbit cap does not apply");
    const BoundReport& bounds = *profile.bounds;

    if (x.is_infinity()) {
        PreperiodicCertificate cert;
        cert.kind = PreperiodicCertificate::Kind::Cycle;
        cert.m = 0;
        cert.n = 1;
        return {true, cert};
    }

    std::vector<Place> bad;
    std::vector<Rat> bad_escape;
    if (allow_escape_early) {
        for (const Place& v : profile.bad.places) {
            bad.push_back(v);
            bad_escape.push_back(escape_radius_log(ctx, phi, v));
        }
    }

    std::vector<ProjPoint> orbit;
    std::map<KElem, int> index;
    KElem y = x.value();
    for (int n = 0;; ++n) {
        auto it = index.find(y);
        if (it != index.end()) {
            PreperiodicCertificate cert;
            cert.kind = PreperiodicCertificate::Kind::Cycle;
            cert.m = it->second;
            cert.n = n;
            return {true, cert};
        }
        index.emplace(y, n);
        orbit.push_back(ProjPoint::finite(y));
        if (static_cast<long long>(orbit.size()) == bounds.cap + 1) {
            PreperiodicCertificate cert;
            cert.kind = PreperiodicCertificate::Kind::ExceedsCap;
            cert.distinct = std::move(orbit);
            cert.cap = bounds.cap;
            return {false, cert};
        }
        if (allow_escape_early) {
            for (std::size_t i = 0; i < bad.size(); ++i) {
                LogSize ly = ctx.local_logsize(y, bad[i]);
                if (ly.is_finite() && ly.value() > bad_escape[i]) {
                    PreperiodicCertificate cert;
                    cert.kind = PreperiodicCertificate::Kind::Escape;
                    cert.escape_place = bad[i];
                    cert.escape_step = n;
                    return {false, cert};
                }
            }
        }
        y = phi.apply(y);
    }
}

std::pair<std::set<ProjPoint>, BoundReport> enumerate_preperiodic(PlaceContext& ctx,
                                                                  const PolyMap& phi,
                                                                  long long degree_limit) {
    MapProfile profile = analyze_map(ctx, phi);
    if (profile.verdict.is_over_k())
        raise(ErrorCode::IsotrivialOverK,
              "map is conjugate over K to a constant-coefficient map; enumeration does not apply");
    const BoundReport& bounds = *profile.bounds;
    int d = phi.degree();

    long long top_degree = 1;
    for (long long i = 0; i < bounds.cap; ++i) {
        top_degree *= d;
        if (top_degree > degree_limit)
            raise(ErrorCode::DegreeLimitExceeded,
                  "iterate degree d^cap exceeds the configured limit of " + std::to_string(degree_limit));
    }

    // height-zero roots have standard height at most the gap constant
    Rat gap = height_gap_constant(ctx, phi).total;
    long height_bound = static_cast<long>(mpz_get_si(rat_floor(gap).get_mpz_t()));
    if (height_bound < 1) height_bound = 1;

    std::vector<ZPoly> iterates;
    iterates.reserve(static_cast<std::size_t>(bounds.cap) + 1);
    iterates.push_back(ZPoly::variable(phi.field()));
    for (long long n = 1; n <= bounds.cap; ++n) {
        const ZPoly& prev = iterates.back();
        ZPoly acc(phi.field());
        for (int i = phi.degree(); i >= 0; --i) acc = acc * prev + ZPoly::constant(phi.coeff(i));
        iterates.push_back(std::move(acc));
    }

    std::set<ProjPoint> found;
    found.insert(ProjPoint::infinity(phi.field()));
    for (long long n = 1; n <= bounds.cap; ++n) {
        for (long long m = 0; m < n; ++m) {
            ZPoly P = iterates[static_cast<std::size_t>(n)] - iterates[static_cast<std::size_t>(m)];
            for (const KElem& root : rational_roots(P, height_bound)) {
                ProjPoint pt = ProjPoint::finite(root);
                if (found.count(pt)) continue;
                if (is_preperiodic(ctx, phi, profile, pt).first) found.insert(pt);
            }
        }
    }
    return {std::move(found), bounds};
}

bool oracle_preperiodic(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x) {
    return oracle_preperiodic(phi, x, height_gap_constant(ctx, phi).total);
}

bool oracle_preperiodic(const PolyMap& phi, const ProjPoint& x, const Rat& gap_total) {
    if (!phi.field().is_finite())
        raise(ErrorCode::ConstantFieldNotFinite, "the oracle needs a finite constant field");
    if (x.is_infinity()) return true;
    std::set<KElem> seen;
    KElem y = x.value();
    for (;;) {
        if (Rat(standard_height(ProjPoint::finite(y))) > gap_total) return false;
        if (seen.count(y)) return true;
        seen.insert(y);
        y = phi.apply(y);
    }
}

} // namespace ffdyn
