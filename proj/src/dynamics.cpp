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

#include "ffdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffdyn/errors.hpp"

namespace ffdyn {

PolyMap::PolyMap(ZPoly poly) : poly_(std::move(poly)) {
    if (poly_.degree() < 2)
        raise(ErrorCode::DegreeTooLow, "polynomial map must have degree at least 2");
}

ProjPoint PolyMap::apply(const ProjPoint& x) const {
    if (x.is_infinity()) return x;
    return ProjPoint::finite(apply(x.value()));
}

ProjPoint PolyMap::iterate(const ProjPoint& x, int n) const {
    ProjPoint y = x;
    for (int i = 0; i < n; ++i) y = apply(y);
    return y;
}

namespace {

ZPoly substitute(const ZPoly& outer, const ZPoly& inner) {
    ZPoly acc(outer.field());
    for (int i = outer.degree(); i >= 0; --i)
        acc = acc * inner + ZPoly::constant(outer.coeff(i));
    return acc;
}

} // namespace

ZPoly PolyMap::iterate_poly(int n) const {
    if (n < 0) raise(ErrorCode::Internal, "negative iterate");
    double deg_estimate = std::pow(static_cast<double>(degree()), static_cast<double>(n));
    if (deg_estimate > 1e6)
        raise(ErrorCode::ResourceLimit, "iterate degree would exceed 10^6");
    ZPoly acc = ZPoly::variable(field());
    for (int i = 0; i < n; ++i) acc = substitute(poly_, acc);
    return acc;
}

AffineMap::AffineMap(KElem a, KElem b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero()) raise(ErrorCode::DivisionByZero, "affine map needs invertible linear part");
    if (a_.field() != b_.field()) raise(ErrorCode::FieldMismatch, "affine coefficients over different fields");
}

AffineMap AffineMap::inverse() const {
    return AffineMap(a_.inverse(), -(b_ / a_));
}

AffineMap AffineMap::compose(const AffineMap& o) const {
    return AffineMap(a_ * o.a_, a_ * o.b_ + b_);
}

const char* reduction_type_name(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "Good";
        case ReductionType::PotentiallyGood: return "PotentiallyGood";
        case ReductionType::Bad: return "Bad";
    }
    return "Unknown";
}

bool BadPlaceSet::contains(const Place& v) const {
    return std::find(places.begin(), places.end(), v) != places.end();
}

PolyMap conjugate(const PolyMap& phi, const AffineMap& gamma) {
    ZPoly inner = phi.poly().compose_affine(gamma.a(), gamma.b());
    ZPoly out = (inner - ZPoly::constant(gamma.b())) * gamma.a().inverse();
    return PolyMap(std::move(out));
}

DepressedForm depress(const PolyMap& phi) {
    int d = phi.degree();
    ConstField f = phi.field();
    FElem d_in_f = f.from_integer(static_cast<long>(d));
    if (d_in_f.is_zero())
        raise(ErrorCode::CharDividesDegree,
              "characteristic " + std::to_string(f.characteristic()) + " divides degree " + std::to_string(d));
    KElem shift = -(phi.coeff(d - 1) / (KElem::from_const(d_in_f) * phi.coeff(d)));
    PolyMap dep = conjugate(phi, AffineMap(KElem::from_const(f.one()), shift));
    if (!dep.coeff(d - 1).is_zero()) raise(ErrorCode::Internal, "depression left a subleading term");
    return DepressedForm{std::move(shift), std::move(dep)};
}

IsoInvariants iso_invariants(const PolyMap& phi) {
    DepressedForm dep = depress(phi);
    int d = phi.degree();
    const KElem lead = dep.map.coeff(d);
    IsoInvariants out;
    out.values.reserve(static_cast<std::size_t>(d - 1));
    for (int i = 0; i <= d - 2; ++i) {
        KElem ai = dep.map.coeff(i);
        out.values.push_back(ai.pow(d - 1) * lead.pow(1 - i));
    }
    return out;
}

bool has_good_reduction(PlaceContext& ctx, const PolyMap& phi, const Place& v) {
    int d = phi.degree();
    LogSize lead = ctx.local_logsize(phi.coeff(d), v);
    if (!(lead == LogSize::of(Rat(0)))) return false;
    for (int i = 0; i < d; ++i) {
        LogSize li = ctx.local_logsize(phi.coeff(i), v);
        if (li.is_neg_infinity()) continue;
        if (Rat(0) < li.value()) return false;
    }
    return true;
}

Rat escape_radius_log(PlaceContext& ctx, const PolyMap& phi, const Place& v) {
    int d = phi.degree();
    Rat lead = ctx.local_logsize(phi.coeff(d), v).value();
    Rat best = -lead / Rat(d - 1);
    for (int i = 0; i < d; ++i) {
        KElem ai = phi.coeff(i);
        if (ai.is_zero()) continue;
        Rat cand = (ctx.local_logsize(ai, v).value() - lead) / Rat(d - i);
        if (cand > best) best = cand;
    }
    return best;
}

ReductionReport reduction_type(PlaceContext& ctx, const PolyMap& phi, const Place& v) {
    int d = phi.degree();
    Rat lead = ctx.local_logsize(phi.coeff(d), v).value();
    Rat rho_log = -lead / Rat(d - 1);

    ReductionReport report{v, ReductionType::Bad, rho_log, rho_log,
                           escape_radius_log(ctx, phi, v), {}, 1, 1};

    bool good = has_good_reduction(ctx, phi, v);
    bool char_divides = phi.field().from_integer(static_cast<long>(d)).is_zero();
    if (good && char_divides) {
        // good implies potentially good; the depressed test is unavailable
        // but also unnecessary here
        report.type = ReductionType::Good;
        return report;
    }
    if (!good && char_divides)
        raise(ErrorCode::CharDividesDegree,
              "potentially-good/bad distinction needs char F not dividing the degree");

    DepressedForm dep = depress(phi);
    Rat dep_lead = ctx.local_logsize(dep.map.coeff(d), v).value(); // equals lead
    Rat worst(0);
    bool potgood = true;
    for (int i = 0; i <= d - 2; ++i) {
        KElem ai = dep.map.coeff(i);
        if (ai.is_zero()) continue;
        Rat mu = ctx.local_logsize(ai, v).value() - Rat(i - 1) * dep_lead / Rat(d - 1);
        report.mu.emplace(i, mu);
        if (mu > 0) {
            potgood = false;
            Rat spread = mu / Rat(d - i);
            if (spread > worst) worst = spread;
        }
    }
    report.min_disk_log = rho_log + worst;
    report.type = good ? ReductionType::Good
                       : (potgood ? ReductionType::PotentiallyGood : ReductionType::Bad);
    if (report.type == ReductionType::Bad) {
        report.cover_count = static_cast<long long>(d) * d;
        report.preimage_disk_bound = d;
    }
    return report;
}

std::vector<Place> coefficient_support(PlaceContext& ctx, const PolyMap& phi) {
    std::set<Place> finite;
    for (int i = 0; i <= phi.degree(); ++i) {
        KElem ai = phi.coeff(i);
        if (ai.is_zero()) continue;
        for (const auto& [place, ls] : ctx.support(ai))
            if (!place.is_infinity()) finite.insert(place);
    }
    std::vector<Place> out(finite.begin(), finite.end());
    out.push_back(ctx.infinite_place());
    return out;
}

BadPlaceSet bad_places(PlaceContext& ctx, const PolyMap& phi) {
    BadPlaceSet out;
    for (const Place& v : coefficient_support(ctx, phi)) {
        if (reduction_type(ctx, phi, v).type == ReductionType::Bad) out.places.push_back(v);
    }
    return out;
}

std::vector<std::pair<LogSize, int>> newton_polygon(PlaceContext& ctx, const ZPoly& P, const Place& v) {
    if (P.is_zero() || P.degree() < 1)
        raise(ErrorCode::ZeroPolynomial, "newton polygon needs a nonzero polynomial of positive degree");
    std::vector<std::pair<LogSize, int>> out;

    int low = 0;
    while (P.coeff(low).is_zero()) ++low;
    if (low > 0) out.emplace_back(LogSize::neg_infinity(), low); // roots at 0

    // lower hull of (i, -L_v(c_i)) over the nonzero coefficients
    std::vector<std::pair<int, Rat>> pts;
    for (int i = low; i <= P.degree(); ++i) {
        KElem c = P.coeff(i);
        if (c.is_zero()) continue;
        pts.emplace_back(i, -ctx.local_logsize(c, v).value());
    }
    std::vector<std::pair<int, Rat>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // pop b unless it turns strictly upward before p
            Rat lhs = (b.second - a.second) * Rat(p.first - a.first);
            Rat rhs = (p.second - a.second) * Rat(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(p);
    }
    for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
        int len = hull[j + 1].first - hull[j].first;
        Rat slope = (hull[j + 1].second - hull[j].second) / Rat(len);
        out.emplace_back(LogSize::of(slope), len);
    }
    return out;
}

} // namespace ffdyn
