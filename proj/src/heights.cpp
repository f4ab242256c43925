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

#include "ffdyn/heights.hpp"

#include <set>

#include "ffdyn/errors.hpp"

namespace ffdyn {

HeightValue HeightValue::exact(Rat q) {
    if (q < 0) raise(ErrorCode::Internal, "negative height");
    return HeightValue(true, q, q);
}

HeightValue HeightValue::interval(Rat lo, Rat hi) {
    if (lo < 0 || hi < lo) raise(ErrorCode::Internal, "malformed height interval");
    if (lo == hi) return exact(lo);
    return HeightValue(false, std::move(lo), std::move(hi));
}

const Rat& HeightValue::exact_value() const {
    if (!exact_) raise(ErrorCode::Internal, "exact_value() on an interval");
    return lo_;
}

HeightValue HeightValue::operator+(const HeightValue& o) const {
    if (exact_ && o.exact_) return exact(lo_ + o.lo_);
    return interval(lo_ + o.lo_, hi_ + o.hi_);
}

std::string HeightValue::to_string() const {
    if (exact_) return rat_to_string(lo_);
    return "[" + rat_to_string(lo_) + ", " + rat_to_string(hi_) + "]";
}

long standard_height(const ProjPoint& x) {
    if (x.is_infinity()) return 0;
    int h = std::max(x.value().num().degree(), x.value().den().degree());
    return h < 0 ? 0 : h;
}

namespace {

// rough growth measure for orbit iterates: degrees plus rational bit sizes
std::size_t approx_bit_size(const KElem& x) {
    std::size_t total = 0;
    auto add_poly = [&total](const FPoly& p) {
        if (p.field().kind() == ConstField::Kind::Rationals) {
            for (int i = 0; i <= p.degree(); ++i) {
                FElem c = p.coeff(i);
                const Rat& q = c.rational();
                total += mpz_sizeinbase(q.get_num_mpz_t(), 2);
                total += mpz_sizeinbase(q.get_den_mpz_t(), 2);
            }
        } else {
            total += 8 * static_cast<std::size_t>(p.degree() + 1);
        }
    };
    add_poly(x.num());
    add_poly(x.den());
    return total;
}

// iterate growth cutoff: past this the sound interval answer is returned
// early with the exponent actually reached
constexpr std::size_t kIterateSizeGuardBits = std::size_t(1) << 14;

Rat pow_int(int base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

HeightEvaluator::HeightEvaluator(PlaceContext& ctx, PolyMap phi)
    : ctx_(ctx), phi_(std::move(phi)), gap_{Rat(0), {}} {
    bool char_divides = phi_.field().from_integer(static_cast<long>(phi_.degree())).is_zero();
    if (!char_divides) depressed_ = depress(phi_);
    coeff_places_ = coefficient_support(ctx_, phi_);
    for (const Place& v : coeff_places_) {
        Rat c = data_for(v).gap;
        gap_.per_place.emplace_back(v, c);
        gap_.total += c;
    }
}

const HeightEvaluator::PlaceData& HeightEvaluator::data_for(const Place& v) {
    for (const auto& [place, data] : cache_)
        if (place == v) return data;

    const int d = phi_.degree();
    PlaceData data;
    data.lead_logsize = ctx_.local_logsize(phi_.coeff(d), v).value();
    data.rho_log = -data.lead_logsize / Rat(d - 1);
    data.escape_log = escape_radius_log(ctx_, phi_, v);
    data.good = has_good_reduction(ctx_, phi_, v);
    data.potentially_good = data.good;
    if (!data.good && depressed_) {
        bool potgood = true;
        for (int i = 0; i <= d - 2 && potgood; ++i) {
            KElem ai = depressed_->map.coeff(i);
            if (ai.is_zero()) continue;
            Rat mu = ctx_.local_logsize(ai, v).value() -
                     Rat(i - 1) * data.lead_logsize / Rat(d - 1);
            if (mu > 0) potgood = false;
        }
        data.potentially_good = potgood;
    }
    data.gap = Rat(0);
    if (data.escape_log > 0) data.gap += data.escape_log;
    if (data.rho_log > 0) data.gap += data.rho_log;
    if (-data.rho_log > 0) data.gap += -data.rho_log;

    cache_.emplace_back(v, std::move(data));
    return cache_.back().second;
}

LocalHeightResult HeightEvaluator::local(const Place& v, const KElem& x, int budget) {
    if (budget < 1) raise(ErrorCode::Internal, "iteration budget must be at least 1");
    const int d = phi_.degree();
    const PlaceData& pd = data_for(v);

    if (pd.good) {
        LogSize lx = ctx_.local_logsize(x, v);
        Rat val = lx.is_finite() && lx.value() > 0 ? lx.value() : Rat(0);
        return {v, HeightValue::exact(val), std::nullopt, val == 0};
    }

    if (pd.potentially_good && depressed_) {
        // depressed coordinates center the minimal disk at 0, so membership
        // in the filled Julia set is one log-size test
        LogSize shifted = ctx_.local_logsize(x - depressed_->shift, v);
        if (!(LogSize::of(pd.rho_log) < shifted))
            return {v, HeightValue::exact(Rat(0)), std::nullopt, true};
    }

    Rat tail = pd.lead_logsize / Rat(d - 1); // telescoped contribution of a_d
    KElem y = x;
    std::set<KElem> seen;
    int n = 0;
    for (;; ++n) {
        LogSize ly = ctx_.local_logsize(y, v);
        if (ly.is_finite() && ly.value() > pd.escape_log) {
            Rat val = (ly.value() + tail) / pow_int(d, n);
            return {v, HeightValue::exact(val), n, false};
        }
        if (seen.count(y)) // orbit repeat: bounded forever, so exactly zero
            return {v, HeightValue::exact(Rat(0)), std::nullopt, true};
        seen.insert(y);
        if (n == budget || approx_bit_size(y) > kIterateSizeGuardBits) break;
        y = phi_.apply(y);
    }
    return {v, HeightValue::interval(Rat(0), pd.gap / pow_int(d, n)), std::nullopt, false};
}

std::vector<LocalHeightResult> HeightEvaluator::locals(const KElem& x, int budget) {
    std::set<Place> places(coeff_places_.begin(), coeff_places_.end());
    if (!x.is_zero())
        for (const auto& [v, ls] : ctx_.support(x)) places.insert(v);
    places.insert(ctx_.infinite_place());

    std::vector<LocalHeightResult> out;
    out.reserve(places.size());
    for (const Place& v : places) out.push_back(local(v, x, budget));
    return out;
}

HeightValue HeightEvaluator::canonical(const ProjPoint& x, int budget) {
    if (x.is_infinity()) return HeightValue::exact(Rat(0)); // fixed point of every polynomial
    HeightValue total = HeightValue::exact(Rat(0));
    for (const LocalHeightResult& r : locals(x.value(), budget)) total = total + r.value;
    return total;
}

LocalHeightResult local_canonical_height(PlaceContext& ctx, const PolyMap& phi, const Place& v,
                                         const KElem& x, int budget) {
    return HeightEvaluator(ctx, phi).local(v, x, budget);
}

std::vector<LocalHeightResult> local_canonical_heights(PlaceContext& ctx, const PolyMap& phi,
                                                       const KElem& x, int budget) {
    return HeightEvaluator(ctx, phi).locals(x, budget);
}

HeightValue canonical_height(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x, int budget) {
    if (x.is_infinity()) return HeightValue::exact(Rat(0));
    return HeightEvaluator(ctx, phi).canonical(x, budget);
}

GapConstant height_gap_constant(PlaceContext& ctx, const PolyMap& phi) {
    return HeightEvaluator(ctx, phi).gap();
}

} // namespace ffdyn
