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

#ifndef FFDYN_HEIGHTS_HPP
#define FFDYN_HEIGHTS_HPP

#include <optional>

#include "ffdyn/dynamics.hpp"

namespace ffdyn {

/**
 * Result of a height computation: an exact nonnegative rational, or a
 * closed rational interval [lo, hi] when an iteration budget ran out.
 * Interval width shrinks like d^-n in the number of orbit steps n that
 * were actually taken.
 */
class HeightValue {
  public:
    static HeightValue exact(Rat q);
    static HeightValue interval(Rat lo, Rat hi);

    bool is_exact() const noexcept { return exact_; }
    const Rat& lo() const noexcept { return lo_; }
    const Rat& hi() const noexcept { return hi_; }
    const Rat& exact_value() const; // pre: exact

    HeightValue operator+(const HeightValue& o) const;
    bool operator==(const HeightValue& o) const {
        return exact_ == o.exact_ && lo_ == o.lo_ && hi_ == o.hi_;
    }

    std::string to_string() const;

  private:
    HeightValue(bool e, Rat lo, Rat hi) : exact_(e), lo_(std::move(lo)), hi_(std::move(hi)) {}

    bool exact_;
    Rat lo_;
    Rat hi_;
};

/// One local canonical height. escape_step is the orbit index at which
/// the escape closed form applied; certified_zero marks an exact zero
/// proved by minimal-disk membership or an orbit repeat.
struct LocalHeightResult {
    Place place;
    HeightValue value;
    std::optional<int> escape_step;
    bool certified_zero;
};

/// The explicit constant with |canonical height - standard height| <= total,
/// decomposed over the places that can contribute.
struct GapConstant {
    Rat total;
    std::vector<std::pair<Place, Rat>> per_place;
};

/// h(infinity) = 0, h(f/g) = max(deg f, deg g).
long standard_height(const ProjPoint& x);

/**
 * Height engine for one fixed map: precomputes the depressed form and the
 * per-place radii once, then evaluates points cheaply. Local canonical
 * heights are computed by exact escape-rate analysis: good places take
 * the closed form with no iteration; potentially good places certify
 * zero by minimal-disk membership; otherwise the orbit is iterated until
 * it escapes (exact closed form), repeats (exact zero), or the
 * budget/size guard trips (sound interval).
 */
class HeightEvaluator {
  public:
    HeightEvaluator(PlaceContext& ctx, PolyMap phi);

    const PolyMap& map() const noexcept { return phi_; }
    const GapConstant& gap() const noexcept { return gap_; }

    LocalHeightResult local(const Place& v, const KElem& x, int budget = 64);
    std::vector<LocalHeightResult> locals(const KElem& x, int budget = 64);
    HeightValue canonical(const ProjPoint& x, int budget = 64);

  private:
    struct PlaceData {
        bool good;
        bool potentially_good; // meaningful only when char does not divide d
        Rat lead_logsize;
        Rat rho_log;
        Rat escape_log;
        Rat gap;
    };

    const PlaceData& data_for(const Place& v);

    PlaceContext& ctx_;
    PolyMap phi_;
    std::optional<DepressedForm> depressed_; // absent when char F | d
    std::vector<Place> coeff_places_;
    std::vector<std::pair<Place, PlaceData>> cache_;
    GapConstant gap_;
};

/// One-shot conveniences over HeightEvaluator.
LocalHeightResult local_canonical_height(PlaceContext& ctx, const PolyMap& phi, const Place& v,
                                         const KElem& x, int budget = 64);

/// All local heights that can be nonzero, in canonical place order.
std::vector<LocalHeightResult> local_canonical_heights(PlaceContext& ctx, const PolyMap& phi,
                                                       const KElem& x, int budget = 64);

/// Sum of the local canonical heights; exact iff every local part is.
HeightValue canonical_height(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x,
                             int budget = 64);

GapConstant height_gap_constant(PlaceContext& ctx, const PolyMap& phi);

} // namespace ffdyn

#endif
