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

#ifndef FFDYN_DYNAMICS_HPP
#define FFDYN_DYNAMICS_HPP

#include <map>
#include <vector>

#include "ffdyn/places.hpp"
#include "ffdyn/zpoly.hpp"

namespace ffdyn {

/**
 * A polynomial map phi(z) = a_d z^d + ... + a_0 with a_i in K, d >= 2
 * and a_d != 0: the dynamical object everything else analyzes.
 */
class PolyMap {
  public:
    /// Throws DegreeTooLow for degree < 2 (the zero/linear cases).
    explicit PolyMap(ZPoly poly);

    const ConstField& field() const noexcept { return poly_.field(); }
    const ZPoly& poly() const noexcept { return poly_; }
    int degree() const noexcept { return poly_.degree(); }
    KElem coeff(int i) const { return poly_.coeff(i); }
    const KElem& leading() const { return poly_.leading(); }

    KElem apply(const KElem& x) const { return poly_.eval(x); }
    /// Polynomials fix infinity.
    ProjPoint apply(const ProjPoint& x) const;
    /// n-fold iterate of a point (n >= 0).
    ProjPoint iterate(const ProjPoint& x, int n) const;
    /// The iterate phi^n as a polynomial in z (degree d^n).
    ZPoly iterate_poly(int n) const;

    bool operator==(const PolyMap& o) const { return poly_ == o.poly_; }

    std::string to_string() const { return poly_.to_string(); }

  private:
    ZPoly poly_;
};

/// Invertible affine coordinate change gamma(z) = a z + b over K.
class AffineMap {
  public:
    AffineMap(KElem a, KElem b);

    static AffineMap identity(ConstField f) {
        return AffineMap(KElem::from_const(f.one()), KElem(f));
    }

    const KElem& a() const noexcept { return a_; }
    const KElem& b() const noexcept { return b_; }

    KElem apply(const KElem& x) const { return a_ * x + b_; }
    KElem apply_inverse(const KElem& x) const { return (x - b_) / a_; }
    AffineMap inverse() const;
    /// this after o: z -> this(o(z)).
    AffineMap compose(const AffineMap& o) const;

    bool is_identity() const { return a_.is_one() && b_.is_zero(); }

  private:
    KElem a_;
    KElem b_;
};

/// phi conjugated by a translation so the z^(d-1) coefficient vanishes.
struct DepressedForm {
    KElem shift; // gamma(z) = z + shift
    PolyMap map; // the conjugate, with zero z^(d-1) coefficient
};

/**
 * Conjugation invariants of the depressed form: for coefficients
 * a~_0..a~_d, the values a~_i^(d-1) * a~_d^(1-i) for i = 0..d-2. They
 * are unchanged by every affine conjugation over K (translations are
 * absorbed by depression, scalings cancel exactly), so the map is
 * conjugate to one with constant coefficients over some extension if
 * and only if all of them lie in F.
 */
struct IsoInvariants {
    std::vector<KElem> values; // index i holds the invariant for coefficient i
};

enum class ReductionType { Good, PotentiallyGood, Bad };

const char* reduction_type_name(ReductionType t);

/**
 * Per-place reduction classification together with the exact radii the
 * analysis rests on (all in additive log-size units):
 *  - rho_log: log of the inner radius determined by the lead coefficient,
 *    -L_v(a_d)/(d-1);
 *  - min_disk_log: log-radius of the smallest disk containing every
 *    bounded orbit; equals rho_log exactly when reduction is potentially
 *    good;
 *  - escape_log: once an orbit's log-size exceeds this, one step of the
 *    map multiplies log-size by d and adds L_v(a_d), exactly;
 *  - mu: log-sizes of the lower coefficients of the depressed monic
 *    rescaling; potentially good reduction is exactly "all mu <= 0".
 */
struct ReductionReport {
    Place place;
    ReductionType type;
    Rat rho_log;
    Rat min_disk_log;
    Rat escape_log;
    std::map<int, Rat> mu;       // only indices with nonzero depressed coefficient
    long long cover_count;       // disks of radius rho covering bounded orbits (<= d^2)
    int preimage_disk_bound;     // disk count bound for the first preimage
};

/// The finite set of places where the map has bad reduction.
struct BadPlaceSet {
    std::vector<Place> places; // canonical order
    int size() const noexcept { return static_cast<int>(places.size()); }
    bool contains(const Place& v) const;
};

/// Exact coefficients of gamma^(-1) . phi . gamma; degree is preserved.
PolyMap conjugate(const PolyMap& phi, const AffineMap& gamma);

/// Throws CharDividesDegree when char F divides d.
DepressedForm depress(const PolyMap& phi);

IsoInvariants iso_invariants(const PolyMap& phi);

/// Good test needs no hypothesis; the potentially-good/bad distinction
/// throws CharDividesDegree when char F | d and the Good test fails.
ReductionReport reduction_type(PlaceContext& ctx, const PolyMap& phi, const Place& v);

/// True iff all coefficients are integral at v and the lead is a unit.
bool has_good_reduction(PlaceContext& ctx, const PolyMap& phi, const Place& v);

BadPlaceSet bad_places(PlaceContext& ctx, const PolyMap& phi);

/// Candidate places that can possibly be non-good: the union of the
/// coefficient supports plus infinity, in canonical order.
std::vector<Place> coefficient_support(PlaceContext& ctx, const PolyMap& phi);

Rat escape_radius_log(PlaceContext& ctx, const PolyMap& phi, const Place& v);

/**
 * Root log-sizes of P over the completed algebraic closure at v, with
 * multiplicity, from the lower hull of the coefficient valuation points.
 * Entries are (logsize, multiplicity) in increasing order; roots at 0
 * appear as -infinity entries. The multiset has deg P entries and its
 * finite part sums to L_v(a_0') - L_v(a_d) for the lowest nonzero
 * coefficient a_0'.
 */
std::vector<std::pair<LogSize, int>> newton_polygon(PlaceContext& ctx, const ZPoly& P, const Place& v);

} // namespace ffdyn

#endif
