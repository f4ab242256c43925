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

#ifndef FFDYN_CLASSIFY_HPP
#define FFDYN_CLASSIFY_HPP

#include <optional>
#include <set>
#include <utility>

#include "ffdyn/heights.hpp"

namespace ffdyn {

/**
 * Trichotomy for "is phi an affine conjugate of a constant-coefficient
 * map": no (with a nonconstant invariant as witness), yes over some
 * finite extension of K, or yes over K itself (with the verified change
 * of coordinates and its constant conjugate attached).
 */
struct IsoVerdict {
    enum class Kind { NotIsotrivial, IsotrivialOverExtension, IsotrivialOverK };

    Kind kind;
    std::optional<int> witness;           // NotIsotrivial: index of a nonconstant invariant
    std::optional<AffineMap> gamma;       // IsotrivialOverK
    std::optional<PolyMap> constant_map;  // IsotrivialOverK

    bool is_over_k() const noexcept { return kind == Kind::IsotrivialOverK; }
};

const char* iso_verdict_name(IsoVerdict::Kind k);

/**
 * Machine-checkable evidence for a preperiodicity decision:
 *  - Cycle(m, n): phi^m(x) = phi^n(x) with 0 <= m < n (point preperiodic);
 *  - ExceedsCap: cap+1 pairwise-distinct orbit points, impossible for a
 *    point with canonical height zero (point not preperiodic);
 *  - Escape: an exact positive local height at a place (not preperiodic).
 */
struct PreperiodicCertificate {
    enum class Kind { Cycle, ExceedsCap, Escape };

    Kind kind;
    int m = 0;
    int n = 0;                          // Cycle
    std::vector<ProjPoint> distinct;    // ExceedsCap (cap+1 points)
    long long cap = 0;                  // ExceedsCap
    std::optional<Place> escape_place;  // Escape
    int escape_step = 0;                // Escape
};

/// Cap on K-rational preperiodic points, from the number s of bad places.
struct BoundReport {
    long long cap;                 // 1 + d^(2s) for s >= 1, else 2
    std::optional<double> refined; // sharper count bound, present when s >= 1
    int s;
    int d;
};

/// Pure formula pieces, exposed so tests can grid-check them.
long long cap_formula(int d, int s);
double refined_formula(int d, int s); // pre: s >= 1

/// Decides the trichotomy; throws CharDividesDegree when char F | d.
/// An IsotrivialOverK result carries gamma and the constant conjugate,
/// re-verified by conjugation before being returned.
IsoVerdict is_isotrivial(PlaceContext& ctx, const PolyMap& phi);

/// One-time analysis bundle for a map, reusable across many point
/// queries (decision procedures recompute nothing per point).
struct MapProfile {
    IsoVerdict verdict;
    BadPlaceSet bad;
    std::optional<BoundReport> bounds; // absent when the verdict is IsotrivialOverK
};

/// Throws CharDividesDegree when char F | d.
MapProfile analyze_map(PlaceContext& ctx, const PolyMap& phi);

/// The affine change gamma(z) = (z1-z0) z + z0 together with the
/// conjugate psi and whether psi has constant coefficients. Carries a
/// meaningful claim only when z0, z1 have canonical height zero and the
/// map is potentially good everywhere; otherwise is_constant is just a
/// flag. Throws EqualPoints.
struct TwoPointConjugation {
    AffineMap gamma;
    PolyMap psi;
    bool is_constant;
};

TwoPointConjugation two_point_conjugation(const PolyMap& phi, const KElem& z0, const KElem& z1);

/// Throws IsotrivialOverK (the cap is meaningless for such maps).
BoundReport preperiodic_cap(PlaceContext& ctx, const PolyMap& phi);

/// Terminating decision procedure: iterate the orbit, storing distinct
/// points; a repeat proves preperiodicity, cap+1 distinct points refute
/// it. With allow_escape_early an exact positive local height may end
/// the run sooner with an Escape certificate.
std::pair<bool, PreperiodicCertificate> is_preperiodic(PlaceContext& ctx, const PolyMap& phi,
                                                       const ProjPoint& x,
                                                       bool allow_escape_early = false);

/// Same decision against a precomputed profile (bulk queries).
std::pair<bool, PreperiodicCertificate> is_preperiodic(PlaceContext& ctx, const PolyMap& phi,
                                                       const MapProfile& profile,
                                                       const ProjPoint& x,
                                                       bool allow_escape_early = false);

/// All K-rational preperiodic points: roots of phi^n - phi^m over the
/// pairs 0 <= m < n <= cap, each verified, plus infinity. Throws
/// IsotrivialOverK and DegreeLimitExceeded (when d^cap > degree_limit).
std::pair<std::set<ProjPoint>, BoundReport> enumerate_preperiodic(PlaceContext& ctx,
                                                                  const PolyMap& phi,
                                                                  long long degree_limit = 4096);

/// Exactly the K-rational roots of P of height <= height_bound, by
/// specializing T at 2*height_bound+2 admissible constants, extracting
/// rational roots of each specialization, reconstructing candidates by
/// rational-function interpolation and verifying each exactly.
std::set<KElem> rational_roots(const ZPoly& P, long height_bound);

/// Independent decision procedure over a finite constant field: iterate
/// with repeat detection, stopping as soon as the standard height
/// crosses the gap constant. Needs no isotriviality hypothesis. Throws
/// ConstantFieldNotFinite.
bool oracle_preperiodic(PlaceContext& ctx, const PolyMap& phi, const ProjPoint& x);

/// Same oracle against a precomputed gap constant (bulk queries).
bool oracle_preperiodic(const PolyMap& phi, const ProjPoint& x, const Rat& gap_total);

} // namespace ffdyn

#endif
