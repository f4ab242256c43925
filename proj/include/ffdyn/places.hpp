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

#ifndef FFDYN_PLACES_HPP
#define FFDYN_PLACES_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/kelem.hpp"

namespace ffdyn {

/**
 * A place of K = F(T): a monic non-constant generator of the coprime
 * factor basis, or the degree place at infinity. Immutable snapshot;
 * carries its own degree (deg of the generator, 1 for infinity).
 */
class Place {
  public:
    static Place infinity(ConstField f) { return Place(f, std::nullopt); }
    static Place finite(FPoly pi);

    const ConstField& field() const noexcept { return field_; }
    bool is_infinity() const noexcept { return !pi_.has_value(); }
    const FPoly& generator() const; // pre: finite
    int degree() const noexcept { return degree_; }

    bool operator==(const Place& o) const;
    bool operator!=(const Place& o) const { return !(*this == o); }
    /// Finite places in canonical generator order, infinity last.
    bool operator<(const Place& o) const;

    std::string to_string() const { return is_infinity() ? "inf" : pi_->to_string(); }

  private:
    Place(ConstField f, std::optional<FPoly> pi);

    ConstField field_;
    std::optional<FPoly> pi_;
    int degree_;
};

/**
 * Additive log-absolute-value at a place: for x in K^x an exact integer
 * equal to -ord_v(x) * deg(v), with a distinguished -infinity for x = 0.
 * Under this convention the product formula reads: the sum over all
 * places vanishes. Derived quantities (radii, local heights) use general
 * exact rationals in the same units.
 */
class LogSize {
  public:
    static LogSize neg_infinity() { return LogSize(); }
    static LogSize of(Rat v) { return LogSize(std::move(v)); }

    bool is_neg_infinity() const noexcept { return !v_.has_value(); }
    bool is_finite() const noexcept { return v_.has_value(); }
    const Rat& value() const; // pre: finite

    /// Finite comparisons treating -infinity as below everything.
    bool operator<(const LogSize& o) const;
    bool operator<=(const LogSize& o) const { return !(o < *this); }
    bool operator==(const LogSize& o) const;
    bool operator!=(const LogSize& o) const { return !(*this == o); }

    /// -infinity absorbs addition.
    LogSize operator+(const LogSize& o) const;

    std::string to_string() const { return v_ ? rat_to_string(*v_) : "-inf"; }

  private:
    LogSize() = default;
    explicit LogSize(Rat v) : v_(std::move(v)) {}

    std::optional<Rat> v_;
};

/**
 * Owner of the lazy coprime factor basis for the finite places of F(T).
 *
 * Generators are pairwise-coprime, squarefree, monic and non-constant;
 * refine() splits them as new elements arrive, so no irreducible
 * factorization over Q[T] is ever needed. A generator stands for the
 * group of irreducible places dividing it, and every answer the context
 * gives equals the corresponding sum over those true places.
 *
 * Concurrency: this is the single mutable entity in the system. Refining
 * operations must be externally serialized (single writer); reads of a
 * quiescent context are safe to share.
 */
class PlaceContext {
  public:
    explicit PlaceContext(ConstField f) : field_(f) {}

    const ConstField& field() const noexcept { return field_; }

    /// Inserts f into the basis, splitting generators as needed. The
    /// returned basis view is pairwise coprime and f factors over it
    /// exactly up to a constant.
    void refine(const FPoly& f);
    /// Refines with both numerator and denominator of x.
    void refine(const KElem& x);

    /// Current generators in canonical order.
    const std::vector<FPoly>& generators() const noexcept { return gens_; }

    Place infinite_place() const { return Place::infinity(field_); }

    /// -ord_v(x) * deg v; refines the basis with x (and with a stale
    /// finite generator, whose answer is then the grouped sum over its
    /// current factors).
    LogSize local_logsize(const KElem& x, const Place& v);

    /// Exactly the places where x has nonzero log-size, in canonical
    /// order with infinity last. Throws ZeroElement.
    std::vector<std::pair<Place, LogSize>> support(const KElem& x);

    /// Sum of log-sizes over all places; identically zero for x != 0.
    Rat product_formula_check(const KElem& x);

    /// Multiplicity of basis generator g in f; f must already factor over
    /// the basis (call refine(f) first).
    int multiplicity(const FPoly& g, const FPoly& f) const;

  private:
    void insert_squarefree_pieces(FPoly h);
    void insert_monic(FPoly h);
    void sort_basis();
    int multiplicity_at(std::size_t gen_index, const FPoly& f,
                        const std::optional<std::vector<std::uint64_t>>& f_img) const;

    ConstField field_;
    std::vector<FPoly> gens_;
    // modular images of the generators, parallel to gens_ (filter cache)
    std::vector<std::optional<std::vector<std::uint64_t>>> gen_imgs_;
    // monic polynomials already refined in; once an element factors over
    // the basis, later splits keep it factoring, so hits skip the walk
    std::set<FPoly> refine_memo_;
};

} // namespace ffdyn

#endif
