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

#include "ffdyn/places.hpp"

#include <algorithm>
#include <numeric>

#include "ffdyn/errors.hpp"
#include "modfilter.hpp"

namespace ffdyn {

Place::Place(ConstField f, std::optional<FPoly> pi) : field_(f), pi_(std::move(pi)), degree_(1) {
    if (pi_) degree_ = pi_->degree();
}

Place Place::finite(FPoly pi) {
    if (pi.is_zero() || pi.degree() < 1)
        raise(ErrorCode::Internal, "finite place needs a non-constant generator");
    if (!pi.is_monic()) pi = pi.monic();
    ConstField f = pi.field();
    return Place(f, std::move(pi));
}

const FPoly& Place::generator() const {
    if (!pi_) raise(ErrorCode::Internal, "generator() on the infinite place");
    return *pi_;
}

bool Place::operator==(const Place& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return *pi_ == *o.pi_;
}

bool Place::operator<(const Place& o) const {
    if (is_infinity()) return false;
    if (o.is_infinity()) return true;
    return *pi_ < *o.pi_;
}

const Rat& LogSize::value() const {
    if (!v_) raise(ErrorCode::Internal, "value() on -infinity log-size");
    return *v_;
}

bool LogSize::operator<(const LogSize& o) const {
    if (!v_) return o.v_.has_value();
    if (!o.v_) return false;
    return *v_ < *o.v_;
}

bool LogSize::operator==(const LogSize& o) const {
    if (!v_ || !o.v_) return v_.has_value() == o.v_.has_value();
    return *v_ == *o.v_;
}

LogSize LogSize::operator+(const LogSize& o) const {
    if (!v_ || !o.v_) return neg_infinity();
    return of(*v_ + *o.v_);
}

namespace {

// f with vanishing derivative over F_p is g(T)^p; extract g.
FPoly char_p_root(const FPoly& f) {
    std::uint64_t p = f.field().characteristic();
    std::vector<FElem> coeffs;
    for (int i = 0; i * static_cast<long long>(p) <= f.degree(); ++i)
        coeffs.push_back(f.coeff(i * static_cast<int>(p)));
    return FPoly(f.field(), std::move(coeffs));
}

} // namespace

void PlaceContext::refine(const FPoly& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroElement, "cannot refine basis with the zero polynomial");
    if (f.field() != field_) raise(ErrorCode::FieldMismatch, "basis and polynomial fields differ");
    if (f.degree() < 1) return;
    FPoly m = f.is_monic() ? f : f.monic();
    if (refine_memo_.count(m)) return;
    insert_squarefree_pieces(m);
    sort_basis();
    refine_memo_.insert(std::move(m));
}

void PlaceContext::refine(const KElem& x) {
    if (x.is_zero()) return;
    refine(x.num());
    refine(x.den());
}

void PlaceContext::sort_basis() {
    std::vector<std::size_t> order(gens_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [this](std::size_t a, std::size_t b) { return gens_[a] < gens_[b]; });
    std::vector<FPoly> gens;
    std::vector<std::optional<internal::Img>> imgs;
    gens.reserve(gens_.size());
    imgs.reserve(gens_.size());
    for (std::size_t i : order) {
        gens.push_back(std::move(gens_[i]));
        imgs.push_back(std::move(gen_imgs_[i]));
    }
    gens_ = std::move(gens);
    gen_imgs_ = std::move(imgs);
}

void PlaceContext::insert_squarefree_pieces(FPoly h) {
    const std::uint64_t M = internal::filter_modulus(field_);
    std::vector<FPoly> work{std::move(h)};
    while (!work.empty()) {
        FPoly f = std::move(work.back());
        work.pop_back();
        if (f.degree() < 1) continue;
        // divide out known generators first; this keeps the gcd chain of
        // high-power inputs (T^n and friends) from going quadratic
        std::optional<internal::Img> f_img = internal::mod_image(f, M);
        for (std::size_t i = 0; i < gens_.size() && f.degree() >= 1; ++i) {
            int mult = multiplicity_at(i, f, f_img);
            if (mult == 0) continue;
            f = f.exact_div(mult == 1 ? gens_[i] : gens_[i].pow(mult));
            if (f.degree() >= 1) {
                f = f.monic();
                f_img = internal::mod_image(f, M);
            }
        }
        if (f.degree() < 1) continue;
        FPoly df = f.derivative();
        if (df.is_zero()) {
            work.push_back(char_p_root(f)); // same radical, degree / p
            continue;
        }
        FPoly g = poly_gcd(f, df);
        if (g.degree() < 1) {
            insert_monic(f); // squarefree piece
        } else {
            work.push_back(g);
            work.push_back(f.exact_div(g)); // the radical of f
        }
    }
}

void PlaceContext::insert_monic(FPoly h) {
    const std::uint64_t M = internal::filter_modulus(field_);
    std::vector<FPoly> work{std::move(h)};
    while (!work.empty()) {
        FPoly f = std::move(work.back());
        work.pop_back();
        if (f.degree() < 1) continue;
        std::optional<internal::Img> f_img = internal::mod_image(f, M);
        bool split = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            // cached-image coprimality test settles almost every pair
            if (f_img && gen_imgs_[i] &&
                internal::gcd_degree_mod(*f_img, *gen_imgs_[i], M) == 0)
                continue;
            FPoly d = poly_gcd(f, gens_[i]);
            if (d.degree() < 1) continue;
            if (d == gens_[i]) {
                // known generator divides f: strip every copy
                do f = f.exact_div(gens_[i]); while (gens_[i].divides(f));
                if (f.degree() < 1) { split = true; break; }
                f = f.monic();
                f_img = internal::mod_image(f, M);
                continue;
            }
            // proper common factor: replace the generator by its pieces
            FPoly rest = gens_[i].exact_div(d);
            gens_.erase(gens_.begin() + static_cast<long>(i));
            gen_imgs_.erase(gen_imgs_.begin() + static_cast<long>(i));
            work.push_back(std::move(d));
            work.push_back(std::move(rest));
            work.push_back(std::move(f));
            split = true;
            break;
        }
        if (!split) {
            gen_imgs_.push_back(internal::mod_image(f, M));
            gens_.push_back(std::move(f));
        }
    }
}

namespace {

// doubling power trick keeps high multiplicities (T^10000 and friends)
// out of the quadratic repeated-division regime
int exact_multiplicity(const FPoly& g, const FPoly& f) {
    int count = 0;
    FPoly rest = f;
    FPoly power = g; // g^(2^k)
    int power_mult = 1;
    while (power.degree() <= rest.degree()) {
        auto [q, r] = rest.divrem(power);
        if (!r.is_zero()) break;
        rest = std::move(q);
        count += power_mult;
        if (2LL * power.degree() <= rest.degree()) {
            power = power * power;
            power_mult *= 2;
        }
    }
    if (count == 0) return 0;
    // settle the remainder of the last doubled power linearly
    while (rest.degree() >= g.degree()) {
        auto [q, r] = rest.divrem(g);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++count;
    }
    return count;
}

} // namespace

int PlaceContext::multiplicity_at(std::size_t gen_index, const FPoly& f,
                                  const std::optional<internal::Img>& f_img) const {
    const FPoly& g = gens_[gen_index];
    if (g.degree() > f.degree()) return 0;
    const std::uint64_t M = internal::filter_modulus(field_);
    if (f_img && gen_imgs_[gen_index] &&
        !internal::divisible_mod(*f_img, *gen_imgs_[gen_index], M))
        return 0;
    return exact_multiplicity(g, f);
}

int PlaceContext::multiplicity(const FPoly& g, const FPoly& f) const {
    if (f.is_zero()) raise(ErrorCode::ZeroElement, "multiplicity in the zero polynomial");
    if (g.degree() > f.degree() || !g.divides(f)) return 0;
    return exact_multiplicity(g, f);
}

LogSize PlaceContext::local_logsize(const KElem& x, const Place& v) {
    if (v.field() != field_) raise(ErrorCode::FieldMismatch, "place from a different field");
    if (x.is_zero()) return LogSize::neg_infinity();
    if (v.is_infinity()) return LogSize::of(Rat(x.num().degree() - x.den().degree()));
    refine(x);
    refine(v.generator());
    const std::uint64_t M = internal::filter_modulus(field_);
    auto num_img = internal::mod_image(x.num(), M);
    auto den_img = internal::mod_image(x.den(), M);
    auto v_img = internal::mod_image(v.generator(), M);
    // grouped answer: sum over current generators dividing v's polynomial
    Rat total(0);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const FPoly& q = gens_[i];
        if (q.degree() > v.generator().degree()) break; // basis sorted by degree first
        if (v_img && gen_imgs_[i] && !internal::divisible_mod(*v_img, *gen_imgs_[i], M)) continue;
        if (!q.divides(v.generator())) continue;
        int ord = multiplicity_at(i, x.num(), num_img) - multiplicity_at(i, x.den(), den_img);
        total += Rat(-ord) * Rat(q.degree());
    }
    return LogSize::of(total);
}

std::vector<std::pair<Place, LogSize>> PlaceContext::support(const KElem& x) {
    if (x.is_zero()) raise(ErrorCode::ZeroElement, "support of the zero element");
    refine(x);
    const std::uint64_t M = internal::filter_modulus(field_);
    auto num_img = internal::mod_image(x.num(), M);
    auto den_img = internal::mod_image(x.den(), M);
    std::vector<std::pair<Place, LogSize>> out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        int ord = multiplicity_at(i, x.num(), num_img) - multiplicity_at(i, x.den(), den_img);
        if (ord == 0) continue;
        out.emplace_back(Place::finite(gens_[i]), LogSize::of(Rat(-ord) * Rat(gens_[i].degree())));
    }
    int inf = x.num().degree() - x.den().degree();
    if (inf != 0) out.emplace_back(infinite_place(), LogSize::of(Rat(inf)));
    return out;
}

Rat PlaceContext::product_formula_check(const KElem& x) {
    if (x.is_zero()) raise(ErrorCode::ZeroElement, "product formula on the zero element");
    Rat total(0);
    for (const auto& [place, ls] : support(x)) total += ls.value();
    return total;
}

} // namespace ffdyn
