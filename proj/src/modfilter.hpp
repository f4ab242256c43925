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

// Internal modular pre-filter for coprimality and divisibility tests.
//
// Almost every gcd/divisibility query in the valuation machinery is
// negative; an image modulo a machine prime settles those in integer
// arithmetic. Over F_p the image is the polynomial itself and answers are
// exact. Over Q the filter is conservative: it is only usable when no
// coefficient denominator and neither leading numerator vanishes mod M,
// and then "image gcd trivial" implies genuine coprimality (Gauss's
// lemma: the primitive integer gcd keeps its degree mod M), and "image
// remainder nonzero" implies genuine non-divisibility.

#ifndef FFDYN_SRC_MODFILTER_HPP
#define FFDYN_SRC_MODFILTER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffdyn/fpoly.hpp"

namespace ffdyn::internal {

using Img = std::vector<std::uint64_t>; // coefficients mod M, low degree first

std::uint64_t filter_modulus(const ConstField& F);

/// nullopt when the image must not be trusted for filtering.
std::optional<Img> mod_image(const FPoly& f, std::uint64_t M);

/// Degree of gcd of the images (consumes its arguments).
int gcd_degree_mod(Img a, Img b, std::uint64_t M);

/// True iff the image of f is divisible by the image of g.
bool divisible_mod(const Img& f, const Img& g, std::uint64_t M);

} // namespace ffdyn::internal

#endif
