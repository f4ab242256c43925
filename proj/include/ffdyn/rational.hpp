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

#ifndef FFDYN_RATIONAL_HPP
#define FFDYN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ffdyn {

/// Exact arbitrary-precision rational, always in lowest terms with positive
/// denominator. Used for constant-field elements over Q and for every
/// log-size, radius and height in the system; nothing is ever rounded.
using Rat = mpq_class;
using Int = mpz_class;

/// n/d in canonical form (d may be negative or non-coprime on input).
Rat make_rat(long n, long d = 1);
Rat make_rat(const Int& n, const Int& d);

/// Largest integer <= q.
Int rat_floor(const Rat& q);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);
std::string int_to_string(const Int& n);

/// Parses a (possibly signed) integer literal; throws SyntaxError on junk.
Int int_from_string(const std::string& s);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace ffdyn

#endif
