// Copyright 2026 The pslin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pslin {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", "-p/q", an integer, or a plain decimal literal such as
// "1.25" (taken as the exact rational 5/4). Scientific notation is not
// accepted. Throws InvalidParams on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Exact rational value of a finite double.
Rational exact_rational(double x);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Number of bits in |z|; 0 for z == 0.
std::size_t bit_length(const Integer& z);

// Returns r with r^k == z when z >= 0 is a perfect k-th power.
std::optional<Integer> exact_root(const Integer& z, unsigned long k);

// r^k for a rational r and k >= 0.
Rational pow(const Rational& r, unsigned long k);

// Fits in a signed 64-bit integer.
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

}  // namespace pslin
