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

// Terms floor(n^alpha) of the Piatetski-Shapiro sequence, membership and
// counting. Every value is a certified floor.

#pragma once

#include <optional>
#include <vector>

#include "pslin/certreal.hpp"

namespace pslin {

struct PsTerm {
  Integer n;
  Integer value;

  friend bool operator==(const PsTerm&, const PsTerm&) = default;
};

// Terms for n in [n_lo, n_hi]; 1 <= n_lo <= n_hi.
std::vector<PsTerm> segment(const AlphaSpec& alpha, const Integer& n_lo, const Integer& n_hi,
                            const PrecisionPolicy& policy = {}, unsigned threads = 1);

// The unique n with floor(n^alpha) == m, if any. m >= 0.
std::optional<Integer> member(const Integer& m, const AlphaSpec& alpha,
                              const PrecisionPolicy& policy = {});

// #{n : floor(n^alpha) <= x}, i.e. the number of sequence terms in [1, x];
// 0 when x < 1.
Integer rank(const AlphaSpec& alpha, const Integer& x, const PrecisionPolicy& policy = {});

}  // namespace pslin
