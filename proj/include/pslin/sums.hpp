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


// Triples (k, l, m) with k, l, m, k+l, l+m, m+k and k+l+m all in PS(alpha).

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pslin/certreal.hpp"

namespace pslin {

struct SevenSumTriple {
  Integer k;
  Integer l;
  Integer m;
  // PS indices of k, l, m, k+l, l+m, m+k, k+l+m in that order.
  std::array<Integer, 7> witnesses;
  // Some of k, l, m coincide.
  bool degenerate = false;
};

struct TripleOptions {
  // Also report triples with repeated entries (k <= l <= m). Off by default,
  // since (1, 1, 1) and friends qualify for every alpha close to 1.
  bool allow_degenerate = false;
  std::size_t limit = 0;  // 0 = all
  unsigned threads = 1;
  PrecisionPolicy precision;
  // Largest value 3 * bound the membership table may cover.
  std::size_t max_table = 300'000'000;
};

// Triples with entries <= bound, ordered by k + l + m, then (k, l, m). Every
// returned triple is re-checked by seven independent membership decisions.
std::vector<SevenSumTriple> find_triples(const AlphaSpec& alpha, const Integer& bound,
                                         const TripleOptions& options = {});

}  // namespace pslin
