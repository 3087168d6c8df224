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

#include "pslin/pscore.hpp"

#include "pslin/errors.hpp"
#include "pslin/parallel.hpp"

namespace pslin {
namespace {

constexpr unsigned long kSegmentBlock = 4096;

// Enclosure of x^(1/alpha) tight enough that its integer ceiling range is
// at most a couple of candidates.
CertifiedReal root_enclosure(const Integer& x, const AlphaSpec& alpha) {
  long p = static_cast<long>(bit_length(x)) + 64;
  return eval_root(Rational(x), alpha, p);
}

}  // namespace

std::vector<PsTerm> segment(const AlphaSpec& alpha, const Integer& n_lo, const Integer& n_hi,
                            const PrecisionPolicy& policy, unsigned threads) {
  if (n_lo < 1 || n_hi < n_lo) throw InvalidParams("segment needs 1 <= n_lo <= n_hi");
  Integer count = n_hi - n_lo + 1;
  if (!count.fits_ulong_p()) throw InvalidParams("segment too long");
  unsigned long total = count.get_ui();
  std::size_t blocks = (total + kSegmentBlock - 1) / kSegmentBlock;

  auto parts = map_blocks(blocks, threads, [&](std::size_t b) {
    std::vector<PsTerm> out;
    unsigned long begin = b * kSegmentBlock;
    unsigned long end = std::min(total, begin + kSegmentBlock);
    out.reserve(end - begin);
    for (unsigned long i = begin; i < end; ++i) {
      Integer n = n_lo + i;
      out.push_back({n, floor_pow(n, alpha, policy).value});
    }
    return out;
  });

  std::vector<PsTerm> terms;
  terms.reserve(total);
  for (auto& part : parts) {
    for (auto& t : part) terms.push_back(std::move(t));
  }
  return terms;
}

std::optional<Integer> member(const Integer& m, const AlphaSpec& alpha,
                              const PrecisionPolicy& policy) {
  if (m < 0) throw InvalidParams("membership is defined for m >= 0");
  if (m == 0) return std::nullopt;
  if (m == 1) return Integer(1);
  // The only possible witness is ceil(m^(1/alpha)); the enclosure narrows it
  // down to a few candidates, each settled by a certified floor.
  CertifiedReal r = root_enclosure(m, alpha);
  Integer lo = ceil(r.lower_q());
  Integer hi = ceil(r.upper_q());
  if (lo < 1) lo = 1;
  for (Integer n = lo; n <= hi; ++n) {
    Integer v = floor_pow(n, alpha, policy).value;
    if (v == m) return n;
    if (v > m) break;
  }
  return std::nullopt;
}

Integer rank(const AlphaSpec& alpha, const Integer& x, const PrecisionPolicy& policy) {
  if (x < 1) return 0;
  // Largest n with n^alpha < x + 1.
  CertifiedReal r = root_enclosure(x + 1, alpha);
  Integer lo = ceil(r.lower_q()) - 1;
  Integer hi = ceil(r.upper_q()) - 1;
  if (lo < 1) lo = 1;
  for (Integer n = hi; n >= lo; --n) {
    if (floor_pow(n, alpha, policy).value <= x) return n;
  }
  return lo - 1;
}

}  // namespace pslin
