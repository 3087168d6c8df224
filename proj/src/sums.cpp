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


#include "pslin/sums.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "pslin/errors.hpp"
#include "pslin/parallel.hpp"
#include "pslin/pscore.hpp"

namespace pslin {
namespace {

struct Raw {
  std::uint64_t k, l, m;
};

constexpr std::size_t kBlock = 16;

}  // namespace

std::vector<SevenSumTriple> find_triples(const AlphaSpec& alpha, const Integer& bound,
                                         const TripleOptions& options) {
  if (bound < 1) return {};
  Integer top = 3 * bound;
  if (top > options.max_table) {
    throw BudgetExceeded("membership table would need " + to_string(top) + " entries");
  }
  const std::uint64_t b = bound.get_ui();
  const std::uint64_t limit_value = top.get_ui();

  // index[v] = n when floor(n^alpha) == v, else 0.
  std::vector<std::uint64_t> index(limit_value + 1, 0);
  Integer n_max = rank(alpha, top, options.precision);
  std::vector<std::uint64_t> members;
  if (n_max >= 1) {
    for (const auto& t : segment(alpha, Integer(1), n_max, options.precision, options.threads)) {
      std::uint64_t v = t.value.get_ui();
      index[v] = t.n.get_ui();
      if (v <= b) members.push_back(v);
    }
  }
  auto in_ps = [&](std::uint64_t v) { return v <= limit_value && index[v] != 0; };
  const bool strict = !options.allow_degenerate;

  const std::size_t blocks = (members.size() + kBlock - 1) / kBlock;
  auto parts = map_blocks(blocks, options.threads, [&](std::size_t blk) {
    std::vector<Raw> out;
    std::size_t end = std::min(members.size(), (blk + 1) * kBlock);
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      std::uint64_t k = members[i];
      for (std::size_t j = strict ? i + 1 : i; j < members.size(); ++j) {
        std::uint64_t l = members[j];
        if (!in_ps(k + l)) continue;
        for (std::size_t h = strict ? j + 1 : j; h < members.size(); ++h) {
          std::uint64_t m = members[h];
          if (in_ps(l + m) && in_ps(m + k) && in_ps(k + l + m)) out.push_back({k, l, m});
        }
      }
    }
    return out;
  });

  std::vector<Raw> raw;
  for (auto& part : parts) raw.insert(raw.end(), part.begin(), part.end());
  std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
    return std::make_tuple(x.k + x.l + x.m, x.k, x.l, x.m) <
           std::make_tuple(y.k + y.l + y.m, y.k, y.l, y.m);
  });
  if (options.limit > 0 && raw.size() > options.limit) raw.resize(options.limit);

  std::vector<SevenSumTriple> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    SevenSumTriple t;
    t.k = r.k;
    t.l = r.l;
    t.m = r.m;
    t.degenerate = r.k == r.l || r.l == r.m;
    const std::array<std::uint64_t, 7> values = {r.k,       r.l,       r.m,            r.k + r.l,
                                                 r.l + r.m, r.m + r.k, r.k + r.l + r.m};
    for (std::size_t i = 0; i < values.size(); ++i) {
      auto n = member(Integer(values[i]), alpha, options.precision);
      if (!n) throw Error("membership re-check failed for " + std::to_string(values[i]));
      t.witnesses[i] = *n;
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace pslin
