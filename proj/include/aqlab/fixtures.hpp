// Copyright 2026 the aqlab authors
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

#include <vector>

#include "aqlab/analysis.hpp"
#include "aqlab/rng.hpp"
#include "aqlab/systems.hpp"

namespace aqlab::fixtures {

/// The 6-process fail-prone system used by the RB[1] impossibility argument.
/// Its canonical quorums give p_1, p_2 depth 1 when {p_5, p_6} fail.
inline FailProneSystem fd_system() {
  auto s = [](std::initializer_list<int> one_based) {
    ProcessSet out;
    for (int i : one_based) out.add(i - 1);
    return out;
  };
  std::vector<std::vector<ProcessSet>> f(6);
  f[0] = {s({1, 2, 5, 6}), s({1, 2, 3})};
  f[1] = {s({1, 2, 5, 6}), s({1, 2, 3})};
  f[2] = {s({1, 2, 4})};
  f[3] = {s({1, 2, 3})};
  f[4] = {s({1, 2, 4})};
  f[5] = {s({1, 2, 4})};
  return FailProneSystem(6, std::move(f));
}

/// Symmetric f-out-of-n threshold assumptions written out asymmetrically:
/// every process fears every f-subset (every subset of size f).
inline FailProneSystem threshold_system(int n, int f) {
  std::vector<ProcessSet> subsets;
  for (std::uint64_t m = 0; m < (1ull << n); ++m)
    if (__builtin_popcountll(m) == f) subsets.push_back(ProcessSet(m));
  if (subsets.empty()) subsets.push_back(ProcessSet());
  return FailProneSystem(n, std::vector<std::vector<ProcessSet>>(n, subsets));
}

/// Chain system with n = levels + 2 processes whose depths under
/// faults = {p_n} are exactly 1..levels for the chain members, 0 for the
/// second-to-last (naive) process, with no guild. Each chain process c_j
/// trusts the suffix {c_{j-1}, ..., c_levels}; c_1 trusts everyone but the
/// faulty tail. Useful wherever finite depth classes (not guilds) must carry
/// a protocol.
inline FailProneSystem layered_system(int levels) {
  const int n = levels + 2;
  const int w = levels;      // naive process
  const int f = levels + 1;  // designated faulty process
  const ProcessSet uni = ProcessSet::universe(n);

  std::vector<std::vector<ProcessSet>> fp(n);
  // c_1 (index 0): quorum = everyone except f.
  fp[0] = {ProcessSet::of({f})};
  // c_j (index j-1, j >= 2): quorum = {c_{j-1}..c_levels}.
  for (int j = 2; j <= levels; ++j) {
    ProcessSet t;
    for (int idx = j - 2; idx <= levels - 1; ++idx) t.add(idx);
    fp[j - 1] = {uni - t};
  }
  fp[w] = {ProcessSet::of({levels - 1})};  // w fears c_levels only: naive once f fails
  fp[f] = {ProcessSet::of({w})};
  return FailProneSystem(n, std::move(fp));
}

/// Faults for which layered_system exhibits its depth ladder.
inline ProcessSet layered_faults(int levels) { return ProcessSet::of({levels + 1}); }

/// Random fail-prone system satisfying B3, via rejection sampling. Set
/// sizes are kept near n/3 so both outcomes of the B3 check occur.
inline FailProneSystem random_b3_system(Rng& rng, int n) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<ProcessSet>> fp(n);
    for (int i = 0; i < n; ++i) {
      int count = 1 + static_cast<int>(rng.pick(3));
      for (int k = 0; k < count; ++k) {
        int size = 1 + static_cast<int>(rng.pick(static_cast<std::size_t>((n + 2) / 3)));
        ProcessSet s;
        while (s.size() < size) s.add(static_cast<int>(rng.pick(n)));
        fp[i].push_back(s);
      }
    }
    FailProneSystem sys(n, std::move(fp));
    if (check_b3(sys).ok) return sys;
  }
  throw std::runtime_error("random_b3_system: rejection sampling failed");
}

}  // namespace aqlab::fixtures
