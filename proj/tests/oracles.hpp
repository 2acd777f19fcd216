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
//
// Brute-force reference computations for the trust-core operations. These
// deliberately avoid the library's shortcuts (antichain reasoning, fixpoint
// chains) and expand every quantifier literally, so they stay independent of
// the code paths they check. Only usable for small n.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "aqlab/analysis.hpp"
#include "aqlab/systems.hpp"

namespace oracles {

using aqlab::FailProneSystem;
using aqlab::ProcessId;
using aqlab::ProcessSet;
using aqlab::QuorumSystem;

// All subsets of every stored set: the literal closure F*.
inline std::vector<ProcessSet> closure(const std::vector<ProcessSet>& coll) {
  std::vector<ProcessSet> out;
  for (const auto& s : coll) {
    std::uint64_t m = s.bits();
    // enumerate submasks
    std::uint64_t sub = m;
    while (true) {
      out.push_back(ProcessSet(sub));
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ProcessSet> closure_intersection(const std::vector<ProcessSet>& a,
                                                    const std::vector<ProcessSet>& b) {
  auto ca = closure(a), cb = closure(b);
  std::vector<ProcessSet> out;
  for (const auto& x : ca)
    for (const auto& y : cb)
      if (x == y) out.push_back(x);
  return out;
}

inline bool b3(const FailProneSystem& fps) {
  const ProcessSet uni = ProcessSet::universe(fps.n());
  for (ProcessId i = 0; i < fps.n(); ++i)
    for (ProcessId j = 0; j < fps.n(); ++j) {
      auto common = closure_intersection(fps.of(i), fps.of(j));
      for (const auto& fi : fps.of(i))
        for (const auto& fj : fps.of(j))
          for (const auto& fij : common)
            if (uni.subset_of(fi | fj | fij)) return false;
    }
  return true;
}

inline bool q3(const std::vector<ProcessSet>& coll, int n) {
  const ProcessSet uni = ProcessSet::universe(n);
  auto c = closure(coll);
  for (const auto& a : c)
    for (const auto& b : c)
      for (const auto& d : c)
        if (uni.subset_of(a | b | d)) return false;
  return true;
}

inline bool consistency(const QuorumSystem& qs, const FailProneSystem& fps) {
  for (ProcessId i = 0; i < qs.n(); ++i)
    for (ProcessId j = 0; j < qs.n(); ++j) {
      auto common = closure_intersection(fps.of(i), fps.of(j));
      for (const auto& qi : qs.of(i))
        for (const auto& qj : qs.of(j))
          for (const auto& fij : common)
            if ((qi & qj).subset_of(fij)) return false;
    }
  return true;
}

inline bool availability(const QuorumSystem& qs, const FailProneSystem& fps) {
  for (ProcessId i = 0; i < qs.n(); ++i)
    for (const auto& fi : fps.of(i)) {
      bool ok = false;
      for (const auto& q : qs.of(i)) ok = ok || !q.intersects(fi);
      if (!ok) return false;
    }
  return true;
}

// Every subset of the universe that hits all quorums and is minimal with
// that property.
inline std::vector<ProcessSet> hitting_sets(const std::vector<ProcessSet>& quorums, int n) {
  auto hits_all = [&](ProcessSet k) {
    for (const auto& q : quorums)
      if (!k.intersects(q)) return false;
    return true;
  };
  std::vector<ProcessSet> out;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    ProcessSet k(m);
    if (!hits_all(k)) continue;
    bool minimal = true;
    for (int p : k.members()) {
      ProcessSet smaller = k;
      smaller.remove(p);
      if (hits_all(smaller)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(k);
  }
  return out;
}

// Checks the guild definition literally for one candidate set.
inline bool is_guild(const QuorumSystem& qs, const FailProneSystem& fps, ProcessSet faults,
                     ProcessSet g) {
  if (g.empty() || g.intersects(faults)) return false;
  auto cl = [&](ProcessId p) {
    for (const auto& f : closure(fps.of(p)))
      if (f == faults) return true;
    return false;
  };
  for (int p : g.members()) {
    if (!cl(p)) return false;  // wisdom
    bool has_quorum = false;
    for (const auto& q : qs.of(p)) has_quorum = has_quorum || q.subset_of(g);
    if (!has_quorum) return false;  // closure
  }
  return true;
}

// Union of all guilds, or nullopt when none exists.
inline std::optional<ProcessSet> max_guild(const QuorumSystem& qs, const FailProneSystem& fps,
                                           ProcessSet faults) {
  ProcessSet u;
  bool any = false;
  for (std::uint64_t m = 1; m < (1ull << qs.n()); ++m)
    if (is_guild(qs, fps, faults, ProcessSet(m))) {
      u |= ProcessSet(m);
      any = true;
    }
  if (!any) return std::nullopt;
  return u;
}

inline std::vector<ProcessSet> tolerated(const QuorumSystem& qs, const FailProneSystem& fps) {
  const ProcessSet uni = ProcessSet::universe(qs.n());
  std::vector<ProcessSet> raw;
  for (std::uint64_t f = 0; f < (1ull << qs.n()); ++f)
    if (auto g = max_guild(qs, fps, ProcessSet(f))) raw.push_back(uni - *g);
  return aqlab::maximal_antichain(raw);
}

// Top-down recursion on the depth definition, memoized per (process, d).
inline bool has_depth(const QuorumSystem& qs, ProcessSet faults, ProcessId p, int d,
                      std::map<std::pair<ProcessId, int>, int>& memo) {
  if (faults.contains(p)) return false;
  if (d == 0) return true;
  auto key = std::make_pair(p, d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  memo[key] = 0;  // cycle-safe default while computing
  bool ok = false;
  for (const auto& q : qs.of(p)) {
    bool all = true;
    for (int m : q.members()) all = all && has_depth(qs, faults, m, d - 1, memo);
    if (all) {
      ok = true;
      break;
    }
  }
  memo[key] = ok ? 1 : 0;
  return ok;
}

// Maximal depth; n+1 levels suffice to detect the infinite fixpoint.
inline std::optional<aqlab::Depth> depth_of(const QuorumSystem& qs, ProcessSet faults,
                                            ProcessId p) {
  if (faults.contains(p)) return std::nullopt;
  std::map<std::pair<ProcessId, int>, int> memo;
  if (has_depth(qs, faults, p, qs.n() + 1, memo)) return aqlab::Depth::infinite();
  int d = 0;
  while (has_depth(qs, faults, p, d + 1, memo)) ++d;
  return aqlab::Depth::finite(d);
}

}  // namespace oracles
