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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqlab/process_set.hpp"

namespace aqlab {

struct B3Violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Keeps only inclusion-maximal sets, sorted by mask. Canonical form for
/// fail-prone collections, whose semantics are subset-closed.
inline std::vector<ProcessSet> maximal_antichain(std::vector<ProcessSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ProcessSet> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& t : sets)
      if (s != t && s.subset_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

/// Keeps only inclusion-minimal sets, sorted by mask. Canonical form for
/// quorum and kernel collections.
inline std::vector<ProcessSet> minimal_antichain(std::vector<ProcessSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ProcessSet> out;
  for (const auto& s : sets) {
    bool dominates = false;
    for (const auto& t : sets)
      if (s != t && t.subset_of(s)) {
        dominates = true;
        break;
      }
    if (!dominates) out.push_back(s);
  }
  return out;
}

/// Membership in the subset closure of a collection stored as a maximal
/// antichain: f is in the closure iff f is below some stored set.
inline bool in_closure(const std::vector<ProcessSet>& maximal, ProcessSet f) {
  for (const auto& s : maximal)
    if (f.subset_of(s)) return true;
  return false;
}

/// True when the set of senders covers some member of a quorum (or kernel)
/// collection. The paper's "received ... from all processes in some Q".
inline bool covers_some(const std::vector<ProcessSet>& collection, ProcessSet senders) {
  for (const auto& q : collection)
    if (q.subset_of(senders)) return true;
  return false;
}

/// Asymmetric fail-prone system: one collection of fail-prone sets per
/// process, each stored as an inclusion-maximal antichain.
class FailProneSystem {
 public:
  FailProneSystem() = default;
  FailProneSystem(int n, std::vector<std::vector<ProcessSet>> per_process)
      : n_(n), sets_(std::move(per_process)) {
    if (n_ < 1 || n_ > kMaxProcesses) throw ValidationError("process count out of range");
    if (static_cast<int>(sets_.size()) != n_)
      throw ValidationError("fail-prone system must list one collection per process");
    ProcessSet uni = ProcessSet::universe(n_);
    for (auto& coll : sets_) {
      if (coll.empty()) throw ValidationError("empty fail-prone collection");
      for (const auto& s : coll)
        if (!s.subset_of(uni)) throw ValidationError("fail-prone set exceeds universe");
      coll = maximal_antichain(std::move(coll));
    }
  }

  int n() const { return n_; }
  const std::vector<ProcessSet>& of(ProcessId i) const { return sets_[i]; }
  const std::vector<std::vector<ProcessSet>>& all() const { return sets_; }

  /// F in the closure of process i's fail-prone collection.
  bool foresees(ProcessId i, ProcessSet f) const { return in_closure(sets_[i], f); }

  bool operator==(const FailProneSystem&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<ProcessSet>> sets_;
};

enum class QuorumOrigin { CanonicalFromFailProne, Explicit };

/// Asymmetric quorum system: one quorum collection per process, stored as
/// inclusion-minimal antichains. Validity against a fail-prone system is
/// established separately (verify_consistency / verify_availability).
class QuorumSystem {
 public:
  QuorumSystem() = default;
  QuorumSystem(int n, std::vector<std::vector<ProcessSet>> per_process,
               QuorumOrigin origin = QuorumOrigin::Explicit)
      : n_(n), origin_(origin), sets_(std::move(per_process)) {
    if (n_ < 1 || n_ > kMaxProcesses) throw ValidationError("process count out of range");
    if (static_cast<int>(sets_.size()) != n_)
      throw ValidationError("quorum system must list one collection per process");
    ProcessSet uni = ProcessSet::universe(n_);
    for (auto& coll : sets_) {
      if (coll.empty()) throw ValidationError("empty quorum collection");
      for (const auto& s : coll)
        if (!s.subset_of(uni)) throw ValidationError("quorum exceeds universe");
      coll = minimal_antichain(std::move(coll));
    }
  }

  int n() const { return n_; }
  QuorumOrigin origin() const { return origin_; }
  const std::vector<ProcessSet>& of(ProcessId i) const { return sets_[i]; }
  const std::vector<std::vector<ProcessSet>>& all() const { return sets_; }

  /// Distinct quorum sets over all processes, sorted. The coin dealer
  /// conditions one sharing per distinct set.
  std::vector<ProcessSet> distinct_quorums() const {
    std::vector<ProcessSet> out;
    for (const auto& coll : sets_) out.insert(out.end(), coll.begin(), coll.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool operator==(const QuorumSystem&) const = default;

 private:
  int n_ = 0;
  QuorumOrigin origin_ = QuorumOrigin::Explicit;
  std::vector<std::vector<ProcessSet>> sets_;
};

/// Kernel system: per process, the minimal transversals of its quorums.
struct KernelSystem {
  int n = 0;
  std::vector<std::vector<ProcessSet>> sets;

  const std::vector<ProcessSet>& of(ProcessId i) const { return sets[i]; }
};

}  // namespace aqlab
