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

#include <limits>
#include <optional>
#include <vector>

#include "aqlab/process_set.hpp"
#include "aqlab/systems.hpp"

namespace aqlab {

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

struct B3Witness {
  ProcessId i, j;
  ProcessSet fi, fj, fij;
};

struct B3Result {
  bool ok = false;
  std::optional<B3Witness> witness;  // one violating quadruple when !ok
};

/// B3 condition: no F_i, F_j together with a commonly feared F_ij cover the
/// whole universe. The maximal elements of F_i* ∩ F_j* are intersections of
/// stored maximal sets, so checking those suffices.
inline B3Result check_b3(const FailProneSystem& fps) {
  const int n = fps.n();
  const ProcessSet uni = ProcessSet::universe(n);
  for (ProcessId i = 0; i < n; ++i)
    for (ProcessId j = i; j < n; ++j)
      for (const auto& fi : fps.of(i))
        for (const auto& fj : fps.of(j))
          for (const auto& a : fps.of(i))
            for (const auto& b : fps.of(j)) {
              ProcessSet fij = a & b;
              if (uni.subset_of(fi | fj | fij))
                return {false, B3Witness{i, j, fi, fj, fij}};
            }
  return {true, std::nullopt};
}

/// Q3 over a symmetric fail-prone collection: no three sets in the closure
/// cover the universe. Repetition of sets is allowed by the quantifier.
inline bool check_q3(const std::vector<ProcessSet>& collection, int n) {
  const ProcessSet uni = ProcessSet::universe(n);
  if (collection.empty()) return true;
  auto maximal = maximal_antichain(collection);
  for (const auto& a : maximal)
    for (const auto& b : maximal)
      for (const auto& c : maximal)
        if (uni.subset_of(a | b | c)) return false;
  return true;
}

/// Complement construction: Q_i = { P \ F : F in F_i }. Requires B3.
inline QuorumSystem canonical_quorums(const FailProneSystem& fps) {
  B3Result b3 = check_b3(fps);
  if (!b3.ok)
    throw B3Violation("fail-prone system violates B3; no canonical quorum system exists");
  const ProcessSet uni = ProcessSet::universe(fps.n());
  std::vector<std::vector<ProcessSet>> qs(fps.n());
  for (ProcessId i = 0; i < fps.n(); ++i)
    for (const auto& f : fps.of(i)) qs[i].push_back(uni - f);
  return QuorumSystem(fps.n(), std::move(qs), QuorumOrigin::CanonicalFromFailProne);
}

struct ConsistencyWitness {
  ProcessId i, j;
  ProcessSet qi, qj, fij;
};

/// Def. 1 Consistency: every pairwise quorum intersection escapes every
/// commonly feared set.
inline std::optional<ConsistencyWitness> verify_consistency(const QuorumSystem& qs,
                                                            const FailProneSystem& fps) {
  const int n = qs.n();
  for (ProcessId i = 0; i < n; ++i)
    for (ProcessId j = i; j < n; ++j)
      for (const auto& qi : qs.of(i))
        for (const auto& qj : qs.of(j))
          for (const auto& a : fps.of(i))
            for (const auto& b : fps.of(j)) {
              ProcessSet fij = a & b;
              if ((qi & qj).subset_of(fij)) return ConsistencyWitness{i, j, qi, qj, fij};
            }
  return std::nullopt;
}

struct AvailabilityWitness {
  ProcessId i;
  ProcessSet fi;  // fail-prone set with no disjoint quorum
};

/// Def. 1 Availability: each fail-prone set of a process leaves some quorum
/// of that process untouched.
inline std::optional<AvailabilityWitness> verify_availability(const QuorumSystem& qs,
                                                              const FailProneSystem& fps) {
  for (ProcessId i = 0; i < qs.n(); ++i)
    for (const auto& fi : fps.of(i)) {
      bool found = false;
      for (const auto& q : qs.of(i))
        if (!q.intersects(fi)) {
          found = true;
          break;
        }
      if (!found) return AvailabilityWitness{i, fi};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

namespace detail {
inline void kernel_search(const std::vector<ProcessSet>& quorums, ProcessSet partial,
                          std::size_t next, std::vector<ProcessSet>& out) {
  // Branch on the first quorum not yet hit; every minimal transversal must
  // pick one of its members.
  std::size_t unhit = next;
  while (unhit < quorums.size() && quorums[unhit].intersects(partial)) ++unhit;
  if (unhit == quorums.size()) {
    out.push_back(partial);
    return;
  }
  quorums[unhit].for_each([&](int p) {
    ProcessSet ext = partial;
    ext.add(p);
    kernel_search(quorums, ext, unhit + 1, out);
  });
}
}  // namespace detail

/// All inclusion-minimal transversals (hitting sets) of a quorum collection.
inline std::vector<ProcessSet> kernels(const std::vector<ProcessSet>& quorums) {
  if (quorums.empty()) return {};
  std::vector<ProcessSet> found;
  detail::kernel_search(quorums, ProcessSet(), 0, found);
  return minimal_antichain(std::move(found));
}

/// Kernel systems for every process of a quorum system.
inline KernelSystem kernel_system(const QuorumSystem& qs) {
  KernelSystem ks;
  ks.n = qs.n();
  ks.sets.reserve(qs.n());
  for (ProcessId i = 0; i < qs.n(); ++i) ks.sets.push_back(kernels(qs.of(i)));
  return ks;
}

// ---------------------------------------------------------------------------
// Per-execution structure: classification, depth, guild
// ---------------------------------------------------------------------------

enum class ProcessClass { Faulty, Naive, Wise };

inline const char* to_string(ProcessClass c) {
  switch (c) {
    case ProcessClass::Faulty: return "faulty";
    case ProcessClass::Naive: return "naive";
    default: return "wise";
  }
}

inline std::vector<ProcessClass> classify(const FailProneSystem& fps, ProcessSet faults) {
  std::vector<ProcessClass> out(fps.n());
  for (ProcessId i = 0; i < fps.n(); ++i) {
    if (faults.contains(i))
      out[i] = ProcessClass::Faulty;
    else
      out[i] = fps.foresees(i, faults) ? ProcessClass::Wise : ProcessClass::Naive;
  }
  return out;
}

/// Maximal depth of a process; faulty processes carry no depth.
class Depth {
 public:
  static Depth finite(int d) { return Depth(d); }
  static Depth infinite() { return Depth(kInf); }

  bool is_infinite() const { return v_ == kInf; }
  int value() const { return v_; }  // meaningful only when finite

  bool at_least(int d) const { return v_ == kInf || v_ >= d; }
  bool operator==(const Depth&) const = default;

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  explicit Depth(int v) : v_(v) {}
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_;
};

/// Descending fixpoint of Def. 6: S_0 = correct processes, S_{d+1} = correct
/// processes owning a quorum inside S_d. A process in the fixpoint has
/// infinite depth; lower chain levels give the maximal finite depth.
inline std::vector<std::optional<Depth>> depth_map(const QuorumSystem& qs, ProcessSet faults) {
  const int n = qs.n();
  const ProcessSet correct = ProcessSet::universe(n) - faults;

  auto step = [&](ProcessSet s) {
    ProcessSet next;
    correct.for_each([&](int p) {
      if (covers_some(qs.of(p), s)) next.add(p);
    });
    return next;
  };

  std::vector<ProcessSet> chain{correct};
  while (true) {
    ProcessSet next = step(chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
  }
  const ProcessSet fix = chain.back();

  std::vector<std::optional<Depth>> out(n);
  correct.for_each([&](int p) {
    if (fix.contains(p)) {
      out[p] = Depth::infinite();
      return;
    }
    int d = 0;
    for (std::size_t lvl = 1; lvl < chain.size(); ++lvl)
      if (chain[lvl].contains(p)) d = static_cast<int>(lvl);
    out[p] = Depth::finite(d);
  });
  return out;
}

/// Members of the depth chain use the convention that depth >= d includes
/// infinite depth.
inline ProcessSet depth_class(const std::vector<std::optional<Depth>>& depths, int d) {
  ProcessSet out;
  for (std::size_t i = 0; i < depths.size(); ++i)
    if (depths[i] && depths[i]->at_least(d)) out.add(static_cast<int>(i));
  return out;
}

/// Greatest fixpoint of G -> { wise p : some quorum of p inside G }, started
/// from the wise set. Every guild is contained in the result, so a nonempty
/// result is the maximal guild; nullopt when no guild exists.
inline std::optional<ProcessSet> maximal_guild(const QuorumSystem& qs, const FailProneSystem& fps,
                                               ProcessSet faults) {
  ProcessSet wise;
  for (ProcessId i = 0; i < fps.n(); ++i)
    if (!faults.contains(i) && fps.foresees(i, faults)) wise.add(i);

  ProcessSet g = wise;
  while (true) {
    ProcessSet next;
    g.for_each([&](int p) {
      if (covers_some(qs.of(p), g)) next.add(p);
    });
    if (next == g) break;
    g = next;
  }
  if (g.empty()) return std::nullopt;
  return g;
}

/// Per-execution derived structure, bundled for reports and trace headers.
struct ExecutionContext {
  ProcessSet faults;
  std::vector<ProcessClass> classification;
  std::vector<std::optional<Depth>> depths;
  std::optional<ProcessSet> guild;
};

inline ExecutionContext execution_context(const QuorumSystem& qs, const FailProneSystem& fps,
                                          ProcessSet faults) {
  return ExecutionContext{faults, classify(fps, faults), depth_map(qs, faults),
                          maximal_guild(qs, fps, faults)};
}

// ---------------------------------------------------------------------------
// Tolerated system and the symmetric reduction
// ---------------------------------------------------------------------------

/// Def. 3: complements of guilds over all 2^n executions, reduced to the
/// inclusion-maximal antichain. Exponential in n; intended for n <= ~16.
inline std::vector<ProcessSet> tolerated_system(const QuorumSystem& qs,
                                                const FailProneSystem& fps) {
  const int n = qs.n();
  const ProcessSet uni = ProcessSet::universe(n);
  std::vector<ProcessSet> tolerated;
  for (std::uint64_t f = 0; f < (1ull << n); ++f) {
    auto g = maximal_guild(qs, fps, ProcessSet(f));
    if (g) tolerated.push_back(uni - *g);
  }
  return maximal_antichain(std::move(tolerated));
}

/// Theorem 1 construction: interpret the tolerated system of the canonical
/// quorums as a symmetric fail-prone collection.
inline std::vector<ProcessSet> symmetric_reduction(const FailProneSystem& fps) {
  return tolerated_system(canonical_quorums(fps), fps);
}

}  // namespace aqlab
