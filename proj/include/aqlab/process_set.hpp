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

#include <cassert>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace aqlab {

/// Process index in [0, n). Printed 1-based in all file formats, matching
/// the usual p_1..p_n convention.
using ProcessId = int;

constexpr int kMaxProcesses = 64;

/// A subset of the process universe as a 64-bit mask. All set algebra is
/// exact; values are freely copyable and hashable.
class ProcessSet {
 public:
  constexpr ProcessSet() = default;
  constexpr explicit ProcessSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ProcessSet universe(int n) {
    return ProcessSet(n >= 64 ? ~0ull : ((1ull << n) - 1));
  }
  static ProcessSet of(std::initializer_list<int> ids) {
    ProcessSet s;
    for (int i : ids) s.add(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }

  constexpr bool contains(ProcessId i) const { return (bits_ >> i) & 1; }
  void add(ProcessId i) { bits_ |= 1ull << i; }
  void remove(ProcessId i) { bits_ &= ~(1ull << i); }

  constexpr ProcessSet operator|(ProcessSet o) const { return ProcessSet(bits_ | o.bits_); }
  constexpr ProcessSet operator&(ProcessSet o) const { return ProcessSet(bits_ & o.bits_); }
  constexpr ProcessSet operator-(ProcessSet o) const { return ProcessSet(bits_ & ~o.bits_); }
  ProcessSet& operator|=(ProcessSet o) { bits_ |= o.bits_; return *this; }
  ProcessSet& operator&=(ProcessSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool subset_of(ProcessSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ProcessSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr bool operator==(const ProcessSet&) const = default;
  constexpr bool operator<(ProcessSet o) const { return bits_ < o.bits_; }

  /// Lowest member, or -1 when empty.
  ProcessId first() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  std::vector<ProcessId> members() const {
    std::vector<ProcessId> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) fn(__builtin_ctzll(b));
  }

  /// 1-based display form, e.g. "{3,4}". "{}" when empty.
  std::string str() const {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for_each([&](int i) {
      if (sep) os << ',';
      os << i + 1;
      sep = true;
    });
    os << '}';
    return os.str();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace aqlab
