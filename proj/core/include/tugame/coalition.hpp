// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGAME_COALITION_HPP
#define TUGAME_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tugame {

/// A coalition of 1-based players encoded as a bitmask: player i is a member
/// iff bit (i-1) is set. The mask doubles as the index into a game's value
/// array.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> players) {
    std::uint32_t m = 0;
    for (int p : players) m |= std::uint32_t{1} << (p - 1);
    return Coalition(m);
  }
  static constexpr Coalition single(int player) {
    return Coalition(std::uint32_t{1} << (player - 1));
  }
  static constexpr Coalition full(int n) {
    return Coalition((std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return (mask_ >> (player - 1)) & 1u;
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & other.mask_) == mask_;
  }
  constexpr Coalition complement(int n) const {
    return Coalition(full(n).mask_ & ~mask_);
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr bool operator==(Coalition a, Coalition b) {
    return a.mask_ == b.mask_;
  }

  std::vector<int> players() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int p : players()) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    return out + "}";
  }

 private:
  std::uint32_t mask_ = 0;
};

/// Strict total order: smaller cardinality first; equal cardinality compares
/// the ascending member lists lexicographically ({1,3} < {1,4} < {2,3}).
/// For equal cardinality the first differing member is the lowest set bit of
/// the symmetric difference, so the coalition owning that bit comes first.
inline bool coalition_less(Coalition a, Coalition b) {
  const int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  const std::uint32_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  return (a.mask() & low) != 0;
}

struct CoalitionLess {
  bool operator()(Coalition a, Coalition b) const { return coalition_less(a, b); }
};

/// Visits every subset of `superset` (including itself and the empty set).
template <typename Fn>
void for_each_subset(Coalition superset, Fn&& fn) {
  const std::uint32_t sup = superset.mask();
  std::uint32_t s = sup;
  while (true) {
    fn(Coalition(s));
    if (s == 0) break;
    s = (s - 1) & sup;
  }
}

}  // namespace tugame

#endif  // TUGAME_COALITION_HPP
