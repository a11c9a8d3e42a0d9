// Copyright 2026 The Activita Authors.
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

#ifndef ACTIVITA_ELEMENT_SET_H_
#define ACTIVITA_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace activita {

inline constexpr int kMaxGroundSize = 64;

// A subset of the ground set {1, ..., n}, n <= 64. Element e is stored in
// bit e - 1, so comparing masks numerically is the canonical order used for
// sorting and tie-breaking throughout the library.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet FromMask(uint64_t mask) {
    ElementSet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr ElementSet Of(std::initializer_list<int> elements) {
    ElementSet s;
    for (int e : elements) s.mask_ |= Bit(e);
    return s;
  }
  static constexpr ElementSet Singleton(int e) { return FromMask(Bit(e)); }
  // {1, ..., n}.
  static constexpr ElementSet Full(int n) {
    return FromMask(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool Contains(int e) const { return (mask_ & Bit(e)) != 0; }
  constexpr bool IsSubsetOf(ElementSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool Intersects(ElementSet other) const { return (mask_ & other.mask_) != 0; }
  // Largest / smallest element; 0 for the empty set.
  constexpr int Max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr int Min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  constexpr ElementSet With(int e) const { return FromMask(mask_ | Bit(e)); }
  constexpr ElementSet Without(int e) const { return FromMask(mask_ & ~Bit(e)); }

  constexpr Iterator begin() const { return Iterator(mask_); }
  constexpr Iterator end() const { return Iterator(0); }
  std::vector<int> Elements() const { return {begin(), end()}; }

  constexpr ElementSet operator|(ElementSet o) const { return FromMask(mask_ | o.mask_); }
  constexpr ElementSet operator&(ElementSet o) const { return FromMask(mask_ & o.mask_); }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return FromMask(mask_ & ~o.mask_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    mask_ &= ~o.mask_;
    return *this;
  }

  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  static constexpr uint64_t Bit(int e) { return uint64_t{1} << (e - 1); }

  uint64_t mask_ = 0;
};

// Ascending digits without separators when n <= 9 ("245"), comma separated
// integers otherwise ("2,10,11"). The empty set formats as "".
std::string FormatSet(ElementSet s, int n);

// Inverse of FormatSet. For n <= 9 commas are also accepted. Throws
// Error(kParseError) on malformed text and Error(kElementOutOfRange) on
// elements outside 1..n.
ElementSet ParseSet(std::string_view text, int n);

// Every subset of `s`, in increasing mask order, including the empty set.
std::vector<ElementSet> Subsets(ElementSet s);

}  // namespace activita

#endif  // ACTIVITA_ELEMENT_SET_H_
