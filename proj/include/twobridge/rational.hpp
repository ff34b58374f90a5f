// Copyright 2026 The twobridge Authors
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

// Exact fractions, continued fractions and integer compositions.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace twobridge {

/// Positive fraction p/q in lowest terms.
class Fraction {
 public:
  /// Throws kInvalidArgument unless p, q > 0 and kNotCoprime unless
  /// gcd(p, q) == 1.
  Fraction(std::uint64_t p, std::uint64_t q);

  /// Reduces p/q to lowest terms first.
  static Fraction reduced(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }

  std::string to_string() const;  // "p/q"

  /// Parses "p/q".
  static Fraction parse(const std::string& text);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

/// Nonempty sequence of positive twist counts [a1, ..., an].
class ConwayForm {
 public:
  using Entry = std::uint32_t;

  explicit ConwayForm(std::vector<Entry> entries);
  ConwayForm(std::initializer_list<Entry> entries)
      : ConwayForm(std::vector<Entry>(entries)) {}

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }

  /// Sum of the entries.
  std::uint64_t crossing_count() const noexcept;

  std::string to_string() const;  // "[2,1,2]"

  /// Accepts "2,1,2", "[2,1,2]" and tolerates a trailing comma.
  static ConwayForm parse(const std::string& text);

  friend bool operator==(const ConwayForm&, const ConwayForm&) = default;
  friend auto operator<=>(const ConwayForm&, const ConwayForm&) = default;

 private:
  std::vector<Entry> entries_;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// a1 + 1/(a2 + 1/(... + 1/an)) in lowest terms. Throws kOverflow if an
/// intermediate value leaves 64 bits.
Fraction eval_cf(const ConwayForm& form);

inline constexpr std::uint32_t kMaxCompositionTotal = 24;

/// All 2^(n-1) compositions of n in lexicographic order of entries. Throws
/// kInvalidArgument for n == 0 and kCapacity above kMaxCompositionTotal.
std::vector<ConwayForm> compositions(std::uint32_t n);

/// Compositions of `total` whose continued fraction equals `target`.
std::vector<ConwayForm> expansions(const Fraction& target, std::uint32_t total);

/// Regular continued fraction of p/q by the Euclidean algorithm, with last
/// entry >= 2 unless p/q == 1. Its entry sum is the crossing number of the
/// 2-bridge link of p/q.
ConwayForm continued_fraction(const Fraction& value);

/// All compositions of one total grouped by their value, for repeated
/// expansion lookups at a fixed crossing number.
class ExpansionIndex {
 public:
  explicit ExpansionIndex(std::uint32_t total);

  std::uint32_t total() const noexcept { return total_; }
  /// Same forms, in the same order, as expansions(value, total()).
  std::span<const ConwayForm> find(const Fraction& value) const;

 private:
  std::uint32_t total_;
  std::map<Fraction, std::vector<ConwayForm>> by_value_;
};

}  // namespace twobridge
