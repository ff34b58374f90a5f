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

#pragma once

#include <cstdint>
#include <vector>

#include "twobridge/equivalence.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

struct RawCandidate {
  ConwayForm form;
  Fraction fraction;
};

struct TabulationRow {
  std::uint32_t crossing_number;
  LinkClass link_class;
  /// Number of raw candidates collapsed into this class.
  std::size_t raw_count;
};

/// Compositions of n whose continued fraction has an even numerator, in
/// composition order.
std::vector<RawCandidate> enumerate_raw(std::uint32_t n);

/// One row per link class among enumerate_raw(n), ordered by (p, canonical q).
/// Each class carries the shortest, then lexicographically least, expansion
/// of total n among its members.
std::vector<TabulationRow> tabulate(std::uint32_t n);

/// tabulate(4), ..., tabulate(n_max) concatenated.
std::vector<TabulationRow> tabulate_range(std::uint32_t n_max);

/// Number of compositions of n with odd numerator (2-bridge knots).
std::size_t knot_candidate_count(std::uint32_t n);

}  // namespace twobridge
