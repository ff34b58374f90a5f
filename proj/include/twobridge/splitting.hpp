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
#include <optional>
#include <vector>

#include "twobridge/equivalence.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

/// A Conway form C(2a1, b1, ..., 2a(n-1), b(n-1), 2an), for which the
/// splitting number is a1 + ... + an.
struct SplittingCertificate {
  ConwayForm pattern_form;
  std::vector<std::uint32_t> a_values;
  std::uint32_t sp;
};

/// Certificate iff the form has odd length and even entries in positions
/// 1, 3, 5, ... (1-based).
std::optional<SplittingCertificate> match_pattern(const ConwayForm& form);

struct SplittingResult {
  std::uint64_t member_q;  // class member whose expansion matched
  SplittingCertificate certificate;
};

/// Searches the expansions of total `crossing_number` of every class member,
/// smallest member first. Throws kInconsistent if two certificates disagree.
/// An empty result means no expansion of that total has the pattern.
std::optional<SplittingResult> splitting_number(const LinkClass& link_class,
                                                std::uint32_t crossing_number);

/// Same search using a prebuilt index of total `index.total()`.
std::optional<SplittingResult> splitting_number(const LinkClass& link_class,
                                                const ExpansionIndex& index);

}  // namespace twobridge
