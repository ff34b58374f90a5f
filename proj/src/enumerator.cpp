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

#include "twobridge/enumerator.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "twobridge/error.hpp"

namespace twobridge {

std::vector<RawCandidate> enumerate_raw(std::uint32_t n) {
  std::vector<RawCandidate> out;
  for (auto& form : compositions(n)) {
    const Fraction value = eval_cf(form);
    if (value.p() % 2 == 0) out.push_back({std::move(form), value});
  }
  return out;
}

std::size_t knot_candidate_count(std::uint32_t n) {
  std::size_t count = 0;
  for (const auto& form : compositions(n)) count += eval_cf(form).p() % 2;
  return count;
}

std::vector<TabulationRow> tabulate(std::uint32_t n) {
  struct Group {
    LinkClass link_class;
    std::size_t raw_count = 0;
    std::optional<ConwayForm> best;
  };
  // Keyed by (p, canonical q), which is also the output order.
  std::map<std::pair<std::uint64_t, std::uint64_t>, Group> groups;
  for (auto& candidate : enumerate_raw(n)) {
    LinkClass link_class = canonicalize(candidate.fraction.p(), candidate.fraction.q());
    const std::pair key{link_class.p(), link_class.canonical_q()};
    auto [it, inserted] = groups.try_emplace(key, Group{std::move(link_class), 0, std::nullopt});
    Group& group = it->second;
    ++group.raw_count;
    const auto shorter = [](const ConwayForm& a, const ConwayForm& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a < b;
    };
    if (!group.best || shorter(candidate.form, *group.best)) group.best = candidate.form;
  }

  std::vector<TabulationRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, group] : groups) {
    group.link_class.set_chosen_form(std::move(*group.best));
    rows.push_back({n, std::move(group.link_class), group.raw_count});
  }
  return rows;
}

std::vector<TabulationRow> tabulate_range(std::uint32_t n_max) {
  if (n_max < 4) throw Error(ErrorCode::kInvalidArgument, "tabulate_range needs n_max >= 4");
  std::vector<TabulationRow> rows;
  for (std::uint32_t n = 4; n <= n_max; ++n) {
    auto block = tabulate(n);
    rows.insert(rows.end(), std::make_move_iterator(block.begin()),
                std::make_move_iterator(block.end()));
  }
  return rows;
}

}  // namespace twobridge
