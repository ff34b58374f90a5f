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

#include "twobridge/splitting.hpp"

#include "twobridge/error.hpp"

namespace twobridge {

std::optional<SplittingCertificate> match_pattern(const ConwayForm& form) {
  if (form.length() % 2 == 0) return std::nullopt;
  SplittingCertificate certificate{form, {}, 0};
  for (std::size_t i = 0; i < form.length(); i += 2) {
    if (form[i] % 2 != 0) return std::nullopt;
    certificate.a_values.push_back(form[i] / 2);
    certificate.sp += form[i] / 2;
  }
  return certificate;
}

namespace {

template <typename Lookup>
std::optional<SplittingResult> search(const LinkClass& link_class, Lookup&& expansions_of) {
  std::optional<SplittingResult> found;
  for (std::uint64_t q : link_class.members()) {
    for (const ConwayForm& form : expansions_of(Fraction(link_class.p(), q))) {
      auto certificate = match_pattern(form);
      if (!certificate) continue;
      if (!found) {
        found = SplittingResult{q, std::move(*certificate)};
      } else if (found->certificate.sp != certificate->sp) {
        throw Error(ErrorCode::kInconsistent,
                    "forms " + found->certificate.pattern_form.to_string() + " and " +
                        form.to_string() + " give different splitting numbers");
      }
    }
  }
  return found;
}

}  // namespace

std::optional<SplittingResult> splitting_number(const LinkClass& link_class,
                                                std::uint32_t crossing_number) {
  return search(link_class,
                [&](const Fraction& value) { return expansions(value, crossing_number); });
}

std::optional<SplittingResult> splitting_number(const LinkClass& link_class,
                                                const ExpansionIndex& index) {
  return search(link_class, [&](const Fraction& value) { return index.find(value); });
}

}  // namespace twobridge
