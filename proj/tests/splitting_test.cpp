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

#include "doctest.h"
#include "test_util.hpp"
#include "twobridge/enumerator.hpp"
#include "twobridge/splitting.hpp"

using namespace twobridge;

TEST_CASE("pattern matching") {
  const auto sp = [](const ConwayForm& f) {
    const auto c = match_pattern(f);
    return c ? static_cast<int>(c->sp) : -1;
  };
  CHECK(sp({2, 6, 2}) == 2);
  CHECK(sp({8, 1, 2}) == 5);
  CHECK(sp({2, 1, 2, 1, 2}) == 3);
  CHECK(sp({4}) == 2);
  CHECK(sp({3, 3}) == -1);
  CHECK(sp({2, 1, 3}) == -1);
  CHECK(sp({1}) == -1);

  const auto c = match_pattern({6, 1, 4});
  REQUIRE(c);
  CHECK(c->a_values == std::vector<std::uint32_t>{3, 2});
  CHECK(c->pattern_form == ConwayForm{6, 1, 4});
}

TEST_CASE("splitting numbers of single classes") {
  const auto run = [](std::uint64_t p, std::uint64_t q, std::uint32_t n) {
    return splitting_number(canonicalize(p, q), n);
  };
  auto r = run(62, 23, 10);
  REQUIRE(r);
  CHECK(r->certificate.sp == 3);
  CHECK(r->certificate.pattern_form == ConwayForm{2, 1, 2, 3, 2});

  r = run(34, 5, 11);
  REQUIRE(r);
  CHECK(r->certificate.sp == 5);
  CHECK(r->certificate.pattern_form == ConwayForm{6, 1, 4});

  r = run(8, 3, 5);
  REQUIRE(r);
  CHECK(r->certificate.sp == 2);
  CHECK(r->certificate.pattern_form == ConwayForm{2, 1, 2});

  CHECK_FALSE(run(10, 3, 6));
  CHECK_FALSE(run(8, 3, 6));
}

TEST_CASE("splitting search over all classes") {
  for (std::uint32_t n = 4; n <= 11; ++n) {
    const ExpansionIndex index(n);
    for (const auto& row : tabulate(n)) {
      const auto brute = splitting_number(row.link_class, n);
      const auto indexed = splitting_number(row.link_class, index);
      REQUIRE(brute.has_value() == indexed.has_value());
      if (!brute) continue;
      CHECK(brute->certificate.sp == indexed->certificate.sp);
      CHECK(brute->member_q == indexed->member_q);
      CHECK(brute->certificate.sp >= 1);
      CHECK(2 * brute->certificate.sp <= n);
      CHECK(eval_cf(brute->certificate.pattern_form) ==
            Fraction(row.link_class.p(), brute->member_q));
      CHECK(brute->certificate.pattern_form.crossing_count() == n);
    }
  }
}
