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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "twobridge/error.hpp"
#include "twobridge/rational.hpp"

using namespace twobridge;

namespace {

// Bottom-up evaluation with 128-bit intermediates.
std::pair<unsigned __int128, unsigned __int128> reference_cf(const std::vector<std::uint32_t>& a) {
  unsigned __int128 num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    const unsigned __int128 next = a[i] * num + den;
    den = num;
    num = next;
  }
  return {num, den};
}

}  // namespace

TEST_CASE("fraction validation") {
  CHECK(Fraction(8, 3).to_string() == "8/3");
  CHECK(code_of([] { Fraction(0, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Fraction(3, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Fraction(4, 2); }) == ErrorCode::kNotCoprime);
  CHECK(Fraction::reduced(28, 6) == Fraction(14, 3));
  CHECK(Fraction::parse("98/41") == Fraction(98, 41));
  CHECK(code_of([] { Fraction::parse("98"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Fraction::parse("x/2"); }) == ErrorCode::kParse);
}

TEST_CASE("conway form parsing") {
  CHECK(ConwayForm::parse("2,1,2") == ConwayForm{2, 1, 2});
  CHECK(ConwayForm::parse("[7,1,1,2,]") == ConwayForm{7, 1, 1, 2});
  CHECK(ConwayForm::parse(" [4, 1, 2] ") == ConwayForm{4, 1, 2});
  CHECK(ConwayForm{2, 1, 2}.to_string() == "[2,1,2]");
  CHECK(ConwayForm{2, 1, 2}.crossing_count() == 5);
  CHECK(code_of([] { ConwayForm::parse(""); }) == ErrorCode::kParse);
  CHECK(code_of([] { ConwayForm::parse("2,a"); }) == ErrorCode::kParse);
  CHECK(code_of([] { ConwayForm{2, 0, 2}; }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { ConwayForm(std::vector<std::uint32_t>{}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("continued fraction values") {
  CHECK(eval_cf({2, 1, 2}) == Fraction(8, 3));
  CHECK(eval_cf({4, 1, 1, 1}) == Fraction(14, 3));
  CHECK(eval_cf({4, 1, 2}) == Fraction(14, 3));
  CHECK(eval_cf({1, 3, 1, 2}) == Fraction(14, 11));
  CHECK(eval_cf({5, 2, 3}) == Fraction(38, 7));
  CHECK(eval_cf({1}) == Fraction(1, 1));
  CHECK(code_of([] { eval_cf({4000000000u, 4000000000u, 4000000000u}); }) ==
        ErrorCode::kOverflow);
}

TEST_CASE("eval_cf agrees with a 128-bit evaluation") {
  std::mt19937 rng(20260418);
  std::uniform_int_distribution<std::uint32_t> entry(1, 40), length(1, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::uint32_t> a(length(rng));
    for (auto& x : a) x = entry(rng);
    const auto [num, den] = reference_cf(a);
    const Fraction f = eval_cf(ConwayForm(a));
    CHECK(static_cast<unsigned __int128>(f.p()) * den == num * f.q());
  }
}

TEST_CASE("continued fraction expansion inverts evaluation") {
  CHECK(continued_fraction(Fraction(14, 3)) == ConwayForm{4, 1, 2});
  CHECK(continued_fraction(Fraction(38, 7)) == ConwayForm{5, 2, 3});
  CHECK(continued_fraction(Fraction(1, 1)) == ConwayForm{1});
  CHECK(code_of([] { continued_fraction(Fraction(3, 7)); }) == ErrorCode::kInvalidArgument);
  for (std::uint64_t p = 1; p < 120; ++p) {
    for (std::uint64_t q = 1; q <= p; ++q) {
      if (gcd(p, q) != 1) continue;
      const ConwayForm form = continued_fraction(Fraction(p, q));
      CHECK(eval_cf(form) == Fraction(p, q));
      if (!(p == 1 && q == 1)) CHECK(form[form.length() - 1] >= 2);
    }
  }
}

TEST_CASE("compositions are all ordered sequences with the given sum") {
  for (std::uint32_t n = 1; n <= 14; ++n) {
    const auto all = compositions(n);
    REQUIRE(all.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& c : all) CHECK(c.crossing_count() == n);
  }
  // Bit i of a mask cuts after position i.
  std::set<ConwayForm> from_masks;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<std::uint32_t> parts{1};
    for (int i = 0; i < 6; ++i) {
      if ((mask >> i) & 1u) parts.push_back(1);
      else ++parts.back();
    }
    from_masks.insert(ConwayForm(parts));
  }
  const auto seven = compositions(7);
  CHECK(std::set<ConwayForm>(seven.begin(), seven.end()) == from_masks);
  CHECK(seven.front() == ConwayForm{1, 1, 1, 1, 1, 1, 1});
  CHECK(seven.back() == ConwayForm{7});
  CHECK(code_of([] { compositions(0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { compositions(kMaxCompositionTotal + 1); }) == ErrorCode::kCapacity);
}

TEST_CASE("expansions of 7 crossings") {
  CHECK(expansions(Fraction(14, 3), 7) ==
        std::vector<ConwayForm>{{4, 1, 1, 1}, {4, 1, 2}});
  CHECK(expansions(Fraction(16, 7), 7) ==
        std::vector<ConwayForm>{{2, 3, 1, 1}, {2, 3, 2}});
  CHECK(expansions(Fraction(14, 3), 6).empty());
}

TEST_CASE("expansion index matches the brute-force filter") {
  for (std::uint32_t n : {5u, 8u, 10u}) {
    const ExpansionIndex index(n);
    std::set<Fraction> values;
    for (const auto& c : compositions(n)) values.insert(eval_cf(c));
    for (const auto& v : values) {
      const auto found = index.find(v);
      CHECK(std::vector<ConwayForm>(found.begin(), found.end()) == expansions(v, n));
    }
    CHECK(index.find(Fraction(1000003, 2)).empty());
  }
}
