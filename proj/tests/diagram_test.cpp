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
#include <map>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "twobridge/diagram.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/rational.hpp"

using namespace twobridge;

TEST_CASE("PD text round trip") {
  const std::string trefoil = "[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
  const PlanarDiagram d = PlanarDiagram::parse("PD: [X(1, 4, 2, 5), X(3,6,4,1), X(5,2,6,3)]");
  CHECK(d.to_string() == trefoil);
  CHECK(PlanarDiagram::parse(trefoil) == d);
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.is_planar());
  CHECK(d.crossing_sign(0) == d.crossing_sign(1));
  CHECK(d.crossing_sign(1) == d.crossing_sign(2));
  CHECK(PlanarDiagram::parse("[]").crossing_count() == 0);
}

TEST_CASE("malformed PD codes") {
  CHECK(code_of([] { PlanarDiagram::parse("X(1,2,3,4)"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PlanarDiagram::parse("[X(1,2,3)]"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PlanarDiagram::parse("[X(1,2,2,1)"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PlanarDiagram::parse("[X(1,2,3,4)]"); }) == ErrorCode::kMalformedDiagram);
  CHECK(code_of([] { PlanarDiagram::parse("[X(1,1,1,2)]"); }) == ErrorCode::kMalformedDiagram);
}

TEST_CASE("kink diagrams") {
  const PlanarDiagram positive = PlanarDiagram::parse("[X(1,1,2,2)]");
  const PlanarDiagram negative = PlanarDiagram::parse("[X(1,2,2,1)]");
  CHECK(positive.crossing_sign(0) == 1);
  CHECK(negative.crossing_sign(0) == -1);
  CHECK(positive.component_count() == 1);
  CHECK(positive.is_planar());
  CHECK(positive.mirror().crossing_sign(0) == -1);

  const PlanarDiagram hopf = build_diagram({2});
  for (int sign : {1, -1}) {
    const PlanarDiagram kinked = hopf.add_kink(1, sign);
    CHECK(kinked.crossing_count() == 3);
    CHECK(kinked.component_count() == 2);
    CHECK(kinked.is_planar());
    CHECK(kinked.crossing_sign(2) == sign);
  }
  CHECK(code_of([&] { hopf.add_kink(99, 1); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { hopf.add_kink(1, 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("disconnected diagrams are not planar") {
  const PlanarDiagram d = PlanarDiagram::parse("[X(1,1,2,2),X(3,3,4,4)]");
  CHECK(d.component_count() == 2);
  CHECK_FALSE(d.is_connected());
  CHECK_FALSE(d.is_planar());
  CHECK(PlanarDiagram::unknot().component_count() == 1);
}

TEST_CASE("Hopf link diagram") {
  const PlanarDiagram hopf = build_diagram({2});
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.component_count() == 2);
  for (const auto& s : hopf.strand_components()) CHECK(s[0] != s[1]);
  const GaussCode code = gauss_code(hopf);
  REQUIRE(code.components.size() == 2);
  CHECK(code.components[0].size() == 2);
  CHECK(code.components[1].size() == 2);
}

TEST_CASE("parity law") {
  // Two components exactly when the numerator is even.
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (const auto& form : compositions(n)) {
      const PlanarDiagram d = build_diagram(form);
      CHECK((d.component_count() == 2) == (eval_cf(form).p() % 2 == 0));
      CHECK(component_count(d) == d.component_count());
    }
  }
}

TEST_CASE("4-plat diagrams are well formed") {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (const auto& form : compositions(n)) {
      INFO(form.to_string());
      const PlanarDiagram d = build_diagram(form);
      REQUIRE(d.crossing_count() == n);
      std::map<std::uint32_t, int> uses;
      for (const auto& c : d.crossings()) {
        for (auto arc : c.arcs) ++uses[arc];
      }
      CHECK(uses.size() == 2 * n);
      CHECK(uses.begin()->first == 1);
      CHECK(uses.rbegin()->first == 2 * n);
      for (const auto& [arc, count] : uses) CHECK(count == 2);
      CHECK(d.is_planar());
      CHECK(d.face_count() == n + 2);
      CHECK(is_alternating(d));
      CHECK(PlanarDiagram::parse(d.to_string()) == d);

      const GaussCode code = gauss_code(d);
      std::map<std::uint32_t, std::pair<int, int>> visits;  // (over, under)
      for (const auto& component : code.components) {
        for (const auto& v : component) {
          auto& [over, under] = visits[v.crossing];
          ++(v.strand == Strand::kOver ? over : under);
          CHECK(v.sign == d.crossing_sign(v.crossing - 1));
        }
      }
      CHECK(visits.size() == n);
      for (const auto& [c, counts] : visits) CHECK(counts == std::pair(1, 1));
    }
  }
}

TEST_CASE("mirror switches every crossing") {
  for (const auto& form : compositions(6)) {
    const PlanarDiagram d = build_diagram(form);
    const PlanarDiagram m = d.mirror();
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      CHECK(m.crossing_sign(i) == -d.crossing_sign(i));
    }
    CHECK(m.mirror() == d);
    CHECK(m.component_count() == d.component_count());
  }
}

TEST_CASE("Gauss code text") {
  const GaussCode code = gauss_code(build_diagram({2, 1, 2}));
  const std::string text = code.to_string();
  CHECK(text.find('/') != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '-') == 5);
}

TEST_CASE("Gauss code lengths") {
  const GaussCode whitehead = gauss_code(build_diagram({2, 1, 2}));
  REQUIRE(whitehead.components.size() == 2);
  CHECK(whitehead.components[0].size() + whitehead.components[1].size() == 10);
  const GaussCode torus = gauss_code(build_diagram({4}));
  REQUIRE(torus.components.size() == 2);
  CHECK(torus.components[0].size() == 4);
  CHECK(torus.components[1].size() == 4);
  CHECK(gauss_code(build_diagram({3})).components.size() == 1);
  CHECK(build_diagram({2, 1, 4}).component_count() == 2);
}
