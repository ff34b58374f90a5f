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

#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "twobridge/identify.hpp"
#include "twobridge/splitting.hpp"

using namespace twobridge;

namespace {

LinkClass class_of(const ConwayForm& form) {
  const Fraction f = eval_cf(form);
  LinkClass c = canonicalize(f.p(), f.q());
  c.set_chosen_form(form);
  return c;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("link ids") {
  CHECK(normalize_link_id("l7a4") == "L7A4");
  CHECK(normalize_link_id("L11A360") == "L11A360");
}

TEST_CASE("link table ingest") {
  const LinkTable table = LinkTable::parse(
      "# comment\n"
      "\n"
      "L2a1\tPD:[X(4,1,3,2),X(2,3,1,4)]\n"
      "K3a1\tPD:[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]\n");
  CHECK(table.size() == 2);
  REQUIRE(table.find("l2a1"));
  CHECK(table.find("L2A1")->key.has_value());
  CHECK(table.find("L2A1")->crossing_number == 2);
  CHECK_FALSE(table.find("K3A1")->key.has_value());
  CHECK(table.find("L4A1") == nullptr);
}

TEST_CASE("link table errors") {
  CHECK(code_of([] { LinkTable::parse("L2a1\tPD:[X(4,1,3,2),X(2,3,1,4)]\nL2A1\tPD:[X(4,1,3,2),X(2,3,1,4)]\n"); }) ==
        ErrorCode::kDuplicateId);
  CHECK(code_of([] { LinkTable::parse("L2a1 PD:[X(4,1,3,2),X(2,3,1,4)]\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { LinkTable::parse("L2a1\t[X(4,1,3,2),X(2,3,1,4)]\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { LinkTable::parse("L2a1\tPD:[X(4,1,3,2)\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { LinkTable::parse("L2a1\tPD:[X(4,1,3,9),X(2,3,1,4)]\n"); }) ==
        ErrorCode::kMalformedDiagram);
  CHECK(message_of([] { LinkTable::parse("# x\nL2a1\tPD:[X(1\n", "t.tsv"); }).find("t.tsv:2") !=
        std::string::npos);
  CHECK(code_of([] { LinkTable::load("/nonexistent/table.tsv"); }) == ErrorCode::kIo);
  CHECK(LinkTable::parse("").size() == 0);
}

TEST_CASE("builtin table") {
  const LinkTable& table = LinkTable::builtin();
  CHECK(table.size() == 100);
  for (const auto& entry : table.entries()) {
    CHECK(entry.key.has_value());
    CHECK(entry.diagram.component_count() == 2);
    CHECK(is_reduced_alternating(entry.diagram));
  }
}

TEST_CASE("identification against the builtin table") {
  const LinkTable& table = LinkTable::builtin();
  CHECK(identify_class(class_of({2, 1, 4}), table).matched_id == "L7A6");
  CHECK(identify_class(class_of({2, 3, 2}), table).matched_id == "L7A4");
  CHECK(identify_class(class_of({5, 2, 3}), table).matched_id == "L10A117");
  CHECK(identify_class(class_of(continued_fraction(Fraction(98, 27))), table).matched_id ==
        "L11A359");
  CHECK(identify_class(class_of(continued_fraction(Fraction(98, 41))), table).matched_id ==
        "L11A221");
  const Identification none = identify_class(class_of({12}), table);
  CHECK_FALSE(none.matched_id);
  CHECK(none.candidates.empty());
  CHECK(code_of([&] { identify_class(canonicalize(14, 3), table); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("identification survives mirroring and kinks in the table") {
  std::ostringstream text;
  const auto rows = tabulate(8);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    PlanarDiagram d = build_diagram(*rows[i].link_class.chosen_form());
    if (i % 2) d = d.mirror();
    text << "X" << i << "\tPD:" << d.to_string() << '\n';
  }
  const LinkTable table = LinkTable::parse(text.str());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Identification ident = identify_class(rows[i].link_class, table);
    CHECK(ident.matched_id == "X" + std::to_string(i));
    CHECK_FALSE(ident.ambiguous());
  }
}

TEST_CASE("ambiguity is reported") {
  const PlanarDiagram d = build_diagram({2, 2, 2});
  const LinkTable table =
      LinkTable::parse("A\tPD:" + d.to_string() + "\nB\tPD:" + d.mirror().to_string() + "\n");
  const Identification ident = identify_class(class_of({2, 2, 2}), table);
  CHECK(ident.ambiguous());
  CHECK_FALSE(ident.matched_id);
  CHECK(ident.candidates == std::vector<std::string>{"A", "B"});
}

TEST_CASE("builtin fixture") {
  const PublishedFixture& fixture = PublishedFixture::builtin();
  CHECK(fixture.rows().size() == 99);
  std::map<std::uint32_t, std::size_t> per_n;
  std::size_t with_sp = 0;
  for (const auto& row : fixture.rows()) {
    ++per_n[row.n];
    with_sp += row.sp.has_value();
    CHECK(row.conway.crossing_count() == row.n);
    CHECK(eval_cf(row.conway) == Fraction(row.p, row.q));
  }
  CHECK(per_n == std::map<std::uint32_t, std::size_t>{
                     {4, 1}, {5, 1}, {6, 3}, {7, 3}, {8, 8}, {9, 12}, {10, 26}, {11, 45}});
  CHECK(with_sp == 19);
  REQUIRE(fixture.find("l10a87"));
  CHECK(fixture.find("L10A87")->sp == 3u);
  CHECK(fixture.find("L11A1") == nullptr);
}

TEST_CASE("fixture formats") {
  const PublishedFixture csv = PublishedFixture::parse_csv(
      "n,p,q,conway,id,sp\n"
      "7,14,5,\"[2,1,4]\",L7A6,3\n"
      "7,18,7,\"2,1,1,3\",L7A5,\n");
  REQUIRE(csv.rows().size() == 2);
  CHECK(csv.rows()[0].conway == ConwayForm{2, 1, 4});
  CHECK(csv.rows()[0].sp == 3u);
  CHECK_FALSE(csv.rows()[1].sp);

  const PublishedFixture json = PublishedFixture::parse_json(
      R"([{"n":7,"p":14,"q":5,"conway":[2,1,4],"id":"L7A6","sp":3}])");
  REQUIRE(json.rows().size() == 1);
  CHECK(json.rows()[0].id == "L7A6");

  CHECK(code_of([] { PublishedFixture::parse_json("{"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PublishedFixture::parse_json(R"({"n":1})"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PublishedFixture::parse_json(R"([{"n":7,"p":14}])"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PublishedFixture::parse_csv("n,p,q\n1,2,3\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { PublishedFixture::parse_csv("n,p,q,conway,id,sp\n7,14,5,\"[2,1,4],L7A6,3\n"); }) ==
        ErrorCode::kParse);
  CHECK(code_of([] { PublishedFixture::load("/nonexistent/fixture.json"); }) == ErrorCode::kIo);
}

TEST_CASE("verification through 9 crossings") {
  std::vector<TabulationRow> rows;
  for (std::uint32_t n = 4; n <= 9; ++n) {
    for (auto& row : tabulate(n)) rows.push_back(std::move(row));
  }
  const VerificationReport report =
      verify_fixture(rows, PublishedFixture::builtin(), 4, 9, &LinkTable::builtin());
  CHECK(report.ok());
  CHECK(report.classes_checked == 28);
  CHECK(report.summary() == "28 classes checked, 0 discrepancies");
}

TEST_CASE("verification reports discrepancies") {
  const auto rows = tabulate(7);
  PublishedFixture wrong({{7, 14, 5, {2, 1, 4}, "L7A6", 2u},
                      {7, 16, 7, {2, 3, 2}, "L7A5", std::nullopt},
                      {7, 18, 7, {2, 1, 1, 3}, "L7A5", std::nullopt}});
  const VerificationReport report = verify_fixture(rows, wrong, 7, 7, &LinkTable::builtin());
  CHECK(report.discrepancies.size() == 2);

  PublishedFixture short_fixture({{7, 14, 5, {2, 1, 4}, "L7A6", std::nullopt}});
  CHECK_FALSE(verify_fixture(rows, short_fixture, 7, 7).ok());

  PublishedFixture bad_form({{7, 14, 5, {2, 1, 3}, "L7A6", std::nullopt},
                         {7, 16, 7, {2, 3, 2}, "L7A4", std::nullopt},
                         {7, 18, 7, {2, 1, 1, 3}, "L7A5", std::nullopt}});
  CHECK_FALSE(verify_fixture(rows, bad_form, 7, 7).ok());
}

TEST_CASE("fixture at 10 crossings lacks the class of 38/7") {
  const VerificationReport report = verify_fixture(tabulate(10), PublishedFixture::builtin(), 10, 10);
  REQUIRE(report.discrepancies.size() == 2);
  CHECK(report.discrepancies[1].find("(38,7)") != std::string::npos);
}

TEST_CASE("identification against all alternating two-component links") {
  const LinkTable table = LinkTable::load(TWOBRIDGE_DATA_DIR "/link_table_alternating_2comp.tsv");
  CHECK(table.size() > 500);
  std::set<std::string> ids;
  for (std::uint32_t n = 4; n <= 11; ++n) {
    for (const auto& row : tabulate(n)) {
      const Identification ident = identify_class(row.link_class, table);
      INFO(row.link_class.p(), "/", row.link_class.canonical_q());
      CHECK(ident.candidates.size() == 1);
      if (ident.matched_id) {
        CHECK(LinkTable::builtin().find(*ident.matched_id) != nullptr);
        ids.insert(*ident.matched_id);
      }
    }
  }
  CHECK(ids.size() == 100);
}
