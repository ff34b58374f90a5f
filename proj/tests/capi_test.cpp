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

#include <twobridge/twobridge.h>

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string text(tb_status (*getter)(const tb_diagram*, char*, size_t, size_t*),
                 const tb_diagram* d) {
  size_t length = 0;
  REQUIRE(getter(d, nullptr, 0, &length) == TB_OK);
  std::string out(length + 1, '\0');
  REQUIRE(getter(d, out.data(), out.size(), &length) == TB_OK);
  out.resize(length);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(tb_version()) > 0);
  CHECK(std::string(tb_status_name(TB_OK)) != std::string(tb_status_name(TB_ERR_NOT_COPRIME)));
  CHECK(std::strlen(tb_status_name(static_cast<tb_status>(99))) > 0);
}

TEST_CASE("fractions") {
  const uint32_t form[] = {2, 1, 4};
  uint64_t p = 0, q = 0;
  CHECK(tb_eval_cf(form, 3, &p, &q) == TB_OK);
  CHECK(p == 14);
  CHECK(q == 5);
  CHECK(tb_eval_cf(form, 0, &p, &q) == TB_ERR_INVALID_ARGUMENT);
  CHECK(tb_eval_cf(nullptr, 3, &p, &q) == TB_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(tb_last_error()) > 0);

  uint32_t entries[8];
  size_t count = 0;
  CHECK(tb_continued_fraction(38, 7, entries, 8, &count) == TB_OK);
  CHECK(std::vector<uint32_t>(entries, entries + count) == std::vector<uint32_t>{5, 2, 3});
  CHECK(tb_continued_fraction(38, 7, entries, 2, &count) == TB_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 3);

  uint64_t inverse = 0;
  CHECK(tb_mod_inverse(3, 14, &inverse) == TB_OK);
  CHECK(inverse == 5);
  CHECK(tb_mod_inverse(7, 14, &inverse) == TB_ERR_NOT_COPRIME);

  uint64_t members[4];
  CHECK(tb_class_members(14, 3, members, &count) == TB_OK);
  CHECK(std::vector<uint64_t>(members, members + count) == std::vector<uint64_t>{3, 5, 9, 11});
}

TEST_CASE("tabulation") {
  tb_tabulation* tab = nullptr;
  REQUIRE(tb_tabulate(7, 7, &tab) == TB_OK);
  REQUIRE(tb_tabulation_size(tab) == 3);
  tb_row row{};
  CHECK(tb_tabulation_row(tab, 0, &row) == TB_OK);
  CHECK(row.crossing_number == 7);
  CHECK(row.p == 14);
  CHECK(row.canonical_q == 3);
  CHECK(row.member_count == 4);
  CHECK(row.raw_count == 8);
  CHECK(row.oriented_count == 4);
  CHECK(std::vector<uint32_t>(row.form, row.form + row.form_length) ==
        std::vector<uint32_t>{2, 1, 4});
  CHECK(row.form_q == 5);
  CHECK(tb_tabulation_row(tab, 3, &row) == TB_ERR_NOT_FOUND);

  tb_splitting split{};
  CHECK(tb_splitting_row(tab, 0, &split) == TB_OK);
  CHECK(split.found == 1);
  CHECK(split.sp == 3);
  CHECK(tb_splitting_row(tab, 2, &split) == TB_OK);
  CHECK(split.found == 0);

  tb_link_table* table = nullptr;
  REQUIRE(tb_link_table_builtin(&table) == TB_OK);
  CHECK(tb_link_table_size(table) == 100);
  tb_identification* ident = nullptr;
  REQUIRE(tb_identify_row(table, tab, 1, &ident) == TB_OK);
  CHECK(std::string(tb_identification_id(ident)) == "L7A4");
  CHECK(tb_identification_candidate_count(ident) == 1);
  tb_identification_free(ident);

  REQUIRE(tb_identify(table, 98, 41, 11, &ident) == TB_OK);
  CHECK(std::string(tb_identification_id(ident)) == "L11A221");
  tb_identification_free(ident);
  CHECK(tb_identify(table, 98, 41, 12, &ident) == TB_ERR_NOT_FOUND);
  CHECK(ident == nullptr);

  tb_link_table_free(table);
  tb_tabulation_free(tab);
  CHECK(tb_tabulate(2, 1, &tab) == TB_ERR_INVALID_ARGUMENT);
  tb_tabulation_free(nullptr);
}

TEST_CASE("diagrams") {
  const uint32_t hopf_form[] = {2};
  tb_diagram* d = nullptr;
  REQUIRE(tb_diagram_from_conway(hopf_form, 1, &d) == TB_OK);
  CHECK(tb_diagram_crossing_count(d) == 2);
  CHECK(tb_diagram_component_count(d) == 2);
  CHECK(text(tb_diagram_bracket, d) == "-1*A^-4+-1*A^4");
  int lk = 0;
  CHECK(tb_diagram_linking_number(d, &lk) == TB_OK);
  CHECK((lk == 1 || lk == -1));
  const std::string pd = text(tb_diagram_pd, d);
  const std::string key = text(tb_diagram_key, d);

  char small[4] = "abc";
  size_t length = 0;
  CHECK(tb_diagram_pd(d, small, sizeof small, &length) == TB_ERR_BUFFER_TOO_SMALL);
  CHECK(std::string(small) == "abc");
  CHECK(length == pd.size());

  tb_diagram* again = nullptr;
  REQUIRE(tb_diagram_from_pd(("PD:" + pd).c_str(), &again) == TB_OK);
  CHECK(text(tb_diagram_key, again) == key);
  tb_diagram_free(again);
  tb_diagram_free(d);

  CHECK(tb_diagram_from_pd("[X(1,2,3,4)]", &d) == TB_ERR_MALFORMED_DIAGRAM);
  CHECK(tb_diagram_from_pd("nonsense", &d) == TB_ERR_PARSE);
  const uint32_t knot[] = {3};
  REQUIRE(tb_diagram_from_conway(knot, 1, &d) == TB_OK);
  CHECK(tb_diagram_linking_number(d, &lk) == TB_ERR_INVALID_ARGUMENT);
  tb_diagram_free(d);
}

TEST_CASE("link table ingest") {
  tb_link_table* table = nullptr;
  CHECK(tb_link_table_parse("L2a1\tPD:[X(4,1,3,2),X(2,3,1,4)]\nL2A1\tPD:[X(4,1,3,2),X(2,3,1,4)]\n",
                            &table) == TB_ERR_DUPLICATE_ID);
  CHECK(tb_link_table_load("/nonexistent/table.tsv", &table) == TB_ERR_IO);
  REQUIRE(tb_link_table_parse("L2a1\tPD:[X(4,1,3,2),X(2,3,1,4)]\n", &table) == TB_OK);
  CHECK(tb_link_table_size(table) == 1);
  tb_link_table_free(table);
}

TEST_CASE("splitting numbers") {
  tb_splitting split{};
  CHECK(tb_splitting_number(26, 3, 11, &split) == TB_OK);
  CHECK(split.found == 1);
  CHECK(split.sp == 5);
  CHECK(tb_splitting_number(10, 3, 6, &split) == TB_OK);
  CHECK(split.found == 0);
  CHECK(tb_splitting_number(9, 2, 6, &split) == TB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fixture and verification") {
  tb_fixture* fixture = nullptr;
  REQUIRE(tb_fixture_builtin(&fixture) == TB_OK);
  CHECK(tb_fixture_size(fixture) == 99);
  size_t index = 0;
  REQUIRE(tb_fixture_find(fixture, "L11A372", &index) == TB_OK);
  tb_fixture_row row{};
  REQUIRE(tb_fixture_row_at(fixture, index, &row) == TB_OK);
  CHECK(row.n == 11);
  CHECK(row.p == 34);
  CHECK(row.has_sp == 1);
  CHECK(row.sp == 5);
  CHECK(tb_fixture_find(fixture, "L3A1", &index) == TB_ERR_NOT_FOUND);

  tb_tabulation* tab = nullptr;
  REQUIRE(tb_tabulate(4, 9, &tab) == TB_OK);
  tb_report* report = nullptr;
  REQUIRE(tb_verify(tab, fixture, nullptr, 4, 9, &report) == TB_OK);
  CHECK(tb_report_classes_checked(report) == 28);
  CHECK(tb_report_discrepancy_count(report) == 0);
  CHECK(std::string(tb_report_summary(report)) == "28 classes checked, 0 discrepancies");
  tb_report_free(report);
  tb_tabulation_free(tab);
  tb_fixture_free(fixture);
  CHECK(tb_fixture_load("/nonexistent/f.json", &fixture) == TB_ERR_IO);
}
