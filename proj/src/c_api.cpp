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

#include "twobridge/twobridge.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <new>
#include <string>

#include "twobridge/diagram.hpp"
#include "twobridge/enumerator.hpp"
#include "twobridge/equivalence.hpp"
#include "twobridge/error.hpp"
#include "twobridge/identify.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/splitting.hpp"

using namespace twobridge;

struct tb_tabulation {
  std::vector<TabulationRow> rows;
  mutable std::mutex index_mutex;
  mutable std::map<std::uint32_t, std::unique_ptr<ExpansionIndex>> indexes;

  const ExpansionIndex& index_for(std::uint32_t n) const {
    std::lock_guard lock(index_mutex);
    auto& slot = indexes[n];
    if (!slot) slot = std::make_unique<ExpansionIndex>(n);
    return *slot;
  }
};

struct tb_diagram {
  PlanarDiagram diagram;
};

struct tb_link_table {
  LinkTable table;
};

struct tb_identification {
  Identification result;
};

struct tb_fixture {
  PublishedFixture fixture;
};

struct tb_report {
  VerificationReport report;
  std::string summary;
};

namespace {

thread_local std::string last_error;

tb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return TB_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNotCoprime: return TB_ERR_NOT_COPRIME;
    case ErrorCode::kOverflow: return TB_ERR_OVERFLOW;
    case ErrorCode::kParse: return TB_ERR_PARSE;
    case ErrorCode::kDuplicateId: return TB_ERR_DUPLICATE_ID;
    case ErrorCode::kMalformedDiagram: return TB_ERR_MALFORMED_DIAGRAM;
    case ErrorCode::kCapacity: return TB_ERR_CAPACITY;
    case ErrorCode::kIo: return TB_ERR_IO;
    case ErrorCode::kNotFound: return TB_ERR_NOT_FOUND;
    case ErrorCode::kInconsistent: return TB_ERR_INCONSISTENT;
  }
  return TB_ERR_INTERNAL;
}

tb_status fail(tb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
tb_status guarded(F&& body) noexcept {
  try {
    body();
    return TB_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TB_ERR_INTERNAL, e.what());
  }
}

#define TB_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(TB_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

tb_status write_text(const std::string& text, char* buffer, std::size_t capacity,
                     std::size_t* length) {
  if (length) *length = text.size();
  if (capacity == 0 && buffer == nullptr) {
    return length ? TB_OK : fail(TB_ERR_INVALID_ARGUMENT, "null length and buffer");
  }
  if (buffer == nullptr || capacity <= text.size()) {
    return fail(TB_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return TB_OK;
}

ConwayForm form_from(const uint32_t* entries, std::size_t count) {
  if (entries == nullptr && count != 0) throw Error(ErrorCode::kInvalidArgument, "null entries");
  return ConwayForm(std::vector<ConwayForm::Entry>(entries, entries + count));
}

void copy_form(const ConwayForm& form, uint32_t (&out)[TB_MAX_FORM_LENGTH], std::size_t* length) {
  if (form.length() > TB_MAX_FORM_LENGTH) {
    throw Error(ErrorCode::kCapacity, "Conway form longer than TB_MAX_FORM_LENGTH");
  }
  std::copy(form.entries().begin(), form.entries().end(), out);
  *length = form.length();
}

// The class of (p, q) with the shortest, then lexicographically least,
// expansion of the given total as its chosen form.
LinkClass class_at(std::uint64_t p, std::uint64_t q, std::uint32_t crossing_number) {
  LinkClass link_class = canonicalize(p, q);
  std::optional<ConwayForm> best;
  for (std::uint64_t member : link_class.members()) {
    for (auto& form : expansions(Fraction(p, member), crossing_number)) {
      if (!best || form.length() < best->length() ||
          (form.length() == best->length() && form < *best)) {
        best = std::move(form);
      }
    }
  }
  if (!best) {
    throw Error(ErrorCode::kNotFound, "no expansion of " + std::to_string(p) + "/" +
                                          std::to_string(q) + " with " +
                                          std::to_string(crossing_number) + " crossings");
  }
  link_class.set_chosen_form(std::move(*best));
  return link_class;
}

void fill_splitting(const std::optional<SplittingResult>& result, tb_splitting* out) {
  *out = tb_splitting{};
  if (!result) return;
  out->found = 1;
  out->sp = result->certificate.sp;
  out->member_q = result->member_q;
  copy_form(result->certificate.pattern_form, out->form, &out->form_length);
}

}  // namespace

extern "C" {

const char* tb_version(void) { return "1.0.0"; }

const char* tb_status_name(tb_status status) {
  switch (status) {
    case TB_OK: return "ok";
    case TB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TB_ERR_NOT_COPRIME: return "not coprime";
    case TB_ERR_OVERFLOW: return "overflow";
    case TB_ERR_PARSE: return "parse error";
    case TB_ERR_DUPLICATE_ID: return "duplicate id";
    case TB_ERR_MALFORMED_DIAGRAM: return "malformed diagram";
    case TB_ERR_CAPACITY: return "capacity exceeded";
    case TB_ERR_IO: return "I/O error";
    case TB_ERR_NOT_FOUND: return "not found";
    case TB_ERR_INCONSISTENT: return "inconsistent result";
    case TB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case TB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tb_last_error(void) { return last_error.c_str(); }

tb_status tb_eval_cf(const uint32_t* entries, size_t count, uint64_t* p, uint64_t* q) {
  TB_REQUIRE(p && q);
  return guarded([&] {
    const Fraction value = eval_cf(form_from(entries, count));
    *p = value.p();
    *q = value.q();
  });
}

tb_status tb_continued_fraction(uint64_t p, uint64_t q, uint32_t* entries, size_t capacity,
                                size_t* count) {
  TB_REQUIRE(count);
  std::optional<ConwayForm> form;
  if (auto status = guarded([&] { form = continued_fraction(Fraction(p, q)); }); status != TB_OK) {
    return status;
  }
  *count = form->length();
  if (capacity < form->length() || entries == nullptr) {
    return fail(TB_ERR_BUFFER_TOO_SMALL,
                "continued fraction needs " + std::to_string(form->length()) + " entries");
  }
  std::copy(form->entries().begin(), form->entries().end(), entries);
  return TB_OK;
}

tb_status tb_mod_inverse(int64_t q, uint64_t p, uint64_t* inverse) {
  TB_REQUIRE(inverse);
  return guarded([&] { *inverse = mod_inverse(q, p); });
}

tb_status tb_class_members(uint64_t p, uint64_t q, uint64_t members[4], size_t* count) {
  TB_REQUIRE(members && count);
  return guarded([&] {
    if (q == 0 || q >= p) throw Error(ErrorCode::kInvalidArgument, "class members need 0 < q < p");
    const auto values = class_members(p, q);
    std::copy(values.begin(), values.end(), members);
    *count = values.size();
  });
}

tb_status tb_tabulate(uint32_t n_min, uint32_t n_max, tb_tabulation** out) {
  TB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (n_min < 1 || n_min > n_max) {
      throw Error(ErrorCode::kInvalidArgument, "tabulation range must satisfy 1 <= n_min <= n_max");
    }
    auto tabulation = std::make_unique<tb_tabulation>();
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
      auto rows = tabulate(n);
      std::move(rows.begin(), rows.end(), std::back_inserter(tabulation->rows));
    }
    *out = tabulation.release();
  });
}

size_t tb_tabulation_size(const tb_tabulation* tabulation) {
  return tabulation ? tabulation->rows.size() : 0;
}

tb_status tb_tabulation_row(const tb_tabulation* tabulation, size_t index, tb_row* row) {
  TB_REQUIRE(tabulation && row);
  if (index >= tabulation->rows.size()) return fail(TB_ERR_NOT_FOUND, "row index out of range");
  return guarded([&] {
    const TabulationRow& source = tabulation->rows[index];
    const LinkClass& c = source.link_class;
    *row = tb_row{};
    row->crossing_number = source.crossing_number;
    row->p = c.p();
    row->canonical_q = c.canonical_q();
    row->member_count = c.members().size();
    std::copy(c.members().begin(), c.members().end(), row->members);
    row->raw_count = source.raw_count;
    row->oriented_count = c.oriented_count();
    row->mirror_degenerate = c.mirror_degenerate() ? 1 : 0;
    copy_form(*c.chosen_form(), row->form, &row->form_length);
    row->form_q = eval_cf(*c.chosen_form()).q();
  });
}

void tb_tabulation_free(tb_tabulation* tabulation) { delete tabulation; }

tb_status tb_knot_candidate_count(uint32_t n, size_t* count) {
  TB_REQUIRE(count);
  return guarded([&] { *count = knot_candidate_count(n); });
}

tb_status tb_diagram_from_conway(const uint32_t* entries, size_t count, tb_diagram** out) {
  TB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new tb_diagram{build_diagram(form_from(entries, count))}; });
}

tb_status tb_diagram_from_pd(const char* text, tb_diagram** out) {
  TB_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { *out = new tb_diagram{PlanarDiagram::parse(text)}; });
}

void tb_diagram_free(tb_diagram* diagram) { delete diagram; }

size_t tb_diagram_crossing_count(const tb_diagram* diagram) {
  return diagram ? diagram->diagram.crossing_count() : 0;
}

size_t tb_diagram_component_count(const tb_diagram* diagram) {
  return diagram ? diagram->diagram.component_count() : 0;
}

tb_status tb_diagram_pd(const tb_diagram* diagram, char* buffer, size_t capacity, size_t* length) {
  TB_REQUIRE(diagram);
  std::string text;
  if (auto status = guarded([&] { text = diagram->diagram.to_string(); }); status != TB_OK) return status;
  return write_text(text, buffer, capacity, length);
}

tb_status tb_diagram_gauss(const tb_diagram* diagram, char* buffer, size_t capacity,
                           size_t* length) {
  TB_REQUIRE(diagram);
  std::string text;
  if (auto status = guarded([&] { text = gauss_code(diagram->diagram).to_string(); });
      status != TB_OK) {
    return status;
  }
  return write_text(text, buffer, capacity, length);
}

tb_status tb_diagram_bracket(const tb_diagram* diagram, char* buffer, size_t capacity,
                             size_t* length) {
  TB_REQUIRE(diagram);
  std::string text;
  if (auto status = guarded([&] { text = kauffman_bracket(diagram->diagram).to_string(); });
      status != TB_OK) {
    return status;
  }
  return write_text(text, buffer, capacity, length);
}

tb_status tb_diagram_key(const tb_diagram* diagram, char* buffer, size_t capacity, size_t* length) {
  TB_REQUIRE(diagram);
  std::string text;
  if (auto status = guarded([&] { text = identification_key(diagram->diagram).to_string(); });
      status != TB_OK) {
    return status;
  }
  return write_text(text, buffer, capacity, length);
}

tb_status tb_diagram_writhe(const tb_diagram* diagram, int* value) {
  TB_REQUIRE(diagram && value);
  return guarded([&] { *value = writhe(gauss_code(diagram->diagram)); });
}

tb_status tb_diagram_linking_number(const tb_diagram* diagram, int* value) {
  TB_REQUIRE(diagram && value);
  return guarded([&] { *value = linking_number(gauss_code(diagram->diagram)); });
}

tb_status tb_link_table_builtin(tb_link_table** out) {
  TB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new tb_link_table{LinkTable::builtin()}; });
}

tb_status tb_link_table_load(const char* path, tb_link_table** out) {
  TB_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new tb_link_table{LinkTable::load(path)}; });
}

tb_status tb_link_table_parse(const char* text, tb_link_table** out) {
  TB_REQUIRE(text && out);
  *out = nullptr;
  return guarded([&] { *out = new tb_link_table{LinkTable::parse(std::string(text))}; });
}

size_t tb_link_table_size(const tb_link_table* table) { return table ? table->table.size() : 0; }

void tb_link_table_free(tb_link_table* table) { delete table; }

tb_status tb_identify(const tb_link_table* table, uint64_t p, uint64_t q, uint32_t crossing_number,
                      tb_identification** out) {
  TB_REQUIRE(table && out);
  *out = nullptr;
  return guarded([&] {
    *out = new tb_identification{identify_class(class_at(p, q, crossing_number), table->table)};
  });
}

tb_status tb_identify_row(const tb_link_table* table, const tb_tabulation* tabulation, size_t index,
                          tb_identification** out) {
  TB_REQUIRE(table && tabulation && out);
  *out = nullptr;
  if (index >= tabulation->rows.size()) return fail(TB_ERR_NOT_FOUND, "row index out of range");
  return guarded([&] {
    *out = new tb_identification{identify_class(tabulation->rows[index].link_class, table->table)};
  });
}

const char* tb_identification_id(const tb_identification* identification) {
  if (!identification || !identification->result.matched_id) return nullptr;
  return identification->result.matched_id->c_str();
}

size_t tb_identification_candidate_count(const tb_identification* identification) {
  return identification ? identification->result.candidates.size() : 0;
}

const char* tb_identification_candidate(const tb_identification* identification, size_t index) {
  if (!identification || index >= identification->result.candidates.size()) return nullptr;
  return identification->result.candidates[index].c_str();
}

void tb_identification_free(tb_identification* identification) { delete identification; }

tb_status tb_splitting_number(uint64_t p, uint64_t q, uint32_t crossing_number, tb_splitting* out) {
  TB_REQUIRE(out);
  return guarded([&] {
    fill_splitting(splitting_number(canonicalize(p, q), crossing_number), out);
  });
}

tb_status tb_splitting_row(const tb_tabulation* tabulation, size_t index, tb_splitting* out) {
  TB_REQUIRE(tabulation && out);
  if (index >= tabulation->rows.size()) return fail(TB_ERR_NOT_FOUND, "row index out of range");
  return guarded([&] {
    const TabulationRow& row = tabulation->rows[index];
    fill_splitting(
        splitting_number(row.link_class, tabulation->index_for(row.crossing_number)), out);
  });
}

tb_status tb_fixture_builtin(tb_fixture** out) {
  TB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new tb_fixture{PublishedFixture::builtin()}; });
}

tb_status tb_fixture_load(const char* path, tb_fixture** out) {
  TB_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { *out = new tb_fixture{PublishedFixture::load(path)}; });
}

size_t tb_fixture_size(const tb_fixture* fixture) {
  return fixture ? fixture->fixture.rows().size() : 0;
}

tb_status tb_fixture_row_at(const tb_fixture* fixture, size_t index, tb_fixture_row* row) {
  TB_REQUIRE(fixture && row);
  const auto rows = fixture->fixture.rows();
  if (index >= rows.size()) return fail(TB_ERR_NOT_FOUND, "fixture index out of range");
  const FixtureRow& source = rows[index];
  *row = tb_fixture_row{source.n,
                        source.p,
                        source.q,
                        source.conway.entries().data(),
                        source.conway.length(),
                        source.id.c_str(),
                        source.sp ? 1 : 0,
                        source.sp.value_or(0)};
  return TB_OK;
}

tb_status tb_fixture_find(const tb_fixture* fixture, const char* id, size_t* index) {
  TB_REQUIRE(fixture && id && index);
  const FixtureRow* row = fixture->fixture.find(id);
  if (!row) return fail(TB_ERR_NOT_FOUND, std::string("no fixture row with id ") + id);
  *index = static_cast<std::size_t>(row - fixture->fixture.rows().data());
  return TB_OK;
}

void tb_fixture_free(tb_fixture* fixture) { delete fixture; }

tb_status tb_verify(const tb_tabulation* tabulation, const tb_fixture* fixture,
                    const tb_link_table* table, uint32_t n_min, uint32_t n_max, tb_report** out) {
  TB_REQUIRE(tabulation && fixture && out);
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<tb_report>();
    report->report = verify_fixture(tabulation->rows, fixture->fixture, n_min, n_max,
                                    table ? &table->table : nullptr);
    report->summary = report->report.summary();
    *out = report.release();
  });
}

size_t tb_report_classes_checked(const tb_report* report) {
  return report ? report->report.classes_checked : 0;
}

size_t tb_report_discrepancy_count(const tb_report* report) {
  return report ? report->report.discrepancies.size() : 0;
}

const char* tb_report_discrepancy(const tb_report* report, size_t index) {
  if (!report || index >= report->report.discrepancies.size()) return nullptr;
  return report->report.discrepancies[index].c_str();
}

const char* tb_report_summary(const tb_report* report) {
  return report ? report->summary.c_str() : "";
}

void tb_report_free(tb_report* report) { delete report; }

}  // extern "C"
