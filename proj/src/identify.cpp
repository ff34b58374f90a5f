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

#include "twobridge/identify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "embedded_data.hpp"
#include "twobridge/error.hpp"
#include "twobridge/splitting.hpp"

namespace twobridge {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buffer.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string pair_text(std::uint64_t p, std::uint64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// RFC 4180 fields of one line; quoted fields may contain commas.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_number) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": unterminated quote");
  }
  return fields;
}

template <typename T>
T to_number(const std::string& text, std::size_t line_number, const char* column) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<T>(value);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": bad " + column +
                                       " '" + text + "'");
  }
}

}  // namespace

std::string normalize_link_id(std::string_view id) {
  std::string out(trim(id));
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Link table

void LinkTable::add(LinkTableEntry entry) {
  entry.id = normalize_link_id(entry.id);
  if (by_id_.contains(entry.id)) {
    throw Error(ErrorCode::kDuplicateId, "duplicate link id " + entry.id);
  }
  by_id_.emplace(entry.id, entries_.size());
  entries_.push_back(std::move(entry));
}

const LinkTableEntry* LinkTable::find(std::string_view id) const {
  const auto it = by_id_.find(normalize_link_id(id));
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

LinkTable LinkTable::parse(std::istream& in, const std::string& source) {
  LinkTable table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_number) + ": ";
    const auto tab = content.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kParse, where + "expected id<TAB>PD:[...]");
    }
    const std::string_view code = trim(content.substr(tab + 1));
    if (!code.starts_with("PD:")) throw Error(ErrorCode::kParse, where + "missing PD: prefix");
    LinkTableEntry entry;
    entry.id = normalize_link_id(content.substr(0, tab));
    if (entry.id.empty()) throw Error(ErrorCode::kParse, where + "empty id");
    try {
      entry.diagram = PlanarDiagram::parse(std::string(code));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
    entry.crossing_number = static_cast<std::uint32_t>(entry.diagram.crossing_count());
    if (entry.diagram.component_count() == 2) entry.key = identification_key(entry.diagram);
    try {
      table.add(std::move(entry));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  return table;
}

LinkTable LinkTable::parse(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse(in, source);
}

LinkTable LinkTable::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

const LinkTable& LinkTable::builtin() {
  static const LinkTable table = parse(std::string(embedded::kLinkTable), "<builtin table>");
  return table;
}

Identification identify_class(const LinkClass& link_class, const LinkTable& table) {
  if (!link_class.chosen_form()) {
    throw Error(ErrorCode::kInvalidArgument, "identification needs a class with a chosen form");
  }
  const ConwayForm& form = *link_class.chosen_form();
  const auto crossing_number = static_cast<std::uint32_t>(form.crossing_count());
  Identification result{link_class, std::nullopt, {}};

  std::optional<IdentificationKey> key;
  for (const auto& entry : table.entries()) {
    if (entry.crossing_number != crossing_number || !entry.key) continue;
    if (!key) key = identification_key(build_diagram(form));
    if (entry.key->matches(*key)) result.candidates.push_back(entry.id);
  }
  if (result.candidates.size() == 1) result.matched_id = result.candidates.front();
  return result;
}

// ---------------------------------------------------------------------------
// Published tables

PublishedFixture PublishedFixture::parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("fixture JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::kParse, "fixture JSON must be an array of records");
  std::vector<FixtureRow> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& record = doc[i];
    try {
      std::vector<ConwayForm::Entry> conway = record.at("conway").get<std::vector<ConwayForm::Entry>>();
      FixtureRow row{record.at("n").get<std::uint32_t>(),
                     record.at("p").get<std::uint64_t>(),
                     record.at("q").get<std::uint64_t>(),
                     ConwayForm(std::move(conway)),
                     normalize_link_id(record.value("id", std::string())),
                     std::nullopt};
      if (record.contains("sp") && !record["sp"].is_null()) row.sp = record["sp"].get<std::uint32_t>();
      rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, "fixture record " + std::to_string(i) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "fixture record " + std::to_string(i) + ": " + e.what());
    }
  }
  return PublishedFixture(std::move(rows));
}

PublishedFixture PublishedFixture::parse_csv(std::string_view text) {
  std::vector<FixtureRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line, line_number);
    if (!header_seen) {
      if (line != "n,p,q,conway,id,sp") {
        throw Error(ErrorCode::kParse, "CSV header must be n,p,q,conway,id,sp");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 6) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": expected 6 columns");
    }
    ConwayForm conway = [&] {
      try {
        return ConwayForm::parse(fields[3]);
      } catch (const Error& e) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_number) + ": " + e.what());
      }
    }();
    FixtureRow row{to_number<std::uint32_t>(fields[0], line_number, "n"),
                   to_number<std::uint64_t>(fields[1], line_number, "p"),
                   to_number<std::uint64_t>(fields[2], line_number, "q"),
                   std::move(conway),
                   normalize_link_id(fields[4]),
                   std::nullopt};
    if (!fields[5].empty()) row.sp = to_number<std::uint32_t>(fields[5], line_number, "sp");
    rows.push_back(std::move(row));
  }
  return PublishedFixture(std::move(rows));
}

PublishedFixture PublishedFixture::load(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const std::string_view content = trim(text);
  if (!content.empty() && (content.front() == '[' || content.front() == '{')) {
    return parse_json(content);
  }
  return parse_csv(content);
}

const PublishedFixture& PublishedFixture::builtin() {
  static const PublishedFixture fixture = parse_json(embedded::kPublishedTables);
  return fixture;
}

const FixtureRow* PublishedFixture::find(std::string_view id) const {
  const std::string wanted = normalize_link_id(id);
  for (const auto& row : rows_) {
    if (row.id == wanted) return &row;
  }
  return nullptr;
}

std::string VerificationReport::summary() const {
  return std::to_string(classes_checked) + " classes checked, " +
         std::to_string(discrepancies.size()) + " discrepancies";
}

VerificationReport verify_fixture(std::span<const TabulationRow> tabulation,
                                  const PublishedFixture& fixture, std::uint32_t n_min,
                                  std::uint32_t n_max, const LinkTable* table) {
  VerificationReport report;
  std::set<std::uint32_t> crossing_numbers;
  for (const auto& row : tabulation) {
    if (row.crossing_number < n_min || row.crossing_number > n_max) continue;
    crossing_numbers.insert(row.crossing_number);
    ++report.classes_checked;
  }
  for (const auto& row : fixture.rows()) {
    if (row.n >= n_min && row.n <= n_max) crossing_numbers.insert(row.n);
  }

  for (std::uint32_t n : crossing_numbers) {
    std::vector<const TabulationRow*> classes;
    for (const auto& row : tabulation) {
      if (row.crossing_number == n) classes.push_back(&row);
    }
    std::vector<const FixtureRow*> expected;
    for (const auto& row : fixture.rows()) {
      if (row.n == n) expected.push_back(&row);
    }
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (classes.size() != expected.size()) {
      report.discrepancies.push_back(at + "fixture has " + std::to_string(expected.size()) +
                                     " rows, tabulation has " + std::to_string(classes.size()));
    }

    std::vector<int> hits(classes.size(), 0);
    for (const FixtureRow* row : expected) {
      const std::string label = at + (row->id.empty() ? "" : row->id + " ") + pair_text(row->p, row->q);
      if (row->conway.crossing_count() != n) {
        report.discrepancies.push_back(label + ": Conway form " + row->conway.to_string() +
                                       " does not sum to " + std::to_string(n));
      }
      const Fraction value = eval_cf(row->conway);
      if (value.p() != row->p || value.q() != row->q) {
        report.discrepancies.push_back(label + ": Conway form " + row->conway.to_string() +
                                       " evaluates to " + value.to_string());
      }
      std::vector<std::size_t> owners;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const LinkClass& c = classes[i]->link_class;
        if (c.p() == row->p && c.contains(row->q)) owners.push_back(i);
      }
      if (owners.size() != 1) {
        report.discrepancies.push_back(label + ": lies in " + std::to_string(owners.size()) +
                                       " tabulated classes");
        continue;
      }
      ++hits[owners.front()];
      ++report.rows_matched;
      const TabulationRow& owner = *classes[owners.front()];

      if (table && !row->id.empty()) {
        const Identification ident = identify_class(owner.link_class, *table);
        if (ident.matched_id != row->id) {
          std::string found = ident.candidates.empty() ? "no match" : "";
          for (const auto& id : ident.candidates) found += (found.empty() ? "" : " ") + id;
          report.discrepancies.push_back(label + ": identified as " + found);
        }
      }
      if (row->sp) {
        const auto result = splitting_number(owner.link_class, n);
        if (!result || result->certificate.sp != *row->sp) {
          report.discrepancies.push_back(
              label + ": splitting number " +
              (result ? std::to_string(result->certificate.sp) : std::string("absent")) +
              ", expected " + std::to_string(*row->sp));
        }
      }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (hits[i] != 1) {
        const LinkClass& c = classes[i]->link_class;
        report.discrepancies.push_back(at + "class " + pair_text(c.p(), c.canonical_q()) +
                                       " matched by " + std::to_string(hits[i]) + " fixture rows");
      }
    }
  }
  return report;
}

}  // namespace twobridge
