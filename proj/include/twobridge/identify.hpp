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

// Matching tabulated classes against an external link table, and checking a
// tabulation against the published tables.

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/diagram.hpp"
#include "twobridge/enumerator.hpp"
#include "twobridge/invariants.hpp"

namespace twobridge {

/// "l7a4" -> "L7A4".
std::string normalize_link_id(std::string_view id);

struct LinkTableEntry {
  std::string id;
  std::uint32_t crossing_number;
  PlanarDiagram diagram;
  /// Absent for entries that are not two-component links.
  std::optional<IdentificationKey> key;
};

/// Link table ingested from text: one record per line,
/// `id<TAB>PD:[X(a,b,c,d),...]`, blank lines and `#` comments ignored.
class LinkTable {
 public:
  LinkTable() = default;

  /// Throws kParse (with the line number), kDuplicateId or kMalformedDiagram.
  static LinkTable parse(std::istream& in, const std::string& source = "<input>");
  static LinkTable parse(const std::string& text, const std::string& source = "<input>");
  /// Throws kIo if the file cannot be opened.
  static LinkTable load(const std::filesystem::path& path);
  /// Thistlethwaite-table PD codes of the links named in the published
  /// 2-bridge tables, plus L10A117, compiled into the library.
  static const LinkTable& builtin();

  std::span<const LinkTableEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const LinkTableEntry* find(std::string_view id) const;

  void add(LinkTableEntry entry);

 private:
  std::vector<LinkTableEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

struct Identification {
  LinkClass link_class;
  std::optional<std::string> matched_id;
  /// Every table id with a matching key; more than one means ambiguous.
  std::vector<std::string> candidates;

  bool ambiguous() const noexcept { return candidates.size() > 1; }
};

/// Compares the key of the class's chosen form against the table entries of
/// the same crossing number. Throws kInvalidArgument if the class has no
/// chosen form.
Identification identify_class(const LinkClass& link_class, const LinkTable& table);

/// One row of the published tables.
struct FixtureRow {
  std::uint32_t n;
  std::uint64_t p;
  std::uint64_t q;
  ConwayForm conway;
  std::string id;
  std::optional<std::uint32_t> sp;
};

/// Records `{n, p, q, conway: [...], id, sp?}`, as a JSON array or as CSV
/// with the columns `n,p,q,conway,id,sp`.
class PublishedFixture {
 public:
  PublishedFixture() = default;
  explicit PublishedFixture(std::vector<FixtureRow> rows) : rows_(std::move(rows)) {}

  /// Throws kParse on malformed input.
  static PublishedFixture parse_json(std::string_view text);
  static PublishedFixture parse_csv(std::string_view text);
  /// Picks JSON or CSV by the first non-blank character. Throws kIo if the
  /// file cannot be read.
  static PublishedFixture load(const std::filesystem::path& path);
  /// The published tables for 4 to 11 crossings, compiled into the library.
  static const PublishedFixture& builtin();

  std::span<const FixtureRow> rows() const noexcept { return rows_; }
  const FixtureRow* find(std::string_view id) const;

 private:
  std::vector<FixtureRow> rows_;
};

struct VerificationReport {
  std::size_t classes_checked = 0;
  std::size_t rows_matched = 0;
  std::vector<std::string> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
  /// "99 classes checked, 0 discrepancies"
  std::string summary() const;
};

/// Compares the tabulation with the fixture rows whose crossing number lies in
/// [n_min, n_max]: row counts per crossing number, a class-wise bijection
/// between fixture pairs and tabulated classes, and that each fixture form
/// sums to n and evaluates to its (p, q). With a table, also checks that each
/// class is identified as the fixture id; fixture splitting numbers are
/// checked when present.
VerificationReport verify_fixture(std::span<const TabulationRow> tabulation,
                                  const PublishedFixture& fixture, std::uint32_t n_min,
                                  std::uint32_t n_max, const LinkTable* table = nullptr);

}  // namespace twobridge
