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

// Command-line front end over the C API.

#include <twobridge/twobridge.h>

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitMismatch = 3;

struct Failure {
  tb_status status;
  std::string message;
};

void check(tb_status status) {
  if (status != TB_OK) throw Failure{status, tb_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* handle) const { Free(handle); }
};
using Tabulation = std::unique_ptr<tb_tabulation, Deleter<tb_tabulation, tb_tabulation_free>>;
using Diagram = std::unique_ptr<tb_diagram, Deleter<tb_diagram, tb_diagram_free>>;
using Table = std::unique_ptr<tb_link_table, Deleter<tb_link_table, tb_link_table_free>>;
using Fixture = std::unique_ptr<tb_fixture, Deleter<tb_fixture, tb_fixture_free>>;
using Report = std::unique_ptr<tb_report, Deleter<tb_report, tb_report_free>>;
using Identified =
    std::unique_ptr<tb_identification, Deleter<tb_identification, tb_identification_free>>;

template <typename Getter>
std::string text_of(Getter getter, const tb_diagram* diagram) {
  std::size_t length = 0;
  tb_status status = getter(diagram, nullptr, 0, &length);
  if (status != TB_ERR_BUFFER_TOO_SMALL) check(status);
  std::string out(length + 1, '\0');
  check(getter(diagram, out.data(), out.size(), &length));
  out.resize(length);
  return out;
}

struct Options {
  std::uint32_t n = 0;
  std::uint32_t n_max = 0;
  std::string table;
  std::string fixture;
  std::string format = "table";
  std::string id;
  std::string conway;
  std::string pq;
};

Table open_table(const Options& options) {
  tb_link_table* raw = nullptr;
  check(options.table.empty() ? tb_link_table_builtin(&raw)
                              : tb_link_table_load(options.table.c_str(), &raw));
  return Table(raw);
}

Fixture open_fixture(const Options& options) {
  tb_fixture* raw = nullptr;
  check(options.fixture.empty() ? tb_fixture_builtin(&raw)
                                : tb_fixture_load(options.fixture.c_str(), &raw));
  return Fixture(raw);
}

std::string form_text(const std::uint32_t* form, std::size_t length) {
  std::string out = "[";
  for (std::size_t i = 0; i < length; ++i) {
    if (i) out += ',';
    out += std::to_string(form[i]);
  }
  return out + "]";
}

std::vector<std::uint32_t> parse_conway(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string token;
  for (char c : text + ",") {
    if (c == '[' || c == ']' || c == ' ') continue;
    if (c != ',') {
      token += c;
      continue;
    }
    if (token.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value == 0 || value > UINT32_MAX) {
      throw Failure{TB_ERR_PARSE, "bad Conway entry '" + token + "'"};
    }
    out.push_back(static_cast<std::uint32_t>(value));
    token.clear();
  }
  if (out.empty()) throw Failure{TB_ERR_PARSE, "empty Conway form"};
  return out;
}

// A link named by --conway, --pq or --id.
struct Target {
  std::string label;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> form;
};

std::uint32_t sum_of(const std::vector<std::uint32_t>& form) {
  std::uint64_t total = 0;
  for (auto a : form) total += a;
  if (total > UINT32_MAX) throw Failure{TB_ERR_OVERFLOW, "Conway form too long"};
  return static_cast<std::uint32_t>(total);
}

std::string upper(std::string id) {
  for (auto& c : id) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return id;
}

// Crossing number encoded in an id such as "L10A117".
std::optional<std::uint32_t> id_crossings(const std::string& id) {
  std::size_t i = 1;
  std::uint32_t n = 0;
  if (id.size() < 2 || id[0] != 'L') return std::nullopt;
  while (i < id.size() && std::isdigit(static_cast<unsigned char>(id[i]))) n = n * 10 + (id[i++] - '0');
  if (i == 1 || i >= id.size()) return std::nullopt;
  return n;
}

Target resolve(const Options& options) {
  const int given = !options.conway.empty() + !options.pq.empty() + !options.id.empty();
  if (given != 1) throw Failure{TB_ERR_INVALID_ARGUMENT, "give exactly one of --conway, --pq, --id"};
  Target target;
  if (!options.conway.empty()) {
    target.form = parse_conway(options.conway);
    check(tb_eval_cf(target.form.data(), target.form.size(), &target.p, &target.q));
    target.n = sum_of(target.form);
    target.label = form_text(target.form.data(), target.form.size());
    return target;
  }
  if (!options.pq.empty()) {
    unsigned long long p = 0, q = 0;
    char tail = 0;
    if (std::sscanf(options.pq.c_str(), "%llu/%llu%c", &p, &q, &tail) != 2) {
      throw Failure{TB_ERR_PARSE, "expected p/q, got '" + options.pq + "'"};
    }
    target.p = p;
    target.q = q;
    std::uint32_t entries[TB_MAX_FORM_LENGTH * 4];
    std::size_t count = 0;
    check(tb_continued_fraction(p, q, entries, std::size(entries), &count));
    target.form.assign(entries, entries + count);
    target.n = sum_of(target.form);
    target.label = std::to_string(p) + "/" + std::to_string(q);
    return target;
  }

  target.label = upper(options.id);
  const Fixture fixture = open_fixture(options);
  std::size_t index = 0;
  const tb_status found = tb_fixture_find(fixture.get(), target.label.c_str(), &index);
  if (found == TB_OK) {
    tb_fixture_row row{};
    check(tb_fixture_row_at(fixture.get(), index, &row));
    target.p = row.p;
    target.q = row.q;
    target.n = row.n;
    target.form.assign(row.conway, row.conway + row.conway_length);
    return target;
  }
  if (found != TB_ERR_NOT_FOUND) check(found);

  // Not in the published tables: identify the tabulated classes instead.
  const auto n = id_crossings(target.label);
  if (!n || *n < 1 || *n > 16) throw Failure{TB_ERR_NOT_FOUND, "unknown id " + target.label};
  const Table table = open_table(options);
  tb_tabulation* raw = nullptr;
  check(tb_tabulate(*n, *n, &raw));
  const Tabulation tabulation(raw);
  for (std::size_t i = 0; i < tb_tabulation_size(tabulation.get()); ++i) {
    tb_identification* ident_raw = nullptr;
    check(tb_identify_row(table.get(), tabulation.get(), i, &ident_raw));
    const Identified ident(ident_raw);
    const char* id = tb_identification_id(ident.get());
    if (id && target.label == id) {
      tb_row row{};
      check(tb_tabulation_row(tabulation.get(), i, &row));
      target.p = row.p;
      target.q = row.form_q;
      target.n = row.crossing_number;
      target.form.assign(row.form, row.form + row.form_length);
      return target;
    }
  }
  throw Failure{TB_ERR_NOT_FOUND, "no tabulated class is identified as " + target.label};
}

// ---------------------------------------------------------------------------

struct TabulatedRow {
  tb_row row;
  std::string id;
  std::vector<std::string> candidates;
  tb_splitting splitting;
};

int run_tabulate(const Options& options) {
  std::uint32_t n_min = 3, n_max = 11;
  if (options.n) n_min = n_max = options.n;
  if (options.n_max) n_max = options.n_max;
  const Table table = open_table(options);
  tb_tabulation* raw = nullptr;
  check(tb_tabulate(n_min, n_max, &raw));
  const Tabulation tabulation(raw);

  std::vector<TabulatedRow> rows;
  for (std::size_t i = 0; i < tb_tabulation_size(tabulation.get()); ++i) {
    TabulatedRow out{};
    check(tb_tabulation_row(tabulation.get(), i, &out.row));
    tb_identification* ident_raw = nullptr;
    check(tb_identify_row(table.get(), tabulation.get(), i, &ident_raw));
    const Identified ident(ident_raw);
    if (const char* id = tb_identification_id(ident.get())) out.id = id;
    for (std::size_t c = 0; c < tb_identification_candidate_count(ident.get()); ++c) {
      out.candidates.emplace_back(tb_identification_candidate(ident.get(), c));
    }
    check(tb_splitting_row(tabulation.get(), i, &out.splitting));
    rows.push_back(std::move(out));
  }

  if (options.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json record;
      record["n"] = r.row.crossing_number;
      record["p"] = r.row.p;
      record["q"] = r.row.form_q;
      record["conway"] = std::vector<std::uint32_t>(r.row.form, r.row.form + r.row.form_length);
      record["id"] = r.id;
      if (r.splitting.found) record["sp"] = r.splitting.sp;
      record["canonical_q"] = r.row.canonical_q;
      record["members"] =
          std::vector<std::uint64_t>(r.row.members, r.row.members + r.row.member_count);
      record["raw_count"] = r.row.raw_count;
      record["oriented_count"] = r.row.oriented_count;
      record["mirror_degenerate"] = r.row.mirror_degenerate != 0;
      if (r.candidates.size() > 1) record["candidates"] = r.candidates;
      doc.push_back(std::move(record));
    }
    std::cout << doc.dump(2) << '\n';
  } else if (options.format == "csv") {
    std::cout << "n,p,q,conway,id,sp\n";
    for (const auto& r : rows) {
      std::cout << r.row.crossing_number << ',' << r.row.p << ',' << r.row.form_q << ",\""
                << form_text(r.row.form, r.row.form_length) << "\"," << r.id << ',';
      if (r.splitting.found) std::cout << r.splitting.sp;
      std::cout << '\n';
    }
  } else {
    std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "p/q" << std::setw(18)
              << "conway" << std::setw(10) << "id" << "sp\n";
    for (const auto& r : rows) {
      std::string id = r.id;
      if (r.candidates.size() > 1) {
        id = "?";
        for (const auto& c : r.candidates) id += " " + c;
      }
      std::cout << std::setw(4) << r.row.crossing_number << std::setw(10)
                << (std::to_string(r.row.p) + "/" + std::to_string(r.row.form_q))
                << std::setw(18) << form_text(r.row.form, r.row.form_length) << std::setw(10)
                << (id.empty() ? "-" : id)
                << (r.splitting.found ? std::to_string(r.splitting.sp) : "-") << '\n';
    }
  }
  return kExitOk;
}

int run_identify(const Options& options) {
  const Target target = resolve(options);
  const Table table = open_table(options);
  tb_identification* raw = nullptr;
  check(tb_identify(table.get(), target.p, target.q, target.n, &raw));
  const Identified ident(raw);
  std::vector<std::string> candidates;
  for (std::size_t c = 0; c < tb_identification_candidate_count(ident.get()); ++c) {
    candidates.emplace_back(tb_identification_candidate(ident.get(), c));
  }
  const char* id = tb_identification_id(ident.get());

  if (options.format == "json") {
    nlohmann::ordered_json record;
    record["p"] = target.p;
    record["q"] = target.q;
    record["n"] = target.n;
    record["id"] = id ? id : "";
    record["candidates"] = candidates;
    std::cout << record.dump(2) << '\n';
  } else {
    std::cout << target.p << '/' << target.q << " (" << target.n << " crossings): ";
    if (id) {
      std::cout << id << '\n';
    } else if (candidates.empty()) {
      std::cout << "no match\n";
    } else {
      std::cout << "ambiguous:";
      for (const auto& c : candidates) std::cout << ' ' << c;
      std::cout << '\n';
    }
  }
  return id ? kExitOk : kExitMismatch;
}

int run_splitting(const Options& options) {
  const Target target = resolve(options);
  tb_splitting result{};
  check(tb_splitting_number(target.p, target.q, target.n, &result));
  if (options.format == "json") {
    nlohmann::ordered_json record;
    record["link"] = target.label;
    record["p"] = target.p;
    record["q"] = target.q;
    record["n"] = target.n;
    if (result.found) {
      record["sp"] = result.sp;
      record["member_q"] = result.member_q;
      record["conway"] = std::vector<std::uint32_t>(result.form, result.form + result.form_length);
    } else {
      record["sp"] = nullptr;
    }
    std::cout << record.dump(2) << '\n';
  } else if (result.found) {
    std::cout << target.label << " sp " << result.sp << " via "
              << form_text(result.form, result.form_length) << " = " << target.p << '/'
              << result.member_q << '\n';
  } else {
    std::cout << target.label << ": no expansion with " << target.n
              << " crossings has the form C(2a1,b1,...,2ak); the formula does not apply at "
                 "this length\n";
  }
  return kExitOk;
}

int run_verify(const Options& options) {
  std::uint32_t n_min = 4, n_max = 11;
  if (options.n) n_min = n_max = options.n;
  if (options.n_max) n_max = options.n_max;
  const Fixture fixture = open_fixture(options);
  const Table table = open_table(options);
  tb_tabulation* raw = nullptr;
  check(tb_tabulate(n_min, n_max, &raw));
  const Tabulation tabulation(raw);
  tb_report* report_raw = nullptr;
  check(tb_verify(tabulation.get(), fixture.get(), table.get(), n_min, n_max, &report_raw));
  const Report report(report_raw);
  const std::size_t count = tb_report_discrepancy_count(report.get());
  if (options.format == "json") {
    nlohmann::ordered_json record;
    record["classes_checked"] = tb_report_classes_checked(report.get());
    std::vector<std::string> discrepancies;
    for (std::size_t i = 0; i < count; ++i) {
      discrepancies.emplace_back(tb_report_discrepancy(report.get(), i));
    }
    record["discrepancies"] = discrepancies;
    std::cout << record.dump(2) << '\n';
  } else {
    std::cout << tb_report_summary(report.get()) << '\n';
  }
  for (std::size_t i = 0; i < count; ++i) std::cerr << tb_report_discrepancy(report.get(), i) << '\n';
  return count == 0 ? kExitOk : kExitMismatch;
}

Diagram target_diagram(const Target& target) {
  tb_diagram* raw = nullptr;
  check(tb_diagram_from_conway(target.form.data(), target.form.size(), &raw));
  return Diagram(raw);
}

int run_gauss(const Options& options) {
  const Target target = resolve(options);
  const Diagram diagram = target_diagram(target);
  const std::string pd = text_of(tb_diagram_pd, diagram.get());
  const std::string gauss = text_of(tb_diagram_gauss, diagram.get());
  if (options.format == "json") {
    nlohmann::ordered_json record;
    record["conway"] = target.form;
    record["components"] = tb_diagram_component_count(diagram.get());
    record["pd"] = pd;
    record["gauss"] = gauss;
    std::cout << record.dump(2) << '\n';
  } else {
    std::cout << "conway: " << form_text(target.form.data(), target.form.size()) << '\n'
              << "PD: " << pd << '\n'
              << "gauss: " << gauss << '\n';
  }
  return kExitOk;
}

int run_bracket(const Options& options) {
  const Target target = resolve(options);
  const Diagram diagram = target_diagram(target);
  const std::string bracket = text_of(tb_diagram_bracket, diagram.get());
  int writhe = 0;
  check(tb_diagram_writhe(diagram.get(), &writhe));
  const bool link = tb_diagram_component_count(diagram.get()) == 2;
  int lk = 0;
  std::string key;
  if (link) {
    check(tb_diagram_linking_number(diagram.get(), &lk));
    key = text_of(tb_diagram_key, diagram.get());
  }
  if (options.format == "json") {
    nlohmann::ordered_json record;
    record["conway"] = target.form;
    record["bracket"] = bracket;
    record["writhe"] = writhe;
    if (link) {
      record["linking_number"] = lk;
      record["key"] = key;
    }
    std::cout << record.dump(2) << '\n';
  } else {
    std::cout << "bracket: " << bracket << '\n' << "writhe: " << writhe << '\n';
    if (link) std::cout << "linking number: " << lk << '\n' << "key: " << key << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabulate, identify and split 2-bridge links"};
  app.require_subcommand(1);
  Options options;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  const auto add_target = [&](CLI::App* sub) {
    sub->add_option("--conway", options.conway, "Conway form a1,a2,...");
    sub->add_option("--pq", options.pq, "Fraction p/q");
    sub->add_option("--id", options.id, "Thistlethwaite id, e.g. L7A6");
    sub->add_option("--fixture", options.fixture, "Published-table fixture (JSON or CSV)");
  };

  auto* tabulate = app.add_subcommand("tabulate", "List link classes by crossing number");
  auto* tab_n = tabulate->add_option("--n", options.n, "Single crossing number")
                    ->check(CLI::Range(3, 16));
  tabulate->add_option("--n-max", options.n_max, "Largest crossing number (default 11)")
      ->check(CLI::Range(3, 16))
      ->excludes(tab_n);
  tabulate->add_option("--table", options.table, "Link table used for ids");
  add_format(tabulate);

  auto* identify = app.add_subcommand("identify", "Look a link up in the link table");
  add_target(identify);
  identify->add_option("--table", options.table, "Link table");
  add_format(identify);

  auto* splitting = app.add_subcommand("splitting", "Splitting number from the Conway form");
  add_target(splitting);
  splitting->add_option("--table", options.table, "Link table for ids outside the fixture");
  add_format(splitting);

  auto* verify = app.add_subcommand("verify", "Check the tabulation against the published tables");
  auto* ver_n = verify->add_option("--n", options.n, "Single crossing number")
                    ->check(CLI::Range(3, 16));
  verify->add_option("--n-max", options.n_max, "Largest crossing number (default 11)")
      ->check(CLI::Range(3, 16))
      ->excludes(ver_n);
  verify->add_option("--fixture", options.fixture, "Published-table fixture (JSON or CSV)");
  verify->add_option("--table", options.table, "Link table");
  add_format(verify);

  auto* gauss = app.add_subcommand("gauss", "PD and Gauss codes of the 4-plat diagram");
  add_target(gauss);
  add_format(gauss);

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket and identification key");
  add_target(bracket);
  add_format(bracket);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tabulate->parsed()) return run_tabulate(options);
    if (identify->parsed()) return run_identify(options);
    if (splitting->parsed()) return run_splitting(options);
    if (verify->parsed()) return run_verify(options);
    if (gauss->parsed()) return run_gauss(options);
    return run_bracket(options);
  } catch (const Failure& failure) {
    std::cerr << "error: " << failure.message << '\n';
    return failure.status == TB_ERR_IO ? kExitIo : kExitUsage;
  }
}
