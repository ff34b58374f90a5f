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

#include "twobridge/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <tuple>
#include <utility>

#include "twobridge/error.hpp"

namespace twobridge {
namespace {

std::uint64_t checked_mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t product = 0;
  std::uint64_t sum = 0;
  if (__builtin_mul_overflow(a, b, &product) || __builtin_add_overflow(product, c, &sum)) {
    throw Error(ErrorCode::kOverflow, "continued fraction exceeds 64-bit range");
  }
  return sum;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_unsigned(std::string_view s, const char* what) {
  s = trim(s);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, std::string("invalid ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

void compositions_rec(std::uint32_t remaining, std::vector<ConwayForm::Entry>& prefix,
                      std::vector<ConwayForm>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint32_t first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

Fraction::Fraction(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (p == 0 || q == 0) {
    throw Error(ErrorCode::kInvalidArgument, "fraction needs positive p and q");
  }
  if (gcd(p, q) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "fraction " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
}

Fraction Fraction::reduced(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t g = gcd(p, q);
  if (g == 0) throw Error(ErrorCode::kInvalidArgument, "fraction needs positive p and q");
  return Fraction(p / g, q / g);
}

std::string Fraction::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw Error(ErrorCode::kParse, "expected p/q, got '" + text + "'");
  }
  std::string_view view(text);
  return Fraction(parse_unsigned<std::uint64_t>(view.substr(0, slash), "numerator"),
                  parse_unsigned<std::uint64_t>(view.substr(slash + 1), "denominator"));
}

ConwayForm::ConwayForm(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Conway form must be nonempty");
  }
  for (Entry a : entries_) {
    if (a == 0) throw Error(ErrorCode::kInvalidArgument, "Conway form entries must be positive");
  }
}

std::uint64_t ConwayForm::crossing_count() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

std::string ConwayForm::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

ConwayForm ConwayForm::parse(const std::string& text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::kParse, "unbalanced brackets in '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Entry> entries;
  while (!trim(s).empty()) {
    const auto comma = s.find(',');
    const auto token = s.substr(0, comma);
    entries.push_back(parse_unsigned<Entry>(token, "Conway entry"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (entries.empty()) throw Error(ErrorCode::kParse, "empty Conway form '" + text + "'");
  return ConwayForm(std::move(entries));
}

Fraction eval_cf(const ConwayForm& form) {
  // Bottom-up: value = num/den, starting from a_n/1; each step replaces it
  // with a_i + den/num.
  const auto entries = form.entries();
  std::uint64_t num = entries.back();
  std::uint64_t den = 1;
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    const std::uint64_t next = checked_mul_add(entries[i], num, den);
    den = num;
    num = next;
  }
  // Successive convergents are always coprime.
  return Fraction(num, den);
}

std::vector<ConwayForm> compositions(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "compositions need n >= 1");
  if (n > kMaxCompositionTotal) {
    throw Error(ErrorCode::kCapacity,
                "compositions limited to n <= " + std::to_string(kMaxCompositionTotal));
  }
  std::vector<ConwayForm> out;
  out.reserve(std::size_t{1} << (n - 1));
  std::vector<ConwayForm::Entry> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

std::vector<ConwayForm> expansions(const Fraction& target, std::uint32_t total) {
  std::vector<ConwayForm> out;
  for (auto& form : compositions(total)) {
    if (eval_cf(form) == target) out.push_back(std::move(form));
  }
  return out;
}

ConwayForm continued_fraction(const Fraction& value) {
  std::vector<ConwayForm::Entry> entries;
  std::uint64_t num = value.p();
  std::uint64_t den = value.q();
  while (den != 0) {
    const std::uint64_t quotient = num / den;
    if (quotient > UINT32_MAX) {
      throw Error(ErrorCode::kOverflow, "continued fraction entry exceeds 32 bits");
    }
    entries.push_back(static_cast<ConwayForm::Entry>(quotient));
    std::tie(num, den) = std::pair(den, num - quotient * den);
  }
  if (entries.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "continued fraction needs p >= q");
  }
  return ConwayForm(std::move(entries));
}

ExpansionIndex::ExpansionIndex(std::uint32_t total) : total_(total) {
  for (auto& form : compositions(total)) {
    const Fraction value = eval_cf(form);
    by_value_[value].push_back(std::move(form));
  }
}

std::span<const ConwayForm> ExpansionIndex::find(const Fraction& value) const {
  const auto it = by_value_.find(value);
  if (it == by_value_.end()) return {};
  return it->second;
}

}  // namespace twobridge
