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

#include "twobridge/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "twobridge/error.hpp"

namespace twobridge {

LaurentPolynomial LaurentPolynomial::monomial(Coefficient coefficient, int exponent) {
  LaurentPolynomial out;
  out.add_term(exponent, coefficient);
  return out;
}

void LaurentPolynomial::add_term(int exponent, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, coefficient, &it->second)) {
      throw Error(ErrorCode::kOverflow, "Laurent coefficient overflow");
    }
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no degree");
  return terms_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPolynomial::Coefficient product = 0;
      if (__builtin_mul_overflow(ca, cb, &product)) {
        throw Error(ErrorCode::kOverflow, "Laurent coefficient overflow");
      }
      out.add_term(ea + eb, product);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result = one();
  LaurentPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::invert_variable() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> a) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    out += std::to_string(c) + "*A^" + std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
  LaurentPolynomial out;
  std::string_view s(text);
  if (s == "0") return out;
  const auto fail = [&] { throw Error(ErrorCode::kParse, "malformed polynomial '" + text + "'"); };
  const auto number = [&](std::string_view& v, auto& value) {
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc()) fail();
    v.remove_prefix(static_cast<std::size_t>(ptr - v.data()));
  };
  while (true) {
    Coefficient c = 0;
    int e = 0;
    number(s, c);
    if (!s.starts_with("*A^")) fail();
    s.remove_prefix(3);
    number(s, e);
    if (c == 0 || out.terms_.contains(e)) fail();
    out.terms_.emplace(e, c);
    if (s.empty()) break;
    if (s.front() != '+') fail();
    s.remove_prefix(1);
  }
  return out;
}

BracketPolynomial kauffman_bracket(const PlanarDiagram& diagram) {
  const auto crossings = diagram.crossings();
  const std::size_t n = crossings.size();
  if (n > kMaxBracketCrossings) {
    throw Error(ErrorCode::kCapacity, "state sum limited to " +
                                          std::to_string(kMaxBracketCrossings) + " crossings");
  }

  std::unordered_map<std::uint32_t, std::size_t> dense;
  std::vector<std::array<std::size_t, 4>> arcs(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      arcs[c][s] = dense.try_emplace(crossings[c].arcs[s], dense.size()).first->second;
    }
  }
  const std::size_t arc_count = dense.size();

  // tally[k][j]: number of states with k B-smoothings and j loops.
  std::vector<std::vector<std::int64_t>> tally(n + 1, std::vector<std::int64_t>(arc_count + 2, 0));
  std::vector<std::size_t> parent(arc_count);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t loops = arc_count;
    const auto join = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --loops;
      }
    };
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = arcs[c];
      if ((state >> c) & 1u) {
        join(x[0], x[3]);  // B-smoothing
        join(x[1], x[2]);
      } else {
        join(x[0], x[1]);  // A-smoothing
        join(x[2], x[3]);
      }
    }
    ++tally[static_cast<std::size_t>(std::popcount(state))][loops];
  }

  const LaurentPolynomial delta = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  const std::size_t max_loops = arc_count + diagram.free_loops();
  std::vector<LaurentPolynomial> delta_pow{LaurentPolynomial::one()};
  for (std::size_t k = 1; k < max_loops; ++k) delta_pow.push_back(delta_pow.back() * delta);

  BracketPolynomial bracket;
  if (n == 0) {
    if (diagram.free_loops() == 0) return bracket;
    return delta_pow[diagram.free_loops() - 1];
  }
  for (std::size_t b = 0; b <= n; ++b) {
    const int a_exponent = static_cast<int>(n) - 2 * static_cast<int>(b);
    for (std::size_t loops = 1; loops <= arc_count; ++loops) {
      if (tally[b][loops] == 0) continue;
      bracket += LaurentPolynomial::monomial(tally[b][loops], a_exponent) *
                 delta_pow[loops + diagram.free_loops() - 1];
    }
  }
  return bracket;
}

int writhe(const GaussCode& code) {
  int total = 0;
  for (const auto& component : code.components) {
    for (const auto& visit : component) {
      if (visit.strand == Strand::kOver) total += visit.sign;
    }
  }
  return total;
}

int linking_number(const GaussCode& code) {
  if (code.components.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "linking number needs a two-component diagram");
  }
  std::unordered_map<std::uint32_t, std::size_t> over_component;
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& visit : code.components[k]) {
      if (visit.strand == Strand::kOver) over_component[visit.crossing] = k;
    }
  }
  int total = 0;
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& visit : code.components[k]) {
      if (visit.strand == Strand::kUnder && over_component.at(visit.crossing) != k) {
        total += visit.sign;
      }
    }
  }
  return total / 2;
}

LaurentPolynomial normalized_bracket(const BracketPolynomial& bracket, int writhe) {
  // (-A^3)^-w = (-1)^w A^(-3w)
  const LaurentPolynomial::Coefficient sign = writhe % 2 == 0 ? 1 : -1;
  return LaurentPolynomial::monomial(sign, -3 * writhe) * bracket;
}

BivariatePolynomial::Coefficient BivariatePolynomial::coefficient(int x_exponent,
                                                                  int y_exponent) const {
  const auto it = terms_.find({x_exponent, y_exponent});
  return it == terms_.end() ? 0 : it->second;
}

void BivariatePolynomial::add_term(int x_exponent, int y_exponent, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_exponent, y_exponent}, coefficient);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, coefficient, &it->second)) {
      throw Error(ErrorCode::kOverflow, "polynomial coefficient overflow");
    }
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::swap_variables() const {
  BivariatePolynomial out;
  for (const auto& [exponents, c] : terms_) out.terms_.emplace(std::pair(exponents.second, exponents.first), c);
  return out;
}

BivariatePolynomial::Coefficient BivariatePolynomial::evaluate(Coefficient x, Coefficient y) const {
  Coefficient sum = 0;
  for (const auto& [exponents, c] : terms_) {
    Coefficient term = c;
    for (int i = 0; i < exponents.first; ++i) term *= x;
    for (int j = 0; j < exponents.second; ++j) term *= y;
    sum += term;
  }
  return sum;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exponents, c] : terms_) {
    if (!out.empty()) out += '+';
    out += std::to_string(c) + "*x^" + std::to_string(exponents.first) + "*y^" +
           std::to_string(exponents.second);
  }
  return out;
}

namespace {

// Face containing each corner. Corner (c, s) lies between slots s-1 and s.
std::vector<std::array<std::size_t, 4>> corner_faces(const PlanarDiagram& diagram,
                                                     std::size_t* face_total) {
  const auto crossings = diagram.crossings();
  const std::size_t n = crossings.size();
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::size_t, int>>> ends;
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) ends[crossings[c].arcs[s]].push_back({c, s});
  }
  const auto across = [&](std::size_t c, int s) {
    const auto& pair = ends.at(crossings[c].arcs[s]);
    return pair[0] == std::pair(c, s) ? pair[1] : pair[0];
  };
  std::vector<std::array<std::size_t, 4>> face(n);
  for (auto& f : face) f.fill(SIZE_MAX);
  std::size_t faces = 0;
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    for (int s0 = 0; s0 < 4; ++s0) {
      if (face[c0][s0] != SIZE_MAX) continue;
      std::pair<std::size_t, int> d{c0, s0};
      while (face[d.first][d.second] == SIZE_MAX) {
        face[d.first][d.second] = faces;
        const auto [c, s] = across(d.first, d.second);
        d = {c, (s + 1) % 4};
      }
      ++faces;
    }
  }
  *face_total = faces;
  return face;
}

}  // namespace

TaitGraph tait_graph(const PlanarDiagram& diagram) {
  if (diagram.crossing_count() == 0 || !diagram.is_planar()) {
    throw Error(ErrorCode::kMalformedDiagram, "Tait graph needs a connected planar diagram");
  }
  std::size_t face_total = 0;
  const auto face = corner_faces(diagram, &face_total);
  const std::size_t n = face.size();

  // Neighboring corners of a crossing lie in faces of opposite colors.
  std::vector<int> color(face_total, -1);
  std::vector<std::vector<std::size_t>> adjacent(face_total);
  for (std::size_t c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      adjacent[face[c][s]].push_back(face[c][(s + 1) % 4]);
      adjacent[face[c][(s + 1) % 4]].push_back(face[c][s]);
    }
  }
  std::vector<std::size_t> stack{face[0][0]};
  color[face[0][0]] = 0;
  while (!stack.empty()) {
    const std::size_t f = stack.back();
    stack.pop_back();
    for (std::size_t g : adjacent[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw Error(ErrorCode::kMalformedDiagram, "diagram has no checkerboard coloring");
      }
    }
  }

  TaitGraph graph;
  std::unordered_map<std::size_t, std::size_t> vertex;
  const auto vertex_of = [&](std::size_t f) {
    return vertex.try_emplace(f, vertex.size()).first->second;
  };
  for (std::size_t c = 0; c < n; ++c) {
    const int first = color[face[c][0]] == 0 ? 0 : 1;
    graph.edges.push_back({vertex_of(face[c][first]), vertex_of(face[c][first + 2])});
  }
  graph.vertex_count = vertex.size();
  return graph;
}

BivariatePolynomial tutte_polynomial(const TaitGraph& graph) {
  const std::size_t m = graph.edges.size();
  if (m > kMaxBracketCrossings) {
    throw Error(ErrorCode::kCapacity, "Tutte polynomial limited to " +
                                          std::to_string(kMaxBracketCrossings) + " edges");
  }
  const std::size_t v = graph.vertex_count;
  std::vector<std::size_t> parent(v);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t full_rank = 0;
  for (const auto& [a, b] : graph.edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      ++full_rank;
    }
  }

  // tally[i][j]: subsets A with corank r(E) - r(A) = i and nullity |A| - r(A) = j.
  std::vector<std::vector<std::int64_t>> tally(full_rank + 1, std::vector<std::int64_t>(m + 1, 0));
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t rank = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (!((subset >> e) & 1u)) continue;
      const std::size_t ra = find(graph.edges[e].first), rb = find(graph.edges[e].second);
      if (ra != rb) {
        parent[ra] = rb;
        ++rank;
      }
    }
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    ++tally[full_rank - rank][size - rank];
  }

  // T(x, y) = sum tally[i][j] (x - 1)^i (y - 1)^j
  std::vector<std::vector<std::int64_t>> binomial(m + 2, std::vector<std::int64_t>(m + 2, 0));
  for (std::size_t a = 0; a <= m + 1; ++a) {
    binomial[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binomial[a][b] = binomial[a - 1][b - 1] + binomial[a - 1][b];
  }
  BivariatePolynomial tutte;
  for (std::size_t i = 0; i <= full_rank; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (tally[i][j] == 0) continue;
      for (std::size_t a = 0; a <= i; ++a) {
        for (std::size_t b = 0; b <= j; ++b) {
          const std::int64_t sign = ((i - a) + (j - b)) % 2 == 0 ? 1 : -1;
          tutte.add_term(static_cast<int>(a), static_cast<int>(b),
                         sign * tally[i][j] * binomial[i][a] * binomial[j][b]);
        }
      }
    }
  }
  return tutte;
}

bool is_alternating(const PlanarDiagram& diagram) {
  for (const auto& component : gauss_code(diagram).components) {
    for (std::size_t i = 0; i < component.size(); ++i) {
      if (component[i].strand == component[(i + 1) % component.size()].strand) return false;
    }
  }
  return true;
}

bool is_reduced_alternating(const PlanarDiagram& diagram) {
  if (diagram.crossing_count() == 0 || diagram.free_loops() != 0 || !diagram.is_planar() ||
      !is_alternating(diagram)) {
    return false;
  }
  std::size_t face_total = 0;
  for (const auto& corners : corner_faces(diagram, &face_total)) {
    if (corners[0] == corners[2] || corners[1] == corners[3]) return false;
  }
  return true;
}

IdentificationKey::IdentificationKey(std::vector<LaurentPolynomial> polynomials,
                                     std::optional<BivariatePolynomial> tait_tutte)
    : tait_tutte_(std::move(tait_tutte)) {
  std::vector<std::pair<std::string, LaurentPolynomial>> keyed;
  for (auto& poly : polynomials) keyed.emplace_back(poly.to_string(), std::move(poly));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  for (auto& [text, poly] : keyed) polynomials_.push_back(std::move(poly));
}

std::string IdentificationKey::to_string() const {
  std::string out;
  for (const auto& poly : polynomials_) {
    if (!out.empty()) out += " ; ";
    out += poly.to_string();
  }
  if (tait_tutte_) out += " | T=" + tait_tutte_->to_string();
  return out;
}

bool IdentificationKey::matches(const IdentificationKey& other) const {
  if (!bracket_matches(other)) return false;
  return !tait_tutte_ || !other.tait_tutte_ || *tait_tutte_ == *other.tait_tutte_;
}

IdentificationKey identification_key(const PlanarDiagram& diagram) {
  const GaussCode code = gauss_code(diagram);
  if (code.components.size() != 2 || diagram.free_loops() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "identification key needs a two-component diagram");
  }
  const BracketPolynomial bracket = kauffman_bracket(diagram);
  const int w = writhe(code);
  const int lk = linking_number(code);
  // Reversing one component negates every crossing between the components.
  const LaurentPolynomial as_given = normalized_bracket(bracket, w);
  const LaurentPolynomial reversed = normalized_bracket(bracket, w - 4 * lk);

  std::optional<BivariatePolynomial> tutte;
  if (is_reduced_alternating(diagram)) {
    // The dual Tait graph, from the other color or the mirror, swaps x and y.
    BivariatePolynomial t = tutte_polynomial(tait_graph(diagram));
    BivariatePolynomial swapped = t.swap_variables();
    tutte = std::min(std::move(t), std::move(swapped),
                     [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); });
  }
  return IdentificationKey({as_given, reversed, as_given.invert_variable(),
                            reversed.invert_variable()},
                           std::move(tutte));
}

}  // namespace twobridge
