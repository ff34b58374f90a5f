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

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "twobridge/diagram.hpp"

namespace twobridge {

/// Integer Laurent polynomial in one variable A. Zero coefficients are never
/// stored.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(Coefficient coefficient, int exponent);
  static LaurentPolynomial one() { return monomial(1, 0); }

  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
  Coefficient coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  LaurentPolynomial pow(unsigned exponent) const;

  /// A -> A^-1.
  LaurentPolynomial invert_variable() const;

  std::complex<double> evaluate(std::complex<double> a) const;

  /// Terms by ascending exponent as "coef*A^exp" joined by '+', e.g.
  /// "-1*A^-4+-1*A^4". The zero polynomial prints as "0".
  std::string to_string() const;
  static LaurentPolynomial parse(const std::string& text);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(int exponent, Coefficient coefficient);

  std::map<int, Coefficient> terms_;
};

using BracketPolynomial = LaurentPolynomial;

/// Largest diagram accepted by the exhaustive state sum.
inline constexpr std::size_t kMaxBracketCrossings = 20;

/// Kauffman bracket by summing over all 2^c smoothings, with loop value
/// -A^2 - A^-2 and the crossingless unknot normalized to 1. Throws kCapacity
/// above kMaxBracketCrossings.
BracketPolynomial kauffman_bracket(const PlanarDiagram& diagram);

int writhe(const GaussCode& code);

/// Half the signed count of crossings between the two components. Throws
/// kInvalidArgument unless the code has exactly two components.
int linking_number(const GaussCode& code);

/// (-A^3)^-w <D> for an oriented diagram with writhe w.
LaurentPolynomial normalized_bracket(const BracketPolynomial& bracket, int writhe);

/// Integer polynomial in x and y.
class BivariatePolynomial {
 public:
  using Coefficient = std::int64_t;

  const std::map<std::pair<int, int>, Coefficient>& terms() const noexcept { return terms_; }
  Coefficient coefficient(int x_exponent, int y_exponent) const;
  void add_term(int x_exponent, int y_exponent, Coefficient coefficient);

  /// p(y, x).
  BivariatePolynomial swap_variables() const;
  Coefficient evaluate(Coefficient x, Coefficient y) const;

  /// Terms by ascending (x, y) exponents as "coef*x^i*y^j" joined by '+'.
  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<std::pair<int, int>, Coefficient> terms_;
};

/// Checkerboard graph of a connected diagram: one vertex per face of one
/// color, one edge per crossing.
struct TaitGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Graph on the faces that contain corner 0 of the first crossing. Throws
/// kMalformedDiagram if the diagram is not connected and planar.
TaitGraph tait_graph(const PlanarDiagram& diagram);

/// Tutte polynomial by summing over all edge subsets. Throws kCapacity above
/// kMaxBracketCrossings edges.
BivariatePolynomial tutte_polynomial(const TaitGraph& graph);

/// Over- and under-passes alternate along every component.
bool is_alternating(const PlanarDiagram& diagram);

/// Alternating, connected, planar and without nugatory crossings.
bool is_reduced_alternating(const PlanarDiagram& diagram);

/// Invariant of a two-component link diagram used to look links up in a
/// table. It holds the normalized brackets for both relative orientations of
/// the components, closed under A -> A^-1, and for reduced alternating
/// diagrams the Tutte polynomial of the Tait graph, symmetrized under
/// x <-> y. The latter is unchanged by flypes, which is what separates
/// links the bracket alone cannot, such as L(98,27) and L(98,41).
class IdentificationKey {
 public:
  IdentificationKey(std::vector<LaurentPolynomial> polynomials,
                    std::optional<BivariatePolynomial> tait_tutte = std::nullopt);

  /// Distinct polynomials sorted by their text form.
  const std::vector<LaurentPolynomial>& polynomials() const noexcept { return polynomials_; }
  const std::optional<BivariatePolynomial>& tait_tutte() const noexcept { return tait_tutte_; }

  /// Bracket polynomials joined by " ; ", then " | T=" and the Tutte
  /// polynomial when present.
  std::string to_string() const;

  /// Equal brackets, and equal Tutte polynomials unless one is absent.
  bool matches(const IdentificationKey& other) const;
  bool bracket_matches(const IdentificationKey& other) const {
    return polynomials_ == other.polynomials_;
  }

  friend bool operator==(const IdentificationKey&, const IdentificationKey&) = default;

 private:
  std::vector<LaurentPolynomial> polynomials_;
  std::optional<BivariatePolynomial> tait_tutte_;
};

/// Throws kInvalidArgument unless the diagram has two components.
IdentificationKey identification_key(const PlanarDiagram& diagram);

}  // namespace twobridge
