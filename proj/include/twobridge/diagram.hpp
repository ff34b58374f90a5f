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

// Planar diagrams (PD codes), Gauss codes and the standard 2-bridge diagram
// of a Conway form.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

/// One PD crossing: four arc labels listed counterclockwise, starting from the
/// incoming under-strand. The under-strand runs slot 0 -> slot 2 and the
/// over-strand joins slots 1 and 3.
struct Crossing {
  std::array<std::uint32_t, 4> arcs;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram given by its PD code. Arc labels are arbitrary
/// integers, each of which must occur in exactly two slots. Closed loops
/// without crossings are counted separately.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Throws kMalformedDiagram if an arc does not occur exactly twice or the
  /// strand orientations implied by the under-strands are inconsistent.
  explicit PlanarDiagram(std::vector<Crossing> crossings, std::uint32_t free_loops = 0);

  /// The crossingless unknot.
  static PlanarDiagram unknot() { return PlanarDiagram({}, 1); }

  /// Parses "[X(1,4,2,5),X(3,6,4,1),...]", optionally prefixed by "PD:".
  static PlanarDiagram parse(const std::string& text);
  /// Inverse of parse without the "PD:" prefix. No whitespace.
  std::string to_string() const;

  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t arc_count() const noexcept { return 2 * crossings_.size(); }
  std::uint32_t free_loops() const noexcept { return free_loops_; }

  /// +1 for a right-handed crossing, -1 for a left-handed one.
  int crossing_sign(std::size_t crossing) const { return signs_.at(crossing); }

  /// Slot through which the over-strand enters the crossing (1 or 3).
  int over_entry_slot(std::size_t crossing) const { return over_entry_.at(crossing); }

  /// Number of closed strands, including free loops.
  std::size_t component_count() const noexcept;

  /// Component index of every crossing strand: for crossing i, the pair
  /// (component of the under-strand, component of the over-strand).
  std::vector<std::array<std::size_t, 2>> strand_components() const;

  /// True if the underlying 4-valent graph is connected.
  bool is_connected() const;
  /// Number of faces of the rotation system given by the PD code.
  std::size_t face_count() const;
  /// Connected and V - E + F == 2.
  bool is_planar() const;

  /// Every crossing switched.
  PlanarDiagram mirror() const;

  /// Inserts a Reidemeister-I kink of the given sign (+1 or -1) on `arc`.
  PlanarDiagram add_kink(std::uint32_t arc, int sign) const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::uint32_t free_loops_ = 0;
  std::vector<int> signs_;
  std::vector<int> over_entry_;
};

enum class Strand { kOver, kUnder };

struct GaussVisit {
  std::uint32_t crossing;  // 1-based index into the PD crossing list
  Strand strand;
  int sign;
  friend bool operator==(const GaussVisit&, const GaussVisit&) = default;
};

struct GaussCode {
  std::vector<std::vector<GaussVisit>> components;

  /// "1,-2,3/-1,2,-3": over visits positive, under visits negative,
  /// components separated by '/'.
  std::string to_string() const;
};

/// Standard alternating 4-plat diagram of the 2-bridge link with the given
/// Conway form. Twist regions a1, a3, ... are horizontal and a2, a4, ... are
/// vertical; the numerator closure joins the top and bottom ends. Arcs are
/// numbered along the component through the top bridge first, then along the
/// component through the bottom bridge.
PlanarDiagram build_diagram(const ConwayForm& form);

/// Traverses every component starting from its lowest arc label in the
/// diagram's orientation.
GaussCode gauss_code(const PlanarDiagram& diagram);

std::size_t component_count(const PlanarDiagram& diagram);

}  // namespace twobridge
