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

#include "twobridge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "twobridge/error.hpp"

namespace twobridge {
namespace {

struct Dart {
  std::size_t crossing;
  int slot;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Arc labels mapped to dense indices, with both darts of every arc.
struct ArcIndex {
  std::unordered_map<std::uint32_t, std::size_t> dense;
  std::vector<std::array<Dart, 2>> darts;
  std::vector<std::uint32_t> labels;

  std::size_t index_at(const std::vector<Crossing>& crossings, Dart d) const {
    return dense.at(crossings[d.crossing].arcs[d.slot]);
  }
  Dart other_end(const std::vector<Crossing>& crossings, Dart d) const {
    const auto& pair = darts[index_at(crossings, d)];
    return pair[0] == d ? pair[1] : pair[0];
  }
};

ArcIndex index_arcs(const std::vector<Crossing>& crossings) {
  ArcIndex index;
  std::vector<int> seen;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const std::uint32_t label = crossings[c].arcs[s];
      auto [it, inserted] = index.dense.try_emplace(label, index.darts.size());
      if (inserted) {
        index.darts.push_back({});
        index.labels.push_back(label);
        seen.push_back(0);
      }
      const std::size_t i = it->second;
      if (seen[i] == 2) {
        throw Error(ErrorCode::kMalformedDiagram,
                    "arc " + std::to_string(label) + " occurs more than twice");
      }
      index.darts[i][seen[i]++] = {c, s};
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 2) {
      throw Error(ErrorCode::kMalformedDiagram,
                  "arc " + std::to_string(index.labels[i]) + " occurs only once");
    }
  }
  return index;
}

// Follows the strand entering crossing `head.crossing` through `head.slot`.
Dart exit_dart(Dart head) { return {head.crossing, (head.slot + 2) % 4}; }

void skip_space(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

bool consume(std::string_view& s, char c) {
  skip_space(s);
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

std::uint32_t parse_label(std::string_view& s) {
  skip_space(s);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc()) throw Error(ErrorCode::kParse, "expected arc label in PD code");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, std::uint32_t free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  const ArcIndex index = index_arcs(crossings_);
  const std::size_t n = crossings_.size();

  // +1: the arc enters the crossing at this dart, -1: it leaves, 0: unknown.
  std::vector<std::array<int, 4>> role(n, {0, 0, 0, 0});
  std::vector<Dart> pending;
  const auto assign = [&](Dart d, int value) {
    int& current = role[d.crossing][d.slot];
    if (current == value) return;
    if (current != 0) {
      throw Error(ErrorCode::kMalformedDiagram,
                  "inconsistent strand orientation at crossing " + std::to_string(d.crossing + 1));
    }
    current = value;
    pending.push_back(d);
  };
  const auto propagate = [&] {
    while (!pending.empty()) {
      const Dart d = pending.back();
      pending.pop_back();
      const int value = role[d.crossing][d.slot];
      assign(index.other_end(crossings_, d), -value);
      assign({d.crossing, (d.slot + 2) % 4}, -value);
    }
  };
  for (std::size_t c = 0; c < n; ++c) {
    assign({c, 0}, +1);
    assign({c, 2}, -1);
  }
  propagate();
  // Strands that only pass over: orient arbitrarily, entering at slot 1.
  for (std::size_t c = 0; c < n; ++c) {
    if (role[c][1] == 0) {
      assign({c, 1}, +1);
      propagate();
    }
  }

  signs_.resize(n);
  over_entry_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    over_entry_[c] = role[c][1] == +1 ? 1 : 3;
    signs_[c] = over_entry_[c] == 3 ? +1 : -1;
  }
}

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  std::string_view s(text);
  skip_space(s);
  if (s.starts_with("PD")) {
    s.remove_prefix(2);
    consume(s, ':');
  }
  if (!consume(s, '[')) throw Error(ErrorCode::kParse, "PD code must start with '['");
  std::vector<Crossing> crossings;
  skip_space(s);
  if (!consume(s, ']')) {
    do {
      if (!consume(s, 'X') || !consume(s, '(')) {
        throw Error(ErrorCode::kParse, "expected X( in PD code");
      }
      Crossing x{};
      for (int i = 0; i < 4; ++i) {
        if (i > 0 && !consume(s, ',')) throw Error(ErrorCode::kParse, "expected ',' in crossing");
        x.arcs[i] = parse_label(s);
      }
      if (!consume(s, ')')) throw Error(ErrorCode::kParse, "expected ')' after crossing");
      crossings.push_back(x);
    } while (consume(s, ','));
    if (!consume(s, ']')) throw Error(ErrorCode::kParse, "PD code must end with ']'");
  }
  skip_space(s);
  if (!s.empty()) throw Error(ErrorCode::kParse, "trailing text after PD code");
  return PlanarDiagram(std::move(crossings));
}

std::string PlanarDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (c) out += ',';
    const auto& a = crossings_[c].arcs;
    out += "X(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
           "," + std::to_string(a[3]) + ")";
  }
  return out + "]";
}

std::vector<std::array<std::size_t, 2>> PlanarDiagram::strand_components() const {
  const ArcIndex index = index_arcs(crossings_);
  std::vector<std::size_t> component(index.darts.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t start = 0; start < index.darts.size(); ++start) {
    if (component[start] != SIZE_MAX) continue;
    std::size_t arc = start;
    while (component[arc] == SIZE_MAX) {
      component[arc] = next;
      // The head of an arc is the dart through which it enters a crossing.
      Dart head = index.darts[arc][0];
      const bool first_is_head =
          head.slot == 0 || head.slot == over_entry_[head.crossing];
      if (!first_is_head) head = index.darts[arc][1];
      arc = index.index_at(crossings_, exit_dart(head));
    }
    ++next;
  }
  std::vector<std::array<std::size_t, 2>> out(crossings_.size());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    out[c] = {component[index.dense.at(crossings_[c].arcs[0])],
              component[index.dense.at(crossings_[c].arcs[over_entry_[c]])]};
  }
  return out;
}

std::size_t PlanarDiagram::component_count() const noexcept {
  return gauss_code(*this).components.size() + free_loops_;
}

bool PlanarDiagram::is_connected() const {
  const std::size_t n = crossings_.size();
  if (n == 0) return free_loops_ <= 1;
  if (free_loops_ != 0) return false;
  const ArcIndex index = index_arcs(crossings_);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& pair : index.darts) parent[find(pair[0].crossing)] = find(pair[1].crossing);
  for (std::size_t c = 1; c < n; ++c) {
    if (find(c) != find(0)) return false;
  }
  return true;
}

std::size_t PlanarDiagram::face_count() const {
  const ArcIndex index = index_arcs(crossings_);
  const std::size_t n = crossings_.size();
  std::vector<char> visited(4 * n, 0);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (visited[start]) continue;
    ++faces;
    Dart d{start / 4, static_cast<int>(start % 4)};
    while (!visited[d.crossing * 4 + d.slot]) {
      visited[d.crossing * 4 + d.slot] = 1;
      const Dart across = index.other_end(crossings_, d);
      d = {across.crossing, (across.slot + 1) % 4};
    }
  }
  return faces;
}

bool PlanarDiagram::is_planar() const {
  if (crossings_.empty()) return true;
  const auto v = static_cast<long>(crossings_.size());
  return is_connected() && v - 2 * v + static_cast<long>(face_count()) == 2;
}

PlanarDiagram PlanarDiagram::mirror() const {
  std::vector<Crossing> mirrored = crossings_;
  for (auto& x : mirrored) std::swap(x.arcs[1], x.arcs[3]);
  return PlanarDiagram(std::move(mirrored), free_loops_);
}

PlanarDiagram PlanarDiagram::add_kink(std::uint32_t arc, int sign) const {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kInvalidArgument, "kink sign must be +1 or -1");
  std::uint32_t max_label = 0;
  std::optional<Dart> head;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const std::uint32_t label = crossings_[c].arcs[s];
      max_label = std::max(max_label, label);
      if (label == arc && (s == 0 || s == over_entry_[c])) head = Dart{c, s};
    }
  }
  if (!head) throw Error(ErrorCode::kNotFound, "no arc " + std::to_string(arc) + " in diagram");
  const std::uint32_t after = max_label + 1;
  const std::uint32_t loop = max_label + 2;
  std::vector<Crossing> crossings = crossings_;
  crossings[head->crossing].arcs[head->slot] = after;
  if (sign > 0) {
    crossings.push_back({{arc, after, loop, loop}});
  } else {
    crossings.push_back({{arc, loop, loop, after}});
  }
  return PlanarDiagram(std::move(crossings), free_loops_);
}

std::string GaussCode::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) out += '/';
    for (std::size_t i = 0; i < components[k].size(); ++i) {
      if (i) out += ',';
      const auto& v = components[k][i];
      if (v.strand == Strand::kUnder) out += '-';
      out += std::to_string(v.crossing);
    }
  }
  return out;
}

GaussCode gauss_code(const PlanarDiagram& diagram) {
  const auto crossings = diagram.crossings();
  std::vector<std::pair<std::uint32_t, Dart>> heads;  // (arc label, dart it enters)
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    heads.push_back({crossings[c].arcs[0], {c, 0}});
    const int slot = diagram.over_entry_slot(c);
    heads.push_back({crossings[c].arcs[slot], {c, slot}});
  }
  std::sort(heads.begin(), heads.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const auto head_of = [&](std::uint32_t label) {
    auto it = std::lower_bound(heads.begin(), heads.end(), label,
                               [](const auto& h, std::uint32_t l) { return h.first < l; });
    return it->second;
  };

  GaussCode code;
  std::unordered_map<std::uint32_t, bool> visited;
  for (const auto& [label, unused] : heads) {
    if (visited[label]) continue;
    std::vector<GaussVisit> component;
    std::uint32_t arc = label;
    while (!visited[arc]) {
      visited[arc] = true;
      const Dart head = head_of(arc);
      component.push_back({static_cast<std::uint32_t>(head.crossing + 1),
                           head.slot == 0 ? Strand::kUnder : Strand::kOver,
                           diagram.crossing_sign(head.crossing)});
      arc = crossings[head.crossing].arcs[(head.slot + 2) % 4];
    }
    code.components.push_back(std::move(component));
  }
  return code;
}

std::size_t component_count(const PlanarDiagram& diagram) { return diagram.component_count(); }

// ---------------------------------------------------------------------------
// Standard 4-plat diagram.

namespace {

enum Position : int { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

constexpr Position opposite(Position p) {
  switch (p) {
    case kNW: return kSE;
    case kSE: return kNW;
    case kNE: return kSW;
    case kSW: return kNE;
  }
  return kNW;
}

// Counterclockwise slot order, starting at an end of the under-strand. With
// the over-strand on the SW-NE diagonal the under-strand is SE-NW.
constexpr std::array<Position, 4> kSlashOverSlots{kSE, kNE, kNW, kSW};
constexpr std::array<Position, 4> kBackslashOverSlots{kSW, kSE, kNE, kNW};

// Both twist directions use crossings with the over-strand on the SW-NE
// diagonal; this makes every positive form alternating.
constexpr bool kHorizontalSlashOver = true;
constexpr bool kVerticalSlashOver = true;

struct GeoDart {
  std::size_t crossing;
  Position position;
  friend bool operator==(const GeoDart&, const GeoDart&) = default;
};

class TangleBuilder {
 public:
  void start(bool horizontal, std::size_t region) {
    const std::size_t c = add(horizontal, region);
    nw_ = {c, kNW};
    ne_ = {c, kNE};
    sw_ = {c, kSW};
    se_ = {c, kSE};
  }

  // Twist the east ends.
  void twist_horizontal(std::size_t region) {
    const std::size_t c = add(true, region);
    edges_.push_back({ne_, {c, kNW}});
    edges_.push_back({se_, {c, kSW}});
    ne_ = {c, kNE};
    se_ = {c, kSE};
  }

  // Twist the south ends.
  void twist_vertical(std::size_t region) {
    const std::size_t c = add(false, region);
    edges_.push_back({sw_, {c, kNW}});
    edges_.push_back({se_, {c, kNE}});
    sw_ = {c, kSW};
    se_ = {c, kSE};
  }

  PlanarDiagram close_numerator() {
    const std::size_t top = edges_.size();
    edges_.push_back({nw_, ne_});
    const std::size_t bottom = edges_.size();
    edges_.push_back({sw_, se_});

    const std::size_t n = slash_over_.size();
    std::vector<std::array<std::size_t, 4>> edge_at(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      for (const GeoDart& d : {edges_[e].first, edges_[e].second}) {
        edge_at[d.crossing][d.position] = e;
      }
    }

    // Number edges along each component and remember where each crossing's
    // under-strand is entered.
    std::vector<std::uint32_t> label(edges_.size(), 0);
    std::vector<std::optional<Position>> under_entry(n);
    std::uint32_t next_label = 1;
    const auto walk = [&](std::size_t first_edge, GeoDart toward) {
      std::size_t e = first_edge;
      GeoDart head = toward;
      while (label[e] == 0) {
        label[e] = next_label++;
        const auto& slots = slots_of(head.crossing);
        if (head.position == slots[0] || head.position == slots[2]) {
          under_entry[head.crossing] = head.position;
        }
        const GeoDart out{head.crossing, opposite(head.position)};
        e = edge_at[out.crossing][out.position];
        head = edges_[e].first == out ? edges_[e].second : edges_[e].first;
      }
    };
    walk(top, edges_[top].second);
    if (label[bottom] == 0) walk(bottom, edges_[bottom].second);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (label[e] == 0) walk(e, edges_[e].second);
    }

    // Crossings listed by twist region a1, a2, ..., in order of placement.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return region_[a] < region_[b]; });
    std::vector<Crossing> crossings;
    crossings.reserve(n);
    for (std::size_t c : order) {
      const auto& slots = slots_of(c);
      const int shift = *under_entry[c] == slots[0] ? 0 : 2;
      Crossing x{};
      for (int s = 0; s < 4; ++s) x.arcs[s] = label[edge_at[c][slots[(s + shift) % 4]]];
      crossings.push_back(x);
    }
    return PlanarDiagram(std::move(crossings));
  }

 private:
  std::size_t add(bool horizontal, std::size_t region) {
    slash_over_.push_back(horizontal ? kHorizontalSlashOver : kVerticalSlashOver);
    region_.push_back(region);
    return slash_over_.size() - 1;
  }

  const std::array<Position, 4>& slots_of(std::size_t c) const {
    return slash_over_[c] ? kSlashOverSlots : kBackslashOverSlots;
  }

  std::vector<bool> slash_over_;
  std::vector<std::size_t> region_;
  std::vector<std::pair<GeoDart, GeoDart>> edges_;
  GeoDart nw_{}, ne_{}, sw_{}, se_{};
};

}  // namespace

PlanarDiagram build_diagram(const ConwayForm& form) {
  // Innermost region a_n first; a_i twists horizontally for odd i.
  TangleBuilder builder;
  const auto entries = form.entries();
  for (std::size_t i = entries.size(); i-- > 0;) {
    const bool horizontal = i % 2 == 0;
    for (std::uint32_t k = 0; k < entries[i]; ++k) {
      if (i == entries.size() - 1 && k == 0) {
        builder.start(horizontal, i);
      } else if (horizontal) {
        builder.twist_horizontal(i);
      } else {
        builder.twist_vertical(i);
      }
    }
  }
  return builder.close_numerator();
}

}  // namespace twobridge
