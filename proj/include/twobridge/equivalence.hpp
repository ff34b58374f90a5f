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

// Schubert equivalence of 2-bridge links, quotiented by mirror image and
// by orientation of the components.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

/// q^-1 mod p in (0, p). Throws kNotCoprime when gcd(q, p) != 1 and
/// kInvalidArgument when p < 2.
std::uint64_t mod_inverse(std::int64_t q, std::uint64_t p);

struct LinkPair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  friend bool operator==(const LinkPair&, const LinkPair&) = default;
};

/// Schubert's criterion for unoriented links: p == p' and q' = q^{+-1} mod p.
bool unoriented_equivalent(const LinkPair& a, const LinkPair& b);

/// Result of reversing one component of L(p, q): L(p, q - p), which is the
/// mirror of L(p, p - q).
struct ReversedLink {
  std::int64_t oriented_q;  // q - p, as written before renormalizing
  LinkPair mirror_of;       // (p, p - q)
};
ReversedLink reverse_orientation(const LinkPair& link);

/// {q, q^-1, p-q, (p-q)^-1} mod p, sorted and deduplicated.
std::vector<std::uint64_t> class_members(std::uint64_t p, std::uint64_t q);

class LinkClass {
 public:
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t canonical_q() const noexcept { return members_.front(); }
  const std::vector<std::uint64_t>& members() const noexcept { return members_; }

  bool contains(std::uint64_t q) const noexcept;

  /// q^-1 == p - q, so the quotient by mirror image collapses the two
  /// Schubert pairs into one.
  bool mirror_degenerate() const noexcept { return mirror_degenerate_; }

  /// Oriented links (with mirrors) represented by one unoriented class: 2 if
  /// q^2 == 1 mod p (palindromic expansions exist), otherwise 4.
  int oriented_count() const noexcept { return palindromic_ ? 2 : 4; }

  const std::optional<ConwayForm>& chosen_form() const noexcept { return chosen_form_; }
  void set_chosen_form(ConwayForm form);

  friend bool operator==(const LinkClass& a, const LinkClass& b) {
    return a.p_ == b.p_ && a.members_ == b.members_;
  }

 private:
  friend LinkClass canonicalize(std::uint64_t p, std::uint64_t q);

  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> members_;
  bool mirror_degenerate_ = false;
  bool palindromic_ = false;
  std::optional<ConwayForm> chosen_form_;
};

/// Throws kInvalidArgument unless p is even and 0 < q < p, kNotCoprime unless
/// gcd(p, q) == 1. The canonical representative is the smallest member.
LinkClass canonicalize(std::uint64_t p, std::uint64_t q);

}  // namespace twobridge
