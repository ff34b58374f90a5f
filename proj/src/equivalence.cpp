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

#include "twobridge/equivalence.hpp"

#include <algorithm>

#include "twobridge/error.hpp"

namespace twobridge {

std::uint64_t mod_inverse(std::int64_t q, std::uint64_t p) {
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2");
  const auto modulus = static_cast<__int128>(p);
  __int128 r0 = modulus;
  __int128 r1 = static_cast<__int128>(q) % modulus;
  if (r1 < 0) r1 += modulus;
  __int128 s0 = 0;
  __int128 s1 = 1;
  while (r1 != 0) {
    const __int128 quotient = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - quotient * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - quotient * s1);
  }
  if (r0 != 1) {
    throw Error(ErrorCode::kNotCoprime,
                std::to_string(q) + " is not invertible mod " + std::to_string(p));
  }
  s0 %= modulus;
  if (s0 < 0) s0 += modulus;
  return static_cast<std::uint64_t>(s0);
}

bool unoriented_equivalent(const LinkPair& a, const LinkPair& b) {
  if (a.p != b.p) return false;
  const std::uint64_t p = a.p;
  if (a.q % p == b.q % p) return true;
  return static_cast<unsigned __int128>(a.q) * b.q % p == 1 % p;
}

ReversedLink reverse_orientation(const LinkPair& link) {
  if (link.p == 0 || link.q == 0) {
    throw Error(ErrorCode::kInvalidArgument, "orientation reversal needs p, q > 0");
  }
  const auto p = static_cast<std::int64_t>(link.p);
  const auto q = static_cast<std::int64_t>(link.q);
  const std::int64_t reduced = ((p - q) % p + p) % p;
  return {q - p, {link.p, static_cast<std::uint64_t>(reduced)}};
}

std::vector<std::uint64_t> class_members(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t inverse = mod_inverse(static_cast<std::int64_t>(q), p);
  std::vector<std::uint64_t> members{q % p, inverse, (p - q % p) % p, (p - inverse) % p};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool LinkClass::contains(std::uint64_t q) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), q);
}

void LinkClass::set_chosen_form(ConwayForm form) {
  const Fraction value = eval_cf(form);
  if (value.p() != p_ || !contains(value.q())) {
    throw Error(ErrorCode::kInvalidArgument, "form " + form.to_string() + " evaluates to " +
                                                 value.to_string() + ", outside the class of p=" +
                                                 std::to_string(p_));
  }
  chosen_form_ = std::move(form);
}

LinkClass canonicalize(std::uint64_t p, std::uint64_t q) {
  if (p < 2 || p % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "link classes need an even p, got " + std::to_string(p));
  }
  if (q == 0 || q >= p) {
    throw Error(ErrorCode::kInvalidArgument, "link classes need 0 < q < p");
  }
  LinkClass result;
  result.p_ = p;
  result.members_ = class_members(p, q);
  const auto square = static_cast<unsigned __int128>(q) * q % p;
  result.palindromic_ = square == 1 % p;
  result.mirror_degenerate_ = square == p - 1;
  return result;
}

}  // namespace twobridge
