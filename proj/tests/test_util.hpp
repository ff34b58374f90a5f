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

// Shared test helpers.

#pragma once

#include "doctest.h"
#include "twobridge/error.hpp"

template <typename F>
twobridge::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const twobridge::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return twobridge::ErrorCode::kInvalidArgument;
}
