// Copyright 2026 The monocount Authors
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

#ifndef MONOCOUNT_ARITH_HPP_
#define MONOCOUNT_ARITH_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace monocount::arith {

  inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t result;
    if (__builtin_add_overflow(x, y, &result)) {
      throw std::overflow_error("64-bit overflow in addition");
    }
    return result;
  }

  inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t result;
    if (__builtin_mul_overflow(x, y, &result)) {
      throw std::overflow_error("64-bit overflow in multiplication");
    }
    return result;
  }

  inline std::uint64_t checked_lcm(std::uint64_t x, std::uint64_t y) {
    if (x == 0 || y == 0) {
      return 0;
    }
    return checked_mul(x / std::gcd(x, y), y);
  }

}  // namespace monocount::arith

#endif  // MONOCOUNT_ARITH_HPP_
