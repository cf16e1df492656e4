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

#ifndef MONOCOUNT_TYPES_HPP_
#define MONOCOUNT_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace monocount {

  // Points are 0-based internally; every text format is 1-based.
  using point_type = std::uint32_t;

  // Thrown when an argument violates an operation's precondition.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Thrown by a text parser. position() is the 0-based character offset of
  // the offending token in the input string.
  class ParseError : public InputError {
   public:
    ParseError(std::string const& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // Thrown when a configured size cap would be exceeded.
  class LimitExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
  };

}  // namespace monocount

#endif  // MONOCOUNT_TYPES_HPP_
