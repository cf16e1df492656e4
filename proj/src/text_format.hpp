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

#ifndef MONOCOUNT_SRC_TEXT_FORMAT_HPP_
#define MONOCOUNT_SRC_TEXT_FORMAT_HPP_

// Tokenizer shared by the Transformation and PartialPerm text formats:
// entries separated by exactly one space, each a decimal >= 1 or (when
// allowed) "-" for an undefined image.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocount/types.hpp"

namespace monocount::detail {

  struct ImageToken {
    std::size_t                  position;
    std::optional<std::uint64_t> value;  // nullopt for "-"
  };

  inline std::vector<ImageToken> tokenize_images(std::string_view text,
                                                 bool allow_undefined) {
    constexpr std::uint64_t max_value = std::uint64_t(1) << 32;
    std::vector<ImageToken> tokens;
    if (text.empty()) {
      throw ParseError("empty input", 0);
    }
    std::size_t i = 0;
    while (true) {
      std::size_t const start = i;
      if (i >= text.size()) {
        throw ParseError("expected an image", i);
      }
      if (text[i] == '-' && allow_undefined) {
        tokens.push_back({start, std::nullopt});
        ++i;
      } else if (text[i] >= '0' && text[i] <= '9') {
        std::uint64_t value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (value > max_value) {
            throw ParseError("image out of range", start);
          }
          ++i;
        }
        tokens.push_back({start, value});
      } else {
        throw ParseError(std::string("unexpected character '") + text[i] + "'",
                         i);
      }
      if (i == text.size()) {
        return tokens;
      }
      if (text[i] != ' ') {
        throw ParseError(std::string("unexpected character '") + text[i] + "'",
                         i);
      }
      ++i;
    }
  }

}  // namespace monocount::detail

#endif  // MONOCOUNT_SRC_TEXT_FORMAT_HPP_
