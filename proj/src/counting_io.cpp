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

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "monocount/counting.hpp"

namespace monocount {

  namespace {
    std::string optional_field(std::optional<count_type> const& value) {
      return value ? std::to_string(*value) : std::string();
    }

    nlohmann::ordered_json optional_json(std::optional<count_type> const& v) {
      return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }
  }  // namespace

  std::string to_csv(CountTable const& table) {
    std::ostringstream out;
    out << "n,s,t,i,semi_t,semi_i\n";
    for (auto const& row : table) {
      out << row.n << ',' << row.element_orders << ',' << row.monoids << ','
          << row.inverse_monoids << ',' << optional_field(row.semigroups)
          << ',' << optional_field(row.inverse_semigroups) << '\n';
    }
    return out.str();
  }

  std::string to_json(CountTable const& table) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
      auto const&            row = table[r];
      nlohmann::ordered_json obj;
      obj["n"]      = row.n;
      obj["s"]      = row.element_orders;
      obj["t"]      = row.monoids;
      obj["i"]      = row.inverse_monoids;
      obj["semi_t"] = optional_json(row.semigroups);
      obj["semi_i"] = optional_json(row.inverse_semigroups);
      out << obj.dump() << (r + 1 < table.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return out.str();
  }

  std::string to_markdown(CountTable const& table) {
    std::vector<std::vector<std::string>> rows(4);
    rows[0].push_back("n");
    rows[1].push_back("s");
    rows[2].push_back("t");
    rows[3].push_back("i");
    for (auto const& row : table) {
      rows[0].push_back(std::to_string(row.n));
      rows[1].push_back(std::to_string(row.element_orders));
      rows[2].push_back(std::to_string(row.monoids));
      rows[3].push_back(std::to_string(row.inverse_monoids));
    }
    std::size_t const        cols = rows[0].size();
    std::vector<std::size_t> width(cols, 3);
    for (auto const& r : rows) {
      for (std::size_t c = 0; c < cols; ++c) {
        width[c] = std::max(width[c], r[c].size());
      }
    }
    auto emit = [&](std::ostringstream& out, std::vector<std::string> const& r) {
      out << '|';
      for (std::size_t c = 0; c < cols; ++c) {
        out << ' ' << std::string(width[c] - r[c].size(), ' ') << r[c] << " |";
      }
      out << '\n';
    };
    std::ostringstream out;
    emit(out, rows[0]);
    out << '|';
    for (std::size_t c = 0; c < cols; ++c) {
      out << ' ' << std::string(width[c] - 1, '-') << ": |";
    }
    out << '\n';
    for (std::size_t r = 1; r < rows.size(); ++r) {
      emit(out, rows[r]);
    }
    return out.str();
  }

  std::string format_table(CountTable const& table, TableFormat format) {
    switch (format) {
      case TableFormat::csv:
        return to_csv(table);
      case TableFormat::json:
        return to_json(table);
      case TableFormat::markdown:
        return to_markdown(table);
    }
    return {};
  }

}  // namespace monocount
