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

#include "monocount/freeinv.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "monocount/arith.hpp"

namespace monocount {

  MunnElement make_munn_element(std::int64_t left,
                                std::int64_t right,
                                std::int64_t end) {
    if (left > 0 || right < 0 || end < left || end > right) {
      throw InputError("invalid Munn interval [" + std::to_string(left) + ", "
                       + std::to_string(right) + "] with end "
                       + std::to_string(end));
    }
    return {left, right, end};
  }

  MunnElement munn_from_word_params(WordParams params) {
    if (params.a > params.b || params.c > params.b) {
      throw InputError("x^-a x^b x^-b x^c requires a, c <= b");
    }
    auto const a = static_cast<std::int64_t>(params.a);
    auto const b = static_cast<std::int64_t>(params.b);
    auto const c = static_cast<std::int64_t>(params.c);
    return {-a, b - a, c - a};
  }

  WordParams word_params(MunnElement const& u) {
    return {static_cast<std::uint64_t>(-u.left),
            static_cast<std::uint64_t>(u.right - u.left),
            static_cast<std::uint64_t>(u.end - u.left)};
  }

  Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 'x') {
        w.push_back(Letter::generator);
      } else if (text[i] == 'X') {
        w.push_back(Letter::inverse);
      } else {
        throw ParseError(std::string("expected 'x' or 'X', found '") + text[i]
                             + "'",
                         i);
      }
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string result;
    result.reserve(w.size());
    for (auto letter : w) {
      result += letter == Letter::generator ? 'x' : 'X';
    }
    return result;
  }

  MunnElement free_identity() {
    return {0, 0, 0};
  }

  MunnElement free_generator() {
    return {0, 1, 1};
  }

  MunnElement free_eval(Word const& w) {
    MunnElement u;
    for (auto letter : w) {
      u.end += letter == Letter::generator ? 1 : -1;
      u.left  = std::min(u.left, u.end);
      u.right = std::max(u.right, u.end);
    }
    return u;
  }

  MunnElement free_multiply(MunnElement const& u, MunnElement const& v) {
    return {std::min(u.left, u.end + v.left),
            std::max(u.right, u.end + v.right),
            u.end + v.end};
  }

  MunnElement free_invert(MunnElement const& u) {
    return {u.left - u.end, u.right - u.end, -u.end};
  }

  bool is_valid(SnkElement const& e) {
    if (e.k == 0) {
      return false;
    }
    if (e.b < e.n) {
      return e.a <= e.b && e.c <= e.b;
    }
    return e.b == e.n && e.a < e.k && e.c < e.k;
  }

  std::string to_string(SnkElement const& e) {
    return "x^-" + std::to_string(e.a) + " x^" + std::to_string(e.b) + " x^-"
           + std::to_string(e.b) + " x^" + std::to_string(e.c);
  }

  SnkElement snk_reduce(MunnElement const& u, std::size_t n, std::uint64_t k) {
    if (k == 0) {
      throw InputError("the cycle parameter k must be at least 1");
    }
    auto const p = word_params(u);
    if (p.b < n) {
      return {n, k, p.a, p.b, p.c};
    }
    return {n, k, p.a % k, n, p.c % k};
  }

  namespace {
    void check_valid(SnkElement const& e) {
      if (!is_valid(e)) {
        throw InputError("not a representative of S_{" + std::to_string(e.n)
                         + "," + std::to_string(e.k) + "}: " + to_string(e));
      }
    }
  }  // namespace

  MunnElement snk_lift(SnkElement const& e) {
    check_valid(e);
    // When b = n the exponents a, c < k may exceed b, so evaluate the word
    // x^-a x^b x^-b x^c as written rather than as a Munn interval form.
    auto const a = static_cast<std::int64_t>(e.a);
    auto const b = static_cast<std::int64_t>(e.b);
    auto const c = static_cast<std::int64_t>(e.c);
    return {-a, std::max({std::int64_t(0), b - a, c - a}), c - a};
  }

  SnkElement snk_identity(std::size_t n, std::uint64_t k) {
    return snk_reduce(free_identity(), n, k);
  }

  SnkElement snk_generator(std::size_t n, std::uint64_t k) {
    return snk_reduce(free_generator(), n, k);
  }

  SnkElement snk_multiply(SnkElement const& e1, SnkElement const& e2) {
    if (e1.n != e2.n || e1.k != e2.k) {
      throw InputError("cannot multiply elements of S_{" + std::to_string(e1.n)
                       + "," + std::to_string(e1.k) + "} and S_{"
                       + std::to_string(e2.n) + "," + std::to_string(e2.k)
                       + "}");
    }
    return snk_reduce(free_multiply(snk_lift(e1), snk_lift(e2)), e1.n, e1.k);
  }

  SnkElement snk_invert(SnkElement const& e) {
    return snk_reduce(free_invert(snk_lift(e)), e.n, e.k);
  }

  SnkElement snk_normalize(SnkElement const& e) {
    check_valid(e);
    if (e.b < e.n) {
      return e;
    }
    return {e.n, e.k, 0, e.n, (e.c + e.k - e.a) % e.k};
  }

  std::vector<SnkElement> snk_elements(std::size_t n, std::uint64_t k) {
    if (k == 0) {
      throw InputError("the cycle parameter k must be at least 1");
    }
    std::vector<SnkElement> result;
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::uint64_t a = 0; a <= b; ++a) {
        for (std::uint64_t c = 0; c <= b; ++c) {
          result.push_back({n, k, a, b, c});
        }
      }
    }
    for (std::uint64_t a = 0; a < k; ++a) {
      for (std::uint64_t c = 0; c < k; ++c) {
        result.push_back({n, k, a, n, c});
      }
    }
    return result;
  }

  count_type snk_representative_count(std::size_t n, std::uint64_t k) {
    count_type total = arith::checked_mul(k, k);
    for (count_type j = 1; j <= n; ++j) {
      total = arith::checked_add(total, arith::checked_mul(j, j));
    }
    return total;
  }

  std::vector<SnkElement> snk_distinct_elements(std::size_t n, std::uint64_t k) {
    std::vector<SnkElement>            result;
    std::map<PartialPerm, std::size_t> seen;
    for (auto const& e : snk_elements(n, k)) {
      if (seen.emplace(snk_to_pperm(e), result.size()).second) {
        result.push_back(e);
      }
    }
    return result;
  }

  count_type snk_size(std::size_t n, std::uint64_t k) {
    if (k == 0) {
      throw InputError("the cycle parameter k must be at least 1");
    }
    count_type total = k;
    for (count_type j = 1; j <= n; ++j) {
      total = arith::checked_add(total, arith::checked_mul(j, j));
    }
    return total;
  }

  PartialPerm snk_to_pperm(SnkElement const& e) {
    check_valid(e);
    PartialPerm const x    = canonical_generator({e.n, e.k});
    PartialPerm const xinv = inverse(x);
    PartialPerm       result = power(xinv, e.a);
    result = compose(result, power(x, e.b));
    result = compose(result, power(xinv, e.b));
    return compose(result, power(x, e.c));
  }

  CayleyTable cayley_table(std::size_t n, std::uint64_t k, std::size_t limit) {
    if (k == 0) {
      throw InputError("the cycle parameter k must be at least 1");
    }
    if (n + k > limit) {
      throw LimitExceeded("n + k = " + std::to_string(n + k)
                          + " exceeds the Cayley table limit "
                          + std::to_string(limit));
    }
    CayleyTable table;
    table.elements = snk_distinct_elements(n, k);
    std::map<SnkElement, std::size_t> index;
    for (std::size_t i = 0; i < table.elements.size(); ++i) {
      index.emplace(snk_normalize(table.elements[i]), i);
    }
    std::size_t const size = table.elements.size();
    table.products.assign(size, std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        auto const product
            = snk_normalize(snk_multiply(table.elements[i], table.elements[j]));
        table.products[i][j] = index.at(product);
      }
    }
    return table;
  }

  std::string to_csv(CayleyTable const& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.elements.size(); ++i) {
      out << (i > 0 ? "," : "") << to_string(table.elements[i]);
    }
    out << '\n';
    for (auto const& row : table.products) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j > 0 ? "," : "") << row[j];
      }
      out << '\n';
    }
    return out.str();
  }

  std::string to_json(CayleyTable const& table) {
    nlohmann::ordered_json out;
    out["elements"] = nlohmann::ordered_json::array();
    for (auto const& e : table.elements) {
      out["elements"].push_back(to_string(e));
    }
    out["table"] = table.products;
    return out.dump() + "\n";
  }

}  // namespace monocount
