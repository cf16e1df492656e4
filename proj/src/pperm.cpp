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

#include "monocount/pperm.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>

#include "monocount/arith.hpp"
#include "text_format.hpp"

namespace monocount {

  PartialPerm::PartialPerm(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      auto const x = _images[i];
      if (x == UNDEFINED) {
        continue;
      }
      if (x >= _images.size()) {
        throw InputError("image of point " + std::to_string(i + 1)
                         + " is out of range for degree "
                         + std::to_string(_images.size()));
      }
      if (seen[x]) {
        throw InputError("point " + std::to_string(x + 1)
                         + " is the image of more than one point");
      }
      seen[x] = true;
    }
  }

  PartialPerm PartialPerm::identity(std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    return PartialPerm(std::move(images));
  }

  PartialPerm PartialPerm::empty(std::size_t degree) {
    return PartialPerm(std::vector<point_type>(degree, UNDEFINED));
  }

  PartialPerm PartialPerm::from_one_based(std::initializer_list<std::size_t> il) {
    return from_one_based(std::vector<std::size_t>(il));
  }

  PartialPerm PartialPerm::from_one_based(std::vector<std::size_t> const& v) {
    std::vector<point_type> images;
    images.reserve(v.size());
    for (auto x : v) {
      if (x > v.size()) {
        throw InputError("image " + std::to_string(x)
                         + " is out of range for degree "
                         + std::to_string(v.size()));
      }
      images.push_back(x == 0 ? UNDEFINED : static_cast<point_type>(x - 1));
    }
    return PartialPerm(std::move(images));
  }

  std::size_t PartialPerm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(_images.begin(), _images.end(), [](point_type x) {
          return x != UNDEFINED;
        }));
  }

  std::size_t PartialPermHash::operator()(PartialPerm const& f) const noexcept {
    std::size_t seed = f.degree();
    for (auto x : f.images()) {
      seed ^= x + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  PartialPerm compose(PartialPerm const& f, PartialPerm const& g) {
    if (f.degree() != g.degree()) {
      throw InputError("cannot compose partial permutations of degrees "
                       + std::to_string(f.degree()) + " and "
                       + std::to_string(g.degree()));
    }
    std::vector<point_type> images(f.degree(), UNDEFINED);
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (f[i] != UNDEFINED) {
        images[i] = g[f[i]];
      }
    }
    return PartialPerm(std::move(images));
  }

  PartialPerm inverse(PartialPerm const& f) {
    std::vector<point_type> images(f.degree(), UNDEFINED);
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (f[i] != UNDEFINED) {
        images[f[i]] = static_cast<point_type>(i);
      }
    }
    return PartialPerm(std::move(images));
  }

  PartialPerm power(PartialPerm const& f, std::size_t e) {
    PartialPerm result = PartialPerm::identity(f.degree());
    PartialPerm base   = f;
    while (e > 0) {
      if (e & 1) {
        result = compose(result, base);
      }
      e >>= 1;
      if (e > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  bool is_idempotent(PartialPerm const& f) {
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (f[i] != UNDEFINED && f[i] != i) {
        return false;
      }
    }
    return true;
  }

  OrbitDecomposition orbit_decomposition(PartialPerm const& f) {
    std::size_t const  n = f.degree();
    std::vector<bool>  in_image(n, false);
    std::vector<bool>  visited(n, false);
    OrbitDecomposition result;
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i] != UNDEFINED) {
        in_image[f[i]] = true;
      }
    }
    // Chains start at the points outside the image.
    for (std::size_t start = 0; start < n; ++start) {
      if (in_image[start]) {
        continue;
      }
      std::size_t points = 0;
      for (point_type v = static_cast<point_type>(start); v != UNDEFINED;
           v             = f[v]) {
        visited[v] = true;
        ++points;
      }
      result.chains.push_back(points);
    }
    // Everything left lies on a cycle.
    for (std::size_t start = 0; start < n; ++start) {
      if (visited[start]) {
        continue;
      }
      std::size_t length = 0;
      point_type  v      = static_cast<point_type>(start);
      do {
        visited[v] = true;
        ++length;
        v = f[v];
      } while (v != start);
      result.cycles.push_back(length);
    }
    std::sort(result.cycles.begin(), result.cycles.end(), std::greater<>());
    std::sort(result.chains.begin(), result.chains.end(), std::greater<>());
    return result;
  }

  SnkType classify(PartialPerm const& f) {
    auto const orbits = orbit_decomposition(f);
    SnkType    result;
    if (!orbits.chains.empty()) {
      result.chain_param = orbits.chains.front();
    }
    for (auto len : orbits.cycles) {
      result.cycle_param = arith::checked_lcm(result.cycle_param, len);
    }
    return result;
  }

  PartialPerm canonical_generator(SnkType type) {
    if (type.cycle_param == 0) {
      throw InputError("the cycle parameter must be at least 1");
    }
    std::size_t const a      = type.chain_param;
    std::size_t const k      = type.cycle_param;
    std::vector<point_type> images(a + k, UNDEFINED);
    for (std::size_t i = 0; i + 1 < a; ++i) {
      images[i] = static_cast<point_type>(i + 1);
    }
    for (std::size_t j = 0; j < k; ++j) {
      images[a + j] = static_cast<point_type>(a + (j + 1) % k);
    }
    return PartialPerm(std::move(images));
  }

  bool are_isomorphic_monogenic_inverse(PartialPerm const& f,
                                        PartialPerm const& g) {
    return classify(f) == classify(g);
  }

  SnkType embed_transformation_type(ThresholdPeriod tp) {
    return {tp.threshold, tp.period};
  }

  namespace {

    // Size of the inverse monoid generated by the pairs (x, y), (x^-1, y^-1)
    // inside I_m x I_n.
    std::size_t pair_closure_size(PartialPerm const& x, PartialPerm const& y) {
      using Pair = std::pair<PartialPerm, PartialPerm>;
      std::array<Pair, 2> const gens
          = {Pair{x, y}, Pair{inverse(x), inverse(y)}};
      std::set<Pair>   seen;
      std::deque<Pair> queue;
      Pair one{PartialPerm::identity(x.degree()),
               PartialPerm::identity(y.degree())};
      seen.insert(one);
      queue.push_back(one);
      while (!queue.empty()) {
        Pair const current = queue.front();
        queue.pop_front();
        for (auto const& [gx, gy] : gens) {
          Pair next{compose(current.first, gx), compose(current.second, gy)};
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        }
      }
      return seen.size();
    }

    std::size_t closure_size(PartialPerm const& x) {
      return pair_closure_size(x, PartialPerm::empty(0));
    }

  }  // namespace

  bool chain_action_check(std::size_t j) {
    if (j < 2) {
      throw InputError("the longer chain must have at least 2 points");
    }
    // X is indexed by a = 0, ..., j - 2 standing for the pair (a, a + 1).
    auto chain = [](std::size_t points) {
      std::vector<point_type> images(points, UNDEFINED);
      for (std::size_t i = 0; i + 1 < points; ++i) {
        images[i] = static_cast<point_type>(i + 1);
      }
      return PartialPerm(std::move(images));
    };
    PartialPerm const f = chain(j);
    PartialPerm const g = chain(j - 1);

    std::size_t const       x_size = j - 1;
    std::vector<point_type> by_f(x_size, UNDEFINED);
    std::vector<point_type> by_g(x_size, UNDEFINED);
    for (point_type a = 0; a < x_size; ++a) {
      point_type const first = f[a], second = f[a + 1];
      if (first != UNDEFINED && second != UNDEFINED) {
        if (second != first + 1 || first >= x_size) {
          return false;
        }
        by_f[a] = first;
      }
      if (a < g.degree() && g[a] != UNDEFINED) {
        point_type const b = g[a];
        if (b >= x_size) {
          return false;
        }
        by_g[a] = b;
      }
    }
    PartialPerm const action_f(std::move(by_f));
    PartialPerm const action_g(std::move(by_g));
    if (action_f != action_g) {
      return false;
    }
    // The action of <g> on X is faithful iff the graph of the action
    // homomorphism is a bijection between <g> and its image.
    std::size_t const joint = pair_closure_size(g, action_g);
    return joint == closure_size(g) && joint == closure_size(action_g);
  }

  PartialPerm parse_partial_perm(std::string_view text) {
    auto const tokens = detail::tokenize_images(text, true);
    std::size_t const       n = tokens.size();
    std::vector<point_type> images;
    std::vector<bool>       seen(n, false);
    images.reserve(n);
    for (auto const& tok : tokens) {
      if (!tok.value) {
        images.push_back(UNDEFINED);
        continue;
      }
      if (*tok.value == 0 || *tok.value > n) {
        throw ParseError("image " + std::to_string(*tok.value)
                             + " is out of range for degree "
                             + std::to_string(n),
                         tok.position);
      }
      auto const x = static_cast<point_type>(*tok.value - 1);
      if (seen[x]) {
        throw ParseError("image " + std::to_string(*tok.value)
                             + " is repeated",
                         tok.position);
      }
      seen[x] = true;
      images.push_back(x);
    }
    return PartialPerm(std::move(images));
  }

  std::string to_string(PartialPerm const& f) {
    std::string result;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (i > 0) {
        result += ' ';
      }
      result += f[i] == UNDEFINED ? std::string("-") : std::to_string(f[i] + 1);
    }
    return result;
  }

}  // namespace monocount
