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

#include "monocount/transform.hpp"

#include <algorithm>
#include <numeric>

#include "monocount/arith.hpp"
#include "monocount/counting.hpp"
#include "text_format.hpp"

namespace monocount {

  Transformation::Transformation(std::vector<point_type> images)
      : _images(std::move(images)) {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] >= _images.size()) {
        throw InputError("image of point " + std::to_string(i + 1)
                         + " is out of range for degree "
                         + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    return Transformation(std::move(images));
  }

  Transformation
  Transformation::from_one_based(std::initializer_list<std::size_t> il) {
    return from_one_based(std::vector<std::size_t>(il));
  }

  Transformation
  Transformation::from_one_based(std::vector<std::size_t> const& v) {
    std::vector<point_type> images;
    images.reserve(v.size());
    for (auto x : v) {
      if (x == 0 || x > v.size()) {
        throw InputError("image " + std::to_string(x)
                         + " is out of range for degree "
                         + std::to_string(v.size()));
      }
      images.push_back(static_cast<point_type>(x - 1));
    }
    return Transformation(std::move(images));
  }

  bool Transformation::is_permutation() const {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  std::size_t
  TransformationHash::operator()(Transformation const& f) const noexcept {
    std::size_t seed = f.degree();
    for (auto x : f.images()) {
      seed ^= x + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw InputError("cannot compose transformations of degrees "
                       + std::to_string(f.degree()) + " and "
                       + std::to_string(g.degree()));
    }
    std::vector<point_type> images(f.degree());
    for (std::size_t i = 0; i < f.degree(); ++i) {
      images[i] = g[f[i]];
    }
    return Transformation(std::move(images));
  }

  Transformation power(Transformation const& f, std::size_t e) {
    Transformation result = Transformation::identity(f.degree());
    Transformation base   = f;
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

  namespace {

    struct RhoShape {
      std::vector<std::size_t> cycle_lengths;
      std::size_t              max_tail = 0;
    };

    // Every component of a functional digraph is a cycle with in-trees
    // hanging off it. Each vertex is walked at most twice.
    RhoShape rho_shape(Transformation const& f) {
      std::size_t const n = f.degree();
      constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
      std::vector<std::size_t> depth(n, unvisited);
      std::vector<std::size_t> pos_in_path(n, unvisited);
      std::vector<point_type>  path;
      RhoShape                 result;

      for (point_type start = 0; start < n; ++start) {
        if (depth[start] != unvisited) {
          continue;
        }
        path.clear();
        point_type v = start;
        while (depth[v] == unvisited && pos_in_path[v] == unvisited) {
          pos_in_path[v] = path.size();
          path.push_back(v);
          v = f[v];
        }
        std::size_t tail_end = path.size();
        std::size_t base     = 0;
        if (pos_in_path[v] != unvisited) {
          // v closes a new cycle.
          tail_end = pos_in_path[v];
          result.cycle_lengths.push_back(path.size() - tail_end);
          for (std::size_t j = tail_end; j < path.size(); ++j) {
            depth[path[j]] = 0;
          }
        } else {
          base = depth[v];
        }
        for (std::size_t j = 0; j < tail_end; ++j) {
          depth[path[j]] = base + (tail_end - j);
          result.max_tail = std::max(result.max_tail, depth[path[j]]);
        }
        for (auto u : path) {
          pos_in_path[u] = unvisited;
        }
      }
      std::sort(result.cycle_lengths.begin(),
                result.cycle_lengths.end(),
                std::greater<>());
      return result;
    }

    std::uint64_t lcm_of(std::vector<std::size_t> const& lengths) {
      std::uint64_t result = 1;
      for (auto len : lengths) {
        result = arith::checked_lcm(result, len);
      }
      return result;
    }

  }  // namespace

  ThresholdPeriod threshold_period(Transformation const& f) {
    if (f.degree() == 0) {
      throw InputError("threshold and period require degree at least 1");
    }
    auto shape = rho_shape(f);
    return {shape.max_tail, lcm_of(shape.cycle_lengths)};
  }

  std::size_t monogenic_monoid_size(Transformation const& f) {
    auto tp = threshold_period(f);
    return tp.threshold >= 1 ? tp.threshold + tp.period : tp.period;
  }

  IndexPeriod semigroup_index_period(Transformation const& f) {
    auto tp = threshold_period(f);
    return {std::max<std::size_t>(tp.threshold, 1), tp.period};
  }

  bool are_isomorphic_monogenic(Transformation const& f,
                                Transformation const& g) {
    return threshold_period(f) == threshold_period(g);
  }

  Transformation construct_generator(std::size_t            n,
                                     std::size_t            threshold,
                                     Transformation const& perm) {
    std::size_t const m = perm.degree();
    if (m == 0) {
      throw InputError("the permutation must have degree at least 1");
    }
    if (!perm.is_permutation()) {
      throw InputError("the transformation " + to_string(perm)
                       + " is not a permutation");
    }
    if (m > n) {
      throw InputError("the permutation degree " + std::to_string(m)
                       + " exceeds the degree " + std::to_string(n));
    }
    if (threshold > n - m) {
      throw InputError("threshold " + std::to_string(threshold)
                       + " exceeds n - m = " + std::to_string(n - m));
    }
    std::vector<point_type> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < m) {
        images[i] = perm[i];
      } else if (i < m + threshold) {
        images[i] = static_cast<point_type>(i - 1);
      } else {
        images[i] = static_cast<point_type>(i);
      }
    }
    return Transformation(std::move(images));
  }

  Transformation permutation_of_order(std::uint64_t order) {
    if (order == 0) {
      throw InputError("the order of a permutation is at least 1");
    }
    auto const parts = prime_power_decomposition(order);
    std::size_t const degree
        = std::max<std::uint64_t>(minimal_permutation_degree(order), 1);
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    point_type first = 0;
    for (auto len : parts) {
      for (point_type j = 0; j < len; ++j) {
        images[first + j] = first + (j + 1) % static_cast<point_type>(len);
      }
      first += static_cast<point_type>(len);
    }
    return Transformation(std::move(images));
  }

  std::uint64_t permutation_order(Transformation const& perm) {
    if (!perm.is_permutation()) {
      throw InputError("the transformation " + to_string(perm)
                       + " is not a permutation");
    }
    return lcm_of(rho_shape(perm).cycle_lengths);
  }

  std::vector<std::size_t> cycle_lengths(Transformation const& f) {
    return rho_shape(f).cycle_lengths;
  }

  FunctionalDigraph functional_digraph(Transformation const& f) {
    FunctionalDigraph d;
    d.num_vertices = f.degree();
    d.edges.reserve(f.degree());
    for (point_type v = 0; v < f.degree(); ++v) {
      d.edges.emplace_back(v, f[v]);
    }
    return d;
  }

  Transformation from_digraph(FunctionalDigraph const& d) {
    constexpr point_type    none = static_cast<point_type>(-1);
    std::vector<point_type> images(d.num_vertices, none);
    for (auto [u, v] : d.edges) {
      if (u >= d.num_vertices || v >= d.num_vertices) {
        throw InputError("edge endpoint is not a vertex");
      }
      if (images[u] != none) {
        throw InputError("vertex " + std::to_string(u + 1)
                         + " has more than one out-edge");
      }
      images[u] = v;
    }
    for (std::size_t u = 0; u < images.size(); ++u) {
      if (images[u] == none) {
        throw InputError("vertex " + std::to_string(u + 1)
                         + " has no out-edge");
      }
    }
    return Transformation(std::move(images));
  }

  Transformation parse_transformation(std::string_view text) {
    auto const tokens = detail::tokenize_images(text, false);
    std::vector<point_type> images;
    images.reserve(tokens.size());
    for (auto const& tok : tokens) {
      if (*tok.value == 0 || *tok.value > tokens.size()) {
        throw ParseError("image " + std::to_string(*tok.value)
                             + " is out of range for degree "
                             + std::to_string(tokens.size()),
                         tok.position);
      }
      images.push_back(static_cast<point_type>(*tok.value - 1));
    }
    return Transformation(std::move(images));
  }

  std::string to_string(Transformation const& f) {
    std::string result;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      if (i > 0) {
        result += ' ';
      }
      result += std::to_string(f[i] + 1);
    }
    return result;
  }

}  // namespace monocount
