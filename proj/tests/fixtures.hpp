#pragma once

#include <string>
#include <vector>

#include "quiver.hpp"

namespace fixtures {

using clusterhodge::ExtendedExchangeMatrix;
using clusterhodge::Seed;

inline Seed make(std::size_t n, std::size_t m, const std::vector<std::vector<long>>& rows,
                 std::vector<std::string> labels = {}) {
  return Seed(ExtendedExchangeMatrix::from_rows(n, m, rows), std::move(labels));
}

inline Seed torus(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("y" + std::to_string(i + 1));
  return Seed(ExtendedExchangeMatrix(0, m, {}), labels);
}

// x mutable, y frozen
inline Seed two_dim(long a) { return make(1, 1, {{0}, {a}}, {"x", "y"}); }

// x mutable, y z frozen
inline Seed one_mutable(long a, long b) { return make(1, 2, {{0}, {a}, {b}}, {"x", "y", "z"}); }

// x y mutable with y -> x of weight a, z frozen
inline Seed two_mutable(long a, long b, long c) {
  return make(2, 1, {{0, -a}, {a, 0}, {b, c}}, {"x", "y", "z"});
}

// x sink, z source
inline Seed three_acyclic(long a, long b, long c) {
  return make(3, 0, {{0, -a, -b}, {a, 0, -c}, {b, c, 0}}, {"x", "y", "z"});
}

// x -> y (a), y -> z (b), z -> x (c)
inline Seed cyclic(long a, long b, long c) {
  return make(3, 0, {{0, a, -c}, {-a, 0, b}, {c, -b, 0}}, {"x", "y", "z"});
}

inline Seed singular_case1() { return make(2, 1, {{0, 0}, {0, 0}, {1, 1}}, {"x", "y", "z"}); }

}  // namespace fixtures
