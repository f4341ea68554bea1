#include "quiver.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "error.hpp"

namespace clusterhodge {

namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

void require_mutable(const ExtendedExchangeMatrix& matrix, std::size_t k) {
  if (k >= matrix.mutable_count()) {
    throw Error(ErrorCode::InvalidIndex,
                "index " + std::to_string(k + 1) + " is not a mutable vertex (n = " +
                    std::to_string(matrix.mutable_count()) + ")");
  }
}

}  // namespace

ExtendedExchangeMatrix::ExtendedExchangeMatrix(std::size_t mutable_count, std::size_t frozen_count,
                                               std::vector<Integer> row_major_entries)
    : n_(mutable_count), m_(frozen_count), entries_(std::move(row_major_entries)) {
  if (n_ + m_ == 0) {
    throw Error(ErrorCode::Parse, "a seed needs at least one vertex");
  }
  if (entries_.size() != (n_ + m_) * n_) {
    throw Error(ErrorCode::Parse, "matrix must have (n+m) x n = " + std::to_string(n_ + m_) + " x " +
                                      std::to_string(n_) + " entries");
  }
  if (!principal_part_skew_symmetric()) {
    throw Error(ErrorCode::NotSkewSymmetric, "principal part of the exchange matrix is not skew-symmetric");
  }
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::from_rows(std::size_t mutable_count, std::size_t frozen_count,
                                                         const std::vector<std::vector<long>>& rows) {
  if (rows.size() != mutable_count + frozen_count) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(mutable_count + frozen_count) + " rows, got " +
                                      std::to_string(rows.size()));
  }
  std::vector<Integer> entries;
  entries.reserve(rows.size() * mutable_count);
  for (const auto& row : rows) {
    if (row.size() != mutable_count) {
      throw Error(ErrorCode::Parse, "every row must have n = " + std::to_string(mutable_count) + " entries");
    }
    for (long v : row) entries.emplace_back(v);
  }
  return ExtendedExchangeMatrix(mutable_count, frozen_count, std::move(entries));
}

bool ExtendedExchangeMatrix::principal_part_skew_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& matrix, std::size_t k) {
  require_mutable(matrix, k);
  const std::size_t n = matrix.mutable_count();
  const std::size_t rows = matrix.vertex_count();
  std::vector<Integer> out(matrix.entries().size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& b = matrix.at(i, j);
      if (i == k || j == k) {
        out[i * n + j] = -b;
      } else {
        const Integer& bik = matrix.at(i, k);
        const Integer& bkj = matrix.at(k, j);
        out[i * n + j] = b + positive_part(bik) * positive_part(bkj) - negative_part(bik) * negative_part(bkj);
      }
    }
  }
  return ExtendedExchangeMatrix(n, matrix.frozen_count(), std::move(out));
}

ExchangeRelation exchange_relation(const ExtendedExchangeMatrix& matrix, std::size_t k) {
  require_mutable(matrix, k);
  ExchangeRelation rel;
  rel.positive.reserve(matrix.vertex_count());
  rel.negative.reserve(matrix.vertex_count());
  for (std::size_t j = 0; j < matrix.vertex_count(); ++j) {
    rel.positive.push_back(positive_part(matrix.at(j, k)));
    rel.negative.push_back(-negative_part(matrix.at(j, k)));
  }
  return rel;
}

std::vector<std::string> default_labels(std::size_t mutable_count, std::size_t frozen_count) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < mutable_count; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < frozen_count; ++i) labels.push_back("y" + std::to_string(i + 1));
  return labels;
}

Seed::Seed(ExtendedExchangeMatrix matrix, std::vector<std::string> labels)
    : matrix_(matrix), initial_(std::move(matrix)), labels_(std::move(labels)) {
  if (labels_.empty()) labels_ = default_labels(matrix_.mutable_count(), matrix_.frozen_count());
  if (labels_.size() != matrix_.vertex_count()) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(matrix_.vertex_count()) + " labels, got " +
                                      std::to_string(labels_.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::Parse, "labels must be non-empty");
    if (!seen.insert(l).second) throw Error(ErrorCode::Parse, "duplicate label '" + l + "'");
  }
}

std::optional<std::size_t> Seed::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Seed Seed::mutated(std::size_t k) const {
  Seed out = *this;
  out.matrix_ = mutate_matrix(matrix_, k);
  out.history_.push_back(k);
  return out;
}

Seed Seed::permuted(const std::vector<std::size_t>& order) const {
  const std::size_t n = mutable_count();
  const std::size_t total = vertex_count();
  std::vector<bool> used(total, false);
  if (order.size() != total) throw Error(ErrorCode::InvalidIndex, "permutation has wrong length");
  for (std::size_t i = 0; i < total; ++i) {
    if (order[i] >= total || used[order[i]]) throw Error(ErrorCode::InvalidIndex, "not a permutation");
    if ((i < n) != (order[i] < n)) {
      throw Error(ErrorCode::InvalidIndex, "permutation must keep mutable vertices in the mutable block");
    }
    used[order[i]] = true;
  }
  std::vector<Integer> entries(total * n);
  std::vector<std::string> labels(total);
  for (std::size_t i = 0; i < total; ++i) {
    labels[i] = labels_[order[i]];
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = matrix_.at(order[i], order[j]);
  }
  return Seed(ExtendedExchangeMatrix(n, frozen_count(), std::move(entries)), std::move(labels));
}

Seed freeze(const Seed& seed, std::vector<std::size_t> to_freeze) {
  const std::size_t n = seed.mutable_count();
  std::sort(to_freeze.begin(), to_freeze.end());
  if (std::adjacent_find(to_freeze.begin(), to_freeze.end()) != to_freeze.end()) {
    throw Error(ErrorCode::InvalidIndex, "freeze set contains a repeated index");
  }
  for (std::size_t k : to_freeze) require_mutable(seed.matrix(), k);
  if (to_freeze.empty()) return seed;

  std::vector<std::size_t> rows;  // old row index for each new row
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(to_freeze.begin(), to_freeze.end(), i)) rows.push_back(i);
  }
  const std::size_t new_n = rows.size();
  rows.insert(rows.end(), to_freeze.begin(), to_freeze.end());
  for (std::size_t f = n; f < seed.vertex_count(); ++f) rows.push_back(f);

  std::vector<Integer> entries;
  entries.reserve(rows.size() * new_n);
  std::vector<std::string> labels;
  for (std::size_t r : rows) {
    labels.push_back(seed.labels()[r]);
    for (std::size_t c = 0; c < new_n; ++c) entries.push_back(seed.matrix().at(r, rows[c]));
  }
  return Seed(ExtendedExchangeMatrix(new_n, seed.frozen_count() + to_freeze.size(), std::move(entries)),
              std::move(labels));
}

QuiverGraph QuiverGraph::from_seed(const Seed& seed) {
  const auto& b = seed.matrix();
  const std::size_t n = b.mutable_count();
  QuiverGraph g;
  g.mutable_.assign(b.vertex_count(), false);
  for (std::size_t i = 0; i < n; ++i) g.mutable_[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b.at(i, j) > 0) g.edges_.push_back({i, j, b.at(i, j)});
    }
  }
  for (std::size_t f = n; f < b.vertex_count(); ++f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (b.at(f, i) > 0) g.edges_.push_back({f, i, b.at(f, i)});
      if (b.at(f, i) < 0) g.edges_.push_back({i, f, Integer(-b.at(f, i))});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& l, const Edge& r) { return std::tie(l.from, l.to) < std::tie(r.from, r.to); });
  return g;
}

std::vector<Edge> QuiverGraph::mutable_edges() const {
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (mutable_[e.from] && mutable_[e.to]) out.push_back(e);
  }
  return out;
}

std::vector<Edge> separating_edges(const QuiverGraph& graph) {
  const auto edges = graph.mutable_edges();
  const std::size_t v = graph.vertex_count();
  // reach[i][j]: j reachable from i along >= 1 mutable edge
  std::vector<std::vector<bool>> reach(v, std::vector<bool>(v, false));
  for (const auto& e : edges) reach[e.from][e.to] = true;
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < v; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<bool> on_cycle(v), after_cycle(v), before_cycle(v);
  for (std::size_t i = 0; i < v; ++i) on_cycle[i] = reach[i][i];
  for (std::size_t i = 0; i < v; ++i) {
    after_cycle[i] = on_cycle[i];
    before_cycle[i] = on_cycle[i];
    for (std::size_t c = 0; c < v; ++c) {
      if (!on_cycle[c]) continue;
      if (reach[c][i]) after_cycle[i] = true;
      if (reach[i][c]) before_cycle[i] = true;
    }
  }
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (!(after_cycle[e.from] && before_cycle[e.to])) out.push_back(e);
  }
  return out;
}

std::size_t LouiseTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

LouiseTree louise_decompose(const Seed& seed, std::optional<std::pair<std::size_t, std::size_t>> preferred) {
  const auto graph = QuiverGraph::from_seed(seed);
  if (graph.mutable_edges().empty()) return LouiseTree{seed, std::nullopt, {}};

  const auto candidates = separating_edges(graph);
  if (candidates.empty()) {
    throw Error(ErrorCode::NotLouise, "mutable subgraph has edges but no separating edge; mutate first");
  }
  Edge chosen = candidates.front();
  if (preferred) {
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](const Edge& e) {
      return (e.from == preferred->first && e.to == preferred->second) ||
             (e.from == preferred->second && e.to == preferred->first);
    });
    if (it == candidates.end()) {
      throw Error(ErrorCode::Precondition, "requested split edge is not a separating edge");
    }
    chosen = *it;
  }
  LouiseTree node{seed, chosen, {}};
  node.children.push_back(louise_decompose(freeze(seed, {chosen.from})));
  node.children.push_back(louise_decompose(freeze(seed, {chosen.to})));
  node.children.push_back(louise_decompose(freeze(seed, {chosen.from, chosen.to})));
  return node;
}

bool is_cyclic_triangle(const ExtendedExchangeMatrix& matrix) {
  if (matrix.mutable_count() != 3) return false;
  const int s01 = sgn(matrix.at(0, 1));
  const int s12 = sgn(matrix.at(1, 2));
  const int s20 = sgn(matrix.at(2, 0));
  return s01 != 0 && s01 == s12 && s12 == s20;
}

namespace {

Integer principal_weight_sum(const ExtendedExchangeMatrix& m) {
  Integer total = 0;
  for (std::size_t i = 0; i < m.mutable_count(); ++i)
    for (std::size_t j = i + 1; j < m.mutable_count(); ++j) total += abs_value(m.at(i, j));
  return total;
}

}  // namespace

FiniteTypeResult finite_type_check(const Seed& seed) {
  if (seed.mutable_count() != 3 || seed.frozen_count() != 0) {
    throw Error(ErrorCode::Precondition, "finite-type check needs exactly 3 mutable and 0 frozen vertices");
  }
  Seed current = seed;
  std::vector<std::size_t> path;
  while (is_cyclic_triangle(current.matrix())) {
    const Integer here = principal_weight_sum(current.matrix());
    std::optional<std::size_t> best;
    Integer best_sum;
    for (std::size_t k = 0; k < 3; ++k) {
      Integer s = principal_weight_sum(mutate_matrix(current.matrix(), k));
      if (!best || s < best_sum) {
        best = k;
        best_sum = s;
      }
    }
    if (best_sum >= here) {
      // Cyclic local minimum: every weight is >= 2 and ab > c, bc > a, ca > b
      // hold, so every further mutation stays cyclic.
      return {FiniteTypeVerdict::NotFiniteType, current, path};
    }
    current = current.mutated(*best);
    path.push_back(*best);
  }
  return {FiniteTypeVerdict::FiniteLouise, current, path};
}

VarietyPresentation isolated_presentation(const Seed& seed) {
  const auto& b = seed.matrix();
  const std::size_t n = b.mutable_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b.at(i, j) != 0) throw Error(ErrorCode::Precondition, "seed is not isolated: mutable subgraph has edges");

  VarietyPresentation pres;
  pres.mutable_labels.assign(seed.labels().begin(), seed.labels().begin() + static_cast<std::ptrdiff_t>(n));
  pres.frozen_labels.assign(seed.labels().begin() + static_cast<std::ptrdiff_t>(n), seed.labels().end());
  for (std::size_t i = 0; i < n; ++i) {
    auto rel = exchange_relation(b, i);
    PresentationEquation eq{i, {}, {}};
    eq.positive.assign(rel.positive.begin() + static_cast<std::ptrdiff_t>(n), rel.positive.end());
    eq.negative.assign(rel.negative.begin() + static_cast<std::ptrdiff_t>(n), rel.negative.end());
    pres.equations.push_back(std::move(eq));
  }
  return pres;
}

}  // namespace clusterhodge
