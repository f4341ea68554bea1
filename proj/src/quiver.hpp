#pragma once

// Seeds, extended exchange matrices, mutation, freezing and the Louise
// decomposition. Indices are 0-based throughout; mutable vertices occupy
// rows/columns [0, n), frozen vertices rows [n, n+m).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusterhodge {

using Integer = mpz_class;

/// [x]_+ = max(x, 0)
inline Integer positive_part(const Integer& v) { return v > 0 ? v : Integer(0); }
/// [x]_- = min(x, 0)
inline Integer negative_part(const Integer& v) { return v < 0 ? v : Integer(0); }

/// (n+m) x n integer matrix whose top n x n block is skew-symmetric.
class ExtendedExchangeMatrix {
 public:
  ExtendedExchangeMatrix(std::size_t mutable_count, std::size_t frozen_count,
                         std::vector<Integer> row_major_entries);

  static ExtendedExchangeMatrix from_rows(std::size_t mutable_count, std::size_t frozen_count,
                                          const std::vector<std::vector<long>>& rows);

  std::size_t mutable_count() const noexcept { return n_; }
  std::size_t frozen_count() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return n_ + m_; }

  const Integer& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  /// Principal part only; rows below n are ignored.
  bool principal_part_skew_symmetric() const;

  friend bool operator==(const ExtendedExchangeMatrix&, const ExtendedExchangeMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Integer> entries_;
};

ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& matrix, std::size_t k);

/// The two monomials of x_k x_k' = prod x_j^{[B_jk]_+} + prod x_j^{-[B_jk]_-},
/// as exponent vectors over all n+m variables.
struct ExchangeRelation {
  std::vector<Integer> positive;
  std::vector<Integer> negative;
};

ExchangeRelation exchange_relation(const ExtendedExchangeMatrix& matrix, std::size_t k);

class Seed {
 public:
  explicit Seed(ExtendedExchangeMatrix matrix, std::vector<std::string> labels = {});

  const ExtendedExchangeMatrix& matrix() const noexcept { return matrix_; }
  const ExtendedExchangeMatrix& initial_matrix() const noexcept { return initial_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::size_t>& history() const noexcept { return history_; }

  std::size_t mutable_count() const noexcept { return matrix_.mutable_count(); }
  std::size_t frozen_count() const noexcept { return matrix_.frozen_count(); }
  std::size_t vertex_count() const noexcept { return matrix_.vertex_count(); }

  std::optional<std::size_t> index_of(std::string_view label) const;

  Seed mutated(std::size_t k) const;

  /// Reorders vertices; `order[i]` is the old index placed at new position i.
  /// Mutable vertices must stay in the mutable block.
  Seed permuted(const std::vector<std::size_t>& order) const;

  /// Same matrix and labels (history is ignored).
  bool same_quiver(const Seed& other) const {
    return matrix_ == other.matrix_ && labels_ == other.labels_;
  }

 private:
  ExtendedExchangeMatrix matrix_;
  ExtendedExchangeMatrix initial_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> history_;
};

std::vector<std::string> default_labels(std::size_t mutable_count, std::size_t frozen_count);

/// Moves the mutable vertices in `to_freeze` into the frozen block. Remaining
/// mutable vertices keep their relative order; the frozen block lists the
/// newly frozen vertices (ascending) followed by the old frozen ones.
Seed freeze(const Seed& seed, std::vector<std::size_t> to_freeze);

struct Edge {
  std::size_t from;
  std::size_t to;
  Integer weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph of a seed: i -> j with weight B_ij whenever B_ij > 0.
/// Edges between a mutable and a frozen vertex are read off column of the
/// mutable vertex (B_fi > 0 gives f -> i, B_fi < 0 gives i -> f).
class QuiverGraph {
 public:
  static QuiverGraph from_seed(const Seed& seed);

  std::size_t vertex_count() const noexcept { return mutable_.size(); }
  bool is_mutable(std::size_t v) const { return mutable_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Edge> mutable_edges() const;

 private:
  std::vector<bool> mutable_;
  std::vector<Edge> edges_;
};

/// Mutable edges through which no bi-infinite directed path passes, sorted by
/// (from, to).
std::vector<Edge> separating_edges(const QuiverGraph& graph);

struct LouiseTree {
  Seed seed;
  std::optional<Edge> split;       // set iff this is a Split node
  std::vector<LouiseTree> children;  // A_{i}, A_{j}, A_{i,j}

  bool is_leaf() const noexcept { return !split.has_value(); }
  std::size_t leaf_count() const;
};

/// Recursive cover by freezing endpoints of separating edges. At the root the
/// split edge is `preferred` when given (it must be separating); everywhere
/// else the lexicographically smallest separating edge is used.
LouiseTree louise_decompose(const Seed& seed,
                            std::optional<std::pair<std::size_t, std::size_t>> preferred = {});

/// True iff the mutable part is an oriented 3-cycle.
bool is_cyclic_triangle(const ExtendedExchangeMatrix& matrix);

enum class FiniteTypeVerdict { FiniteLouise, NotFiniteType };

struct FiniteTypeResult {
  FiniteTypeVerdict verdict;
  Seed seed;                          // the seed at which the verdict was reached
  std::vector<std::size_t> mutations;  // mutation sequence applied to the input
};

/// For n = 3, m = 0: descend along weight-decreasing mutations until the
/// quiver is acyclic (FiniteLouise) or a cyclic local minimum is reached
/// (NotFiniteType).
FiniteTypeResult finite_type_check(const Seed& seed);

struct PresentationEquation {
  std::size_t mutable_index;
  std::vector<Integer> positive;  // exponents of frozen variables, all >= 0
  std::vector<Integer> negative;  // exponents of frozen variables, all >= 0
};

/// x_i x_i' = y^positive + y^negative, one equation per mutable index, in
/// C^{2n} x (C*)^m.
struct VarietyPresentation {
  std::vector<std::string> mutable_labels;
  std::vector<std::string> frozen_labels;
  std::vector<PresentationEquation> equations;
};

VarietyPresentation isolated_presentation(const Seed& seed);

}  // namespace clusterhodge
