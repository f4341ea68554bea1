#pragma once

#include <cstdint>
#include <vector>

#include "polynomial.hpp"

namespace clusterhodge {

enum class CohomologyVariant { Cohomology, IntersectionCohomology };

/// Mixed Hodge numbers h^{k,(p,p)} of a mixed Tate variety of complex
/// dimension d, stored densely for 0 <= k <= 2d, 0 <= p <= d. Weight is 2p.
class MixedHodgeTable {
 public:
  explicit MixedHodgeTable(int dim, bool smooth = true,
                           CohomologyVariant variant = CohomologyVariant::Cohomology);

  int dim() const noexcept { return dim_; }
  bool smooth() const noexcept { return smooth_; }
  CohomologyVariant variant() const noexcept { return variant_; }
  // Only diagonal pieces are representable; every emitted table is mixed Tate.
  bool offdiagonal_zero() const noexcept { return true; }

  /// 0 outside the stored range.
  std::int64_t at(int k, int p) const;
  void set(int k, int p, std::int64_t h);

  int max_degree() const noexcept { return 2 * dim_; }
  std::vector<std::int64_t> betti_numbers() const;
  std::int64_t euler_characteristic() const;

  MixedHodgeTable with_variant(CohomologyVariant v) const {
    MixedHodgeTable t = *this;
    t.variant_ = v;
    return t;
  }

  friend bool operator==(const MixedHodgeTable&, const MixedHodgeTable&) = default;

 private:
  std::size_t slot(int k, int p) const { return static_cast<std::size_t>(k * (dim_ + 1) + p); }

  int dim_;
  bool smooth_;
  CohomologyVariant variant_;
  std::vector<std::int64_t> entries_;
};

/// gcd with gcd(a, 0) = |a|; gcd(0, 0) is a domain error.
std::int64_t weight_gcd(std::int64_t a, std::int64_t b);

MixedHodgeTable table_torus(int rank);
MixedHodgeTable table_2d(std::int64_t a);
MixedHodgeTable table_one_mutable(std::int64_t a, std::int64_t b);
MixedHodgeTable table_two_mutable(std::int64_t a, std::int64_t b, std::int64_t c);
MixedHodgeTable table_three_mutable(std::int64_t a, std::int64_t b, std::int64_t c);
MixedHodgeTable table_singular_case1(CohomologyVariant variant);

MixedHodgeTable kunneth(const MixedHodgeTable& lhs, const MixedHodgeTable& rhs);

/// Ranks of f^{k,(p,p)}: H(U) + H(V) -> H(U n V), same dense layout as a table.
class RestrictionRankData {
 public:
  explicit RestrictionRankData(int dim) : ranks_(dim) {}

  /// Every restriction map onto H(U n V).
  static RestrictionRankData surjective(const MixedHodgeTable& u_and_v_target);
  /// Acyclic-triangle cover along a separating edge: surjective except
  /// f^{2,(2,2)}, whose image is the line spanned by the common 2-form.
  static RestrictionRankData acyclic_triangle(const MixedHodgeTable& u_and_v_target);

  int dim() const noexcept { return ranks_.dim(); }
  std::int64_t rank(int k, int p) const { return ranks_.at(k, p); }
  void set_rank(int k, int p, std::int64_t r) { ranks_.set(k, p, r); }

 private:
  MixedHodgeTable ranks_;
};

/// h(X) = ker f^{k,(p,p)} + coker f^{k-1,(p,p)}.
MixedHodgeTable mayer_vietoris(const MixedHodgeTable& u, const MixedHodgeTable& v,
                               const MixedHodgeTable& intersection, const RestrictionRankData& ranks);

bool is_mixed_tate(const MixedHodgeTable& table);

/// Dimension form of curious hard Lefschetz: every row k - p of the table is
/// palindromic in p about dim/2, i.e. h^{k,(p,p)} = h^{k+d-2p,(d-p,d-p)}.
bool numerical_chl(const MixedHodgeTable& table);

/// sum (-1)^k h^{k,(p,p)} q^{d-p}; only defined for smooth tables.
CountingPolynomial e_polynomial(const MixedHodgeTable& table);

}  // namespace clusterhodge
