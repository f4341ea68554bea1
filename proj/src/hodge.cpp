#include "hodge.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "error.hpp"

namespace clusterhodge {

MixedHodgeTable::MixedHodgeTable(int dim, bool smooth, CohomologyVariant variant)
    : dim_(dim), smooth_(smooth), variant_(variant) {
  if (dim < 0) throw Error(ErrorCode::Domain, "table dimension must be nonnegative");
  entries_.assign(static_cast<std::size_t>((2 * dim + 1) * (dim + 1)), 0);
}

std::int64_t MixedHodgeTable::at(int k, int p) const {
  if (k < 0 || k > 2 * dim_ || p < 0 || p > dim_ || p > k) return 0;
  return entries_[slot(k, p)];
}

void MixedHodgeTable::set(int k, int p, std::int64_t h) {
  if (k < 0 || k > 2 * dim_ || p < 0 || p > dim_ || p > k) {
    if (h == 0) return;
    throw Error(ErrorCode::Domain, "h^{" + std::to_string(k) + ",(" + std::to_string(p) + "," +
                                       std::to_string(p) + ")} is outside the table range");
  }
  if (h < 0) throw Error(ErrorCode::Domain, "mixed Hodge numbers are nonnegative");
  entries_[slot(k, p)] = h;
}

std::vector<std::int64_t> MixedHodgeTable::betti_numbers() const {
  std::vector<std::int64_t> b(static_cast<std::size_t>(max_degree() + 1), 0);
  for (int k = 0; k <= max_degree(); ++k)
    for (int p = 0; p <= dim_; ++p) b[static_cast<std::size_t>(k)] += at(k, p);
  return b;
}

std::int64_t MixedHodgeTable::euler_characteristic() const {
  std::int64_t chi = 0;
  const auto b = betti_numbers();
  for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * b[k];
  return chi;
}

std::int64_t weight_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw Error(ErrorCode::Domain, "gcd(0, 0) is undefined here");
  return std::gcd(a, b);
}

namespace {

void require_positive(std::int64_t v, const char* name) {
  if (v <= 0) throw Error(ErrorCode::Domain, std::string(name) + " must be a positive weight");
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Rows k - p = 0 and k - p = 1 of a 3-dimensional table.
MixedHodgeTable threefold(std::array<std::int64_t, 4> diagonal, std::int64_t h21, std::int64_t h32) {
  MixedHodgeTable t(3);
  for (int k = 0; k < 4; ++k) t.set(k, k, diagonal[static_cast<std::size_t>(k)]);
  t.set(2, 1, h21);
  t.set(3, 2, h32);
  return t;
}

}  // namespace

MixedHodgeTable table_torus(int rank) {
  if (rank < 0) throw Error(ErrorCode::Domain, "torus rank must be nonnegative");
  MixedHodgeTable t(rank);
  for (int k = 0; k <= rank; ++k) t.set(k, k, binomial(rank, k));
  return t;
}

MixedHodgeTable table_2d(std::int64_t a) {
  require_positive(a, "a");
  MixedHodgeTable t(2);
  t.set(0, 0, 1);
  t.set(1, 1, 1);
  t.set(2, 2, 1);
  t.set(2, 1, a - 1);
  return t;
}

MixedHodgeTable table_one_mutable(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::Domain, "weights are taken in absolute value");
  const std::int64_t g = weight_gcd(a, b);
  return threefold({1, 2, 2, 1}, g - 1, g - 1);
}

MixedHodgeTable table_two_mutable(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_positive(a, "a");
  if (b < 0 || c < 0) throw Error(ErrorCode::Domain, "weights are taken in absolute value");
  const std::int64_t cst = weight_gcd(a, b) + weight_gcd(a, c) - 2;
  return threefold({1, 1, 1, 1}, cst, cst);
}

MixedHodgeTable table_three_mutable(std::int64_t a, std::int64_t b, std::int64_t c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  const std::int64_t cst = weight_gcd(a, b) + weight_gcd(a, c) + weight_gcd(b, c) - 3;
  return threefold({1, 0, 1, 1}, cst, cst + 1);
}

MixedHodgeTable table_singular_case1(CohomologyVariant variant) {
  MixedHodgeTable t(3, false, variant);
  t.set(0, 0, 1);
  t.set(1, 1, 1);
  t.set(2, 2, 2);
  t.set(3, 3, 1);
  if (variant == CohomologyVariant::IntersectionCohomology) t.set(2, 1, 1);
  return t;
}

MixedHodgeTable kunneth(const MixedHodgeTable& lhs, const MixedHodgeTable& rhs) {
  MixedHodgeTable out(lhs.dim() + rhs.dim(), lhs.smooth() && rhs.smooth(), lhs.variant());
  for (int k = 0; k <= out.max_degree(); ++k) {
    for (int p = 0; p <= out.dim(); ++p) {
      std::int64_t h = 0;
      for (int i = 0; i <= k; ++i)
        for (int r = 0; r <= p; ++r) h += lhs.at(i, r) * rhs.at(k - i, p - r);
      out.set(k, p, h);
    }
  }
  return out;
}

RestrictionRankData RestrictionRankData::surjective(const MixedHodgeTable& target) {
  RestrictionRankData r(target.dim());
  for (int k = 0; k <= target.max_degree(); ++k)
    for (int p = 0; p <= std::min(k, target.dim()); ++p) r.set_rank(k, p, target.at(k, p));
  return r;
}

RestrictionRankData RestrictionRankData::acyclic_triangle(const MixedHodgeTable& target) {
  RestrictionRankData r = surjective(target);
  r.set_rank(2, 2, 1);
  return r;
}

MixedHodgeTable mayer_vietoris(const MixedHodgeTable& u, const MixedHodgeTable& v,
                               const MixedHodgeTable& intersection, const RestrictionRankData& ranks) {
  const int d = u.dim();
  if (v.dim() != d || intersection.dim() != d || ranks.dim() != d) {
    throw Error(ErrorCode::InconsistentRank, "Mayer-Vietoris pieces must share one dimension");
  }
  for (int k = 0; k <= 2 * d; ++k) {
    for (int p = 0; p <= d; ++p) {
      const std::int64_t domain = u.at(k, p) + v.at(k, p);
      const std::int64_t r = ranks.rank(k, p);
      if (r < 0 || r > std::min(domain, intersection.at(k, p))) {
        throw Error(ErrorCode::InconsistentRank,
                    "rank " + std::to_string(r) + " of f^{" + std::to_string(k) + ",(" + std::to_string(p) + "," +
                        std::to_string(p) + ")} exceeds min(" + std::to_string(domain) + ", " +
                        std::to_string(intersection.at(k, p)) + ")");
      }
    }
  }
  MixedHodgeTable out(d, u.smooth() && v.smooth() && intersection.smooth(), u.variant());
  for (int k = 0; k <= 2 * d; ++k) {
    for (int p = 0; p <= std::min(k, d); ++p) {
      const std::int64_t kernel = u.at(k, p) + v.at(k, p) - ranks.rank(k, p);
      const std::int64_t cokernel = k > 0 ? intersection.at(k - 1, p) - ranks.rank(k - 1, p) : 0;
      out.set(k, p, kernel + cokernel);
    }
  }
  return out;
}

bool is_mixed_tate(const MixedHodgeTable& table) { return table.offdiagonal_zero(); }

bool numerical_chl(const MixedHodgeTable& table) {
  const int d = table.dim();
  for (int k = 0; k <= table.max_degree(); ++k) {
    for (int p = 0; p <= d; ++p) {
      const int k_mirror = k + d - 2 * p;
      if (table.at(k, p) != table.at(k_mirror, d - p)) return false;
    }
  }
  return true;
}

CountingPolynomial e_polynomial(const MixedHodgeTable& table) {
  if (!table.smooth()) {
    throw Error(ErrorCode::DualityUnavailable,
                "E-polynomial via Poincare duality needs a smooth variety");
  }
  const int d = table.dim();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= table.max_degree(); ++k) {
    for (int p = 0; p <= d; ++p) {
      const std::int64_t h = table.at(k, p);
      if (h == 0) continue;
      mpz_class term(static_cast<long>(h));
      coeffs[static_cast<std::size_t>(d - p)] += (k % 2 == 0) ? term : mpz_class(-term);
    }
  }
  return CountingPolynomial(std::move(coeffs));
}

}  // namespace clusterhodge
