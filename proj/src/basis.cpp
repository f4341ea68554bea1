#include "basis.hpp"

#include <numeric>

#include "error.hpp"

namespace clusterhodge {

std::size_t Basis::size(int k, int p) const {
  if (!symbolic) return static_cast<std::size_t>(cardinalities.at(k, p));
  auto it = pieces.find({k, p});
  return it == pieces.end() ? 0 : it->second.size();
}

namespace {

using Gens = std::vector<std::string>;

void require_count(const Gens& g, std::size_t n) {
  if (g.size() != n) throw Error(ErrorCode::Domain, "expected " + std::to_string(n) + " generators");
}

LogForm d(const Gens& g, std::vector<std::size_t> idx, Exponents e = {}) {
  if (e.empty()) e.assign(g.size(), 0);
  return LogForm::term(g, std::move(e), idx);
}

Basis finish(Basis b) {
  b.cardinalities = MixedHodgeTable(b.dim);
  for (const auto& [kp, forms] : b.pieces) b.cardinalities.set(kp.first, kp.second, static_cast<std::int64_t>(forms.size()));
  return b;
}

Basis start(Gens g, int dim) {
  Basis b;
  b.generators = std::move(g);
  b.dim = dim;
  b.pieces[{0, 0}] = {LogForm::constant(b.generators, 1)};
  return b;
}

}  // namespace

Basis basis_torus(Gens g) {
  const int r = static_cast<int>(g.size());
  Basis b = start(std::move(g), r);
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<std::size_t> idx;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(static_cast<std::size_t>(i));
    const int k = static_cast<int>(idx.size());
    b.pieces[{k, k}].push_back(d(b.generators, idx));
  }
  return finish(std::move(b));
}

Basis basis_2d(std::int64_t a, Gens g) {
  if (a <= 0) throw Error(ErrorCode::Domain, "a must be positive");
  require_count(g, 2);
  Basis b = start(std::move(g), 2);
  b.pieces[{1, 1}] = {d(b.generators, {1})};
  b.pieces[{2, 2}] = {d(b.generators, {0, 1})};
  auto& h21 = b.pieces[{2, 1}];
  for (std::int64_t i = 1; i <= a - 1; ++i) h21.push_back(d(b.generators, {0, 1}, {0, i}));
  return finish(std::move(b));
}

Basis basis_prop_10(std::int64_t a, Gens g) {
  if (a <= 0) throw Error(ErrorCode::Domain, "a must be positive");
  require_count(g, 3);
  Basis b = start(std::move(g), 3);
  const auto& G = b.generators;
  b.pieces[{1, 1}] = {d(G, {1}), d(G, {2})};
  b.pieces[{2, 2}] = {d(G, {0, 1}), d(G, {1, 2})};
  b.pieces[{3, 3}] = {d(G, {0, 1, 2})};
  auto& h21 = b.pieces[{2, 1}];
  auto& h32 = b.pieces[{3, 2}];
  for (std::int64_t i = 1; i <= a - 1; ++i) {
    h21.push_back(d(G, {0, 1}, {0, i, 0}));
    h32.push_back(d(G, {0, 1, 2}, {0, i, 0}));
  }
  return finish(std::move(b));
}

Basis basis_prop_1m(std::int64_t a, std::int64_t b_, Gens g) {
  if (a < 0 || b_ < 0 || (a == 0 && b_ == 0)) throw Error(ErrorCode::Domain, "weights must be >= 0 and not both 0");
  require_count(g, 3);
  Basis b = start(std::move(g), 3);
  const auto& G = b.generators;
  const std::int64_t gg = std::gcd(a, b_);
  const LogForm two = mpq_class(a) * d(G, {0, 1}) + mpq_class(b_) * d(G, {0, 2});
  b.pieces[{1, 1}] = {d(G, {1}), d(G, {2})};
  b.pieces[{2, 2}] = {two, d(G, {1, 2})};
  b.pieces[{3, 3}] = {d(G, {0, 1, 2})};
  auto& h21 = b.pieces[{2, 1}];
  auto& h32 = b.pieces[{3, 2}];
  for (std::int64_t i = 1; i <= gg - 1; ++i) {
    const Exponents e{0, i * a / gg, i * b_ / gg};
    h21.push_back(two.times_monomial(e));
    h32.push_back(d(G, {0, 1, 2}, e));
  }
  return finish(std::move(b));
}

Basis basis_prop_2m(std::int64_t a, std::int64_t b_, std::int64_t c, Prop2mVariant variant, Gens g) {
  if (a <= 0 || b_ < 0 || c < 0) throw Error(ErrorCode::Domain, "need a > 0 and b, c >= 0");
  require_count(g, 3);
  Basis b = start(std::move(g), 3);
  const auto& G = b.generators;
  const LogForm xy = d(G, {0, 1});
  const LogForm xz = d(G, {0, 2});
  const LogForm yz = d(G, {1, 2});
  const LogForm xyz = d(G, {0, 1, 2});
  b.pieces[{1, 1}] = {d(G, {2})};
  b.pieces[{2, 2}] = {mpq_class(a) * xy + mpq_class(b_) * xz + mpq_class(c) * yz};
  b.pieces[{3, 3}] = {xyz};
  auto& h21 = b.pieces[{2, 1}];
  auto& h32 = b.pieces[{3, 2}];

  const std::int64_t gac = std::gcd(a, c);
  const LogForm first = mpq_class(a) * xy + mpq_class(c) * yz;
  for (std::int64_t i = 1; i <= gac - 1; ++i) {
    const Exponents e{i * a / gac, 0, i * c / gac};
    h21.push_back(first.times_monomial(e));
    h32.push_back(xyz.times_monomial(e));
  }

  const LogForm second = mpq_class(a) * xy + mpq_class(b_) * xz;
  if (variant == Prop2mVariant::Statement) {
    const std::int64_t gab = std::gcd(a, b_);
    for (std::int64_t j = 1; j <= gab - 1; ++j) {
      const Exponents e{0, j * a / gab, j * b_ / gab};
      h21.push_back(second.times_monomial(e));
      h32.push_back(xyz.times_monomial(e));
    }
  } else {
    const std::int64_t gbc = std::gcd(b_, c);  // 0 when b = c = 0: empty range
    for (std::int64_t j = 1; j <= gbc - 1; ++j) {
      const Exponents e{0, j * b_ / gbc, j * c / gbc};
      h21.push_back(second.times_monomial(e));
      h32.push_back(xyz.times_monomial(e));
    }
  }
  return finish(std::move(b));
}

Basis basis_prop_3m(std::int64_t a, std::int64_t b_, std::int64_t c, Gens g) {
  require_count(g, 3);
  Basis b;
  b.generators = std::move(g);
  b.dim = 3;
  b.symbolic = false;
  b.cardinalities = table_three_mutable(a, b_, c);
  return b;
}

Basis basis_for(const Classification& c, Prop2mVariant variant) {
  const auto& labels = c.seed.labels();
  const auto& p = c.params;
  switch (c.tag) {
    case CaseTag::Torus: return basis_torus(labels);
    case CaseTag::TwoDimensional: return basis_2d(p.at(0), labels);
    case CaseTag::Prod2DxTorus: {
      // Put the weighted frozen vertex second.
      Gens g = labels;
      if (c.seed.matrix().at(1, 0) == 0) std::swap(g[1], g[2]);
      return basis_prop_10(p.at(0), std::move(g));
    }
    case CaseTag::OneMutable: return basis_prop_1m(p.at(0), p.at(1), labels);
    case CaseTag::TwoMutable: return basis_prop_2m(p.at(0), p.at(1), p.at(2), variant, labels);
    case CaseTag::ThreeMutableAcyclic: return basis_prop_3m(p.at(0), p.at(1), p.at(2), labels);
    case CaseTag::SingularCase1_11:
      throw Error(ErrorCode::OpenCase, "no log-form basis is available for the singular variety");
    case CaseTag::NotFiniteType: throw Error(ErrorCode::NotFiniteType, c.reason);
    case CaseTag::Unsupported: throw Error(ErrorCode::OpenCase, c.reason);
  }
  throw Error(ErrorCode::Domain, "unknown case");
}

}  // namespace clusterhodge
