#include "classify.hpp"

#include <optional>
#include <utility>

#include "error.hpp"

namespace clusterhodge {

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Torus: return "Torus";
    case CaseTag::TwoDimensional: return "TwoDimensional";
    case CaseTag::Prod2DxTorus: return "Prod2DxTorus";
    case CaseTag::OneMutable: return "OneMutable";
    case CaseTag::TwoMutable: return "TwoMutable";
    case CaseTag::ThreeMutableAcyclic: return "ThreeMutableAcyclic";
    case CaseTag::SingularCase1_11: return "SingularCase1_11";
    case CaseTag::NotFiniteType: return "NotFiniteType";
    case CaseTag::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::Overflow, "weight " + v.get_str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

namespace {

std::int64_t abs64(const Integer& v) { return to_int64(v < 0 ? Integer(-v) : v); }

Classification make(CaseTag tag, const Seed& seed, std::vector<std::int64_t> params = {}, std::string reason = {}) {
  return Classification{tag, static_cast<int>(seed.vertex_count()), std::move(params), seed, {}, std::move(reason)};
}

Classification classify_2d(const Seed& seed) {
  const auto& B = seed.matrix();
  switch (seed.mutable_count()) {
    case 0: return make(CaseTag::Torus, seed);
    case 1:
      if (B.at(1, 0) == 0) return make(CaseTag::Torus, seed);
      return make(CaseTag::TwoDimensional, seed, {abs64(B.at(1, 0))});
    default:
      if (B.at(1, 0) == 0) return make(CaseTag::Torus, seed);
      return make(CaseTag::Unsupported, seed, {},
                  "two mutable vertices joined by an edge: no closed-form table is available for this 2-dimensional case");
  }
}

Classification classify_one_mutable(const Seed& seed) {
  const auto& B = seed.matrix();
  const bool z1 = B.at(1, 0) == 0;
  const bool z2 = B.at(2, 0) == 0;
  if (z1 && z2) return make(CaseTag::Torus, seed);
  if (z1 || z2) return make(CaseTag::Prod2DxTorus, seed, {abs64(z1 ? B.at(2, 0) : B.at(1, 0))});
  return make(CaseTag::OneMutable, seed, {abs64(B.at(1, 0)), abs64(B.at(2, 0))});
}

Classification classify_two_mutable(const Seed& seed) {
  const auto& B = seed.matrix();
  if (B.at(1, 0) != 0) {
    const Seed normal = B.at(1, 0) > 0 ? seed : seed.permuted({1, 0, 2});
    const auto& N = normal.matrix();
    return make(CaseTag::TwoMutable, normal, {abs64(N.at(1, 0)), abs64(N.at(2, 0)), abs64(N.at(2, 1))});
  }
  const bool zb = B.at(2, 0) == 0;
  const bool zc = B.at(2, 1) == 0;
  if (zb && zc) return make(CaseTag::Torus, seed);
  if (zb || zc) {
    // The vertex with a zero column has x x' = 2, so it may be frozen.
    return classify_one_mutable(freeze(seed, {zb ? std::size_t{0} : std::size_t{1}}));
  }
  const std::int64_t b = abs64(B.at(2, 0));
  const std::int64_t c = abs64(B.at(2, 1));
  if (b == 1 && c == 1) return make(CaseTag::SingularCase1_11, seed, {1, 1});
  return make(CaseTag::Unsupported, seed, {b, c},
              "singular Case 1 with weights (" + std::to_string(b) + "," + std::to_string(c) +
                  ") != (1,1): no closed form is known for this case");
}

Classification classify_three_mutable(const Seed& seed) {
  const auto& B = seed.matrix();
  if (is_cyclic_triangle(B)) {
    FiniteTypeResult ft = finite_type_check(seed);
    if (ft.verdict == FiniteTypeVerdict::NotFiniteType) {
      Classification c = make(CaseTag::NotFiniteType, ft.seed, {abs64(ft.seed.matrix().at(0, 1)),
                                                                abs64(ft.seed.matrix().at(1, 2)),
                                                                abs64(ft.seed.matrix().at(2, 0))},
                              "cyclic triangle with every weight >= 2 at its mutation-minimal seed: not of finite type");
      c.mutations = ft.mutations;
      return c;
    }
    Classification c = classify_three_mutable(ft.seed);
    c.mutations.insert(c.mutations.begin(), ft.mutations.begin(), ft.mutations.end());
    return c;
  }

  const auto graph = QuiverGraph::from_seed(seed);
  const auto edges = graph.mutable_edges();
  if (edges.empty()) return make(CaseTag::Torus, seed);
  if (edges.size() == 1) {
    std::size_t isolated = 0;
    while (isolated == edges[0].from || isolated == edges[0].to) ++isolated;
    return classify_two_mutable(freeze(seed, {isolated}));
  }
  if (edges.size() == 2) {
    return make(CaseTag::Unsupported, seed, {},
                "three mutable vertices with exactly one zero weight: reduces to the open singular Case 1");
  }

  // Acyclic triangle: order vertices sink, middle, source.
  std::size_t out_degree[3] = {0, 0, 0};
  for (const auto& e : edges) ++out_degree[e.from];
  std::vector<std::size_t> order(3);
  for (std::size_t v = 0; v < 3; ++v) order[out_degree[v]] = v;
  const Seed normal = seed.permuted(order);
  const auto& N = normal.matrix();
  return make(CaseTag::ThreeMutableAcyclic, normal, {to_int64(N.at(1, 0)), to_int64(N.at(2, 0)), to_int64(N.at(2, 1))});
}

}  // namespace

Classification classify(const Seed& seed) {
  const std::size_t total = seed.vertex_count();
  if (total == 2) return classify_2d(seed);
  if (total != 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "classification covers dimensions 2 and 3 only, got " + std::to_string(total));
  }
  switch (seed.mutable_count()) {
    case 0: return make(CaseTag::Torus, seed);
    case 1: return classify_one_mutable(seed);
    case 2: return classify_two_mutable(seed);
    default: return classify_three_mutable(seed);
  }
}

MixedHodgeTable table_for(const Classification& c, CohomologyVariant variant) {
  const auto& p = c.params;
  MixedHodgeTable t(0);
  switch (c.tag) {
    case CaseTag::Torus: t = table_torus(c.dim); break;
    case CaseTag::TwoDimensional: t = table_2d(p.at(0)); break;
    case CaseTag::Prod2DxTorus: t = table_one_mutable(p.at(0), 0); break;
    case CaseTag::OneMutable: t = table_one_mutable(p.at(0), p.at(1)); break;
    case CaseTag::TwoMutable: t = table_two_mutable(p.at(0), p.at(1), p.at(2)); break;
    case CaseTag::ThreeMutableAcyclic: t = table_three_mutable(p.at(0), p.at(1), p.at(2)); break;
    case CaseTag::SingularCase1_11: return table_singular_case1(variant);
    case CaseTag::NotFiniteType: throw Error(ErrorCode::NotFiniteType, c.reason);
    case CaseTag::Unsupported: throw Error(ErrorCode::OpenCase, c.reason);
  }
  return t.with_variant(variant);
}

MixedHodgeTable leaf_table(const Seed& isolated) {
  const auto& B = isolated.matrix();
  const std::size_t n = isolated.mutable_count();
  const int dim = static_cast<int>(isolated.vertex_count());
  std::optional<std::int64_t> weight;
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      if (B.at(row, col) != 0) throw Error(ErrorCode::Precondition, "leaf seed has mutable edges");
    }
    Integer g = 0;
    for (std::size_t row = n; row < isolated.vertex_count(); ++row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), B.at(row, col).get_mpz_t());
    if (g == 0) continue;
    if (weight) throw Error(ErrorCode::OpenCase, "isolated chart with two non-trivial equations is a singular open case");
    weight = to_int64(g);
  }
  if (!weight) return table_torus(dim);
  return kunneth(table_2d(*weight), table_torus(dim - 2));
}

RestrictionRankData proof_rank_data(const Seed& node, const MixedHodgeTable& intersection) {
  if (node.vertex_count() == 3 && node.mutable_count() == 2) return RestrictionRankData::surjective(intersection);
  if (node.vertex_count() == 3 && node.mutable_count() == 3) {
    const auto& B = node.matrix();
    if (B.at(0, 1) != 0 && B.at(0, 2) != 0 && B.at(1, 2) != 0 && !is_cyclic_triangle(B)) {
      return RestrictionRankData::acyclic_triangle(intersection);
    }
  }
  throw Error(ErrorCode::OpenCase, "no restriction rank data is known for this cover");
}

MixedHodgeTable assemble_via_louise(const LouiseTree& tree) {
  if (tree.is_leaf()) return leaf_table(tree.seed);
  const MixedHodgeTable u = assemble_via_louise(tree.children.at(0));
  const MixedHodgeTable v = assemble_via_louise(tree.children.at(1));
  const MixedHodgeTable uv = assemble_via_louise(tree.children.at(2));
  return mayer_vietoris(u, v, uv, proof_rank_data(tree.seed, uv));
}

}  // namespace clusterhodge
