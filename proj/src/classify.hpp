#pragma once

// Case analysis for cluster varieties of dimension 2 and 3, and table
// assembly along a Louise cover.

#include <cstdint>
#include <string>
#include <vector>

#include "hodge.hpp"
#include "quiver.hpp"

namespace clusterhodge {

enum class CaseTag {
  Torus,
  TwoDimensional,
  Prod2DxTorus,
  OneMutable,
  TwoMutable,
  ThreeMutableAcyclic,
  SingularCase1_11,
  NotFiniteType,
  Unsupported,
};

const char* case_name(CaseTag tag);

struct Classification {
  CaseTag tag;
  int dim;
  std::vector<std::int64_t> params;
  Seed seed;                            // normalized seed the parameters are read from
  std::vector<std::size_t> mutations;   // applied to the input before normalizing
  std::string reason;                   // Unsupported / NotFiniteType explanation

  bool supported() const noexcept { return tag != CaseTag::Unsupported && tag != CaseTag::NotFiniteType; }
  bool smooth() const noexcept { return supported() && tag != CaseTag::SingularCase1_11; }
};

/// Throws UnsupportedDimension unless n + m is 2 or 3.
///
/// Normal forms (0-based rows, text orientation i -> j iff B_ij > 0):
///   OneMutable(a, b):     column (0, a, b) up to sign, a, b > 0.
///   TwoMutable(a, b, c):  B_10 = a > 0, B_20 = +-b, B_21 = +-c.
///   ThreeMutableAcyclic:  [[0,-a,-b],[a,0,-c],[b,c,0]], vertex 0 the sink.
Classification classify(const Seed& seed);

/// Closed-form table of a supported classification. IntersectionCohomology
/// only changes the singular table; smooth tables are relabelled.
MixedHodgeTable table_for(const Classification& c,
                          CohomologyVariant variant = CohomologyVariant::Cohomology);

/// Table of an isolated seed: a torus when every mutable column vanishes,
/// table_2d(g) x torus when exactly one does not. Anything else is open.
MixedHodgeTable leaf_table(const Seed& isolated);

/// Rank data recorded in the proofs for a Split node of the given seed:
/// two mutable vertices -> surjective, acyclic triangle -> rank 1 at (2,(2,2)).
RestrictionRankData proof_rank_data(const Seed& node, const MixedHodgeTable& intersection);

/// Recursive Mayer-Vietoris over the tree using leaf_table and proof_rank_data.
MixedHodgeTable assemble_via_louise(const LouiseTree& tree);

std::int64_t to_int64(const Integer& v);

}  // namespace clusterhodge
