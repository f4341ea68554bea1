#pragma once

// Log-form representatives of the Deligne splittings H^{k,(p,p)}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "hodge.hpp"
#include "logform.hpp"

namespace clusterhodge {

/// Second H^{2,(1,1)} family of the two-mutable case: the statement's
/// y^{ja/(a,b)} z^{jb/(a,b)}, j < (a,b), or the printed list's
/// y^{jb/(b,c)} z^{jc/(b,c)}, j < (b,c).
enum class Prop2mVariant { Statement, Eq21 };

struct Basis {
  std::vector<std::string> generators;
  int dim = 0;
  std::map<std::pair<int, int>, std::vector<LogForm>> pieces;
  /// False when only dimensions are known (acyclic triangle).
  bool symbolic = true;
  MixedHodgeTable cardinalities{0};

  std::size_t size(int k, int p) const;
};

Basis basis_torus(std::vector<std::string> generators);
Basis basis_2d(std::int64_t a, std::vector<std::string> generators = {"x", "y"});
Basis basis_prop_10(std::int64_t a, std::vector<std::string> generators = {"x", "y", "z"});
Basis basis_prop_1m(std::int64_t a, std::int64_t b, std::vector<std::string> generators = {"x", "y", "z"});
Basis basis_prop_2m(std::int64_t a, std::int64_t b, std::int64_t c, Prop2mVariant variant,
                    std::vector<std::string> generators = {"x", "y", "z"});
Basis basis_prop_3m(std::int64_t a, std::int64_t b, std::int64_t c,
                    std::vector<std::string> generators = {"x", "y", "z"});

/// Dispatches on the classification, using the normalized seed's labels.
Basis basis_for(const Classification& c, Prop2mVariant variant = Prop2mVariant::Statement);

}  // namespace clusterhodge
