#pragma once

// Serialization of seeds, tables, classifications, bases and reports.

#include <string>
#include <string_view>

#include "basis.hpp"
#include "classify.hpp"
#include "hodge.hpp"
#include "pointcount.hpp"
#include "quiver.hpp"

namespace clusterhodge {

/// {"n": int, "m": int, "matrix": [[int,...],...], "labels": [str,...]?};
/// entries may be JSON integers or decimal strings for big values.
Seed seed_from_json(std::string_view text);
std::string seed_to_json(const Seed& seed);

std::string table_to_json(const MixedHodgeTable& table);
MixedHodgeTable table_from_json(std::string_view text);
/// Rows k - p, columns H^k (IH^k for the intersection variant).
std::string table_to_ascii(const MixedHodgeTable& table);
std::string table_to_csv(const MixedHodgeTable& table);

std::string classification_to_json(const Classification& c);
std::string classification_to_text(const Classification& c);
std::string classification_to_csv(const Classification& c);

std::string basis_to_json(const Basis& b);
std::string basis_to_text(const Basis& b);
std::string basis_to_csv(const Basis& b);

/// Exactly the keys case, params, predicted, observed, verdict.
std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

std::string finite_type_to_json(const FiniteTypeResult& r);
std::string finite_type_to_text(const FiniteTypeResult& r);
std::string finite_type_to_csv(const FiniteTypeResult& r);

}  // namespace clusterhodge
