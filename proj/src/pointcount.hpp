#pragma once

// Point counts over prime fields and the counting-polynomial oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "polynomial.hpp"
#include "quiver.hpp"

namespace clusterhodge {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  /// p must be prime and below 2^32.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const;
  /// Nonzero elements only.
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

struct ChartCount {
  Seed seed;
  std::uint64_t prime;
  std::uint64_t count;
};

/// Solutions of the presentation in F^{2n} x (F*)^m.
std::uint64_t count_isolated(const VarietyPresentation& pres, const PrimeField& field);

/// x x' = y y' = z + 1, z != 0, by direct enumeration over z.
std::uint64_t count_singular_case1(const PrimeField& field);

/// Inclusion-exclusion #A = #U + #V - #(U n V) down the tree. When `leaves`
/// is given, every leaf count is appended to it.
std::uint64_t count_tree(const LouiseTree& tree, const PrimeField& field,
                         std::vector<ChartCount>* leaves = nullptr);

/// Counts the cluster variety of the seed, mutating a cyclic 3-vertex seed to
/// a Louise one first. Dimension 2/3 seeds that classify as open cases or as
/// not of finite type are rejected.
std::uint64_t count_variety(const Seed& seed, const PrimeField& field,
                            std::optional<std::pair<std::size_t, std::size_t>> preferred = {});

struct PrimePlan {
  std::vector<std::uint64_t> fit;
  std::uint64_t held_out = 0;
  /// Congruence modulus every prime satisfies (p = 1 mod modulus).
  std::uint64_t modulus = 2;

  /// {5, 7, 11, 13} with 17 held out.
  static PrimePlan fixed_default();
  /// Last entry is held out.
  static PrimePlan from_list(std::vector<std::uint64_t> primes);
  /// Smallest primes p >= 5 with p = 1 mod 2L, where L makes every leaf
  /// count a polynomial in q (see exponent_modulus).
  static PrimePlan adaptive(const Seed& seed, std::size_t fit_count = 4);
};

/// L = lcm over Louise leaves and over nonempty sets S of equations of the
/// largest invariant factor of the exponent matrix of {y^{pos - neg}}_{i in S}.
std::uint64_t exponent_modulus(const Seed& seed);

struct Sample {
  std::uint64_t q;
  std::uint64_t count;
};

/// Lagrange interpolation through the first degree+1 samples, checked against
/// the remaining samples and the held-out one.
CountingPolynomial interpolate(const std::vector<Sample>& fit, const Sample& held_out, int degree);

enum class Verdict { Pass, Fail, CountOnly };
const char* verdict_name(Verdict v);

struct VerificationReport {
  std::string case_name;
  std::vector<std::int64_t> params;
  std::optional<CountingPolynomial> predicted;
  std::optional<CountingPolynomial> observed;
  Verdict verdict = Verdict::Fail;
  std::vector<Sample> samples;  // fit samples then the held-out one
  std::string note;
};

/// Compares the interpolated count of a classified seed with the
/// E-polynomial of its table. The default plan is PrimePlan::adaptive.
VerificationReport verify_table(const Seed& seed, std::optional<PrimePlan> plan = {});

}  // namespace clusterhodge
