#pragma once

// Formal logarithmic forms: sums of c * x^e * dlog x_{i1} ^ ... ^ dlog x_{ik}
// with rational c, Laurent exponent vector e and i1 < ... < ik.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace clusterhodge {

using Exponents = std::vector<std::int64_t>;

class LogForm {
 public:
  struct Key {
    Exponents exponents;
    std::uint32_t dlogs;  // bit i set <=> dlog of generator i present

    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  explicit LogForm(std::vector<std::string> generators);

  static LogForm constant(std::vector<std::string> generators, const mpq_class& c);
  /// c * x^e * dlog x_{order[0]} ^ dlog x_{order[1]} ^ ...; order need not be sorted.
  static LogForm term(std::vector<std::string> generators, Exponents e, const std::vector<std::size_t>& order,
                      const mpq_class& c = 1);
  static LogForm dlog(std::vector<std::string> generators, std::size_t i);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::map<Key, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 if zero or of mixed degree.
  int degree() const;

  LogForm& operator+=(const LogForm& other);
  LogForm& operator-=(const LogForm& other);
  LogForm& operator*=(const mpq_class& c);
  friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
  friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
  friend LogForm operator*(const mpq_class& c, LogForm f) { return f *= c; }
  /// Multiply by the monomial x^e.
  LogForm times_monomial(const Exponents& e) const;

  friend bool operator==(const LogForm&, const LogForm&) = default;

  /// e.g. `y^2*z^3*(2_xy_+3_xz_)`, `y*_xy_`, `1`.
  std::string to_string() const;

 private:
  void add_term(const Key& key, const mpq_class& c);
  void require_same_generators(const LogForm& other) const;

  std::vector<std::string> generators_;
  std::map<Key, mpq_class> terms_;

  friend LogForm wedge(const LogForm&, const LogForm&);
};

LogForm wedge(const LogForm& lhs, const LogForm& rhs);

/// Each source generator is a Laurent monomial in the target generators:
/// source_i = prod_j target_j^{rows[i][j]}.
class MonomialMap {
 public:
  MonomialMap(std::vector<std::string> sources, std::vector<std::string> targets,
              std::vector<Exponents> rows);

  const std::vector<std::string>& sources() const noexcept { return sources_; }
  const std::vector<std::string>& targets() const noexcept { return targets_; }
  const std::vector<Exponents>& exponent_matrix() const noexcept { return rows_; }

  /// Composite sending sources of *this through `inner` (whose sources are
  /// our targets) to the targets of `inner`.
  MonomialMap then(const MonomialMap& inner) const;

  bool is_identity() const;

 private:
  std::vector<std::string> sources_;
  std::vector<std::string> targets_;
  std::vector<Exponents> rows_;
};

/// Adds a new first generator mapped to a new first target with exponent 1.
MonomialMap prepend_identity(const MonomialMap& map, std::string source, std::string target);

/// Rewrites a form in the source generators as a form in the target ones.
LogForm pullback(const MonomialMap& map, const LogForm& form);

struct BezoutChange {
  std::int64_t g, s, t, a_prime, b_prime;
  MonomialMap forward;  // y = v^s w^{b'}, z = v^t w^{-a'}
  MonomialMap inverse;  // v = y^{a'} z^{b'}, w = y^t z^{-s}
};

/// s*a + t*b = g with |t| minimal, then |s| minimal.
BezoutChange bezout_change(std::int64_t a, std::int64_t b);

/// Rank over Q of the coefficient matrix of the forms (common generators).
std::size_t rational_rank(const std::vector<LogForm>& forms);

}  // namespace clusterhodge
