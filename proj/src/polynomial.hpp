#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace clusterhodge {

/// Integer polynomial in q, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed so that equality is structural.
class CountingPolynomial {
 public:
  CountingPolynomial() = default;
  explicit CountingPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class leading_coefficient() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

  mpz_class operator()(const mpz_class& q) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  /// e.g. "q^3 - 2*q^2 + 2*q - 1"
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      mpz_class mag = abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const bool unit = mag == 1 && d > 0;
      if (!unit) out += mag.get_str();
      if (d > 0) {
        if (!unit) out += "*";
        out += "q";
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

  friend bool operator==(const CountingPolynomial&, const CountingPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<mpz_class> coeffs_;
};

}  // namespace clusterhodge
