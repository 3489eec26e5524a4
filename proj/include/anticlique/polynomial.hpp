#pragma once

#include "anticlique/types.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace anticlique {

/// Integer polynomial with non-negative arbitrary-precision coefficients;
/// coefficient k belongs to x^k. Kept normalized: no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const BigInt& c);
  static Polynomial monomial(std::size_t degree);
  /// (1 + x)^n
  static Polynomial binomial(std::size_t n);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k (0 beyond the degree).
  BigInt operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt at_one() const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + 5x + 4x^2 + x^3"
  std::string to_string() const;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace anticlique
