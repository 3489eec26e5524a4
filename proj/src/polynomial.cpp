#include "anticlique/polynomial.hpp"

namespace anticlique {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::binomial(std::size_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) c[k] = c[k - 1] * BigInt(n - k + 1) / BigInt(k);
  return Polynomial(std::move(c));
}

BigInt Polynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || coeffs_[k] != 1) out += coeffs_[k].str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace anticlique
