#pragma once

// Exact arithmetic in Z[zeta_{2^m}], the ring of integers of the 2^m-th
// cyclotomic field.  An element is a coefficient vector c of length
// max(1, 2^{m-1}) representing sum_j c_j zeta^j, reduced with
// zeta^{2^{m-1}} = -1.  m = 0 and m = 1 degenerate to plain integers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rooth {

class CycElement {
 public:
  CycElement() : m_(0), coeffs_(1, 0) {}
  explicit CycElement(std::int64_t value) : m_(0), coeffs_(1, value) {}
  CycElement(int m, std::vector<std::int64_t> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
    if (m_ < 0) throw std::invalid_argument("ring order exponent must be >= 0");
    if (coeffs_.size() != half_period(m_))
      throw std::invalid_argument("coefficient vector has wrong length for order exponent " +
                                  std::to_string(m_));
  }

  static std::size_t half_period(int m) {
    return m <= 1 ? 1 : std::size_t{1} << (m - 1);
  }

  // zeta_{2^m}^e in reduced form
  static CycElement zeta_pow(int m, std::int64_t e) {
    if (m < 0) throw std::invalid_argument("ring order exponent must be >= 0");
    const std::int64_t period = std::int64_t{1} << m;
    e %= period;
    if (e < 0) e += period;
    std::vector<std::int64_t> c(half_period(m), 0);
    const std::int64_t half = period / 2;  // 0 when m = 0
    if (m == 0) {
      c[0] = 1;
    } else if (e < half || half == 0) {
      c[static_cast<std::size_t>(e)] = 1;
    } else {
      c[static_cast<std::size_t>(e - half)] = -1;
    }
    return CycElement(m, std::move(c));
  }

  int order_exponent() const { return m_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  // lies in Z (only the constant coefficient may be nonzero)
  bool is_rational_integer() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }
  std::int64_t integer_value() const {
    if (!is_rational_integer())
      throw std::domain_error("element is not a rational integer");
    return coeffs_[0];
  }

  // image under zeta_{2^m} -> zeta_{2^m2}^{2^{m2-m}}
  CycElement lift(int m2) const {
    if (m2 < m_) throw std::invalid_argument("lift target order below element order");
    if (m2 == m_) return *this;
    std::vector<std::int64_t> c(half_period(m2), 0);
    const int shift = m2 - m_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      c[j << shift] = coeffs_[j];
    return CycElement(m2, std::move(c));
  }

  CycElement operator-() const {
    CycElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycElement operator+(const CycElement& a, const CycElement& b) {
    auto [x, y] = common(a, b);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;
  }
  friend CycElement operator-(const CycElement& a, const CycElement& b) {
    auto [x, y] = common(a, b);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] -= y.coeffs_[j];
    return x;
  }
  friend CycElement operator*(const CycElement& a, const CycElement& b) {
    auto [x, y] = common(a, b);
    const std::size_t h = x.coeffs_.size();
    std::vector<std::int64_t> c(h, 0);
    for (std::size_t i = 0; i < h; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < h; ++j) {
        if (y.coeffs_[j] == 0) continue;
        const std::size_t e = i + j;
        if (e < h)
          c[e] += x.coeffs_[i] * y.coeffs_[j];
        else
          c[e - h] -= x.coeffs_[i] * y.coeffs_[j];  // zeta^h = -1
      }
    }
    return CycElement(x.m_, std::move(c));
  }
  CycElement& operator+=(const CycElement& b) { return *this = *this + b; }
  CycElement& operator-=(const CycElement& b) { return *this = *this - b; }
  CycElement& operator*=(const CycElement& b) { return *this = *this * b; }

  friend bool operator==(const CycElement& a, const CycElement& b) {
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const CycElement& a, const CycElement& b) { return !(a == b); }

  // zeta^j -> zeta^{-j}
  CycElement conj() const {
    const std::size_t h = coeffs_.size();
    std::vector<std::int64_t> c(h, 0);
    c[0] = coeffs_[0];
    for (std::size_t j = 1; j < h; ++j) c[h - j] -= coeffs_[j];  // zeta^{-j} = -zeta^{h-j}
    return CycElement(m_, std::move(c));
  }

  CycElement abs_sq() const { return *this * conj(); }

  // multiply by zeta_{2^m}^e without forming the product element
  CycElement times_zeta_pow(std::int64_t e) const {
    const std::int64_t period = std::int64_t{1} << m_;
    e %= period;
    if (e < 0) e += period;
    if (m_ <= 1) {
      CycElement r = *this;
      if (e == 1 && m_ == 1) r.coeffs_[0] = -r.coeffs_[0];
      return r;
    }
    const std::int64_t h = period / 2;
    bool flip = e >= h;
    if (flip) e -= h;
    std::vector<std::int64_t> c(static_cast<std::size_t>(h), 0);
    for (std::int64_t j = 0; j < h; ++j) {
      if (coeffs_[j] == 0) continue;
      std::int64_t t = j + e;
      bool neg = flip;
      if (t >= h) {
        t -= h;
        neg = !neg;
      }
      c[static_cast<std::size_t>(t)] += neg ? -coeffs_[j] : coeffs_[j];
    }
    return CycElement(m_, std::move(c));
  }

  // exact division by 2^s; throws if any coefficient is not divisible
  CycElement div_exact_pow2(int s) const {
    CycElement r = *this;
    const std::int64_t d = std::int64_t{1} << s;
    for (auto& c : r.coeffs_) {
      if (c % d != 0)
        throw std::domain_error("coefficient " + std::to_string(c) +
                                " not divisible by 2^" + std::to_string(s));
      c /= d;
    }
    return r;
  }

  std::complex<double> to_complex() const {
    std::complex<double> v = 0;
    const double period = std::ldexp(1.0, m_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const double arg = 2.0 * std::numbers::pi * static_cast<double>(j) / period;
      v += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return v;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      if (!s.empty()) s += coeffs_[j] > 0 ? " + " : " - ";
      else if (coeffs_[j] < 0) s += "-";
      const std::int64_t a = coeffs_[j] < 0 ? -coeffs_[j] : coeffs_[j];
      if (j == 0)
        s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "z" + std::to_string(std::int64_t{1} << m_) + (j > 1 ? "^" + std::to_string(j) : "");
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  static std::pair<CycElement, CycElement> common(const CycElement& a, const CycElement& b) {
    const int m = std::max(a.m_, b.m_);
    return {a.lift(m), b.lift(m)};
  }

  int m_;
  std::vector<std::int64_t> coeffs_;
};

inline CycElement zeta_pow(int m, std::int64_t e) { return CycElement::zeta_pow(m, e); }

}  // namespace rooth
