#pragma once

#include <cstdlib>
#include <map>
#include <string>

namespace arcd {

// Exact Gaussian integer a + b*i. All algebra coefficients live here: surgery
// only ever produces units, and the Hecke dictionary multiplies by powers of i.
struct GaussInt {
  long long re = 0;
  long long im = 0;

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr GaussInt conj() const { return {re, -im}; }

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussInt a, GaussInt b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out += std::to_string(re);
    if (im != 0) {
      if (im > 0 && re != 0) out += "+";
      if (im == -1)
        out += "-i";
      else if (im == 1)
        out += "i";
      else
        out += std::to_string(im) + "i";
    }
    return out;
  }
};

constexpr GaussInt gauss_mul(GaussInt a, GaussInt b) { return a * b; }

// i^k for any integer k, period 4.
constexpr GaussInt i_pow(long long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Laurent polynomial in q with integer coefficients; zero coefficients are
// never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long long coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }

  void add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_.emplace(exp, coeff);
    } else if ((it->second += coeff) == 0) {
      c_.erase(it);
    }
  }

  bool is_zero() const { return c_.empty(); }
  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }
  const std::map<int, long long>& terms() const { return c_; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (auto [e, c] : b.c_) out.add_term(e, c);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.c_)
      for (auto [eb, cb] : b.c_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // "0", "q^1", "2 + 2*q^1 + q^2", "-q^-1 + 3"; exponents ascending, the
  // q^0 term prints as a bare coefficient.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto [e, c] : c_) {
      long long mag = std::llabs(c);
      std::string body;
      if (e == 0)
        body = std::to_string(mag);
      else if (mag == 1)
        body = "q^" + std::to_string(e);
      else
        body = std::to_string(mag) + "*q^" + std::to_string(e);
      if (out.empty())
        out = (c < 0 ? "-" : "") + body;
      else
        out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  std::map<int, long long> c_;
};

}  // namespace arcd
