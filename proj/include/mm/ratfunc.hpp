#pragma once

#include <string>
#include <vector>

#include "mm/laurent.hpp"

namespace mm {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(Q(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(const Q& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Q> coeffs);
  static UPoly x_pow(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Q(0); }
  Q lead() const { return c_.empty() ? Q(0) : c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  // Euclidean division over Q.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
  static UPoly gcd(const UPoly& a, const UPoly& b);  // monic, or zero
  UPoly derivative() const;
  UPoly monic() const;
  // x * d/dx
  UPoly theta() const;

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Q> c_;
};

// Element of Q(x) as num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Q& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& n, const UPoly& d);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // x * d/dx
  RatFunc theta() const;
  std::string str(const std::string& var = "q") const;

 private:
  UPoly num_, den_;
};

// Univariate Laurent polynomial in `var` (no other variables) as a rational function.
RatFunc to_ratfunc(const LaurentPoly& p, const std::string& var = "q");

}  // namespace mm
