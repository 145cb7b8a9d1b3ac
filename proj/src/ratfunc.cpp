#include "mm/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace mm {

UPoly::UPoly(const Q& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_pow(int k) {
  std::vector<Q> c(k + 1, Q(0));
  c[k] = 1;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Q> c(std::max(a.c_.size(), b.c_.size()), Q(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Q> c(a.c_.size() + b.c_.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Q> r = a.c_;
  int db = b.degree();
  std::vector<Q> q(std::max(0, a.degree() - db + 1), Q(0));
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    Q t = r[k] / b.c_[db];
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b.c_[j];
  }
  quot = UPoly(std::move(q));
  rem = UPoly(std::move(r));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Q> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(c));
}

UPoly UPoly::theta() const {
  std::vector<Q> c = c_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= static_cast<long>(k);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly out = *this;
  Q l = lead();
  for (auto& x : out.c_) x /= l;
  return out;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  LaurentPoly p;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) p += LaurentPoly(c_[k]) * LaurentPoly::var(var, static_cast<int>(k));
  return p.str();
}

RatFunc::RatFunc(const UPoly& n, const UPoly& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(1);
    return;
  }
  UPoly g = UPoly::gcd(n, d), r;
  UPoly::divmod(n, g, num_, r);
  UPoly::divmod(d, g, den_, r);
  Q l = den_.lead();
  num_ = num_ * UPoly(1 / l);
  den_ = den_ * UPoly(1 / l);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::theta() const {
  // theta(n/d) = (theta(n) d - n theta(d)) / d^2
  return RatFunc(num_.theta() * den_ - num_ * den_.theta(), den_ * den_);
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc to_ratfunc(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return RatFunc();
  for (auto& v : p.vars())
    if (v != var) throw std::invalid_argument("to_ratfunc: unexpected variable " + v);
  int lo = p.min_degree(var), hi = p.max_degree(var);
  int shift = lo < 0 ? -lo : 0;
  std::vector<Q> c(hi + shift + 1, Q(0));
  for (auto& [e, coef] : p.terms()) c[(e.empty() ? 0 : e[0]) + shift] = coef;
  return RatFunc(UPoly(std::move(c)), UPoly::x_pow(shift));
}

}  // namespace mm
