#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace mm {

using Q = mpq_class;

// Canonical text form of a rational: "n" for integers, "n/d" otherwise.
std::string rat_str(const Q& x);
Q parse_rat(const std::string& s);

// Sparse multivariate Laurent polynomial with rational coefficients.
// Variables are kept sorted (natural order, so a2 < a10) and unused ones are dropped,
// which makes structural equality the same as mathematical equality.
class LaurentPoly {
 public:
  using Exp = std::vector<int>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Q& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly var(const std::string& name, int power = 1);
  static LaurentPoly monomial(const std::vector<std::string>& vars, const Exp& e, const Q& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exp, Q>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Q constant_term() const;

  // Exponent of variable v in a term (0 when v is absent).
  int exponent(const Exp& e, const std::string& v) const;
  int max_degree(const std::string& v) const;
  int min_degree(const std::string& v) const;
  // Coefficient of v^k, as a polynomial in the remaining variables.
  LaurentPoly coeff(const std::string& v, int k) const;
  // Total degree under per-variable weights (missing variables weigh 0). Requires homogeneity.
  bool homogeneous(const std::map<std::string, int>& weight, int* degree) const;

  LaurentPoly subs(const std::string& v, const LaurentPoly& value) const;
  LaurentPoly subs(const std::map<std::string, Q>& values) const;
  LaurentPoly pow(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact quotient a/b; throws if b does not divide a.
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

  bool all_coefficients_positive() const;
  std::string str() const;

 private:
  void normalize();
  LaurentPoly widened(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  std::map<Exp, Q> terms_;
};

bool natural_less(const std::string& a, const std::string& b);

}  // namespace mm
