#include "mm/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mm {

std::string rat_str(const Q& x) {
  Q c(x);
  c.canonicalize();
  return c.get_str();
}

Q parse_rat(const std::string& s) {
  Q out;
  if (out.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  out.canonicalize();
  return out;
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_[{}] = Q(c);
}

LaurentPoly::LaurentPoly(const Q& c) {
  if (c != 0) terms_[{}] = c;
}

LaurentPoly LaurentPoly::var(const std::string& name, int power) {
  return monomial({name}, {power}, Q(1));
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const Exp& e, const Q& c) {
  if (vars.size() != e.size()) throw std::invalid_argument("monomial: arity mismatch");
  // sort variables, merging duplicates
  std::map<std::string, int, bool (*)(const std::string&, const std::string&)> acc(natural_less);
  for (std::size_t k = 0; k < vars.size(); ++k) acc[vars[k]] += e[k];
  LaurentPoly p;
  Exp ex;
  for (auto& [v, k] : acc) {
    p.vars_.push_back(v);
    ex.push_back(k);
  }
  if (c != 0) p.terms_[ex] = c;
  p.normalize();
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

Q LaurentPoly::constant_term() const {
  Exp zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Q(0) : it->second;
}

int LaurentPoly::exponent(const Exp& e, const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  return it == vars_.end() ? 0 : e[it - vars_.begin()];
}

int LaurentPoly::max_degree(const std::string& v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int best = exponent(terms_.begin()->first, v);
  for (auto& [e, c] : terms_) best = std::max(best, exponent(e, v));
  return best;
}

int LaurentPoly::min_degree(const std::string& v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int best = exponent(terms_.begin()->first, v);
  for (auto& [e, c] : terms_) best = std::min(best, exponent(e, v));
  return best;
}

LaurentPoly LaurentPoly::coeff(const std::string& v, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return k == 0 ? *this : LaurentPoly();
  std::size_t pos = it - vars_.begin();
  LaurentPoly out;
  out.vars_ = vars_;
  for (auto& [e, c] : terms_)
    if (e[pos] == k) {
      Exp e2 = e;
      e2[pos] = 0;
      out.terms_[e2] = c;
    }
  out.normalize();
  return out;
}

bool LaurentPoly::homogeneous(const std::map<std::string, int>& weight, int* degree) const {
  bool first = true;
  int deg = 0;
  for (auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto w = weight.find(vars_[k]);
      if (w != weight.end()) d += w->second * e[k];
    }
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree) *degree = deg;
  return true;
}

LaurentPoly LaurentPoly::subs(const std::string& v, const LaurentPoly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return *this;
  std::size_t pos = it - vars_.begin();
  std::map<int, LaurentPoly> powers;
  LaurentPoly out;
  for (auto& [e, c] : terms_) {
    int k = e[pos];
    auto pw = powers.find(k);
    if (pw == powers.end()) pw = powers.emplace(k, value.pow(k)).first;
    std::vector<std::string> vs;
    Exp rest;
    for (std::size_t j = 0; j < vars_.size(); ++j)
      if (j != pos) {
        vs.push_back(vars_[j]);
        rest.push_back(e[j]);
      }
    out += monomial(vs, rest, c) * pw->second;
  }
  return out;
}

LaurentPoly LaurentPoly::subs(const std::map<std::string, Q>& values) const {
  LaurentPoly out = *this;
  for (auto& [v, x] : values) {
    bool present = std::find(out.vars_.begin(), out.vars_.end(), v) != out.vars_.end();
    if (x == 0 && present && out.min_degree(v) < 0) throw std::domain_error("substituting 0 into negative power of " + v);
    out = out.subs(v, LaurentPoly(x));
  }
  return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
    auto& [e, c] = *terms_.begin();
    Exp e2 = e;
    for (auto& x : e2) x *= k;
    Q c2 = 1;
    for (int j = 0; j < -k; ++j) c2 /= c;
    return monomial(vars_, e2, c2);
  }
  LaurentPoly result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::widened(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k)
    where[k] = std::find(vars.begin(), vars.end(), vars_[k]) - vars.begin();
  LaurentPoly out;
  out.vars_ = vars;
  for (auto& [e, c] : terms_) {
    Exp e2(vars.size(), 0);
    for (std::size_t k = 0; k < vars_.size(); ++k) e2[where[k]] = e[k];
    out.terms_[e2] = c;
  }
  return out;
}

static std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), natural_less);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  auto vs = merge_vars(vars_, o.vars_);
  if (vs != vars_) *this = widened(vs);
  LaurentPoly b = o.widened(vs);
  for (auto& [e, c] : b.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) {
    *this = LaurentPoly();
    return *this;
  }
  auto vs = merge_vars(vars_, o.vars_);
  LaurentPoly a = widened(vs), b = o.widened(vs);
  LaurentPoly out;
  out.vars_ = vs;
  Exp e(vs.size());
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < vs.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, fresh] = out.terms_.emplace(e, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  out.normalize();
  *this = std::move(out);
  return *this;
}

void LaurentPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vs;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) vs.push_back(vars_[k]);
  std::map<Exp, Q> t;
  for (auto& [e, c] : terms_) {
    Exp e2;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (used[k]) e2.push_back(e[k]);
    t[e2] = c;
  }
  vars_ = std::move(vs);
  terms_ = std::move(t);
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  auto vs = merge_vars(a.vars_, b.vars_);
  LaurentPoly r = a.widened(vs), d = b.widened(vs);
  const auto& [lb, cb] = *d.terms_.rbegin();
  LaurentPoly quot;
  // each quotient term t must satisfy t + trailing(b) >= trailing(a) in lex order
  LaurentPoly::Exp floor(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) floor[k] = r.terms_.begin()->first[k] - d.terms_.begin()->first[k];
  for (std::size_t guard = 0; !r.is_zero(); ++guard) {
    if (guard > 1000000) throw std::domain_error("exact_div: no termination");
    LaurentPoly::Exp lr = r.terms_.rbegin()->first;
    Q cr = r.terms_.rbegin()->second;
    LaurentPoly::Exp t(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) t[k] = lr[k] - lb[k];
    if (t < floor) throw std::domain_error("exact_div: not divisible");
    LaurentPoly term;
    term.vars_ = vs;
    term.terms_[t] = cr / cb;
    r -= term * d;
    r = r.widened(vs);
    quot += term;
  }
  quot.normalize();
  return quot;
}

bool LaurentPoly::all_coefficients_positive() const {
  for (auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Q mag = abs(c);
    bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (unit || mag != 1) os << rat_str(mag);
    bool need_star = !unit && mag != 1;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << vars_[k];
      if (e[k] != 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace mm
