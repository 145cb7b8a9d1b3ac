#include "mm/potential.hpp"

#include <algorithm>
#include <memory>

#include "mm/weyl.hpp"

namespace mm {

std::vector<std::string> crystal_symbols(int count, const std::string& stem) {
  std::vector<std::string> s;
  for (int m = 1; m <= count; ++m) s.push_back(stem + std::to_string(m));
  return s;
}

Q factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(f);
}

Potential potential_projective(int n) {
  if (n < 1) throw std::invalid_argument("potential_projective: n must be positive");
  Potential p;
  p.vars = crystal_symbols(n, "x");
  p.coxeter = n + 1;
  p.quantum = LaurentPoly::monomial(p.vars, std::vector<int>(n, -1), Q(1));
  for (const auto& v : p.vars) p.linear += LaurentPoly::var(v);
  return p;
}

static std::shared_ptr<const RootDatum> sl(int n) {
  return std::make_shared<const RootDatum>(build_root_datum(CartanType{'A', n - 1}));
}

std::vector<int> standard_word_grassmannian(int k, int n) {
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("standard_word_grassmannian: need 1 <= k <= n-1");
  std::vector<int> wP;
  for (int j = k; j >= 1; --j)
    for (int t = 0; t < n - k; ++t) wP.push_back(j + t);
  std::vector<int> word(wP.rbegin(), wP.rend());

  auto d = sl(n);
  WeylElt w = from_word(*d, word);
  if (!w.word || w.length != k * (n - k)) throw std::logic_error("Grassmannian word is not reduced");
  std::vector<int> all, ip;
  for (int i = 1; i < n; ++i) {
    all.push_back(i);
    if (i != k) ip.push_back(i);
  }
  WeylElt wPelt = multiply(*d, longest_element(*d, ip), longest_element(*d, all));
  if (inverse(*d, wPelt) != w) throw std::logic_error("Grassmannian word does not spell w_P^{-1}");
  return word;
}

PolyMatrix lusztig_matrix(int n, const std::vector<int>& word, const std::vector<std::string>& syms) {
  if (syms.size() < word.size()) throw std::invalid_argument("lusztig_matrix: not enough symbols");
  PolyMatrix u = PolyMatrix::identity(n);
  for (std::size_t m = 0; m < word.size(); ++m) {
    int i = word[m];
    if (i < 1 || i > n - 1) throw std::invalid_argument("lusztig_matrix: letter out of range");
    // right multiplication by I + a E_{i,i+1}: column i+1 += a * column i
    LaurentPoly a = LaurentPoly::var(syms[m]);
    for (int r = 0; r < n; ++r)
      if (!u(r, i - 1).is_zero()) u(r, i) += u(r, i - 1) * a;
  }
  return u;
}

static PolyMatrix submatrix(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  PolyMatrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (rows[r] < 1 || rows[r] > static_cast<int>(g.rows()) || cols[c] < 1 || cols[c] > static_cast<int>(g.cols()))
        throw std::invalid_argument("minor: index out of range");
      s(r, c) = g(rows[r] - 1, cols[c] - 1);
    }
  return s;
}

LaurentPoly generalized_minor(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix m = submatrix(g, rows, cols);
  std::size_t k = m.rows();
  if (k == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (m(p, p).is_zero()) {
      std::size_t s = p + 1;
      while (s < k && m(s, p).is_zero()) ++s;
      if (s == k) return LaurentPoly();
      for (std::size_t c = 0; c < k; ++c) std::swap(m(p, c), m(s, c));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) m(i, j) = exact_div(m(i, j) * m(p, p) - m(i, p) * m(p, j), prev);
    prev = m(p, p);
  }
  return sign > 0 ? m(k - 1, k - 1) : -m(k - 1, k - 1);
}

LaurentPoly minor_by_expansion(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix m = submatrix(g, rows, cols);
  std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  LaurentPoly det;
  do {
    LaurentPoly t(1);
    for (std::size_t i = 0; i < k && !t.is_zero(); ++i) t *= m(i, perm[i]);
    if (t.is_zero()) continue;
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    det += inv % 2 ? -t : t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<int> word_permutation(int n, const std::vector<int>& word) {
  std::vector<int> perm(n);
  for (int x = 1; x <= n; ++x) {
    int v = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (v == *it)
        v = *it + 1;
      else if (v == *it + 1)
        v = *it;
    }
    perm[x - 1] = v;
  }
  return perm;
}

std::vector<int> image_of_initial(const std::vector<int>& perm, int i) {
  std::vector<int> s(perm.begin(), perm.begin() + i);
  std::sort(s.begin(), s.end());
  return s;
}

TypeAPotential potential_typeA_detail(int k, int n, int max_vars) {
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("potential_typeA: need 1 <= k <= n-1");
  int ell = k * (n - k);
  if (ell > max_vars)
    throw std::invalid_argument("potential_typeA: Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs " +
                                std::to_string(ell) + " variables, bound is " + std::to_string(max_vars));
  TypeAPotential out;
  out.word = standard_word_grassmannian(k, n);
  auto syms = crystal_symbols(ell);
  PolyMatrix u = lusztig_matrix(n, out.word, syms);

  auto d = sl(n);
  int i = n - k;  // the dual node
  std::vector<int> all, star;
  for (int j = 1; j < n; ++j) {
    all.push_back(j);
    if (j != i) star.push_back(j);
  }
  auto w0 = word_permutation(n, *longest_element(*d, all).word);
  auto w0star = longest_element(*d, star);
  auto den_perm = word_permutation(n, *w0star.word);
  std::vector<int> num_word = *w0star.word;
  num_word.push_back(i);
  auto num_perm = word_permutation(n, num_word);

  out.cols = image_of_initial(w0, i);
  out.den_rows = image_of_initial(den_perm, i);
  out.num_rows = image_of_initial(num_perm, i);
  out.numerator = generalized_minor(u, out.num_rows, out.cols);
  out.denominator = generalized_minor(u, out.den_rows, out.cols);
  if (!out.denominator.is_monomial()) throw std::logic_error("potential_typeA: denominator minor is not a monomial");
  if (!out.numerator.all_coefficients_positive()) throw std::logic_error("potential_typeA: numerator minor is not positive");

  Potential& p = out.potential;
  p.vars = syms;
  p.coxeter = n;
  for (const auto& s : syms) p.linear += LaurentPoly::var(s);
  p.quantum = out.numerator * out.denominator.pow(-1);
  return out;
}

Potential potential_typeA(int k, int n, int max_vars) { return potential_typeA_detail(k, n, max_vars).potential; }

namespace {

struct CtSearch {
  std::vector<std::vector<int>> exps;  // term exponents
  std::vector<Q> coeffs;
  std::vector<std::vector<int>> suffix_min, suffix_max;  // per term index, per variable
  std::vector<Q> inv_fact;
  long long budget = 0, nodes = 0;
  Q total = 0;

  void run(std::size_t t, int remaining, std::vector<int>& acc, const Q& weight) {
    if (++nodes > budget) throw BudgetExceeded("constant_term_power: enumeration budget exceeded");
    std::size_t nv = acc.size();
    for (std::size_t v = 0; v < nv; ++v) {
      long lo = static_cast<long>(remaining) * suffix_min[t][v];
      long hi = static_cast<long>(remaining) * suffix_max[t][v];
      if (-acc[v] < lo || -acc[v] > hi) return;
    }
    if (t + 1 == exps.size()) {
      Q w = weight * inv_fact[remaining];
      for (int r = 0; r < remaining; ++r) w *= coeffs[t];
      total += w;
      return;
    }
    Q w = weight;
    for (int k = 0; k <= remaining; ++k) {
      if (k > 0) w *= coeffs[t];
      for (std::size_t v = 0; v < nv; ++v) acc[v] += k * exps[t][v];
      run(t + 1, remaining - k, acc, w * inv_fact[k]);
      for (std::size_t v = 0; v < nv; ++v) acc[v] -= k * exps[t][v];
    }
  }
};

}  // namespace

Q constant_term_power(const LaurentPoly& f, int m, long long budget) {
  if (m < 0) throw std::invalid_argument("constant_term_power: negative power");
  if (m == 0) return Q(1);
  if (f.is_zero()) return Q(0);
  CtSearch s;
  s.budget = budget;
  std::size_t nv = f.vars().size();
  for (auto& [e, c] : f.terms()) {
    s.exps.push_back(e);
    s.coeffs.push_back(c);
  }
  std::size_t nt = s.exps.size();
  s.suffix_min.assign(nt, std::vector<int>(nv));
  s.suffix_max.assign(nt, std::vector<int>(nv));
  for (std::size_t t = nt; t-- > 0;)
    for (std::size_t v = 0; v < nv; ++v) {
      int x = s.exps[t][v];
      s.suffix_min[t][v] = t + 1 < nt ? std::min(x, s.suffix_min[t + 1][v]) : x;
      s.suffix_max[t][v] = t + 1 < nt ? std::max(x, s.suffix_max[t + 1][v]) : x;
    }
  s.inv_fact.resize(m + 1);
  for (int k = 0; k <= m; ++k) s.inv_fact[k] = 1 / factorial(k);
  std::vector<int> acc(nv, 0);
  s.run(0, m, acc, Q(1));
  return s.total * factorial(m);
}

Q constant_term_power(const Potential& f, int m, long long budget) {
  return constant_term_power(f.at_q1(), m, budget);
}

Q gw_from_constant_term(const Potential& f, int d, long long budget) {
  if (d < 0) throw std::invalid_argument("gw_from_constant_term: negative degree");
  int m = f.coxeter * d;
  return constant_term_power(f, m, budget) / factorial(m);
}

}  // namespace mm
