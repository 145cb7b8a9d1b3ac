#include "mm/period.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mm/rootsys.hpp"

namespace mm {

void split_linear_in_q(const Matrix<LaurentPoly>& M, Matrix<Q>& M0, Matrix<Q>& M1) {
  std::size_t n = M.rows();
  M0 = Matrix<Q>(n, n);
  M1 = Matrix<Q>(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentPoly& e = M(r, c);
      if (e.is_zero()) continue;
      for (const auto& v : e.vars())
        if (v != "q") throw std::invalid_argument("period recursion: entry depends on " + v);
      if (e.min_degree("q") < 0 || e.max_degree("q") > 1)
        throw std::invalid_argument("period recursion: entry is not linear in q");
      M0(r, c) = e.coeff("q", 0).constant_term();
      M1(r, c) = e.coeff("q", 1).constant_term();
    }
}

static std::vector<Q> solve(Matrix<Q> a, std::vector<Q> b) {
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("period recursion: singular system");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Q f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a(r, r);
  return b;
}

static std::vector<Q> mat_vec(const Matrix<Q>& m, const std::vector<Q>& v) {
  std::vector<Q> out(m.rows(), Q(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

PeriodSeries quantum_period_shifted(const Matrix<Q>& M0, const Matrix<Q>& M1, int top, int max_degree) {
  std::size_t n = M0.rows();
  Q lambda = M0(top, top);
  std::vector<Q> s(n, Q(0));
  s[top] = 1;
  for (std::size_t r = 0; r < n; ++r)
    if (mat_vec(M0, s)[r] != (static_cast<int>(r) == top ? lambda : Q(0)))
      throw std::domain_error("period recursion: top class is not an eigenvector of the q^0 part");
  PeriodSeries out;
  out.coefficients.push_back(1);
  out.trace.push_back(s);
  for (int d = 1; d <= max_degree; ++d) {
    Matrix<Q> a = M0.scaled(Q(-1));
    for (std::size_t k = 0; k < n; ++k) a(k, k) += d + lambda;
    s = solve(a, mat_vec(M1, s));
    out.coefficients.push_back(s[top]);
    out.trace.push_back(s);
  }
  return out;
}

PeriodSeries quantum_period(const ConnMatrix& M, int max_degree) {
  if (max_degree < 1) throw std::invalid_argument("quantum_period: max degree must be >= 1");
  Matrix<Q> M0, M1;
  split_linear_in_q(M.entries, M0, M1);
  Matrix<Q> p = M0;
  for (std::size_t k = 1; k < M0.rows(); ++k) p = p * M0;
  if (!p.is_zero()) throw std::domain_error("quantum_period: q^0 part is not nilpotent");
  return quantum_period_shifted(M0, M1, top_index(M.basis), max_degree);
}

std::vector<LaurentPoly> hbar_rescale(const PeriodSeries& s, int coxeter, const std::string& hbar) {
  std::vector<LaurentPoly> out;
  for (std::size_t d = 0; d < s.coefficients.size(); ++d)
    out.push_back(LaurentPoly(s.coefficients[d]) * LaurentPoly::var(hbar, -coxeter * static_cast<int>(d)));
  return out;
}

std::vector<LaurentPoly> quantum_period_hbar(const ConnMatrix& M, int max_degree, const std::string& hbar) {
  Matrix<Q> M0, M1;
  split_linear_in_q(M.entries, M0, M1);
  std::size_t n = M0.rows();
  int top = top_index(M.basis);
  LaurentPoly inv_h = LaurentPoly::var(hbar, -1);
  auto apply = [&](const Matrix<Q>& m, const std::vector<LaurentPoly>& v) {
    std::vector<LaurentPoly> out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c) != 0 && !v[c].is_zero()) out[r] += LaurentPoly(m(r, c)) * v[c];
    return out;
  };
  std::vector<LaurentPoly> s(n);
  s[top] = 1;
  std::vector<LaurentPoly> tops{s[top]};
  for (int d = 1; d <= max_degree; ++d) {
    // (d - M0/hbar)^{-1} = sum_k (M0/(hbar d))^k / d, finite since M0 is nilpotent
    std::vector<LaurentPoly> rhs = apply(M1, s);
    for (auto& x : rhs) x *= inv_h;
    std::vector<LaurentPoly> term = rhs, acc(n);
    LaurentPoly scale = inv_h * LaurentPoly(Q(1, d));
    for (std::size_t k = 0; k <= n; ++k) {
      bool zero = true;
      for (std::size_t r = 0; r < n; ++r) {
        acc[r] += term[r] * LaurentPoly(Q(1, d));
        if (!term[r].is_zero()) zero = false;
      }
      if (zero) break;
      term = apply(M0, term);
      for (auto& x : term) x *= scale;
    }
    s = acc;
    tops.push_back(s[top]);
  }
  return tops;
}

Q bruhat_path_count(const CosetReps& reps) {
  const RootDatum& d = *reps.datum;
  int top = top_index(reps);
  int start = pi_P(reps, multiply(d, reps.reps[top], reflection(d, reps.parabolic.gamma)));
  std::vector<Q> paths(reps.size(), Q(0));
  paths[top] = 1;
  for (int w = top - 1; w >= 0; --w)
    for (const auto& c : bruhat_covers_up(reps, w)) paths[w] += paths[c.target];
  return paths[start];
}

std::string ScalarOperator::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const RatFunc& p = coefficients[k];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string th = k == 0 ? "" : (k == 1 ? "theta" : "theta^" + std::to_string(k));
    if (p == RatFunc(1) && k > 0)
      os << th;
    else
      os << "(" << p.str() << ")" << (k > 0 ? "*" + th : "");
  }
  return first ? "0" : os.str();
}

// Coefficients p with v = sum p_j rows[j], or false when v is independent.
static bool express(const std::vector<std::vector<RatFunc>>& rows, const std::vector<RatFunc>& v, std::vector<RatFunc>& p) {
  std::size_t k = rows.size(), n = v.size();
  // augmented system: columns are rows[j], right side v; n equations
  Matrix<RatFunc> a(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = rows[j][i];
    a(i, k) = v[i];
  }
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) continue;
    for (std::size_t cc = 0; cc <= k; ++cc) std::swap(a(r, cc), a(piv, cc));
    RatFunc inv = RatFunc(1) / a(r, c);
    for (std::size_t cc = 0; cc <= k; ++cc) a(r, cc) *= inv;
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == r || a(rr, c).is_zero()) continue;
      RatFunc f = a(rr, c);
      for (std::size_t cc = 0; cc <= k; ++cc) a(rr, cc) -= f * a(r, cc);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t rr = r; rr < n; ++rr)
    if (!a(rr, k).is_zero()) return false;
  p.assign(k, RatFunc());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) p[pivot_col[i]] = a(i, k);
  return true;
}

ScalarOperator cyclic_scalar_operator(const Matrix<RatFunc>& M, const std::vector<RatFunc>& start) {
  std::size_t n = M.rows();
  if (start.size() != n) throw std::invalid_argument("cyclic_scalar_operator: start has wrong size");
  std::vector<std::vector<RatFunc>> rows{start};
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& prev = rows.back();
    std::vector<RatFunc> next(n);
    for (std::size_t c = 0; c < n; ++c) {
      RatFunc s = prev[c].theta();
      for (std::size_t r = 0; r < n; ++r)
        if (!prev[r].is_zero() && !M(r, c).is_zero()) s += prev[r] * M(r, c);
      next[c] = s;
    }
    std::vector<RatFunc> p;
    if (express(rows, next, p)) {
      ScalarOperator L;
      for (auto& x : p) L.coefficients.push_back(-x);
      L.coefficients.push_back(RatFunc(1));
      return L;
    }
    rows.push_back(std::move(next));
  }
  throw std::logic_error("cyclic_scalar_operator: no dependency found");
}

ScalarOperator cyclic_scalar_operator(const Matrix<LaurentPoly>& M, const std::vector<Q>& start) {
  Matrix<RatFunc> m = M.map([](const LaurentPoly& p) { return to_ratfunc(p, "q"); });
  std::vector<RatFunc> s;
  for (const auto& x : start) s.emplace_back(x);
  return cyclic_scalar_operator(m, s);
}

std::vector<Q> apply_operator(const ScalarOperator& L, const std::vector<Q>& series) {
  std::size_t D = series.size();
  // clear denominators with their product
  UPoly common(1);
  for (const auto& p : L.coefficients) common = common * p.den();
  std::vector<Q> out(D, Q(0));
  for (int k = 0; k <= L.order(); ++k) {
    const RatFunc& p = L.coefficients[k];
    if (p.is_zero()) continue;
    UPoly num, rem;
    UPoly::divmod(common * p.num(), p.den(), num, rem);
    std::vector<Q> th(D);
    for (std::size_t d = 0; d < D; ++d) {
      Q f = 1;
      for (int j = 0; j < k; ++j) f *= static_cast<long>(d);
      th[d] = series[d] * f;
    }
    for (int a = 0; a <= num.degree(); ++a)
      for (std::size_t d = 0; d + a < D; ++d) out[d + a] += num[a] * th[d];
  }
  return out;
}

D4Split d4_split(const ConnMatrix& M) {
  const CosetReps& b = M.basis;
  const RootDatum& d = *b.datum;
  if (d.type.family != 'D' || d.rank != 4 || b.node() != 1) throw std::invalid_argument("d4_split: needs D4 with node 1");
  D4Split s;
  for (std::size_t w = 0; w < b.size(); ++w)
    if (b.reps[w].length == 3) (s.plus < 0 ? s.plus : s.minus) = static_cast<int>(w);
  std::size_t n = b.size();
  s.kernel_line.assign(n, Q(0));
  s.kernel_line[s.plus] = 1;
  s.kernel_line[s.minus] = -1;
  for (std::size_t r = 0; r < n; ++r)
    if (M(r, s.plus) != M(r, s.minus)) throw std::logic_error("d4_split: sigma3+ - sigma3- is not in the kernel");

  std::vector<std::vector<Q>> basis;
  for (std::size_t w = 0; w < n; ++w) {
    if (static_cast<int>(w) == s.minus) continue;
    std::vector<Q> v(n, Q(0));
    v[w] = 1;
    if (static_cast<int>(w) == s.plus) v[s.minus] = 1;
    basis.push_back(v);
  }
  s.complement = Matrix<Q>(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) s.complement(r, j) = basis[j][r];

  std::size_t m = basis.size();
  s.restricted = Matrix<LaurentPoly>(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<LaurentPoly> img(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (basis[j][c] != 0) img[r] += M(r, c) * LaurentPoly(basis[j][c]);
    if (img[s.plus] != img[s.minus]) throw std::logic_error("d4_split: complement is not invariant");
    std::size_t i = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (static_cast<int>(w) == s.minus) continue;
      s.restricted(i++, j) = img[w];
    }
  }
  return s;
}

PeriodSeries equivariant_bessel(const Q& h, int max_degree) {
  Q two_h = 2 * h;
  if (two_h.get_den() == 1 && two_h < 0) throw std::invalid_argument("equivariant_bessel: 2h is a negative integer");
  PeriodSeries s;
  s.coefficients.push_back(1);
  for (int k = 1; k <= max_degree; ++k) s.coefficients.push_back(s.coefficients.back() / (Q(k) * (k + two_h)));
  return s;
}

std::vector<Q> bessel_operator_residual(const PeriodSeries& s, const Q& h) {
  std::vector<Q> r;
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    Q v = ((k + h) * (k + h) - h * h) * s.coefficients[k];
    if (k > 0) v -= s.coefficients[k - 1];
    r.push_back(v);
  }
  return r;
}

double bessel_i_series(double nu, double y) {
  double x = 0.25 * y * y;
  double term = std::pow(0.5 * y, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (k * (k + nu));
    sum += term;
    double ratio = x / ((k + 1) * (k + 1 + nu));
    if (ratio < 0.5) {
      // geometric tail bound once the ratio has dropped below 1
      double tail = term * ratio / (1.0 - ratio);
      if (tail <= 1e-17 * sum) return sum;
    }
  }
  throw std::runtime_error("bessel_i_series: no convergence");
}

namespace {

const double kNodes[8] = {0.000000000000000000, 0.207784955007898468, 0.405845151377397167, 0.586087235467691130,
                          0.741531185599394440, 0.864864423359769073, 0.949107912342758525, 0.991455371120812639};
const double kKronrod[8] = {0.209482141084727828, 0.204432940075298892, 0.190350578064785410, 0.169004726639267903,
                            0.140653259715525919, 0.104790010322250184, 0.063092092629978553, 0.022935322010529225};
const double kGauss[4] = {0.417959183673469388, 0.381830050505118945, 0.279705391489276668, 0.129484966168869693};

// G7-K15 on [a, b]; returns the Kronrod value and stores the error estimate.
double gk15(const std::function<double(double)>& f, double a, double b, double* err) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double k = kKronrod[0] * fc, g = kGauss[0] * fc;
  for (int j = 1; j < 8; ++j) {
    double f1 = f(c - h * kNodes[j]), f2 = f(c + h * kNodes[j]);
    k += kKronrod[j] * (f1 + f2);
    if (j % 2 == 0) g += kGauss[j / 2] * (f1 + f2);
  }
  *err = std::fabs((k - g) * h);
  return k * h;
}

double adaptive(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  double err = 0;
  double v = gk15(f, a, b, &err);
  if (err <= tol) return v;
  if (depth == 0) throw std::runtime_error("bessel_k_quadrature: no convergence");
  double m = 0.5 * (a + b);
  return adaptive(f, a, m, 0.5 * tol, depth - 1) + adaptive(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace

double bessel_k_quadrature(double nu, double y, double tol) {
  if (y <= 0) throw std::invalid_argument("bessel_k_quadrature: y must be positive");
  // integrand relative to its value at 0 is exp(-(y(cosh t - 1) - |nu| t)); cut where it is below e^-60
  double T = 1.0;
  while (y * (std::cosh(T) - 1.0) - std::fabs(nu) * T < 60.0) T += 0.5;
  auto f = [&](double t) { return std::exp(-y * std::cosh(t)) * std::cosh(nu * t); };
  double scale = std::exp(-y);
  return adaptive(f, 0.0, T, tol * scale, 40);
}

BesselReport bessel_numeric_checks(double y, double nu) {
  if (!(y > 0 && y <= 50)) throw std::invalid_argument("bessel_numeric_checks: need 0 < y <= 50");
  BesselReport r{};
  r.y = y;
  r.nu = nu;
  r.I_nu = bessel_i_series(nu, y);
  r.I_nu1 = bessel_i_series(nu + 1, y);
  r.K_nu = bessel_k_quadrature(nu, y);
  r.K_nu1 = bessel_k_quadrature(nu + 1, y);
  r.residual = std::fabs(r.I_nu * r.K_nu1 + r.I_nu1 * r.K_nu - 1.0 / y);
  r.ok = r.residual < 1e-8;
  return r;
}

JacobianReport jacobian_pn_check(int n) {
  if (n < 1) throw std::invalid_argument("jacobian_pn_check: n must be positive");
  JacobianReport rep;
  LaurentPoly x = LaurentPoly::var("x"), q = LaurentPoly::var("q");
  std::vector<LaurentPoly> h;
  for (int i = 1; i <= n + 1; ++i) h.push_back(LaurentPoly::var(h_symbol(i)));
  // impose sum h_i = 0 through the last coordinate
  LaurentPoly last;
  for (int i = 0; i < n; ++i) last -= h[i];
  h[n] = last;

  LaurentPoly relation = -q + LaurentPoly(0);
  LaurentPoly prod(1);
  for (int i = 0; i <= n; ++i) prod *= x - h[i];
  relation += prod;
  rep.relation = relation;

  // x_j d f / d x_j = x_j + h_j - h_{n+1} - q / (x_1 ... x_n), cleared of its denominator
  bool ok = true;
  for (int j = 0; j < n; ++j) {
    LaurentPoly cleared = x - h[j] + h[j] - h[n];
    for (int i = 0; i < n; ++i) cleared *= x - h[i];
    cleared -= q;
    if (cleared != relation) ok = false;
  }
  rep.symbolic_ok = ok;

  auto d = std::make_shared<const RootDatum>(build_root_datum(CartanType{'A', n}));
  CosetReps reps = minuscule_coset_reps(d, 1);
  ConnMatrix M = quantum_chevalley_minuscule(reps);
  LaurentPoly X = LaurentPoly::var("X");
  rep.matrix_ok = matrix_relation(M, X.pow(n + 1) - q);

  ConnMatrix E = mihalcea_equivariant(reps);
  std::size_t dim = E.dim();
  Matrix<LaurentPoly> acc = Matrix<LaurentPoly>::identity(dim);
  for (std::size_t w = 0; w < dim; ++w) {
    Matrix<LaurentPoly> shifted = E.entries;
    LaurentPoly dw = E(w, w);
    for (std::size_t k = 0; k < dim; ++k) shifted(k, k) -= dw;
    acc = acc * shifted;
  }
  acc = acc - Matrix<LaurentPoly>::identity(dim).scaled(q);
  rep.equivariant_matrix_ok = acc.is_zero();
  return rep;
}

}  // namespace mm
