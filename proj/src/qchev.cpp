#include "mm/qchev.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm {

std::string h_symbol(int j) { return "h" + std::to_string(j); }

std::vector<std::string> q_symbols(const ParabolicData& p) {
  int rank = 0;
  if (!p.rho_P.empty()) rank = static_cast<int>(p.rho_P.size());
  auto outside = complement_nodes(rank, p.I_P);
  if (outside.size() == 1) return {"q"};
  std::vector<std::string> out;
  for (int i : outside) out.push_back("q" + std::to_string(i));
  return out;
}

static ConnMatrix empty_matrix(const CosetReps& reps, const std::string& label) {
  ConnMatrix m;
  m.basis = reps;
  m.entries = Matrix<LaurentPoly>(reps.size(), reps.size());
  m.label = label;
  return m;
}

ConnMatrix classical_chevalley(const CosetReps& reps) {
  if (!reps.parabolic.minuscule) throw std::invalid_argument("classical_chevalley: minuscule node required");
  ConnMatrix m = empty_matrix(reps, "D1");
  for (std::size_t w = 0; w < reps.size(); ++w)
    for (const auto& cov : bruhat_covers_up(reps, static_cast<int>(w))) m.entries(cov.target, w) += LaurentPoly(1);
  return m;
}

ConnMatrix quantum_chevalley_minuscule(const CosetReps& reps) {
  ConnMatrix m = classical_chevalley(reps);
  m.label = "quantum_chevalley";
  const RootDatum& d = *reps.datum;
  WeylElt sg = reflection(d, reps.parabolic.gamma);
  LaurentPoly q = LaurentPoly::var("q");
  for (int w : w_gamma_set(reps)) {
    int t = pi_P(reps, multiply(d, reps.reps[w], sg));
    m.entries(t, w) += q;
  }
  return m;
}

// Minimal representative of w W_P, found from the weight w lambda_P.
static WeylElt min_rep(const RootDatum& d, const IVec& lambda, const WeylElt& w) {
  return from_word(d, descent_word(d, w.apply_weight(lambda)));
}

std::vector<FWTerm> quantum_chevalley_fw(const RootDatum& d, const std::vector<int>& I_P, int i, const WeylElt& w) {
  if (std::find(I_P.begin(), I_P.end(), i) != I_P.end())
    throw std::invalid_argument("quantum_chevalley_fw: node " + std::to_string(i) + " lies in I_P");
  if (!is_min_coset_rep(d, I_P, w)) throw std::invalid_argument("quantum_chevalley_fw: w is not a minimal coset representative");
  ParabolicData p = levi_data(d, I_P);
  auto outside = complement_nodes(d.rank, p.I_P);
  IVec lambda(d.rank, 0);
  for (int j : outside) lambda[j - 1] = 1;
  QVec two_rho_diff(d.rank);
  for (int k = 0; k < d.rank; ++k) two_rho_diff[k] = 2 * (d.rho[k] - p.rho_P[k]);

  std::vector<FWTerm> out;
  for (const auto& beta : d.positive_roots) {
    if (p.in_levi(beta)) continue;
    IVec bv = d.coroot(beta);
    int coeff = bv[i - 1];
    if (coeff == 0) continue;
    WeylElt sb = reflection(d, beta);
    WeylElt u = multiply(d, w, sb);
    if (u.length == w.length + 1 && is_min_coset_rep(d, p.I_P, u)) {
      out.push_back({Q(coeff), IVec(outside.size(), 0), u});
      continue;
    }
    if (u.length != w.length - sb.length) continue;
    WeylElt target = min_rep(d, lambda, u);
    Q chern = pairing(two_rho_diff, bv);
    if (Q(target.length) != Q(w.length + 1) - chern) continue;
    IVec qe;
    for (int j : outside) qe.push_back(bv[j - 1]);
    out.push_back({Q(coeff), qe, target});
  }
  return out;
}

ConnMatrix fw_matrix(const CosetReps& reps, int i) {
  const RootDatum& d = *reps.datum;
  ConnMatrix m = empty_matrix(reps, "fw_sigma" + std::to_string(i));
  auto qs = q_symbols(reps.parabolic);
  for (std::size_t w = 0; w < reps.size(); ++w)
    for (const auto& t : quantum_chevalley_fw(d, reps.parabolic.I_P, i, reps.reps[w])) {
      int r = reps.index_of(t.target);
      if (r < 0) throw std::logic_error("fw_matrix: target outside the representative list");
      m.entries(r, w) += LaurentPoly::monomial(qs, t.q_exponent, t.coeff);
    }
  return m;
}

ConnMatrix mihalcea_equivariant(const CosetReps& reps) {
  ConnMatrix m = quantum_chevalley_minuscule(reps);
  m.label = "mihalcea_equivariant";
  const RootDatum& d = *reps.datum;
  IVec varpi = fundamental_weight_int(d.rank, reps.node());
  for (std::size_t w = 0; w < reps.size(); ++w) {
    IVec mu = reps.reps[w].apply_weight(varpi);
    LaurentPoly diag;
    for (int j = 1; j <= d.rank; ++j)
      if (mu[j - 1] != 0) diag -= LaurentPoly(mu[j - 1]) * LaurentPoly::var(h_symbol(j));
    m.entries(w, w) += diag;
  }
  return m;
}

ConnMatrix sigma_equivariant(const CosetReps& reps) {
  ConnMatrix m = mihalcea_equivariant(reps);
  m.label = "sigma_equivariant";
  LaurentPoly shift = LaurentPoly::var(h_symbol(reps.node()));
  for (std::size_t w = 0; w < reps.size(); ++w) m.entries(w, w) += shift;
  return m;
}

Matrix<LaurentPoly> evaluate_relation(const Matrix<LaurentPoly>& M, const LaurentPoly& relation) {
  std::size_t n = M.rows();
  Matrix<LaurentPoly> acc(n, n);
  if (relation.is_zero()) return acc;
  int lo = relation.min_degree("X"), hi = relation.max_degree("X");
  if (lo < 0) throw std::invalid_argument("matrix_relation: negative power of X");
  Matrix<LaurentPoly> power = Matrix<LaurentPoly>::identity(n);
  for (int k = 0; k <= hi; ++k) {
    LaurentPoly c = relation.coeff("X", k);
    if (!c.is_zero()) acc = acc + power.scaled(c);
    if (k < hi) power = power * M;
  }
  return acc;
}

bool matrix_relation(const ConnMatrix& M, const LaurentPoly& relation) {
  return evaluate_relation(M.entries, relation).is_zero();
}

std::map<std::string, int> symbol_degrees(const CosetReps& reps) {
  const RootDatum& d = *reps.datum;
  std::map<std::string, int> deg;
  auto outside = complement_nodes(d.rank, reps.parabolic.I_P);
  auto qs = q_symbols(reps.parabolic);
  for (std::size_t k = 0; k < outside.size(); ++k) {
    Q v = 4 * (d.rho[outside[k] - 1] - reps.parabolic.rho_P[outside[k] - 1]);
    deg[qs[k]] = static_cast<int>(v.get_num().get_si());
  }
  for (int j = 1; j <= d.rank; ++j) deg[h_symbol(j)] = 2;
  return deg;
}

bool degree_homogeneous(const ConnMatrix& M) {
  auto deg = symbol_degrees(M.basis);
  for (std::size_t u = 0; u < M.dim(); ++u)
    for (std::size_t w = 0; w < M.dim(); ++w) {
      const LaurentPoly& e = M(u, w);
      if (e.is_zero()) continue;
      int de = 0;
      if (!e.homogeneous(deg, &de)) return false;
      if (2 * M.basis.reps[u].length + de != 2 * M.basis.reps[w].length + 2) return false;
    }
  return true;
}

Matrix<LaurentPoly> graded_conjugate(const ConnMatrix& M, const std::string& zeta) {
  auto deg = symbol_degrees(M.basis);
  LaurentPoly z = LaurentPoly::var(zeta);
  Matrix<LaurentPoly> out(M.dim(), M.dim());
  for (std::size_t u = 0; u < M.dim(); ++u)
    for (std::size_t w = 0; w < M.dim(); ++w) {
      LaurentPoly e = M(u, w);
      if (e.is_zero()) continue;
      for (auto& [s, dg] : deg) e = e.subs(s, z.pow(dg / 2) * LaurentPoly::var(s));
      out(u, w) = e * z.pow(M.basis.reps[u].length - M.basis.reps[w].length);
    }
  return out;
}

Matrix<LaurentPoly> poincare_matrix(const CosetReps& reps) {
  Matrix<LaurentPoly> j(reps.size(), reps.size());
  for (std::size_t u = 0; u < reps.size(); ++u) j(u, pd(reps, static_cast<int>(u))) = LaurentPoly(1);
  return j;
}

}  // namespace mm
