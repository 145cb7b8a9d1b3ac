#include "mm/minrep.hpp"

#include <stdexcept>

namespace mm {

MinusculeRep build_minuscule_rep(const CosetReps& reps) {
  if (!reps.parabolic.minuscule) throw std::invalid_argument("build_minuscule_rep: minuscule node required");
  const RootDatum& d = *reps.datum;
  for (const auto& mu : reps.weights)
    for (int j = 1; j <= d.rank; ++j) {
      int p = mu[j - 1];
      if (p < -1 || p > 1) throw std::logic_error("weight pairing outside {-1,0,1}");
    }
  return MinusculeRep{reps};
}

static int shifted(const MinusculeRep& rep, const IVec& mu, const IVec& delta, int sign) {
  IVec nu = mu;
  for (std::size_t k = 0; k < nu.size(); ++k) nu[k] += sign * delta[k];
  auto it = rep.reps.index_of_weight.find(nu);
  if (it == rep.reps.index_of_weight.end()) throw std::logic_error("generator leaves the weight set");
  return it->second;
}

Generators generator_matrices(const MinusculeRep& rep) {
  const RootDatum& d = *rep.reps.datum;
  std::size_t n = rep.dim();
  Generators g;
  g.e = g.f = g.h = Matrix<int>(n, n);
  for (int j = 1; j <= d.rank; ++j) {
    IVec aj = d.root_to_weight(d.simple_root(j));
    Matrix<int> x(n, n), y(n, n);
    for (std::size_t w = 0; w < n; ++w) {
      const IVec& mu = rep.weight_of(w);
      if (mu[j - 1] == -1) x(shifted(rep, mu, aj, +1), w) = 1;
      if (mu[j - 1] == 1) y(shifted(rep, mu, aj, -1), w) = 1;
    }
    g.e = g.e + x.scaled(d.two_rho_covec[j - 1]);
    g.f = g.f + y;
    g.x.push_back(std::move(x));
    g.y.push_back(std::move(y));
  }
  for (std::size_t w = 0; w < n; ++w) g.h(w, w) = pairing(rep.weight_of(w), d.two_rho_covec);
  return g;
}

Matrix<int> xtheta_matrix(const MinusculeRep& rep) {
  const RootDatum& d = *rep.reps.datum;
  std::size_t n = rep.dim();
  IVec tw = d.root_to_weight(d.highest_root), tv = d.coroot(d.highest_root);
  Matrix<int> x(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    const IVec& mu = rep.weight_of(w);
    if (pairing(mu, tv) == -1) x(shifted(rep, mu, tw, +1), w) = 1;
  }
  return x;
}

static ConnMatrix to_conn(const MinusculeRep& rep, const Matrix<int>& f, const Matrix<int>& xt, const std::string& label) {
  ConnMatrix m;
  m.basis = rep.reps;
  m.label = label;
  std::size_t n = rep.dim();
  m.entries = Matrix<LaurentPoly>(n, n);
  LaurentPoly q = LaurentPoly::var("q");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.entries(r, c) = LaurentPoly(f(r, c)) + LaurentPoly(xt(r, c)) * q;
  return m;
}

ConnMatrix fg_connection(const MinusculeRep& rep) {
  return to_conn(rep, generator_matrices(rep).f, xtheta_matrix(rep), "fg_connection");
}

ConnMatrix equivariant_fg(const MinusculeRep& rep) {
  ConnMatrix m = to_conn(rep, generator_matrices(rep).f, xtheta_matrix(rep), "equivariant_fg");
  const RootDatum& d = *rep.reps.datum;
  for (std::size_t w = 0; w < rep.dim(); ++w) {
    const IVec& mu = rep.weight_of(w);
    for (int j = 1; j <= d.rank; ++j)
      if (mu[j - 1] != 0) m.entries(w, w) -= LaurentPoly(mu[j - 1]) * LaurentPoly::var(h_symbol(j));
  }
  return m;
}

}  // namespace mm
