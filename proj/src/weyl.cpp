#include "mm/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace mm {

IVec WeylElt::apply_weight(const IVec& mu) const {
  IVec out(mu.size(), 0);
  for (std::size_t r = 0; r < mu.size(); ++r)
    for (std::size_t c = 0; c < mu.size(); ++c) out[r] += action(r, c) * mu[c];
  return out;
}

QVec WeylElt::apply_weight(const QVec& mu) const {
  QVec out(mu.size(), Q(0));
  for (std::size_t r = 0; r < mu.size(); ++r)
    for (std::size_t c = 0; c < mu.size(); ++c) out[r] += action(r, c) * mu[c];
  return out;
}

IVec WeylElt::apply_root(const IVec& root) const {
  IVec out(root.size(), 0);
  for (std::size_t r = 0; r < root.size(); ++r)
    for (std::size_t c = 0; c < root.size(); ++c) out[r] += root_action(r, c) * root[c];
  return out;
}

static bool negative(const IVec& v) {
  for (int x : v)
    if (x > 0) return false;
  return true;
}

int inversion_count(const RootDatum& d, const Matrix<int>& root_action) {
  int n = d.rank, count = 0;
  for (const auto& a : d.positive_roots) {
    // sign of the image is the sign of any nonzero coordinate
    for (int r = 0; r < n; ++r) {
      int v = 0;
      for (int c = 0; c < n; ++c) v += root_action(r, c) * a[c];
      if (v != 0) {
        if (v < 0) ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<IVec> inversion_set(const RootDatum& d, const WeylElt& w) {
  std::vector<IVec> out;
  for (const auto& a : d.positive_roots)
    if (negative(w.apply_root(a))) out.push_back(a);
  return out;
}

WeylElt identity_elt(const RootDatum& d) {
  WeylElt w;
  w.action = Matrix<int>::identity(d.rank);
  w.root_action = Matrix<int>::identity(d.rank);
  w.length = 0;
  w.word = std::vector<int>{};
  return w;
}

WeylElt simple_reflection(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank) throw std::invalid_argument("simple reflection index out of range");
  int n = d.rank, k = i - 1;
  WeylElt w = identity_elt(d);
  for (int r = 0; r < n; ++r) w.action(r, k) -= d.cartan(k, r);
  for (int c = 0; c < n; ++c) w.root_action(k, c) -= d.cartan(c, k);
  w.length = 1;
  w.word = std::vector<int>{i};
  return w;
}

WeylElt multiply(const RootDatum& d, const WeylElt& a, const WeylElt& b) {
  WeylElt w;
  w.action = a.action * b.action;
  w.root_action = a.root_action * b.root_action;
  w.length = inversion_count(d, w.root_action);
  if (a.word && b.word && w.length == a.length + b.length) {
    std::vector<int> word = *a.word;
    word.insert(word.end(), b.word->begin(), b.word->end());
    w.word = word;
  }
  return w;
}

WeylElt from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElt w = identity_elt(d);
  for (int i : word) {
    WeylElt s = simple_reflection(d, i);
    w.action = w.action * s.action;
    w.root_action = w.root_action * s.root_action;
  }
  w.length = inversion_count(d, w.root_action);
  if (w.length == static_cast<int>(word.size()))
    w.word = word;
  else
    w.word.reset();
  return w;
}

WeylElt reflection(const RootDatum& d, const IVec& root) {
  int n = d.rank;
  IVec bw = d.root_to_weight(root), bv = d.coroot(root);
  WeylElt w = identity_elt(d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) w.action(r, c) -= bw[r] * bv[c];
  // <alpha_c, beta^vee> for the root action
  for (int c = 0; c < n; ++c) {
    int p = 0;
    for (int k = 0; k < n; ++k) p += d.cartan(c, k) * bv[k];
    for (int r = 0; r < n; ++r) w.root_action(r, c) -= root[r] * p;
  }
  w.length = inversion_count(d, w.root_action);
  w.word.reset();
  return w;
}

static Matrix<int> int_inverse(const Matrix<int>& m) {
  std::size_t n = m.rows();
  Matrix<Q> a = m.map([](int x) { return Q(x); });
  Matrix<Q> inv = Matrix<Q>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Weyl matrix");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(col, c), a(piv, c));
      std::swap(inv(col, c), inv(piv, c));
    }
    Q p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Q f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv.map([](const Q& x) {
    if (x.get_den() != 1) throw std::logic_error("non-integral Weyl inverse");
    return static_cast<int>(x.get_num().get_si());
  });
}

WeylElt inverse(const RootDatum& d, const WeylElt& w) {
  (void)d;
  WeylElt out;
  out.action = int_inverse(w.action);
  out.root_action = int_inverse(w.root_action);
  out.length = w.length;
  if (w.word) out.word = std::vector<int>(w.word->rbegin(), w.word->rend());
  return out;
}

bool is_min_coset_rep(const RootDatum& d, const std::vector<int>& I_P, const WeylElt& w) {
  for (int j : I_P)
    if (negative(w.apply_root(d.simple_root(j)))) return false;
  return true;
}

WeylElt longest_element(const RootDatum& d, const std::vector<int>& J) {
  WeylElt w = identity_elt(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : J)
      if (!negative(w.apply_root(d.simple_root(j)))) {
        w = multiply(d, w, simple_reflection(d, j));
        grew = true;
        break;
      }
  }
  return w;
}

std::vector<int> descent_word(const RootDatum& d, IVec mu) {
  std::vector<int> word;
  while (true) {
    int j = -1;
    for (int k = 0; k < d.rank; ++k)
      if (mu[k] < 0) {
        j = k;
        break;
      }
    if (j < 0) break;
    IVec a = d.root_to_weight(d.simple_root(j + 1));
    int m = mu[j];
    for (int k = 0; k < d.rank; ++k) mu[k] -= m * a[k];
    word.push_back(j + 1);
  }
  return word;
}

int CosetReps::index_of(const WeylElt& w) const {
  auto it = index_of_weight.find(w.apply_weight(base_weight));
  if (it == index_of_weight.end()) return -1;
  return reps[it->second] == w ? it->second : -1;
}

CosetReps coset_reps(std::shared_ptr<const RootDatum> d, const std::vector<int>& I_P, std::size_t cap) {
  CosetReps cr;
  cr.datum = d;
  cr.parabolic = levi_data(*d, I_P);
  cr.base_weight.assign(d->rank, 0);
  for (int i : complement_nodes(d->rank, cr.parabolic.I_P)) cr.base_weight[i - 1] = 1;

  std::set<IVec> orbit{cr.base_weight};
  std::deque<IVec> queue{cr.base_weight};
  while (!queue.empty()) {
    IVec mu = queue.front();
    queue.pop_front();
    for (int j = 1; j <= d->rank; ++j) {
      if (mu[j - 1] == 0) continue;
      IVec a = d->root_to_weight(d->simple_root(j));
      IVec nu = mu;
      for (int k = 0; k < d->rank; ++k) nu[k] -= mu[j - 1] * a[k];
      if (orbit.insert(nu).second) {
        if (orbit.size() > cap) throw std::length_error("coset enumeration exceeded cap");
        queue.push_back(nu);
      }
    }
  }

  std::vector<std::pair<std::vector<int>, IVec>> items;
  for (const auto& mu : orbit) items.emplace_back(descent_word(*d, mu), mu);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [word, mu] : items) {
    WeylElt w = from_word(*d, word);
    if (!w.word || w.apply_weight(cr.base_weight) != mu) throw std::logic_error("greedy descent produced a bad representative");
    cr.index_of_weight[mu] = static_cast<int>(cr.reps.size());
    cr.reps.push_back(std::move(w));
    cr.weights.push_back(mu);
  }
  if (cr.reps.size() != cr.parabolic.coset_size) throw std::logic_error("orbit size differs from |W/W_P|");
  return cr;
}

CosetReps minuscule_coset_reps(std::shared_ptr<const RootDatum> d, int node) {
  if (!is_minuscule(*d, node))
    throw std::invalid_argument("node " + std::to_string(node) + " is not minuscule for " + d->type.name());
  std::vector<int> ip;
  for (int i = 1; i <= d->rank; ++i)
    if (i != node) ip.push_back(i);
  return coset_reps(std::move(d), ip);
}

int pi_P(const CosetReps& reps, const WeylElt& w) {
  auto it = reps.index_of_weight.find(w.apply_weight(reps.base_weight));
  if (it == reps.index_of_weight.end()) throw std::logic_error("pi_P: weight outside the orbit");
  return it->second;
}

WeylElt pi_P_elt(const CosetReps& reps, const WeylElt& w) { return reps.reps[pi_P(reps, w)]; }

std::vector<Cover> bruhat_covers_up(const CosetReps& reps, int w) {
  const RootDatum& d = *reps.datum;
  const WeylElt& x = reps.reps.at(w);
  std::vector<Cover> out;
  for (const auto& beta : d.positive_roots) {
    if (reps.parabolic.in_levi(beta)) continue;
    WeylElt u = multiply(d, x, reflection(d, beta));
    if (u.length != x.length + 1 || !is_min_coset_rep(d, reps.parabolic.I_P, u)) continue;
    int t = reps.index_of(u);
    if (t < 0) throw std::logic_error("cover outside the representative list");
    out.push_back({beta, t});
  }
  return out;
}

std::vector<int> w_gamma_set(const CosetReps& reps) {
  const RootDatum& d = *reps.datum;
  if (!reps.parabolic.minuscule) throw std::invalid_argument("W(gamma) needs a minuscule node");
  IVec mtheta = d.highest_root;
  for (auto& x : mtheta) x = -x;
  std::vector<int> out;
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (reps.reps[k].apply_root(reps.parabolic.gamma) == mtheta) out.push_back(static_cast<int>(k));
  return out;
}

SpecialElements special_elements(const CosetReps& reps) {
  const RootDatum& d = *reps.datum;
  const ParabolicData& p = reps.parabolic;
  if (!p.minuscule) throw std::invalid_argument("special elements need a minuscule node");
  std::vector<int> all;
  for (int i = 1; i <= d.rank; ++i) all.push_back(i);
  SpecialElements s;
  s.w0 = longest_element(d, all);
  s.w0P = longest_element(d, p.I_P);
  s.wP = multiply(d, s.w0P, s.w0);
  WeylElt w0Q = longest_element(d, p.I_Q);
  s.wPQ = multiply(d, s.w0P, w0Q);
  s.sgamma = reflection(d, p.gamma);

  std::set<IVec> inv;
  for (auto& a : inversion_set(d, s.wPQ)) inv.insert(a);
  std::set<IVec> expect;
  for (const auto& a : p.levi_positive_roots)
    if (!p.in_q_levi(a)) expect.insert(a);
  if (inv != expect) throw std::logic_error("Inv(w_{P/Q}) differs from R+_P minus R+_Q");

  // w_P^{-1} alpha_node = -theta lives where the node is cominuscule, i.e. in the dual datum
  RootDatum dd = d.type.simply_laced() ? d : build_root_datum(d.type.dual());
  std::vector<int> ip_dual = p.I_P;
  WeylElt wP_dual = multiply(dd, longest_element(dd, ip_dual), longest_element(dd, all));
  IVec mtheta = dd.highest_root;
  for (auto& x : mtheta) x = -x;
  if (inverse(dd, wP_dual).apply_root(dd.simple_root(p.node)) != mtheta)
    throw std::logic_error("w_P^{-1} alpha_node != -theta in the dual datum");

  QVec lhs = s.wP.apply_weight(d.rho);
  for (int i = 0; i < d.rank; ++i)
    if (lhs[i] != -d.rho[i] + 2 * p.rho_P[i]) throw std::logic_error("w_P(rho) != -rho + 2 rho_P");
  return s;
}

int top_index(const CosetReps& reps) { return static_cast<int>(reps.size()) - 1; }

int pd(const CosetReps& reps, int w) {
  const RootDatum& d = *reps.datum;
  std::vector<int> all;
  for (int i = 1; i <= d.rank; ++i) all.push_back(i);
  static thread_local std::map<std::string, WeylElt> cache;
  auto key = d.type.name();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, longest_element(d, all)).first;
  return pi_P(reps, multiply(d, it->second, reps.reps.at(w)));
}

}  // namespace mm
