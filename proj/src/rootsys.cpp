#include "mm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "mm/weyl.hpp"

namespace mm {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type: '" + s + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad Cartan type: '" + s + "'");
  t.rank = std::stoi(s.substr(1));
  bool ok = false;
  switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B':
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank == 6 || t.rank == 7; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("unsupported Cartan type: '" + s + "' (families A1+, B2+, C2+, D4+, E6, E7)");
  return t;
}

CartanType CartanType::dual() const {
  CartanType t = *this;
  if (family == 'B') t.family = 'C';
  if (family == 'C') t.family = 'B';
  return t;
}

std::string CartanType::name() const { return std::string(1, family) + std::to_string(rank); }

static Matrix<Q> gram_matrix(const CartanType& t) {
  int n = t.rank;
  Matrix<Q> g(n, n);
  auto link = [&](int i, int j, Q v) {
    g(i - 1, j - 1) = v;
    g(j - 1, i - 1) = v;
  };
  for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
  switch (t.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      g(n - 1, n - 1) = 1;
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, Q(-1, 2));
      link(n - 1, n, -1);
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 1;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      link(1, 3, -1);
      link(3, 4, -1);
      link(2, 4, -1);
      for (int i = 4; i < n; ++i) link(i, i + 1, -1);
      break;
  }
  return g;
}

RootDatum build_root_datum(const CartanType& type) {
  RootDatum d;
  d.type = type;
  int n = d.rank = type.rank;
  d.gram = gram_matrix(type);
  d.gram_diag.resize(n);
  for (int i = 0; i < n; ++i) d.gram_diag[i] = d.gram(i, i);
  d.cartan = Matrix<int>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Q a = 2 * d.gram(i, j) / d.gram(j, j);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      d.cartan(i, j) = static_cast<int>(a.get_num().get_si());
    }

  // closure under adding simple roots, using root strings
  std::set<IVec> found;
  std::vector<IVec> layer;
  for (int i = 1; i <= n; ++i) {
    layer.push_back(d.simple_root(i));
    found.insert(layer.back());
  }
  while (!layer.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : layer)
      for (int i = 0; i < n; ++i) {
        IVec ai = d.simple_root(i + 1);
        if (beta == ai) continue;
        // p = largest k with beta - k alpha_i a root
        int p = 0;
        IVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        int pairing_i = 0;
        for (int j = 0; j < n; ++j) pairing_i += beta[j] * d.cartan(j, i);
        if (p - pairing_i > 0) {
          IVec up = beta;
          up[i] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  d.positive_roots.assign(found.begin(), found.end());
  std::sort(d.positive_roots.begin(), d.positive_roots.end(), [&](const IVec& a, const IVec& b) {
    int ha = d.height(a), hb = d.height(b);
    return ha != hb ? ha < hb : a < b;
  });
  d.highest_root = d.positive_roots.back();

  d.rho.assign(n, Q(1));
  d.two_rho_covec.assign(n, 0);
  for (const auto& beta : d.positive_roots) {
    IVec c = d.coroot(beta);
    for (int i = 0; i < n; ++i) d.two_rho_covec[i] += c[i];
  }

  int top = d.height(d.highest_root);
  d.coxeter_number = top + 1;
  std::vector<int> count(top + 2, 0);
  for (const auto& beta : d.positive_roots) ++count[d.height(beta)];
  for (int m = 1; m <= top; ++m)
    for (int k = 0; k < count[m] - count[m + 1]; ++k) d.exponents.push_back(m);
  return d;
}

IVec RootDatum::simple_root(int i) const {
  IVec a(rank, 0);
  a.at(i - 1) = 1;
  return a;
}

Q RootDatum::squared_length(const IVec& root) const {
  Q s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += root[i] * root[j] * gram(i, j);
  return s;
}

bool RootDatum::is_long(const IVec& root) const { return squared_length(root) == 2; }

IVec RootDatum::coroot(const IVec& root) const {
  Q len = squared_length(root);
  IVec c(rank);
  for (int i = 0; i < rank; ++i) {
    Q v = root[i] * gram_diag[i] / len;
    if (v.get_den() != 1) throw std::logic_error("non-integral coroot");
    c[i] = static_cast<int>(v.get_num().get_si());
  }
  return c;
}

IVec RootDatum::root_to_weight(const IVec& root) const {
  IVec w(rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) w[j] += root[i] * cartan(i, j);
  return w;
}

int RootDatum::root_pair(const IVec& root, const IVec& cr) const { return pairing(root_to_weight(root), cr); }

int RootDatum::height(const IVec& root) const {
  int h = 0;
  for (int x : root) h += x;
  return h;
}

int RootDatum::root_index(const IVec& root) const {
  auto it = std::find(positive_roots.begin(), positive_roots.end(), root);
  return it == positive_roots.end() ? -1 : static_cast<int>(it - positive_roots.begin());
}

bool RootDatum::is_positive(const IVec& root) const { return root_index(root) >= 0; }

bool RootDatum::is_root(const IVec& v) const {
  if (is_positive(v)) return true;
  IVec m = v;
  for (auto& x : m) x = -x;
  return is_positive(m);
}

Q pairing(const QVec& weight, const IVec& coroot) {
  if (weight.size() != coroot.size()) throw std::invalid_argument("pairing: rank mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coroot[i];
  return s;
}

int pairing(const IVec& weight, const IVec& coroot) {
  if (weight.size() != coroot.size()) throw std::invalid_argument("pairing: rank mismatch");
  int s = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coroot[i];
  return s;
}

QVec fundamental_weight(int rank, int i) {
  QVec w(rank, Q(0));
  w.at(i - 1) = 1;
  return w;
}

IVec fundamental_weight_int(int rank, int i) {
  IVec w(rank, 0);
  w.at(i - 1) = 1;
  return w;
}

std::vector<IVec> quantum_roots(const RootDatum& d) {
  std::vector<IVec> out;
  for (const auto& beta : d.positive_roots) {
    WeylElt s = reflection(d, beta);
    if (s.length == pairing(d.rho, d.coroot(beta)) * 2 - 1) out.push_back(beta);
  }
  return out;
}

bool is_minuscule(const RootDatum& d, int node) {
  if (node < 1 || node > d.rank) return false;
  for (const auto& beta : d.positive_roots)
    if (d.coroot(beta)[node - 1] > 1) return false;
  return true;
}

std::vector<int> minuscule_nodes(const RootDatum& d) {
  std::vector<int> out;
  for (int i = 1; i <= d.rank; ++i)
    if (is_minuscule(d, i)) out.push_back(i);
  return out;
}

std::vector<int> complement_nodes(int rank, const std::vector<int>& subset) {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) out.push_back(i);
  return out;
}

bool ParabolicData::in_levi(const IVec& root) const {
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] != 0 && std::find(I_P.begin(), I_P.end(), static_cast<int>(i) + 1) == I_P.end()) return false;
  return true;
}

bool ParabolicData::in_q_levi(const IVec& root) const {
  for (std::size_t i = 0; i < root.size(); ++i)
    if (root[i] != 0 && std::find(I_Q.begin(), I_Q.end(), static_cast<int>(i) + 1) == I_Q.end()) return false;
  return true;
}

IVec gamma_root(const RootDatum& d, int node) {
  if (!is_minuscule(d, node))
    throw std::invalid_argument("node " + std::to_string(node) + " is not minuscule for " + d.type.name());
  IVec g;
  int n = d.rank;
  if (d.type.simply_laced()) {
    g = d.simple_root(node);
  } else if (d.type.family == 'B') {
    g = d.simple_root(n);
    g[n - 1] = 2;
    g[n - 2] = 1;
  } else {
    g = d.highest_root;
  }
  // characterization: quantum root with <alpha, gamma^vee> in {-1, 0} on the Levi
  auto qr = quantum_roots(d);
  if (std::find(qr.begin(), qr.end(), g) == qr.end()) throw std::logic_error("gamma is not a quantum root");
  IVec gv = d.coroot(g);
  for (const auto& a : d.positive_roots) {
    if (a[node - 1] != 0) continue;
    int p = d.root_pair(a, gv);
    if (p != 0 && p != -1) throw std::logic_error("gamma fails the Levi pairing condition");
  }
  return g;
}

static std::size_t weyl_order_from_heights(const std::vector<IVec>& pos, int rank) {
  if (pos.empty()) return 1;
  int top = 0;
  for (const auto& r : pos) {
    int h = 0;
    for (int x : r) h += x;
    top = std::max(top, h);
  }
  (void)rank;
  std::vector<int> count(top + 2, 0);
  for (const auto& r : pos) {
    int h = 0;
    for (int x : r) h += x;
    ++count[h];
  }
  std::size_t order = 1;
  for (int m = 1; m <= top; ++m)
    for (int k = 0; k < count[m] - count[m + 1]; ++k) order *= static_cast<std::size_t>(m + 1);
  return order;
}

ParabolicData levi_data(const RootDatum& d, const std::vector<int>& I_P) {
  ParabolicData p;
  p.I_P = I_P;
  std::sort(p.I_P.begin(), p.I_P.end());
  for (int j : p.I_P)
    if (j < 1 || j > d.rank) throw std::invalid_argument("levi_data: node out of range");
  for (const auto& a : d.positive_roots)
    if (p.in_levi(a)) p.levi_positive_roots.push_back(a);
  p.rho_P.assign(d.rank, Q(0));
  for (const auto& a : p.levi_positive_roots) {
    IVec w = d.root_to_weight(a);
    for (int i = 0; i < d.rank; ++i) p.rho_P[i] += Q(w[i], 2);
  }
  p.coset_size = weyl_order_from_heights(d.positive_roots, d.rank) /
                 weyl_order_from_heights(p.levi_positive_roots, d.rank);
  auto outside = complement_nodes(d.rank, p.I_P);
  if (outside.size() == 1) {
    p.node = outside[0];
    p.minuscule = is_minuscule(d, p.node);
  }
  if (p.minuscule) {
    p.gamma = gamma_root(d, p.node);
    IVec gv = d.coroot(p.gamma);
    for (int j : p.I_P)
      if (d.root_pair(d.simple_root(j), gv) == 0) p.I_Q.push_back(j);
    // the Coxeter number equals <2(rho - rho_P), alpha_node^vee>
    Q chern = 2 * (d.rho[p.node - 1] - p.rho_P[p.node - 1]);
    if (chern != d.coxeter_number) throw std::logic_error("Coxeter/Chern identity fails");
  }
  return p;
}

ParabolicData maximal_parabolic(const RootDatum& d, int node) {
  if (node < 1 || node > d.rank) throw std::invalid_argument("node out of range");
  std::vector<int> ip;
  for (int i = 1; i <= d.rank; ++i)
    if (i != node) ip.push_back(i);
  return levi_data(d, ip);
}

}  // namespace mm
