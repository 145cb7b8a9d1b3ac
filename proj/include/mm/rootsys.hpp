#pragma once

#include <string>
#include <vector>

#include "mm/laurent.hpp"
#include "mm/matrix.hpp"

namespace mm {

using IVec = std::vector<int>;
using QVec = std::vector<Q>;

// Simple type with Bourbaki node numbering. E6 and E7 carry family 'E'.
struct CartanType {
  char family = 'A';
  int rank = 1;

  static CartanType parse(const std::string& s);  // "A5", "b4", "E7", ...
  std::string name() const;
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  CartanType dual() const;  // B <-> C, others fixed
};

// Roots are coefficient vectors in the simple roots, coroots in the simple coroots,
// weights in the fundamental weights. Node indices in the public API are 1-based.
struct RootDatum {
  CartanType type;
  int rank = 0;
  Matrix<int> cartan;  // a_ij = <alpha_i, alpha_j^vee>
  std::vector<Q> gram_diag;  // (alpha_i, alpha_i), long roots normalized to 2
  Matrix<Q> gram;  // (alpha_i, alpha_j)
  std::vector<IVec> positive_roots;  // by height, then lexicographic
  IVec highest_root;
  QVec rho;
  IVec two_rho_covec;  // 2 rho^vee in simple coroots
  int coxeter_number = 0;
  std::vector<int> exponents;

  IVec simple_root(int i) const;  // 1-based
  IVec coroot(const IVec& root) const;  // beta^vee in simple coroots
  IVec root_to_weight(const IVec& root) const;  // fundamental-weight coordinates
  int root_pair(const IVec& root, const IVec& coroot) const;  // <root, coroot>
  Q squared_length(const IVec& root) const;
  bool is_long(const IVec& root) const;
  int height(const IVec& root) const;
  int root_index(const IVec& root) const;  // index in positive_roots or -1
  bool is_root(const IVec& v) const;
  bool is_positive(const IVec& root) const;
};

RootDatum build_root_datum(const CartanType& type);

Q pairing(const QVec& weight, const IVec& coroot);
int pairing(const IVec& weight, const IVec& coroot);

QVec fundamental_weight(int rank, int i);
IVec fundamental_weight_int(int rank, int i);

// beta in R+ with reflection length <2 rho, beta^vee> - 1.
std::vector<IVec> quantum_roots(const RootDatum& d);

// Node i has fundamental weight with <varpi_i, beta^vee> <= 1 for every positive root.
bool is_minuscule(const RootDatum& d, int node);
std::vector<int> minuscule_nodes(const RootDatum& d);

IVec gamma_root(const RootDatum& d, int node);

struct ParabolicData {
  std::vector<int> I_P;  // 1-based, sorted
  int node = 0;  // maximal parabolic node, 0 for a general subset
  bool minuscule = false;
  std::vector<IVec> levi_positive_roots;
  QVec rho_P;
  IVec gamma;  // empty unless maximal minuscule
  std::vector<int> I_Q;  // maximal minuscule case only
  std::size_t coset_size = 0;  // |W| / |W_P|

  bool in_levi(const IVec& root) const;
  bool in_q_levi(const IVec& root) const;
};

ParabolicData levi_data(const RootDatum& d, const std::vector<int>& I_P);
ParabolicData maximal_parabolic(const RootDatum& d, int node);

std::vector<int> complement_nodes(int rank, const std::vector<int>& subset);

}  // namespace mm
