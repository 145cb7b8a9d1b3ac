#pragma once

#include <string>
#include <vector>

#include "mm/laurent.hpp"
#include "mm/matrix.hpp"
#include "mm/weyl.hpp"

namespace mm {

// Operator on the span of {sigma_w : w in W^P}. Column w holds the image of sigma_w.
struct ConnMatrix {
  CosetReps basis;
  Matrix<LaurentPoly> entries;
  std::string label;

  std::size_t dim() const { return entries.rows(); }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries(r, c); }
  bool operator==(const ConnMatrix& o) const { return entries == o.entries; }
};

// Symbol names: "q" (one quantum parameter), "q<i>" (several), "h<j>" equivariant.
std::string h_symbol(int j);
std::vector<std::string> q_symbols(const ParabolicData& p);

ConnMatrix classical_chevalley(const CosetReps& reps);
ConnMatrix quantum_chevalley_minuscule(const CosetReps& reps);

struct FWTerm {
  Q coeff;
  IVec q_exponent;  // indexed by the nodes outside I_P, in increasing order
  WeylElt target;
};
// sigma_i * sigma_w by the Fulton-Woodward quantum Chevalley rule, w minimal in wW_P.
std::vector<FWTerm> quantum_chevalley_fw(const RootDatum& d, const std::vector<int>& I_P, int i, const WeylElt& w);
// The full operator of sigma_i on an enumerated W^P, built column by column from the rule.
ConnMatrix fw_matrix(const CosetReps& reps, int i);

// c_1^T(O(1)) *_{q,h}: quantum Chevalley plus diagonal -<w varpi_node, h>.
ConnMatrix mihalcea_equivariant(const CosetReps& reps);
// sigma_node *_{q,h} = c_1^T + <varpi_node, h> Id.
ConnMatrix sigma_equivariant(const CosetReps& reps);

// Relation sum_k c_k(q) X^k is given as a Laurent polynomial in "X" and q.
bool matrix_relation(const ConnMatrix& M, const LaurentPoly& relation);
Matrix<LaurentPoly> evaluate_relation(const Matrix<LaurentPoly>& M, const LaurentPoly& relation);

// Degrees: deg sigma_w = 2 l(w), deg q_i = <4(rho - rho_P), alpha_i^vee>, deg h_j = 2.
std::map<std::string, int> symbol_degrees(const CosetReps& reps);
bool degree_homogeneous(const ConnMatrix& M);

// D M(zeta^c q) D^{-1} with D = diag(zeta^{l(w)}), for the grading checks.
Matrix<LaurentPoly> graded_conjugate(const ConnMatrix& M, const std::string& zeta);

// Poincare pairing matrix J(u, v) = [v == PD(u)].
Matrix<LaurentPoly> poincare_matrix(const CosetReps& reps);

}  // namespace mm
