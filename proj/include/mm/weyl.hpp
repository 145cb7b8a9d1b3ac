#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mm/rootsys.hpp"

namespace mm {

// Weyl group element. `action` acts on weight coordinates (column vectors),
// `root_action` on simple-root coordinates. Identity of elements is by `action`.
struct WeylElt {
  Matrix<int> action;
  Matrix<int> root_action;
  int length = 0;
  std::optional<std::vector<int>> word;  // reduced when present

  bool operator==(const WeylElt& o) const { return action == o.action; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }

  IVec apply_weight(const IVec& mu) const;
  QVec apply_weight(const QVec& mu) const;
  IVec apply_root(const IVec& root) const;
};

WeylElt identity_elt(const RootDatum& d);
WeylElt simple_reflection(const RootDatum& d, int i);
WeylElt from_word(const RootDatum& d, const std::vector<int>& word);
WeylElt reflection(const RootDatum& d, const IVec& root);
WeylElt multiply(const RootDatum& d, const WeylElt& a, const WeylElt& b);
WeylElt inverse(const RootDatum& d, const WeylElt& w);
int inversion_count(const RootDatum& d, const Matrix<int>& root_action);
std::vector<IVec> inversion_set(const RootDatum& d, const WeylElt& w);  // {a > 0 : w a < 0}

// w alpha_j > 0 for every j in I_P.
bool is_min_coset_rep(const RootDatum& d, const std::vector<int>& I_P, const WeylElt& w);
// Longest element of the parabolic subgroup W_J (J = all nodes gives w0).
WeylElt longest_element(const RootDatum& d, const std::vector<int>& J);
// Greedy descent: word of the minimal element taking the dominant weight to mu.
std::vector<int> descent_word(const RootDatum& d, IVec mu);

struct CosetReps {
  std::shared_ptr<const RootDatum> datum;
  ParabolicData parabolic;
  IVec base_weight;  // varpi_node, or sum of varpi_i over i outside I_P
  std::vector<WeylElt> reps;  // ordered by (length, word)
  std::vector<IVec> weights;  // reps[k] applied to base_weight
  std::map<IVec, int> index_of_weight;

  std::size_t size() const { return reps.size(); }
  int node() const { return parabolic.node; }
  int dim() const { return reps.back().length; }  // dim G/P
  int index_of(const WeylElt& w) const;  // exact rep lookup or -1
};

CosetReps coset_reps(std::shared_ptr<const RootDatum> d, const std::vector<int>& I_P, std::size_t cap = 100000);
CosetReps minuscule_coset_reps(std::shared_ptr<const RootDatum> d, int node);

int pi_P(const CosetReps& reps, const WeylElt& w);
WeylElt pi_P_elt(const CosetReps& reps, const WeylElt& w);

struct Cover {
  IVec beta;
  int target;
};
std::vector<Cover> bruhat_covers_up(const CosetReps& reps, int w);

std::vector<int> w_gamma_set(const CosetReps& reps);

struct SpecialElements {
  WeylElt w0, w0P, wP, wPQ, sgamma;
};
// Computes the elements and checks Inv(w_{P/Q}) = R+_P \ R+_Q, w_P^{-1} alpha_node = -theta,
// w_P(rho) = -rho + 2 rho_P; throws std::logic_error on failure.
SpecialElements special_elements(const CosetReps& reps);

int pd(const CosetReps& reps, int w);
int top_index(const CosetReps& reps);

}  // namespace mm
