#pragma once

#include <vector>

#include "mm/qchev.hpp"

namespace mm {

// Minuscule representation in its weight basis {v_w : w in W^P}; v_w has weight w varpi.
struct MinusculeRep {
  CosetReps reps;
  std::size_t dim() const { return reps.size(); }
  const IVec& weight_of(std::size_t w) const { return reps.weights[w]; }
};

MinusculeRep build_minuscule_rep(const CosetReps& reps);

struct Generators {
  std::vector<Matrix<int>> x, y;  // x[j-1], y[j-1]
  Matrix<int> e, f, h;
};

Generators generator_matrices(const MinusculeRep& rep);
// x_theta v_w = v_{w'} with w' varpi = w varpi + theta when <w varpi, theta^vee> = -1.
Matrix<int> xtheta_matrix(const MinusculeRep& rep);

ConnMatrix fg_connection(const MinusculeRep& rep);  // f + q x_theta
ConnMatrix equivariant_fg(const MinusculeRep& rep);  // f + q x_theta - <w varpi, h>

}  // namespace mm
