#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mm/laurent.hpp"
#include "mm/matrix.hpp"

namespace mm {

using PolyMatrix = Matrix<LaurentPoly>;

// f_q = linear + q * quantum, in variables `vars`.
struct Potential {
  std::vector<std::string> vars;
  LaurentPoly linear;
  LaurentPoly quantum;
  int coxeter = 0;

  LaurentPoly full() const { return linear + LaurentPoly::var("q") * quantum; }
  LaurentPoly at_q1() const { return linear + quantum; }
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> crystal_symbols(int count, const std::string& stem = "a");

Potential potential_projective(int n);

// Reduced word for w_P^{-1} in SL(n) with P the stabilizer of a k-plane.
std::vector<int> standard_word_grassmannian(int k, int n);

// Product of I + a_m E_{i_m, i_m + 1} over the word.
PolyMatrix lusztig_matrix(int n, const std::vector<int>& word, const std::vector<std::string>& syms);

// Minor with sorted 1-based row and column sets, by fraction-free elimination.
LaurentPoly generalized_minor(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols);
// Same minor by cofactor expansion (used as an independent check).
LaurentPoly minor_by_expansion(const PolyMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols);

// Permutation of {1..n} for a word in SL(n) simple reflections; perm[x-1] = w(x).
std::vector<int> word_permutation(int n, const std::vector<int>& word);
std::vector<int> image_of_initial(const std::vector<int>& perm, int i);  // sorted w({1..i})

struct TypeAPotential {
  Potential potential;
  std::vector<int> word;
  std::vector<int> num_rows, den_rows, cols;
  LaurentPoly numerator, denominator;
};

TypeAPotential potential_typeA_detail(int k, int n, int max_vars = 12);
Potential potential_typeA(int k, int n, int max_vars = 12);

// Constant term of (f at q = 1)^m by enumerating balanced exponent assignments.
Q constant_term_power(const Potential& f, int m, long long budget = 10000000);
Q constant_term_power(const LaurentPoly& f, int m, long long budget = 10000000);
Q gw_from_constant_term(const Potential& f, int d, long long budget = 10000000);

Q factorial(int n);

}  // namespace mm
