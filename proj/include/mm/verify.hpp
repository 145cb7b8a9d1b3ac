#pragma once

#include <string>
#include <vector>

#include "mm/io.hpp"

namespace mm {

struct CaseSpec {
  std::string cartan;
  int node = 0;
  std::string kind = "minuscule";  // minuscule | odd_quadric | d4_quadric
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CaseReport {
  CaseSpec spec;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool ok() const;
};

struct VerifyOptions {
  int max_degree = 2;
  long long budget = 10000000;
};

// Kind is inferred when empty: minuscule nodes, B_n node 1, else an error.
CaseSpec make_case(const std::string& cartan, int node, const std::string& kind = "");
CaseReport run_case(const CaseSpec& spec, const VerifyOptions& opt);
std::vector<CaseSpec> load_cases(const std::string& path);

json to_json(const CaseReport& r);

// The matrix printed for the six-dimensional quadric; entries "0", "1" or "q".
Matrix<LaurentPoly> printed_d4_matrix();
// True when M equals the printed matrix, possibly after swapping the two length-3 classes.
bool matches_printed_d4(const ConnMatrix& M, bool* swapped = nullptr);
// Operator on the rank-7 part of the D4 quadric connection.
ScalarOperator d4_operator(const ConnMatrix& M);
// theta^7 + 4q theta + 2q, the operator printed for the quadric.
ScalarOperator printed_d4_operator();
// Coefficients p(q) replaced by p(-q).
ScalarOperator negate_q(const ScalarOperator& L);

}  // namespace mm
