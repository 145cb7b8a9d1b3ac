#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mm/rootsys.hpp"

namespace mmtest {

inline std::shared_ptr<const mm::RootDatum> datum(const std::string& s) {
  return std::make_shared<const mm::RootDatum>(mm::build_root_datum(mm::CartanType::parse(s)));
}

struct Case {
  std::string type;
  int node;
};

// Every minuscule (type, node) of rank at most 7, in the single-datum convention.
inline std::vector<Case> minuscule_cases() {
  std::vector<Case> out;
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) out.push_back({"A" + std::to_string(n), k});
  for (int n = 2; n <= 4; ++n) out.push_back({"B" + std::to_string(n), n});
  for (int n = 2; n <= 4; ++n) out.push_back({"C" + std::to_string(n), 1});
  for (int n = 4; n <= 5; ++n)
    for (int k : {1, n - 1, n}) out.push_back({"D" + std::to_string(n), k});
  out.push_back({"E6", 1});
  out.push_back({"E6", 6});
  out.push_back({"E7", 7});
  return out;
}

// Weight vector of a simple root: alpha_i = sum_j a_ij varpi_j.
inline mm::IVec alpha_weight(const mm::RootDatum& d, int i) {
  mm::IVec v(d.rank);
  for (int j = 0; j < d.rank; ++j) v[j] = d.cartan(i - 1, j);
  return v;
}

inline mm::IVec reflect(const mm::RootDatum& d, mm::IVec mu, int i) {
  int c = mu[i - 1];
  auto a = alpha_weight(d, i);
  for (int j = 0; j < d.rank; ++j) mu[j] -= c * a[j];
  return mu;
}

// Orbit of a weight under simple reflections; independent of the library's Weyl code.
inline std::set<mm::IVec> orbit(const mm::RootDatum& d, const mm::IVec& start) {
  std::set<mm::IVec> seen{start};
  std::vector<mm::IVec> todo{start};
  while (!todo.empty()) {
    auto mu = todo.back();
    todo.pop_back();
    for (int i = 1; i <= d.rank; ++i) {
      auto nu = reflect(d, mu, i);
      if (seen.insert(nu).second) todo.push_back(nu);
    }
  }
  return seen;
}

// Length of the minimal element carrying the dominant weight to mu.
inline int orbit_length(const mm::RootDatum& d, const mm::IVec& mu) {
  int n = 0;
  for (const auto& b : d.positive_roots)
    if (mm::pairing(mu, d.coroot(b)) < 0) ++n;
  return n;
}

}  // namespace mmtest
