#include "mm/io.hpp"

#include <sstream>
#include <stdexcept>

namespace mm {

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json ex = json::object();
    for (std::size_t k = 0; k < p.vars().size(); ++k)
      if (it->first[k] != 0) ex[p.vars()[k]] = it->first[k];
    terms.push_back({{"exponents", ex}, {"coeff", rat_str(it->second)}});
  }
  return terms;
}

static json qvec(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json to_json(const RootDatum& d) {
  json cart = json::array();
  for (int i = 0; i < d.rank; ++i) {
    json row = json::array();
    for (int j = 0; j < d.rank; ++j) row.push_back(d.cartan(i, j));
    cart.push_back(row);
  }
  return {{"type", d.type.name()},
          {"rank", d.rank},
          {"cartan", cart},
          {"positive_roots", d.positive_roots},
          {"highest_root", d.highest_root},
          {"two_rho_coroot", d.two_rho_covec},
          {"coxeter_number", d.coxeter_number},
          {"exponents", d.exponents}};
}

json to_json(const ParabolicData& p) {
  json j = {{"I_P", p.I_P}, {"node", p.node}, {"minuscule", p.minuscule},
            {"levi_positive_roots", p.levi_positive_roots}, {"rho_P", qvec(p.rho_P)},
            {"coset_size", p.coset_size}};
  if (p.minuscule) {
    j["gamma"] = p.gamma;
    j["I_Q"] = p.I_Q;
  }
  return j;
}

json to_json(const CosetReps& reps) {
  json a = json::array();
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& w = reps.reps[k];
    a.push_back({{"index", k}, {"length", w.length}, {"word", w.word ? *w.word : std::vector<int>{}},
                 {"weight", reps.weights[k]}});
  }
  return a;
}

json to_json(const ConnMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (!m(r, c).is_zero()) entries.push_back({{"row", r}, {"col", c}, {"terms", to_json(m(r, c))}});
  return {{"label", m.label},
          {"convention", "column w holds the image of sigma_w"},
          {"dim", m.dim()},
          {"basis", to_json(m.basis)},
          {"entries", entries}};
}

json to_json(const PeriodSeries& s) {
  return {{"coefficients", qvec(s.coefficients)}};
}

static json upoly(const UPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_str(c));
  return a;
}

json to_json(const ScalarOperator& L) {
  json co = json::array();
  for (const auto& p : L.coefficients) co.push_back({{"num", upoly(p.num())}, {"den", upoly(p.den())}});
  return {{"order", L.order()}, {"theta_coefficients", co}, {"text", L.str()}};
}

json to_json(const Potential& f) {
  return {{"variables", f.vars},
          {"coxeter", f.coxeter},
          {"linear", to_json(f.linear)},
          {"quantum", to_json(f.quantum)},
          {"text", f.full().str()}};
}

std::string to_csv(const ConnMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (!m(r, c).is_constant()) throw std::invalid_argument("csv output needs a constant matrix");
      os << (c ? "," : "") << rat_str(m(r, c).constant_term());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mm
