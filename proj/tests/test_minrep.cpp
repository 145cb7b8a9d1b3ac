#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "mm/minrep.hpp"

using namespace mm;
using mmtest::datum;

namespace {

Matrix<int> commutator(const Matrix<int>& a, const Matrix<int>& b) { return a * b - b * a; }

bool zero_one(const Matrix<int>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && m(r, c) != 1) return false;
  return true;
}

int nonzero(const Matrix<int>& m) {
  int n = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) n += m(r, c) != 0;
  return n;
}

}  // namespace

TEST_CASE("A1 generators") {
  auto rep = build_minuscule_rep(minuscule_coset_reps(datum("A1"), 1));
  auto g = generator_matrices(rep);
  CHECK(g.x[0](0, 1) == 1);
  CHECK(nonzero(g.x[0]) == 1);
  CHECK(g.y[0](1, 0) == 1);
  CHECK(nonzero(g.y[0]) == 1);
  CHECK(g.h(0, 0) == 1);
  CHECK(g.h(1, 1) == -1);
  auto fg = fg_connection(rep);
  CHECK(fg(0, 1) == LaurentPoly::var("q"));
  CHECK(fg(1, 0) == LaurentPoly(1));
  CHECK(fg(0, 0).is_zero());
  CHECK(fg(1, 1).is_zero());
}

TEST_CASE("sl2 triple and weight structure in every minuscule representation") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    CAPTURE(t);
    CAPTURE(node);
    auto d = datum(t);
    auto reps = minuscule_coset_reps(d, node);
    auto rep = build_minuscule_rep(reps);
    auto g = generator_matrices(rep);
    CHECK(commutator(g.e, g.f) == g.h);
    CHECK(commutator(g.h, g.e) == g.e.scaled(2));
    CHECK(commutator(g.h, g.f) == g.f.scaled(-2));
    for (std::size_t w = 0; w < rep.dim(); ++w) CHECK(g.h(w, w) == reps.dim() - 2 * reps.reps[w].length);
    for (int j = 1; j <= d->rank; ++j) {
      const auto &x = g.x[j - 1], &y = g.y[j - 1];
      CHECK(zero_one(x));
      CHECK(zero_one(y));
      CHECK(y == x.transpose());
      // Serre-type check: x_j v_w = v_{s_j w} with s_j w in W^P.
      for (std::size_t w = 0; w < rep.dim(); ++w)
        for (std::size_t u = 0; u < rep.dim(); ++u)
          if (x(u, w)) {
            auto sw = multiply(*d, simple_reflection(*d, j), reps.reps[w]);
            CHECK(reps.index_of(sw) == static_cast<int>(u));
          }
      // [x_j, y_j] is the coroot alpha_j^vee acting diagonally.
      auto c = commutator(x, y);
      for (std::size_t w = 0; w < rep.dim(); ++w) CHECK(c(w, w) == rep.weight_of(w)[j - 1]);
    }
  }
}

TEST_CASE("f is the Hasse diagram") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    auto reps = minuscule_coset_reps(datum(t), node);
    auto g = generator_matrices(build_minuscule_rep(reps));
    auto D = classical_chevalley(reps);
    for (std::size_t r = 0; r < reps.size(); ++r)
      for (std::size_t c = 0; c < reps.size(); ++c) CHECK(LaurentPoly(g.f(r, c)) == D(r, c));
  }
}

TEST_CASE("x_theta") {
  auto c3 = build_minuscule_rep(minuscule_coset_reps(datum("C3"), 1));
  auto xc = xtheta_matrix(c3);
  CHECK(nonzero(xc) == 1);
  CHECK(xc(0, c3.dim() - 1) == 1);
  CHECK(nonzero(xtheta_matrix(build_minuscule_rep(minuscule_coset_reps(datum("E6"), 6)))) == 6);
  CHECK(nonzero(xtheta_matrix(build_minuscule_rep(minuscule_coset_reps(datum("E7"), 7)))) == 12);
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    auto rep = build_minuscule_rep(minuscule_coset_reps(datum(t), node));
    auto x = xtheta_matrix(rep);
    CHECK(zero_one(x));
    CHECK((x * x).is_zero());
  }
}

TEST_CASE("x_theta lies in the highest root space") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    auto d = datum(t);
    auto rep = build_minuscule_rep(minuscule_coset_reps(d, node));
    auto x = xtheta_matrix(rep);
    auto g = generator_matrices(rep);
    for (int j = 1; j <= d->rank; ++j) CHECK(commutator(g.x[j - 1], x).is_zero());
    auto tw = d->root_to_weight(d->highest_root);
    for (std::size_t r = 0; r < rep.dim(); ++r)
      for (std::size_t c = 0; c < rep.dim(); ++c)
        if (x(r, c)) {
          IVec mu = rep.weight_of(c);
          for (int i = 0; i < d->rank; ++i) mu[i] += tw[i];
          CHECK(mu == rep.weight_of(r));
        }
  }
}

TEST_CASE("mirror identity") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    CAPTURE(t);
    CAPTURE(node);
    auto reps = minuscule_coset_reps(datum(t), node);
    CHECK(fg_connection(build_minuscule_rep(reps)) == quantum_chevalley_minuscule(reps));
  }
}

TEST_CASE("equivariant mirror identity") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    CAPTURE(t);
    CAPTURE(node);
    auto d = datum(t);
    auto reps = minuscule_coset_reps(d, node);
    auto E = equivariant_fg(build_minuscule_rep(reps));
    CHECK(E == mihalcea_equivariant(reps));
    std::map<std::string, Q> zero;
    for (int j = 1; j <= d->rank; ++j) zero[h_symbol(j)] = 0;
    CHECK(E.entries.map([&](const LaurentPoly& p) { return p.subs(zero); }) ==
          fg_connection(build_minuscule_rep(reps)).entries);
  }
}

TEST_CASE("P1 equivariant connection") {
  auto E = equivariant_fg(build_minuscule_rep(minuscule_coset_reps(datum("A1"), 1)));
  auto h = LaurentPoly::var("h1");
  CHECK(E(0, 0) == -h);
  CHECK(E(0, 1) == LaurentPoly::var("q"));
  CHECK(E(1, 0) == LaurentPoly(1));
  CHECK(E(1, 1) == h);
}

TEST_CASE("connection form is homogeneous of degree one") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    auto reps = minuscule_coset_reps(datum(t), node);
    auto M = fg_connection(build_minuscule_rep(reps));
    CHECK(graded_conjugate(M, "zeta") == M.entries.scaled(LaurentPoly::var("zeta")));
  }
}
