#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "common.hpp"
#include "mm/weyl.hpp"

using namespace mm;
using mmtest::datum;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
                        "C2", "C3", "C4", "D4", "D5", "E6", "E7"};

int expected_positive(const CartanType& t) {
  int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    default: return n == 6 ? 36 : 63;
  }
}

}  // namespace

TEST_CASE("parse and name round trip") {
  CHECK(CartanType::parse("e7").name() == "E7");
  CHECK(CartanType::parse("B4").dual().name() == "C4");
  CHECK_THROWS(CartanType::parse("D3"));
  CHECK_THROWS(CartanType::parse("E9"));
  CHECK_THROWS(CartanType::parse("X2"));
  CHECK_THROWS(CartanType::parse("G2"));
}

TEST_CASE("A3 datum") {
  auto d = datum("A3");
  CHECK(d->positive_roots.size() == 6);
  CHECK(d->highest_root == IVec{1, 1, 1});
  CHECK(d->coxeter_number == 4);
  CHECK(pairing(d->rho, d->coroot(d->highest_root)) == 3);
}

TEST_CASE("E7 datum") {
  auto d = datum("E7");
  CHECK(d->positive_roots.size() == 63);
  CHECK(d->coxeter_number == 18);
  CHECK(d->exponents == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
}

TEST_CASE("B3 highest root and pairing") {
  auto d = datum("B3");
  CHECK(d->highest_root == IVec{1, 2, 2});
  // theta = varpi_2 in B3, so <alpha_1, theta^vee> = 0 and <alpha_2, theta^vee> = 1.
  auto tc = d->coroot(d->highest_root);
  CHECK(d->root_pair(d->simple_root(1), tc) == 0);
  CHECK(d->root_pair(d->simple_root(2), tc) == 1);
  CHECK(d->root_to_weight(d->highest_root) == IVec{0, 1, 0});
}

TEST_CASE("positive roots agree with the orbit of the simple roots") {
  for (const char* s : kTypes) {
    CAPTURE(s);
    auto d = datum(s);
    std::set<IVec> roots;
    for (int i = 1; i <= d->rank; ++i) {
      auto o = mmtest::orbit(*d, mmtest::alpha_weight(*d, i));
      roots.insert(o.begin(), o.end());
    }
    std::set<IVec> mine;
    for (const auto& b : d->positive_roots) {
      auto w = d->root_to_weight(b);
      mine.insert(w);
      IVec neg(w.size());
      std::transform(w.begin(), w.end(), neg.begin(), [](int x) { return -x; });
      mine.insert(neg);
    }
    CHECK(mine == roots);
    CHECK(static_cast<int>(d->positive_roots.size()) == expected_positive(d->type));
  }
}

TEST_CASE("root ordering is by height then lexicographic") {
  for (const char* s : kTypes) {
    auto d = datum(s);
    for (std::size_t k = 1; k < d->positive_roots.size(); ++k) {
      const auto &a = d->positive_roots[k - 1], &b = d->positive_roots[k];
      CHECK((d->height(a) < d->height(b) || (d->height(a) == d->height(b) && a < b)));
    }
  }
}

TEST_CASE("datum invariants") {
  for (const char* s : kTypes) {
    CAPTURE(s);
    auto d = datum(s);
    int r = d->rank, c = d->coxeter_number;
    CHECK(2 * static_cast<int>(d->positive_roots.size()) == r * c);
    CHECK(static_cast<int>(d->exponents.size()) == r);
    for (int i = 0; i < r; ++i) CHECK(d->exponents[i] + d->exponents[r - 1 - i] == c);
    auto tc = d->coroot(d->highest_root);
    for (int i = 1; i <= r; ++i) {
      CHECK(d->root_pair(d->simple_root(i), tc) >= 0);
      CHECK(pairing(d->rho, d->coroot(d->simple_root(i))) == 1);
      CHECK(d->cartan(i - 1, i - 1) == 2);
    }
    CHECK(d->exponents.back() == d->height(d->highest_root));
    // 2 rho^vee is the sum of positive coroots.
    IVec s2(r, 0);
    for (const auto& b : d->positive_roots) {
      auto cb = d->coroot(b);
      for (int i = 0; i < r; ++i) s2[i] += cb[i];
    }
    CHECK(s2 == d->two_rho_covec);
  }
}

TEST_CASE("pairing") {
  CHECK(pairing(fundamental_weight(3, 1), IVec{1, 0, 0}) == 1);
  CHECK(pairing(fundamental_weight(3, 1), IVec{0, 1, 0}) == 0);
  CHECK_THROWS(pairing(IVec{1, 2}, IVec{1, 2, 3}));
}

TEST_CASE("quantum roots") {
  for (const char* s : {"A4", "D5", "E6"}) CHECK(quantum_roots(*datum(s)).size() == datum(s)->positive_roots.size());
  for (int n = 2; n <= 4; ++n) {
    auto d = datum("B" + std::to_string(n));
    std::vector<IVec> expect;
    for (const auto& b : d->positive_roots)
      if (d->is_long(b) || b == d->simple_root(n)) expect.push_back(b);
    CHECK(quantum_roots(*d) == expect);
  }
  auto c3 = datum("C3");
  std::vector<IVec> expect;
  for (const auto& b : c3->positive_roots)
    if (c3->is_long(b)) expect.push_back(b);
  for (IVec b : {IVec{1, 0, 0}, IVec{0, 1, 0}, IVec{1, 1, 0}}) expect.push_back(b);
  auto got = quantum_roots(*c3);
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
}

TEST_CASE("minuscule nodes") {
  CHECK(minuscule_nodes(*datum("A4")) == std::vector<int>{1, 2, 3, 4});
  CHECK(minuscule_nodes(*datum("B3")) == std::vector<int>{3});
  CHECK(minuscule_nodes(*datum("C3")) == std::vector<int>{1});
  CHECK(minuscule_nodes(*datum("D5")) == std::vector<int>{1, 4, 5});
  CHECK(minuscule_nodes(*datum("E6")) == std::vector<int>{1, 6});
  CHECK(minuscule_nodes(*datum("E7")) == std::vector<int>{7});
}

TEST_CASE("gamma") {
  CHECK(gamma_root(*datum("D4"), 1) == IVec{1, 0, 0, 0});
  for (int n = 2; n <= 4; ++n) {
    IVec g(n, 0);
    g[n - 2] = 1;
    g[n - 1] = 2;
    CHECK(gamma_root(*datum("B" + std::to_string(n)), n) == g);
  }
  for (int n = 2; n <= 4; ++n) {
    auto d = datum("C" + std::to_string(n));
    CHECK(gamma_root(*d, 1) == d->highest_root);
  }
  CHECK_THROWS(gamma_root(*datum("B3"), 1));
  CHECK_THROWS(gamma_root(*datum("E7"), 1));
}

TEST_CASE("levi data") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      auto d = datum("A" + std::to_string(n));
      auto p = maximal_parabolic(*d, k);
      QVec diff(n);
      for (int i = 0; i < n; ++i) diff[i] = 2 * (d->rho[i] - p.rho_P[i]);
      CHECK(pairing(diff, d->coroot(p.gamma)) == n + 1);
    }
  for (int n = 3; n <= 4; ++n) {
    auto p = maximal_parabolic(*datum("B" + std::to_string(n)), n);
    std::vector<int> iq;
    for (int j = 1; j <= n - 3; ++j) iq.push_back(j);
    iq.push_back(n - 1);
    CHECK(p.I_Q == iq);
  }
  auto b3 = maximal_parabolic(*datum("B3"), 3);
  CHECK(b3.I_Q == std::vector<int>{2});
  for (int n = 2; n <= 4; ++n) {
    auto p = maximal_parabolic(*datum("C" + std::to_string(n)), 1);
    CHECK(p.I_Q == p.I_P);
  }
}

TEST_CASE("Coxeter number equals the Chern pairing on every minuscule case") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    CAPTURE(t);
    CAPTURE(node);
    auto d = datum(t);
    auto p = maximal_parabolic(*d, node);
    QVec diff(d->rank);
    for (int i = 0; i < d->rank; ++i) diff[i] = 2 * (d->rho[i] - p.rho_P[i]);
    CHECK(pairing(diff, d->coroot(d->simple_root(node))) == d->coxeter_number);
  }
}

TEST_CASE("Levi membership and gamma characterization") {
  for (const auto& [t, node] : mmtest::minuscule_cases()) {
    CAPTURE(t);
    CAPTURE(node);
    auto d = datum(t);
    auto p = maximal_parabolic(*d, node);
    for (const auto& b : d->positive_roots) CHECK(p.in_levi(b) == (b[node - 1] == 0));
    auto qr = quantum_roots(*d);
    CHECK(std::find(qr.begin(), qr.end(), p.gamma) != qr.end());
    auto gc = d->coroot(p.gamma);
    CHECK(pairing(fundamental_weight_int(d->rank, node), gc) == 1);
    for (const auto& a : p.levi_positive_roots) {
      int v = d->root_pair(a, gc);
      if (p.in_q_levi(a))
        CHECK(v == 0);
      else
        CHECK(v == -1);
    }
    // Three-way characterization over R+ \ R+_P.
    auto reps = minuscule_coset_reps(d, node);
    std::set<IVec> minus_winv_theta;
    IVec neg_theta(d->rank);
    for (int i = 0; i < d->rank; ++i) neg_theta[i] = -d->highest_root[i];
    for (const auto& w : reps.reps) minus_winv_theta.insert(inverse(*d, w).apply_root(neg_theta));
    for (const auto& b : d->positive_roots) {
      if (p.in_levi(b)) continue;
      bool is_gamma = b == p.gamma;
      auto bc = d->coroot(b);
      bool second = std::find(qr.begin(), qr.end(), b) != qr.end();
      for (const auto& a : p.levi_positive_roots) {
        int v = d->root_pair(a, bc);
        if (v != 0 && v != -1) second = false;
      }
      bool third = minus_winv_theta.count(b) > 0;
      CHECK(is_gamma == second);
      CHECK(is_gamma == third);
    }
  }
}

TEST_CASE("coset sizes") {
  CHECK(maximal_parabolic(*datum("E7"), 7).coset_size == 56);
  CHECK(maximal_parabolic(*datum("E6"), 1).coset_size == 27);
  CHECK(maximal_parabolic(*datum("B3"), 3).coset_size == 8);
  CHECK(maximal_parabolic(*datum("D5"), 5).coset_size == 16);
  CHECK(levi_data(*datum("B3"), {2, 3}).coset_size == 6);
}
