#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "syzkit/linalg.hpp"
#include "test_util.hpp"

using namespace tu;

TEST_CASE("monomial ideal numerators") {
  RingPtr q = ring_xy();
  auto mono = [&](const std::string& s) { return P(q, s).lead().mon; };
  CHECK(monomial_ideal_numerator({}, 2) == ZPoly::one());
  CHECK(monomial_ideal_numerator({Monomial::one()}, 2) == ZPoly());
  // Principal: 1 - z^d.
  CHECK(monomial_ideal_numerator({mono("x^2*y^2")}, 2) == ZPoly::one() - ZPoly::zpow(4));
  // Regular sequence: product form.
  CHECK(monomial_ideal_numerator({mono("x^2"), mono("y^3")}, 2) ==
        (ZPoly::one() - ZPoly::zpow(2)) * (ZPoly::one() - ZPoly::zpow(3)));
  // (x^2, x*y): standard monomials 1; x, y; then the powers of y alone.
  ZPoly n = monomial_ideal_numerator({mono("x^2"), mono("x*y")}, 2);
  std::vector<long long> dims = n.series(2, 6);
  CHECK(dims == std::vector<long long>{1, 2, 1, 1, 1, 1, 1});
  // Multiples collapse.
  CHECK(monomial_ideal_numerator({mono("x"), mono("x*y")}, 2) ==
        monomial_ideal_numerator({mono("x")}, 2));
}

TEST_CASE("hilbert data on the worked examples") {
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});

  HilbertData HA = hilbert_series(A, free_module_presentation(A, {0}));
  CHECK(HA.dim == 1);
  CHECK(HA.h == ZPoly({1, 1, 1, 1}));
  CHECK(HA.e == std::vector<long long>{4, 6});

  HilbertData HM = hilbert_series(A, cyclic(A, {"x^2"}));
  CHECK(HM.dim == 1);
  CHECK(HM.e == std::vector<long long>{2, 1});

  CIRing B = quotient(q, {"x*y^2"});
  HilbertData HN = hilbert_series(B, cyclic(B, {"x"}));
  CHECK(HN.dim == 1);
  CHECK(e_coefficient(HN, 1) == 0);

  HilbertData HZ = hilbert_series(A, zero_module(A));
  CHECK(HZ.zero);
  CHECK(HZ.dim == kNegInfinity);
}

TEST_CASE("coefficients come from divided derivatives at one") {
  HilbertData H;
  H.zero = false;
  H.nvars = 2;
  H.dim = 1;
  H.h = ZPoly({2, -1});  // 2 - z
  H.e = {divided_derivative_at_one(H.h, 0), divided_derivative_at_one(H.h, 1)};
  CHECK(e_coefficient(H, 0) == 1);
  CHECK(e_coefficient(H, 1) == -1);
  CHECK_THROWS_AS(e_coefficient(H, 2), UsageError);
  CHECK_THROWS_AS(e_coefficient(H, -1), UsageError);

  HilbertData C;
  C.zero = false;
  C.nvars = 1;
  C.dim = 0;
  C.h = ZPoly({5});
  C.e = {5};
  CHECK(e_coefficient(C, 0) == 5);
  CHECK_THROWS_AS(e_coefficient(C, 1), UsageError);
}

TEST_CASE("hilbert-samuel values") {
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});
  Presentation Afree = free_module_presentation(A, {0});
  // dims 1,2,3,4,4,... so the value at n = 4 is 14.
  CHECK(hilbert_samuel(A, Afree, 4) == 14);
  CHECK(hilbert_samuel(A, Afree, 0) == 1);

  Presentation k = cyclic(A, {"x", "y"});
  for (int n = 0; n <= 6; ++n) CHECK(hilbert_samuel(A, k, n) == 1);

  // A/(x^2): values 2(n+1) - 1 once the function becomes polynomial.
  Presentation M = cyclic(A, {"x^2"});
  for (int n = 1; n <= 9; ++n) CHECK(hilbert_samuel(A, M, n) == 2 * (n + 1) - 1);
}

TEST_CASE("dense oracle on the worked examples") {
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});
  CHECK(oracle_dim(A, free_module_presentation(A, {0}), 5) == 4);
  Presentation k = cyclic(A, {"x", "y"});
  CHECK(oracle_dim(A, k, 0) == 1);
  CHECK(oracle_dim(A, k, 1) == 0);
}

TEST_CASE("series dimensions agree with the dense oracle") {
  RingPtr q3 = ring_xyz();
  CIRing B = quotient(q3, {"x^2", "y^2"});
  for (const Presentation& M :
       {cyclic(B, {"x"}), cyclic(B, {"x", "y", "z"}), free_module_presentation(B, {0})}) {
    HilbertData H = hilbert_series(B, M);
    for (int n = 0; n <= 12; ++n) CHECK(graded_dimension(H, n) == oracle_dim(B, M, n));
  }
}

TEST_CASE("pole order matches the growth of the dense dimensions") {
  RingPtr q3 = ring_xyz();
  CIRing B = quotient(q3, {"x^2", "y^2"});
  Presentation M = cyclic(B, {"x"});
  HilbertData H = hilbert_series(B, M);
  CHECK(H.dim == 1);
  CHECK(H.h.eval_at_one() != 0);
  // Dimension-one modules have eventually constant dimensions equal to e_0.
  for (int n = 8; n <= 12; ++n) CHECK(oracle_dim(B, M, n) == H.e[0]);
}

TEST_CASE("filtration-graded coefficients are shift independent") {
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});
  HilbertData H0 = hilbert_series(A, free_module_presentation(A, {0}));
  HilbertData H3 = hilbert_series(A, free_module_presentation(A, {3}));
  CHECK(H0.e == H3.e);
  CHECK(H0.h == H3.h);
  CHECK(graded_dimension(H3, 2) == 0);
  CHECK(graded_dimension(H3, 3) == 1);
}

namespace {

// Dense length of M / m^t M, no Groebner bases: for every internal degree d,
// count the cokernel of the columns [relations | f basis | monomials of
// filtration degree >= t].
long long dense_adic_length(const CIRing& A, const Presentation& P, int t) {
  const int nv = A.q->nvars();
  const FreeModule& fm = P.ambient;
  if (fm.rank() == 0) return 0;
  GF k = A.q->field();
  int max_shift = *std::max_element(fm.shifts.begin(), fm.shifts.end());
  long long total = 0;
  for (int d = *std::min_element(fm.shifts.begin(), fm.shifts.end()); d < t + max_shift; ++d) {
    std::vector<std::pair<int, Monomial>> rows;
    for (int c = 0; c < fm.rank(); ++c)
      for (const Monomial& m : monomials_of_degree(d - fm.shifts[c], nv)) rows.emplace_back(c, m);
    if (rows.empty()) continue;
    auto row_of = [&](int c, const Monomial& m) {
      for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r].first == c && rows[r].second == m) return static_cast<int>(r);
      REQUIRE(false);
      return -1;
    };
    std::vector<std::vector<uint32_t>> cols;
    std::vector<ModuleElement> gens = P.relations;
    const ModuleOrder pot = ModuleOrder::pot();
    for (int c = 0; c < fm.rank(); ++c)
      for (const Polynomial& fj : A.f)
        gens.push_back(element_mul_poly(ModuleElement::basis(c), fj, fm, pot));
    for (const ModuleElement& g : gens) {
      if (g.is_zero()) continue;
      for (const Monomial& m : monomials_of_degree(d - g.degree(fm), nv)) {
        std::vector<uint32_t> col(rows.size(), 0);
        for (const MTerm& term : g.terms()) {
          int r = row_of(term.comp, term.mon * m);
          col[r] = k.add(col[r], term.coeff);
        }
        cols.push_back(std::move(col));
      }
    }
    // Filtration truncation: unit columns for monomials of degree >= t.
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].second.degree() < t) continue;
      std::vector<uint32_t> col(rows.size(), 0);
      col[r] = 1;
      cols.push_back(std::move(col));
    }
    int rk = 0;
    if (!cols.empty()) {
      DenseMat mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
      for (int j = 0; j < mat.cols; ++j)
        for (int i = 0; i < mat.rows; ++i) mat.at(i, j) = cols[j][i];
      rk = rank(std::move(mat), k);
    }
    total += static_cast<long long>(rows.size()) - rk;
  }
  return total;
}

}  // namespace

TEST_CASE("hilbert-samuel values match a dense filtration oracle") {
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});
  // Shifted free module, a shifted cyclic module, and the mixed-degree
  // second syzygy of the residue field.
  Presentation k = cyclic(A, {"x", "y"});
  Resolution R = resolve(A, k, {.steps = 3, .over = Over::A});
  std::vector<Presentation> mods{free_module_presentation(A, {2}),
                                 present(A, {1}, {{P(q, "y^2")}}), R.module_at(2),
                                 R.module_at(3)};
  for (const Presentation& M : mods) {
    HilbertData H = hilbert_series(A, M);
    for (int n = 0; n <= 8; ++n) CHECK(hilbert_samuel(H, n) == dense_adic_length(A, M, n + 1));
  }

  RingPtr q3 = ring_xyz();
  CIRing B = quotient(q3, {"x^2", "y^2"});
  Resolution R2 = resolve(B, cyclic(B, {"x", "y", "z"}), {.steps = 3, .over = Over::A});
  for (int i = 1; i <= 3; ++i) {
    HilbertData H = hilbert_series(B, R2.module_at(i));
    for (int n = 0; n <= 6; ++n)
      CHECK(hilbert_samuel(H, n) == dense_adic_length(B, R2.module_at(i), n + 1));
  }
}

TEST_CASE("mixed generator degrees use the filtration, not the internal grading") {
  // Syzygy of the residue field over the hypersurface: generators sit in
  // degrees 2 and 4 and the filtration values differ from the shifted ones.
  RingPtr q = ring_xy();
  CIRing A = quotient(q, {"x^2*y^2"});
  Presentation k = cyclic(A, {"x", "y"});
  Resolution R = resolve(A, k, {.steps = 2, .over = Over::A});
  const Presentation& M2 = R.module_at(2);
  REQUIRE(M2.ambient.shifts == std::vector<int>{2, 4});
  HilbertData H = hilbert_series(A, M2);
  CHECK(H.h == ZPoly({2, 0, 1, 1}));
  CHECK(H.e == std::vector<long long>{4, 5});
  for (int n = 0; n <= 12; ++n) CHECK(graded_dimension(H, n) == oracle_dim(A, M2, n));
}
