#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "starkondo/exact_diag.hpp"
#include "starkondo/free_fermion.hpp"
#include "test_util.hpp"

using namespace starkondo;
using testutil::random_cplx;

namespace {

constexpr double kPi = std::numbers::pi;

double max_elementwise_dev(const std::vector<double>& a,
                           const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("chebyshev values") {
  CHECK(chebyshev_U(0, 0.3) == 1.0);
  CHECK(chebyshev_U(1, 0.3) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(chebyshev_U(2, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(chebyshev_U(3, 1.0) == 4.0);
  CHECK(chebyshev_U(3, -1.0) == -4.0);
  CHECK_THROWS_AS(chebyshev_U(-1, 0.0), std::invalid_argument);
  // trig identity in band
  for (double theta : {0.3, 1.1, 2.8})
    for (int n : {1, 4, 9})
      CHECK(chebyshev_U(n, std::cos(theta)) * std::sin(theta) ==
            doctest::Approx(std::sin((n + 1) * theta)).epsilon(1e-12));
  // recurrence continues to hold outside the band
  for (double x : {1.5, -2.2, 3.0})
    for (int n = 2; n <= 20; ++n)
      CHECK(chebyshev_U(n, x) ==
            doctest::Approx(2 * x * chebyshev_U(n - 1, x) -
                            chebyshev_U(n - 2, x))
                .epsilon(1e-12));
}

TEST_CASE("hopping matrix structure") {
  const auto A = build_A(2, 0.3);
  REQUIRE(A.m.rows() == 6);
  CHECK(A.m(0, 1) == cplx(1, 0));
  CHECK(A.m(2, 3) == cplx(1, 0));
  CHECK(A.m(0, 2) == cplx(0, 0.3));   // leg 1 head -> leg 2 head
  CHECK(A.m(2, 0) == cplx(0, -0.3));
  CHECK(A.m(4, 0) == cplx(0, 0.3));   // leg 3 head -> leg 1 head
  CHECK(A.m(1, 2) == cplx(0, 0));
  CHECK((A.m - A.m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(A.m.diagonal().cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(build_A(0, 1.0), std::invalid_argument);
}

TEST_CASE("single-shell roots") {
  const auto ms = secular_roots(1, 1.0);
  REQUIRE(ms.lambdas.size() == 3);
  const double r3 = std::sqrt(3.0);
  CHECK(ms.lambdas[0] == doctest::Approx(-r3).epsilon(1e-13));
  CHECK(std::abs(ms.lambdas[1]) <= 1e-12);
  CHECK(ms.lambdas[2] == doctest::Approx(r3).epsilon(1e-13));
  CHECK(ms.families[0] == RootFamily::Plus);
  CHECK(ms.families[1] == RootFamily::Chebyshev);
  CHECK(ms.families[2] == RootFamily::Minus);
  CHECK(ms.out_of_band_count(RootFamily::Plus) == 0);
}

TEST_CASE("two-shell roots against the quadratic formula") {
  // families solve lambda^2 +- sqrt(3) lambda - 1 = 0
  const auto ms = secular_roots(2, 1.0);
  const double r3 = std::sqrt(3.0), r7 = std::sqrt(7.0);
  const auto plus = ms.family_roots(RootFamily::Plus);
  const auto minus = ms.family_roots(RootFamily::Minus);
  const auto cheb = ms.family_roots(RootFamily::Chebyshev);
  REQUIRE(plus.size() == 2);
  CHECK(plus[0] == doctest::Approx(-(r3 + r7) / 2).epsilon(1e-13));
  CHECK(plus[1] == doctest::Approx((r7 - r3) / 2).epsilon(1e-13));
  CHECK(minus[0] == doctest::Approx((r3 - r7) / 2).epsilon(1e-13));
  CHECK(minus[1] == doctest::Approx((r3 + r7) / 2).epsilon(1e-13));
  CHECK(cheb[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(cheb[1] == doctest::Approx(1.0).epsilon(1e-13));
  // the strong-coupling escape: one root beyond the band per signed family
  CHECK(ms.out_of_band_count(RootFamily::Plus) == 1);
  CHECK(ms.out_of_band_count(RootFamily::Minus) == 1);
  CHECK(ms.out_of_band_count(RootFamily::Chebyshev) == 0);
}

TEST_CASE("a=0 reduces every family to the open-chain roots") {
  for (int L : {1, 2, 5, 17}) {
    const auto ms = secular_roots(L, 0.0);
    for (RootFamily f : {RootFamily::Plus, RootFamily::Minus,
                         RootFamily::Chebyshev}) {
      const auto roots = ms.family_roots(f);
      REQUIRE(static_cast<int>(roots.size()) == L);
      for (int k = 0; k < L; ++k) {
        const double expect = 2.0 * std::cos((L - k) * kPi / (L + 1));
        CHECK(std::abs(roots[static_cast<std::size_t>(k)] - expect) <= 1e-12);
      }
    }
  }
}

TEST_CASE("roots match dense eigenvalues") {
  for (int L : {1, 2, 5, 50})
    for (double a : {0.0, 0.3, 1.0}) {
      const auto ms = secular_roots(L, a);
      REQUIRE(static_cast<int>(ms.lambdas.size()) == 3 * L);
      const auto dense = eig_hermitian(build_A(L, a).m).eigenvalues;
      const double dev = max_elementwise_dev(ms.lambdas, dense);
      INFO("L=", L, " a=", a, " dev=", dev);
      CHECK(dev <= 1e-10);
    }
}

TEST_CASE("root multiset symmetries") {
  for (double a : {0.3, 0.9, 2.5}) {
    const auto ms = secular_roots(7, a);
    double sum = 0.0;
    for (double l : ms.lambdas) sum += l;
    CHECK(std::abs(sum) <= 1e-10);
    // plus and minus families mirror each other
    auto plus = ms.family_roots(RootFamily::Plus);
    auto minus = ms.family_roots(RootFamily::Minus);
    std::reverse(minus.begin(), minus.end());
    for (std::size_t i = 0; i < plus.size(); ++i)
      CHECK(plus[i] == doctest::Approx(-minus[i]).epsilon(1e-12));
  }
}

TEST_CASE("escape threshold for out-of-band roots") {
  // |a| sqrt(3) must exceed (L+1)/L
  const double thr = 1.5 / std::sqrt(3.0);  // L = 2
  auto below = secular_roots(2, thr - 0.01);
  CHECK(below.out_of_band_count(RootFamily::Plus) == 0);
  CHECK(below.out_of_band_count(RootFamily::Minus) == 0);
  auto above = secular_roots(2, thr + 0.01);
  CHECK(above.out_of_band_count(RootFamily::Plus) == 1);
  CHECK(above.out_of_band_count(RootFamily::Minus) == 1);
  // the L = 1 family polynomial is linear, so its root sits at -+ a
  // sqrt(3) wherever that lands
  auto one = secular_roots(1, 5.0);
  CHECK(one.out_of_band_count(RootFamily::Plus) == 1);  // |5 sqrt3| > 2
  CHECK(one.family_roots(RootFamily::Plus)[0] ==
        doctest::Approx(-5.0 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("large junction") {
  const auto ms = secular_roots(150, 1.0);
  REQUIRE(ms.lambdas.size() == 450);
  CHECK(ms.out_of_band_count(RootFamily::Plus) == 1);
  CHECK(ms.out_of_band_count(RootFamily::Minus) == 1);
  CHECK(ms.out_of_band_count(RootFamily::Chebyshev) == 0);
  const auto dense = eig_hermitian(build_A(150, 1.0).m).eigenvalues;
  CHECK(max_elementwise_dev(ms.lambdas, dense) <= 1e-10);
}

TEST_CASE("many-body assembly") {
  const double r3 = std::sqrt(3.0);
  const auto e = many_body_spectrum({0.0, r3, -r3});
  const std::vector<double> expect = {-r3, -r3, 0, 0, 0, 0, r3, r3};
  CHECK(max_elementwise_dev(e, expect) <= 1e-14);
  CHECK(many_body_spectrum(std::vector<double>{}) ==
        std::vector<double>{0.0});
  const auto pair = many_body_spectrum(std::vector<double>{1.5, -1.5});
  CHECK(max_elementwise_dev(pair, {-1.5, 0.0, 0.0, 1.5}) <= 1e-15);
  // the two internal constructions only agree for traceless mode sets
  CHECK_THROWS_AS(many_body_spectrum(std::vector<double>{1.5}),
                  std::runtime_error);
  CHECK(ground_energy({0.0, r3, -r3}) == doctest::Approx(-r3).epsilon(1e-15));
  CHECK_THROWS_AS(many_body_spectrum(std::vector<double>(13, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("ground energy of the decoupled two-shell star") {
  // each leg contributes -(|2cos(pi/3)| + |2cos(2pi/3)|)/2 = -1
  const auto ms = secular_roots(2, 0.0);
  CHECK(ground_energy(ms) == doctest::Approx(-3.0).epsilon(1e-13));
  const auto many = many_body_spectrum(ms);
  CHECK(many.front() == doctest::Approx(-3.0).epsilon(1e-13));
}

TEST_CASE("pairing-free bdg reduces to the secular spectrum") {
  for (int L : {1, 2})
    for (double a : {0.0, 0.4, 1.2}) {
      const QFParams p{L, 0.0, {a, a, a}, {}};
      const auto viaBdg = bdg_spectrum(p);
      const auto viaRoots = many_body_spectrum(secular_roots(L, a));
      CHECK(max_elementwise_dev(viaBdg, viaRoots) <= 1e-10);
    }
}

TEST_CASE("bdg against dense diagonalization") {
  std::mt19937 rng(981);
  for (int L : {1, 2})
    for (int rep = 0; rep < 3; ++rep) {
      QFParams p;
      p.L = L;
      std::uniform_real_distribution<double> g(-1, 1);
      p.gamma = g(rng);
      for (int i = 0; i < 3; ++i) {
        p.a[i] = random_cplx(rng);
        p.b[i] = random_cplx(rng);
      }
      const auto quasi = bdg_spectrum(p);
      const auto dense =
          eig_hermitian(to_matrix(build_qf_spin(p))).eigenvalues;
      const auto m = spectra_match(quasi, dense, 2, 1e-9);
      INFO("L=", L, " rep=", rep, " dev=", m.max_dev);
      CHECK(m.match);
    }
  CHECK_THROWS_AS(bdg_spectrum(QFParams{5, 0.1, {}, {}}),
                  std::invalid_argument);
}

TEST_CASE("dispersion table") {
  const auto rows = dispersion_table(1, 0.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].family == RootFamily::Plus);
  CHECK(rows[1].family == RootFamily::Minus);
  CHECK(rows[2].family == RootFamily::Chebyshev);
  for (const auto& r : rows) {
    CHECK(r.k == 1);
    CHECK(std::abs(r.lambda) <= 1e-12);
  }
  const std::string csv = dispersion_to_csv(dispersion_table(2, 0.5));
  CHECK(csv.substr(0, 16) == "family,k,lambda\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.find("plus,1,") != std::string::npos);
  CHECK(csv.find("chebyshev,2,") != std::string::npos);
}

TEST_CASE("family parallel arrays stay sorted") {
  const auto ms = secular_roots(9, 0.7);
  REQUIRE(ms.lambdas.size() == ms.families.size());
  CHECK(std::is_sorted(ms.lambdas.begin(), ms.lambdas.end()));
  for (RootFamily f : {RootFamily::Plus, RootFamily::Minus,
                       RootFamily::Chebyshev}) {
    const auto r = ms.family_roots(f);
    CHECK(static_cast<int>(r.size()) == 9);
    CHECK(std::is_sorted(r.begin(), r.end()));
  }
}
