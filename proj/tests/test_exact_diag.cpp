#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "starkondo/exact_diag.hpp"
#include "starkondo/hamiltonians.hpp"
#include "test_util.hpp"

using namespace starkondo;
using testutil::random_hermitian_opsum;
using testutil::random_opsum;
using testutil::random_pauli;

TEST_CASE("single-qubit matrices") {
  auto z = to_matrix(OperatorSum::from_pauli(PauliString::single(1, 0, Pauli::Z)));
  CHECK(z(0, 0) == cplx(1, 0));
  CHECK(z(1, 1) == cplx(-1, 0));
  CHECK(z(0, 1) == cplx(0, 0));

  auto x = to_matrix(OperatorSum::from_pauli(PauliString::single(1, 0, Pauli::X)));
  CHECK(x(0, 1) == cplx(1, 0));
  CHECK(x(1, 0) == cplx(1, 0));

  auto y = to_matrix(OperatorSum::from_pauli(PauliString::single(1, 0, Pauli::Y)));
  CHECK(y(0, 1) == cplx(0, -1));
  CHECK(y(1, 0) == cplx(0, 1));

  OperatorSum plus(1);
  plus.add(PauliString::single(1, 0, Pauli::X), 0.5);
  plus.add(PauliString::single(1, 0, Pauli::Y), cplx(0, 0.5));
  auto p = to_matrix(plus);
  CHECK(p(0, 1) == cplx(1, 0));
  CHECK(p(0, 0) == cplx(0, 0));
  CHECK(p(1, 0) == cplx(0, 0));
  CHECK(p(1, 1) == cplx(0, 0));
}

TEST_CASE("matrix realization is multiplicative") {
  std::mt19937 rng(31415);
  for (int rep = 0; rep < 25; ++rep) {
    OperatorSum a = random_opsum(rng, 3, 5);
    OperatorSum b = random_opsum(rng, 3, 5);
    Eigen::MatrixXcd lhs = to_matrix(a * b);
    Eigen::MatrixXcd rhs = to_matrix(a) * to_matrix(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13);
    Eigen::MatrixXcd adj = to_matrix(a.adjoint());
    CHECK((adj - to_matrix(a).adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("trace identity") {
  std::mt19937 rng(2718);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 4);
    OperatorSum a = random_opsum(rng, n, 6);
    cplx id_coeff = 0.0;
    auto it = a.terms().find({0, 0});
    if (it != a.terms().end()) id_coeff = it->second;
    const cplx tr = to_matrix(a).trace();
    CHECK(std::abs(tr - id_coeff * std::pow(2.0, n)) <= 1e-10);
  }
}

TEST_CASE("hermitian sums give exactly hermitian matrices") {
  std::mt19937 rng(55);
  for (int rep = 0; rep < 10; ++rep) {
    OperatorSum h = random_hermitian_opsum(rng, 4, 6);
    Eigen::MatrixXcd m = to_matrix(h);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("eigenvalues of small known matrices") {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  auto s = eig_hermitian(d);
  CHECK(s.dim == 3);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));

  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  auto sx = eig_hermitian(x);
  CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("3x3 eigenvalues match moment oracle") {
  std::mt19937 rng(161803);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::MatrixXcd m(3, 3);
    for (int i = 0; i < 3; ++i) {
      m(i, i) = u(rng);
      for (int j = i + 1; j < 3; ++j) {
        m(i, j) = cplx(u(rng), u(rng));
        m(j, i) = std::conj(m(i, j));
      }
    }
    const auto ev = eig_hermitian(m).eigenvalues;
    // first three power sums pin the eigenvalue multiset
    double p1 = 0, p2 = 0, p3 = 0;
    for (double l : ev) {
      p1 += l;
      p2 += l * l;
      p3 += l * l * l;
    }
    CHECK(p1 == doctest::Approx(m.trace().real()).epsilon(1e-10));
    CHECK(p2 == doctest::Approx((m * m).trace().real()).epsilon(1e-10));
    CHECK(p3 == doctest::Approx((m * m * m).trace().real()).epsilon(1e-10));
  }
}

TEST_CASE("eigenpair residuals on a random operator") {
  std::mt19937 rng(90210);
  OperatorSum h = random_hermitian_opsum(rng, 5, 10);
  Eigen::MatrixXcd m = to_matrix(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  REQUIRE(es.info() == Eigen::Success);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  std::uniform_int_distribution<int> pick(0, static_cast<int>(m.rows()) - 1);
  for (int rep = 0; rep < 5; ++rep) {
    const int k = pick(rng);
    Eigen::VectorXcd v = es.eigenvectors().col(k);
    const double res = (m * v - es.eigenvalues()[k] * v).norm();
    CHECK(res <= 1e-9 * scale);
  }
  // and the sorted values agree with eig_hermitian
  auto ev = eig_hermitian(m).eigenvalues;
  for (int i = 0; i < m.rows(); ++i)
    CHECK(ev[static_cast<std::size_t>(i)] ==
          doctest::Approx(es.eigenvalues()[i]).epsilon(1e-12));
}

TEST_CASE("spectrum invariant under string conjugation") {
  std::mt19937 rng(424242);
  OperatorSum h = random_hermitian_opsum(rng, 4, 8);
  OperatorSum u = OperatorSum::from_pauli(random_pauli(rng, 4));
  OperatorSum conj = u * h * u.adjoint();
  const auto s1 = eig_hermitian(to_matrix(h)).eigenvalues;
  const auto s2 = eig_hermitian(to_matrix(conj)).eigenvalues;
  CHECK(spectra_match(s1, s2, 1, 1e-9).match);
}

TEST_CASE("spectra_match") {
  CHECK(spectra_match({1, 2}, {1, 1, 2, 2}, 2, 0.0).match);
  auto r = spectra_match({0.0}, {1e-3}, 1, 1e-6);
  CHECK_FALSE(r.match);
  CHECK(r.max_dev == doctest::Approx(1e-3));
  CHECK_THROWS_AS(spectra_match({1}, {1, 1, 1}, 2, 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectra_match({1}, {1}, 0, 1e-9), std::invalid_argument);
}

TEST_CASE("extra-site doubling for the exchange model") {
  const XXParams p{2, cplx(0.7, 0.0)};
  const auto small = eig_hermitian(to_matrix(build_xx_spin(p, false))).eigenvalues;
  const auto big = eig_hermitian(to_matrix(build_xx_spin(p, true))).eigenvalues;
  const auto m = spectra_match(small, big, 2, 1e-9);
  CHECK(m.match);
}

TEST_CASE("guards and errors") {
  CHECK_THROWS_AS(to_matrix(OperatorSum::identity(15)), std::invalid_argument);
  CHECK_THROWS_AS(to_matrix(OperatorSum::identity(10), 9), std::invalid_argument);
  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
  Eigen::MatrixXcd rect = Eigen::MatrixXcd::Zero(2, 3);
  CHECK_THROWS_AS(eig_hermitian(rect), std::invalid_argument);
}

TEST_CASE("csv format") {
  CHECK(spectrum_to_csv({1.5, -0.25}) == "index,eigenvalue\n0,1.5\n1,-0.25\n");
  CHECK(spectrum_to_csv({}) == "index,eigenvalue\n");
  // 17 significant digits survive a round trip
  const double v = 0.1234567890123456789;
  const std::string csv = spectrum_to_csv({v});
  CHECK(std::stod(csv.substr(csv.find("0,") + 2)) == v);
}
