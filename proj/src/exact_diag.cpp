#include "starkondo/exact_diag.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

namespace starkondo {

Eigen::MatrixXcd to_matrix(const OperatorSum& a, int max_qubits) {
  const int n = a.n_sites();
  if (n < 1) throw std::invalid_argument("operator has no sites");
  if (n > max_qubits)
    throw std::invalid_argument("qubit count exceeds dense-matrix guard");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& [k, c] : a.terms()) {
    const std::uint64_t x = k.first, z = k.second;
    for (std::size_t b = 0; b < dim; ++b) {
      const bool neg = std::popcount(b & z) & 1;
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) +=
          neg ? -c : c;
    }
  }
  return m;
}

DenseSpectrum eig_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  DenseSpectrum s;
  s.dim = static_cast<int>(m.rows());
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + s.dim);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

SpectrumMatch spectra_match(const std::vector<double>& s1,
                            const std::vector<double>& s2, int multiplicity,
                            double tol) {
  if (multiplicity < 1)
    throw std::invalid_argument("multiplicity must be >= 1");
  if (s2.size() != s1.size() * static_cast<std::size_t>(multiplicity))
    throw std::invalid_argument("spectrum length mismatch");
  std::vector<double> a;
  a.reserve(s2.size());
  for (double v : s1) a.insert(a.end(), static_cast<std::size_t>(multiplicity), v);
  std::vector<double> b = s2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    dev = std::max(dev, std::abs(a[i] - b[i]));
  return {dev <= tol, dev};
}

std::string spectrum_to_csv(const std::vector<double>& values) {
  std::string out = "index,eigenvalue\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, values[i] + 0.0);
    out += buf;
  }
  return out;
}

}  // namespace starkondo
