#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "starkondo/pauli.hpp"

namespace starkondo {

/// Dense 2^n x 2^n realization.  Basis states are bitstrings with bit
/// value 0 meaning sigma^z = +1, so a Z factor on site i contributes
/// (-1)^{bit i} and an X factor flips it.
Eigen::MatrixXcd to_matrix(const OperatorSum& a, int max_qubits = 14);

struct DenseSpectrum {
  std::vector<double> eigenvalues;  // ascending
  int dim = 0;
};

/// Eigenvalues of a Hermitian matrix (rejects non-Hermitian input).
DenseSpectrum eig_hermitian(const Eigen::MatrixXcd& m);

struct SpectrumMatch {
  bool match;
  double max_dev;
};

/// Replicates every s1 entry `multiplicity` times, sorts both sides and
/// compares elementwise.  Lengths must agree after replication.
SpectrumMatch spectra_match(const std::vector<double>& s1,
                            const std::vector<double>& s2, int multiplicity,
                            double tol);

/// "index,eigenvalue" CSV with 17 significant digits.
std::string spectrum_to_csv(const std::vector<double>& values);

}  // namespace starkondo
