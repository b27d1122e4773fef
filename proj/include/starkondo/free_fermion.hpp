#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "starkondo/hamiltonians.hpp"

namespace starkondo {

struct HoppingMatrix {
  int L = 0;
  double a = 0.0;
  Eigen::MatrixXcd m;  // 3L x 3L Hermitian, zero diagonal
};

/// Single-particle matrix in the mode numbering (alpha-1)*L + j: unit
/// bonds inside each leg, +-ia between the three vertex-adjacent modes.
HoppingMatrix build_A(int L, double a);

/// Chebyshev polynomial of the second kind; three-term recurrence in
/// band, hyperbolic closed form for |x| > 1.
double chebyshev_U(int n, double x);

enum class RootFamily { Plus, Minus, Chebyshev };

const char* family_name(RootFamily f);

struct ModeSpectrum {
  int L = 0;
  double a = 0.0;
  std::vector<double> lambdas;       // all 3L mode energies, ascending
  std::vector<RootFamily> families;  // parallel to lambdas

  std::vector<double> family_roots(RootFamily f) const;  // ascending
  int out_of_band_count(RootFamily f) const;             // |lambda| > 2
};

/// Mode energies as the roots of the three secular polynomials
/// U_L(x/2) + a sqrt(3) U_{L-1}(x/2), U_L(x/2) - a sqrt(3) U_{L-1}(x/2)
/// and U_L(x/2).  In-band roots come from a sign-change scan plus
/// bisection in the angle variable; the at-most-one out-of-band root per
/// signed family (present iff |a| sqrt(3) > (L+1)/L) is solved in the
/// hyperbolic variable through log-sinh bisection, which stays stable
/// for leg lengths in the hundreds.
ModeSpectrum secular_roots(int L, double a);

/// All 2^n many-body energies from n mode energies, built as
/// {sum_k (+-1/2) |lambda_k|} over sign choices.  The equivalent
/// occupation-number construction {sum_k n_k lambda_k} is computed too
/// and cross-checked internally (the two agree because the mode energies
/// sum to zero).  Sorted ascending.
std::vector<double> many_body_spectrum(const std::vector<double>& lambdas,
                                       int max_modes_guard = 12);
std::vector<double> many_body_spectrum(const ModeSpectrum& modes,
                                       int max_modes_guard = 12);

double ground_energy(const std::vector<double>& lambdas);
double ground_energy(const ModeSpectrum& modes);

/// Many-body spectrum of the quadratic-form model with pairing, via the
/// Bogoliubov block construction on the 3L modes: quasiparticle energies
/// are the nonnegative eigenvalues of [[T, -P*], [P, -T^t]] and the
/// constant offset is (tr T - sum eps)/2.  Sorted ascending.
std::vector<double> bdg_spectrum(const QFParams& p, int max_modes_guard = 12);

struct DispersionRow {
  RootFamily family;
  int k;          // 1..L within the family
  double lambda;  // ascending within the family
};

/// Per-family root table, families in the order plus, minus, chebyshev.
std::vector<DispersionRow> dispersion_table(int L, double a);

/// "family,k,lambda" CSV with 17 significant digits.
std::string dispersion_to_csv(const std::vector<DispersionRow>& rows);

}  // namespace starkondo
