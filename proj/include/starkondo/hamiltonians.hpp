#pragma once

#include <array>

#include "starkondo/jw.hpp"

namespace starkondo {

struct XXParams {
  int L = 1;
  cplx rho = 0.0;  // vertex exchange strength
};

struct QFParams {
  int L = 1;
  double gamma = 0.0;       // leg pairing strength
  std::array<cplx, 3> a{};  // vertex hopping a_alpha
  std::array<cplx, 3> b{};  // vertex pairing b_alpha
};

/// XX exchange on each leg plus rho-weighted cyclic exchange between the
/// three first sites, plus Hermitian conjugates.  with_aux embeds the
/// same operator trivially on the layout that carries the extra site.
OperatorSum build_xx_spin(const XXParams& p, bool with_aux);

/// Kondo form of the same model: -hopping along the legs plus the vertex
/// coupling i rho (eta^z c_1^dag c_2 + eta^x c_2^dag c_3 + eta^y c_3^dag
/// c_1) + h.c., realized with the Klein fermion family on 3L+1 qubits.
OperatorSum build_kondo_fermionic(const XXParams& p);

/// Same vertex written through the spin-1 matrices,
/// -rho sum_a sum_{alpha beta} eta^a c_alpha^dag (S^a)_{alpha beta}
/// c_beta; only defined for real rho.
OperatorSum build_kondo_fermionic_spin1(const XXParams& p);

/// Number of effective screening channels for impurity spin j (a
/// half-integer): 2j(j+1)(2j+1)/3, always an integer.
long kondo_channel_count(double j);

/// su(2) generators in the 3-dimensional representation, index order
/// [a][row][col] with a: 0=x, 1=y, 2=z.
const std::array<std::array<std::array<cplx, 3>, 3>, 3>& spin1_generators();

/// Quadratic-form model with leg pairing gamma and complex vertex
/// couplings, as fermions of the Aux family (3L+1 qubits).
OperatorSum build_qf_fermionic(const QFParams& p);

/// Same fermionic expression realized with the winding-string family on
/// 3L qubits (no auxiliary site); same spectrum without the doubling.
OperatorSum build_qf_fermionic_noaux(const QFParams& p);

/// The equivalent direct spin form: -(exchange + gamma pairing) on the
/// legs minus the auxiliary-dressed vertex terms, + h.c. (3L+1 qubits).
OperatorSum build_qf_spin(const QFParams& p);

}  // namespace starkondo
