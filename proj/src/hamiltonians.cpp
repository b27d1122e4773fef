#include "starkondo/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace starkondo {

namespace {

void check_L(int L) {
  if (L < 1) throw std::invalid_argument("leg length must be >= 1");
}

OperatorSum qf_from_family(const QFParams& p, const FermionFamily& f) {
  const StarLayout& lay = f.layout;
  OperatorSum h(lay.total_sites());
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j) {
      h += fermion_op(f, alpha, j, true) * fermion_op(f, alpha, j + 1, false);
      h -= p.gamma *
           (fermion_op(f, alpha, j, false) * fermion_op(f, alpha, j + 1, false));
    }
  const cplx iu(0, 1);
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const int beta = next_leg(alpha);
    h += iu * p.a[alpha - 1] *
         (fermion_op(f, alpha, 1, true) * fermion_op(f, beta, 1, false));
    h += iu * p.b[alpha - 1] *
         (fermion_op(f, alpha, 1, false) * fermion_op(f, beta, 1, false));
  }
  return h + h.adjoint();
}

}  // namespace

OperatorSum build_xx_spin(const XXParams& p, bool with_aux) {
  check_L(p.L);
  const StarLayout lay{p.L, with_aux};
  OperatorSum h(lay.total_sites());
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j)
      h += site_op(lay, SiteId::at(alpha, j), OpKind::Plus) *
           site_op(lay, SiteId::at(alpha, j + 1), OpKind::Minus);
  for (int alpha = 1; alpha <= 3; ++alpha)
    h += p.rho * (site_op(lay, SiteId::at(alpha, 1), OpKind::Plus) *
                  site_op(lay, SiteId::at(next_leg(alpha), 1), OpKind::Minus));
  return h + h.adjoint();
}

OperatorSum build_kondo_fermionic(const XXParams& p) {
  check_L(p.L);
  const FermionFamily f = FermionFamily::make(FermionKind::Klein, p.L);
  const StarLayout& lay = f.layout;
  OperatorSum h(lay.total_sites());
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j)
      h -= fermion_op(f, alpha, j, true) * fermion_op(f, alpha, j + 1, false);
  // vertex pairs (1,2), (2,3), (3,1) carry eta^z, eta^x, eta^y
  const std::array<Pauli, 3> vertex_eta = {Pauli::Z, Pauli::X, Pauli::Y};
  const cplx irho = cplx(0, 1) * p.rho;
  for (int alpha = 1; alpha <= 3; ++alpha)
    h += irho * (klein_eta(vertex_eta[static_cast<std::size_t>(alpha - 1)], lay) *
                 fermion_op(f, alpha, 1, true) *
                 fermion_op(f, next_leg(alpha), 1, false));
  return h + h.adjoint();
}

const std::array<std::array<std::array<cplx, 3>, 3>, 3>& spin1_generators() {
  static const auto gens = [] {
    std::array<std::array<std::array<cplx, 3>, 3>, 3> s{};
    const cplx i(0, 1);
    s[0][1][2] = -i;
    s[0][2][1] = i;
    s[1][0][2] = i;
    s[1][2][0] = -i;
    s[2][0][1] = -i;
    s[2][1][0] = i;
    return s;
  }();
  return gens;
}

OperatorSum build_kondo_fermionic_spin1(const XXParams& p) {
  check_L(p.L);
  if (p.rho.imag() != 0.0)
    throw std::invalid_argument("spin-1 vertex form needs real rho");
  const FermionFamily f = FermionFamily::make(FermionKind::Klein, p.L);
  const StarLayout& lay = f.layout;
  OperatorSum h(lay.total_sites());
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j) {
      h -= fermion_op(f, alpha, j, true) * fermion_op(f, alpha, j + 1, false);
      h -= fermion_op(f, alpha, j + 1, true) * fermion_op(f, alpha, j, false);
    }
  const auto& s = spin1_generators();
  const std::array<Pauli, 3> axes = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int a = 0; a < 3; ++a)
    for (int alpha = 0; alpha < 3; ++alpha)
      for (int beta = 0; beta < 3; ++beta) {
        const cplx w = s[static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(alpha)]
                        [static_cast<std::size_t>(beta)];
        if (w == 0.0) continue;
        h += (-p.rho.real() * w) *
             (klein_eta(axes[static_cast<std::size_t>(a)], lay) *
              fermion_op(f, alpha + 1, 1, true) *
              fermion_op(f, beta + 1, 1, false));
      }
  return h;
}

long kondo_channel_count(double j) {
  const long t = std::lround(2.0 * j);  // t = 2j
  if (t < 1 || std::abs(2.0 * j - static_cast<double>(t)) > 1e-9)
    throw std::invalid_argument("spin must be a positive half-integer");
  // 2j(j+1)(2j+1)/3 = t(t+1)(t+2)/6
  return t * (t + 1) * (t + 2) / 6;
}

OperatorSum build_qf_fermionic(const QFParams& p) {
  check_L(p.L);
  return qf_from_family(p, FermionFamily::make(FermionKind::Aux, p.L));
}

OperatorSum build_qf_fermionic_noaux(const QFParams& p) {
  check_L(p.L);
  return qf_from_family(p, FermionFamily::make(FermionKind::Spiral, p.L));
}

OperatorSum build_qf_spin(const QFParams& p) {
  check_L(p.L);
  const StarLayout lay{p.L, true};
  OperatorSum h(lay.total_sites());
  auto plus = [&](int alpha, int j) {
    return site_op(lay, SiteId::at(alpha, j), OpKind::Plus);
  };
  auto minus = [&](int alpha, int j) {
    return site_op(lay, SiteId::at(alpha, j), OpKind::Minus);
  };
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j) {
      h -= plus(alpha, j) * minus(alpha, j + 1);
      h -= p.gamma * (minus(alpha, j) * minus(alpha, j + 1));
    }
  // vertex rows (1,2), (2,3), (3,1) carry sigma^{z,x,y} at the aux site
  const std::array<OpKind, 3> aux_kind = {OpKind::Z, OpKind::X, OpKind::Y};
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const int beta = next_leg(alpha);
    const OperatorSum aux =
        site_op(lay, SiteId::aux(), aux_kind[static_cast<std::size_t>(alpha - 1)]);
    h -= p.a[alpha - 1] * (aux * plus(alpha, 1) * minus(beta, 1));
    h -= p.b[alpha - 1] * (aux * minus(alpha, 1) * minus(beta, 1));
  }
  return h + h.adjoint();
}

}  // namespace starkondo
