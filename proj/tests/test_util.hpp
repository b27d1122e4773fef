#pragma once

#include <random>

#include "starkondo/pauli.hpp"

namespace testutil {

inline starkondo::cplx random_cplx(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

inline starkondo::PauliString random_pauli(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> mask(
      0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> ph(0, 3);
  return {n, mask(rng), mask(rng), ph(rng)};
}

inline starkondo::OperatorSum random_opsum(std::mt19937& rng, int n,
                                           int n_terms) {
  starkondo::OperatorSum s(n);
  for (int i = 0; i < n_terms; ++i) s.add(random_pauli(rng, n), random_cplx(rng));
  return s;
}

inline starkondo::OperatorSum random_hermitian_opsum(std::mt19937& rng, int n,
                                                     int n_terms) {
  starkondo::OperatorSum s = random_opsum(rng, n, n_terms);
  return s + s.adjoint();
}

}  // namespace testutil
