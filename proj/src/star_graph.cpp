#include "starkondo/star_graph.hpp"

#include <stdexcept>

namespace starkondo {

int StarLayout::qubit_index(const SiteId& s) const {
  if (leg_length < 1) throw std::invalid_argument("leg_length must be >= 1");
  if (s.is_aux()) {
    if (!with_aux)
      throw std::invalid_argument("layout has no auxiliary site");
    return 0;
  }
  if (s.leg < 1 || s.leg > n_legs)
    throw std::invalid_argument("leg index out of range");
  if (s.pos < 1 || s.pos > leg_length)
    throw std::invalid_argument("leg position out of range");
  return (with_aux ? 1 : 0) + (s.leg - 1) * leg_length + (s.pos - 1);
}

OperatorSum site_op(const StarLayout& layout, const SiteId& s, OpKind kind) {
  const int n = layout.total_sites();
  const int q = layout.qubit_index(s);
  switch (kind) {
    case OpKind::X:
      return OperatorSum::from_pauli(PauliString::single(n, q, Pauli::X));
    case OpKind::Y:
      return OperatorSum::from_pauli(PauliString::single(n, q, Pauli::Y));
    case OpKind::Z:
      return OperatorSum::from_pauli(PauliString::single(n, q, Pauli::Z));
    case OpKind::Plus:
    case OpKind::Minus: {
      const cplx ihalf(0, kind == OpKind::Plus ? 0.5 : -0.5);
      OperatorSum op =
          OperatorSum::from_pauli(PauliString::single(n, q, Pauli::X), 0.5);
      op.add(PauliString::single(n, q, Pauli::Y), ihalf);
      return op;
    }
  }
  throw std::invalid_argument("bad operator kind");
}

}  // namespace starkondo
