#pragma once

#include "starkondo/pauli.hpp"

namespace starkondo {

/// Site on the three-leg star.  leg 0 denotes the auxiliary site; real
/// legs are 1..3 with positions 1..L counted outward from the vertex.
struct SiteId {
  int leg = 0;
  int pos = 0;

  static SiteId aux() { return {}; }
  static SiteId at(int leg, int pos) { return {leg, pos}; }
  bool is_aux() const { return leg == 0; }
};

/// Cyclic successor of a leg index (3 wraps to 1).
inline int next_leg(int alpha) { return alpha % 3 + 1; }

struct StarLayout {
  int leg_length = 1;  // L
  bool with_aux = false;

  static constexpr int n_legs = 3;

  int total_sites() const { return n_legs * leg_length + (with_aux ? 1 : 0); }

  /// Aux maps to qubit 0 when present; (alpha, j) maps to
  /// offset + (alpha-1)*L + (j-1) with offset 1 iff the aux is present.
  int qubit_index(const SiteId& s) const;
};

enum class OpKind { X, Y, Z, Plus, Minus };

/// Single-site sigma^{x,y,z,+,-} embedded at qubit_index(s).
/// sigma^{+-} = (sigma^x +- i sigma^y) / 2.
OperatorSum site_op(const StarLayout& layout, const SiteId& s, OpKind kind);

}  // namespace starkondo
