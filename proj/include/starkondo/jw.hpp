#pragma once

#include <string>
#include <vector>

#include "starkondo/star_graph.hpp"

namespace starkondo {

/// Fermionization scheme for the three legs.
enum class FermionKind {
  /// Leg strings dressed with the Klein factors eta^{x,y,z}; needs the
  /// auxiliary site.  Gives genuine cross-leg anticommutation.
  Klein,
  /// Leg strings dressed with the bare auxiliary-site sigma^{x,y,z};
  /// also a faithful fermion family, used for the quadratic-form models.
  Aux,
  /// Bare per-leg strings with no cross-leg dressing.  Same-leg CAR
  /// holds, but operators on different legs commute instead of
  /// anticommuting (hardcore bosons across legs).  Kept as a negative
  /// control.
  Naive,
  /// One string winding through sites (1,1),(2,1),(3,1),(1,2),... with
  /// no auxiliary site.  Faithful fermions, but leg-local hopping stops
  /// being quadratic in these modes.
  Spiral,
};

const char* fermion_kind_name(FermionKind kind);

struct FermionFamily {
  FermionKind kind = FermionKind::Klein;
  StarLayout layout;

  static FermionFamily make(FermionKind kind, int leg_length);

  int n_modes() const { return 3 * layout.leg_length; }

  /// Mode enumeration for reports: legs ascending then position for the
  /// leg-ordered families, winding order for Spiral.
  void mode_site(int mode, int* leg, int* pos) const;
};

/// Klein factor eta^a: sigma^a at the auxiliary site times the full
/// sigma^z strings of the two legs a does not belong to.  A single
/// Hermitian Pauli string squaring to the identity.
OperatorSum klein_eta(Pauli a, const StarLayout& layout);

OperatorSum fermion_op(const FermionFamily& f, int leg, int pos, bool dagger);
OperatorSum fermion_op_mode(const FermionFamily& f, int mode, bool dagger);

struct RelationCheck {
  std::string name;
  /// Max residual over instances; for expect_zero == false classes this
  /// is the minimum instead (every instance must stay away from zero).
  double residual = 0.0;
  bool expect_zero = true;
  bool pass = false;
};

struct AlgebraReport {
  std::string family;
  int leg_length = 0;
  double tolerance = 0.0;
  std::string notes;
  std::vector<RelationCheck> relations;

  bool all_pass() const;
  const RelationCheck* find(const std::string& name) const;
  /// Stable schema-versioned JSON document.
  std::string to_json() const;
};

/// Checks the canonical anticommutation relations of a family, split by
/// relation type and same-leg / cross-leg support.  The Naive family
/// flips the cross-leg expectations: those classes must come out nonzero
/// while the corresponding commutators vanish.
AlgebraReport verify_car(const FermionFamily& f, double tol = 1e-12);

/// Klein-factor algebra: Hermiticity, pairwise anticommutation with
/// square 2, cyclic su(2)-like products, commutation with every Klein
/// fermion mode, and the raw-string commutation pattern that motivates
/// the construction (eta^x commutes with leg-1 bare strings and
/// anticommutes with leg-2 ones).
AlgebraReport verify_eta_relations(const StarLayout& layout,
                                   double tol = 1e-12);

/// Probes which star-model terms stay quadratic in the winding-string
/// modes: the first two vertex exchange terms do, the wrap-around vertex
/// term and every leg-internal hopping term do not (no single c^dag c
/// candidate matches, even up to scale), and the leg-1 bond from the
/// vertex acquires an explicit sigma^z dressing with a fixed sign.
AlgebraReport spiral_quadraticity_probe(const StarLayout& layout,
                                        double tol = 1e-12);

}  // namespace starkondo
