#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace starkondo {

using cplx = std::complex<double>;

enum class Pauli { X, Y, Z };

/// One tensor product of single-site Pauli factors with an exact global
/// phase: i^phase_exp * prod_i X_i^{x_i} Z_i^{z_i}.  Bit i of each mask
/// refers to site i.  Y is encoded as x=z=1 with phase_exp 1 (Y = i XZ),
/// so products close without ever leaving the representation.
struct PauliString {
  int n_sites = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int phase_exp = 0;  // mod 4

  static PauliString identity(int n_sites);
  static PauliString single(int n_sites, int site, Pauli kind);

  cplx phase() const;  // i^phase_exp
  bool commutes_with(const PauliString& q) const;

  bool operator==(const PauliString&) const = default;
};

PauliString pauli_mul(const PauliString& p, const PauliString& q);
PauliString pauli_adjoint(const PauliString& p);

/// Complex linear combination of canonical Pauli strings.  The i^p phase
/// of every string is folded into its coefficient, so stored keys are
/// plain (x_mask, z_mask) pairs, at most one term per key, iterated in
/// lexicographic order.  Exactly cancelling terms are dropped; prune()
/// only removes sub-threshold float residue.
class OperatorSum {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using TermMap = std::map<Key, cplx>;

  OperatorSum() = default;
  explicit OperatorSum(int n_sites);

  static OperatorSum identity(int n_sites, cplx coeff = 1.0);
  static OperatorSum from_pauli(const PauliString& p, cplx coeff = 1.0);

  int n_sites() const { return n_sites_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff * p, folding i^phase_exp into the coefficient.
  void add(const PauliString& p, cplx coeff = 1.0);

  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  OperatorSum& operator*=(cplx s);

  OperatorSum adjoint() const;
  double max_abs_coeff() const;
  OperatorSum pruned(double eps = 1e-12) const;
  bool is_hermitian(double tol = 1e-12) const;

  /// Line-oriented text form, one term per line:
  /// "<coeff_re> <coeff_im> <word>" with the word over {I,X,Y,Z},
  /// site 0 leftmost.  Term order follows the canonical key order.
  std::string to_text() const;
  static OperatorSum from_text(const std::string& text);

 private:
  void add_key(std::uint64_t x, std::uint64_t z, cplx coeff);

  int n_sites_ = 0;
  TermMap terms_;

  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
};

OperatorSum operator+(OperatorSum a, const OperatorSum& b);
OperatorSum operator-(OperatorSum a, const OperatorSum& b);
OperatorSum operator*(OperatorSum a, cplx s);
OperatorSum operator*(cplx s, OperatorSum a);
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);
OperatorSum anticommutator(const OperatorSum& a, const OperatorSum& b);

struct EqualityResult {
  bool equal;
  double max_residual;
};

/// Max coefficient magnitude of A - B; equal iff it stays below tol.
EqualityResult operator_equal(const OperatorSum& a, const OperatorSum& b,
                              double tol = 1e-12);

}  // namespace starkondo
