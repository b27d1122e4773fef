#include "starkondo/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace starkondo {

namespace {

constexpr cplx kPhase[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};

int mod4(int p) { return ((p % 4) + 4) % 4; }

void check_n_sites(int n_sites) {
  if (n_sites < 1 || n_sites > 64)
    throw std::invalid_argument("n_sites must be in [1, 64]");
}

void check_same_sites(int a, int b) {
  if (a != b) throw std::invalid_argument("operator size mismatch");
}

}  // namespace

PauliString PauliString::identity(int n_sites) {
  check_n_sites(n_sites);
  return {n_sites, 0, 0, 0};
}

PauliString PauliString::single(int n_sites, int site, Pauli kind) {
  check_n_sites(n_sites);
  if (site < 0 || site >= n_sites)
    throw std::invalid_argument("site out of range");
  const std::uint64_t bit = std::uint64_t{1} << site;
  switch (kind) {
    case Pauli::X: return {n_sites, bit, 0, 0};
    case Pauli::Y: return {n_sites, bit, bit, 1};
    case Pauli::Z: return {n_sites, 0, bit, 0};
  }
  throw std::invalid_argument("bad Pauli kind");
}

cplx PauliString::phase() const { return kPhase[mod4(phase_exp)]; }

bool PauliString::commutes_with(const PauliString& q) const {
  check_same_sites(n_sites, q.n_sites);
  const int par =
      std::popcount(x_mask & q.z_mask) + std::popcount(z_mask & q.x_mask);
  return (par & 1) == 0;
}

PauliString pauli_mul(const PauliString& p, const PauliString& q) {
  check_same_sites(p.n_sites, q.n_sites);
  PauliString r;
  r.n_sites = p.n_sites;
  r.x_mask = p.x_mask ^ q.x_mask;
  r.z_mask = p.z_mask ^ q.z_mask;
  // reordering p's Z block past q's X block costs (-1) per overlap
  r.phase_exp = mod4(p.phase_exp + q.phase_exp +
                     2 * std::popcount(p.z_mask & q.x_mask));
  return r;
}

PauliString pauli_adjoint(const PauliString& p) {
  PauliString r = p;
  r.phase_exp = mod4(-p.phase_exp + 2 * std::popcount(p.x_mask & p.z_mask));
  return r;
}

OperatorSum::OperatorSum(int n_sites) : n_sites_(n_sites) {
  check_n_sites(n_sites);
}

OperatorSum OperatorSum::identity(int n_sites, cplx coeff) {
  OperatorSum s(n_sites);
  s.add_key(0, 0, coeff);
  return s;
}

OperatorSum OperatorSum::from_pauli(const PauliString& p, cplx coeff) {
  OperatorSum s(p.n_sites);
  s.add(p, coeff);
  return s;
}

void OperatorSum::add(const PauliString& p, cplx coeff) {
  check_same_sites(n_sites_, p.n_sites);
  add_key(p.x_mask, p.z_mask, coeff * kPhase[mod4(p.phase_exp)]);
}

void OperatorSum::add_key(std::uint64_t x, std::uint64_t z, cplx coeff) {
  auto it = terms_.find({x, z});
  if (it == terms_.end()) {
    if (coeff != 0.0) terms_.emplace(Key{x, z}, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) terms_.erase(it);  // exact cancellation only
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  check_same_sites(n_sites_, o.n_sites_);
  for (const auto& [k, c] : o.terms_) add_key(k.first, k.second, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  check_same_sites(n_sites_, o.n_sites_);
  for (const auto& [k, c] : o.terms_) add_key(k.first, k.second, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(cplx s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum r(n_sites_);
  for (const auto& [k, c] : terms_) {
    // (X^x Z^z)^dag = (-1)^{|x&z|} X^x Z^z
    const bool flip = std::popcount(k.first & k.second) & 1;
    r.add_key(k.first, k.second, flip ? -std::conj(c) : std::conj(c));
  }
  return r;
}

double OperatorSum::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

OperatorSum OperatorSum::pruned(double eps) const {
  OperatorSum r(n_sites_);
  for (const auto& [k, c] : terms_)
    if (std::abs(c) > eps) r.terms_.emplace(k, c);
  return r;
}

bool OperatorSum::is_hermitian(double tol) const {
  return operator_equal(*this, adjoint(), tol).equal;
}

std::string OperatorSum::to_text() const {
  std::string out;
  std::string word(static_cast<std::size_t>(n_sites_), 'I');
  char buf[128];
  for (const auto& [k, c] : terms_) {
    int ny = 0;
    for (int i = 0; i < n_sites_; ++i) {
      const bool x = (k.first >> i) & 1;
      const bool z = (k.second >> i) & 1;
      word[static_cast<std::size_t>(i)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
      ny += (x && z);
    }
    // stored coefficient multiplies X^x Z^z; each Y letter absorbs one i
    const cplx emit = c * kPhase[(4 - ny % 4) % 4];
    std::snprintf(buf, sizeof buf, "%.17g %.17g ", emit.real() + 0.0,
                  emit.imag() + 0.0);
    out += buf;
    out += word;
    out += '\n';
  }
  return out;
}

OperatorSum OperatorSum::from_text(const std::string& text) {
  std::istringstream in(text);
  OperatorSum r;
  bool seen = false;
  double re = 0.0, im = 0.0;
  std::string word;
  while (in >> re >> im >> word) {
    if (!seen) {
      r = OperatorSum(static_cast<int>(word.size()));
      seen = true;
    } else if (static_cast<int>(word.size()) != r.n_sites_) {
      throw std::invalid_argument("inconsistent word length");
    }
    std::uint64_t x = 0, z = 0;
    int ny = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      switch (word[i]) {
        case 'I': break;
        case 'X': x |= bit; break;
        case 'Z': z |= bit; break;
        case 'Y': x |= bit; z |= bit; ++ny; break;
        default: throw std::invalid_argument("bad Pauli letter");
      }
    }
    r.add_key(x, z, cplx(re, im) * kPhase[ny % 4]);
  }
  if (!seen) throw std::invalid_argument("empty operator text");
  if (!in.eof()) throw std::invalid_argument("malformed operator text");
  return r;
}

OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
OperatorSum operator*(OperatorSum a, cplx s) { return a *= s; }
OperatorSum operator*(cplx s, OperatorSum a) { return a *= s; }

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  check_same_sites(a.n_sites_, b.n_sites_);
  OperatorSum r(a.n_sites_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      const bool flip = std::popcount(ka.second & kb.first) & 1;
      r.add_key(ka.first ^ kb.first, ka.second ^ kb.second,
                flip ? -ca * cb : ca * cb);
    }
  return r;
}

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) {
  return a * b - b * a;
}

OperatorSum anticommutator(const OperatorSum& a, const OperatorSum& b) {
  return a * b + b * a;
}

EqualityResult operator_equal(const OperatorSum& a, const OperatorSum& b,
                              double tol) {
  const double r = (a - b).max_abs_coeff();
  return {r <= tol, r};
}

}  // namespace starkondo
