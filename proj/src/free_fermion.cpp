#include "starkondo/free_fermion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "starkondo/exact_diag.hpp"

namespace starkondo {

namespace {

constexpr double kPi = std::numbers::pi;

/// Secular function in the angle variable, lambda = 2 cos(theta):
/// sin((L+1) theta) + kappa sin(L theta), kappa = +-a sqrt(3).
double band_fn(int L, double kappa, double theta) {
  return std::sin((L + 1) * theta) + kappa * std::sin(L * theta);
}

double bisect_band(int L, double kappa, double lo, double hi, double flo) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = band_fn(L, kappa, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

/// Scans (theta_lo, theta_hi) with `cells` samples for sign changes.
void scan_band(int L, double kappa, double theta_lo, double theta_hi,
               int cells, std::vector<double>* roots) {
  const double step = (theta_hi - theta_lo) / cells;
  double prev_t = theta_lo + 0.5 * step;
  double prev_f = band_fn(L, kappa, prev_t);
  for (int i = 1; i < cells; ++i) {
    const double t = theta_lo + (i + 0.5) * step;
    const double ft = band_fn(L, kappa, t);
    if (prev_f == 0.0) {
      roots->push_back(prev_t);
    } else if (ft != 0.0 && (prev_f < 0) != (ft < 0)) {
      roots->push_back(bisect_band(L, kappa, prev_t, t, prev_f));
    }
    prev_t = t;
    prev_f = ft;
  }
  if (prev_f == 0.0) roots->push_back(prev_t);
}

double log_sinh(double x) {
  return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

/// Solves sinh((L+1) t) = c sinh(L t) for t > 0, assuming c > (L+1)/L.
double solve_out_of_band(int L, double c) {
  auto g = [&](double t) {
    return log_sinh((L + 1) * t) - log_sinh(L * t) - std::log(c);
  };
  double lo = 1e-12, hi = 1.0;
  if (g(lo) >= 0.0)
    throw std::runtime_error("out-of-band bracketing failed at t -> 0");
  int grow = 0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (++grow > 60)
      throw std::runtime_error("out-of-band bracketing failed at large t");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// All roots of one signed family, in-band scan plus the out-of-band
/// root when the coupling exceeds the escape threshold.
std::vector<double> signed_family_roots(int L, double kappa) {
  std::vector<double> thetas;
  const int cells = std::max(8 * (L + 1), 64);
  scan_band(L, kappa, 0.0, kPi, cells, &thetas);
  if (static_cast<int>(thetas.size()) < L) {
    // near-threshold roots can hug the band edges; rescan them finely
    const double edge = kPi / cells;
    scan_band(L, kappa, 0.0, edge, 512, &thetas);
    scan_band(L, kappa, kPi - edge, kPi, 512, &thetas);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(),
                             [](double x, double y) {
                               return std::abs(x - y) < 1e-12;
                             }),
                 thetas.end());
  }
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(L));
  for (double t : thetas) roots.push_back(2.0 * std::cos(t));

  const double esc = (L + 1.0) / L;
  if (static_cast<int>(roots.size()) == L - 1 && std::abs(kappa) > esc) {
    const double t = solve_out_of_band(L, std::abs(kappa));
    roots.push_back((kappa > 0 ? -2.0 : 2.0) * std::cosh(t));
  }
  if (static_cast<int>(roots.size()) != L)
    throw std::runtime_error("secular root count mismatch");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

HoppingMatrix build_A(int L, double a) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  const int n = 3 * L;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int leg = 0; leg < 3; ++leg)
    for (int j = 0; j + 1 < L; ++j) {
      const int i = leg * L + j;
      m(i, i + 1) = 1.0;
      m(i + 1, i) = 1.0;
    }
  const cplx ia(0, a);
  const int v[3] = {0, L, 2 * L};
  for (int alpha = 0; alpha < 3; ++alpha) {
    const int i = v[alpha], k = v[(alpha + 1) % 3];
    m(i, k) += ia;
    m(k, i) += std::conj(ia);
  }
  return {L, a, std::move(m)};
}

double chebyshev_U(int n, double x) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const double ax = std::abs(x);
  const double sgn = (x < 0 && (n & 1)) ? -1.0 : 1.0;
  if (ax == 1.0) return sgn * (n + 1);
  if (ax > 1.0) {
    const double t = std::acosh(ax);
    return sgn * std::sinh((n + 1) * t) / std::sinh(t);
  }
  double u0 = 1.0, u1 = 2.0 * x;
  if (n == 0) return u0;
  for (int k = 2; k <= n; ++k) {
    const double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

const char* family_name(RootFamily f) {
  switch (f) {
    case RootFamily::Plus: return "plus";
    case RootFamily::Minus: return "minus";
    case RootFamily::Chebyshev: return "chebyshev";
  }
  throw std::invalid_argument("bad root family");
}

std::vector<double> ModeSpectrum::family_roots(RootFamily f) const {
  std::vector<double> out;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (families[i] == f) out.push_back(lambdas[i]);
  return out;
}

int ModeSpectrum::out_of_band_count(RootFamily f) const {
  int n = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    if (families[i] == f && std::abs(lambdas[i]) > 2.0) ++n;
  return n;
}

ModeSpectrum secular_roots(int L, double a) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  std::vector<std::pair<double, RootFamily>> all;
  all.reserve(static_cast<std::size_t>(3 * L));
  for (int k = L; k >= 1; --k)
    all.emplace_back(2.0 * std::cos(k * kPi / (L + 1)), RootFamily::Chebyshev);
  const double kap = a * std::sqrt(3.0);
  for (double r : signed_family_roots(L, kap))
    all.emplace_back(r, RootFamily::Plus);
  for (double r : signed_family_roots(L, -kap))
    all.emplace_back(r, RootFamily::Minus);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return static_cast<int>(x.second) < static_cast<int>(y.second);
  });
  ModeSpectrum ms;
  ms.L = L;
  ms.a = a;
  for (const auto& [lam, fam] : all) {
    ms.lambdas.push_back(lam);
    ms.families.push_back(fam);
  }
  return ms;
}

std::vector<double> many_body_spectrum(const std::vector<double>& lambdas,
                                       int max_modes_guard) {
  const int n = static_cast<int>(lambdas.size());
  if (n > max_modes_guard)
    throw std::invalid_argument("mode count exceeds many-body guard");
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> sign_form(total), occ_form(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    double e = 0.0, o = 0.0;
    for (int k = 0; k < n; ++k) {
      if ((mask >> k) & 1) {
        e += 0.5 * std::abs(lambdas[static_cast<std::size_t>(k)]);
        o += lambdas[static_cast<std::size_t>(k)];
      } else {
        e -= 0.5 * std::abs(lambdas[static_cast<std::size_t>(k)]);
      }
    }
    sign_form[mask] = e;
    occ_form[mask] = o;
  }
  std::sort(sign_form.begin(), sign_form.end());
  std::sort(occ_form.begin(), occ_form.end());
  double dev = 0.0;
  for (std::size_t i = 0; i < total; ++i)
    dev = std::max(dev, std::abs(sign_form[i] - occ_form[i]));
  if (dev > 1e-9)
    throw std::runtime_error(
        "mode-sign and occupation spectra disagree; mode energies do not "
        "sum to zero");
  return sign_form;
}

std::vector<double> many_body_spectrum(const ModeSpectrum& modes,
                                       int max_modes_guard) {
  return many_body_spectrum(modes.lambdas, max_modes_guard);
}

double ground_energy(const std::vector<double>& lambdas) {
  double s = 0.0;
  for (double l : lambdas) s += std::abs(l);
  return -0.5 * s;
}

double ground_energy(const ModeSpectrum& modes) {
  return ground_energy(modes.lambdas);
}

std::vector<double> bdg_spectrum(const QFParams& p, int max_modes_guard) {
  if (p.L < 1) throw std::invalid_argument("L must be >= 1");
  const int n = 3 * p.L;
  if (n > max_modes_guard)
    throw std::invalid_argument("mode count exceeds many-body guard");
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd pmat = Eigen::MatrixXcd::Zero(n, n);
  auto idx = [&](int alpha, int j) { return (alpha - 1) * p.L + (j - 1); };
  auto add_pair = [&](int i, int k, cplx w) {
    // w d_i d_k, stored antisymmetrically so H_pair = (1/2) sum P_ik d_i d_k
    pmat(i, k) += w;
    pmat(k, i) -= w;
  };
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int j = 1; j < p.L; ++j) {
      const int i = idx(alpha, j), k = idx(alpha, j + 1);
      t(i, k) += 1.0;
      t(k, i) += 1.0;
      add_pair(i, k, -p.gamma);
    }
  const cplx iu(0, 1);
  for (int alpha = 1; alpha <= 3; ++alpha) {
    const int i = idx(alpha, 1), k = idx(next_leg(alpha), 1);
    const cplx hop = iu * p.a[static_cast<std::size_t>(alpha - 1)];
    t(i, k) += hop;
    t(k, i) += std::conj(hop);
    add_pair(i, k, iu * p.b[static_cast<std::size_t>(alpha - 1)]);
  }
  Eigen::MatrixXcd hb(2 * n, 2 * n);
  hb.topLeftCorner(n, n) = t;
  hb.topRightCorner(n, n) = -pmat.conjugate();
  hb.bottomLeftCorner(n, n) = pmat;
  hb.bottomRightCorner(n, n) = -t.transpose();
  const auto ev = eig_hermitian(hb).eigenvalues;  // ascending, +- pairs
  std::vector<double> eps(ev.end() - n, ev.end());
  const double e0 =
      0.5 * (t.trace().real() - std::accumulate(eps.begin(), eps.end(), 0.0));
  const std::size_t total = std::size_t{1} << n;
  std::vector<double> out(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    double e = e0;
    for (int k = 0; k < n; ++k)
      if ((mask >> k) & 1) e += eps[static_cast<std::size_t>(k)];
    out[mask] = e;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DispersionRow> dispersion_table(int L, double a) {
  const ModeSpectrum ms = secular_roots(L, a);
  std::vector<DispersionRow> rows;
  rows.reserve(static_cast<std::size_t>(3 * L));
  for (RootFamily f :
       {RootFamily::Plus, RootFamily::Minus, RootFamily::Chebyshev}) {
    const auto roots = ms.family_roots(f);
    for (std::size_t k = 0; k < roots.size(); ++k)
      rows.push_back({f, static_cast<int>(k) + 1, roots[k]});
  }
  return rows;
}

std::string dispersion_to_csv(const std::vector<DispersionRow>& rows) {
  std::string out = "family,k,lambda\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g\n", family_name(r.family), r.k,
                  r.lambda + 0.0);
    out += buf;
  }
  return out;
}

}  // namespace starkondo
