#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starkondo/exact_diag.hpp"
#include "starkondo/free_fermion.hpp"
#include "starkondo/hamiltonians.hpp"
#include "starkondo/jw.hpp"

namespace sk = starkondo;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
  return buf;
}

void check_guard(bool ok, bool force, const std::string& what) {
  if (!ok && !force)
    throw GuardError(what + " (pass --force to override)");
}

struct VerifyAlgebraOpts {
  int L = 1;
  std::string family = "all";
  double tol = 1e-12;
  std::string output;
  bool force = false;
};

int run_verify_algebra(const VerifyAlgebraOpts& o) {
  check_guard(o.L <= 5, o.force, "verify-algebra is limited to --L <= 5");
  std::vector<sk::AlgebraReport> reports;
  auto want = [&](const std::string& f) {
    return o.family == "all" || o.family == f;
  };
  if (want("klein"))
    reports.push_back(
        sk::verify_car(sk::FermionFamily::make(sk::FermionKind::Klein, o.L), o.tol));
  if (want("aux"))
    reports.push_back(
        sk::verify_car(sk::FermionFamily::make(sk::FermionKind::Aux, o.L), o.tol));
  if (want("naive"))
    reports.push_back(
        sk::verify_car(sk::FermionFamily::make(sk::FermionKind::Naive, o.L), o.tol));
  if (want("spiral"))
    reports.push_back(
        sk::verify_car(sk::FermionFamily::make(sk::FermionKind::Spiral, o.L), o.tol));
  if (want("klein") || o.family == "all")
    reports.push_back(sk::verify_eta_relations(sk::StarLayout{o.L, true}, o.tol));
  if (want("spiral") && o.L >= 2)
    reports.push_back(
        sk::spiral_quadraticity_probe(sk::StarLayout{o.L, false}, o.tol));

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "verify-algebra";
  doc["L"] = o.L;
  doc["family"] = o.family;
  bool all_pass = true;
  auto arr = ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(ordered_json::parse(r.to_json()));
    all_pass = all_pass && r.all_pass();
  }
  doc["reports"] = arr;
  doc["all_pass"] = all_pass;
  emit(o.output, doc.dump(2) + "\n");
  return all_pass ? kExitPass : kExitFail;
}

struct VerifyKondoOpts {
  int L = 1;
  double rho_re = 1.0;
  double rho_im = 0.0;
  double tol = 1e-12;
  std::string output;
  std::string dump;
  bool force = false;
};

int run_verify_kondo(const VerifyKondoOpts& o) {
  check_guard(o.L <= 3, o.force, "verify-kondo is limited to --L <= 3");
  const sk::XXParams p{o.L, sk::cplx(o.rho_re, o.rho_im)};
  const sk::OperatorSum kondo = sk::build_kondo_fermionic(p);
  const sk::OperatorSum spin = sk::build_xx_spin(p, true);
  const auto r1 = sk::operator_equal(kondo, spin, o.tol);

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "verify-kondo";
  doc["L"] = o.L;
  doc["rho"] = {o.rho_re, o.rho_im};
  doc["tolerance"] = o.tol;
  doc["residual_kondo_vs_spin"] = r1.max_residual;
  bool pass = r1.equal;
  if (o.rho_im == 0.0) {
    const auto r2 =
        sk::operator_equal(sk::build_kondo_fermionic_spin1(p), kondo, o.tol);
    doc["residual_spin1_vs_kondo"] = r2.max_residual;
    pass = pass && r2.equal;
  } else {
    doc["residual_spin1_vs_kondo"] = nullptr;
  }
  doc["pass"] = pass;
  if (!o.dump.empty()) emit(o.dump, kondo.to_text());
  emit(o.output, doc.dump(2) + "\n");
  return pass ? kExitPass : kExitFail;
}

struct SpectrumOpts {
  std::string model = "xx";
  int L = 1;
  double rho_re = 0.0;
  double rho_im = 0.0;
  double gamma = 0.0;
  double a = 0.0;
  double b = 0.0;
  bool with_aux = false;
  bool check_doubling = false;
  double tol = 1e-9;
  std::string format = "csv";
  std::string output;
  std::string dump;
  bool force = false;
};

int run_spectrum(const SpectrumOpts& o) {
  const bool aux_needed =
      o.model == "qf" || o.with_aux || o.check_doubling;
  const int qubits = 3 * o.L + (aux_needed ? 1 : 0);
  check_guard(qubits <= 13, o.force,
              "spectrum needs " + std::to_string(qubits) +
                  " qubits, over the dense limit of 13");

  sk::OperatorSum main_op(1);
  if (o.model == "xx") {
    const sk::XXParams p{o.L, sk::cplx(o.rho_re, o.rho_im)};
    main_op = sk::build_xx_spin(p, o.with_aux);
  } else {
    const sk::QFParams p{o.L, o.gamma, {o.a, o.a, o.a}, {o.b, o.b, o.b}};
    main_op = sk::build_qf_spin(p);
  }
  const auto spec = sk::eig_hermitian(sk::to_matrix(main_op)).eigenvalues;

  bool pass = true;
  double doubling_dev = 0.0;
  if (o.check_doubling) {
    std::vector<double> small, big;
    if (o.model == "xx") {
      const sk::XXParams p{o.L, sk::cplx(o.rho_re, o.rho_im)};
      small = sk::eig_hermitian(sk::to_matrix(sk::build_xx_spin(p, false)))
                  .eigenvalues;
      big = sk::eig_hermitian(sk::to_matrix(sk::build_xx_spin(p, true)))
                .eigenvalues;
    } else {
      const sk::QFParams p{o.L, o.gamma, {o.a, o.a, o.a}, {o.b, o.b, o.b}};
      small = sk::eig_hermitian(sk::to_matrix(sk::build_qf_fermionic_noaux(p)))
                  .eigenvalues;
      big = sk::eig_hermitian(sk::to_matrix(sk::build_qf_spin(p))).eigenvalues;
    }
    const auto match = sk::spectra_match(small, big, 2, o.tol);
    doubling_dev = match.max_dev;
    pass = match.match;
  }

  if (!o.dump.empty()) emit(o.dump, main_op.to_text());

  if (o.format == "json") {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "spectrum";
    doc["model"] = o.model;
    doc["L"] = o.L;
    doc["qubits"] = main_op.n_sites();
    doc["eigenvalues"] = spec;
    if (o.check_doubling) {
      doc["doubling_max_dev"] = doubling_dev;
      doc["doubling_pass"] = pass;
    }
    emit(o.output, doc.dump(2) + "\n");
  } else {
    std::string csv;
    if (o.check_doubling) {
      csv += "# doubling_max_dev," + fmt17(doubling_dev) + "\n";
      csv += std::string("# doubling_pass,") + (pass ? "1" : "0") + "\n";
    }
    csv += sk::spectrum_to_csv(spec);
    emit(o.output, csv);
  }
  return pass ? kExitPass : kExitFail;
}

struct RootsOpts {
  int L = 1;
  double a = 0.0;
  double tol = 1e-10;
  std::string output;
};

int run_roots(const RootsOpts& o) {
  const sk::ModeSpectrum ms = sk::secular_roots(o.L, o.a);
  const auto dense = sk::eig_hermitian(sk::build_A(o.L, o.a).m).eigenvalues;
  double dev = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i)
    dev = std::max(dev, std::abs(dense[i] - ms.lambdas[i]));
  const bool pass = dev <= o.tol;

  std::string csv;
  csv += "# eig_max_dev," + fmt17(dev) + "\n";
  csv += std::string("# eig_pass,") + (pass ? "1" : "0") + "\n";
  for (sk::RootFamily f : {sk::RootFamily::Plus, sk::RootFamily::Minus,
                           sk::RootFamily::Chebyshev})
    csv += std::string("# out_of_band_") + sk::family_name(f) + "," +
           std::to_string(ms.out_of_band_count(f)) + "\n";
  csv += sk::dispersion_to_csv(sk::dispersion_table(o.L, o.a));
  emit(o.output, csv);
  return pass ? kExitPass : kExitFail;
}

struct DispersionOpts {
  int L = 1;
  double a = 0.0;
  std::string output;
};

int run_dispersion(const DispersionOpts& o) {
  emit(o.output, sk::dispersion_to_csv(sk::dispersion_table(o.L, o.a)));
  return kExitPass;
}

struct CompareOpts {
  int L = 1;
  double a = 0.0;
  double tol = 1e-9;
  std::string output;
  bool force = false;
};

int run_compare(const CompareOpts& o) {
  check_guard(o.L <= 4, o.force, "freefermion compare is limited to --L <= 4");
  const sk::ModeSpectrum ms = sk::secular_roots(o.L, o.a);
  const auto many = sk::many_body_spectrum(ms, 3 * o.L);
  const sk::QFParams p{o.L, 0.0, {o.a, o.a, o.a}, {0.0, 0.0, 0.0}};
  const auto dense =
      sk::eig_hermitian(sk::to_matrix(sk::build_qf_spin(p))).eigenvalues;
  const auto match = sk::spectra_match(many, dense, 2, o.tol);
  const double gdev =
      std::abs(many.front() - sk::ground_energy(ms));
  const bool pass = match.match && gdev <= 1e-12;

  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "freefermion-compare";
  doc["L"] = o.L;
  doc["a"] = o.a;
  doc["tolerance"] = o.tol;
  doc["mode_energies"] = ms.lambdas;
  doc["spectrum_max_dev"] = match.max_dev;
  doc["ground_energy_dev"] = gdev;
  doc["pass"] = pass;
  emit(o.output, doc.dump(2) + "\n");
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spin models on the three-leg star graph: operator algebra checks, "
      "dense spectra and free-fermion solutions"};
  app.require_subcommand(1);

  VerifyAlgebraOpts va;
  auto* cva = app.add_subcommand(
      "verify-algebra", "check fermion-family commutation relations");
  cva->add_option("--L", va.L, "leg length")->required()->check(CLI::PositiveNumber);
  cva->add_option("--family", va.family, "klein|aux|naive|spiral|all")
      ->check(CLI::IsMember({"klein", "aux", "naive", "spiral", "all"}));
  cva->add_option("--tol", va.tol, "residual tolerance");
  cva->add_option("--output", va.output, "write JSON here instead of stdout");
  cva->add_flag("--force", va.force, "override the size guard");

  VerifyKondoOpts vk;
  auto* cvk = app.add_subcommand(
      "verify-kondo", "check the vertex-model operator identity");
  cvk->add_option("--L", vk.L, "leg length")->required()->check(CLI::PositiveNumber);
  cvk->add_option("--rho", vk.rho_re, "vertex coupling, real part");
  cvk->add_option("--rho-im", vk.rho_im, "vertex coupling, imaginary part");
  cvk->add_option("--tol", vk.tol, "residual tolerance");
  cvk->add_option("--output", vk.output, "write JSON here instead of stdout");
  cvk->add_option("--dump-operator", vk.dump, "dump the fermionic form as text");
  cvk->add_flag("--force", vk.force, "override the size guard");

  SpectrumOpts sp;
  auto* csp = app.add_subcommand("spectrum", "dense many-body spectrum");
  csp->add_option("--model", sp.model, "xx|qf")
      ->required()
      ->check(CLI::IsMember({"xx", "qf"}));
  csp->add_option("--L", sp.L, "leg length")->required()->check(CLI::PositiveNumber);
  csp->add_option("--rho", sp.rho_re, "xx vertex coupling, real part");
  csp->add_option("--rho-im", sp.rho_im, "xx vertex coupling, imaginary part");
  csp->add_option("--gamma", sp.gamma, "qf leg pairing");
  csp->add_option("--a", sp.a, "qf vertex hopping (uniform)");
  csp->add_option("--b", sp.b, "qf vertex pairing (uniform)");
  csp->add_flag("--with-aux", sp.with_aux, "embed xx on the layout with the extra site");
  csp->add_flag("--check-doubling", sp.check_doubling,
                "compare the 3L-qubit and (3L+1)-qubit spectra");
  csp->add_option("--tol", sp.tol, "doubling tolerance");
  csp->add_option("--format", sp.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  csp->add_option("--output", sp.output, "write here instead of stdout");
  csp->add_option("--dump-operator", sp.dump, "dump the operator as text");
  csp->add_flag("--force", sp.force, "override the size guard");

  RootsOpts rt;
  auto* ff = app.add_subcommand("freefermion", "single-particle solvers");
  ff->require_subcommand(1);
  auto* crt = ff->add_subcommand(
      "roots", "secular roots cross-checked against dense eigenvalues");
  crt->add_option("--L", rt.L, "leg length")->required()->check(CLI::PositiveNumber);
  crt->add_option("--a", rt.a, "vertex coupling")->required();
  crt->add_option("--tol", rt.tol, "cross-check tolerance");
  crt->add_option("--output", rt.output, "write CSV here instead of stdout");

  DispersionOpts dp;
  auto* cdp = ff->add_subcommand("dispersion", "per-family root table");
  cdp->add_option("--L", dp.L, "leg length")->required()->check(CLI::PositiveNumber);
  cdp->add_option("--a", dp.a, "vertex coupling")->required();
  cdp->add_option("--output", dp.output, "write CSV here instead of stdout");

  CompareOpts cm;
  auto* ccm = ff->add_subcommand(
      "compare", "free-fermion many-body spectrum against dense spin spectrum");
  ccm->add_option("--L", cm.L, "leg length")->required()->check(CLI::PositiveNumber);
  ccm->add_option("--a", cm.a, "vertex coupling")->required();
  ccm->add_option("--tol", cm.tol, "spectrum tolerance");
  ccm->add_option("--output", cm.output, "write JSON here instead of stdout");
  ccm->add_flag("--force", cm.force, "override the size guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cva->parsed()) return run_verify_algebra(va);
    if (cvk->parsed()) return run_verify_kondo(vk);
    if (csp->parsed()) return run_spectrum(sp);
    if (crt->parsed()) return run_roots(rt);
    if (cdp->parsed()) return run_dispersion(dp);
    if (ccm->parsed()) return run_compare(cm);
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
