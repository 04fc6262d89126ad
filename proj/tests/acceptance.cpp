// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "qrcybe/qrcybe.hpp"

using namespace qrcybe;

namespace {

/// A criterion returns an empty string on success, otherwise a reason.
using Criterion = std::function<std::string()>;

int failures = 0;

void run(int id, const std::string& title, const Criterion& c) {
  std::string why;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    why = c();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-58s (%.2fs)%s%s\n", why.empty() ? "PASS" : "FAIL", id, title.c_str(), secs,
              why.empty() ? "" : "  ", why.c_str());
  std::fflush(stdout);
  if (!why.empty()) ++failures;
}

int cli_exit(const std::string& args) {
  const std::string cmd = std::string(QRCYBE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string data(const std::string& rel) { return std::string(QRCYBE_DATA_DIR) + "/" + rel; }

std::string catalog_cybe() {
  for (auto name : all_catalog_names()) {
    for (int n : {2, 3}) {
      if (n == 3 && is_sl2_only(name)) continue;
      const Tensor3 res = cyb(catalog_entry(name, n).matrix);
      if (!res.is_zero())
        return std::string(to_string(name)) + " n=" + std::to_string(n) + ": " + std::to_string(res.term_count()) +
               " residual terms";
    }
  }
  return {};
}

std::string quasi_rationality() {
  const CasimirSpec om = casimir(make_sl(2), calibrated_scale());
  for (auto name : {CatalogName::q0, CatalogName::q1, CatalogName::q2}) {
    const QuasiRationalReport rep = quasi_rational_report(catalog_entry(name).matrix, om);
    if (!rep.quasi_rational()) return std::string(to_string(name)) + " not quasi-rational";
  }
  if (is_quasi_rational(catalog_entry(CatalogName::eq5_rational).matrix, om))
    return "eq5_rational reported quasi-rational";
  return {};
}

std::string q4_isotropy() {
  for (int n : {2, 3}) {
    const Algebra g = make_sl(n);
    const Window w = Window::from_trunc(8);
    std::vector<D4Element> xs;
    for (int k = 0; k <= 8; ++k)
      for (std::size_t a = 0; a < g->dim(); ++a) xs.push_back(embed_i(*g, GPoly::monomial(g->basis(a), k), w));
    for (const auto& x : xs)
      for (const auto& y : xs)
        if (q4_form(*g, x, y) != 0) return "sl(" + std::to_string(n) + "): nonzero pairing";
  }
  return {};
}

std::string dual_basis() {
  for (int n : {2, 3}) {
    const Algebra g = make_sl(n);
    if (!dual_basis_check(*g, 12)) return "sl(" + std::to_string(n) + "): dual basis check failed";
    // independent series: Ω_K · Σ_{m=0}^{12} u^(m+1) v^(-m)
    const Tensor2 om = casimir(g, 1).tensor;
    Tensor2 want(g);
    const RatFun u = RatFun::var(Var::u()), v = RatFun::var(Var::v());
    for (int m = 0; m <= 12; ++m) want += (u.pow(m + 1) * v.pow(-m)) * om;
    if (!(dual_sum_projection(g, 12) == want)) return "sl(" + std::to_string(n) + "): projection mismatch";
    const Tensor2 expanded = expand_tensor_at_infinity((u * v / (v - u)) * om, 12);
    Tensor2 shifted(g);
    for (int m = 0; m <= 12; ++m) shifted += (u.pow(m + 1) * v.pow(-m)) * om;
    if (!(expanded == shifted)) return "sl(" + std::to_string(n) + "): expansion of uvΩ/(v-u) mismatch";
  }
  return {};
}

std::string lemma1() {
  const Window w(-8, 4);
  for (int n : {2, 3}) {
    const Algebra g = make_sl(n);
    for (int k = 0; k < n; ++k) {
      const WkComplementReport rep = wk_complement_report(g, k, w);
      if (!rep.holds() || rep.quotient_dim != 2 * g->dim())
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": complement " +
               std::to_string(rep.complement_dim) + " vs " + std::to_string(rep.loop_part_dim) + ", quotient " +
               std::to_string(rep.quotient_dim);
    }
  }
  return {};
}

std::string quotient() {
  const Window w(-8, 4);
  for (int n : {2, 3}) {
    const Algebra g = make_sl(n);
    for (int k = 1; k < n; ++k)
      if (!(quotient_image_of_P(g, k, w) == parabolic_epsilon_target(g, k)))
        return "n=" + std::to_string(n) + " k=" + std::to_string(k);
  }
  return {};
}

std::string transversality() {
  const AmbientPtr amb = make_ambient(make_sl(2), DoubleKind::d4, Window(-8, 4));
  const TransversalityReport good = check_transversality(pstar_model(amb), 1);
  if (!good.all()) return "P* model fails";
  const TransversalityReport bad = check_transversality(embedded_P(amb), 1);
  if (bad.trivial_intersection) return "i(P) reported transversal to itself";
  return {};
}

std::string cobracket_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  const Algebra g = make_sl(2);
  std::vector<GPoly> monos;
  for (int d = 0; d <= 5; ++d)
    for (std::size_t a = 0; a < g->dim(); ++a) monos.push_back(GPoly::monomial(g->basis(a), d));
  for (auto name : {CatalogName::gamma2, CatalogName::gamma3, CatalogName::gamma4}) {
    const Tensor2 gamma = catalog_entry(name).matrix;
    for (const auto& p : monos) {
      if (!cojacobi_check(gamma, p)) return std::string(to_string(name)) + ": co-Jacobi fails";
      for (const auto& q : monos)
        if (!cocycle_check(gamma, p, q)) return std::string(to_string(name)) + ": cocycle fails";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > 30) return "took " + std::to_string(secs) + "s";
  return {};
}

std::string gauges() {
  const CasimirSpec om = casimir(make_sl(2), calibrated_scale());
  const auto ps = random_unipotents(2, 20, 20240601);
  for (auto name : {CatalogName::q0, CatalogName::q1, CatalogName::q2})
    for (const auto& rg : ps) {
      if (rg.p.degree() > 2) return "gauge degree above 2: " + rg.description;
      const Tensor2 t = gauge_transform(rg.p, catalog_entry(name).matrix, false);
      if (!quasi_rational_report(t, om).quasi_rational())
        return std::string(to_string(name)) + " under " + rg.description;
    }
  return {};
}

std::string frobenius() {
  const Algebra g = make_sl(2);
  const GElement e = g->basis(0), f = g->basis(1), h = g->basis(2);
  QMatrix form(2, 2);
  form(0, 1) = 1;
  form(1, 0) = -1;
  const TwoCocycle borel(g, GSubspace::spanned_by(3, {e, h}), form);
  const CasimirSpec om = casimir(g, calibrated_scale());
  if (!(quasi_rational_lift(borel, om) == catalog_entry(CatalogName::q1).matrix)) return "Borel lift differs from q1";
  const TwoCocycle B = cocycle_from_functional(g, GSubspace::spanned_by(3, {e, f, h}), f);
  if (B(e, h) != Rational(-8)) return "B(e,h) = " + B(e, h).get_str();
  if (!check_theorem5_pair(B, 1).all()) return "pair (L, P_1) check fails";
  return {};
}

std::string calibration() {
  const CalibrationReport rep = calibration_report(make_sl(2));
  if (rep.survivors.size() != 1) return std::to_string(rep.survivors.size()) + " survivors";
  if (rep.survivors.front() != calibrated_scale()) return "survivor differs from calibrated scale";
  return catalog_cybe();
}

std::string cli_round_trip() {
  for (auto name : all_catalog_names()) {
    const Tensor2 t = catalog_entry(name).matrix;
    if (!(parse_rmatrix(print_rmatrix(t)).tensor() == t)) return std::string(to_string(name)) + " round trip";
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Tensor2 t = parse_rmatrix(random_document(2 + static_cast<int>(seed % 2), seed)).tensor();
    if (!(parse_rmatrix(print_rmatrix(t)).tensor() == t)) return "random document seed " + std::to_string(seed);
  }
  const std::pair<std::string, int> cases[] = {
      {"verify --builtin q2", 0},
      {"verify --input " + data("rmatrices/not_a_solution.rm"), 1},
      {"verify --input " + data("rmatrices/broken.rm"), 2},
      {"print --input " + data("rmatrices/q1.rm"), 0},
      {"double --check lagrangian --n 2 --trunc 0 --k 5", 2},
  };
  for (const auto& [args, want] : cases) {
    const int got = cli_exit(args);
    if (got != want) return "`" + args + "` exited " + std::to_string(got) + ", expected " + std::to_string(want);
  }
  return {};
}

}  // namespace

int main() {
  run(1, "catalog solves the CYBE (sl2, sl3 where defined)", catalog_cybe);
  run(2, "quasi-rationality of q0, q1, q2; rational eq5 excluded", quasi_rationality);
  run(3, "i(g[u]) is isotropic for degrees up to 8", q4_isotropy);
  run(4, "dual basis pairing and dual-sum projection to order 12", dual_basis);
  run(5, "orthogonal complement of W_k, window [-8,4]", lemma1);
  run(6, "image of P in the quotient is the parabolic target", quotient);
  run(7, "P* transversal to i(P); i(P) is not", transversality);
  run(8, "cobracket cocycle and co-Jacobi, degree <= 5, < 30s", cobracket_axioms);
  run(9, "20 seeded gauges keep q0, q1, q2 quasi-rational", gauges);
  run(10, "Frobenius lift and the (L, P_1) pair for sl2", frobenius);
  run(11, "Casimir calibration has a unique survivor", calibration);
  run(12, "document round trip and CLI exit codes", cli_round_trip);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
