#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace qrcybe;
  using namespace qrcybe::cli;

  CLI::App app{"Exact verification of quasi-rational r-matrices and classical doubles"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report on stdout");

  std::string builtin, input, p_text, gamma, element;
  int n = 2;
  std::optional<int> axioms, k_frob;
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 20240601;
  DoubleArgs dargs;

  auto* verify = app.add_subcommand("verify", "CYB residual and quasi-rationality of an r-matrix");
  verify->add_option("--builtin", builtin, "catalog entry (gamma1..gamma4, q0, q1, q2, eq5_rational)");
  verify->add_option("--input", input, "r-matrix document");
  verify->add_option("--n", n, "rank for gamma entries")->capture_default_str();
  verify->add_flag("--json", json);

  auto* print = app.add_subcommand("print", "canonical form of an r-matrix document");
  print->add_option("--input", input)->required();
  print->add_flag("--json", json);

  auto* dbl = app.add_subcommand("double", "checks on the windowed classical double");
  dbl->add_option("--check", dargs.check, "lagrangian|dualbasis|wk|lemma1|quotient|transversal")->required();
  dbl->add_option("--n", dargs.n)->capture_default_str();
  dbl->add_option("--k", dargs.k);
  dbl->add_option("--trunc", dargs.trunc, "window [-2t, t]; dual-basis order for dualbasis");
  dbl->add_option("--subspace", dargs.subspace, "D4 subspace fixture (transversal)");
  dbl->add_option("--model", dargs.model, "pstar|ip (transversal, instead of --subspace)");
  dbl->add_flag("--json", json);

  auto* cob = app.add_subcommand("cobracket", "co-bracket of a loop monomial");
  cob->add_option("--gamma", gamma, "gamma1..gamma4");
  cob->add_option("--input", input, "kernel given as an r-matrix document");
  cob->add_option("--element", element, "BASIS:u^D");
  cob->add_option("--n", n)->capture_default_str();
  cob->add_option("--axioms", axioms, "check cocycle and co-Jacobi on monomials up to this degree");
  cob->add_flag("--json", json);

  auto* cal = app.add_subcommand("calibrate", "fix the Casimir scale and the Drinfeld-Jimbo orientation");
  cal->add_flag("--json", json);

  auto* gau = app.add_subcommand("gauge", "apply Ad(p(u) (x) p(v))");
  gau->add_option("--p", p_text, "product of unip(root, degree, scalar)");
  gau->add_option("--builtin", builtin);
  gau->add_option("--input", input);
  gau->add_option("--n", n)->capture_default_str();
  gau->add_option("--random", random_count, "number of seeded random unipotent gauges");
  gau->add_option("--seed", seed)->capture_default_str();
  gau->add_flag("--json", json);

  auto* frob = app.add_subcommand("frobenius", "constant r-matrix from quasi-Frobenius data");
  frob->add_option("--input", input)->required();
  frob->add_option("--k", k_frob);
  frob->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report rep;
    if (*verify) rep = cmd_verify(builtin, input, n);
    else if (*print) rep = cmd_print(input);
    else if (*dbl) rep = cmd_double(dargs);
    else if (*cob) rep = cmd_cobracket(gamma, input, element, n, axioms);
    else if (*cal) rep = cmd_calibrate();
    else if (*gau) rep = cmd_gauge(p_text, builtin, input, n, random_count, seed);
    else rep = cmd_frobenius(input, k_frob);
    if (json) std::cout << rep.to_json().dump(2) << "\n";
    else rep.print(std::cout);
    return rep.exit_code();
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const verification_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
}
