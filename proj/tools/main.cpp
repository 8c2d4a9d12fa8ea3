#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "homsuper/io.hpp"
#include "homsuper/nijenhuis.hpp"

using namespace homsuper;

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v(i));
  return s + ")";
}

void print_report(const AlgebraDocument& doc, const ValidationReport& rep) {
  std::cout << "algebra: " << doc.name << "\n"
            << "even_bracket: " << flag(rep.even_bracket) << "\n"
            << "skew: " << flag(rep.skew) << "\n"
            << "hom_jacobi: " << flag(rep.hom_jacobi) << "\n"
            << "multiplicative: " << flag(rep.multiplicative) << "\n"
            << "regular: " << flag(rep.regular) << "\n";
  for (const Violation& v : rep.violations) {
    std::cout << "violation: " << v.identity << " at (";
    for (std::size_t a = 0; a < v.at.size(); ++a)
      std::cout << (a ? ", " : "") << doc.algebra.basis().name(v.at[a]);
    std::cout << ") defect " << vec_string(v.defect) << "\n";
  }
}

/// Parses an L-valued 2-cochain from the sparse {i, j, dual, value} format,
/// where "dual" indexes the target coordinate.
CochainTable parse_l_valued_two_cochain(const HomLieSuperalgebra& L, const std::string& path) {
  DualValuedTwoForm w = load_two_form(L, path);
  return w.table;  // same carrier; dual parities equal primal parities
}

int cmd_validate(const std::string& path) {
  AlgebraDocument doc = load_algebra_document(path);
  ValidationReport rep = validate(doc.algebra);
  print_report(doc, rep);
  return rep.algebra_ok() ? 0 : 1;
}

int cmd_cohomology(const std::string& path, int s, int k, int parity) {
  AlgebraDocument doc = load_algebra_document(path);
  CohomologyResult res = cohomology_dims(doc.algebra, s, k);
  std::cout << "algebra: " << doc.name << "\n"
            << "s: " << s << "\n"
            << "k: " << k << "\n";
  if (parity < 0) {
    std::cout << "dim_cochains: " << res.dim_cochains << "\n"
              << "dim_cocycles: " << res.dim_cocycles << "\n"
              << "dim_coboundaries: " << res.dim_coboundaries << "\n"
              << "dim_cohomology: " << res.dim_cohomology << "\n";
    for (int t = 0; t < 2; ++t)
      std::cout << "sector_" << (t == 0 ? "even" : "odd") << ": C=" << res.sector_cochains[t]
                << " Z=" << res.sector_cocycles[t] << " B=" << res.sector_coboundaries[t]
                << " H=" << res.sector_cohomology[t] << "\n";
  } else {
    std::cout << "parity: " << parity << "\n"
              << "dim_cochains: " << res.sector_cochains[parity] << "\n"
              << "dim_cocycles: " << res.sector_cocycles[parity] << "\n"
              << "dim_coboundaries: " << res.sector_coboundaries[parity] << "\n"
              << "dim_cohomology: " << res.sector_cohomology[parity] << "\n";
  }
  return 0;
}

int cmd_nijenhuis(const std::string& path, const std::string& op_path) {
  AlgebraDocument doc = load_algebra_document(path);
  GradedMap N(load_matrix(doc.algebra.dim(), op_path), doc.algebra.basis(), doc.algebra.basis());
  NijenhuisCheck chk = is_hom_nijenhuis(doc.algebra, N);
  std::cout << "hom_nijenhuis: " << flag(chk.ok) << "\n";
  if (!chk.ok)
    std::cout << "defect_at: (" << doc.algebra.basis().name(chk.i) << ", "
              << doc.algebra.basis().name(chk.j) << ")\n"
              << "defect: " << vec_string(chk.defect) << "\n";
  return chk.ok ? 0 : 1;
}

int cmd_deform(const std::string& path, const std::string& psi_path) {
  AlgebraDocument doc = load_algebra_document(path);
  CochainTable psi = parse_l_valued_two_cochain(doc.algebra, psi_path);
  DeformationFamily fam = make_deformation(doc.algebra, psi);
  std::cout << "jacobi_psi: " << flag(fam.jacobi_psi) << "\n"
            << "closed: " << flag(fam.closed) << "\n"
            << "multiplicative_t: " << flag(fam.multiplicative_t) << "\n"
            << "valid: " << flag(fam.valid()) << "\n";
  return fam.valid() ? 0 : 1;
}

void print_series(const char* label, const std::vector<Subspace>& s) {
  std::cout << label << ":";
  for (const Subspace& t : s) std::cout << " " << t.dim();
  std::cout << "\n";
}

int cmd_series(const std::string& path) {
  AlgebraDocument doc = load_algebra_document(path);
  std::cout << "algebra: " << doc.name << "\n";
  print_series("derived", derived_series(doc.algebra));
  print_series("lower_central", lower_central_series(doc.algebra));
  print_series("upper_central", upper_central_series(doc.algebra));
  auto sl = solvable_length(doc.algebra), nl = nilpotent_length(doc.algebra);
  std::cout << "solvable_length: " << (sl ? std::to_string(*sl) : "none") << "\n"
            << "nilpotent_length: " << (nl ? std::to_string(*nl) : "none") << "\n";
  return 0;
}

DualValuedTwoForm load_omega_arg(const HomLieSuperalgebra& L, const std::string& arg) {
  if (arg == "zero") return DualValuedTwoForm::zero(L);
  return load_two_form(L, arg);
}

int cmd_tstar_build(const std::string& path, const std::string& omega_arg,
                    const std::string& out) {
  AlgebraDocument doc = load_algebra_document(path);
  DualValuedTwoForm omega = load_omega_arg(doc.algebra, omega_arg);
  QuadraticHomLieSuperalgebra ext = t_star_extend(doc.algebra, omega);
  AlgebraDocument out_doc{"tstar_" + doc.name, ext.algebra(), ext.form()};
  if (out.empty())
    std::cout << serialize_algebra_document(out_doc);
  else
    save_algebra_document(out, out_doc);
  return 0;
}

int cmd_tstar_recognize(const std::string& path, const std::string& ideal_path,
                        const std::string& out) {
  AlgebraDocument doc = load_algebra_document(path);
  if (!doc.form) throw std::runtime_error("parse error: document carries no \"form\"");
  QuadraticHomLieSuperalgebra Lq(doc.algebra, *doc.form);
  Subspace I = load_subspace(doc.algebra.dim(), ideal_path);
  RecognizedTStar rec = recognize_t_star(Lq, I);
  AlgebraDocument base_doc{"base_of_" + doc.name, rec.base, std::nullopt};
  std::cout << "base:\n" << serialize_algebra_document(base_doc);
  std::cout << "omega:\n" << serialize_two_form(rec.omega);
  std::cout << "phi:\n";
  const Mat& P = rec.phi.matrix();
  for (Eigen::Index r = 0; r < P.rows(); ++r) {
    for (Eigen::Index c = 0; c < P.cols(); ++c)
      std::cout << (c ? " " : "") << format_scalar(P(r, c));
    std::cout << "\n";
  }
  if (!out.empty()) save_algebra_document(out, base_doc);
  return 0;
}

int cmd_tstar_equiv(const std::string& path, const std::string& w1_arg, const std::string& w2_arg,
                    bool isometric) {
  AlgebraDocument doc = load_algebra_document(path);
  DualValuedTwoForm w1 = load_omega_arg(doc.algebra, w1_arg);
  DualValuedTwoForm w2 = load_omega_arg(doc.algebra, w2_arg);
  auto z = isometric ? decide_isometric_equivalence(doc.algebra, w1, w2)
                     : decide_equivalence(doc.algebra, w1, w2);
  std::cout << (isometric ? "isometrically_equivalent: " : "equivalent: ") << flag(z.has_value())
            << "\n";
  if (!z) return 1;
  std::cout << "z:\n" << serialize_one_cochain(*z);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for hom-Lie superalgebras given by structure constants"};
  app.require_subcommand(1);

  std::string path, op_path, psi_path, ideal_path, omega_arg = "zero", omega2_arg = "zero";
  std::string out;
  int s = 0, k = 1, parity = -1;

  auto* validate_cmd = app.add_subcommand("validate", "Check the bracket and twist axioms");
  validate_cmd->add_option("algebra", path)->required();

  auto* coh = app.add_subcommand("cohomology", "Twisted-adjoint cohomology dimensions");
  coh->add_option("algebra", path)->required();
  coh->add_option("--s", s, "Twist exponent of the adjoint action");
  coh->add_option("--k", k, "Cochain degree")->check(CLI::Range(0, 3));
  coh->add_option("--parity", parity, "Restrict the report to one parity sector")
      ->check(CLI::Range(0, 1));

  auto* nij = app.add_subcommand("nijenhuis", "Test an operator for the Nijenhuis identity");
  nij->add_option("algebra", path)->required();
  nij->add_option("--operator", op_path, "Matrix file for the candidate operator")->required();

  auto* def = app.add_subcommand("deform", "Check a 2-cochain as a deformation generator");
  def->add_option("algebra", path)->required();
  def->add_option("--psi", psi_path, "Sparse 2-cochain file")->required();

  auto* ser = app.add_subcommand("series", "Derived and central series");
  ser->add_option("algebra", path)->required();

  auto* tstar = app.add_subcommand("tstar", "T*-extension operations");
  tstar->require_subcommand(1);
  auto* build = tstar->add_subcommand("build", "Construct the extension by omega");
  build->add_option("algebra", path)->required();
  build->add_option("--omega", omega_arg, "Two-form file or \"zero\"");
  build->add_option("--out", out, "Write the extension document here");
  auto* recog = tstar->add_subcommand("recognize", "Recover a T*-presentation from an ideal");
  recog->add_option("algebra", path)->required();
  recog->add_option("--ideal", ideal_path, "Subspace file")->required();
  recog->add_option("--out", out, "Write the recovered base document here");
  auto* equiv = tstar->add_subcommand("equiv", "Decide equivalence of two extensions");
  equiv->add_option("algebra", path)->required();
  equiv->add_option("--omega", omega_arg, "First two-form or \"zero\"");
  equiv->add_option("--omega2", omega2_arg, "Second two-form or \"zero\"");
  auto* isoequiv = tstar->add_subcommand("isoequiv", "Decide isometric equivalence");
  isoequiv->add_option("algebra", path)->required();
  isoequiv->add_option("--omega", omega_arg, "First two-form or \"zero\"");
  isoequiv->add_option("--omega2", omega2_arg, "Second two-form or \"zero\"");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(path);
    if (app.got_subcommand(coh)) return cmd_cohomology(path, s, k, parity);
    if (app.got_subcommand(nij)) return cmd_nijenhuis(path, op_path);
    if (app.got_subcommand(def)) return cmd_deform(path, psi_path);
    if (app.got_subcommand(ser)) return cmd_series(path);
    if (tstar->got_subcommand(build)) return cmd_tstar_build(path, omega_arg, out);
    if (tstar->got_subcommand(recog)) return cmd_tstar_recognize(path, ideal_path, out);
    if (tstar->got_subcommand(equiv)) return cmd_tstar_equiv(path, omega_arg, omega2_arg, false);
    if (tstar->got_subcommand(isoequiv))
      return cmd_tstar_equiv(path, omega_arg, omega2_arg, true);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
