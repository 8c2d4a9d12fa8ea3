#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "homsuper/tstar.hpp"

using namespace homsuper;

namespace {

Subspace dual_half(Eigen::Index n) {
  Mat cols = Mat::Zero(2 * n, n);
  cols.bottomRows(n) = Mat::Identity(n, n);
  return Subspace::span(cols);
}

}  // namespace

TEST_CASE("form properties classify simple Gram matrices") {
  HomLieSuperalgebra a2 = helpers::fixture("a2").algebra;
  // diag(1, 0): degenerate; bracket is zero so invariance is automatic
  Mat g = Mat::Zero(2, 2);
  g(0, 0) = 1;
  FormProperties p = form_properties(a2, BilinearForm(g));
  CHECK(!p.nondegenerate);
  CHECK(p.invariant);
  CHECK(p.supersymmetric);
  CHECK(p.superconsistent);
  // pairing even with odd is not superconsistent
  Mat h = Mat::Zero(2, 2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  CHECK(!form_properties(a2, BilinearForm(h)).superconsistent);
  // an antisymmetric odd-odd pairing is supersymmetric under the Plus sign
  HomLieSuperalgebra h3 = helpers::fixture("h3").algebra;
  Mat q = Mat::Zero(3, 3);
  q(1, 2) = 1;
  q(2, 1) = -1;
  CHECK(form_properties(h3, BilinearForm(q)).supersymmetric);
  CHECK(!form_properties(h3, BilinearForm(q), SupersymmetryConvention::Minus).supersymmetric);
  CHECK_THROWS_AS(BilinearForm(Mat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("non-invariant forms are flagged") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  Mat g = Mat::Identity(2, 2);  // <[e,f],f> = <f,f> = 1 but <e,[f,f]> = 0
  CHECK(!form_properties(rl, BilinearForm(g)).invariant);
}

TEST_CASE("isotropy of subspaces under a hyperbolic form") {
  ExtensionData ext =
      t_star_extension_data(helpers::fixture("h3").algebra, DualValuedTwoForm::zero(helpers::fixture("h3").algebra));
  CHECK(is_isotropic(ext.form, dual_half(3)));
  Mat base = Mat::Zero(6, 3);
  base.topRows(3) = Mat::Identity(3, 3);
  CHECK(is_isotropic(ext.form, Subspace::span(base)));
  CHECK(!is_isotropic(ext.form, Subspace::full(6)));
}

TEST_CASE("the zero extension of each fixture is quadratic") {
  for (const char* name : {"a2", "h3", "rlambda2"}) {
    HomLieSuperalgebra L = helpers::fixture(name).algebra;
    QuadraticHomLieSuperalgebra ext = t_star_extend(L, DualValuedTwoForm::zero(L));
    CAPTURE(name);
    CHECK(ext.dim() == 2 * L.dim());
    ValidationReport rep = validate(ext.algebra());
    CHECK(rep.algebra_ok());
    // multiplicativity survives exactly when the twist is the identity
    CHECK(rep.multiplicative == (L.alpha().matrix() == Mat(Mat::Identity(L.dim(), L.dim()))));
    CHECK(form_properties(ext.algebra(), ext.form()).all());
    // dual coordinates carry starred names
    CHECK(ext.algebra().basis().name(L.dim()) == L.basis().name(0) + "*");
  }
}

TEST_CASE("supercyclic-cocycle bases are exact and extension-compatible") {
  HomLieSuperalgebra h3 = helpers::fixture("h3").algebra;
  CHECK(supercyclic_cocycle_basis(h3).empty());
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  auto basis = supercyclic_cocycle_basis(rl);
  REQUIRE(basis.size() == 1);
  for (const DualValuedTwoForm& w : basis) {
    CHECK(is_supercyclic(rl, w));
    CHECK(is_two_cocycle_dual(rl, w));
    CHECK(!w.table.is_zero());
    QuadraticHomLieSuperalgebra ext = t_star_extend(rl, w);
    CHECK(validate(ext.algebra()).algebra_ok());
    CHECK(form_properties(ext.algebra(), ext.form()).all());
  }
}

TEST_CASE("the cocycle predicate agrees with the module-valued coboundary") {
  for (const char* name : {"h3", "rlambda2"}) {
    HomLieSuperalgebra L = helpers::fixture(name).algebra;
    Representation pi = coadjoint(L);
    auto all = cochain_basis(L, pi, 2, Parity::Even, false);
    helpers::Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
      auto t = helpers::random_combination(all, rng);
      REQUIRE(t.has_value());
      DualValuedTwoForm w = DualValuedTwoForm::from_table(L, *t);
      CHECK(is_two_cocycle_dual(L, w) == coboundary_delta(L, pi, 0, w.table).is_zero());
    }
  }
}

TEST_CASE("hypothesis violations abort the extension with a named reason") {
  HomLieSuperalgebra h3 = helpers::fixture("h3").algebra;
  // not supercyclic: w(f1, f1) = z* alone
  CochainTable t(2, h3.basis().parities(), h3.basis().dual().parities(), Parity::Even);
  t.set({1, 1}, Vec::Unit(3, 0));
  DualValuedTwoForm w = DualValuedTwoForm::from_table(h3, t);
  REQUIRE(!is_supercyclic(h3, w));
  CHECK_THROWS_WITH_AS((void)t_star_extend(h3, w), "t_star_extend: omega is not supercyclic",
                       std::invalid_argument);
  // supercyclic but not a cocycle: found by scanning the supercyclic space
  Representation pi = coadjoint(h3);
  auto all = cochain_basis(h3, pi, 2, Parity::Even, false);
  bool exercised = false;
  for (const CochainTable& cand : all) {
    DualValuedTwoForm c = DualValuedTwoForm::from_table(h3, cand);
    if (is_supercyclic(h3, c) && !is_two_cocycle_dual(h3, c)) {
      CHECK_THROWS_WITH_AS((void)t_star_extend(h3, c), "t_star_extend: omega is not a 2-cocycle",
                           std::invalid_argument);
      exercised = true;
      break;
    }
  }
  // the joint space is trivial on h3, so some pure-supercyclic candidates
  // must fail the cocycle test unless the supercyclic space itself is zero
  CHECK((exercised || supercyclic_cocycle_basis(h3).empty()));
}

TEST_CASE("quadratic constructor rejects broken inputs by property name") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  CHECK_THROWS_AS(QuadraticHomLieSuperalgebra(rl, BilinearForm(Mat::Identity(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("half-dimension isotropic subspaces: ideal iff abelian") {
  HomLieSuperalgebra h3 = helpers::fixture("h3").algebra;
  QuadraticHomLieSuperalgebra ext = t_star_extend(h3, DualValuedTwoForm::zero(h3));
  HalfDimIsotropicCheck chk = half_dim_isotropic_ideal_lemma_check(ext, dual_half(3));
  CHECK(chk.ideal);
  CHECK(chk.abelian);
  // the embedded base of T*0(rlambda2) is isotropic but neither
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  QuadraticHomLieSuperalgebra extr = t_star_extend(rl, DualValuedTwoForm::zero(rl));
  Mat base = Mat::Zero(4, 2);
  base.topRows(2) = Mat::Identity(2, 2);
  HalfDimIsotropicCheck chk2 = half_dim_isotropic_ideal_lemma_check(extr, Subspace::span(base));
  CHECK(!chk2.ideal);
  CHECK(!chk2.abelian);
  // non-isotropic input is a precondition failure
  Mat mixed = Mat::Zero(4, 2);
  mixed(0, 0) = 1;
  mixed(2, 0) = 1;
  mixed(1, 1) = 1;
  CHECK_THROWS_AS(
      (void)half_dim_isotropic_ideal_lemma_check(extr, Subspace::span(mixed)),
      std::invalid_argument);
}

TEST_CASE("recognition inverts the extension construction") {
  for (const char* name : {"h3", "rlambda2", "a2"}) {
    HomLieSuperalgebra L = helpers::fixture(name).algebra;
    std::vector<DualValuedTwoForm> omegas{DualValuedTwoForm::zero(L)};
    for (const DualValuedTwoForm& w : supercyclic_cocycle_basis(L)) omegas.push_back(w);
    for (const DualValuedTwoForm& w : omegas) {
      QuadraticHomLieSuperalgebra ext = t_star_extend(L, w);
      RecognizedTStar rec = recognize_t_star(ext, dual_half(L.dim()));
      CAPTURE(name);
      CHECK(rec.base.dim() == L.dim());
      CHECK(validate(rec.base).algebra_ok());
      CHECK(is_morphism(rec.phi, ext.algebra(), rec.extension.algebra()));
      // exact isometry on all basis pairs
      const Mat& P = rec.phi.matrix();
      CHECK(Mat(P.transpose() * rec.extension.form().gram() * P) == ext.form().gram());
    }
  }
}

TEST_CASE("recognition rejects bad ideals") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  QuadraticHomLieSuperalgebra ext = t_star_extend(rl, DualValuedTwoForm::zero(rl));
  Mat base = Mat::Zero(4, 2);
  base.topRows(2) = Mat::Identity(2, 2);
  CHECK_THROWS_AS((void)recognize_t_star(ext, Subspace::span(base)), std::invalid_argument);
  CHECK_THROWS_AS((void)recognize_t_star(ext, dual_half(1)), std::invalid_argument);
}

TEST_CASE("equivalence solver returns verified witnesses") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  auto basis = supercyclic_cocycle_basis(rl);
  REQUIRE(basis.size() == 1);
  DualValuedTwoForm w1 = basis[0];
  // shift by a coboundary of a compatible even z
  Representation pi = coadjoint(rl);
  auto zbasis = cochain_basis(rl, pi, 1, Parity::Even, true);
  helpers::Rng rng(42);
  int round_trips = 0;
  for (int trial = 0; trial < 10; ++trial) {
    auto zt = helpers::random_combination(zbasis, rng);
    REQUIRE(zt.has_value());
    OneCochainToDual z = OneCochainToDual::from_table(rl, *zt);
    DualValuedTwoForm dz = equivalence_coboundary(rl, z);
    if (!is_supercyclic(rl, dz) || !is_two_cocycle_dual(rl, dz)) continue;
    CochainTable t2 = w1.table;
    t2 += dz.table;
    DualValuedTwoForm w2 = DualValuedTwoForm::from_table(rl, t2);
    auto found = decide_equivalence(rl, w1, w2);
    REQUIRE(found.has_value());
    // the witness reproduces the difference exactly
    DualValuedTwoForm check = equivalence_coboundary(rl, *found);
    CHECK((w1.table - w2.table) == check.table);
    // its symmetric part is an invariant form
    CHECK(form_properties(rl, symmetric_part_form(rl, *found)).invariant);
    ++round_trips;
  }
  CHECK(round_trips == 10);
}

TEST_CASE("inequivalent forms are refused and confirmed by a rank oracle") {
  // on a2 the bracket vanishes, so coboundaries vanish and distinct
  // supercyclic forms are inequivalent
  HomLieSuperalgebra a2 = helpers::fixture("a2").algebra;
  auto basis = supercyclic_cocycle_basis(a2);
  REQUIRE(!basis.empty());
  DualValuedTwoForm w1 = basis[0];
  CHECK(!decide_equivalence(a2, w1, DualValuedTwoForm::zero(a2)).has_value());
  // independent oracle: the difference must lie in the span of the
  // coboundaries of the even one-cochain basis; here that span is zero
  Representation pi = coadjoint(a2);
  for (const CochainTable& zt : cochain_basis(a2, pi, 1, Parity::Even, false))
    CHECK(equivalence_coboundary(a2, OneCochainToDual::from_table(a2, zt)).table.is_zero());
  CHECK(!w1.table.is_zero());
}

TEST_CASE("isometric equivalence demands a trace-free witness") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  auto basis = supercyclic_cocycle_basis(rl);
  DualValuedTwoForm w1 = basis[0];
  auto z = decide_isometric_equivalence(rl, w1, DualValuedTwoForm::zero(rl));
  REQUIRE(z.has_value());
  CHECK(symmetric_part_form(rl, *z).gram().isZero());
}

TEST_CASE("symmetric part form matches its definition") {
  HomLieSuperalgebra rl = helpers::fixture("rlambda2").algebra;
  Representation pi = coadjoint(rl);
  auto zbasis = cochain_basis(rl, pi, 1, Parity::Even, false);
  helpers::Rng rng(43);
  auto zt = helpers::random_combination(zbasis, rng);
  REQUIRE(zt.has_value());
  OneCochainToDual z = OneCochainToDual::from_table(rl, *zt);
  Mat g = symmetric_part_form(rl, z).gram();
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j) {
      int s = koszul_pair_sign(rl.basis().parity(i), rl.basis().parity(j));
      CHECK(g(i, j) == (z.eval(i)(j) + Rat(s) * z.eval(j)(i)) / 2);
    }
}
