#include "homsuper/tstar.hpp"

#include <stdexcept>

namespace homsuper {

namespace {

CochainTable two_form_table(const GradedBasis& b) {
  return CochainTable(2, b.parities(), b.parities(), Parity::Even);
}

CochainTable one_cochain_table(const GradedBasis& b) {
  return CochainTable(1, b.parities(), b.parities(), Parity::Even);
}

/// Stacked defects of the supercyclicity identity over all ordered triples.
Vec supercyclic_defects(const HomLieSuperalgebra& L, const CochainTable& w) {
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  Vec out = Vec::Zero(n * n * n);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int sg = koszul_pair_sign(b.parity(i), b.parity(j) + b.parity(k));
        out(row++) = w.eval({i, j})(k) - Rat(sg) * w.eval({j, k})(i);
      }
  return out;
}

/// Stacked defects of the dual-valued 2-cocycle identity over all triples.
Vec cocycle_defects(const HomLieSuperalgebra& L, const Representation& pi,
                    const CochainTable& w) {
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  const Mat& A = L.alpha().matrix();
  Vec out = Vec::Zero(n * n * n * n);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec t = pi.rho_vector(A.col(i)) * w.eval({j, k}) -
                Rat(koszul_pair_sign(b.parity(i), b.parity(j))) * pi.rho_vector(A.col(j)) *
                    w.eval({i, k}) +
                Rat(koszul_pair_sign(b.parity(i) + b.parity(j), b.parity(k))) *
                    pi.rho_vector(A.col(k)) * w.eval({i, j}) +
                w.eval_vectors({A.col(i), L.ad(j).col(k)}) +
                Rat(koszul_pair_sign(b.parity(j), b.parity(k))) *
                    w.eval_vectors({L.ad(i).col(k), A.col(j)}) -
                w.eval_vectors({L.ad(i).col(j), A.col(k)});
        out.segment(row, n) = t;
        row += n;
      }
  return out;
}

}  // namespace

BilinearForm::BilinearForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("BilinearForm: non-square gram");
}

FormProperties form_properties(const HomLieSuperalgebra& L, const BilinearForm& B,
                               SupersymmetryConvention conv) {
  const Eigen::Index n = L.dim();
  if (B.dim() != n) throw std::invalid_argument("form_properties: dimension mismatch");
  const Mat& G = B.gram();
  const GradedBasis& b = L.basis();
  FormProperties out;
  out.nondegenerate = rank(G) == n;
  out.superconsistent = true;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (G(i, j) != 0 && b.parity(i) != b.parity(j)) out.superconsistent = false;
  out.supersymmetric = true;
  int conv_sign = conv == SupersymmetryConvention::Plus ? 1 : -1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (G(j, i) != Rat(conv_sign * koszul_pair_sign(b.parity(i), b.parity(j))) * G(i, j))
        out.supersymmetric = false;
  out.invariant = true;
  for (Eigen::Index i = 0; i < n && out.invariant; ++i)
    for (Eigen::Index j = 0; j < n && out.invariant; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if ((L.ad(i).col(j).transpose() * G)(0, k) != (G * L.ad(j).col(k))(i, 0)) {
          out.invariant = false;
          break;
        }
  return out;
}

bool is_isotropic(const BilinearForm& B, const Subspace& S) {
  if (S.ambient() != B.dim()) throw std::invalid_argument("is_isotropic: dimension mismatch");
  return Mat(S.basis().transpose() * B.gram() * S.basis()).isZero();
}

DualValuedTwoForm DualValuedTwoForm::zero(const HomLieSuperalgebra& L) {
  return DualValuedTwoForm{two_form_table(L.basis())};
}

DualValuedTwoForm DualValuedTwoForm::from_table(const HomLieSuperalgebra& L, CochainTable t) {
  if (t.degree() != 2 || t.theta() != Parity::Even ||
      t.arg_parities() != L.basis().parities() || t.module_parities() != L.basis().parities())
    throw std::invalid_argument("DualValuedTwoForm: table must be an even 2-cochain into L*");
  return DualValuedTwoForm{std::move(t)};
}

OneCochainToDual OneCochainToDual::zero(const HomLieSuperalgebra& L) {
  return OneCochainToDual{one_cochain_table(L.basis())};
}

OneCochainToDual OneCochainToDual::from_table(const HomLieSuperalgebra& L, CochainTable t) {
  if (t.degree() != 1 || t.theta() != Parity::Even ||
      t.arg_parities() != L.basis().parities() || t.module_parities() != L.basis().parities())
    throw std::invalid_argument("OneCochainToDual: table must be an even 1-cochain into L*");
  return OneCochainToDual{std::move(t)};
}

bool is_supercyclic(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega) {
  return supercyclic_defects(L, omega.table).isZero();
}

bool is_two_cocycle_dual(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega) {
  Representation pi = coadjoint(L);
  return cocycle_defects(L, pi, omega.table).isZero();
}

QuadraticHomLieSuperalgebra::QuadraticHomLieSuperalgebra(HomLieSuperalgebra algebra,
                                                         BilinearForm form,
                                                         SupersymmetryConvention conv)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
  ValidationReport rep = validate(algebra_);
  if (!rep.algebra_ok()) {
    std::string which = !rep.even_bracket ? "even bracket" : (!rep.skew ? "super-skew" : "Jacobi");
    throw std::invalid_argument("QuadraticHomLieSuperalgebra: underlying algebra fails the " +
                                which + " axiom");
  }
  FormProperties p = form_properties(algebra_, form_, conv);
  if (!p.all()) {
    std::string which = !p.nondegenerate    ? "nondegenerate"
                        : !p.invariant      ? "invariant"
                        : !p.supersymmetric ? "supersymmetric"
                                            : "superconsistent";
    throw std::invalid_argument("QuadraticHomLieSuperalgebra: form is not " + which);
  }
}

ExtensionData t_star_extension_data(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega) {
  const Eigen::Index n = L.dim();
  Representation pi = coadjoint(L);
  const GradedBasis& b = L.basis();
  GradedBasis dual = b.dual();

  std::vector<std::string> names = b.names();
  std::vector<Parity> parities = b.parities();
  for (Eigen::Index i = 0; i < n; ++i) {
    names.push_back(dual.name(i));
    parities.push_back(dual.parity(i));
  }
  GradedBasis ext(std::move(names), std::move(parities));

  std::vector<Mat> ad(static_cast<std::size_t>(2 * n), Mat::Zero(2 * n, 2 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Mat& m = ad[static_cast<std::size_t>(i)];
    m.block(0, 0, n, n) = L.ad(i);
    for (Eigen::Index j = 0; j < n; ++j) m.block(n, 0, n, n).col(j) = omega.eval(i, j);
    m.block(n, n, n, n) = pi.rho(i);
    Mat& md = ad[static_cast<std::size_t>(n + i)];
    for (Eigen::Index j = 0; j < n; ++j)
      md.block(n, 0, n, n).col(j) =
          -Rat(koszul_pair_sign(b.parity(i), b.parity(j))) * pi.rho(j).col(i);
  }

  Mat At = Mat::Zero(2 * n, 2 * n);
  At.block(0, 0, n, n) = L.alpha().matrix();
  At.block(n, n, n, n) = L.alpha().matrix().transpose();

  Mat Q = Mat::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Q(i, n + i) = b.parity(i) == Parity::Odd ? Rat(-1) : Rat(1);
    Q(n + i, i) = 1;
  }
  return ExtensionData{HomLieSuperalgebra(ext, std::move(ad), GradedMap(std::move(At), ext, ext)),
                       BilinearForm(std::move(Q))};
}

QuadraticHomLieSuperalgebra t_star_extend(const HomLieSuperalgebra& L,
                                          const DualValuedTwoForm& omega) {
  if (!is_supercyclic(L, omega))
    throw std::invalid_argument("t_star_extend: omega is not supercyclic");
  if (!is_two_cocycle_dual(L, omega))
    throw std::invalid_argument("t_star_extend: omega is not a 2-cocycle");
  ExtensionData d = t_star_extension_data(L, omega);
  return QuadraticHomLieSuperalgebra(std::move(d.algebra), std::move(d.form));
}

HalfDimIsotropicCheck half_dim_isotropic_ideal_lemma_check(const QuadraticHomLieSuperalgebra& Lq,
                                                           const Subspace& I) {
  const Eigen::Index n = Lq.dim();
  if (n % 2 != 0) throw std::invalid_argument("half-dim check: odd-dimensional algebra");
  if (I.dim() != n / 2) throw std::invalid_argument("half-dim check: subspace is not half-dim");
  if (!is_isotropic(Lq.form(), I))
    throw std::invalid_argument("half-dim check: subspace is not isotropic");
  HalfDimIsotropicCheck out;
  out.ideal = is_bracket_ideal(Lq.algebra(), I);
  out.abelian = subspace_bracket(Lq.algebra(), I, I).dim() == 0;
  if (out.ideal != out.abelian)
    throw std::logic_error(
        "half-dim check: ideal and abelian flags disagree on an isotropic half-dim subspace");
  return out;
}

RecognizedTStar recognize_t_star(const QuadraticHomLieSuperalgebra& Lq, const Subspace& I) {
  const HomLieSuperalgebra& L = Lq.algebra();
  const Mat& G = Lq.form().gram();
  const Eigen::Index n = L.dim();
  if (n % 2 != 0) throw std::invalid_argument("recognize_t_star: odd-dimensional algebra");
  const Eigen::Index d = n / 2;
  if (I.dim() != d) throw std::invalid_argument("recognize_t_star: ideal is not half-dimensional");
  if (!is_isotropic(Lq.form(), I))
    throw std::invalid_argument("recognize_t_star: ideal is not isotropic");
  if (!is_ideal(L, I))
    throw std::invalid_argument("recognize_t_star: subspace is not an alpha-stable ideal");

  Quotient qt = quotient(L, I);
  const Mat& proj = qt.projection.matrix();

  // Standard-basis graded complement W of I.
  ComplementProjection cp = complement_projection(I);
  Mat W = Mat::Zero(n, d);
  for (Eigen::Index a = 0; a < d; ++a) W(cp.complement_indices[static_cast<std::size_t>(a)], a) = 1;

  // Isotropic correction h: the pairing q(i_r, w_b) is nondegenerate because
  // I equals its own orthogonal; choose h_a in I with q(h_a, w_b) =
  // -q(w_a, w_b)/2, making B0 = {w_a + h_a} isotropic and graded.
  const Mat& Ib = I.basis();
  Mat K = Ib.transpose() * G * W;
  Mat Gww = W.transpose() * G * W;
  auto KtInv = inverse(Mat(K.transpose()));
  if (!KtInv) throw std::logic_error("recognize_t_star: degenerate pairing between I and W");
  Mat B0 = W + Ib * Mat(*KtInv * (Rat(-1, 2) * Gww.transpose()));
  if (!Mat(B0.transpose() * G * B0).isZero())
    throw std::logic_error("recognize_t_star: complement failed to be isotropic");

  Mat Mfull(n, n);
  Mfull.leftCols(d) = B0;
  Mfull.rightCols(d) = Ib;
  auto Minv = inverse(Mfull);
  if (!Minv) throw std::logic_error("recognize_t_star: B0 does not complement I");
  Mat P1 = Ib * Minv->bottomRows(d);  // projection onto I along B0

  // Preimages of the quotient basis, for evaluating functionals on cosets.
  Mat Xk(n, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    auto x = solve(proj, Vec(Vec::Unit(d, k)));
    if (!x) throw std::logic_error("recognize_t_star: quotient projection not surjective");
    Xk.col(k) = *x;
  }
  Mat Dualize = Xk.transpose() * G.transpose();  // i in I -> coordinates of q(i, .) on B

  // Lift each quotient basis vector into B0.
  auto Cinv = inverse(Mat(proj * B0));
  if (!Cinv) throw std::logic_error("recognize_t_star: B0 does not project onto the quotient");
  Mat V = B0 * *Cinv;

  CochainTable wt = two_form_table(qt.algebra.basis());
  for (const auto& t : canonical_tuples(qt.algebra.basis().parities(), 2))
    wt.set(t, Vec(Dualize * (P1 * L.bracket(V.col(t[0]), V.col(t[1])))));
  DualValuedTwoForm omega = DualValuedTwoForm::from_table(qt.algebra, std::move(wt));

  QuadraticHomLieSuperalgebra ext = t_star_extend(qt.algebra, omega);

  Mat Phi(n, n);
  Phi.topRows(d) = proj;
  Phi.bottomRows(d) = Dualize * P1;
  GradedMap phi(std::move(Phi), L.basis(), ext.algebra().basis());

  return RecognizedTStar{qt.algebra, std::move(omega), std::move(phi), std::move(ext)};
}

DualValuedTwoForm equivalence_coboundary(const HomLieSuperalgebra& L, const OneCochainToDual& z) {
  Representation pi = coadjoint(L);
  const GradedBasis& b = L.basis();
  CochainTable out = two_form_table(b);
  for (const auto& t : canonical_tuples(b.parities(), 2)) {
    Vec val = pi.rho(t[0]) * z.eval(t[1]) -
              Rat(koszul_pair_sign(b.parity(t[0]), b.parity(t[1]))) * pi.rho(t[1]) * z.eval(t[0]) -
              z.table.eval_vectors({L.ad(t[0]).col(t[1])});
    out.set(t, val);
  }
  return DualValuedTwoForm::from_table(L, std::move(out));
}

namespace {

std::optional<OneCochainToDual> solve_equivalence(const HomLieSuperalgebra& L,
                                                  const DualValuedTwoForm& w1,
                                                  const DualValuedTwoForm& w2, bool isometric) {
  for (const DualValuedTwoForm* w : {&w1, &w2}) {
    if (!is_supercyclic(L, *w))
      throw std::invalid_argument("decide_equivalence: a form is not supercyclic");
    if (!is_two_cocycle_dual(L, *w))
      throw std::invalid_argument("decide_equivalence: a form is not a 2-cocycle");
  }
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  Representation pi = coadjoint(L);

  // Unknowns: u(i,j) = z(e_i)(e_j) over parity-matched pairs (z is even).
  Eigen::Index un = 0;
  std::vector<Eigen::Index> slot_of(static_cast<std::size_t>(n * n), -1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (b.parity(i) == b.parity(j)) slot_of[static_cast<std::size_t>(i * n + j)] = un++;
  auto slot = [&](Eigen::Index i, Eigen::Index j) {
    return slot_of[static_cast<std::size_t>(i * n + j)];
  };

  auto pairs = canonical_tuples(b.parities(), 2);
  Eigen::Index rows = static_cast<Eigen::Index>(pairs.size()) * n + (isometric ? n * n : 0);
  Mat M = Mat::Zero(rows, un);
  Vec rhs = Vec::Zero(rows);
  Eigen::Index row = 0;
  for (const auto& t : pairs) {
    Eigen::Index a = t[0], c = t[1];
    int sg = koszul_pair_sign(b.parity(a), b.parity(c));
    Vec diff = w1.eval(a, c) - w2.eval(a, c);
    Vec br = L.ad(a).col(c);
    for (Eigen::Index r = 0; r < n; ++r) {
      // pi(e_a) z(e_c) - (-1)^{|a||c|} pi(e_c) z(e_a) - z([e_a,e_c]), coord r
      for (Eigen::Index j = 0; j < n; ++j) {
        if (b.parity(c) == b.parity(j)) M(row, slot(c, j)) += pi.rho(a)(r, j);
        if (b.parity(a) == b.parity(j)) M(row, slot(a, j)) -= Rat(sg) * pi.rho(c)(r, j);
      }
      for (Eigen::Index i = 0; i < n; ++i)
        if (br(i) != 0 && b.parity(i) == b.parity(r)) M(row, slot(i, r)) -= br(i);
      rhs(row) = diff(r);
      ++row;
    }
  }
  if (isometric) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        if (b.parity(i) == b.parity(j)) {
          M(row, slot(i, j)) += 1;
          M(row, slot(j, i)) += koszul_pair_sign(b.parity(i), b.parity(j));
        }
        ++row;
      }
  }

  auto sol = solve(M, rhs);
  if (!sol) return std::nullopt;

  CochainTable zt = one_cochain_table(b);
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec v = Vec::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j)
      if (b.parity(i) == b.parity(j)) v(j) = (*sol)(slot(i, j));
    zt.set({static_cast<int>(i)}, v);
  }
  OneCochainToDual z{std::move(zt)};

  // Re-verify: x+f -> x+z(x)+f must be an isomorphism of the extensions.
  ExtensionData e1 = t_star_extension_data(L, w1), e2 = t_star_extension_data(L, w2);
  Mat Phi = Mat::Identity(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) Phi.block(n, 0, n, n).col(i) = z.eval(i);
  GradedMap phi(std::move(Phi), e1.algebra.basis(), e2.algebra.basis());
  if (!is_morphism(phi, e1.algebra, e2.algebra))
    throw std::logic_error("decide_equivalence: solution does not induce an isomorphism");
  return z;
}

}  // namespace

std::optional<OneCochainToDual> decide_equivalence(const HomLieSuperalgebra& L,
                                                   const DualValuedTwoForm& omega1,
                                                   const DualValuedTwoForm& omega2) {
  return solve_equivalence(L, omega1, omega2, false);
}

std::optional<OneCochainToDual> decide_isometric_equivalence(const HomLieSuperalgebra& L,
                                                             const DualValuedTwoForm& omega1,
                                                             const DualValuedTwoForm& omega2) {
  return solve_equivalence(L, omega1, omega2, true);
}

BilinearForm symmetric_part_form(const HomLieSuperalgebra& L, const OneCochainToDual& z) {
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  Mat gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gram(i, j) = (z.eval(i)(j) +
                    Rat(koszul_pair_sign(b.parity(i), b.parity(j))) * z.eval(j)(i)) /
                   Rat(2);
  return BilinearForm(std::move(gram));
}

std::vector<DualValuedTwoForm> supercyclic_cocycle_basis(const HomLieSuperalgebra& L) {
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  Representation pi = coadjoint(L);

  // Free slots: (canonical pair, dual coordinate of matching parity).
  auto pairs = canonical_tuples(b.parities(), 2);
  std::vector<CochainTable> units;
  for (const auto& t : pairs) {
    Parity want = b.parity(t[0]) + b.parity(t[1]);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (b.parity(r) != want) continue;
      CochainTable u = two_form_table(b);
      u.set(t, Vec(Vec::Unit(n, r)));
      units.push_back(std::move(u));
    }
  }
  if (units.empty()) return {};

  Eigen::Index drows = n * n * n + n * n * n * n;
  Mat M(drows, static_cast<Eigen::Index>(units.size()));
  for (std::size_t c = 0; c < units.size(); ++c) {
    Vec col(drows);
    col.head(n * n * n) = supercyclic_defects(L, units[c]);
    col.tail(n * n * n * n) = cocycle_defects(L, pi, units[c]);
    M.col(static_cast<Eigen::Index>(c)) = col;
  }
  std::vector<DualValuedTwoForm> out;
  for (const Vec& k : kernel_basis(M)) {
    CochainTable w = two_form_table(b);
    for (std::size_t c = 0; c < units.size(); ++c)
      if (k(static_cast<Eigen::Index>(c)) != 0) {
        CochainTable scaled = units[c];
        scaled *= k(static_cast<Eigen::Index>(c));
        w += scaled;
      }
    out.push_back(DualValuedTwoForm{std::move(w)});
  }
  return out;
}

}  // namespace homsuper
