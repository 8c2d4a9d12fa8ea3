#ifndef HOMSUPER_TSTAR_HPP
#define HOMSUPER_TSTAR_HPP

#include "homsuper/cohomology.hpp"

namespace homsuper {

/// Supersymmetry sign: Plus means f(x,y) = (-1)^{|x||y|} f(y,x) (the
/// convention under which the hyperbolic form below is supersymmetric);
/// Minus is the opposite sign, kept selectable.
enum class SupersymmetryConvention { Plus, Minus };

/// A bilinear form on the algebra, by its Gram matrix gram(i,j) = f(e_i,e_j).
class BilinearForm {
 public:
  explicit BilinearForm(Mat gram);
  const Mat& gram() const { return gram_; }
  Eigen::Index dim() const { return gram_.rows(); }
  Rat eval(const Vec& x, const Vec& y) const { return (x.transpose() * gram_ * y)(0, 0); }

 private:
  Mat gram_;
};

struct FormProperties {
  bool nondegenerate = false;
  bool invariant = false;
  bool supersymmetric = false;
  bool superconsistent = false;
  bool all() const { return nondegenerate && invariant && supersymmetric && superconsistent; }
};
FormProperties form_properties(const HomLieSuperalgebra& L, const BilinearForm& B,
                               SupersymmetryConvention conv = SupersymmetryConvention::Plus);

/// S <= S-perp, i.e. the form vanishes on S x S.
bool is_isotropic(const BilinearForm& B, const Subspace& S);

/// An even super-skew bilinear map L x L -> L* held as a degree-2 table
/// whose values are dual-basis coordinate vectors.
struct DualValuedTwoForm {
  CochainTable table;
  static DualValuedTwoForm zero(const HomLieSuperalgebra& L);
  static DualValuedTwoForm from_table(const HomLieSuperalgebra& L, CochainTable t);
  Vec eval(Eigen::Index i, Eigen::Index j) const {
    return table.eval({static_cast<int>(i), static_cast<int>(j)});
  }
};

/// An even linear map L -> L*, z[i] = coordinates of z(e_i) in the dual basis.
struct OneCochainToDual {
  CochainTable table;
  static OneCochainToDual zero(const HomLieSuperalgebra& L);
  static OneCochainToDual from_table(const HomLieSuperalgebra& L, CochainTable t);
  Vec eval(Eigen::Index i) const { return table.eval({static_cast<int>(i)}); }
};

/// omega(x,y)(z) = (-1)^{|x|(|y|+|z|)} omega(y,z)(x) over all basis triples.
bool is_supercyclic(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega);

/// The dual-valued 2-cocycle identity
///   0 = pi(a x) w(y,z) - (-1)^{|x||y|} pi(a y) w(x,z)
///       + (-1)^{(|x|+|y|)|z|} pi(a z) w(x,y)
///       + w(a x,[y,z]) + (-1)^{|y||z|} w([x,z],a y) - w([x,y],a z)
/// checked directly over all basis triples; the coadjoint precondition
/// propagates.
bool is_two_cocycle_dual(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega);

/// An algebra carrying a nondegenerate invariant supersymmetric
/// superconsistent form; all four properties are validated at construction.
class QuadraticHomLieSuperalgebra {
 public:
  QuadraticHomLieSuperalgebra(HomLieSuperalgebra algebra, BilinearForm form,
                              SupersymmetryConvention conv = SupersymmetryConvention::Plus);

  const HomLieSuperalgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  Eigen::Index dim() const { return algebra_.dim(); }

 private:
  HomLieSuperalgebra algebra_;
  BilinearForm form_;
};

/// The raw extension data on L + L*: bracket
///   [x+f, y+g] = [x,y] + w(x,y) + pi(x)g - (-1)^{|x||y|} pi(y)f,
/// twist diag(alpha, alpha-transpose), hyperbolic form. No hypothesis checks.
struct ExtensionData {
  HomLieSuperalgebra algebra;
  BilinearForm form;
};
ExtensionData t_star_extension_data(const HomLieSuperalgebra& L, const DualValuedTwoForm& omega);

/// Checks the supercyclicity and cocycle hypotheses (throwing a message
/// naming the broken one), builds the extension, and validates it as a
/// quadratic algebra.
QuadraticHomLieSuperalgebra t_star_extend(const HomLieSuperalgebra& L,
                                          const DualValuedTwoForm& omega);

/// For an isotropic half-dimension subspace of a quadratic algebra, being a
/// bracket ideal is equivalent to being abelian; both flags are computed
/// independently and a mismatch throws.
struct HalfDimIsotropicCheck {
  bool ideal = false;
  bool abelian = false;
};
HalfDimIsotropicCheck half_dim_isotropic_ideal_lemma_check(const QuadraticHomLieSuperalgebra& Lq,
                                                           const Subspace& I);

/// Reconstruction of a T*-extension presentation from an isotropic
/// half-dimension ideal: the quotient base, the recovered 2-form, the
/// isomorphism phi : L -> T*_w(base), and the extension it lands in.
struct RecognizedTStar {
  HomLieSuperalgebra base;
  DualValuedTwoForm omega;
  GradedMap phi;
  QuadraticHomLieSuperalgebra extension;
};
RecognizedTStar recognize_t_star(const QuadraticHomLieSuperalgebra& Lq, const Subspace& I);

/// The right-hand side of the equivalence condition:
///   (x,y) -> pi(x)z(y) - (-1)^{|x||y|} pi(y)z(x) - z([x,y]).
DualValuedTwoForm equivalence_coboundary(const HomLieSuperalgebra& L, const OneCochainToDual& z);

/// Some even z with omega1 - omega2 = equivalence_coboundary(z), or nullopt.
/// Both forms must be supercyclic cocycles. On success the induced map
/// x+f -> x+z(x)+f is re-verified as an isomorphism of the two extensions.
std::optional<OneCochainToDual> decide_equivalence(const HomLieSuperalgebra& L,
                                                   const DualValuedTwoForm& omega1,
                                                   const DualValuedTwoForm& omega2);

/// As decide_equivalence, with the extra linear constraints z_s = 0 (the
/// supersymmetric part of z vanishes) solved jointly.
std::optional<OneCochainToDual> decide_isometric_equivalence(const HomLieSuperalgebra& L,
                                                             const DualValuedTwoForm& omega1,
                                                             const DualValuedTwoForm& omega2);

/// gram(i,j) = (z(e_i)(e_j) + (-1)^{|e_i||e_j|} z(e_j)(e_i)) / 2.
BilinearForm symmetric_part_form(const HomLieSuperalgebra& L, const OneCochainToDual& z);

/// Basis of the solution space of {supercyclic and 2-cocycle} dual-valued
/// even 2-forms, by solving the joint linear system.
std::vector<DualValuedTwoForm> supercyclic_cocycle_basis(const HomLieSuperalgebra& L);

}  // namespace homsuper

#endif
