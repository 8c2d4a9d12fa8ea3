#ifndef HOMSUPER_COHOMOLOGY_HPP
#define HOMSUPER_COHOMOLOGY_HPP

#include "homsuper/algebra.hpp"

namespace homsuper {

/// A coefficient module given concretely: one action matrix per algebra
/// basis vector (rho[i] shifts module parity by |e_i|) plus an even module
/// twist.
class Representation {
 public:
  Representation(const HomLieSuperalgebra& algebra, GradedBasis module, std::vector<Mat> rho,
                 Mat beta_tilde);

  const HomLieSuperalgebra& algebra() const { return algebra_; }
  const GradedBasis& module() const { return module_; }
  Eigen::Index module_dim() const { return module_.dim(); }
  const Mat& rho(Eigen::Index i) const { return rho_.at(static_cast<std::size_t>(i)); }
  const Mat& beta_tilde() const { return beta_tilde_; }

  /// Action of an arbitrary algebra vector.
  Mat rho_vector(const Vec& x) const;

 private:
  HomLieSuperalgebra algebra_;
  GradedBasis module_;
  std::vector<Mat> rho_;
  Mat beta_tilde_;
};

/// alpha^s-adjoint representation: u . v = [alpha^s(u), v], module twist
/// alpha. Requires multiplicativity; s < 0 additionally requires regularity.
Representation ad_s(const HomLieSuperalgebra& L, int s);

/// Coadjoint action pi(x)(f) = -(-1)^{|x||f|} f o ad(x) on the dual basis,
/// module twist f -> f o alpha. The representation identity
///   ad(x) ad(alpha y) - (-1)^{|x||y|} ad(y) ad(alpha x) = alpha ad([x,y])
/// is checked on all basis pairs; failure throws naming the pair.
Representation coadjoint(const HomLieSuperalgebra& L);

/// One-dimensional even module with zero action.
Representation trivial_representation(const HomLieSuperalgebra& L);

/// Basis of the degree-k, parity-theta super-alternating maps into the
/// module. With alpha_compatible, intersect with the exact solution space of
/// beta_tilde o f = f o alpha^{(x)k} (diagonal twist on arguments).
std::vector<CochainTable> cochain_basis(const HomLieSuperalgebra& L, const Representation& R,
                                        int k, Parity theta, bool alpha_compatible);

/// Whether beta_tilde o f = f o (alpha, ..., alpha) holds exactly.
bool is_alpha_compatible(const Representation& R, const CochainTable& f);

/// Coboundary of the alpha^s-adjoint complex on C^k_alpha(L; L); the action
/// term brackets with alpha^{k+s}(u_i). Requires f alpha-compatible and L
/// multiplicative; k+s < 0 requires regularity.
CochainTable coboundary_ds(const HomLieSuperalgebra& L, int s, const CochainTable& f);

/// Module-valued coboundary; the action term applies rho(alpha^{n+r-1}(x_i)).
CochainTable coboundary_delta(const HomLieSuperalgebra& L, const Representation& R, int r,
                              const CochainTable& f);

struct CohomologyResult {
  int k = 0;
  Eigen::Index dim_cochains = 0;  // alpha-compatible k-cochains
  Eigen::Index dim_cocycles = 0;
  Eigen::Index dim_coboundaries = 0;
  Eigen::Index dim_cohomology = 0;
  // per parity sector theta = 0, 1
  Eigen::Index sector_cochains[2] = {0, 0};
  Eigen::Index sector_cocycles[2] = {0, 0};
  Eigen::Index sector_coboundaries[2] = {0, 0};
  Eigen::Index sector_cohomology[2] = {0, 0};
};

/// Exact dims of the alpha^s-adjoint cohomology in degree k, summed over
/// both parity sectors with the per-sector breakdown retained.
CohomologyResult cohomology_dims(const HomLieSuperalgebra& L, int s, int k);

}  // namespace homsuper

#endif
