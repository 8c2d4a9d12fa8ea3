#ifndef HOMSUPER_NIJENHUIS_HPP
#define HOMSUPER_NIJENHUIS_HPP

#include "homsuper/cohomology.hpp"

namespace homsuper {

/// The deformed bracket [u,v]_N = [Nu,v] + [u,Nv] - N[u,v] as an even
/// degree-2 table into L. Requires N even and alpha-commuting.
CochainTable deformed_bracket(const HomLieSuperalgebra& L, const GradedMap& N);

struct NijenhuisCheck {
  bool ok = true;
  Eigen::Index i = -1, j = -1;  // first failing basis pair
  Vec defect;                   // [Ne_i, Ne_j] - N([e_i, e_j]_N)
};
/// Whether [Nu, Nv] = N[u,v]_N holds on all basis pairs.
NijenhuisCheck is_hom_nijenhuis(const HomLieSuperalgebra& L, const GradedMap& N);

/// One-parameter bracket family [u,v]_t = [u,v] + t psi(u,v). Valid as a
/// deformation iff psi satisfies the twisted Jacobi identity on its own
/// (jacobi_psi) and is closed for the alpha^{-1}-adjoint coboundary.
struct DeformationFamily {
  HomLieSuperalgebra algebra;
  CochainTable psi;
  bool jacobi_psi = false;
  bool closed = false;
  bool multiplicative_t = false;  // alpha is a morphism of [.,.]_t for every t
  bool valid() const { return jacobi_psi && closed; }
};
/// Requires a regular algebra and an even, alpha-commuting psi.
DeformationFamily make_deformation(const HomLieSuperalgebra& L, const CochainTable& psi);

/// Coefficients of T_t[u,v]_t - [T_t u, T_t v] as a polynomial in t, for
/// T_t = Id + tN and psi = [.,.]_N; all three tables must vanish.
struct PolyBracketDefect {
  CochainTable c0, c1, c2;
  bool all_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
};
/// Requires is_hom_nijenhuis to pass; throws with the defect pair otherwise.
PolyBracketDefect check_trivial_deformation(const HomLieSuperalgebra& L, const GradedMap& N);

}  // namespace homsuper

#endif
