#include "homsuper/nijenhuis.hpp"

#include <stdexcept>

namespace homsuper {

namespace {

void require_one_cochain(const HomLieSuperalgebra& L, const GradedMap& N) {
  if (!(N.source() == L.basis()) || !(N.target() == L.basis()))
    throw std::invalid_argument("operator is not an endomorphism of the algebra");
  if (N.matrix() * L.alpha().matrix() != L.alpha().matrix() * N.matrix())
    throw std::invalid_argument("operator does not commute with alpha");
}

CochainTable even_pair_table(const HomLieSuperalgebra& L) {
  return CochainTable(2, L.basis().parities(), L.basis().parities(), Parity::Even);
}

}  // namespace

CochainTable deformed_bracket(const HomLieSuperalgebra& L, const GradedMap& N) {
  require_one_cochain(L, N);
  const Mat& M = N.matrix();
  CochainTable out = even_pair_table(L);
  for (const auto& t : canonical_tuples(L.basis().parities(), 2)) {
    Vec br = L.ad(t[0]).col(t[1]);
    Vec val = L.bracket(M.col(t[0]), Vec::Unit(L.dim(), t[1])) +
              L.bracket(Vec::Unit(L.dim(), t[0]), M.col(t[1])) - M * br;
    out.set(t, val);
  }
  return out;
}

NijenhuisCheck is_hom_nijenhuis(const HomLieSuperalgebra& L, const GradedMap& N) {
  CochainTable bn = deformed_bracket(L, N);
  const Mat& M = N.matrix();
  NijenhuisCheck res;
  for (Eigen::Index i = 0; i < L.dim(); ++i)
    for (Eigen::Index j = 0; j < L.dim(); ++j) {
      Vec defect = L.bracket(M.col(i), M.col(j)) -
                   M * bn.eval({static_cast<int>(i), static_cast<int>(j)});
      if (!defect.isZero()) {
        res.ok = false;
        res.i = i;
        res.j = j;
        res.defect = std::move(defect);
        return res;
      }
    }
  return res;
}

DeformationFamily make_deformation(const HomLieSuperalgebra& L, const CochainTable& psi) {
  ValidationReport rep = validate(L);
  if (!rep.regular) throw std::invalid_argument("make_deformation: algebra is not regular");
  if (psi.degree() != 2 || psi.theta() != Parity::Even ||
      psi.arg_parities() != L.basis().parities() ||
      psi.module_parities() != L.basis().parities())
    throw std::invalid_argument("make_deformation: psi must be an even 2-cochain into L");
  const Mat& A = L.alpha().matrix();
  for (const auto& t : canonical_tuples(L.basis().parities(), 2))
    if (A * psi.eval(t) != psi.eval_vectors({A.col(t[0]), A.col(t[1])}))
      throw std::invalid_argument("make_deformation: psi does not commute with alpha");

  std::vector<Mat> ad_psi;
  for (Eigen::Index i = 0; i < L.dim(); ++i) {
    Mat m(L.dim(), L.dim());
    for (Eigen::Index j = 0; j < L.dim(); ++j)
      m.col(j) = psi.eval({static_cast<int>(i), static_cast<int>(j)});
    ad_psi.push_back(std::move(m));
  }
  HomLieSuperalgebra Lpsi(L.basis(), std::move(ad_psi), L.alpha());

  DeformationFamily fam{L, psi, false, false, false};
  fam.jacobi_psi = validate(Lpsi).hom_jacobi;
  fam.closed = coboundary_ds(L, -1, psi).is_zero();
  // Coefficientwise in t: alpha must be a morphism of both [.,.] and psi.
  fam.multiplicative_t = rep.multiplicative;  // psi alpha-commuting checked above
  return fam;
}

PolyBracketDefect check_trivial_deformation(const HomLieSuperalgebra& L, const GradedMap& N) {
  NijenhuisCheck chk = is_hom_nijenhuis(L, N);
  if (!chk.ok) {
    std::string msg = "check_trivial_deformation: operator fails the Nijenhuis identity at (" +
                      L.basis().name(chk.i) + ", " + L.basis().name(chk.j) + "), defect (";
    for (Eigen::Index r = 0; r < chk.defect.size(); ++r)
      msg += (r ? ", " : "") + format_scalar(chk.defect(r));
    throw std::invalid_argument(msg + ")");
  }
  CochainTable bn = deformed_bracket(L, N);
  const Mat& M = N.matrix();
  PolyBracketDefect out{even_pair_table(L), even_pair_table(L), even_pair_table(L)};
  for (const auto& t : canonical_tuples(L.basis().parities(), 2)) {
    Vec u = Vec::Unit(L.dim(), t[0]), v = Vec::Unit(L.dim(), t[1]);
    Vec br = L.ad(t[0]).col(t[1]);
    Vec psi_uv = bn.eval(t);
    // T_t[u,v]_t = [u,v] + t([u,v]_N + N[u,v]) + t^2 N[u,v]_N
    // [T_t u, T_t v] = [u,v] + t([Nu,v] + [u,Nv]) + t^2 [Nu,Nv]
    out.c0.set(t, Vec(Vec::Zero(L.dim())));
    out.c1.set(t, Vec(psi_uv + M * br - L.bracket(M.col(t[0]), v) - L.bracket(u, M.col(t[1]))));
    out.c2.set(t, Vec(M * psi_uv - L.bracket(M.col(t[0]), M.col(t[1]))));
  }
  return out;
}

}  // namespace homsuper
