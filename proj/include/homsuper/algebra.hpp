#ifndef HOMSUPER_ALGEBRA_HPP
#define HOMSUPER_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "homsuper/graded.hpp"

namespace homsuper {

/// A finite-dimensional hom-Lie superalgebra presented by structure
/// constants: [e_i, e_j] = sum_k c[i][j][k] e_k, plus the even twist alpha.
/// Structure constants are stored for all ordered pairs; validate() doubles
/// as an input linter (evenness, super-skew, hom-Jacobi, multiplicativity).
class HomLieSuperalgebra {
 public:
  /// ad[i] is the matrix of v -> [e_i, v], i.e. ad[i](k, j) = c[i][j][k].
  HomLieSuperalgebra(GradedBasis basis, std::vector<Mat> ad, GradedMap alpha);

  Eigen::Index dim() const { return basis_.dim(); }
  const GradedBasis& basis() const { return basis_; }
  const GradedMap& alpha() const { return alpha_; }
  const Mat& ad(Eigen::Index i) const { return ad_.at(static_cast<std::size_t>(i)); }
  Rat c(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return ad_.at(static_cast<std::size_t>(i))(k, j);
  }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of v -> [x, v].
  Mat ad_vector(const Vec& x) const;

 private:
  GradedBasis basis_;
  std::vector<Mat> ad_;
  GradedMap alpha_;
};

struct Violation {
  std::string identity;         // "even", "skew", "hom_jacobi", "multiplicative"
  std::vector<Eigen::Index> at; // basis indices of the violating tuple
  Vec defect;                   // nonzero defect vector
};

struct ValidationReport {
  bool even_bracket = true;
  bool skew = true;
  bool hom_jacobi = true;
  bool multiplicative = true;
  bool regular = false;
  std::vector<Violation> violations;
  bool algebra_ok() const { return even_bracket && skew && hom_jacobi; }
};

ValidationReport validate(const HomLieSuperalgebra& L);

/// Block bracket and block twist on the concatenated bases. Colliding
/// names on the right get a ' suffix.
HomLieSuperalgebra direct_sum(const HomLieSuperalgebra& L, const HomLieSuperalgebra& G);

/// phi[x,y]_L = [phi x, phi y]_G and phi o alpha = beta o phi.
bool is_morphism(const GradedMap& phi, const HomLieSuperalgebra& L, const HomLieSuperalgebra& G);

/// Closure of the graph {(u, phi u)} inside direct_sum(L, G) under the
/// block bracket and block twist.
bool graph_subalgebra_check(const GradedMap& phi, const HomLieSuperalgebra& L,
                            const HomLieSuperalgebra& G);

Subspace center(const HomLieSuperalgebra& L);

bool is_graded_subspace(const HomLieSuperalgebra& L, const Subspace& S);
/// [S, S] <= S and alpha(S) <= S. Throws on non-graded S.
bool is_subalgebra(const HomLieSuperalgebra& L, const Subspace& S);
/// [S, L] <= S only (the bracket condition alone).
bool is_bracket_ideal(const HomLieSuperalgebra& L, const Subspace& S);
/// [S, L] <= S and alpha(S) <= S.
bool is_ideal(const HomLieSuperalgebra& L, const Subspace& S);

/// Span of all brackets of spanning vectors of S with those of T.
Subspace subspace_bracket(const HomLieSuperalgebra& L, const Subspace& S, const Subspace& T);

struct Quotient {
  HomLieSuperalgebra algebra;
  GradedMap projection;  // L -> algebra, even and surjective
};
/// Quotient by an ideal, represented on a greedy standard-basis complement.
/// `preferred_order`, when given, reorders the candidate standard vectors.
Quotient quotient(const HomLieSuperalgebra& L, const Subspace& I,
                  const std::vector<Eigen::Index>& preferred_order = {});

/// L^(0) = L, L^(n+1) = [L^(n), L^(n)], emitted until stabilization.
std::vector<Subspace> derived_series(const HomLieSuperalgebra& L);
/// L^0 = L, L^(n+1) = [L^n, L].
std::vector<Subspace> lower_central_series(const HomLieSuperalgebra& L);
/// C_0 = 0, C_(n+1) = { a : [a, L] <= C_n }.
std::vector<Subspace> upper_central_series(const HomLieSuperalgebra& L);

std::optional<int> solvable_length(const HomLieSuperalgebra& L);
std::optional<int> nilpotent_length(const HomLieSuperalgebra& L);

}  // namespace homsuper

#endif
