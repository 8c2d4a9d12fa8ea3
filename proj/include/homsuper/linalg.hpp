#ifndef HOMSUPER_LINALG_HPP
#define HOMSUPER_LINALG_HPP

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "homsuper/rational.hpp"

namespace homsuper {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Row-reduced echelon form with the list of pivot columns.
struct Rref {
  Mat reduced;
  std::vector<Eigen::Index> pivots;
};

/// Exact Gauss-Jordan elimination; pivots are the first nonzero entries
/// scanned top-down, so the result is deterministic.
Rref rref(Mat m);

Eigen::Index rank(const Mat& m);

/// Basis of { v : m v = 0 }, one vector per free column, ascending.
std::vector<Vec> kernel_basis(const Mat& m);

/// One particular solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// m^{-1} when m is square and full rank, nullopt when singular.
/// Throws std::invalid_argument on non-square input.
std::optional<Mat> inverse(const Mat& m);

/// A subspace of Q^ambient held as a canonical (column-echelon) basis,
/// so equal subspaces compare equal as matrices.
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient) : basis_(ambient, 0) {}
  /// Canonicalizes the span of the given columns.
  static Subspace span(const Mat& columns);
  static Subspace zero(Eigen::Index ambient) { return Subspace(ambient); }
  static Subspace full(Eigen::Index ambient);

  Eigen::Index ambient() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_.rows() == b.basis_.rows() && a.basis_.cols() == b.basis_.cols() &&
           a.basis_ == b.basis_;
  }

 private:
  Mat basis_;
};

/// d x n matrix projecting onto a greedy standard-basis complement of S,
/// along S (rows index the chosen complement vectors, ascending). The
/// second member lists the chosen standard-basis indices.
struct ComplementProjection {
  Mat projection;
  std::vector<Eigen::Index> complement_indices;
};
ComplementProjection complement_projection(const Subspace& s);

}  // namespace homsuper

#endif
