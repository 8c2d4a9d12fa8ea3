#include "homsuper/linalg.hpp"

#include <stdexcept>

namespace homsuper {

Rref rref(Mat m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Eigen::Index rank(const Mat& m) { return static_cast<Eigen::Index>(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = Vec::Zero(cols);
    v(free) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v(rr.pivots[i]) = -rr.reduced(static_cast<Eigen::Index>(i), free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  aug << m, b;
  Rref rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x = Vec::Zero(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x(rr.pivots[i]) = rr.reduced(static_cast<Eigen::Index>(i), m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = m.rows();
  Mat aug(n, 2 * n);
  aug << m, Mat::Identity(n, n);
  Rref rr = rref(std::move(aug));
  if (static_cast<Eigen::Index>(rr.pivots.size()) != n || (n > 0 && rr.pivots.back() >= n))
    return std::nullopt;
  return Mat(rr.reduced.rightCols(n));
}

Subspace Subspace::span(const Mat& columns) {
  // Canonical column space: RREF the transpose, keep nonzero rows.
  Rref rr = rref(columns.transpose());
  const auto d = static_cast<Eigen::Index>(rr.pivots.size());
  Subspace s(columns.rows());
  s.basis_ = rr.reduced.topRows(d).transpose();
  return s;
}

Subspace Subspace::full(Eigen::Index ambient) { return span(Mat::Identity(ambient, ambient)); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient()) throw std::invalid_argument("Subspace: ambient mismatch");
  return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (Eigen::Index c = 0; c < other.dim(); ++c)
    if (!contains(Vec(other.basis().col(c)))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Mat all(ambient(), dim() + other.dim());
  all << basis_, other.basis();
  return span(all);
}

ComplementProjection complement_projection(const Subspace& s) {
  const Eigen::Index n = s.ambient(), k = s.dim();
  Mat cols(n, k);
  cols = s.basis();
  std::vector<Eigen::Index> comp;
  for (Eigen::Index i = 0; i < n && cols.cols() < n; ++i) {
    Mat tryc(n, cols.cols() + 1);
    tryc << cols, Vec(Vec::Unit(n, i));
    if (rank(tryc) == tryc.cols()) {
      cols = std::move(tryc);
      comp.push_back(i);
    }
  }
  auto inv = inverse(cols);
  if (!inv) throw std::logic_error("complement_projection: basis extension failed");
  return {Mat(inv->bottomRows(n - k)), std::move(comp)};
}

}  // namespace homsuper
