#include "homsuper/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace homsuper {

HomLieSuperalgebra::HomLieSuperalgebra(GradedBasis basis, std::vector<Mat> ad, GradedMap alpha)
    : basis_(std::move(basis)), ad_(std::move(ad)), alpha_(std::move(alpha)) {
  const Eigen::Index n = basis_.dim();
  if (static_cast<Eigen::Index>(ad_.size()) != n)
    throw std::invalid_argument("HomLieSuperalgebra: need one ad matrix per basis vector");
  for (const Mat& m : ad_)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("HomLieSuperalgebra: ad matrix shape mismatch");
  if (!(alpha_.source() == basis_) || !(alpha_.target() == basis_))
    throw std::invalid_argument("HomLieSuperalgebra: alpha basis mismatch");
}

Vec HomLieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("bracket: vector size mismatch");
  Vec out = Vec::Zero(dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (x(i) != 0) out += x(i) * (ad_[static_cast<std::size_t>(i)] * y);
  return out;
}

Mat HomLieSuperalgebra::ad_vector(const Vec& x) const {
  Mat out = Mat::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (x(i) != 0) out += x(i) * ad_[static_cast<std::size_t>(i)];
  return out;
}

ValidationReport validate(const HomLieSuperalgebra& L) {
  ValidationReport rep;
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  const Mat& A = L.alpha().matrix();

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec v = L.ad(i).col(j);
      Vec defect = Vec::Zero(n);
      for (Eigen::Index k = 0; k < n; ++k)
        if (v(k) != 0 && b.parity(k) != b.parity(i) + b.parity(j)) defect(k) = v(k);
      if (!defect.isZero()) {
        rep.even_bracket = false;
        rep.violations.push_back({"even", {i, j}, defect});
      }
    }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      int s = koszul_pair_sign(b.parity(i), b.parity(j));
      Vec defect = L.ad(j).col(i) + Rat(s) * L.ad(i).col(j);
      if (!defect.isZero()) {
        rep.skew = false;
        rep.violations.push_back({"skew", {i, j}, defect});
      }
    }

  for (Eigen::Index i = 0; i < n; ++i) {
    Vec ai = A.col(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec aj = A.col(j);
      for (Eigen::Index k = 0; k < n; ++k) {
        Vec ak = A.col(k);
        Vec e_i = Vec::Unit(n, i), e_j = Vec::Unit(n, j), e_k = Vec::Unit(n, k);
        Vec defect = Rat(koszul_pair_sign(b.parity(i), b.parity(k))) *
                         L.bracket(ai, L.bracket(e_j, e_k)) +
                     Rat(koszul_pair_sign(b.parity(j), b.parity(i))) *
                         L.bracket(aj, L.bracket(e_k, e_i)) +
                     Rat(koszul_pair_sign(b.parity(k), b.parity(j))) *
                         L.bracket(ak, L.bracket(e_i, e_j));
        if (!defect.isZero()) {
          rep.hom_jacobi = false;
          rep.violations.push_back({"hom_jacobi", {i, j, k}, defect});
        }
      }
    }
  }

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec defect = A * L.ad(i).col(j) - L.bracket(A.col(i), A.col(j));
      if (!defect.isZero()) {
        rep.multiplicative = false;
        rep.violations.push_back({"multiplicative", {i, j}, defect});
      }
    }

  rep.regular = rep.multiplicative && inverse(A).has_value();
  return rep;
}

namespace {
GradedBasis concat_bases(const GradedBasis& a, const GradedBasis& b) {
  std::vector<std::string> names = a.names();
  std::vector<Parity> parities = a.parities();
  for (Eigen::Index i = 0; i < b.dim(); ++i) {
    std::string nm = b.name(i);
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
    names.push_back(nm);
    parities.push_back(b.parity(i));
  }
  return GradedBasis(std::move(names), std::move(parities));
}
}  // namespace

HomLieSuperalgebra direct_sum(const HomLieSuperalgebra& L, const HomLieSuperalgebra& G) {
  ValidationReport rl = validate(L), rg = validate(G);
  if (!rl.algebra_ok() || !rg.algebra_ok())
    throw std::invalid_argument("direct_sum: inputs must be hom-Lie superalgebras");
  const Eigen::Index n = L.dim(), m = G.dim();
  GradedBasis basis = concat_bases(L.basis(), G.basis());
  std::vector<Mat> ad;
  ad.reserve(static_cast<std::size_t>(n + m));
  for (Eigen::Index i = 0; i < n; ++i) {
    Mat a = Mat::Zero(n + m, n + m);
    a.topLeftCorner(n, n) = L.ad(i);
    ad.push_back(std::move(a));
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    Mat a = Mat::Zero(n + m, n + m);
    a.bottomRightCorner(m, m) = G.ad(i);
    ad.push_back(std::move(a));
  }
  Mat A = Mat::Zero(n + m, n + m);
  A.topLeftCorner(n, n) = L.alpha().matrix();
  A.bottomRightCorner(m, m) = G.alpha().matrix();
  return HomLieSuperalgebra(basis, std::move(ad), GradedMap(std::move(A), basis, basis));
}

bool is_morphism(const GradedMap& phi, const HomLieSuperalgebra& L, const HomLieSuperalgebra& G) {
  if (!(phi.source() == L.basis()) || !(phi.target() == G.basis()))
    throw std::invalid_argument("is_morphism: basis mismatch");
  const Mat& P = phi.matrix();
  for (Eigen::Index i = 0; i < L.dim(); ++i)
    for (Eigen::Index j = 0; j < L.dim(); ++j)
      if (P * L.ad(i).col(j) != G.bracket(P.col(i), P.col(j))) return false;
  return P * L.alpha().matrix() == G.alpha().matrix() * P;
}

bool graph_subalgebra_check(const GradedMap& phi, const HomLieSuperalgebra& L,
                            const HomLieSuperalgebra& G) {
  HomLieSuperalgebra D = direct_sum(L, G);
  const Eigen::Index n = L.dim(), m = G.dim();
  Mat graph = Mat::Zero(n + m, n);
  graph.topRows(n) = Mat::Identity(n, n);
  graph.bottomRows(m) = phi.matrix();
  Subspace S = Subspace::span(graph);
  if (!S.contains(subspace_bracket(D, S, S))) return false;
  return S.contains(Subspace::span(D.alpha().matrix() * S.basis()));
}

Subspace center(const HomLieSuperalgebra& L) {
  const Eigen::Index n = L.dim();
  Mat stacked = Mat::Zero(n * n, n);
  // row block j: x -> [x, e_j], entry (k, i) = c[i][j][k]
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) stacked.block(j * n, i, n, 1) = L.ad(i).col(j);
  auto ker = kernel_basis(stacked);
  Mat cols(n, static_cast<Eigen::Index>(ker.size()));
  for (std::size_t i = 0; i < ker.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = ker[i];
  return Subspace::span(cols);
}

bool is_graded_subspace(const HomLieSuperalgebra& L, const Subspace& S) {
  const Eigen::Index n = L.dim();
  for (Eigen::Index c = 0; c < S.dim(); ++c) {
    Vec even = Vec::Zero(n), odd = Vec::Zero(n);
    for (Eigen::Index r = 0; r < n; ++r)
      (L.basis().parity(r) == Parity::Even ? even(r) : odd(r)) = S.basis()(r, c);
    if (!S.contains(even) || !S.contains(odd)) return false;
  }
  return true;
}

namespace {
void require_graded(const HomLieSuperalgebra& L, const Subspace& S) {
  if (S.ambient() != L.dim()) throw std::invalid_argument("subspace: ambient mismatch");
  if (!is_graded_subspace(L, S)) throw std::invalid_argument("subspace is not graded");
}
bool alpha_stable(const HomLieSuperalgebra& L, const Subspace& S) {
  return S.contains(Subspace::span(L.alpha().matrix() * S.basis()));
}
}  // namespace

bool is_subalgebra(const HomLieSuperalgebra& L, const Subspace& S) {
  require_graded(L, S);
  return alpha_stable(L, S) && S.contains(subspace_bracket(L, S, S));
}

bool is_bracket_ideal(const HomLieSuperalgebra& L, const Subspace& S) {
  require_graded(L, S);
  return S.contains(subspace_bracket(L, S, Subspace::full(L.dim())));
}

bool is_ideal(const HomLieSuperalgebra& L, const Subspace& S) {
  return is_bracket_ideal(L, S) && alpha_stable(L, S);
}

Subspace subspace_bracket(const HomLieSuperalgebra& L, const Subspace& S, const Subspace& T) {
  Mat cols(L.dim(), S.dim() * T.dim());
  Eigen::Index c = 0;
  for (Eigen::Index a = 0; a < S.dim(); ++a)
    for (Eigen::Index b = 0; b < T.dim(); ++b)
      cols.col(c++) = L.bracket(S.basis().col(a), T.basis().col(b));
  return Subspace::span(cols);
}

Quotient quotient(const HomLieSuperalgebra& L, const Subspace& I,
                  const std::vector<Eigen::Index>& preferred_order) {
  if (!is_ideal(L, I)) throw std::invalid_argument("quotient: subspace is not an alpha-stable ideal");
  const Eigen::Index n = L.dim(), k = I.dim(), d = n - k;

  // Greedy graded complement by standard basis vectors.
  std::vector<Eigen::Index> order;
  if (preferred_order.empty())
    for (Eigen::Index i = 0; i < n; ++i) order.push_back(i);
  else
    order = preferred_order;
  Mat cols = I.basis();
  std::vector<Eigen::Index> comp;
  for (Eigen::Index i : order) {
    if (cols.cols() == n) break;
    Mat tryc(n, cols.cols() + 1);
    tryc << cols, Vec(Vec::Unit(n, i));
    if (rank(tryc) == tryc.cols()) {
      cols = std::move(tryc);
      comp.push_back(i);
    }
  }
  if (static_cast<Eigen::Index>(comp.size()) != d)
    throw std::logic_error("quotient: complement extension failed");
  auto inv = inverse(cols);
  Mat proj = inv->bottomRows(d);  // coordinates along the complement, killing I

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (Eigen::Index i : comp) {
    names.push_back(L.basis().name(i));
    parities.push_back(L.basis().parity(i));
  }
  GradedBasis qbasis(std::move(names), std::move(parities));

  std::vector<Mat> ad;
  for (Eigen::Index a = 0; a < d; ++a) {
    Mat m(d, d);
    for (Eigen::Index b = 0; b < d; ++b)
      m.col(b) = proj * L.ad(comp[static_cast<std::size_t>(a)])
                            .col(comp[static_cast<std::size_t>(b)]);
    ad.push_back(std::move(m));
  }
  Mat incl = Mat::Zero(n, d);
  for (Eigen::Index a = 0; a < d; ++a) incl.col(a) = Vec::Unit(n, comp[static_cast<std::size_t>(a)]);
  Mat alphaQ = proj * L.alpha().matrix() * incl;
  return {HomLieSuperalgebra(qbasis, std::move(ad), GradedMap(std::move(alphaQ), qbasis, qbasis)),
          GradedMap(std::move(proj), L.basis(), qbasis)};
}

namespace {
std::vector<Subspace> run_series(Subspace start,
                                 const std::function<Subspace(const Subspace&)>& step) {
  std::vector<Subspace> out{std::move(start)};
  for (;;) {
    Subspace next = step(out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}
}  // namespace

std::vector<Subspace> derived_series(const HomLieSuperalgebra& L) {
  return run_series(Subspace::full(L.dim()),
                    [&](const Subspace& s) { return subspace_bracket(L, s, s); });
}

std::vector<Subspace> lower_central_series(const HomLieSuperalgebra& L) {
  Subspace full = Subspace::full(L.dim());
  return run_series(full, [&](const Subspace& s) { return subspace_bracket(L, s, full); });
}

std::vector<Subspace> upper_central_series(const HomLieSuperalgebra& L) {
  const Eigen::Index n = L.dim();
  auto centralizer_of = [&](const Subspace& I) {
    ComplementProjection cp = complement_projection(I);
    const Eigen::Index d = n - I.dim();
    Mat stacked = Mat::Zero(d * n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat mj(n, n);  // x -> [x, e_j]
      for (Eigen::Index i = 0; i < n; ++i) mj.col(i) = L.ad(i).col(j);
      stacked.block(j * d, 0, d, n) = cp.projection * mj;
    }
    auto ker = kernel_basis(stacked);
    Mat cols(n, static_cast<Eigen::Index>(ker.size()));
    for (std::size_t i = 0; i < ker.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = ker[i];
    return Subspace::span(cols);
  };
  return run_series(Subspace::zero(n), centralizer_of);
}

namespace {
std::optional<int> length_of(const std::vector<Subspace>& series) {
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}
}  // namespace

std::optional<int> solvable_length(const HomLieSuperalgebra& L) {
  return length_of(derived_series(L));
}

std::optional<int> nilpotent_length(const HomLieSuperalgebra& L) {
  return length_of(lower_central_series(L));
}

}  // namespace homsuper
