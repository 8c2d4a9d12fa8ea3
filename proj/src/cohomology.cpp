#include "homsuper/cohomology.hpp"

#include <functional>
#include <stdexcept>

namespace homsuper {

Representation::Representation(const HomLieSuperalgebra& algebra, GradedBasis module,
                               std::vector<Mat> rho, Mat beta_tilde)
    : algebra_(algebra), module_(std::move(module)), rho_(std::move(rho)),
      beta_tilde_(std::move(beta_tilde)) {
  const Eigen::Index n = algebra_.dim(), m = module_.dim();
  if (static_cast<Eigen::Index>(rho_.size()) != n)
    throw std::invalid_argument("Representation: one action matrix per basis vector required");
  for (Eigen::Index i = 0; i < n; ++i) {
    const Mat& a = rho_[static_cast<std::size_t>(i)];
    if (a.rows() != m || a.cols() != m)
      throw std::invalid_argument("Representation: action matrix shape mismatch");
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c)
        if (a(r, c) != 0 &&
            module_.parity(r) != module_.parity(c) + algebra_.basis().parity(i))
          throw std::invalid_argument("Representation: action not parity-consistent");
  }
  if (beta_tilde_.rows() != m || beta_tilde_.cols() != m)
    throw std::invalid_argument("Representation: module twist shape mismatch");
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c)
      if (beta_tilde_(r, c) != 0 && module_.parity(r) != module_.parity(c))
        throw std::invalid_argument("Representation: module twist not even");
}

Mat Representation::rho_vector(const Vec& x) const {
  Mat out = Mat::Zero(module_dim(), module_dim());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) out += x(i) * rho_[static_cast<std::size_t>(i)];
  return out;
}

Representation ad_s(const HomLieSuperalgebra& L, int s) {
  if (!validate(L).multiplicative)
    throw std::invalid_argument("ad_s: algebra is not multiplicative");
  Mat as;
  try {
    as = L.alpha().pow(s).matrix();
  } catch (const std::domain_error&) {
    throw std::domain_error("ad_s: negative power requires a regular algebra");
  }
  std::vector<Mat> rho;
  for (Eigen::Index i = 0; i < L.dim(); ++i) rho.push_back(L.ad_vector(as.col(i)));
  return Representation(L, L.basis(), std::move(rho), L.alpha().matrix());
}

Representation coadjoint(const HomLieSuperalgebra& L) {
  const Eigen::Index n = L.dim();
  const GradedBasis& b = L.basis();
  const Mat& A = L.alpha().matrix();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      int sg = koszul_pair_sign(b.parity(i), b.parity(j));
      Mat lhs = L.ad(i) * L.ad_vector(A.col(j)) - Rat(sg) * L.ad(j) * L.ad_vector(A.col(i));
      Mat rhs = A * L.ad_vector(L.ad(i).col(j));
      if (lhs != rhs)
        throw std::invalid_argument("coadjoint: representation identity fails at pair (" +
                                    b.name(i) + ", " + b.name(j) + ")");
    }
  std::vector<Mat> rho;
  for (Eigen::Index i = 0; i < n; ++i) {
    Mat p = Mat::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      int sg = koszul_pair_sign(b.parity(i), b.parity(j));
      for (Eigen::Index k = 0; k < n; ++k) p(k, j) = -Rat(sg) * L.ad(i)(j, k);
    }
    rho.push_back(std::move(p));
  }
  return Representation(L, b.dual(), std::move(rho), L.alpha().matrix().transpose());
}

Representation trivial_representation(const HomLieSuperalgebra& L) {
  GradedBasis module({"1"}, {Parity::Even});
  std::vector<Mat> rho(static_cast<std::size_t>(L.dim()), Mat::Zero(1, 1));
  return Representation(L, std::move(module), std::move(rho), Mat::Identity(1, 1));
}

bool is_alpha_compatible(const Representation& R, const CochainTable& f) {
  const Mat& A = R.algebra().alpha().matrix();
  const int k = f.degree();
  for (const auto& t : canonical_tuples(f.arg_parities(), k)) {
    std::vector<Vec> args;
    args.reserve(static_cast<std::size_t>(k));
    for (int i : t) args.push_back(A.col(i));
    if (R.beta_tilde() * f.eval(t) != f.eval_vectors(args)) return false;
  }
  return true;
}

std::vector<CochainTable> cochain_basis(const HomLieSuperalgebra& L, const Representation& R,
                                        int k, Parity theta, bool alpha_compatible) {
  if (k < 0) throw std::invalid_argument("cochain_basis: negative degree");
  const std::vector<Parity>& argp = L.basis().parities();
  const std::vector<Parity>& modp = R.module().parities();
  const Eigen::Index m = R.module_dim();
  auto tuples = canonical_tuples(argp, k);

  std::vector<CochainTable> basis;
  for (const auto& t : tuples) {
    Parity sigma = Parity::Even;
    for (int i : t) sigma = sigma + argp[static_cast<std::size_t>(i)];
    for (Eigen::Index v = 0; v < m; ++v) {
      if (modp[static_cast<std::size_t>(v)] != sigma + theta) continue;
      CochainTable f(k, argp, modp, theta);
      f.set(t, Vec::Unit(m, v));
      basis.push_back(std::move(f));
    }
  }
  if (!alpha_compatible || basis.empty()) return basis;

  // Kernel of f -> beta_tilde o f - f o alpha^{(x)k} over the raw basis.
  const Mat& A = L.alpha().matrix();
  const Eigen::Index slots = static_cast<Eigen::Index>(tuples.size()) * m;
  Mat cond(slots, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t bcol = 0; bcol < basis.size(); ++bcol) {
    Vec col = Vec::Zero(slots);
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      std::vector<Vec> args;
      for (int i : tuples[ti]) args.push_back(A.col(i));
      Vec diff = R.beta_tilde() * basis[bcol].eval(tuples[ti]) - basis[bcol].eval_vectors(args);
      col.segment(static_cast<Eigen::Index>(ti) * m, m) = diff;
    }
    cond.col(static_cast<Eigen::Index>(bcol)) = col;
  }
  std::vector<CochainTable> out;
  for (const Vec& ker : kernel_basis(cond)) {
    CochainTable f(k, argp, modp, theta);
    for (std::size_t bcol = 0; bcol < basis.size(); ++bcol)
      if (ker(static_cast<Eigen::Index>(bcol)) != 0) {
        CochainTable scaled = basis[bcol];
        scaled *= ker(static_cast<Eigen::Index>(bcol));
        f += scaled;
      }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

/// Shared skeleton of the two coboundary operators; the action term is
/// pluggable, the bilinear-insertion sum follows the operator's own sign
/// convention via `front_insertion`.
CochainTable coboundary_impl(const HomLieSuperalgebra& L, const CochainTable& f,
                             const Mat& action_power,
                             const std::function<Vec(const Vec&, const Vec&)>& act,
                             Eigen::Index value_dim, const std::vector<Parity>& value_parities,
                             bool front_insertion) {
  const int k = f.degree();
  const GradedBasis& b = L.basis();
  const Mat& A = L.alpha().matrix();
  CochainTable out(k + 1, b.parities(), value_parities, f.theta());

  for (const auto& u : canonical_tuples(b.parities(), k + 1)) {
    Vec val = Vec::Zero(value_dim);
    std::vector<Parity> up;
    for (int ui : u) up.push_back(b.parity(ui));

    for (int i = 0; i <= k; ++i) {
      Parity before = f.theta();
      for (int a = 0; a < i; ++a) before = before + up[static_cast<std::size_t>(a)];
      int sign = ((i % 2) ? -1 : 1) * koszul_pair_sign(before, up[static_cast<std::size_t>(i)]);
      std::vector<int> rest;
      for (int a = 0; a <= k; ++a)
        if (a != i) rest.push_back(u[static_cast<std::size_t>(a)]);
      Vec fv = f.eval(rest);
      if (!fv.isZero())
        val += Rat(sign) * act(action_power.col(u[static_cast<std::size_t>(i)]), fv);
    }

    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        int sign;
        std::vector<Vec> args;
        Vec br = L.ad(u[static_cast<std::size_t>(i)]).col(u[static_cast<std::size_t>(j)]);
        if (front_insertion) {
          // (-1)^{i+j} (-1)^{(sum_<i) u_i} (-1)^{(sum_<j) u_j} (-1)^{u_i u_j},
          // arguments f([u_i,u_j], alpha(u_0), ..., ^i, ..., ^j, ...).
          Parity bi = Parity::Even, bj = Parity::Even;
          for (int a = 0; a < i; ++a) bi = bi + up[static_cast<std::size_t>(a)];
          for (int a = 0; a < j; ++a) bj = bj + up[static_cast<std::size_t>(a)];
          sign = (((i + j) % 2) ? -1 : 1) * koszul_pair_sign(bi, up[static_cast<std::size_t>(i)]) *
                 koszul_pair_sign(bj, up[static_cast<std::size_t>(j)]) *
                 koszul_pair_sign(up[static_cast<std::size_t>(i)], up[static_cast<std::size_t>(j)]);
          args.push_back(br);
          for (int a = 0; a <= k; ++a)
            if (a != i && a != j) args.push_back(A.col(u[static_cast<std::size_t>(a)]));
        } else {
          // (-1)^{j + u_j (u_{i+1} + ... + u_{j-1})},
          // arguments f(alpha(u_0), ..., [u_i,u_j] at slot i, ..., ^j, ...).
          Parity mid = Parity::Even;
          for (int a = i + 1; a < j; ++a) mid = mid + up[static_cast<std::size_t>(a)];
          sign = ((j % 2) ? -1 : 1) * koszul_pair_sign(up[static_cast<std::size_t>(j)], mid);
          for (int a = 0; a < i; ++a) args.push_back(A.col(u[static_cast<std::size_t>(a)]));
          args.push_back(br);
          for (int a = i + 1; a <= k; ++a)
            if (a != j) args.push_back(A.col(u[static_cast<std::size_t>(a)]));
        }
        Vec fv = f.eval_vectors(args);
        if (!fv.isZero()) val += Rat(sign) * fv;
      }
    out.set(u, val);
  }
  return out;
}

}  // namespace

CochainTable coboundary_ds(const HomLieSuperalgebra& L, int s, const CochainTable& f) {
  const int k = f.degree();
  if (f.module_parities() != L.basis().parities())
    throw std::invalid_argument("coboundary_ds: cochain must take values in the algebra");
  Representation self(L, L.basis(), std::vector<Mat>(static_cast<std::size_t>(L.dim()),
                                                     Mat::Zero(L.dim(), L.dim())),
                      L.alpha().matrix());
  if (!is_alpha_compatible(self, f))
    throw std::invalid_argument("coboundary_ds: cochain does not commute with alpha");
  Mat power;
  try {
    power = L.alpha().pow(k + s).matrix();
  } catch (const std::domain_error&) {
    throw std::domain_error("coboundary_ds: exponent " + std::to_string(k + s) +
                            " requires a regular algebra");
  }
  auto act = [&L](const Vec& x, const Vec& v) { return L.bracket(x, v); };
  return coboundary_impl(L, f, power, act, L.dim(), L.basis().parities(),
                         /*front_insertion=*/true);
}

CochainTable coboundary_delta(const HomLieSuperalgebra& L, const Representation& R, int r,
                              const CochainTable& f) {
  const int n = f.degree();
  if (f.module_parities() != R.module().parities())
    throw std::invalid_argument("coboundary_delta: cochain/module mismatch");
  Mat power;
  try {
    power = L.alpha().pow(n + r - 1).matrix();
  } catch (const std::domain_error&) {
    throw std::domain_error("coboundary_delta: exponent " + std::to_string(n + r - 1) +
                            " requires a regular algebra");
  }
  auto act = [&R](const Vec& x, const Vec& v) { return Vec(R.rho_vector(x) * v); };
  return coboundary_impl(L, f, power, act, R.module_dim(), R.module().parities(),
                         /*front_insertion=*/false);
}

CohomologyResult cohomology_dims(const HomLieSuperalgebra& L, int s, int k) {
  if (k < 0) throw std::invalid_argument("cohomology_dims: negative degree");
  CohomologyResult res;
  res.k = k;
  Representation R = ad_s(L, 0);  // module data only: L itself with twist alpha
  auto image_rank = [&](int deg, Parity theta) -> Eigen::Index {
    if (deg < 0) return 0;
    auto basis = cochain_basis(L, R, deg, theta, true);
    if (basis.empty()) return 0;
    auto out_tuples = canonical_tuples(L.basis().parities(), deg + 1);
    Mat D(static_cast<Eigen::Index>(out_tuples.size()) * L.dim(),
          static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c)
      D.col(static_cast<Eigen::Index>(c)) = coboundary_ds(L, s, basis[c]).coordinates(out_tuples);
    return rank(D);
  };
  for (int t = 0; t < 2; ++t) {
    Parity theta = static_cast<Parity>(t);
    Eigen::Index dimC = static_cast<Eigen::Index>(cochain_basis(L, R, k, theta, true).size());
    Eigen::Index rk = image_rank(k, theta);
    Eigen::Index z = dimC - rk;
    Eigen::Index bd = image_rank(k - 1, theta);
    res.sector_cochains[t] = dimC;
    res.sector_cocycles[t] = z;
    res.sector_coboundaries[t] = bd;
    res.sector_cohomology[t] = z - bd;
    res.dim_cochains += dimC;
    res.dim_cocycles += z;
    res.dim_coboundaries += bd;
    res.dim_cohomology += z - bd;
  }
  return res;
}

}  // namespace homsuper
