// Independent classical (untwisted) Lie-superalgebra oracle used to
// cross-check the main library when the twist is the identity. Everything
// here works on dense index tables with its own sign bookkeeping; only the
// exact rank/kernel routines are shared.
#ifndef TESTS_CLASSICAL_ORACLE_HPP
#define TESTS_CLASSICAL_ORACLE_HPP

#include <map>
#include <vector>

#include "homsuper/linalg.hpp"

namespace classical {

using homsuper::Mat;
using homsuper::Rat;
using homsuper::Vec;

struct Algebra {
  int n = 0;
  std::vector<int> parity;                       // 0 or 1 per basis index
  std::vector<std::vector<Vec>> c;               // c[i][j] = [e_i, e_j]
};

inline Vec bracket(const Algebra& a, const Vec& x, const Vec& y) {
  Vec out = Vec::Zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (x(i) != 0 && y(j) != 0) out += x(i) * y(j) * a.c[i][j];
  return out;
}

inline bool check_skew(const Algebra& a) {
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      int s = (a.parity[i] && a.parity[j]) ? -1 : 1;
      if (a.c[i][j] != Vec(-Rat(s) * a.c[j][i])) return false;
    }
  return true;
}

inline bool check_jacobi(const Algebra& a) {
  // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) {
        auto sg = [&](int p, int q) { return (a.parity[p] && a.parity[q]) ? Rat(-1) : Rat(1); };
        Vec e_i = Vec::Unit(a.n, i), e_j = Vec::Unit(a.n, j), e_k = Vec::Unit(a.n, k);
        Vec sum = sg(i, k) * bracket(a, e_i, bracket(a, e_j, e_k)) +
                  sg(j, i) * bracket(a, e_j, bracket(a, e_k, e_i)) +
                  sg(k, j) * bracket(a, e_k, bracket(a, e_i, e_j));
        if (!sum.isZero()) return false;
      }
  return true;
}

// Dense degree-k cochains into the algebra itself: unknowns are the n^k * n
// entries f(t)(m) over all ordered tuples t. The space of parity-theta
// super-alternating maps is cut out by linear constraints; the classical
// Chevalley-Eilenberg coboundary is a linear map between the dense tables.

inline std::vector<std::vector<int>> all_tuples(int n, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int i = 0; i < n; ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

inline Eigen::Index tuple_index(const std::vector<int>& t, int n) {
  Eigen::Index idx = 0;
  for (int i : t) idx = idx * n + i;
  return idx;
}

// Rows of the constraint system: adjacent-swap alternation and parity
// homogeneity for sector theta.
inline Mat cochain_constraints(const Algebra& a, int k, int theta) {
  auto tuples = all_tuples(a.n, k);
  const Eigen::Index vars = static_cast<Eigen::Index>(tuples.size()) * a.n;
  std::vector<Vec> rows;
  auto var = [&](const std::vector<int>& t, int m) {
    return tuple_index(t, a.n) * a.n + m;
  };
  for (const auto& t : tuples) {
    int psum = theta;
    for (int i : t) psum += a.parity[i];
    for (int m = 0; m < a.n; ++m)
      if (a.parity[m] != psum % 2) {
        Vec r = Vec::Zero(vars);
        r(var(t, m)) = 1;
        rows.push_back(std::move(r));
      }
    for (int pos = 0; pos + 1 < k; ++pos) {
      auto u = t;
      std::swap(u[pos], u[pos + 1]);
      int s = (a.parity[t[pos]] && a.parity[t[pos + 1]]) ? -1 : 1;
      for (int m = 0; m < a.n; ++m) {
        Vec r = Vec::Zero(vars);
        r(var(t, m)) += 1;
        r(var(u, m)) += Rat(s);
        if (!r.isZero()) rows.push_back(std::move(r));
      }
    }
  }
  Mat out = Mat::Zero(static_cast<Eigen::Index>(rows.size()), vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return out;
}

// The classical coboundary as a dense matrix C^k -> C^{k+1} (adjoint
// coefficients), for f of parity theta:
//   (df)(u_0..u_k) = sum_i (-1)^i (-1)^{(theta+|u_0|+..+|u_{i-1}|)|u_i|}
//                      [u_i, f(.. u_i-hat ..)]
//                  + sum_{i<j} (-1)^{i+j} (-1)^{(sum_{<i})|u_i|}
//                      (-1)^{(sum_{<j})|u_j|} (-1)^{|u_i||u_j|}
//                      f([u_i,u_j], u_0, .., u_i-hat, .., u_j-hat, .., u_k)
inline Mat coboundary_matrix(const Algebra& a, int k, int theta) {
  auto in_tuples = all_tuples(a.n, k);
  auto out_tuples = all_tuples(a.n, k + 1);
  const Eigen::Index in_vars = static_cast<Eigen::Index>(in_tuples.size()) * a.n;
  const Eigen::Index out_vars = static_cast<Eigen::Index>(out_tuples.size()) * a.n;
  Mat D = Mat::Zero(out_vars, in_vars);
  auto invar = [&](const std::vector<int>& t, int m) { return tuple_index(t, a.n) * a.n + m; };
  for (const auto& u : out_tuples) {
    Eigen::Index base = tuple_index(u, a.n) * a.n;
    for (int i = 0; i <= k; ++i) {
      int acc = theta;
      for (int x = 0; x < i; ++x) acc += a.parity[u[x]];
      int sign = (i % 2 ? -1 : 1) * ((acc % 2 && a.parity[u[i]]) ? -1 : 1);
      std::vector<int> rest;
      for (int x = 0; x <= k; ++x)
        if (x != i) rest.push_back(u[x]);
      // [e_{u_i}, f(rest)] contributes c[u_i][m'] per module coordinate m'
      for (int m = 0; m < a.n; ++m) {
        const Vec& br = a.c[u[i]][m];
        for (int out_m = 0; out_m < a.n; ++out_m)
          if (br(out_m) != 0) D(base + out_m, invar(rest, m)) += Rat(sign) * br(out_m);
      }
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        int ai = theta * 0, aj = 0;
        for (int x = 0; x < i; ++x) ai += a.parity[u[x]];
        for (int x = 0; x < j; ++x) aj += a.parity[u[x]];
        int sign = ((i + j) % 2 ? -1 : 1);
        if (ai % 2 && a.parity[u[i]]) sign = -sign;
        if (aj % 2 && a.parity[u[j]]) sign = -sign;
        if (a.parity[u[i]] && a.parity[u[j]]) sign = -sign;
        const Vec& br = a.c[u[i]][u[j]];
        for (int first = 0; first < a.n; ++first) {
          if (br(first) == 0) continue;
          std::vector<int> args{first};
          for (int x = 0; x <= k; ++x)
            if (x != i && x != j) args.push_back(u[x]);
          for (int out_m = 0; out_m < a.n; ++out_m)
            D(base + out_m, invar(args, out_m)) += Rat(sign) * br(first);
        }
      }
  }
  return D;
}

struct Dims {
  Eigen::Index cochains, cocycles, coboundaries, cohomology;
};

inline Dims cohomology_dims(const Algebra& a, int k, int theta) {
  using homsuper::kernel_basis;
  using homsuper::rank;
  Mat cons = cochain_constraints(a, k, theta);
  auto basis = kernel_basis(cons);  // basis of C^k as dense vectors
  Eigen::Index dimC = static_cast<Eigen::Index>(basis.size());
  Mat D = coboundary_matrix(a, k, theta);
  Mat DC(D.rows(), dimC);
  for (Eigen::Index i = 0; i < dimC; ++i) DC.col(i) = D * basis[static_cast<std::size_t>(i)];
  Eigen::Index z = dimC - rank(DC);
  Eigen::Index b = 0;
  if (k > 0) {
    auto below = kernel_basis(cochain_constraints(a, k - 1, theta));
    Mat Dm = coboundary_matrix(a, k - 1, theta);
    Mat img(Dm.rows(), static_cast<Eigen::Index>(below.size()));
    for (std::size_t i = 0; i < below.size(); ++i)
      img.col(static_cast<Eigen::Index>(i)) = Dm * below[i];
    b = rank(img);
  }
  return Dims{dimC, z, b, z - b};
}

}  // namespace classical

#endif
