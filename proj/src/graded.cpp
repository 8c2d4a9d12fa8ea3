#include "homsuper/graded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homsuper {

GradedBasis::GradedBasis(std::vector<std::string> names, std::vector<Parity> parities)
    : names_(std::move(names)), parities_(std::move(parities)) {
  if (names_.size() != parities_.size())
    throw std::invalid_argument("GradedBasis: names/parities length mismatch");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("GradedBasis: duplicate names");
}

GradedBasis GradedBasis::dual() const {
  std::vector<std::string> n;
  n.reserve(names_.size());
  for (const auto& s : names_) n.push_back(s + "*");
  return GradedBasis(std::move(n), parities_);
}

GradedMap::GradedMap(Mat matrix, GradedBasis source, GradedBasis target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw std::invalid_argument("GradedMap: shape mismatch");
  for (Eigen::Index r = 0; r < matrix_.rows(); ++r)
    for (Eigen::Index c = 0; c < matrix_.cols(); ++c)
      if (matrix_(r, c) != 0 && target_.parity(r) != source_.parity(c))
        throw std::invalid_argument("GradedMap: map is not even at entry (" + std::to_string(r) +
                                    "," + std::to_string(c) + ")");
}

GradedMap GradedMap::identity(const GradedBasis& basis) {
  return GradedMap(Mat::Identity(basis.dim(), basis.dim()), basis, basis);
}

GradedMap GradedMap::compose(const GradedMap& inner) const {
  if (!(inner.target_ == source_)) throw std::invalid_argument("GradedMap::compose: basis mismatch");
  return GradedMap(matrix_ * inner.matrix_, inner.source_, target_);
}

GradedMap GradedMap::pow(int exponent) const {
  if (!(source_ == target_)) throw std::invalid_argument("GradedMap::pow: not an endomorphism");
  Mat base = matrix_;
  if (exponent < 0) {
    auto inv = inverse(matrix_);
    if (!inv) throw std::domain_error("GradedMap::pow: negative power of a singular map");
    base = *inv;
    exponent = -exponent;
  }
  Mat acc = Mat::Identity(matrix_.rows(), matrix_.cols());
  for (int i = 0; i < exponent; ++i) acc = acc * base;
  return GradedMap(std::move(acc), source_, target_);
}

int koszul_sign(const std::vector<Parity>& parities, const std::vector<int>& permutation) {
  const int k = static_cast<int>(permutation.size());
  if (parities.size() != permutation.size())
    throw std::invalid_argument("koszul_sign: length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int p : permutation) {
    if (p < 0 || p >= k || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("koszul_sign: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<int> perm = permutation;
  int sign = 1;
  for (int pass = 0; pass + 1 < k; ++pass)
    for (int i = 0; i + 1 < k; ++i)
      if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)]) {
        sign *= -koszul_pair_sign(parities[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                  parities[static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)])]);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
      }
  return sign;
}

CanonicalTuple canonicalize_tuple(const std::vector<int>& indices,
                                  const std::vector<Parity>& basis_parities) {
  CanonicalTuple out;
  out.indices = indices;
  const int k = static_cast<int>(indices.size());
  for (int idx : indices)
    if (idx < 0 || idx >= static_cast<int>(basis_parities.size()))
      throw std::invalid_argument("canonicalize_tuple: index out of range");
  for (int pass = 0; pass + 1 < k; ++pass)
    for (int i = 0; i + 1 < k; ++i) {
      int a = out.indices[static_cast<std::size_t>(i)], b = out.indices[static_cast<std::size_t>(i + 1)];
      if (a > b) {
        out.sign *= -koszul_pair_sign(basis_parities[static_cast<std::size_t>(a)],
                                      basis_parities[static_cast<std::size_t>(b)]);
        std::swap(out.indices[static_cast<std::size_t>(i)], out.indices[static_cast<std::size_t>(i + 1)]);
      }
    }
  for (int i = 0; i + 1 < k; ++i)
    if (out.indices[static_cast<std::size_t>(i)] == out.indices[static_cast<std::size_t>(i + 1)] &&
        basis_parities[static_cast<std::size_t>(out.indices[static_cast<std::size_t>(i)])] == Parity::Even) {
      out.zero = true;
      out.sign = 0;
      return out;
    }
  return out;
}

std::vector<std::vector<int>> canonical_tuples(const std::vector<Parity>& basis_parities, int k) {
  if (k < 0) throw std::invalid_argument("canonical_tuples: negative degree");
  const int n = static_cast<int>(basis_parities.size());
  std::vector<std::vector<int>> out;
  // Nondecreasing; an index may repeat only when odd.
  std::vector<int> tup;
  auto gen = [&](auto&& self, int minIdx) -> void {
    if (static_cast<int>(tup.size()) == k) {
      out.push_back(tup);
      return;
    }
    for (int i = minIdx; i < n; ++i) {
      if (!tup.empty() && tup.back() == i &&
          basis_parities[static_cast<std::size_t>(i)] == Parity::Even)
        continue;
      tup.push_back(i);
      self(self, i);
      tup.pop_back();
    }
  };
  gen(gen, 0);
  return out;
}

CochainTable::CochainTable(int degree, std::vector<Parity> arg_parities,
                           std::vector<Parity> module_parities, Parity theta)
    : degree_(degree),
      arg_parities_(std::move(arg_parities)),
      module_parities_(std::move(module_parities)),
      theta_(theta) {
  if (degree_ < 0) throw std::invalid_argument("CochainTable: negative degree");
}

namespace {
Parity tuple_parity(const std::vector<int>& t, const std::vector<Parity>& basis_parities) {
  Parity s = Parity::Even;
  for (int i : t) s = s + basis_parities[static_cast<std::size_t>(i)];
  return s;
}
}  // namespace

void CochainTable::set(const std::vector<int>& indices, const Vec& value) {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("CochainTable::set: arity mismatch");
  if (value.size() != module_dim()) throw std::invalid_argument("CochainTable::set: value size");
  CanonicalTuple ct = canonicalize_tuple(indices, arg_parities_);
  if (ct.zero) {
    if (value.isZero()) return;
    throw std::invalid_argument("CochainTable::set: nonzero value on a vanishing tuple");
  }
  Parity want = tuple_parity(ct.indices, arg_parities_) + theta_;
  for (Eigen::Index r = 0; r < value.size(); ++r)
    if (value(r) != 0 && module_parities_[static_cast<std::size_t>(r)] != want)
      throw std::invalid_argument("CochainTable::set: value leaves the graded component");
  Vec stored = value * Rat(ct.sign);
  if (stored.isZero())
    entries_.erase(ct.indices);
  else
    entries_[ct.indices] = std::move(stored);
}

void CochainTable::add(const std::vector<int>& indices, const Vec& value) {
  Vec cur = eval(indices);
  set(indices, cur + value);
}

Vec CochainTable::eval(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("CochainTable::eval: arity mismatch");
  CanonicalTuple ct = canonicalize_tuple(indices, arg_parities_);
  if (ct.zero) return Vec::Zero(module_dim());
  auto it = entries_.find(ct.indices);
  if (it == entries_.end()) return Vec::Zero(module_dim());
  return it->second * Rat(ct.sign);
}

Vec CochainTable::eval_vectors(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw std::invalid_argument("CochainTable::eval_vectors: arity mismatch");
  Vec out = Vec::Zero(module_dim());
  const int k = degree_;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  // Expand multilinearly, skipping zero coefficients.
  auto rec = [&](auto&& self, int pos, const Rat& coeff) -> void {
    if (pos == k) {
      out += coeff * eval(idx);
      return;
    }
    const Vec& v = args[static_cast<std::size_t>(pos)];
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) == 0) continue;
      idx[static_cast<std::size_t>(pos)] = static_cast<int>(i);
      self(self, pos + 1, coeff * v(i));
    }
  };
  rec(rec, 0, Rat(1));
  return out;
}

bool CochainTable::is_zero() const {
  for (const auto& [t, v] : entries_)
    if (!v.isZero()) return false;
  return true;
}

CochainTable& CochainTable::operator+=(const CochainTable& other) {
  if (degree_ != other.degree_ || arg_parities_ != other.arg_parities_ ||
      module_parities_ != other.module_parities_ || theta_ != other.theta_)
    throw std::invalid_argument("CochainTable: incompatible addition");
  for (const auto& [t, v] : other.entries_) add(t, v);
  return *this;
}

CochainTable& CochainTable::operator*=(const Rat& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [t, v] : entries_) v *= c;
  return *this;
}

CochainTable operator-(CochainTable a, const CochainTable& b) {
  CochainTable nb = b;
  nb *= Rat(-1);
  a += nb;
  return a;
}

bool operator==(const CochainTable& a, const CochainTable& b) { return (a - b).is_zero(); }

Vec CochainTable::coordinates(const std::vector<std::vector<int>>& tuples) const {
  const Eigen::Index m = module_dim();
  Vec out = Vec::Zero(static_cast<Eigen::Index>(tuples.size()) * m);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    auto it = entries_.find(tuples[t]);
    if (it != entries_.end()) out.segment(static_cast<Eigen::Index>(t) * m, m) = it->second;
  }
  return out;
}

}  // namespace homsuper
