#ifndef HOMSUPER_GRADED_HPP
#define HOMSUPER_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "homsuper/linalg.hpp"

namespace homsuper {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int parity_int(Parity p) { return static_cast<int>(p); }

/// (-1)^{|a||b|}
inline int koszul_pair_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Basis of a Z2-graded space: unique labels plus a parity per vector.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::vector<std::string> names, std::vector<Parity> parities);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(parities_.size()); }
  Parity parity(Eigen::Index i) const { return parities_.at(static_cast<std::size_t>(i)); }
  const std::string& name(Eigen::Index i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<Parity>& parities() const { return parities_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Dual basis: labels starred, parities copied.
  GradedBasis dual() const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.names_ == b.names_ && a.parities_ == b.parities_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
};

/// An even linear map between graded bases; evenness (no entry mixing
/// parities) is enforced at construction.
class GradedMap {
 public:
  GradedMap(Mat matrix, GradedBasis source, GradedBasis target);
  static GradedMap identity(const GradedBasis& basis);

  const Mat& matrix() const { return matrix_; }
  const GradedBasis& source() const { return source_; }
  const GradedBasis& target() const { return target_; }

  Vec apply(const Vec& v) const { return matrix_ * v; }
  GradedMap compose(const GradedMap& inner) const;  // this o inner
  /// Integer power (endomorphisms only). Negative powers require
  /// invertibility and throw std::domain_error otherwise.
  GradedMap pow(int exponent) const;

 private:
  Mat matrix_;
  GradedBasis source_, target_;
};

/// Sign making f(x_{perm[0]},...,x_{perm[k-1]}) = sign * f(x_0,...,x_{k-1})
/// for a super-alternating f; each adjacent transposition of arguments with
/// parities p, q contributes -(-1)^{pq}.
int koszul_sign(const std::vector<Parity>& parities, const std::vector<int>& permutation);

/// Sorted index tuple with the accumulated Koszul sign, or the zero marker
/// when an even index repeats. Odd indices may repeat.
struct CanonicalTuple {
  bool zero = false;
  std::vector<int> indices;
  int sign = 1;
};
CanonicalTuple canonicalize_tuple(const std::vector<int>& indices,
                                  const std::vector<Parity>& basis_parities);

/// All canonical degree-k tuples over a basis with the given parities,
/// in lexicographic order: nondecreasing, even indices strictly increasing.
std::vector<std::vector<int>> canonical_tuples(const std::vector<Parity>& basis_parities, int k);

/// A degree-k super-alternating multilinear map into a graded module,
/// stored on canonical index tuples.
class CochainTable {
 public:
  CochainTable(int degree, std::vector<Parity> arg_parities, std::vector<Parity> module_parities,
               Parity theta);

  int degree() const { return degree_; }
  Parity theta() const { return theta_; }
  Eigen::Index module_dim() const { return static_cast<Eigen::Index>(module_parities_.size()); }
  const std::vector<Parity>& arg_parities() const { return arg_parities_; }
  const std::vector<Parity>& module_parities() const { return module_parities_; }
  const std::map<std::vector<int>, Vec>& entries() const { return entries_; }

  /// Stores value on the canonicalization of `indices` (sign applied).
  /// Throws if the value leaves the (sum-of-arg-parities + theta) component.
  void set(const std::vector<int>& indices, const Vec& value);
  void add(const std::vector<int>& indices, const Vec& value);

  /// Sign-adjusted lookup; zero vector on the zero marker.
  Vec eval(const std::vector<int>& indices) const;
  /// Multilinear extension to arbitrary argument vectors.
  Vec eval_vectors(const std::vector<Vec>& args) const;

  bool is_zero() const;

  CochainTable& operator+=(const CochainTable& other);
  CochainTable& operator*=(const Rat& c);
  friend CochainTable operator-(CochainTable a, const CochainTable& b);
  friend bool operator==(const CochainTable& a, const CochainTable& b);

  /// Coordinates over (canonical tuple) x (module index) slots, tuples in
  /// canonical_tuples order.
  Vec coordinates(const std::vector<std::vector<int>>& tuples) const;

 private:
  int degree_;
  std::vector<Parity> arg_parities_;
  std::vector<Parity> module_parities_;
  Parity theta_;
  std::map<std::vector<int>, Vec> entries_;
};

}  // namespace homsuper

#endif
