#ifndef HOMSUPER_IO_HPP
#define HOMSUPER_IO_HPP

#include <string>

#include "homsuper/tstar.hpp"

namespace homsuper {

/// An algebra as shipped in a document: a label, the structure constants,
/// and optionally a Gram matrix for quadratic inputs. Parsing only checks
/// shape and evenness; the axioms are the validator's job.
struct AlgebraDocument {
  std::string name;
  HomLieSuperalgebra algebra;
  std::optional<BilinearForm> form;
};

/// Documents are JSON with a fixed key order (name, field, basis, alpha,
/// brackets[, form]); scalars are lowest-terms "p/q" strings, zero bracket
/// entries are omitted, and serialize(parse(text)) == text for canonical
/// input. Malformed input throws std::runtime_error naming the offending
/// field.
AlgebraDocument parse_algebra_document(const std::string& text);
std::string serialize_algebra_document(const AlgebraDocument& doc);
AlgebraDocument load_algebra_document(const std::string& path);
void save_algebra_document(const std::string& path, const AlgebraDocument& doc);

/// Sparse entry lists {"entries": [{i, j, dual, value}]} over canonical
/// index pairs (i <= j), and {"entries": [{i, dual, value}]} for 1-cochains.
DualValuedTwoForm parse_two_form(const HomLieSuperalgebra& L, const std::string& text);
std::string serialize_two_form(const DualValuedTwoForm& omega);
DualValuedTwoForm load_two_form(const HomLieSuperalgebra& L, const std::string& path);
void save_two_form(const std::string& path, const DualValuedTwoForm& omega);

OneCochainToDual parse_one_cochain(const HomLieSuperalgebra& L, const std::string& text);
std::string serialize_one_cochain(const OneCochainToDual& z);
OneCochainToDual load_one_cochain(const HomLieSuperalgebra& L, const std::string& path);
void save_one_cochain(const std::string& path, const OneCochainToDual& z);

/// {"matrix": [[...], ...]} of "p/q" strings, row-major.
Mat parse_matrix(Eigen::Index n, const std::string& text);
std::string serialize_matrix(const Mat& m);
Mat load_matrix(Eigen::Index n, const std::string& path);
void save_matrix(const std::string& path, const Mat& m);

/// {"vectors": [[...], ...]} spanning columns in the algebra's coordinates.
Subspace parse_subspace(Eigen::Index ambient, const std::string& text);
std::string serialize_subspace(const Subspace& s);
Subspace load_subspace(Eigen::Index ambient, const std::string& path);
void save_subspace(const std::string& path, const Subspace& s);

}  // namespace homsuper

#endif
