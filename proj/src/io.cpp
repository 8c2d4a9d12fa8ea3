#include "homsuper/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace homsuper {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
}

Rat scalar_field(const json& j, const std::string& where) {
  if (!j.is_string()) throw std::runtime_error("parse error: " + where + " must be a \"p/q\" string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception& e) {
    throw std::runtime_error("parse error: " + where + ": " + e.what());
  }
}

Eigen::Index index_field(const json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_number_integer())
    throw std::runtime_error("parse error: " + where + " must be an integer index");
  auto v = j.get<long>();
  if (v < 0 || v >= n) throw std::runtime_error("parse error: " + where + " out of range");
  return static_cast<Eigen::Index>(v);
}

Mat matrix_field(const json& j, Eigen::Index n, const std::string& where) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n)
    throw std::runtime_error("parse error: " + where + " must be an " + std::to_string(n) +
                             "-row matrix");
  Mat m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::runtime_error("parse error: " + where + " row " + std::to_string(r) +
                               " has wrong length");
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = scalar_field(row[static_cast<std::size_t>(c)], where + "[" + std::to_string(r) +
                                                                   "][" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

AlgebraDocument parse_algebra_document(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::runtime_error("parse error: document must be an object");
  if (!j.contains("name") || !j["name"].is_string())
    throw std::runtime_error("parse error: missing string field \"name\"");
  if (!j.contains("field") || j["field"] != "rational")
    throw std::runtime_error("parse error: \"field\" must be \"rational\"");
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    throw std::runtime_error("parse error: missing nonempty array \"basis\"");

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (const json& e : j["basis"]) {
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("parity"))
      throw std::runtime_error("parse error: basis entries need \"name\" and \"parity\"");
    names.push_back(e["name"].get<std::string>());
    long p = e["parity"].is_number_integer() ? e["parity"].get<long>() : -1;
    if (p != 0 && p != 1) throw std::runtime_error("parse error: parity must be 0 or 1");
    parities.push_back(p == 0 ? Parity::Even : Parity::Odd);
  }
  GradedBasis basis(std::move(names), std::move(parities));
  const Eigen::Index n = basis.dim();

  if (!j.contains("alpha")) throw std::runtime_error("parse error: missing field \"alpha\"");
  Mat alpha = matrix_field(j["alpha"], n, "alpha");
  GradedMap alpha_map = [&]() {
    try {
      return GradedMap(alpha, basis, basis);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("parse error: alpha: ") + e.what());
    }
  }();

  std::vector<Mat> ad(static_cast<std::size_t>(n), Mat::Zero(n, n));
  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw std::runtime_error("parse error: missing array \"brackets\"");
  for (const json& e : j["brackets"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("coeffs") ||
        !e["coeffs"].is_object())
      throw std::runtime_error("parse error: bracket entries need i, j, coeffs");
    Eigen::Index i = index_field(e["i"], n, "brackets.i");
    Eigen::Index jj = index_field(e["j"], n, "brackets.j");
    for (const auto& [key, val] : e["coeffs"].items()) {
      Eigen::Index k;
      try {
        std::size_t used = 0;
        k = static_cast<Eigen::Index>(std::stol(key, &used));
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::runtime_error("parse error: coeffs key \"" + key + "\" is not an index");
      }
      if (k < 0 || k >= n) throw std::runtime_error("parse error: coeffs key out of range");
      ad[static_cast<std::size_t>(i)](k, jj) = scalar_field(val, "brackets.coeffs");
    }
  }

  AlgebraDocument doc{j["name"].get<std::string>(),
                      HomLieSuperalgebra(std::move(basis), std::move(ad), std::move(alpha_map)),
                      std::nullopt};
  if (j.contains("form")) doc.form = BilinearForm(matrix_field(j["form"], n, "form"));
  return doc;
}

std::string serialize_algebra_document(const AlgebraDocument& doc) {
  const HomLieSuperalgebra& L = doc.algebra;
  const Eigen::Index n = L.dim();
  json j;
  j["name"] = doc.name;
  j["field"] = "rational";
  json basis = json::array();
  for (Eigen::Index i = 0; i < n; ++i)
    basis.push_back({{"name", L.basis().name(i)}, {"parity", parity_int(L.basis().parity(i))}});
  j["basis"] = std::move(basis);
  j["alpha"] = matrix_json(L.alpha().matrix());
  json brackets = json::array();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      Vec v = L.ad(i).col(jj);
      if (v.isZero()) continue;
      json coeffs = json::object();
      for (Eigen::Index k = 0; k < n; ++k)
        if (v(k) != 0) coeffs[std::to_string(k)] = format_scalar(v(k));
      brackets.push_back({{"i", i}, {"j", jj}, {"coeffs", std::move(coeffs)}});
    }
  j["brackets"] = std::move(brackets);
  if (doc.form) j["form"] = matrix_json(doc.form->gram());
  return j.dump(2) + "\n";
}

AlgebraDocument load_algebra_document(const std::string& path) {
  return parse_algebra_document(read_file(path));
}

void save_algebra_document(const std::string& path, const AlgebraDocument& doc) {
  write_file(path, serialize_algebra_document(doc));
}

DualValuedTwoForm parse_two_form(const HomLieSuperalgebra& L, const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw std::runtime_error("parse error: two-form needs an \"entries\" array");
  const Eigen::Index n = L.dim();
  CochainTable t(2, L.basis().parities(), L.basis().parities(), Parity::Even);
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("dual") ||
        !e.contains("value"))
      throw std::runtime_error("parse error: two-form entries need i, j, dual, value");
    int i = static_cast<int>(index_field(e["i"], n, "entries.i"));
    int jj = static_cast<int>(index_field(e["j"], n, "entries.j"));
    Eigen::Index d = index_field(e["dual"], n, "entries.dual");
    Vec add = Vec::Zero(n);
    add(d) = scalar_field(e["value"], "entries.value");
    try {
      t.add({i, jj}, add);
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error(std::string("parse error: two-form entry: ") + ex.what());
    }
  }
  return DualValuedTwoForm::from_table(L, std::move(t));
}

std::string serialize_two_form(const DualValuedTwoForm& omega) {
  json entries = json::array();
  for (const auto& [tuple, value] : omega.table.entries())
    for (Eigen::Index d = 0; d < value.size(); ++d)
      if (value(d) != 0)
        entries.push_back(
            {{"i", tuple[0]}, {"j", tuple[1]}, {"dual", d}, {"value", format_scalar(value(d))}});
  json j;
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

DualValuedTwoForm load_two_form(const HomLieSuperalgebra& L, const std::string& path) {
  return parse_two_form(L, read_file(path));
}

void save_two_form(const std::string& path, const DualValuedTwoForm& omega) {
  write_file(path, serialize_two_form(omega));
}

OneCochainToDual parse_one_cochain(const HomLieSuperalgebra& L, const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw std::runtime_error("parse error: one-cochain needs an \"entries\" array");
  const Eigen::Index n = L.dim();
  CochainTable t(1, L.basis().parities(), L.basis().parities(), Parity::Even);
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("dual") || !e.contains("value"))
      throw std::runtime_error("parse error: one-cochain entries need i, dual, value");
    int i = static_cast<int>(index_field(e["i"], n, "entries.i"));
    Eigen::Index d = index_field(e["dual"], n, "entries.dual");
    Vec add = Vec::Zero(n);
    add(d) = scalar_field(e["value"], "entries.value");
    try {
      t.add({i}, add);
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error(std::string("parse error: one-cochain entry: ") + ex.what());
    }
  }
  return OneCochainToDual::from_table(L, std::move(t));
}

std::string serialize_one_cochain(const OneCochainToDual& z) {
  json entries = json::array();
  for (const auto& [tuple, value] : z.table.entries())
    for (Eigen::Index d = 0; d < value.size(); ++d)
      if (value(d) != 0)
        entries.push_back({{"i", tuple[0]}, {"dual", d}, {"value", format_scalar(value(d))}});
  json j;
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

OneCochainToDual load_one_cochain(const HomLieSuperalgebra& L, const std::string& path) {
  return parse_one_cochain(L, read_file(path));
}

void save_one_cochain(const std::string& path, const OneCochainToDual& z) {
  write_file(path, serialize_one_cochain(z));
}

Mat parse_matrix(Eigen::Index n, const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("matrix"))
    throw std::runtime_error("parse error: expected a \"matrix\" field");
  return matrix_field(j["matrix"], n, "matrix");
}

std::string serialize_matrix(const Mat& m) {
  json j;
  j["matrix"] = matrix_json(m);
  return j.dump(2) + "\n";
}

Mat load_matrix(Eigen::Index n, const std::string& path) {
  return parse_matrix(n, read_file(path));
}

void save_matrix(const std::string& path, const Mat& m) { write_file(path, serialize_matrix(m)); }

Subspace parse_subspace(Eigen::Index ambient, const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
    throw std::runtime_error("parse error: subspace needs a \"vectors\" array");
  const auto& vecs = j["vectors"];
  Mat cols(ambient, static_cast<Eigen::Index>(vecs.size()));
  Eigen::Index c = 0;
  for (const json& v : vecs) {
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != ambient)
      throw std::runtime_error("parse error: subspace vector has wrong length");
    for (Eigen::Index r = 0; r < ambient; ++r)
      cols(r, c) = scalar_field(v[static_cast<std::size_t>(r)], "vectors");
    ++c;
  }
  return Subspace::span(cols);
}

std::string serialize_subspace(const Subspace& s) {
  json vectors = json::array();
  for (Eigen::Index c = 0; c < s.dim(); ++c) {
    json v = json::array();
    for (Eigen::Index r = 0; r < s.ambient(); ++r) v.push_back(format_scalar(s.basis()(r, c)));
    vectors.push_back(std::move(v));
  }
  json j;
  j["vectors"] = std::move(vectors);
  return j.dump(2) + "\n";
}

Subspace load_subspace(Eigen::Index ambient, const std::string& path) {
  return parse_subspace(ambient, read_file(path));
}

void save_subspace(const std::string& path, const Subspace& s) {
  write_file(path, serialize_subspace(s));
}

}  // namespace homsuper
