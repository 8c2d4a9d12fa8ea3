#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "homsuper/io.hpp"

namespace helpers {

using namespace homsuper;

inline AlgebraDocument fixture(const std::string& name) {
  return load_algebra_document(std::string(FIXTURE_DIR) + "/" + name + ".json");
}

/// Rlambda with an arbitrary twist eigenvalue on the odd generator.
inline HomLieSuperalgebra rlambda(const Rat& lambda) {
  GradedBasis b({"e", "f"}, {Parity::Even, Parity::Odd});
  Mat ade = Mat::Zero(2, 2), adf = Mat::Zero(2, 2);
  ade(1, 1) = 1;
  adf(1, 0) = -1;
  Mat A = Mat::Zero(2, 2);
  A(0, 0) = 1;
  A(1, 1) = lambda;
  return HomLieSuperalgebra(b, {ade, adf}, GradedMap(A, b, b));
}

/// Deterministic small rationals for property sampling.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  Rat rat() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    return Rat(num(gen_), den(gen_));
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Vec vec(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rat();
    return v;
  }
  Mat mat(Eigen::Index r, Eigen::Index c) {
    Mat m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rat();
    return m;
  }

 private:
  std::mt19937 gen_;
};

/// Random element of the span of a cochain basis (empty basis gives nothing).
inline std::optional<CochainTable> random_combination(const std::vector<CochainTable>& basis,
                                                      Rng& rng) {
  if (basis.empty()) return std::nullopt;
  CochainTable out = basis.front();
  out *= rng.rat();
  for (std::size_t i = 1; i < basis.size(); ++i) {
    CochainTable term = basis[i];
    term *= rng.rat();
    out += term;
  }
  return out;
}

/// Runs the CLI with the given arguments, capturing stdout+stderr.
struct CliResult {
  int exit_code;
  std::string output;
};

inline CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult res{-1, ""};
  if (!pipe) return res;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace helpers

#endif
