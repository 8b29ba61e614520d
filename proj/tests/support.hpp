#pragma once

// Shared helpers for the unit and acceptance suites: seeded random data,
// the template library of known solvable/nilpotent algebras, and a tiny
// process runner for CLI round-trips. Framework-free.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "construct.hpp"
#include "lie_algebra.hpp"

namespace testsupport {

using prl::LieAlgebra;
using prl::Matrix;
using prl::Rational;
using prl::Vec;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_num = 3, long max_den = 3) {
  const long num = static_cast<long>(rng() % (2 * max_num + 1)) - max_num;
  const long den = 1 + static_cast<long>(rng() % max_den);
  return Rational(num, den);
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long max_num = 3,
                            long max_den = 3) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng, max_num, max_den);
  return m;
}

/// Invertible by construction: unit lower * unit upper * permutation.
inline Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower.at(i, j) = random_rational(rng, 2, 2);
      upper.at(j, i) = random_rational(rng, 2, 2);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.at(perm[i], i) = 1;
  return lower * upper * p;
}

inline Matrix random_symmetric(Rng& rng, std::size_t n, long max_num = 3, long max_den = 2) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v = random_rational(rng, max_num, max_den);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return g;
}

/// Random nondegenerate symmetric Gram matrix (resamples until full rank).
inline Matrix random_nondegenerate_symmetric(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix g = random_symmetric(rng, n);
    if (prl::rank(g) == n) return g;
  }
}

/// Known solvable/nilpotent algebras of dims 2..4, used as seeds for
/// randomized instances (random basis changes preserve the Lie structure).
inline std::vector<LieAlgebra> template_library() {
  using prl::direct_sum;
  std::vector<LieAlgebra> lib;
  lib.push_back(LieAlgebra::abelian(2));
  lib.push_back(prl::catalog_dim2_nonabelian().algebra);  // [x,y] = y
  lib.push_back(LieAlgebra::abelian(3));
  lib.push_back(prl::catalog_heisenberg3(Rational(1)).algebra);
  lib.push_back(prl::catalog_centerless3(Rational(1), Rational(1), Rational(1)).algebra);
  lib.push_back(prl::catalog_centerless3(Rational(-2), Rational(1), Rational(1)).algebra);
  lib.push_back(direct_sum(prl::catalog_dim2_nonabelian().algebra, LieAlgebra::abelian(1)));
  lib.push_back(LieAlgebra::abelian(4));
  lib.push_back(direct_sum(prl::catalog_heisenberg3(Rational(1)).algebra, LieAlgebra::abelian(1)));
  lib.push_back(direct_sum(prl::catalog_dim2_nonabelian().algebra,
                           prl::catalog_dim2_nonabelian().algebra));
  {
    // filiform n4: [e1,e2] = e3, [e1,e3] = e4
    std::vector<Rational> t(64);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, int v) {
      t[(i * 4 + j) * 4 + k] = v;
      t[(j * 4 + i) * 4 + k] = -v;
    };
    set(0, 1, 2, 1);
    set(0, 2, 3, 1);
    lib.push_back(LieAlgebra({"e1", "e2", "e3", "e4"}, std::move(t)));
  }
  {
    // almost-abelian r4: [e1,ek] = ek for k = 2..4
    std::vector<Rational> t(64);
    for (std::size_t k = 1; k < 4; ++k) {
      t[(0 * 4 + k) * 4 + k] = 1;
      t[(k * 4 + 0) * 4 + k] = -1;
    }
    lib.push_back(LieAlgebra({"e1", "e2", "e3", "e4"}, std::move(t)));
  }
  return lib;
}

/// Seeded random (algebra, nondegenerate form) pair of dim 2..4: a template
/// pushed through a random invertible change of basis.
inline std::pair<LieAlgebra, prl::BilinearForm> random_instance(Rng& rng,
                                                                const std::vector<LieAlgebra>& lib) {
  const LieAlgebra& base = lib[rng() % lib.size()];
  LieAlgebra twisted = base.change_basis(random_invertible(rng, base.dim()));
  return {std::move(twisted),
          prl::BilinearForm(random_nondegenerate_symmetric(rng, base.dim()))};
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

/// Runs a command line, captures stdout, returns the exit code.
inline CliResult run_cli(const std::string& command_line) {
  CliResult res;
  FILE* pipe = popen(command_line.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command_line);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int rc = pclose(pipe);
  res.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace testsupport
