#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cx/delta_complex.hpp"

namespace cx {

using Int = boost::multiprecision::cpp_int;

// Exact integer matrices; no floating point anywhere in this module.
struct IntegerMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

IntegerMatrix multiply(const IntegerMatrix& A, const IntegerMatrix& B);
bool is_zero(const IntegerMatrix& A);

struct SnfResult {
  std::vector<Int> factors;  // positive, d1 | d2 | ... | dr
  int rank = 0;
};

/// Invariant factors by gcd-reducing pivots; the divisibility chain holds and
/// the result is independent of pivot choices.
SnfResult smith_normal_form(IntegerMatrix M);

/// Boundary matrices d_1..d_top; entry (tau, sigma) is the signed count of
/// facet incidences sum_i (-1)^i [facet_i(sigma) == tau].
std::vector<IntegerMatrix> boundary_matrices(const DeltaComplex& X);

struct HomologyProfile {
  std::vector<long> betti;             // per dimension 0..top
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per dimension
};

bool operator==(const HomologyProfile& a, const HomologyProfile& b);

HomologyProfile homology_groups(const DeltaComplex& X);

/// Betti numbers over F_p (Gaussian elimination mod p); cross-check only,
/// never a substitute for the integer result.
std::vector<long> betti_mod_p(const DeltaComplex& X, long p);

}  // namespace cx
