#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotband {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;
using Rational = boost::multiprecision::cpp_rational;

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form U * M * V = D.
///
/// `factors` holds the min(rows, cols) diagonal entries of D, nonnegative and
/// forming a divisibility chain d_1 | d_2 | ... (zeros last). U and V are
/// unimodular.
struct SnfResult {
  std::vector<BigInt> factors;
  IntMatrix left;      // U, rows x rows
  IntMatrix right;     // V, cols x cols
  IntMatrix diagonal;  // D, rows x cols
};

/// Throws std::logic_error if the internal U*M*V == D check fails.
SnfResult smith_normal_form(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination; the matrix must be square.
BigInt determinant(const IntMatrix& m);

/// Signature (positive minus negative eigenvalue count) of a symmetric integer
/// matrix, computed exactly by congruence diagonalization over the rationals.
int symmetric_signature(const IntMatrix& m);

/// Solves M x = b exactly for square M. Throws std::domain_error when M is singular.
std::vector<Rational> solve(const IntMatrix& m, const std::vector<BigInt>& b);

}  // namespace knotband
