#pragma once

#include <random>
#include <span>

#include "latdim/types.hpp"

namespace latdim {

/// (M + M*) / 2
Matrix hermitian_part(const Matrix& m);

/// Largest |entry| of M - M*.
double hermitian_residual(const Matrix& m);

/// Throws NotHermitian when hermitian_residual(m) > tol * max(1, max|m_ij|).
void require_hermitian(const Matrix& m, double tol, const char* what);

/// Ascending eigenvalues of a Hermitian matrix (after require_hermitian).
RealVector hermitian_eigenvalues(const Matrix& m, double tol = 1e-8);

/// Orthonormal basis (columns) of the range of m; singular values below
/// rel_tol * max singular value are treated as zero.
Matrix orthonormal_range(const Matrix& m, double rel_tol = 1e-10);

/// S^{-1/2} on the support of a PSD matrix (pseudo-inverse square root).
Matrix psd_inverse_sqrt(const Matrix& s, double rel_tol = 1e-12);

/// (1/k) sum_u u* a u
Matrix conjugation_average(const Matrix& a, std::span<const Matrix> unitaries);

/// Dimension of {T : T X = X T for all X} by a dense nullity computation.
std::size_t commutant_dimension(std::span<const Matrix> mats, double tol = 1e-9);

/// Same quantity for monomial (phase-permutation) matrices, solved exactly
/// on the orbits of index pairs. Throws InvalidInput on a non-monomial input.
std::size_t monomial_commutant_dimension(std::span<const Matrix> mats, double tol = 1e-9);

/// Entries with independent real and imaginary parts ~ N(0, 1/2).
Matrix random_complex_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);
Vector random_unit_vector(Eigen::Index n, std::mt19937_64& rng);

/// Max |entry| of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace latdim
