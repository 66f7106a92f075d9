#include "latdim/linalg.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "latdim/error.hpp"

namespace latdim {

Matrix hermitian_part(const Matrix& m) { return (m + m.adjoint()) / 2.0; }

double hermitian_residual(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const Matrix& m, double tol, const char* what) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is not square");
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double r = hermitian_residual(m);
  if (r > tol * scale) {
    std::ostringstream os;
    os << what << " is not self-adjoint (residual " << r << ")";
    throw Error(ErrorCode::NotHermitian, os.str());
  }
}

RealVector hermitian_eigenvalues(const Matrix& m, double tol) {
  require_hermitian(m, tol, "matrix");
  if (m.size() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix orthonormal_range(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = rel_tol * (s.size() ? s(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff && s(rank) > 0.0) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix psd_inverse_sqrt(const Matrix& s, double rel_tol) {
  require_hermitian(s, 1e-8, "frame operator");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(s));
  const auto& values = solver.eigenvalues();
  const double top = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  RealVector inv(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i)
    inv(i) = values(i) > rel_tol * top ? 1.0 / std::sqrt(values(i)) : 0.0;
  const Matrix& v = solver.eigenvectors();
  return v * inv.cast<Complex>().asDiagonal() * v.adjoint();
}

Matrix conjugation_average(const Matrix& a, std::span<const Matrix> unitaries) {
  Matrix acc = Matrix::Zero(a.rows(), a.cols());
  for (const auto& u : unitaries) acc.noalias() += u.adjoint() * a * u;
  return acc / static_cast<double>(unitaries.size());
}

std::size_t commutant_dimension(std::span<const Matrix> mats, double tol) {
  if (mats.empty()) return 0;
  const Eigen::Index k = mats.front().rows();
  const Eigen::Index kk = k * k;
  // vec(XT - TX) = (I (x) X - X^T (x) I) vec(T), column-major vec.
  Matrix gram = Matrix::Zero(kk, kk);
  Matrix op(kk, kk);
  for (const auto& x : mats) {
    op.setZero();
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < k; ++i) {
        const Eigen::Index col = j * k + i;  // unknown T(i,j)
        // (X T)(r, j) gets X(r,i) T(i,j)
        for (Eigen::Index r = 0; r < k; ++r) op(j * k + r, col) += x(r, i);
        // (T X)(i, c) gets T(i,j) X(j,c)
        for (Eigen::Index c = 0; c < k; ++c) op(c * k + i, col) -= x(j, c);
      }
    gram.noalias() += op.adjoint() * op;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::size_t nullity = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values(i) < tol * scale) ++nullity;
  return nullity;
}

namespace {

/// Union-find over unknowns with a phase relative to the root:
/// value(node) = phase(node) * value(root).
class PhaseUnionFind {
 public:
  explicit PhaseUnionFind(std::size_t n) : parent_(n), phase_(n, Complex{1.0, 0.0}), bad_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, Complex> find(std::size_t u) {
    Complex acc{1.0, 0.0};
    std::size_t r = u;
    while (parent_[r] != r) {
      acc *= phase_[r];
      r = parent_[r];
    }
    // compress
    Complex running = acc;
    std::size_t v = u;
    while (parent_[v] != v) {
      const std::size_t next = parent_[v];
      const Complex step = phase_[v];
      parent_[v] = r;
      phase_[v] = running;
      running /= step;
      v = next;
    }
    return {r, acc};
  }

  /// Impose value(v) = w * value(u).
  void relate(std::size_t u, std::size_t v, Complex w, double tol) {
    auto [ru, a] = find(u);
    auto [rv, b] = find(v);
    if (ru == rv) {
      if (std::abs(b - w * a) > tol) bad_[ru] = 1;
      return;
    }
    // value(rv) = value(v) / b = w a value(ru) / b
    parent_[rv] = ru;
    phase_[rv] = w * a / b;
    bad_[ru] = static_cast<char>(bad_[ru] | bad_[rv]);
  }

  std::size_t free_components() {
    std::size_t count = 0;
    for (std::size_t u = 0; u < parent_.size(); ++u)
      if (parent_[u] == u && !bad_[u]) ++count;
    return count;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Complex> phase_;
  std::vector<char> bad_;
};

}  // namespace

std::size_t monomial_commutant_dimension(std::span<const Matrix> mats, double tol) {
  if (mats.empty()) return 0;
  const Eigen::Index k = mats.front().rows();
  PhaseUnionFind uf(static_cast<std::size_t>(k * k));
  std::vector<Eigen::Index> target(k);
  std::vector<Complex> coef(k);
  for (const auto& x : mats) {
    for (Eigen::Index j = 0; j < k; ++j) {
      Eigen::Index hits = 0;
      for (Eigen::Index r = 0; r < k; ++r)
        if (std::abs(x(r, j)) > tol) {
          target[j] = r;
          coef[j] = x(r, j);
          ++hits;
        }
      if (hits != 1) throw Error(ErrorCode::InvalidInput, "matrix is not monomial");
    }
    // X A X* = A  <=>  A(p(i), p(j)) = c_i conj(c_j) A(i, j)
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        uf.relate(static_cast<std::size_t>(i * k + j), static_cast<std::size_t>(target[i] * k + target[j]),
                  coef[i] * std::conj(coef[j]), 1e3 * tol);
  }
  return uf.free_components();
}

Matrix random_complex_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

Vector random_unit_vector(Eigen::Index n, std::mt19937_64& rng) {
  Vector v = random_complex_normal(n, 1, rng);
  return v / v.norm();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace latdim
