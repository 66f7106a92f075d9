#include "latdim/projective_rep.hpp"

#include <random>
#include <sstream>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"

namespace latdim {

ProjectiveRep::ProjectiveRep(Cocycle cocycle, std::vector<Matrix> matrices, std::string label)
    : cocycle_(std::move(cocycle)), matrices_(std::move(matrices)), label_(std::move(label)) {
  if (matrices_.size() != cocycle_.group().order()) {
    std::ostringstream os;
    os << "expected " << cocycle_.group().order() << " matrices, got " << matrices_.size();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  dim_ = static_cast<std::size_t>(matrices_.front().rows());
  for (std::size_t x = 0; x < matrices_.size(); ++x) {
    const auto& m = matrices_[x];
    if (static_cast<std::size_t>(m.rows()) != dim_ || static_cast<std::size_t>(m.cols()) != dim_) {
      std::ostringstream os;
      os << "matrix for element " << x << " is " << m.rows() << "x" << m.cols() << ", expected " << dim_
         << "x" << dim_;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
  }
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "representation has dimension 0");
}

RepReport validate_rep(const ProjectiveRep& r, double tol) {
  RepReport rep;
  const auto& g = r.group();
  const auto ident = Matrix::Identity(static_cast<Eigen::Index>(r.dim()), static_cast<Eigen::Index>(r.dim()));
  double worst_unit = -1.0;
  for (Element x = 0; x < g.order(); ++x) {
    const double res = max_abs_diff(r(x).adjoint() * r(x), ident);
    rep.max_unitary_residual = std::max(rep.max_unitary_residual, res);
    if (res > tol && res > worst_unit) {
      worst_unit = res;
      rep.worst_x = rep.worst_y = x;
    }
  }
  Element wx = 0, wy = 0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const double res = max_abs_diff(r(x) * r(y), r.cocycle()(x, y) * r(g.mul(x, y)));
      if (res > rep.max_composition_residual) {
        rep.max_composition_residual = res;
        wx = x;
        wy = y;
      }
    }
  std::ostringstream os;
  if (rep.max_unitary_residual > tol) {
    rep.valid = false;
    os << "pi(" << rep.worst_x << ") is not unitary (residual " << rep.max_unitary_residual << ")";
  } else if (rep.max_composition_residual > tol) {
    rep.valid = false;
    rep.worst_x = wx;
    rep.worst_y = wy;
    os << "pi(" << wx << ") pi(" << wy << ") != sigma(" << wx << "," << wy << ") pi(" << g.mul(wx, wy)
       << ") (residual " << rep.max_composition_residual << ")";
  }
  rep.message = os.str();
  return rep;
}

IrreducibilityReport is_irreducible(const ProjectiveRep& r) {
  // Projective phases are scalars, so commuting with pi on a generating set
  // is the same as commuting with every pi(x).
  const auto& g = r.group();
  std::vector<Element> gens;
  std::vector<char> reached(g.order(), 0);
  reached[g.identity()] = 1;
  for (Element x = 0; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    const auto span = subgroup_generated(g, gens);
    for (Element y : span.elements()) reached[y] = 1;
  }
  std::vector<Matrix> mats;
  for (Element x : gens) mats.push_back(r(x));
  if (mats.empty()) mats.push_back(r(g.identity()));
  IrreducibilityReport rep;
  rep.commutant_dim = commutant_dimension(mats);
  rep.irreducible = rep.commutant_dim == 1;
  return rep;
}

namespace {

// <a, b>, linear in the first argument.
Complex inner(const Vector& a, const Vector& b) { return b.dot(a); }

}  // namespace

double schur_residual(const ProjectiveRep& r, const Vector& xi, const Vector& xi2, const Vector& eta,
                      const Vector& eta2) {
  Complex lhs{0.0, 0.0};
  for (Element x = 0; x < r.group().order(); ++x)
    lhs += inner(xi, r(x) * eta) * std::conj(inner(xi2, r(x) * eta2));
  const double inv_d = static_cast<double>(r.group().order()) / static_cast<double>(r.dim());
  const Complex rhs = inv_d * inner(xi, xi2) * std::conj(inner(eta, eta2));
  return std::abs(lhs - rhs);
}

double formal_dimension(const ProjectiveRep& r, std::uint64_t seed) {
  const auto irr = is_irreducible(r);
  if (!irr.irreducible) {
    std::ostringstream os;
    os << "representation has commutant of dimension " << irr.commutant_dim;
    throw Error(ErrorCode::NotIrreducible, os.str());
  }
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(r.dim());
  for (int trial = 0; trial < 3; ++trial) {
    const Vector a = random_complex_normal(n, 1, rng), b = random_complex_normal(n, 1, rng);
    const Vector c = random_complex_normal(n, 1, rng), e = random_complex_normal(n, 1, rng);
    const double res = schur_residual(r, a, b, c, e);
    const double scale = std::max(1.0, a.norm() * b.norm() * c.norm() * e.norm() *
                                           static_cast<double>(r.group().order()));
    if (res > 1e-8 * scale) {
      std::ostringstream os;
      os << "orthogonality relations fail (residual " << res << ")";
      throw Error(ErrorCode::Internal, os.str());
    }
  }
  return static_cast<double>(r.dim()) / static_cast<double>(r.group().order());
}

WaveletTransform wavelet(const ProjectiveRep& r, const Vector& eta) {
  if (static_cast<std::size_t>(eta.size()) != r.dim())
    throw Error(ErrorCode::DimensionMismatch, "window length does not match the representation");
  if (std::abs(eta.norm() - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "window has norm " << eta.norm();
    throw Error(ErrorCode::WindowNotUnit, os.str());
  }
  const auto& g = r.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  const auto dim = static_cast<Eigen::Index>(r.dim());
  Matrix v(n, dim);
  for (Element x = 0; x < g.order(); ++x) v.row(x) = (r(x) * eta).adjoint();

  WaveletTransform w{r, eta, v, 0.0, 0.0};
  const auto left = left_regular(r.cocycle());
  for (Element x = 0; x < g.order(); ++x)
    w.intertwining_residual = std::max(w.intertwining_residual, max_abs_diff(v * r(x), left.matrices[x] * v));
  const double d = static_cast<double>(r.dim()) / static_cast<double>(g.order());
  w.isometry_residual = max_abs_diff(d * (v.adjoint() * v), Matrix::Identity(dim, dim));
  if (w.intertwining_residual > 1e-8) {
    std::ostringstream os;
    os << "wavelet transform does not intertwine (residual " << w.intertwining_residual << ")";
    throw Error(ErrorCode::Internal, os.str());
  }
  if (w.isometry_residual > 1e-8) {
    std::ostringstream os;
    os << "scaled wavelet transform is not an isometry (residual " << w.isometry_residual << ")";
    throw Error(ErrorCode::NotIrreducible, os.str());
  }
  return w;
}

ProjectiveRep restrict_to_lattice(const ProjectiveRep& r, const Subgroup& h) {
  std::vector<Matrix> mats;
  mats.reserve(h.order());
  for (Element x : h.elements()) mats.push_back(r(x));
  return ProjectiveRep(restrict(r.cocycle(), h), std::move(mats), r.label());
}

double projective_conjugation_residual(const ProjectiveRep& r) {
  const auto& g = r.group();
  double worst = 0.0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const Matrix lhs = r(y).adjoint() * r(x) * r(y);
      worst = std::max(worst, max_abs_diff(lhs, tilde(r.cocycle(), x, y) * r(g.conjugate(x, y))));
    }
  return worst;
}

ProjectiveRep regular_as_rep(const Cocycle& c, Side side) {
  auto reg = side == Side::Left ? left_regular(c) : right_regular(c);
  return ProjectiveRep(c, std::move(reg.matrices), side == Side::Left ? "left-regular" : "right-regular");
}

ProjectiveRep direct_sum(const ProjectiveRep& r, std::size_t copies) {
  if (copies == 0) throw Error(ErrorCode::InvalidInput, "direct sum needs at least one copy");
  const auto dim = static_cast<Eigen::Index>(r.dim());
  std::vector<Matrix> mats;
  mats.reserve(r.matrices().size());
  for (const auto& m : r.matrices()) {
    Matrix big = Matrix::Zero(dim * static_cast<Eigen::Index>(copies), dim * static_cast<Eigen::Index>(copies));
    for (std::size_t k = 0; k < copies; ++k) big.block(dim * k, dim * k, dim, dim) = m;
    mats.push_back(std::move(big));
  }
  return ProjectiveRep(r.cocycle(), std::move(mats), r.label());
}

std::vector<Complex> character_of(const ProjectiveRep& r) {
  std::vector<Complex> chi;
  chi.reserve(r.matrices().size());
  for (const auto& m : r.matrices()) chi.push_back(m.trace());
  return chi;
}

}  // namespace latdim
