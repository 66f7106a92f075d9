#include "latdim/twisted_algebra.hpp"

#include <sstream>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"

namespace latdim {

RegularRep left_regular(const Cocycle& c) {
  const auto& g = c.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  RegularRep rep{Side::Left, {}};
  rep.matrices.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Matrix m = Matrix::Zero(n, n);
    for (Element y = 0; y < g.order(); ++y) m(g.mul(x, y), y) = c(x, y);
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

RegularRep right_regular(const Cocycle& c) {
  const auto& g = c.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  RegularRep rep{Side::Right, {}};
  rep.matrices.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Matrix m = Matrix::Zero(n, n);
    for (Element y = 0; y < g.order(); ++y) m(y, g.mul(y, x)) = c(y, x);
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

double verify_commutant(const Cocycle& c) {
  const auto left = left_regular(c);
  const auto right = right_regular(conjugate_cocycle(c));
  double worst = 0.0;
  for (const auto& l : left.matrices)
    for (const auto& r : right.matrices) worst = std::max(worst, max_abs_diff(l * r, r * l));
  return worst;
}

namespace {

void require_length(const Vector& v, const Cocycle& c, const char* what) {
  if (static_cast<std::size_t>(v.size()) != c.group().order()) {
    std::ostringstream os;
    os << what << " has length " << v.size() << ", group order is " << c.group().order();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

}  // namespace

Vector twisted_convolution(const Vector& f, const Vector& g, const Cocycle& c) {
  require_length(f, c, "left factor");
  require_length(g, c, "right factor");
  const auto& grp = c.group();
  Vector out = Vector::Zero(f.size());
  for (Element gamma = 0; gamma < grp.order(); ++gamma) {
    Complex acc{0.0, 0.0};
    for (Element p = 0; p < grp.order(); ++p) {
      const Element q = grp.mul(grp.inv(p), gamma);
      acc += c(p, q) * f(p) * g(q);
    }
    out(gamma) = acc;
  }
  return out;
}

Matrix convolution_matrix(const Vector& phi, const Cocycle& c) {
  require_length(phi, c, "function");
  const auto& g = c.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  Matrix m = Matrix::Zero(n, n);
  for (Element p = 0; p < g.order(); ++p) {
    if (phi(p) == Complex{0.0, 0.0}) continue;
    for (Element u = 0; u < g.order(); ++u) m(g.mul(p, u), u) += c(p, u) * phi(p);
  }
  return m;
}

AlgebraElement::AlgebraElement(Cocycle cocycle, Vector coeffs)
    : cocycle_(std::move(cocycle)), coeffs_(std::move(coeffs)) {
  require_length(coeffs_, cocycle_, "coefficient vector");
}

AlgebraElement AlgebraElement::unit(const Cocycle& c) { return basis(c, c.group().identity()); }

AlgebraElement AlgebraElement::basis(const Cocycle& c, Element gamma) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(c.group().order()));
  v(gamma) = 1.0;
  return AlgebraElement(c, std::move(v));
}

AlgebraElement AlgebraElement::from_operator(const Cocycle& c, const Matrix& op) {
  return AlgebraElement(c, op.col(c.group().identity()));
}

AlgebraElement AlgebraElement::adjoint() const {
  // lambda(g)* = conj(sigma(g^{-1}, g)) lambda(g^{-1})
  const auto& g = cocycle_.group();
  Vector out = Vector::Zero(coeffs_.size());
  for (Element x = 0; x < g.order(); ++x) {
    const Element xi = g.inv(x);
    out(xi) += std::conj(coeffs_(x)) * std::conj(cocycle_(xi, x));
  }
  return AlgebraElement(cocycle_, std::move(out));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.cocycle_, twisted_convolution(a.coeffs_, b.coeffs_, a.cocycle_));
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.cocycle_, a.coeffs_ + b.coeffs_);
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.cocycle_, a.coeffs_ - b.coeffs_);
}

AlgebraElement operator*(Complex s, const AlgebraElement& a) {
  return AlgebraElement(a.cocycle_, s * a.coeffs_);
}

Complex trace_tau(const AlgebraElement& a) { return a.coeffs()(a.cocycle().group().identity()); }

std::vector<std::vector<std::pair<Element, Complex>>> center_trace_images(const Cocycle& c,
                                                                          const Tolerances& tol) {
  const auto& g = c.group();
  const auto reg = regularity(c, tol);
  std::vector<std::vector<std::pair<Element, Complex>>> images(g.order());
  for (Element gamma = 0; gamma < g.order(); ++gamma) {
    if (!reg.regular_elements[gamma]) continue;
    const auto betas = centralizer_transversal(g, gamma);
    const double inv_size = 1.0 / static_cast<double>(betas.size());
    for (Element beta : betas)
      images[gamma].emplace_back(g.conjugate(gamma, beta), tilde(c, gamma, beta) * inv_size);
  }
  return images;
}

AlgebraElement center_valued_trace(const AlgebraElement& a, const Tolerances& tol) {
  const auto images = center_trace_images(a.cocycle(), tol);
  Vector out = Vector::Zero(a.coeffs().size());
  for (std::size_t gamma = 0; gamma < images.size(); ++gamma) {
    const Complex coef = a.coeffs()(static_cast<Eigen::Index>(gamma));
    if (coef == Complex{0.0, 0.0}) continue;
    for (const auto& [target, value] : images[gamma]) out(target) += coef * value;
  }
  return AlgebraElement(a.cocycle(), std::move(out));
}

AlgebraElement center_valued_trace_oracle(const AlgebraElement& a) {
  const auto left = left_regular(a.cocycle());
  const Matrix avg = conjugation_average(a.operator_matrix(), left.matrices);
  return AlgebraElement::from_operator(a.cocycle(), avg);
}

PsdVerdict is_sigma_positive_definite(const Vector& phi, const Cocycle& c, const Tolerances& tol) {
  const Matrix m = convolution_matrix(phi, c);
  PsdVerdict verdict;
  verdict.asymmetry = hermitian_residual(m);
  const Matrix h = hermitian_part(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  const double norm = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  verdict.min_eigenvalue = values.size() ? values(0) : 0.0;
  verdict.tolerance = tol.psd * std::max(1.0, norm);
  const double scale = m.size() ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
  verdict.psd = verdict.asymmetry <= tol.hermitian * scale && verdict.min_eigenvalue >= -verdict.tolerance;
  return verdict;
}

std::size_t center_dimension(const Cocycle& c) {
  auto mats = left_regular(c).matrices;
  auto right = right_regular(conjugate_cocycle(c)).matrices;
  mats.insert(mats.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  return monomial_commutant_dimension(mats);
}

}  // namespace latdim
