#include "latdim/vn_dimension.hpp"

#include <sstream>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"

namespace latdim {

ModuleSpec make_module_spec(ProjectiveRep rep, Subgroup lattice, Vector window) {
  if (!lattice.parent().same_as(rep.group()))
    throw Error(ErrorCode::InvalidInput, "lattice is not a subgroup of the representation's group");
  if (static_cast<std::size_t>(window.size()) != rep.dim())
    throw Error(ErrorCode::DimensionMismatch, "window length does not match the representation");
  if (std::abs(window.norm() - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "window has norm " << window.norm();
    throw Error(ErrorCode::WindowNotUnit, os.str());
  }
  const auto irr = is_irreducible(rep);
  if (!irr.irreducible) {
    std::ostringstream os;
    os << "representation has commutant of dimension " << irr.commutant_dim;
    throw Error(ErrorCode::NotIrreducible, os.str());
  }
  auto restricted = restrict(rep.cocycle(), lattice);
  return ModuleSpec{std::move(rep), std::move(lattice), std::move(restricted), std::move(window)};
}

ModuleSpec make_module_spec(ProjectiveRep rep, Subgroup lattice) {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(rep.dim()));
  e(0) = 1.0;
  return make_module_spec(std::move(rep), std::move(lattice), std::move(e));
}

namespace {

double scalar_dimension(const ModuleSpec& spec) {
  return static_cast<double>(spec.rep.dim()) / static_cast<double>(spec.lattice.order());
}

}  // namespace

PhiFunction phi(const ModuleSpec& spec, const Tolerances& tol) {
  const auto& g = spec.rep.group();
  const auto& sigma = spec.rep.cocycle();
  const auto& elems = spec.lattice.elements();
  const auto reg = regularity(spec.restricted, tol);

  // <eta, pi(x) eta> for every x in G
  std::vector<Complex> coeff(g.order());
  for (Element x = 0; x < g.order(); ++x) coeff[x] = (spec.rep(x) * spec.window).dot(spec.window);

  const double d_pi = static_cast<double>(spec.rep.dim()) / static_cast<double>(g.order());
  PhiFunction out;
  out.dpi_vol = scalar_dimension(spec);
  out.values = Vector::Zero(static_cast<Eigen::Index>(elems.size()));
  out.class_regular = reg.regular_elements;
  out.identity = spec.lattice.as_group().identity();
  for (std::size_t local = 0; local < elems.size(); ++local) {
    if (!reg.regular_elements[local]) continue;
    const Element gamma = elems[local];
    std::vector<Element> cent;
    for (Element y : elems)
      if (g.commute(gamma, y)) cent.push_back(y);
    const std::size_t class_size = elems.size() / cent.size();
    const Subgroup centralizer_in_lattice(g, std::move(cent));
    Complex acc{0.0, 0.0};
    for (Element y : centralizer_in_lattice.right_transversal()) {
      const Element conj = g.conjugate(gamma, y);
      acc += std::conj(sigma(gamma, y)) * sigma(y, conj) * coeff[conj];
    }
    out.values(static_cast<Eigen::Index>(local)) = d_pi / static_cast<double>(class_size) * acc;
  }
  return out;
}

Vector phi_from_embedding(const Cocycle& sigma, const Subgroup& lattice, const Matrix& embedding,
                          std::size_t copies) {
  const auto& g = sigma.group();
  const auto n = g.order();
  if (static_cast<std::size_t>(embedding.rows()) != n * copies)
    throw Error(ErrorCode::DimensionMismatch, "embedding rows must be copies * |G|");
  const Matrix q = orthonormal_range(embedding);
  const auto& elems = lattice.elements();
  const auto k = static_cast<Eigen::Index>(elems.size());

  // Sum of the diagonal blocks p_bb of U* p U, where
  // U(delta_gamma (x) delta_b) = sigma(gamma, b) delta_{gamma b}.
  Matrix block_sum = Matrix::Zero(k, k);
  for (std::size_t c = 0; c < copies; ++c)
    for (Element b : lattice.right_transversal()) {
      Matrix rows(k, q.cols());
      for (Eigen::Index i = 0; i < k; ++i) {
        const Element x = g.mul(elems[static_cast<std::size_t>(i)], b);
        rows.row(i) = std::conj(sigma(elems[static_cast<std::size_t>(i)], b)) *
                      q.row(static_cast<Eigen::Index>(c * n + x));
      }
      block_sum.noalias() += rows * rows.adjoint();
    }

  const auto restricted = restrict(sigma, lattice);
  const auto right = right_regular(conjugate_cocycle(restricted));
  const Matrix center = conjugation_average(block_sum, right.matrices);
  const Element e = lattice.as_group().identity();
  Vector values(k);
  for (Eigen::Index gamma = 0; gamma < k; ++gamma)
    values(gamma) = (right.matrices[static_cast<std::size_t>(gamma)].row(e) * center.col(e))(0, 0);
  return values;
}

Vector phi_oracle_direct_sum(const ModuleSpec& spec, std::size_t copies) {
  const auto w = wavelet(spec.rep, spec.window);
  const auto n = w.matrix.rows();
  const auto dim = w.matrix.cols();
  Matrix emb = Matrix::Zero(n * static_cast<Eigen::Index>(copies), dim * static_cast<Eigen::Index>(copies));
  for (std::size_t c = 0; c < copies; ++c)
    emb.block(n * static_cast<Eigen::Index>(c), dim * static_cast<Eigen::Index>(c), n, dim) = w.matrix;
  return phi_from_embedding(spec.rep.cocycle(), spec.lattice, emb, copies);
}

PhiFunction phi_oracle(const ModuleSpec& spec) {
  PhiFunction out;
  out.dpi_vol = scalar_dimension(spec);
  out.values = phi_oracle_direct_sum(spec, 1);
  out.class_regular = regularity(spec.restricted).regular_elements;
  out.identity = spec.lattice.as_group().identity();
  return out;
}

Matrix cdim_operator(const PhiFunction& phi, const Cocycle& restricted) {
  Matrix m = convolution_matrix(phi.values, restricted);
  require_hermitian(m, 1e-9, "cdim operator");
  return hermitian_part(m);
}

PhiFunction abelian_kleppner_shortcut(const ModuleSpec& spec, const Tolerances& tol) {
  if (!spec.rep.group().is_abelian())
    throw Error(ErrorCode::PreconditionFailed, "group is not abelian");
  const auto reg = regularity(spec.rep.cocycle(), tol);
  if (!reg.kleppner) throw Error(ErrorCode::PreconditionFailed, "Kleppner's condition fails on the group");
  PhiFunction out;
  out.dpi_vol = scalar_dimension(spec);
  out.values = Vector::Zero(static_cast<Eigen::Index>(spec.lattice.order()));
  out.values(spec.lattice.as_group().identity()) = out.dpi_vol;
  out.class_regular = regularity(spec.restricted, tol).regular_elements;
  out.identity = spec.lattice.as_group().identity();
  return out;
}

}  // namespace latdim
