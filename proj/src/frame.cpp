#include "latdim/frame.hpp"

#include <sstream>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"

namespace latdim {

namespace {

// pi^d(gamma) applied to a stacked vector of d windows.
Vector apply_super(const Matrix& pi, const Vector& g, std::size_t d) {
  const auto dim = pi.rows();
  Vector out(g.size());
  for (std::size_t j = 0; j < d; ++j)
    out.segment(dim * static_cast<Eigen::Index>(j), dim) = pi * g.segment(dim * static_cast<Eigen::Index>(j), dim);
  return out;
}

Matrix super_matrix(const Matrix& pi, std::size_t d) {
  const auto dim = pi.rows();
  const auto big = dim * static_cast<Eigen::Index>(d);
  Matrix m = Matrix::Zero(big, big);
  for (std::size_t j = 0; j < d; ++j)
    m.block(dim * static_cast<Eigen::Index>(j), dim * static_cast<Eigen::Index>(j), dim, dim) = pi;
  return m;
}

}  // namespace

Vector MultiwindowSystem::window(std::size_t i, std::size_t j) const {
  const auto dim = static_cast<Eigen::Index>(rep.dim());
  return generators.col(static_cast<Eigen::Index>(i)).segment(dim * static_cast<Eigen::Index>(j), dim);
}

MultiwindowSystem make_system(ProjectiveRep rep, Subgroup lattice, std::size_t n, std::size_t d,
                              Matrix generators) {
  if (n == 0 || d == 0) throw Error(ErrorCode::InvalidInput, "n and d must be positive");
  if (!lattice.parent().same_as(rep.group()))
    throw Error(ErrorCode::InvalidInput, "lattice is not a subgroup of the representation's group");
  if (static_cast<std::size_t>(generators.rows()) != d * rep.dim() ||
      static_cast<std::size_t>(generators.cols()) != n) {
    std::ostringstream os;
    os << "generator matrix is " << generators.rows() << "x" << generators.cols() << ", expected "
       << d * rep.dim() << "x" << n;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  return MultiwindowSystem{std::move(rep), std::move(lattice), n, d, std::move(generators)};
}

Matrix analysis_matrix(const MultiwindowSystem& sys) {
  const auto& elems = sys.lattice.elements();
  const auto k = elems.size();
  Matrix c(static_cast<Eigen::Index>(sys.n * k), static_cast<Eigen::Index>(sys.d * sys.rep.dim()));
  for (std::size_t i = 0; i < sys.n; ++i) {
    const Vector g = sys.generators.col(static_cast<Eigen::Index>(i));
    for (std::size_t gamma = 0; gamma < k; ++gamma)
      c.row(static_cast<Eigen::Index>(i * k + gamma)) = apply_super(sys.rep(elems[gamma]), g, sys.d).adjoint();
  }
  return c;
}

FrameReport frame_report(const MultiwindowSystem& sys, const Tolerances& tol) {
  const Matrix c = analysis_matrix(sys);
  Eigen::BDCSVD<Matrix> svd(c);
  const auto& s = svd.singularValues();
  FrameReport rep;
  if (s.size() == 0) return rep;
  const double top = s(0) * s(0);
  const double bottom = s(s.size() - 1) * s(s.size() - 1);
  rep.upper = rep.riesz_upper = top;
  rep.lower = c.cols() > c.rows() ? 0.0 : bottom;
  rep.riesz_lower = c.rows() > c.cols() ? 0.0 : bottom;
  rep.is_frame = top > 0.0 && rep.lower > tol.frame * top;
  rep.is_riesz_sequence = top > 0.0 && rep.riesz_lower > tol.frame * top;
  rep.is_riesz_basis = rep.is_frame && rep.is_riesz_sequence && c.rows() == c.cols();
  return rep;
}

ExistenceDecision existence_decision(const PhiFunction& phi, const Cocycle& restricted, std::size_t n,
                                     std::size_t d, const Tolerances& tol) {
  if (n == 0 || d == 0) throw Error(ErrorCode::InvalidInput, "n and d must be positive");
  Vector target = Vector::Zero(phi.values.size());
  target(restricted.group().identity()) = static_cast<double>(n) / static_cast<double>(d);
  ExistenceDecision out;
  out.phi = phi;
  out.frame_witness = is_sigma_positive_definite(target - phi.values, restricted, tol);
  out.riesz_witness = is_sigma_positive_definite(phi.values - target, restricted, tol);
  out.basis_residual = (phi.values - target).cwiseAbs().maxCoeff();
  out.frame = out.frame_witness.psd;
  out.riesz = out.riesz_witness.psd;
  out.basis = out.basis_residual <= 1e-9;
  return out;
}

ExistenceDecision existence_decision(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                     const Tolerances& tol) {
  return existence_decision(phi(spec, tol), spec.restricted, n, d, tol);
}

bool riesz_basis_criterion(const PhiFunction& phi, std::size_t n, std::size_t d) {
  const double ratio = static_cast<double>(n) / static_cast<double>(d);
  for (Eigen::Index i = 0; i < phi.values.size(); ++i) {
    const Complex target = i == static_cast<Eigen::Index>(phi.identity) ? Complex{ratio, 0.0} : Complex{0.0, 0.0};
    if (std::abs(phi.values(i) - target) > 1e-9) return false;
  }
  return true;
}

bool riesz_basis_criterion(const ModuleSpec& spec, std::size_t n, std::size_t d) {
  return riesz_basis_criterion(phi(spec), n, d);
}

// ---------------------------------------------------------------------------

BlockMatcher::BlockMatcher(const ProjectiveRep& rep, const Subgroup& lattice, std::uint64_t seed)
    : local_(restrict_to_lattice(rep, lattice)),
      regular_(regular_as_rep(local_.cocycle())),
      dec_h_(decompose(local_, seed)),
      dec_r_(decompose(regular_, seed + 1)) {
  type_of_h_.assign(dec_h_.types.size(), 0);
  for (std::size_t th = 0; th < dec_h_.types.size(); ++th) {
    bool found = false;
    for (std::size_t tr = 0; tr < dec_r_.types.size() && !found; ++tr)
      if (std::abs(character_inner(dec_h_.types[th], dec_r_.types[tr]) - 1.0) < 1e-6) {
        type_of_h_[th] = tr;
        found = true;
      }
    if (!found) throw Error(ErrorCode::Internal, "module type missing from the regular representation");
  }
  mult_r_ = dec_r_.multiplicities();
  mult_h_.assign(mult_r_.size(), 0);
  for (const auto& b : dec_h_.blocks) ++mult_h_[type_of_h_[b.type]];

  std::vector<std::size_t> ref(dec_r_.types.size());
  for (std::size_t t = 0; t < ref.size(); ++t) ref[t] = dec_r_.blocks_of_type(t).front();
  for (const auto& b : dec_h_.blocks) {
    const auto& target = dec_r_.blocks[ref[type_of_h_[b.type]]].basis;
    h_to_ref_.push_back(block_intertwiner(local_, b.basis, regular_, target));
  }
  for (const auto& b : dec_r_.blocks)
    ref_to_r_.push_back(block_intertwiner(regular_, dec_r_.blocks[ref[b.type]].basis, regular_, b.basis));
}

bool BlockMatcher::embeds_module(std::size_t n, std::size_t d) const {
  for (std::size_t t = 0; t < mult_r_.size(); ++t)
    if (d * mult_h_[t] > n * mult_r_[t]) return false;
  return true;
}

bool BlockMatcher::embeds_regular(std::size_t n, std::size_t d) const {
  for (std::size_t t = 0; t < mult_r_.size(); ++t)
    if (n * mult_r_[t] > d * mult_h_[t]) return false;
  return true;
}

Matrix BlockMatcher::assemble(std::size_t n, std::size_t d) const {
  const auto dim = static_cast<Eigen::Index>(local_.dim());
  const auto k = static_cast<Eigen::Index>(regular_.dim());
  Matrix t = Matrix::Zero(k * static_cast<Eigen::Index>(n), dim * static_cast<Eigen::Index>(d));
  for (std::size_t type = 0; type < mult_r_.size(); ++type) {
    // Copies are listed with the copy index outermost, then block order.
    std::vector<std::pair<std::size_t, std::size_t>> h_copies, r_copies;
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t hb = 0; hb < dec_h_.blocks.size(); ++hb)
        if (type_of_h_[dec_h_.blocks[hb].type] == type) h_copies.emplace_back(c, hb);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t rb : dec_r_.blocks_of_type(type)) r_copies.emplace_back(i, rb);
    const std::size_t pairs = std::min(h_copies.size(), r_copies.size());
    for (std::size_t p = 0; p < pairs; ++p) {
      const auto [c, hb] = h_copies[p];
      const auto [i, rb] = r_copies[p];
      const Matrix w = ref_to_r_[rb] * h_to_ref_[hb];
      t.block(k * static_cast<Eigen::Index>(i), dim * static_cast<Eigen::Index>(c), k, dim) +=
          dec_r_.blocks[rb].basis * w * dec_h_.blocks[hb].basis.adjoint();
    }
  }
  return t;
}

Matrix BlockMatcher::module_into_regular(std::size_t n, std::size_t d) const {
  if (!embeds_module(n, d)) {
    std::ostringstream os;
    os << "H_pi^" << d << " does not embed into l2(lattice)^" << n;
    throw Error(ErrorCode::Infeasible, os.str());
  }
  return assemble(n, d);
}

Matrix BlockMatcher::regular_into_module(std::size_t n, std::size_t d) const {
  if (!embeds_regular(n, d)) {
    std::ostringstream os;
    os << "l2(lattice)^" << n << " does not embed into H_pi^" << d;
    throw Error(ErrorCode::Infeasible, os.str());
  }
  return assemble(n, d).adjoint();
}

namespace {

// Column i is the image of delta_e (x) e_i under the adjoint of t.
Matrix generators_from(const Matrix& t, std::size_t n, std::size_t lattice_order) {
  Matrix g(t.cols(), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    g.col(static_cast<Eigen::Index>(i)) = t.row(static_cast<Eigen::Index>(i * lattice_order)).adjoint();
  return g;
}

}  // namespace

MultiwindowSystem construct_parseval_generators(const ModuleSpec& spec, const BlockMatcher& matcher,
                                                std::size_t n, std::size_t d) {
  const auto decision = existence_decision(spec, n, d);
  if (!decision.frame) {
    std::ostringstream os;
    os << "no " << n << "-multiwindow " << d << "-super frame exists (min eigenvalue "
       << decision.frame_witness.min_eigenvalue << ")";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  if (!matcher.embeds_module(n, d))
    throw Error(ErrorCode::Internal, "frame criterion and block multiplicities disagree");
  const Matrix t = matcher.module_into_regular(n, d);
  return make_system(spec.rep, spec.lattice, n, d, generators_from(t, n, spec.lattice.order()));
}

MultiwindowSystem construct_parseval_generators(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                                std::uint64_t seed) {
  const auto decision = existence_decision(spec, n, d);
  if (!decision.frame) {
    std::ostringstream os;
    os << "no " << n << "-multiwindow " << d << "-super frame exists (min eigenvalue "
       << decision.frame_witness.min_eigenvalue << ")";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  return construct_parseval_generators(spec, BlockMatcher(spec.rep, spec.lattice, seed), n, d);
}

MultiwindowSystem construct_orthonormal_generators(const ModuleSpec& spec, const BlockMatcher& matcher,
                                                   std::size_t n, std::size_t d) {
  const auto decision = existence_decision(spec, n, d);
  if (!decision.riesz) {
    std::ostringstream os;
    os << "no " << n << "-multiwindow " << d << "-super Riesz sequence exists (min eigenvalue "
       << decision.riesz_witness.min_eigenvalue << ")";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  if (!matcher.embeds_regular(n, d))
    throw Error(ErrorCode::Internal, "Riesz criterion and block multiplicities disagree");
  const Matrix t = matcher.regular_into_module(n, d).adjoint();
  return make_system(spec.rep, spec.lattice, n, d, generators_from(t, n, spec.lattice.order()));
}

MultiwindowSystem construct_orthonormal_generators(const ModuleSpec& spec, std::size_t n, std::size_t d,
                                                   std::uint64_t seed) {
  const auto decision = existence_decision(spec, n, d);
  if (!decision.riesz) {
    std::ostringstream os;
    os << "no " << n << "-multiwindow " << d << "-super Riesz sequence exists (min eigenvalue "
       << decision.riesz_witness.min_eigenvalue << ")";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  return construct_orthonormal_generators(spec, BlockMatcher(spec.rep, spec.lattice, seed), n, d);
}

DensityVerdict density_check(const FrameReport& report, std::size_t dim, std::size_t lattice_order,
                             std::size_t n, std::size_t d) {
  DensityVerdict v;
  const std::size_t lhs = dim * d, rhs = n * lattice_order;
  std::ostringstream os;
  if (report.is_frame && lhs > rhs) {
    v.ok = false;
    os << "frame with dpi_vol = " << dim << "/" << lattice_order << " > n/d = " << n << "/" << d;
  }
  if (report.is_riesz_sequence && lhs < rhs) {
    v.ok = false;
    if (!os.str().empty()) os << "; ";
    os << "Riesz sequence with dpi_vol = " << dim << "/" << lattice_order << " < n/d = " << n << "/" << d;
  }
  v.violation = os.str();
  return v;
}

DensityVerdict density_check(const FrameReport& report, const ModuleSpec& spec, std::size_t n, std::size_t d) {
  return density_check(report, spec.rep.dim(), spec.lattice.order(), n, d);
}

Tightening canonical_tightening(const MultiwindowSystem& sys, const Tolerances& tol) {
  if (!frame_report(sys, tol).is_frame)
    throw Error(ErrorCode::PreconditionFailed, "canonical tightening needs a frame");
  const Matrix c = analysis_matrix(sys);
  const Matrix s = c.adjoint() * c;
  const Matrix root = psd_inverse_sqrt(hermitian_part(s));
  Tightening out{make_system(sys.rep, sys.lattice, sys.n, sys.d, root * sys.generators), 0.0};
  for (Element x : sys.lattice.elements()) {
    const Matrix pd = super_matrix(sys.rep(x), sys.d);
    out.commutation_residual = std::max(out.commutation_residual, max_abs_diff(root * pd, pd * root));
  }
  return out;
}

MultiwindowSystem random_system(const ProjectiveRep& rep, const Subgroup& lattice, std::size_t n, std::size_t d,
                                std::mt19937_64& rng) {
  Matrix g = random_complex_normal(static_cast<Eigen::Index>(d * rep.dim()), static_cast<Eigen::Index>(n), rng);
  return make_system(rep, lattice, n, d, std::move(g));
}

}  // namespace latdim
