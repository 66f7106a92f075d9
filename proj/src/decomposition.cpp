#include "latdim/decomposition.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "latdim/error.hpp"
#include "latdim/linalg.hpp"

namespace latdim {

std::vector<std::size_t> Decomposition::multiplicities() const {
  std::vector<std::size_t> mult(types.size(), 0);
  for (const auto& b : blocks) ++mult[b.type];
  return mult;
}

std::vector<std::size_t> Decomposition::blocks_of_type(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].type == t) out.push_back(i);
  return out;
}

Complex character_inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc / static_cast<double>(a.size());
}

namespace {

std::vector<Complex> block_character(const ProjectiveRep& r, const Matrix& basis) {
  std::vector<Complex> chi;
  chi.reserve(r.matrices().size());
  for (const auto& m : r.matrices()) chi.push_back((basis.adjoint() * m * basis).trace());
  return chi;
}

// Eigenspaces of a random commutant element, or nullopt when some cluster
// fails the irreducibility certificate.
std::optional<std::vector<Matrix>> try_split(const ProjectiveRep& r, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(r.dim());
  Matrix raw = random_complex_normal(n, n, rng);
  const Matrix herm = hermitian_part(raw);
  Matrix h = Matrix::Zero(n, n);
  for (const auto& m : r.matrices()) h += m * herm * m.adjoint();
  h /= static_cast<double>(r.matrices().size());
  h = hermitian_part(h);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  const double gap = 1e-7 * scale;

  std::vector<Matrix> blocks;
  Eigen::Index start = 0;
  const double order = static_cast<double>(r.matrices().size());
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && values(stop) - values(stop - 1) < gap) ++stop;
    Matrix basis = vectors.middleCols(start, stop - start);
    const auto chi = block_character(r, basis);
    double norm = 0.0;
    for (const auto& v : chi) norm += std::norm(v);
    if (std::abs(norm - order) > 1e-6 * order) return std::nullopt;
    blocks.push_back(std::move(basis));
    start = stop;
  }
  return blocks;
}

}  // namespace

Decomposition decompose(const ProjectiveRep& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::optional<std::vector<Matrix>> split;
  for (int attempt = 0; attempt < 16 && !split; ++attempt) split = try_split(r, rng);
  if (!split) throw Error(ErrorCode::Internal, "could not split the representation into irreducibles");

  Decomposition dec;
  for (auto& basis : *split) {
    const auto chi = block_character(r, basis);
    std::size_t type = dec.types.size();
    for (std::size_t t = 0; t < dec.types.size(); ++t) {
      if (std::abs(character_inner(chi, dec.types[t]) - 1.0) < 1e-6) {
        type = t;
        break;
      }
    }
    if (type == dec.types.size()) {
      dec.types.push_back(chi);
      dec.type_dims.push_back(static_cast<std::size_t>(basis.cols()));
    }
    dec.blocks.push_back({std::move(basis), type});
  }
  return dec;
}

ProjectiveRep compress(const ProjectiveRep& r, const Matrix& basis) {
  std::vector<Matrix> mats;
  mats.reserve(r.matrices().size());
  for (const auto& m : r.matrices()) mats.push_back(basis.adjoint() * m * basis);
  return ProjectiveRep(r.cocycle(), std::move(mats), r.label());
}

Matrix block_intertwiner(const ProjectiveRep& ra, const Matrix& basis_a, const ProjectiveRep& rb,
                         const Matrix& basis_b) {
  if (basis_a.cols() != basis_b.cols())
    throw Error(ErrorCode::InvalidInput, "blocks of different dimension are not equivalent");
  const auto k = basis_a.cols();
  const auto a = compress(ra, basis_a);
  const auto b = compress(rb, basis_b);
  const double order = static_cast<double>(ra.matrices().size());
  // W_E = sum_x B(x) E A(x)^*; the first elementary E with W_E != 0 gives a
  // nonzero intertwiner, which Schur's lemma makes a multiple of a unitary.
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      Matrix w = Matrix::Zero(k, k);
      for (std::size_t x = 0; x < ra.matrices().size(); ++x)
        w += b.matrices()[x].col(i) * a.matrices()[x].col(j).adjoint();
      w /= order;
      const double c = (w.adjoint() * w).trace().real() / static_cast<double>(k);
      if (c < 1e-10) continue;
      w /= std::sqrt(c);
      const double unit_res = max_abs_diff(w.adjoint() * w, Matrix::Identity(k, k));
      if (unit_res > 1e-6)
        throw Error(ErrorCode::InvalidInput, "blocks are not irreducible, intertwiner is not unitary");
      return w;
    }
  throw Error(ErrorCode::InvalidInput, "blocks are inequivalent");
}

std::vector<ProjectiveRep> irreducible_types(const Cocycle& c, std::uint64_t seed) {
  const auto reg = regular_as_rep(c);
  const auto dec = decompose(reg, seed);
  std::vector<std::size_t> order(dec.types.size());
  for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
  auto key = [&](std::size_t t) {
    std::vector<long long> k{static_cast<long long>(dec.type_dims[t])};
    for (const auto& v : dec.types[t]) {
      k.push_back(-std::llround(v.real() * 1e6));
      k.push_back(-std::llround(v.imag() * 1e6));
    }
    return k;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  std::vector<ProjectiveRep> out;
  for (std::size_t t : order) {
    const auto idx = dec.blocks_of_type(t).front();
    auto rep = compress(reg, dec.blocks[idx].basis);
    std::ostringstream os;
    os << "irrep" << out.size();
    out.emplace_back(rep.cocycle(), rep.matrices(), os.str());
  }
  return out;
}

}  // namespace latdim
