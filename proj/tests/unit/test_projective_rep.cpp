#include <gtest/gtest.h>

#include <random>

#include "latdim/decomposition.hpp"
#include "latdim/error.hpp"
#include "latdim/gabor.hpp"
#include "latdim/linalg.hpp"
#include "latdim/projective_rep.hpp"

using namespace latdim;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no latdim::Error thrown";
  return ErrorCode::Internal;
}

ProjectiveRep two_dim_irrep(const char* group) {
  for (auto& r : irreducible_types(trivial_cocycle(build_named(group))))
    if (r.dim() == 2) return r;
  throw std::logic_error("no 2-dim irrep");
}

}  // namespace

TEST(ProjectiveRep, ShapeChecks) {
  const auto c = trivial_cocycle(build_cyclic(2));
  EXPECT_EQ(code_of([&] { ProjectiveRep(c, {Matrix::Identity(1, 1)}); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { ProjectiveRep(c, {Matrix::Identity(1, 1), Matrix::Identity(2, 2)}); }),
            ErrorCode::DimensionMismatch);
}

TEST(ProjectiveRep, Validation) {
  EXPECT_TRUE(validate_rep(regular_as_rep(weyl_heisenberg(build_cyclic(3)))).valid);
  EXPECT_TRUE(validate_rep(build_tf(build_cyclic(4)).rep).valid);
  auto mats = build_tf(build_cyclic(4)).rep.matrices();
  mats[5] *= -1.0;
  const auto bad = validate_rep(ProjectiveRep(weyl_heisenberg(build_cyclic(4)), mats));
  EXPECT_FALSE(bad.valid);
  EXPECT_TRUE(bad.worst_x == 5 || bad.worst_y == 5 || bad.message.find('5') != std::string::npos);
}

TEST(Irreducibility, Cases) {
  const auto g = build_cyclic(3);
  const ProjectiveRep one(trivial_cocycle(g), std::vector<Matrix>(3, Matrix::Identity(1, 1)));
  EXPECT_TRUE(is_irreducible(one).irreducible);
  const auto reg = is_irreducible(regular_as_rep(trivial_cocycle(build_cyclic(2))));
  EXPECT_FALSE(reg.irreducible);
  EXPECT_EQ(reg.commutant_dim, 2u);
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_irreducible(build_tf(build_cyclic(n)).rep).irreducible) << n;
}

TEST(FormalDimension, Values) {
  const auto g = build_cyclic(1);
  const ProjectiveRep one(trivial_cocycle(g), {Matrix::Identity(1, 1)});
  EXPECT_NEAR(formal_dimension(one), 1.0, 1e-12);
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_NEAR(formal_dimension(build_tf(build_cyclic(n)).rep), 1.0 / n, 1e-12);
  EXPECT_NEAR(formal_dimension(two_dim_irrep("S3")), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(code_of([] { formal_dimension(regular_as_rep(trivial_cocycle(build_cyclic(2)))); }),
            ErrorCode::NotIrreducible);
}

TEST(Wavelet, Isometry) {
  const auto g = build_cyclic(1);
  const ProjectiveRep one(trivial_cocycle(g), {Matrix::Identity(1, 1)});
  const auto w1 = wavelet(one, Vector::Ones(1));
  EXPECT_LT(w1.isometry_residual, 1e-14);

  const auto tf = build_tf(build_cyclic(4));
  Vector e0 = Vector::Zero(4);
  e0(0) = 1.0;
  const auto w = wavelet(tf.rep, e0);
  std::mt19937_64 rng(13);
  const Vector xi = random_complex_normal(4, 1, rng);
  EXPECT_NEAR((w.matrix * xi).squaredNorm(), 4.0 * xi.squaredNorm(), 1e-10);
  EXPECT_LT(w.intertwining_residual, 1e-10);
  EXPECT_LT(w.isometry_residual, 1e-10);
  EXPECT_EQ(code_of([&] { wavelet(tf.rep, 2.0 * e0); }), ErrorCode::WindowNotUnit);
}

TEST(Schur, OrthogonalityOnNonabelianIrreps) {
  std::mt19937_64 rng(14);
  for (const char* name : {"S3", "D4", "Q8"}) {
    const auto r = two_dim_irrep(name);
    const Vector a = random_complex_normal(2, 1, rng), b = random_complex_normal(2, 1, rng);
    const Vector c = random_complex_normal(2, 1, rng), d = random_complex_normal(2, 1, rng);
    EXPECT_LT(schur_residual(r, a, b, c, d), 1e-12) << name;
  }
}

TEST(Restriction, Lattices) {
  const auto tf = build_tf(build_cyclic(4));
  const auto r0 = restrict_to_lattice(tf.rep, trivial_subgroup(tf.group));
  EXPECT_EQ(r0.group().order(), 1u);
  const std::vector<Element> gens{tf.group.from_coordinates(std::vector<std::size_t>{2, 0}),
                                  tf.group.from_coordinates(std::vector<std::size_t>{0, 2})};
  const auto h = subgroup_generated(tf.group, gens);
  const auto r = restrict_to_lattice(tf.rep, h);
  EXPECT_EQ(r.group().order(), 4u);
  EXPECT_TRUE(validate_rep(r).valid);
  for (std::size_t i = 0; i < h.order(); ++i) EXPECT_EQ(r(static_cast<Element>(i)), tf.rep(h.elements()[i]));
}

TEST(Restriction, ConjugationResidual) {
  EXPECT_LT(projective_conjugation_residual(build_tf(build_cyclic(3)).rep), 1e-12);
  EXPECT_LT(projective_conjugation_residual(two_dim_irrep("D4")), 1e-12);
}

TEST(Decomposition, RegularRepContainsEachIrrepByDimension) {
  for (const char* name : {"S3", "D4", "Q8", "Z6"}) {
    const auto c = trivial_cocycle(build_named(name));
    const auto types = irreducible_types(c);
    std::size_t total = 0;
    for (const auto& t : types) {
      total += t.dim() * t.dim();
      EXPECT_TRUE(is_irreducible(t).irreducible);
      EXPECT_TRUE(validate_rep(t).valid);
    }
    EXPECT_EQ(total, c.group().order()) << name;
    EXPECT_EQ(types.front().dim(), 1u);
    for (Element x = 0; x < c.group().order(); ++x) EXPECT_NEAR(std::abs(types.front()(x)(0, 0) - 1.0), 0.0, 1e-12);
    const auto dec = decompose(regular_as_rep(c));
    const auto mult = dec.multiplicities();
    for (std::size_t t = 0; t < mult.size(); ++t) EXPECT_EQ(mult[t], dec.type_dims[t]);
  }
}

TEST(Decomposition, WeylHeisenbergRegularIsIsotypic) {
  const auto tf = build_tf(build_cyclic(3));
  const auto dec = decompose(regular_as_rep(tf.cocycle));
  ASSERT_EQ(dec.types.size(), 1u);
  EXPECT_EQ(dec.type_dims[0], 3u);
  EXPECT_EQ(dec.blocks.size(), 3u);
  EXPECT_NEAR(std::abs(character_inner(dec.types[0], character_of(tf.rep)) - 1.0), 0.0, 1e-10);
}

TEST(Decomposition, IntertwinerBetweenCopies) {
  const auto r = direct_sum(two_dim_irrep("Q8"), 2);
  const auto dec = decompose(r);
  ASSERT_EQ(dec.blocks.size(), 2u);
  const auto& a = dec.blocks[0].basis;
  const auto& b = dec.blocks[1].basis;
  const Matrix w = block_intertwiner(r, a, r, b);
  const auto ca = compress(r, a);
  const auto cb = compress(r, b);
  EXPECT_LT(max_abs_diff(w.adjoint() * w, Matrix::Identity(2, 2)), 1e-10);
  for (Element x = 0; x < 8; ++x) EXPECT_LT(max_abs_diff(w * ca(x), cb(x) * w), 1e-10);
}
