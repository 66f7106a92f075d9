#include <gtest/gtest.h>

#include "latdim/error.hpp"
#include "latdim/gabor.hpp"
#include "latdim/io.hpp"
#include "latdim/linalg.hpp"

using namespace latdim;

namespace {

Subgroup lattice(const TimeFrequencyGroup& tf, const std::string& spec) {
  return io::parse_lattices(tf.group, spec).front();
}

const ScanRow* find_row(const ScanResult& r, const std::string& lattice, std::size_t n, std::size_t d) {
  for (const auto& row : r.rows)
    if (row.lattice == lattice && row.n == n && row.d == d) return &row;
  return nullptr;
}

}  // namespace

TEST(TimeFrequency, SmallBases) {
  const auto t1 = build_tf(build_cyclic(1));
  EXPECT_EQ(t1.rep.dim(), 1u);
  EXPECT_EQ(t1.group.order(), 1u);

  const auto t2 = build_tf(build_cyclic(2));
  ASSERT_EQ(t2.rep.dim(), 2u);
  const Element tm = t2.group.from_coordinates(std::vector<std::size_t>{1, 1});
  // Translate by 1, then multiply by the sign character: delta_0 -> -delta_1, delta_1 -> delta_0.
  Matrix expected(2, 2);
  expected << 0, 1, -1, 0;
  EXPECT_LT(max_abs_diff(t2.rep(tm), expected), 1e-15);
  EXPECT_TRUE(validate_rep(t2.rep).valid);

  const auto k = build_tf(build_named("Z2xZ2"));
  EXPECT_EQ(k.rep.dim(), 4u);
  EXPECT_TRUE(is_irreducible(k.rep).irreducible);

  EXPECT_THROW(build_tf(build_symmetric(3)), Error);
  EXPECT_THROW(build_tf(build_cyclic(kMaxTimeFrequencyBase + 1)), Error);
}

TEST(TimeFrequency, KleppnerForEveryAbelianBaseUpTo16) {
  for (const char* name : {"Z7", "Z9", "Z10", "Z12", "Z16", "Z2xZ6", "Z4xZ4", "Z2xZ8", "Z3xZ3", "Z2xZ2xZ2",
                           "Z2xZ2xZ4", "Z2xZ2xZ2xZ2"})
    EXPECT_TRUE(regularity(weyl_heisenberg(build_named(name))).kleppner) << name;
}

TEST(LatticeLabel, Format) {
  const auto tf = build_tf(build_cyclic(4));
  EXPECT_EQ(lattice_label(trivial_subgroup(tf.group)), "()");
  EXPECT_EQ(lattice_label(lattice(tf, "(2,0),(0,2)")), "(0,2),(2,0)");
}

TEST(Scan, Z4Cells) {
  const auto tf = build_tf(build_cyclic(4));
  const auto r = gabor_scan(tf, 2, 2);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.construction_failures.empty());
  EXPECT_EQ(r.rows.size(), 15u * 4u);
  const auto* cell = find_row(r, "(0,2),(2,0)", 1, 1);
  ASSERT_NE(cell, nullptr);
  EXPECT_TRUE(cell->frame && cell->riesz && cell->basis);
  std::size_t order_two = 0;
  for (const auto& row : r.rows)
    if (row.lattice_order == 2 && row.n == 1 && row.d == 1) {
      ++order_two;
      EXPECT_FALSE(row.frame);
      EXPECT_TRUE(row.riesz);
      EXPECT_DOUBLE_EQ(row.dpi_vol, 2.0);
    }
  EXPECT_EQ(order_two, 3u);
}

TEST(Scan, Z6WholeGroupBasisAtD6) {
  const auto tf = build_tf(build_cyclic(6));
  const auto spec = gabor_spec(tf, whole_group(tf.group));
  const auto dec = existence_decision(spec, 1, 6);
  EXPECT_TRUE(dec.basis);
  EXPECT_FALSE(existence_decision(spec, 1, 5).riesz);
}

TEST(Scan, DeterministicGivenSeed) {
  const auto tf = build_tf(build_cyclic(3));
  ScanOptions o;
  o.seed = 5;
  const auto a = gabor_scan(tf, 2, 2, o);
  const auto b = gabor_scan(tf, 2, 2, o);
  ASSERT_EQ(a.constructions.size(), b.constructions.size());
  for (std::size_t i = 0; i < a.constructions.size(); ++i) {
    EXPECT_EQ(a.constructions[i].lower, b.constructions[i].lower);
    EXPECT_EQ(a.constructions[i].gram_residual, b.constructions[i].gram_residual);
  }
}

TEST(Superframe, Z2) {
  const auto tf = build_tf(build_cyclic(2));
  const auto whole = whole_group(tf.group);
  const auto demo = superframe_demo(tf, whole, 2);
  EXPECT_TRUE(demo.parseval);
  EXPECT_NEAR(demo.report.lower, 1.0, 1e-10);
  EXPECT_NEAR(demo.report.upper, 1.0, 1e-10);
  try {
    superframe_demo(tf, whole, 3);
    FAIL() << "expected Infeasible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Infeasible);
  }
  const auto single = superframe_demo(tf, whole, 1);
  EXPECT_TRUE(single.parseval);
}
