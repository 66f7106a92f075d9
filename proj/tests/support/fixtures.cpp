#include "fixtures.hpp"

#include "latdim/decomposition.hpp"

namespace latdim::testing {

std::vector<FiniteGroup> fixture_groups() {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 8; ++n) out.push_back(build_cyclic(static_cast<std::size_t>(n)));
  for (const char* name : {"Z2xZ2", "Z2xZ4", "S3", "D4", "Q8"}) out.push_back(build_named(name));
  return out;
}

std::vector<Complex> coboundary_phases(const FiniteGroup& g) {
  std::vector<Complex> c(g.order());
  for (Element x = 0; x < g.order(); ++x)
    c[x] = x == g.identity() ? Complex{1.0, 0.0} : root_of_unity(static_cast<long long>(3 * x + 1), 7);
  return c;
}

Cocycle coboundary(const FiniteGroup& g) {
  const auto c = coboundary_phases(g);
  const auto n = g.order();
  std::vector<Complex> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) table[x * n + y] = c[x] * c[y] / c[g.mul(x, y)];
  return Cocycle(g, std::move(table), "coboundary");
}

ProjectiveRep twist_by_phases(const ProjectiveRep& r, const Cocycle& twisted) {
  const auto c = coboundary_phases(r.group());
  std::vector<Matrix> mats;
  for (Element x = 0; x < r.group().order(); ++x) mats.push_back(c[x] * r(x));
  return ProjectiveRep(twisted, std::move(mats), r.label() + "-twisted");
}

std::vector<CocycleFixture> cocycle_fixtures() {
  std::vector<CocycleFixture> out;
  for (const auto& g : fixture_groups()) {
    auto c = trivial_cocycle(g);
    auto reps = irreducible_types(c);
    out.push_back({"trivial/" + g.label(), c, std::move(reps), std::nullopt});
  }
  for (const char* base : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
    auto tf = build_tf(build_named(base));
    out.push_back({"weyl-heisenberg/" + tf.group.label(), tf.cocycle, {tf.rep}, tf});
  }
  for (const char* name : {"S3", "D4", "Q8"}) {
    const auto g = build_named(name);
    const auto c = coboundary(g);
    std::vector<ProjectiveRep> reps;
    for (const auto& r : irreducible_types(trivial_cocycle(g))) reps.push_back(twist_by_phases(r, c));
    out.push_back({"coboundary/" + g.label(), c, std::move(reps), std::nullopt});
  }
  return out;
}

std::vector<std::string> scan_bases() { return {"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "Z8", "Z2xZ4"}; }

}  // namespace latdim::testing
