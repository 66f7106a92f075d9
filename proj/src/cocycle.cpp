#include "latdim/cocycle.hpp"

#include <cmath>
#include <sstream>

#include "latdim/error.hpp"

namespace latdim {

Cocycle::Cocycle(FiniteGroup group, std::vector<Complex> table, std::string label)
    : group_(std::move(group)), label_(std::move(label)) {
  const std::size_t n = group_.order();
  if (table.size() != n * n) {
    std::ostringstream os;
    os << "cocycle table has " << table.size() << " entries, group '" << group_.label()
       << "' needs " << n * n;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  table_ = std::make_shared<const std::vector<Complex>>(std::move(table));
}

CocycleReport validate(const Cocycle& c, const Tolerances& tol) {
  const auto& g = c.group();
  const std::size_t n = g.order();
  CocycleReport report;
  auto fail = [&](CocycleReport::Violation v, std::array<Element, 3> t, double r, std::string msg) {
    if (!report.valid) return;
    report.valid = false;
    report.violation = v;
    report.tuple = t;
    report.residual = r;
    report.message = std::move(msg);
  };

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const double r = std::abs(std::abs(c(x, y)) - 1.0);
      report.max_unit_residual = std::max(report.max_unit_residual, r);
      if (r >= tol.unit) {
        std::ostringstream os;
        os << "|sigma(" << x << "," << y << ")| deviates from 1 by " << r;
        fail(CocycleReport::Violation::NotUnitModulus, {x, y, 0}, r, os.str());
      }
    }

  const Element e = g.identity();
  for (Element x = 0; x < n; ++x) {
    const double r = std::max(std::abs(c(e, x) - 1.0), std::abs(c(x, e) - 1.0));
    if (r >= tol.identity) {
      std::ostringstream os;
      os << "not normalized at element " << x << ": sigma(e,x)=" << c(e, x) << ", sigma(x,e)=" << c(x, e);
      fail(CocycleReport::Violation::NotNormalized, {x, 0, 0}, r, os.str());
    }
  }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      for (Element z = 0; z < n; ++z) {
        const Complex lhs = c(x, y) * c(xy, z);
        const Complex rhs = c(x, g.mul(y, z)) * c(y, z);
        const double r = std::abs(lhs - rhs);
        report.max_identity_residual = std::max(report.max_identity_residual, r);
        if (r >= tol.identity) {
          std::ostringstream os;
          os << "cocycle identity fails at (x,y,z)=(" << x << "," << y << "," << z << "), residual " << r;
          fail(CocycleReport::Violation::CocycleIdentity, {x, y, z}, r, os.str());
        }
      }
    }
  return report;
}

Cocycle trivial_cocycle(const FiniteGroup& g) {
  return Cocycle(g, std::vector<Complex>(g.order() * g.order(), Complex{1.0, 0.0}), "trivial");
}

Cocycle conjugate_cocycle(const Cocycle& c) {
  std::vector<Complex> table(c.table());
  for (auto& v : table) v = std::conj(v);
  return Cocycle(c.group(), std::move(table), "conj(" + c.label() + ")");
}

Complex tilde(const Cocycle& c, Element x, Element y) {
  const auto& g = c.group();
  return c(x, y) * std::conj(c(y, g.conjugate(x, y)));
}

TildeReport verify_tilde_identities(const Cocycle& c, double tol, const Tolerances& tols) {
  const auto& g = c.group();
  const std::size_t n = g.order();
  TildeReport report;
  auto note = [&](int which, double r, std::array<Element, 3> t) {
    report.max_residual[which] = std::max(report.max_residual[which], r);
    if (r > tol && report.ok) {
      static const char* kNames[] = {"tilde1", "tilde2", "tilde3"};
      report.ok = false;
      report.violated = kNames[which];
      report.tuple = t;
    }
  };

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element conj_xy = g.conjugate(x, y);
      const Complex t_xy = tilde(c, x, y);
      for (Element z = 0; z < n; ++z)
        note(0, std::abs(tilde(c, x, g.mul(y, z)) - t_xy * tilde(c, conj_xy, z)), {x, y, z});
    }

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element yxy = g.mul(g.mul(y, x), g.inv(y));
      note(1, std::abs(tilde(c, x, g.inv(y)) - std::conj(tilde(c, yxy, y))), {x, y, 0});
    }

  const auto reg = regularity(c, tols);
  for (Element x = 0; x < n; ++x) {
    if (!reg.regular_elements[x]) continue;
    for (Element y = 0; y < n; ++y)
      for (Element y2 = 0; y2 < n; ++y2)
        if (g.conjugate(x, y) == g.conjugate(x, y2))
          note(2, std::abs(tilde(c, x, y) - tilde(c, x, y2)), {x, y, y2});
  }
  return report;
}

RegularityReport regularity(const Cocycle& c, const Tolerances& tol) {
  const auto& g = c.group();
  const std::size_t n = g.order();
  RegularityReport report;
  report.conjugacy = conjugacy(g);
  report.regular_elements.assign(n, true);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.commute(x, y) && std::abs(c(x, y) - c(y, x)) >= tol.identity) {
        report.regular_elements[x] = false;
        break;
      }
  const auto& classes = report.conjugacy.classes;
  report.regular_classes.assign(classes.size(), false);
  std::size_t regular_count = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    report.regular_classes[k] = report.regular_elements[classes[k].front()];
    if (report.regular_classes[k]) ++regular_count;
  }
  // The identity class is always regular.
  report.kleppner = regular_count == 1;
  return report;
}

Cocycle weyl_heisenberg(const AbelianDecomposition& dec) {
  const auto& a = dec.group;
  const auto g = direct_product(a, a);
  const std::size_t m = a.order(), n = g.order();
  std::vector<Complex> table(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto x = static_cast<Element>(p / m);
      const auto w2 = static_cast<Element>(q % m);
      table[p * n + q] = std::conj(character(dec, w2, x));
    }
  return Cocycle(g, std::move(table), "weyl-heisenberg");
}

Cocycle weyl_heisenberg(const FiniteGroup& a) { return weyl_heisenberg(cyclic_decomposition(a)); }

Cocycle restrict(const Cocycle& c, const Subgroup& h) {
  if (!h.parent().same_as(c.group()))
    throw Error(ErrorCode::InvalidInput, "subgroup does not belong to the cocycle's group");
  const auto& elems = h.elements();
  const std::size_t k = elems.size();
  std::vector<Complex> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = c(elems[i], elems[j]);
  return Cocycle(h.as_group(), std::move(table), c.label());
}

}  // namespace latdim
