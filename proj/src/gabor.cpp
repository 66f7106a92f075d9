#include "latdim/gabor.hpp"

#include <sstream>

#include "latdim/error.hpp"
#include "latdim/parallel.hpp"

namespace latdim {

TimeFrequencyGroup build_tf(const FiniteGroup& a) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, "time-frequency base group must be abelian");
  if (a.order() > kMaxTimeFrequencyBase) {
    std::ostringstream os;
    os << "base group of order " << a.order() << " exceeds " << kMaxTimeFrequencyBase;
    throw Error(ErrorCode::BoundExceeded, os.str());
  }
  auto dec = cyclic_decomposition(a);
  auto cocycle = weyl_heisenberg(dec);
  const auto& g = cocycle.group();
  const std::size_t m = a.order();
  const auto dim = static_cast<Eigen::Index>(m);

  std::vector<Matrix> mats;
  mats.reserve(g.order());
  for (std::size_t p = 0; p < g.order(); ++p) {
    const auto x = static_cast<Element>(p / m);
    const auto w = static_cast<Element>(p % m);
    Matrix pi = Matrix::Zero(dim, dim);
    for (Element s = 0; s < m; ++s) {
      const Element t = a.mul(x, s);
      pi(t, s) = character(dec, w, t);
    }
    mats.push_back(std::move(pi));
  }
  ProjectiveRep rep(cocycle, std::move(mats), "weyl-heisenberg");

  const auto cv = validate(cocycle);
  if (!cv.valid) throw Error(ErrorCode::Internal, "Weyl-Heisenberg cocycle fails validation: " + cv.message);
  const auto rv = validate_rep(rep);
  if (!rv.valid) throw Error(ErrorCode::Internal, "Weyl-Heisenberg representation fails validation: " + rv.message);
  if (!is_irreducible(rep).irreducible)
    throw Error(ErrorCode::Internal, "Weyl-Heisenberg representation is reducible");
  if (!regularity(cocycle).kleppner)
    throw Error(ErrorCode::Internal, "Weyl-Heisenberg cocycle fails Kleppner's condition");
  auto group = g;
  return TimeFrequencyGroup{a, std::move(dec), std::move(group), std::move(cocycle), std::move(rep)};
}

std::string lattice_label(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Element> gens;
  std::vector<char> reached(g.order(), 0);
  reached[g.identity()] = 1;
  for (Element x : h.elements()) {
    if (reached[x]) continue;
    gens.push_back(x);
    const auto span = subgroup_generated(g, gens);
    for (Element y : span.elements()) reached[y] = 1;
  }
  if (gens.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << "(";
    const auto coords = g.coordinates(gens[i]);
    for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? "," : "") << coords[k];
    os << ")";
  }
  return os.str();
}

ModuleSpec gabor_spec(const TimeFrequencyGroup& tf, const Subgroup& lattice) {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(tf.rep.dim()));
  e(0) = 1.0;
  return ModuleSpec{tf.rep, lattice, restrict(tf.cocycle, lattice), std::move(e)};
}

namespace {

struct LatticeOutcome {
  std::vector<ScanRow> rows;
  std::vector<ConstructionCheck> constructions;
  std::vector<std::string> violations;
  std::vector<std::string> construction_failures;
};

std::string cell_name(const std::string& lattice, std::size_t order, std::size_t n, std::size_t d) {
  std::ostringstream os;
  os << "lattice " << lattice << " (order " << order << "), n=" << n << ", d=" << d;
  return os.str();
}

ConstructionCheck check_construction(const MultiwindowSystem& sys, const std::string& kind, bool expect_basis,
                                     const std::string& lattice) {
  ConstructionCheck c;
  c.lattice = lattice;
  c.lattice_order = sys.lattice.order();
  c.n = sys.n;
  c.d = sys.d;
  c.kind = kind;
  const auto rep = frame_report(sys);
  c.lower = rep.lower;
  c.upper = rep.upper;
  const Matrix a = analysis_matrix(sys);
  if (kind == "parseval") {
    c.ok = std::abs(rep.lower - 1.0) <= 1e-8 && std::abs(rep.upper - 1.0) <= 1e-8;
  } else {
    c.ok = std::abs(rep.riesz_lower - 1.0) <= 1e-8 && std::abs(rep.riesz_upper - 1.0) <= 1e-8;
    c.lower = rep.riesz_lower;
    c.upper = rep.riesz_upper;
  }
  if (expect_basis || kind == "orthonormal") {
    const Matrix gram = a * a.adjoint();
    c.gram_residual = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    c.ok = c.ok && c.gram_residual <= 1e-8;
  }
  return c;
}

LatticeOutcome scan_lattice(const TimeFrequencyGroup& tf, const Subgroup& lattice, std::size_t n_max,
                            std::size_t d_max, const ScanOptions& options) {
  LatticeOutcome out;
  const auto spec = gabor_spec(tf, lattice);
  const auto label = lattice_label(lattice);
  const std::size_t a = tf.base.order();
  const std::size_t k = lattice.order();
  const auto ph = phi(spec);

  Vector expected = Vector::Zero(ph.values.size());
  expected(ph.identity) = static_cast<double>(a) / static_cast<double>(k);
  const double phi_err = (ph.values - expected).cwiseAbs().maxCoeff();
  if (phi_err > 1e-9) {
    std::ostringstream os;
    os << "lattice " << label << ": phi differs from (|A|/|lattice|) delta_e by " << phi_err;
    out.violations.push_back(os.str());
  }

  std::optional<BlockMatcher> matcher;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t d = 1; d <= d_max; ++d) {
      const auto dec = existence_decision(ph, spec.restricted, n, d);
      ScanRow row{tf.base.label(), tf.group.label(), tf.cocycle.label(), label, k, n, d,
                  static_cast<double>(a) / static_cast<double>(k), dec.frame, dec.riesz, dec.basis};
      const bool want_frame = a * d <= n * k;
      const bool want_riesz = a * d >= n * k;
      const bool want_basis = a * d == n * k;
      if (row.frame != want_frame || row.riesz != want_riesz || row.basis != want_basis ||
          row.basis != (row.frame && row.riesz)) {
        std::ostringstream os;
        os << cell_name(label, k, n, d) << ": decision (" << row.frame << "," << row.riesz << "," << row.basis
           << ") vs predicate (" << want_frame << "," << want_riesz << "," << want_basis << ")";
        out.violations.push_back(os.str());
      }
      if (row.basis != riesz_basis_criterion(ph, n, d)) {
        out.violations.push_back(cell_name(label, k, n, d) + ": basis decision and criterion disagree");
      }
      out.rows.push_back(row);

      const bool bounded = n * k <= options.bound_factor * d * a;
      if (!options.construct || !bounded || !(row.frame || row.riesz)) continue;
      if (!matcher) matcher.emplace(spec.rep, lattice, options.seed);
      try {
        if (row.frame) {
          const auto sys = construct_parseval_generators(spec, *matcher, n, d);
          out.constructions.push_back(check_construction(sys, "parseval", row.basis, label));
        } else {
          const auto sys = construct_orthonormal_generators(spec, *matcher, n, d);
          out.constructions.push_back(check_construction(sys, "orthonormal", false, label));
        }
        const auto& c = out.constructions.back();
        if (!c.ok) {
          std::ostringstream os;
          os << cell_name(label, k, n, d) << ": " << c.kind << " construction has bounds [" << c.lower << ", "
             << c.upper << "], Gram residual " << c.gram_residual;
          out.construction_failures.push_back(os.str());
        }
      } catch (const Error& e) {
        out.construction_failures.push_back(cell_name(label, k, n, d) + ": " + e.what());
      }
    }
  return out;
}

}  // namespace

ScanResult gabor_scan(const TimeFrequencyGroup& tf, std::size_t n_max, std::size_t d_max,
                      const ScanOptions& options) {
  if (n_max == 0 || d_max == 0) throw Error(ErrorCode::InvalidInput, "n_max and d_max must be positive");
  const auto lattices = all_subgroups(tf.group);
  std::vector<LatticeOutcome> outcomes(lattices.size());
  parallel_for(lattices.size(), [&](std::size_t i) {
    outcomes[i] = scan_lattice(tf, lattices[i], n_max, d_max, options);
  });
  ScanResult result;
  for (auto& o : outcomes) {
    result.rows.insert(result.rows.end(), o.rows.begin(), o.rows.end());
    result.constructions.insert(result.constructions.end(), o.constructions.begin(), o.constructions.end());
    result.violations.insert(result.violations.end(), o.violations.begin(), o.violations.end());
    result.construction_failures.insert(result.construction_failures.end(), o.construction_failures.begin(),
                                        o.construction_failures.end());
  }
  return result;
}

SuperframeReport superframe_demo(const TimeFrequencyGroup& tf, const Subgroup& lattice, std::size_t d,
                                 std::uint64_t seed) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "d must be positive");
  if (lattice.order() < d * tf.base.order()) {
    std::ostringstream os;
    os << "|lattice| = " << lattice.order() << " < d |A| = " << d * tf.base.order()
       << ", no 1-window " << d << "-super frame exists";
    throw Error(ErrorCode::Infeasible, os.str());
  }
  const auto spec = gabor_spec(tf, lattice);
  auto sys = construct_parseval_generators(spec, 1, d, seed);
  auto rep = frame_report(sys);
  const bool parseval = std::abs(rep.lower - 1.0) <= 1e-8 && std::abs(rep.upper - 1.0) <= 1e-8;
  return SuperframeReport{std::move(sys), rep, parseval};
}

}  // namespace latdim
