#include "latdim/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "latdim/error.hpp"
#include "latdim/gabor.hpp"
#include "latdim/io.hpp"
#include "latdim/linalg.hpp"

namespace latdim::cli {

namespace {

using io::Json;

// ---------------------------------------------------------------------------
// Configuration

void apply_json(RunConfig& cfg, const Json& j) {
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
  };
  try {
    get("group", cfg.group);
    get("cocycle", cfg.cocycle);
    get("base", cfg.base);
    get("lattice", cfg.lattice);
    if (j.contains("rep")) {
      const auto& r = j.at("rep");
      cfg.rep = r.is_number() ? std::to_string(r.get<std::size_t>()) : r.get<std::string>();
    }
    get("window", cfg.window);
    get("n", cfg.n);
    get("d", cfg.d);
    get("nmax", cfg.n_max);
    get("dmax", cfg.d_max);
    get("samples", cfg.samples);
    get("seed", cfg.seed);
    get("out", cfg.out);
    get("in", cfg.in);
    get("kind", cfg.kind);
    get("json", cfg.json);
    get("oracle", cfg.oracle);
    get("construct", cfg.construct);
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      auto tol = [&](const char* key, double& field) {
        if (t.contains(key)) field = t.at(key).get<double>();
      };
      tol("unit", cfg.tolerances.unit);
      tol("identity", cfg.tolerances.identity);
      tol("psd", cfg.tolerances.psd);
      tol("frame", cfg.tolerances.frame);
      tol("hermitian", cfg.tolerances.hermitian);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("config: ") + e.what());
  }
}

// Maps "rep validate" style two-word commands onto their single-word names.
std::vector<std::string> normalize_args(std::vector<std::string> args) {
  static const std::map<std::pair<std::string, std::string>, std::string> aliases{
      {{"rep", "validate"}, "validate-rep"}, {{"rep", "dpi"}, "dpi"},
      {{"frame", "decide"}, "decide"},       {{"frame", "construct"}, "construct"},
      {{"gabor", "scan"}, "gabor-scan"},     {{"gabor", "superframe"}, "superframe"},
  };
  if (args.size() >= 2) {
    const auto it = aliases.find({args[0], args[1]});
    if (it != aliases.end()) {
      args.erase(args.begin());
      args[0] = it->second;
    }
  }
  return args;
}

// ---------------------------------------------------------------------------
// Shared setup

struct Context {
  FiniteGroup group;
  Cocycle cocycle;
  std::optional<TimeFrequencyGroup> tf;
};

std::vector<std::string> split_factors(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, 'x')) parts.push_back(item);
  return parts;
}

FiniteGroup base_group(const RunConfig& cfg) {
  if (!cfg.base.empty()) return io::load_group(cfg.base);
  if (std::filesystem::exists(cfg.group))
    throw Error(ErrorCode::InvalidInput, "the Weyl-Heisenberg cocycle on a file group needs --base");
  const auto parts = split_factors(cfg.group);
  if (parts.size() % 2 != 0 || parts.empty())
    throw Error(ErrorCode::InvalidInput,
                "cannot read group '" + cfg.group + "' as A x A; pass --base for the Weyl-Heisenberg cocycle");
  const std::size_t half = parts.size() / 2;
  std::string first, second;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& target = i < half ? first : second;
    if (!target.empty()) target += "x";
    target += parts[i];
  }
  if (first != second)
    throw Error(ErrorCode::InvalidInput, "group '" + cfg.group + "' is not of the form A x A");
  return build_named(first);
}

Context load_context(const RunConfig& cfg) {
  if (cfg.cocycle == "weyl-heisenberg" || cfg.cocycle == "wh" || cfg.cocycle == "WH") {
    auto tf = build_tf(base_group(cfg));
    Context ctx{tf.group, tf.cocycle, std::move(tf)};
    return ctx;
  }
  auto g = io::load_group(cfg.group);
  if (cfg.cocycle == "trivial") return Context{g, trivial_cocycle(g), std::nullopt};
  auto c = io::cocycle_from_json(g, io::read_json_file(cfg.cocycle));
  return Context{g, std::move(c), std::nullopt};
}

ProjectiveRep load_rep(const Context& ctx, const RunConfig& cfg) {
  if (!cfg.rep.empty() && std::filesystem::exists(cfg.rep))
    return io::rep_from_json(ctx.cocycle, io::read_json_file(cfg.rep));
  if (ctx.tf && cfg.rep.empty()) return ctx.tf->rep;
  std::size_t k = 0;
  if (!cfg.rep.empty()) {
    try {
      std::size_t used = 0;
      k = std::stoul(cfg.rep, &used);
      if (used != cfg.rep.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "--rep must be a type index or an existing JSON file: " + cfg.rep);
    }
  }
  auto types = irreducible_types(ctx.cocycle, cfg.seed);
  if (k >= types.size()) {
    std::ostringstream os;
    os << "--rep " << k << " out of range, the twisted group algebra has " << types.size()
       << " irreducible types";
    throw Error(ErrorCode::InvalidInput, os.str());
  }
  return std::move(types[k]);
}

Vector load_window(const ProjectiveRep& rep, const RunConfig& cfg) {
  const auto dim = static_cast<Eigen::Index>(rep.dim());
  if (cfg.window == "e0") {
    Vector e = Vector::Zero(dim);
    e(0) = 1.0;
    return e;
  }
  if (cfg.window == "random") {
    std::mt19937_64 rng(cfg.seed);
    return random_unit_vector(dim, rng);
  }
  return io::vector_from_json(io::read_json_file(cfg.window));
}

std::vector<Subgroup> load_lattices(const Context& ctx, const RunConfig& cfg) {
  return io::parse_lattices(ctx.group, cfg.lattice.empty() ? "whole" : cfg.lattice);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string rational(std::size_t num, std::size_t den) {
  const std::size_t g = std::gcd(num, den);
  std::ostringstream os;
  os << num / g;
  if (den / g != 1) os << "/" << den / g;
  return os.str();
}

// Output sink honouring --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// ---------------------------------------------------------------------------
// Subcommands

int cmd_validate_cocycle(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = validate(ctx.cocycle, cfg.tolerances);
  if (cfg.json) {
    Json j;
    j["valid"] = rep.valid;
    j["max_unit_residual"] = rep.max_unit_residual;
    j["max_identity_residual"] = rep.max_identity_residual;
    if (!rep.valid) {
      j["tuple"] = rep.tuple;
      j["residual"] = rep.residual;
      j["message"] = rep.message;
    }
    out << j.dump(2) << "\n";
  } else if (rep.valid) {
    out << "valid\n";
    out << "max_unit_residual " << io::format_double(rep.max_unit_residual) << "\n";
    out << "max_identity_residual " << io::format_double(rep.max_identity_residual) << "\n";
  } else {
    out << "invalid: " << rep.message << "\n";
  }
  return rep.valid ? kExitOk : kExitInputError;
}

int cmd_kleppner(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto reg = regularity(ctx.cocycle, cfg.tolerances);
  if (cfg.json) {
    Json j;
    j["kleppner"] = reg.kleppner;
    j["classes"] = reg.conjugacy.classes.size();
    j["regular_classes"] = std::count(reg.regular_classes.begin(), reg.regular_classes.end(), true);
    j["center_dimension"] = center_dimension(ctx.cocycle);
    out << j.dump(2) << "\n";
  } else {
    out << (reg.kleppner ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_cvt(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto lattices = load_lattices(ctx, cfg);
  if (lattices.size() != 1) throw Error(ErrorCode::InvalidInput, "cvt needs a single lattice");
  const auto& h = lattices.front();
  const auto c = restrict(ctx.cocycle, h);
  const auto images = center_trace_images(c, cfg.tolerances);
  const auto reg = regularity(c, cfg.tolerances);
  Json rows = Json::array();
  for (std::size_t local = 0; local < images.size(); ++local) {
    Json terms = Json::array();
    for (const auto& [target, value] : images[local])
      terms.push_back(Json::array({h.elements()[target], io::complex_to_json(value)}));
    Json row;
    row["gamma"] = h.elements()[local];
    row["class_regular"] = static_cast<bool>(reg.regular_elements[local]);
    row["trace"] = std::move(terms);
    rows.push_back(std::move(row));
  }
  Json j;
  j["group"] = ctx.group.label();
  j["cocycle"] = ctx.cocycle.label();
  j["lattice"] = lattice_label(h);
  j["rows"] = std::move(rows);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_phi(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = load_rep(ctx, cfg);
  const auto window = load_window(rep, cfg);
  const auto lattices = io::parse_lattices(ctx.group, cfg.lattice.empty() ? "all" : cfg.lattice);
  Json list = Json::array();
  for (const auto& h : lattices) {
    const auto spec = make_module_spec(rep, h, window);
    const auto ph = phi(spec, cfg.tolerances);
    Json rows = Json::array();
    for (std::size_t local = 0; local < h.order(); ++local) {
      Json row;
      row["gamma"] = h.elements()[local];
      row["value"] = io::complex_to_json(ph.values(static_cast<Eigen::Index>(local)));
      row["class_regular"] = static_cast<bool>(ph.class_regular[local]);
      rows.push_back(std::move(row));
    }
    Json entry;
    entry["lattice"] = lattice_label(h);
    entry["lattice_order"] = h.order();
    entry["dpi_vol"] = ph.dpi_vol;
    entry["dpi_vol_exact"] = rational(rep.dim(), h.order());
    if (cfg.oracle) {
      const auto oracle = phi_oracle(spec);
      entry["oracle_max_diff"] = (oracle.values - ph.values).cwiseAbs().maxCoeff();
    }
    entry["rows"] = std::move(rows);
    list.push_back(std::move(entry));
  }
  Json j;
  j["group"] = ctx.group.label();
  j["cocycle"] = ctx.cocycle.label();
  j["rep"] = rep.label();
  j["rep_dim"] = rep.dim();
  j["dpi_counting"] = rational(rep.dim(), ctx.group.order());
  if (ctx.tf) j["dpi_paper"] = 1;
  j["lattices"] = std::move(list);
  Sink sink(cfg.out, out);
  sink.get() << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_decide(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = load_rep(ctx, cfg);
  const auto window = load_window(rep, cfg);
  Json list = Json::array();
  for (const auto& h : load_lattices(ctx, cfg)) {
    const auto spec = make_module_spec(rep, h, window);
    const auto dec = existence_decision(spec, cfg.n, cfg.d, cfg.tolerances);
    if (cfg.json) {
      Json e;
      e["lattice"] = lattice_label(h);
      e["lattice_order"] = h.order();
      e["n"] = cfg.n;
      e["d"] = cfg.d;
      e["dpi_vol"] = rational(rep.dim(), h.order());
      e["frame"] = dec.frame;
      e["riesz"] = dec.riesz;
      e["basis"] = dec.basis;
      e["frame_min_eigenvalue"] = dec.frame_witness.min_eigenvalue;
      e["riesz_min_eigenvalue"] = dec.riesz_witness.min_eigenvalue;
      e["basis_residual"] = dec.basis_residual;
      list.push_back(std::move(e));
    } else {
      out << "lattice " << lattice_label(h) << " order " << h.order() << " dpi_vol "
          << rational(rep.dim(), h.order()) << " n/d " << rational(cfg.n, cfg.d) << "\n";
      out << "frame " << yes_no(dec.frame) << "\n";
      out << "riesz " << yes_no(dec.riesz) << "\n";
      out << "basis " << yes_no(dec.basis) << "\n";
    }
  }
  if (cfg.json) out << list.dump(2) << "\n";
  return kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = load_rep(ctx, cfg);
  const auto window = load_window(rep, cfg);
  const auto lattices = load_lattices(ctx, cfg);
  if (lattices.size() != 1) throw Error(ErrorCode::InvalidInput, "construct needs a single lattice");
  const auto spec = make_module_spec(rep, lattices.front(), window);
  std::string kind = cfg.kind;
  if (kind == "auto") {
    const auto dec = existence_decision(spec, cfg.n, cfg.d, cfg.tolerances);
    kind = dec.frame || !dec.riesz ? "parseval" : "orthonormal";
  }
  MultiwindowSystem sys = kind == "parseval"        ? construct_parseval_generators(spec, cfg.n, cfg.d, cfg.seed)
                          : kind == "orthonormal"   ? construct_orthonormal_generators(spec, cfg.n, cfg.d, cfg.seed)
                                                    : throw Error(ErrorCode::InvalidInput, "--kind must be parseval, orthonormal or auto");
  Json j;
  j["kind"] = kind;
  j["lattice"] = lattice_label(lattices.front());
  j["system"] = io::system_to_json(sys);
  j["frame_report"] = io::frame_report_to_json(frame_report(sys, cfg.tolerances));
  Sink sink(cfg.out, out);
  sink.get() << j.dump(2) << "\n";
  return kExitOk;
}

const std::vector<std::string> kScanHeader{"base", "group", "cocycle", "lattice", "lattice_order", "n",
                                           "d",    "dpi_vol", "frame", "riesz", "basis"};

int cmd_gabor_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto tf = build_tf(base_group(cfg));
  ScanOptions options;
  options.construct = cfg.construct;
  options.seed = cfg.seed;
  const auto result = gabor_scan(tf, cfg.n_max, cfg.d_max, options);
  Sink sink(cfg.out, out);
  io::write_csv_row(sink.get(), kScanHeader);
  for (const auto& r : result.rows)
    io::write_csv_row(sink.get(), {r.base, r.group, r.cocycle, r.lattice, std::to_string(r.lattice_order),
                                   std::to_string(r.n), std::to_string(r.d), io::format_double(r.dpi_vol),
                                   r.frame ? "yes" : "no", r.riesz ? "yes" : "no", r.basis ? "yes" : "no"});
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "cells " << result.rows.size() << " constructions " << result.constructions.size()
          << " violations " << result.violations.size() << " construction_failures "
          << result.construction_failures.size() << "\n";
  for (const auto& v : result.violations) summary << "violation: " << v << "\n";
  for (const auto& v : result.construction_failures) summary << "construction failure: " << v << "\n";
  return result.violations.empty() && result.construction_failures.empty() ? kExitOk : kExitCheckFailed;
}

bool parse_yes_no(const std::string& s, const std::string& where) {
  if (s == "yes" || s == "true" || s == "1") return true;
  if (s == "no" || s == "false" || s == "0") return false;
  throw Error(ErrorCode::InvalidInput, where + ": expected yes/no, got '" + s + "'");
}

std::size_t parse_count(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidInput, where + ": expected a non-negative integer, got '" + s + "'");
}

int audit_csv(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.in, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + cfg.in);
  const auto rows = io::read_csv(in, cfg.in);
  if (rows.empty()) throw Error(ErrorCode::InvalidInput, cfg.in + ":1: empty CSV");
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < rows[0].size(); ++i) col[rows[0][i]] = i;
  for (const auto& name : kScanHeader)
    if (!col.count(name)) throw Error(ErrorCode::InvalidInput, cfg.in + ":1: missing column '" + name + "'");
  std::map<std::string, std::size_t> base_order;
  std::size_t violations = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = cfg.in + ":" + std::to_string(r + 1);
    if (row.size() != rows[0].size()) throw Error(ErrorCode::InvalidInput, where + ": wrong number of fields");
    const auto& base = row[col["base"]];
    if (!base_order.count(base)) base_order[base] = build_named(base).order();
    const std::size_t a = base_order[base];
    const std::size_t k = parse_count(row[col["lattice_order"]], where);
    const std::size_t n = parse_count(row[col["n"]], where);
    const std::size_t d = parse_count(row[col["d"]], where);
    FrameReport rep;
    rep.is_frame = parse_yes_no(row[col["frame"]], where);
    rep.is_riesz_sequence = parse_yes_no(row[col["riesz"]], where);
    const bool basis = parse_yes_no(row[col["basis"]], where);
    auto verdict = density_check(rep, a, k, n, d);
    if (basis != (rep.is_frame && rep.is_riesz_sequence)) {
      verdict.ok = false;
      verdict.violation += (verdict.violation.empty() ? "" : "; ") + std::string("basis != frame and riesz");
    }
    if (!verdict.ok) {
      ++violations;
      out << "violation " << where << ": " << verdict.violation << "\n";
    }
  }
  out << "rows " << rows.size() - 1 << " violations " << violations << "\n";
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_density_audit(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.in.empty()) return audit_csv(cfg, out);
  const auto tf = build_tf(base_group(cfg));
  const auto lattices = all_subgroups(tf.group);
  std::mt19937_64 rng(cfg.seed);
  std::size_t frames = 0, riesz = 0, violations = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const auto& h = lattices[std::uniform_int_distribution<std::size_t>(0, lattices.size() - 1)(rng)];
    const auto n = std::uniform_int_distribution<std::size_t>(1, cfg.n_max)(rng);
    const auto d = std::uniform_int_distribution<std::size_t>(1, cfg.d_max)(rng);
    const auto sys = random_system(tf.rep, h, n, d, rng);
    const auto rep = frame_report(sys, cfg.tolerances);
    frames += rep.is_frame;
    riesz += rep.is_riesz_sequence;
    const auto verdict = density_check(rep, tf.rep.dim(), h.order(), n, d);
    if (!verdict.ok) {
      ++violations;
      out << "violation sample " << s << ": " << verdict.violation << "\n";
    }
  }
  out << "systems " << cfg.samples << " frames " << frames << " riesz " << riesz << " violations " << violations
      << "\n";
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_validate_rep(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = load_rep(ctx, cfg);
  const auto report = validate_rep(rep);
  const auto irr = is_irreducible(rep);
  out << (report.valid ? "valid" : "invalid: " + report.message) << "\n";
  out << "dim " << rep.dim() << "\n";
  out << "irreducible " << (irr.irreducible ? "true" : "false") << " commutant_dim " << irr.commutant_dim << "\n";
  return report.valid ? kExitOk : kExitInputError;
}

int cmd_dpi(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  const auto rep = load_rep(ctx, cfg);
  formal_dimension(rep, cfg.seed);
  out << "dim " << rep.dim() << "\n";
  out << "group_order " << ctx.group.order() << "\n";
  out << "dpi_counting " << rational(rep.dim(), ctx.group.order()) << "\n";
  if (ctx.tf) out << "dpi_paper 1\n";
  return kExitOk;
}

int cmd_superframe(const RunConfig& cfg, std::ostream& out) {
  const auto ctx = load_context(cfg);
  if (!ctx.tf) throw Error(ErrorCode::InvalidInput, "superframe needs --cocycle weyl-heisenberg");
  const auto lattices = load_lattices(ctx, cfg);
  if (lattices.size() != 1) throw Error(ErrorCode::InvalidInput, "superframe needs a single lattice");
  const auto demo = superframe_demo(*ctx.tf, lattices.front(), cfg.d, cfg.seed);
  Json j;
  j["parseval"] = demo.parseval;
  j["system"] = io::system_to_json(demo.system);
  j["frame_report"] = io::frame_report_to_json(demo.report);
  Sink sink(cfg.out, out);
  sink.get() << j.dump(2) << "\n";
  return demo.parseval ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"latdim: von Neumann dimension and frame existence on finite groups", "latdim"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig flags;
  std::string config_path;
  std::string rep_flag;
  app.add_option("--config", config_path, "JSON config file; command-line flags override it");
  app.add_option("--group", flags.group, "builtin group name (Z6, S3, D4, Q8, Z4xZ4, ...) or table file");
  app.add_option("--cocycle", flags.cocycle, "trivial, weyl-heisenberg, or a cocycle JSON file");
  app.add_option("--base", flags.base, "base group A of the time-frequency group A x dual(A)");
  app.add_option("--lattice", flags.lattice, "all, trivial, whole, or generators like \"(2,0),(0,2)\"");
  app.add_option("--rep", rep_flag, "irreducible type index or representation JSON file");
  app.add_option("--window", flags.window, "e0, random, or a JSON vector file");
  app.add_option("--n", flags.n, "number of windows")->check(CLI::PositiveNumber);
  app.add_option("--d", flags.d, "super multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--nmax", flags.n_max, "largest n in scans")->check(CLI::PositiveNumber);
  app.add_option("--dmax", flags.d_max, "largest d in scans")->check(CLI::PositiveNumber);
  app.add_option("--samples", flags.samples, "random systems drawn by density-audit");
  app.add_option("--seed", flags.seed, "random seed");
  app.add_option("--tol-unit", flags.tolerances.unit);
  app.add_option("--tol-id", flags.tolerances.identity);
  app.add_option("--tol-psd", flags.tolerances.psd);
  app.add_option("--tol-frame", flags.tolerances.frame);
  app.add_option("--out", flags.out, "output file");
  app.add_option("--in", flags.in, "input CSV for density-audit");
  app.add_option("--kind", flags.kind, "construct: parseval, orthonormal or auto");
  app.add_flag("--json", flags.json, "JSON output");
  app.add_flag("--oracle", flags.oracle, "phi: also run the brute-force oracle");
  app.add_flag("--no-construct{false}", flags.construct, "gabor-scan: skip constructions");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate-cocycle", "check the cocycle identity, unit modulus and normalization"},
      {"kleppner", "report whether only the identity class is sigma-regular"},
      {"cvt", "print the center-valued trace of every lambda(gamma)"},
      {"phi", "the phi-function of H_pi over each lattice"},
      {"decide", "frame / Riesz / basis existence for n windows and d copies"},
      {"construct", "Parseval or orthonormal generators"},
      {"gabor-scan", "scan every lattice of A x dual(A) and all n, d"},
      {"density-audit", "check density inequalities on random systems or a scan CSV"},
      {"validate-rep", "validate a projective representation"},
      {"dpi", "formal dimension of the representation"},
      {"superframe", "1-window d-super Parseval Gabor frame"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  auto args = normalize_args(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) apply_json(cfg, io::read_json_file(config_path));
    // Command-line values win over the config file.
    const std::vector<std::pair<std::string, std::function<void()>>> overrides{
        {"--group", [&] { cfg.group = flags.group; }},
        {"--cocycle", [&] { cfg.cocycle = flags.cocycle; }},
        {"--base", [&] { cfg.base = flags.base; }},
        {"--lattice", [&] { cfg.lattice = flags.lattice; }},
        {"--rep", [&] { cfg.rep = rep_flag; }},
        {"--window", [&] { cfg.window = flags.window; }},
        {"--n", [&] { cfg.n = flags.n; }},
        {"--d", [&] { cfg.d = flags.d; }},
        {"--nmax", [&] { cfg.n_max = flags.n_max; }},
        {"--dmax", [&] { cfg.d_max = flags.d_max; }},
        {"--samples", [&] { cfg.samples = flags.samples; }},
        {"--seed", [&] { cfg.seed = flags.seed; }},
        {"--tol-unit", [&] { cfg.tolerances.unit = flags.tolerances.unit; }},
        {"--tol-id", [&] { cfg.tolerances.identity = flags.tolerances.identity; }},
        {"--tol-psd", [&] { cfg.tolerances.psd = flags.tolerances.psd; }},
        {"--tol-frame", [&] { cfg.tolerances.frame = flags.tolerances.frame; }},
        {"--out", [&] { cfg.out = flags.out; }},
        {"--in", [&] { cfg.in = flags.in; }},
        {"--kind", [&] { cfg.kind = flags.kind; }},
        {"--json", [&] { cfg.json = flags.json; }},
        {"--oracle", [&] { cfg.oracle = flags.oracle; }},
        {"--no-construct", [&] { cfg.construct = flags.construct; }},
    };
    for (const auto& [name, apply] : overrides)
      if (app.count(name) > 0) apply();

    const auto name = app.get_subcommands().front()->get_name();
    if (name == "validate-cocycle") return cmd_validate_cocycle(cfg, out);
    if (name == "kleppner") return cmd_kleppner(cfg, out);
    if (name == "cvt") return cmd_cvt(cfg, out);
    if (name == "phi") return cmd_phi(cfg, out);
    if (name == "decide") return cmd_decide(cfg, out);
    if (name == "construct") return cmd_construct(cfg, out);
    if (name == "gabor-scan") return cmd_gabor_scan(cfg, out, err);
    if (name == "density-audit") return cmd_density_audit(cfg, out);
    if (name == "validate-rep") return cmd_validate_rep(cfg, out);
    if (name == "dpi") return cmd_dpi(cfg, out);
    if (name == "superframe") return cmd_superframe(cfg, out);
    err << "error: unknown subcommand " << name << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Infeasible ? kExitInfeasible : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace latdim::cli
