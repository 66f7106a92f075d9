#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "latdim/cli.hpp"
#include "latdim/error.hpp"
#include "latdim/io.hpp"

using namespace latdim;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "latdim_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST(Cli, Kleppner) {
  const auto r = run_cli({"kleppner", "--group", "Z4xZ4", "--cocycle", "weyl-heisenberg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(run_cli({"kleppner", "--group", "Z4"}).out, "false\n");
}

TEST(Cli, DecideBasis) {
  const auto r = run_cli({"decide", "--group", "Z4xZ4", "--cocycle", "weyl-heisenberg", "--lattice", "(2,0),(0,2)",
                          "--n", "1", "--d", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frame yes"), std::string::npos);
  EXPECT_NE(r.out.find("riesz yes"), std::string::npos);
  EXPECT_NE(r.out.find("basis yes"), std::string::npos);
}

TEST(Cli, TwoWordAliases) {
  const auto a = run_cli({"frame", "decide", "--group", "Z4xZ4", "--cocycle", "weyl-heisenberg", "--lattice", "(2,0)"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("frame no"), std::string::npos);
  EXPECT_NE(a.out.find("riesz yes"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"kleppner", "--group", "NoSuchGroup"}).code, 1);
  EXPECT_EQ(run_cli({"bogus-subcommand"}).code, 1);
  EXPECT_EQ(run_cli({"decide", "--n", "0"}).code, 1);
  const auto missing = temp_path("missing.txt");
  std::filesystem::remove(missing);
  EXPECT_EQ(run_cli({"kleppner", "--group", missing.string()}).code, 1);
}

TEST(Cli, CayleyFileErrorsCarryLineNumbers) {
  const auto p = temp_path("bad_table.txt");
  write(p, "order 2\n0 1\n1 x\n");
  const auto r = run_cli({"kleppner", "--group", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(":3"), std::string::npos) << r.err;
}

TEST(Cli, CorruptedCocycleNamesTriple) {
  const auto g = build_cyclic(3);
  auto table = trivial_cocycle(g).table();
  table[1 * 3 + 2] = -1.0;
  const auto p = temp_path("bad_cocycle.json");
  write(p, io::cocycle_to_json(Cocycle(g, table, "bad")).dump());
  const auto r = run_cli({"validate-cocycle", "--group", "Z3", "--cocycle", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("("), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"validate-cocycle", "--group", "Z3"}).code, 0);
}

TEST(Cli, InfeasibleConstruction) {
  const auto r = run_cli(
      {"construct", "--group", "Z4xZ4", "--cocycle", "weyl-heisenberg", "--lattice", "(2,0)", "--kind", "parseval"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run_cli({"superframe", "--group", "Z2xZ2", "--cocycle", "weyl-heisenberg", "--lattice", "whole", "--d",
                     "3"})
                .code,
            2);
}

TEST(Cli, PhiJson) {
  const auto r = run_cli({"phi", "--group", "Z2", "--rep", "1", "--lattice", "whole", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_FALSE(j.dump().empty());
  EXPECT_NE(r.out.find("oracle_max_diff"), std::string::npos);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto cfg = temp_path("config.json");
  write(cfg, R"json({"group": "Z4xZ4", "cocycle": "weyl-heisenberg", "lattice": "(2,0)", "n": 1, "d": 1})json");
  const auto from_file = run_cli({"decide", "--config", cfg.string()});
  EXPECT_EQ(from_file.code, 0);
  EXPECT_NE(from_file.out.find("frame no"), std::string::npos);
  const auto overridden = run_cli({"decide", "--config", cfg.string(), "--lattice", "(2,0),(0,2)"});
  EXPECT_NE(overridden.out.find("frame yes"), std::string::npos);
}

TEST(Cli, ScanIsDeterministicAndReingests) {
  const auto a = temp_path("scan_a.csv");
  const auto b = temp_path("scan_b.csv");
  const std::vector<std::string> base{"gabor-scan", "--base", "Z3", "--nmax", "2", "--dmax", "2", "--seed", "7"};
  auto with_out = [&](const std::filesystem::path& p) {
    auto args = base;
    args.push_back("--out");
    args.push_back(p.string());
    return run_cli(args);
  };
  EXPECT_EQ(with_out(a).code, 0);
  EXPECT_EQ(with_out(b).code, 0);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  const auto audit = run_cli({"density-audit", "--in", a.string()});
  EXPECT_EQ(audit.code, 0);
  EXPECT_NE(audit.out.find("violations 0"), std::string::npos) << audit.out;
}

TEST(Cli, DensityAuditRandomDraws) {
  const auto r = run_cli({"density-audit", "--base", "Z2", "--samples", "30", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations 0"), std::string::npos);
  EXPECT_EQ(r.out, run_cli({"density-audit", "--base", "Z2", "--samples", "30", "--seed", "3"}).out);
}

TEST(Io, CsvQuotingRoundTrip) {
  std::ostringstream os;
  io::write_csv_row(os, {"plain", "with,comma", "with \"quote\"", "(0,2),(2,0)"});
  std::istringstream is(os.str());
  const auto rows = io::read_csv(is, "memory");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"plain", "with,comma", "with \"quote\"", "(0,2),(2,0)"}));
}

TEST(Io, CayleyRoundTrip) {
  std::ostringstream os;
  io::write_cayley_text(os, build_quaternion());
  std::istringstream is(os.str());
  const auto g = io::read_cayley_text(is, "memory", "Q8");
  EXPECT_EQ(g.cayley(), build_quaternion().cayley());
}

TEST(Io, JsonRoundTrips) {
  const auto wh = weyl_heisenberg(build_cyclic(3));
  const auto back = io::cocycle_from_json(wh.group(), io::cocycle_to_json(wh));
  for (std::size_t i = 0; i < wh.table().size(); ++i) EXPECT_NEAR(std::abs(back.table()[i] - wh.table()[i]), 0.0, 1e-15);
  Matrix m(2, 2);
  m << Complex(1, 2), 3, Complex(0, -1), 0.5;
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m)), m);
}

TEST(Io, LatticeSpecs) {
  const auto g = build_named("Z4xZ4");
  EXPECT_EQ(io::parse_lattices(g, "all").size(), 15u);
  EXPECT_EQ(io::parse_lattices(g, "trivial").front().order(), 1u);
  EXPECT_EQ(io::parse_lattices(g, "()").front().order(), 1u);
  EXPECT_EQ(io::parse_lattices(g, "whole").front().order(), 16u);
  EXPECT_EQ(io::parse_lattices(g, "(2,0),(0,2)").front().order(), 4u);
  EXPECT_THROW(io::parse_lattices(g, "(5,0)"), Error);
  EXPECT_THROW(io::parse_lattices(g, "(1,"), Error);
}
