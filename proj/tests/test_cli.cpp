#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wgc/cli.hpp"

using namespace wgc;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wgc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wgc_cli_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

WovenConvCode heawood_woven(const std::string& perm) {
  return build_woven_conv(build_heawood(), cli::builtin::heawood_constituent_check(), parse_permutation(perm));
}

}  // namespace

TEST(Cli, GirthOfBuiltinGraphs) {
  const Outcome u = run_cli({"girth", "--graph", "builtin:utility"});
  EXPECT_EQ(u.status, 0);
  EXPECT_EQ(u.out, "4\n");
  EXPECT_EQ(run_cli({"girth", "--graph", "heawood"}).out, std::to_string(*girth(build_heawood())) + "\n");
  EXPECT_EQ(run_cli({"girth", "--graph", "builtin:3partite"}).out, std::to_string(*girth(build_3partite_example())) + "\n");
}

TEST(Cli, GraphFileMatchesBuiltin) {
  const std::string path = write_temp("heawood.txt", build_heawood().to_string());
  EXPECT_EQ(run_cli({"girth", "--graph", path}).out, run_cli({"girth", "--graph", "builtin:heawood"}).out);
  EXPECT_EQ(run_cli({"sd-girth", "--graph", path, "--d", "2"}).out, "6\n");
  std::remove(path.c_str());
}

TEST(Cli, SdGirthParity) {
  const Hypergraph g = build_3partite_example();
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto expect = sd_girth(g, d);
    EXPECT_EQ(run_cli({"sd-girth", "--graph", "builtin:3partite", "--d", std::to_string(d)}).out,
              (expect ? std::to_string(*expect) : std::string("none")) + "\n");
  }
  EXPECT_EQ(run_cli({"sd-girth", "--graph", "builtin:3partite", "--d", "1"}).status, 1);
}

TEST(Cli, MinDistParityInBothFormats) {
  const LinearBlockCode code(build_heawood().incidence_matrix());
  const CodeReport r = CodeReport::make("builtin:heawood", code, min_distance(code));
  EXPECT_EQ(run_cli({"mindist", "--h", "builtin:heawood"}).out, r.key_value());
  EXPECT_EQ(run_cli({"mindist", "--h", "builtin:heawood", "--format", "csv"}).out, CodeReport::csv_header() + r.csv_row());
  const std::string path = write_temp("h.txt", build_utility().incidence_matrix().to_string());
  const Outcome f = run_cli({"mindist", "--h", path});
  EXPECT_EQ(f.status, 0);
  EXPECT_NE(f.out.find("d_min=4\n"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, FreeAndBlockDistanceParity) {
  const ConvCode c = ConvCode::from_parity_check(cli::builtin::heawood_constituent_check());
  const Outcome f = run_cli({"freedist", "--h", "builtin:heawood-constituent"});
  EXPECT_EQ(f.out, "nu=" + std::to_string(c.constraint_length()) + "\nd_free=" + std::to_string(free_distance(c)) + "\n");
  const Outcome fg = run_cli({"freedist", "--g", "builtin:tb-generator", "--spectrum", "1"});
  const ConvCode tb = ConvCode::from_generator(cli::builtin::tailbiting_generator());
  std::string expect = "nu=" + std::to_string(tb.constraint_length()) + "\nd_free=" + std::to_string(free_distance(tb)) + "\n";
  for (const auto& [w, n] : spectrum(tb, 1)) expect += "spectrum[" + std::to_string(w) + "]=" + std::to_string(n) + "\n";
  EXPECT_EQ(fg.out, expect);
  EXPECT_EQ(run_cli({"blockdist", "--h", "builtin:heawood-constituent"}).out, std::to_string(block_distance_conv(c)) + "\n");
  const LinearBlockCode u(cli::builtin::utility_constituent());
  EXPECT_EQ(run_cli({"blockdist", "--h", "builtin:utility-constituent", "--l", "4"}).out,
            std::to_string(block_distance(u, {4, 3})) + "\n");
}

TEST(Cli, GraphCodeReportsBounds) {
  const Outcome o = run_cli({"graph-code", "--graph", "builtin:heawood"});
  const LinearBlockCode code = build_graph_code(build_heawood(), BinaryMatrix::from_rows({"111"}));
  CodeReport r = CodeReport::make("heawood", code, min_distance(code));
  r.rate_lower_bound = rate_bound(2, Rational(2, 3));
  r.distance_bound = sd_girth(build_heawood(), 2);
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, r.key_value());
}

TEST(Cli, WovenBlockDefaultsToUtilityExample) {
  const Outcome o = run_cli({"woven-block"});
  EXPECT_EQ(o.status, 0);
  const Hypergraph g = build_utility();
  const WovenBlockCode w = build_woven_block(g, cli::builtin::utility_constituent(), {4, 3},
                                             assignment_by_first_partition_slot(g, {1, 2, 0}));
  EXPECT_NE(o.out.find("n=36\nk=12\nd_min=" + std::to_string(min_distance(w.code).upper) + "\n"), std::string::npos);
  EXPECT_NE(o.out.find("distance_bound_unavailable="), std::string::npos);
}

TEST(Cli, WovenBuildAndBoundsParity) {
  const WovenConvCode code = heawood_woven("1,3,2");
  EXPECT_EQ(run_cli({"woven", "build", "--graph", "heawood", "--perm", "1,3,2"}).out, cli::woven_build_report("heawood", code));
  EXPECT_EQ(run_cli({"woven", "bounds"}).out, cli::distance_report(distance_bounds(code)));
  EXPECT_NE(run_cli({"woven", "build"}).out.find("nu_raw=70\nnu_min=64\n"), std::string::npos);
}

TEST(Cli, WovenWitnessParityAndTargetStatus) {
  const WovenConvCode code = heawood_woven("2,3,1");
  WitnessOptions wo;
  wo.target = 30;
  const WitnessResult w = witness_search(expanded_generator(code).code_basis, wo);
  const Outcome o = run_cli({"woven", "witness", "--perm", "2,3,1", "--target", "30"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, cli::witness_report(code, w));
  const Outcome miss = run_cli({"woven", "witness", "--target", "31", "--budget", "0"});
  EXPECT_EQ(miss.status, 1);
  EXPECT_NE(miss.out.find("meets_target=false"), std::string::npos);
}

TEST(Cli, WovenSweepParity) {
  const Outcome o = run_cli({"woven", "sweep", "--budget", "0"});
  SweepOptions so;
  so.witness.search_budget = 0;
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out, sweep_csv(permutation_sweep(build_heawood(), cli::builtin::heawood_constituent_check(), so)));
}

TEST(Cli, WovenEncodeParityAndPadding) {
  const WovenConvCode code = heawood_woven("1,3,2");
  const std::vector<std::uint8_t> info = {1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0};
  std::string text;
  for (auto b : info) text += static_cast<char>('0' + b);
  const std::string path = write_temp("bits.txt", text.substr(0, 7) + "\n" + text.substr(7) + "\n");
  std::string expect;
  for (auto b : encode_stream(code, info)) expect += static_cast<char>('0' + b);
  EXPECT_EQ(run_cli({"woven", "encode", "--in", path}).out, expect + "\n");

  EncodeOptions zero;
  zero.tailbiting = false;
  expect.clear();
  for (auto b : encode_stream(code, info, zero)) expect += static_cast<char>('0' + b);
  EXPECT_EQ(run_cli({"woven", "encode", "--in", path, "--zero-start"}).out, expect + "\n");

  const std::string short_path = write_temp("short.txt", "101");
  const Outcome rejected = run_cli({"woven", "encode", "--in", short_path});
  EXPECT_EQ(rejected.status, 1);
  EXPECT_NE(rejected.err.find("multiple of 7"), std::string::npos);
  const Outcome padded = run_cli({"woven", "encode", "--in", short_path, "--pad"});
  EXPECT_EQ(padded.status, 0);
  EXPECT_EQ(padded.out.size(), 22u);

  const std::string bad_path = write_temp("bad.txt", "10x");
  EXPECT_EQ(run_cli({"woven", "encode", "--in", bad_path}).status, 1);
  std::remove(path.c_str());
  std::remove(short_path.c_str());
  std::remove(bad_path.c_str());
}

TEST(Cli, BoundsCsv) {
  const Outcome c = run_cli({"bounds", "--kind", "costello", "--step", "0.5"});
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.out, emit_curves({}, 0.5, CurveKind::kCostello));
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 2);

  const std::string path = temp_path("vg.csv");
  const Outcome v = run_cli({"bounds", "--kind", "vg", "--s", "2,3", "--step", "0.1", "--out", path});
  EXPECT_EQ(v.status, 0);
  EXPECT_TRUE(v.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), emit_curves({2, 3}, 0.1, CurveKind::kVg));
  std::remove(path.c_str());

  EXPECT_EQ(run_cli({"bounds", "--step", "0.7"}).status, 2);
  EXPECT_EQ(run_cli({"bounds", "--kind", "nope"}).status, 2);
  EXPECT_EQ(run_cli({"bounds", "--s", "2,x"}).status, 2);
}

TEST(Cli, VerifyHeawoodAllPass) {
  const Outcome o = run_cli({"verify", "heawood"});
  EXPECT_EQ(o.status, 0);
  const auto lines = cli::verify_heawood();
  EXPECT_EQ(lines.size(), 12u);
  for (const auto& l : lines) EXPECT_TRUE(l.pass()) << l.name << ": " << l.actual;
  EXPECT_EQ(o.out, cli::verify_table(lines));
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"nope"}).status, 2);
  EXPECT_EQ(run_cli({"girth", "--bogus"}).status, 2);
  EXPECT_EQ(run_cli({"girth", "--graph", "builtin:petersen"}).status, 2);
  EXPECT_EQ(run_cli({"girth", "--graph", "/nonexistent/graph.txt"}).status, 2);
  EXPECT_EQ(run_cli({"mindist"}).status, 2);
  EXPECT_EQ(run_cli({"mindist", "--h", "builtin:nothing"}).status, 2);
  EXPECT_EQ(run_cli({"freedist"}).status, 2);
  EXPECT_EQ(run_cli({"freedist", "--g", "builtin:tb-generator", "--h", "builtin:tb-check"}).status, 2);
  EXPECT_EQ(run_cli({"woven", "build", "--perm", "1,1,2"}).status, 2);
  EXPECT_EQ(run_cli({"woven"}).status, 2);
  EXPECT_EQ(run_cli({"verify"}).status, 2);
  EXPECT_EQ(run_cli({"girth", "--threads", "0"}).status, 2);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST(Cli, AnalysisErrorsExitOne) {
  const std::string path = write_temp("catastrophic.txt", PolyMatrix::from_strings({{"11", "101"}}).to_string());
  const Outcome o = run_cli({"freedist", "--g", path});
  EXPECT_EQ(o.status, 1);
  EXPECT_NE(o.err.find("catastrophic"), std::string::npos);
  const std::string malformed = write_temp("malformed.txt", "2 3\n101\n");
  EXPECT_EQ(run_cli({"mindist", "--h", malformed}).status, 1);
  EXPECT_EQ(run_cli({"woven", "bounds", "--graph", "builtin:3partite"}).status, 1);
  std::remove(path.c_str());
  std::remove(malformed.c_str());
}

TEST(Cli, OutputIsDeterministicAcrossThreadCounts) {
  const auto a = run_cli({"--threads", "1", "mindist", "--h", "builtin:heawood"});
  const auto b = run_cli({"--threads", "3", "mindist", "--h", "builtin:heawood"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"woven", "build"}).out, run_cli({"woven", "build"}).out);
  EXPECT_EQ(run_cli({"--threads", "1", "woven-block"}).out, run_cli({"--threads", "2", "woven-block"}).out);
}

TEST(Cli, ThreadCountFallsBackToEnvironment) {
  ::setenv("WGC_THREADS", "3", 1);
  EXPECT_EQ(cli::detail::default_threads(), 3u);
  ::setenv("WGC_THREADS", "junk", 1);
  EXPECT_GE(cli::detail::default_threads(), 1u);
  ::unsetenv("WGC_THREADS");
  EXPECT_GE(cli::detail::default_threads(), 1u);
}
