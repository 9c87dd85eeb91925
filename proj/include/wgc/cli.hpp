#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wgc/binary_matrix.hpp"
#include "wgc/block_codes.hpp"
#include "wgc/bounds.hpp"
#include "wgc/convolutional.hpp"
#include "wgc/hypergraph.hpp"
#include "wgc/poly_matrix.hpp"
#include "wgc/woven.hpp"

namespace wgc::cli {

/// Input the user got wrong (missing file, unknown builtin); exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Built-in objects

namespace builtin {

/// Rate-2/3 constituent: one check on three coordinates.
inline PolyMatrix heawood_constituent_check() { return PolyMatrix::from_strings({{"11001", "110111", "101111"}}); }
inline PolyMatrix heawood_constituent_generator() {
  return PolyMatrix::from_strings({{"101", "001", "111"}, {"0111", "1", "101"}});
}
/// Rate-1/3 code whose length-7 tailbiting checks are the Heawood incidence matrix.
inline PolyMatrix tailbiting_check() { return PolyMatrix::from_strings({{"1", "1", "1"}, {"1", "01", "0001"}}); }
inline PolyMatrix tailbiting_generator() { return PolyMatrix::from_strings({{"011", "111", "1"}}); }
/// (12,8) constituent split into three blocks of four.
inline BinaryMatrix utility_constituent() {
  return BinaryMatrix::from_rows({"100011101100", "010001110110", "001010110011", "000111011001"});
}
/// Block order used on the second partition of the utility graph, one-based.
inline const char* utility_slots() { return "2,3,1"; }
/// Permutation with the lowest constraint length.
inline const char* best_permutation() { return "1,3,2"; }

}  // namespace builtin

namespace detail {

inline std::string strip_prefix(const std::string& spec) {
  return spec.rfind("builtin:", 0) == 0 ? spec.substr(8) : spec;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

inline bool is_file(const std::string& path) { return std::ifstream(path).good(); }

/// builtin:heawood|utility|3partite (the prefix may be omitted when no such file exists) or a graph file.
inline std::pair<std::string, Hypergraph> load_graph(const std::string& spec) {
  const bool explicit_builtin = spec.rfind("builtin:", 0) == 0;
  const std::string name = strip_prefix(spec);
  if (explicit_builtin || !is_file(spec)) {
    if (name == "heawood") return {name, build_heawood()};
    if (name == "utility") return {name, build_utility()};
    if (name == "3partite") return {name, build_3partite_example()};
    if (explicit_builtin) throw UsageError("unknown builtin graph '" + spec + "' (heawood, utility, 3partite)");
  }
  auto in = open_input(spec);
  return {spec, Hypergraph::read(in)};
}

inline BinaryMatrix all_ones(std::size_t c) { return BinaryMatrix::from_rows({std::string(c, '1')}); }

inline BinaryMatrix load_binary(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = strip_prefix(spec);
    if (name == "heawood") return build_heawood().incidence_matrix();
    if (name == "utility") return build_utility().incidence_matrix();
    if (name == "3partite") return build_3partite_example().incidence_matrix();
    if (name == "utility-constituent") return builtin::utility_constituent();
    if (name == "parity3") return all_ones(3);
    if (name == "parity4") return all_ones(4);
    throw UsageError("unknown builtin matrix '" + spec +
                     "' (heawood, utility, 3partite, utility-constituent, parity3, parity4)");
  }
  auto in = open_input(spec);
  return BinaryMatrix::read(in);
}

inline PolyMatrix load_poly(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = strip_prefix(spec);
    if (name == "heawood-constituent") return builtin::heawood_constituent_check();
    if (name == "heawood-constituent-g") return builtin::heawood_constituent_generator();
    if (name == "tb-check") return builtin::tailbiting_check();
    if (name == "tb-generator") return builtin::tailbiting_generator();
    throw UsageError("unknown builtin polynomial matrix '" + spec +
                     "' (heawood-constituent, heawood-constituent-g, tb-check, tb-generator)");
  }
  auto in = open_input(spec);
  return PolyMatrix::read(in);
}

inline std::string optional_to_string(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

inline std::string poly_vector_to_string(const std::vector<BinaryPoly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

/// '0'/'1' characters; whitespace ignored.
inline std::vector<std::uint8_t> read_bits(std::istream& in) {
  std::vector<std::uint8_t> bits;
  char ch = 0;
  while (in.get(ch)) {
    if (ch == '0' || ch == '1') bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw std::invalid_argument(std::string("bit stream: unexpected character '") + ch + "'");
  }
  return bits;
}

inline std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad list entry '" + item + "'");
    }
    if (pos != item.size()) throw UsageError("bad list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline std::size_t default_threads() {
  if (const char* env = std::getenv("WGC_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reports shared with the tests

/// One row of the end-to-end Heawood check.
struct VerifyLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass() const { return expected == actual; }
};

inline std::vector<VerifyLine> verify_heawood(std::size_t threads = 1) {
  std::vector<VerifyLine> lines;
  auto add = [&](std::string name, std::size_t expected, std::size_t actual) {
    lines.push_back({std::move(name), std::to_string(expected), std::to_string(actual)});
  };
  const Hypergraph g = build_heawood();
  add("graph girth", 6, girth(g).value_or(0));

  const LinearBlockCode tb = tb_block_code(ConvCode::from_generator(builtin::tailbiting_generator()), 7);
  MinDistanceOptions mo;
  mo.threads = threads;
  lines.push_back({"tailbiting code (n,k)", "(21,7)",
                   "(" + std::to_string(tb.length()) + "," + std::to_string(tb.dimension()) + ")"});
  add("tailbiting code d_min", 6, min_distance(tb, mo).upper);

  const WovenConvCode code =
      build_woven_conv(g, builtin::heawood_constituent_check(), parse_permutation(builtin::best_permutation()));
  const DistanceReport dr = distance_bounds(code);
  add("constituent d_free", 6, dr.constituent_free_distance);
  add("constituent d_block", 2, dr.constituent_block_distance);
  add("rate-1/2 subcode min d_free", 8, dr.subcode_free_distance.value_or(0));
  add("product bound", 18, dr.product_bound);
  add("improved bound", 24, dr.improved_bound);

  const ExpandedGenerator eg = expanded_generator(code);
  add("nu raw", 70, static_cast<std::size_t>(eg.nu_raw));
  add("nu minimal-basic", 64, static_cast<std::size_t>(eg.nu_min));

  const WitnessResult w = witness_search(eg.code_basis);
  add("witness weight", 32, w.found ? w.weight : 0);
  add("witness orbit", 7, w.found ? orbit_multiplicity(code, w.codeword) : 0);
  return lines;
}

inline std::string verify_table(const std::vector<VerifyLine>& lines) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& l : lines) width = std::max(width, l.name.size());
  os << std::left;
  os << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(9) << "expected" << std::setw(9) << "actual"
     << "result\n";
  for (const auto& l : lines)
    os << std::setw(static_cast<int>(width)) << l.name << "  " << std::setw(9) << l.expected << std::setw(9) << l.actual
       << (l.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

inline std::string woven_build_report(const std::string& graph_name, const WovenConvCode& code) {
  std::ostringstream os;
  const std::size_t rank = code.check_rank();
  os << "graph=" << graph_name << "\nperm=" << permutation_to_string(code.perm) << "\nn=" << code.length()
     << "\ncheck_rank=" << rank << "\nk=" << code.length() - rank << "\nrate=" << code.rate().to_string() << '\n';
  const bool two_dim = code.graph.s() == 2 && code.constituent_check.rows() == 1 && code.graph.c() == 3 &&
                       is_circulant(code.graph);
  if (two_dim) {
    const ExpandedGenerator eg = expanded_generator(code);
    os << "nu_raw=" << eg.nu_raw << "\nnu_min=" << eg.nu_min
       << "\nraw_full_rank=" << (eg.raw_full_rank ? "true" : "false") << '\n';
    os << "[H_wg]\n" << code.h_wg.to_string() << "[G_min]\n" << eg.code_basis.to_string();
  } else {
    os << "[H_wg]\n" << code.h_wg.to_string();
  }
  return os.str();
}

inline std::string distance_report(const DistanceReport& r) {
  std::ostringstream os;
  os << "constituent_free_distance=" << r.constituent_free_distance
     << "\nconstituent_block_distance=" << r.constituent_block_distance
     << "\ngirth=" << detail::optional_to_string(r.girth) << "\nactive_constituents=" << r.active_constituents
     << "\nsubcode_free_distance=" << detail::optional_to_string(r.subcode_free_distance)
     << "\nproduct_bound=" << r.product_bound << "\nimproved_bound=" << r.improved_bound << '\n';
  return os.str();
}

inline std::string witness_report(const WovenConvCode& code, const WitnessResult& w) {
  std::ostringstream os;
  os << "found=" << (w.found ? "true" : "false") << '\n';
  if (w.found) {
    os << "weight=" << w.weight << "\norbit=" << orbit_multiplicity(code, w.codeword)
       << "\ninformation=" << detail::poly_vector_to_string(w.information)
       << "\ncodeword=" << detail::poly_vector_to_string(w.codeword) << '\n';
  }
  os << "meets_target=" << (w.meets_target ? "true" : "false") << "\nexhaustive=" << (w.search_complete ? "true" : "false")
     << "\nsearch_entries=" << w.search_entries << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Entry point

/// Runs the command line; returns 0 on success, 1 on analysis errors, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Woven graph codes: construction, distances and bounds", "wgc"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (default: WGC_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);

  std::string graph_spec = "builtin:heawood";
  std::string matrix_spec, g_spec, h_spec, hc_spec, perm_text, in_path, out_path, format = "text";
  std::string slots_text;
  std::size_t d = 2, l = 0, spectrum_depth = 0;
  std::size_t budget = WitnessOptions{}.search_budget;
  std::optional<std::size_t> target;
  bool pad = false, zero_start = false;
  std::string kind = "vg", s_list = "2,3,4,10";
  double step = 0.01;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_spec, "builtin:heawood|utility|3partite or a graph file")->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
  };

  std::function<int()> action;

  auto* girth_cmd = app.add_subcommand("girth", "hypergraph girth");
  add_graph(girth_cmd);
  girth_cmd->callback([&] {
    action = [&] {
      out << detail::optional_to_string(girth(detail::load_graph(graph_spec).second)) << '\n';
      return 0;
    };
  });

  auto* sd_cmd = app.add_subcommand("sd-girth", "smallest compact subgraph with every vertex degree >= d");
  add_graph(sd_cmd);
  sd_cmd->add_option("--d", d, "minimum vertex degree inside the subgraph")->check(CLI::PositiveNumber)->capture_default_str();
  sd_cmd->callback([&] {
    action = [&] {
      out << detail::optional_to_string(sd_girth(detail::load_graph(graph_spec).second, d)) << '\n';
      return 0;
    };
  });

  auto* mindist_cmd = app.add_subcommand("mindist", "minimum distance of a block code given by its parity checks");
  mindist_cmd->add_option("--h", matrix_spec, "parity-check matrix: file or builtin:<name>")->required();
  add_format(mindist_cmd);
  mindist_cmd->callback([&] {
    action = [&] {
      const LinearBlockCode code(detail::load_binary(matrix_spec));
      MinDistanceOptions mo;
      mo.threads = threads;
      const CodeReport r = CodeReport::make(matrix_spec, code, min_distance(code, mo));
      out << (format == "csv" ? CodeReport::csv_header() + r.csv_row() : r.key_value());
      return 0;
    };
  });

  auto* free_cmd = app.add_subcommand("freedist", "free distance of a convolutional code");
  auto* free_g = free_cmd->add_option("--g", g_spec, "polynomial generator: file or builtin:<name>");
  auto* free_h = free_cmd->add_option("--h", h_spec, "polynomial parity check: file or builtin:<name>");
  free_g->excludes(free_h);
  free_cmd->add_option("--spectrum", spectrum_depth, "also list path counts up to d_free + depth");
  free_cmd->callback([&] {
    action = [&] {
      if (g_spec.empty() && h_spec.empty()) throw UsageError("freedist: give --g or --h");
      const ConvCode code = g_spec.empty() ? ConvCode::from_parity_check(detail::load_poly(h_spec))
                                           : ConvCode::from_generator(detail::load_poly(g_spec));
      out << "nu=" << code.constraint_length() << "\nd_free=" << free_distance(code) << '\n';
      if (spectrum_depth > 0)
        for (const auto& [w, count] : spectrum(code, spectrum_depth)) out << "spectrum[" << w << "]=" << count << '\n';
      return 0;
    };
  });

  auto* block_cmd = app.add_subcommand("blockdist", "fewest nonzero sub-blocks (or coordinate series) in a codeword");
  block_cmd->add_option("--h", matrix_spec, "parity checks: polynomial, or binary with --l")->required();
  block_cmd->add_option("--l", l, "sub-block width; selects a binary block-code matrix");
  block_cmd->callback([&] {
    action = [&] {
      if (l > 0) {
        const LinearBlockCode code(detail::load_binary(matrix_spec));
        if (code.length() % l != 0) throw std::invalid_argument("blockdist: length is not a multiple of --l");
        out << block_distance(code, {l, code.length() / l}) << '\n';
      } else {
        out << block_distance_conv(ConvCode::from_parity_check(detail::load_poly(matrix_spec))) << '\n';
      }
      return 0;
    };
  });

  auto* gc_cmd = app.add_subcommand("graph-code", "graph-based block code with a constituent at every vertex");
  add_graph(gc_cmd);
  gc_cmd->add_option("--hc", hc_spec, "binary constituent checks (default: single parity check)");
  add_format(gc_cmd);
  gc_cmd->callback([&] {
    action = [&] {
      const auto [name, g] = detail::load_graph(graph_spec);
      const BinaryMatrix hc = hc_spec.empty() ? detail::all_ones(g.c()) : detail::load_binary(hc_spec);
      const LinearBlockCode code = build_graph_code(g, hc);
      MinDistanceOptions mo;
      mo.threads = threads;
      CodeReport r = CodeReport::make(name, code, min_distance(code, mo));
      const LinearBlockCode constituent(hc);
      r.rate_lower_bound = rate_bound(g.s(), constituent.rate());
      const std::size_t dc = min_distance(constituent).upper;
      if (dc >= 2) r.distance_bound = sd_girth(g, dc);
      out << (format == "csv" ? CodeReport::csv_header() + r.csv_row() : r.key_value());
      return 0;
    };
  });

  auto* wb_cmd = app.add_subcommand("woven-block", "woven graph code with a block constituent");
  wb_cmd->add_option("--graph", graph_spec, "graph (default: builtin:utility)");
  wb_cmd->add_option("--hc", hc_spec, "binary constituent (default: builtin:utility-constituent)");
  wb_cmd->add_option("--l", l, "sub-block width (default: constituent length / degree)");
  wb_cmd->add_option("--slots", slots_text,
                     "bipartite graphs: block placed on an edge of the second partition, indexed by the edge's slot "
                     "at its first-partition vertex, one-based");
  add_format(wb_cmd);
  wb_cmd->callback([&] {
    action = [&] {
      const bool defaults = wb_cmd->count("--graph") == 0;
      const auto [name, g] = detail::load_graph(defaults ? "builtin:utility" : graph_spec);
      const BinaryMatrix hc = hc_spec.empty() ? builtin::utility_constituent() : detail::load_binary(hc_spec);
      const std::size_t width = l > 0 ? l : hc.cols() / g.c();
      const BlockStructure bs{width, g.c()};
      std::string slots = slots_text;
      if (slots.empty() && defaults && hc_spec.empty()) slots = builtin::utility_slots();
      Assignment a = identity_assignment(g);
      if (!slots.empty()) a = assignment_by_first_partition_slot(g, parse_permutation(slots));
      const WovenBlockCode w = build_woven_block(g, hc, bs, a);
      MinDistanceOptions mo;
      mo.threads = threads;
      CodeReport r = CodeReport::make(name, w.code, min_distance(w.code, mo));
      r.rate_lower_bound = rate_bound(g.s(), LinearBlockCode(hc).rate());
      std::string note;
      try {
        r.distance_bound = woven_block_distance_bound(g, hc, bs);
      } catch (const std::invalid_argument& e) {
        note = e.what();
      }
      out << (format == "csv" ? CodeReport::csv_header() + r.csv_row() : r.key_value());
      if (!note.empty() && format != "csv") out << "distance_bound_unavailable=" << note << '\n';
      return 0;
    };
  });

  auto* woven_cmd = app.add_subcommand("woven", "woven graph codes with a convolutional constituent");
  woven_cmd->require_subcommand(1);
  auto add_woven = [&](CLI::App* sub) {
    add_graph(sub);
    sub->add_option("--hc", hc_spec, "polynomial constituent checks (default: builtin:heawood-constituent)");
    sub->add_option("--perm", perm_text, "one-based column order on the second partition, e.g. 1,3,2 (default: 1,3,2)");
  };
  auto load_woven = [&]() {
    const auto [name, g] = detail::load_graph(graph_spec);
    const PolyMatrix hc = hc_spec.empty() ? builtin::heawood_constituent_check() : detail::load_poly(hc_spec);
    std::vector<std::size_t> perm;
    try {
      perm = parse_permutation(perm_text.empty() ? builtin::best_permutation() : perm_text);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return std::make_pair(name, build_woven_conv(g, hc, perm));
  };
  auto add_witness_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "map entries for the bidirectional pass (0 skips it)")->capture_default_str();
  };

  auto* wbuild = woven_cmd->add_subcommand("build", "parity checks, expanded generator and constraint lengths");
  add_woven(wbuild);
  wbuild->callback([&] {
    action = [&] {
      const auto [name, code] = load_woven();
      out << woven_build_report(name, code);
      return 0;
    };
  });

  auto* wbounds = woven_cmd->add_subcommand("bounds", "free-distance lower bounds");
  add_woven(wbounds);
  wbounds->callback([&] {
    action = [&] {
      out << distance_report(distance_bounds(load_woven().second));
      return 0;
    };
  });

  auto* wwitness = woven_cmd->add_subcommand("witness", "low-weight codeword search");
  add_woven(wwitness);
  add_witness_flags(wwitness);
  wwitness->add_option("--target", target, "report whether a codeword of at most this weight was found");
  wwitness->callback([&] {
    action = [&] {
      const auto [name, code] = load_woven();
      WitnessOptions wo;
      wo.search_budget = budget;
      wo.target = target;
      const WitnessResult w = witness_search(expanded_generator(code).code_basis, wo);
      out << witness_report(code, w);
      return w.meets_target ? 0 : 1;
    };
  });

  auto* wsweep = woven_cmd->add_subcommand("sweep", "all column orders of the second partition, as CSV");
  add_graph(wsweep);
  wsweep->add_option("--hc", hc_spec, "polynomial constituent checks (default: builtin:heawood-constituent)");
  add_witness_flags(wsweep);
  wsweep->callback([&] {
    action = [&] {
      const auto [name, g] = detail::load_graph(graph_spec);
      const PolyMatrix hc = hc_spec.empty() ? builtin::heawood_constituent_check() : detail::load_poly(hc_spec);
      SweepOptions so;
      so.witness.search_budget = budget;
      out << sweep_csv(permutation_sweep(g, hc, so));
      return 0;
    };
  });

  auto* wencode = woven_cmd->add_subcommand("encode", "ring encoder over a frame of information bits");
  add_woven(wencode);
  wencode->add_option("--in", in_path, "file of 0/1 characters ('-' for standard input)")->required();
  wencode->add_flag("--pad", pad, "append zeros up to a whole number of cycles");
  wencode->add_flag("--zero-start", zero_start, "start from the zero state instead of tailbiting");
  wencode->callback([&] {
    action = [&] {
      std::vector<std::uint8_t> bits;
      if (in_path == "-") {
        bits = detail::read_bits(std::cin);
      } else {
        auto in = detail::open_input(in_path);
        bits = detail::read_bits(in);
      }
      EncodeOptions eo;
      eo.pad = pad;
      eo.tailbiting = !zero_start;
      const auto coded = encode_stream(load_woven().second, bits, eo);
      for (const auto b : coded) out << static_cast<char>('0' + b);
      out << '\n';
      return 0;
    };
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "asymptotic distance bounds as CSV");
  bounds_cmd->add_option("--kind", kind, "vg or costello")->check(CLI::IsMember({"vg", "costello"}))->capture_default_str();
  bounds_cmd->add_option("--s", s_list, "partition counts, comma separated")->capture_default_str();
  bounds_cmd->add_option("--step", step, "rate grid step in (0, 0.5]")->capture_default_str();
  bounds_cmd->add_option("--out", out_path, "write to this file instead of standard output");
  bounds_cmd->callback([&] {
    action = [&] {
      const std::vector<std::size_t> s = detail::parse_size_list(s_list);
      if (!(step > 0 && step <= 0.5)) throw UsageError("--step must lie in (0, 0.5]");
      const std::string csv = emit_curves(s, step, kind == "vg" ? CurveKind::kVg : CurveKind::kCostello);
      if (out_path.empty()) {
        out << csv;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << csv;
      }
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "end-to-end reproduction checks");
  verify_cmd->require_subcommand(1);
  auto* verify_heawood_cmd = verify_cmd->add_subcommand("heawood", "Heawood woven convolutional code");
  verify_heawood_cmd->callback([&] {
    action = [&] {
      const auto lines = verify_heawood(threads);
      out << verify_table(lines);
      for (const auto& line : lines)
        if (!line.pass()) return 1;
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (threads == 0) threads = detail::default_threads();
  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "wgc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "wgc: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wgc::cli
