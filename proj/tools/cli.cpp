#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "wcn/arrangement.hpp"
#include "wcn/construction.hpp"
#include "wcn/curves_io.hpp"
#include "wcn/distance.hpp"
#include "wcn/error.hpp"
#include "wcn/norm.hpp"

namespace wcn::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  unsigned threads = 0;

  std::string word, word1, word2, weights;
  bool folding = false, witness = false;

  std::string curves, svg;
  bool null_area = false;
  double eps = kDefaultEps;

  std::size_t m = 2;
  double delta = 1e-3;
  std::string word_out, curve_out;
  bool force = false;

  std::vector<std::size_t> lengths{500, 1000, 2000, 4000};
};

// Shortest text that parses back to the same double.
std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

Word read_word(const std::string& arg, const char* flag) {
  const std::string text = !arg.empty() && arg.front() == '@' ? read_file(arg.substr(1)) : arg;
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

WeightTable read_weights(const Config& c) {
  return c.weights.empty() ? WeightTable::unit() : load_weights(c.weights);
}

json pairs_json(const Folding& f) {
  json out = json::array();
  for (const FoldPair& p : f.pairs) out.push_back({p.first, p.second});
  return out;
}

void print_pairs(std::ostream& out, const Folding& f) {
  for (const FoldPair& p : f.pairs) out << p.first << ' ' << p.second << '\n';
}

int cmd_norm(const Config& c, std::ostream& out) {
  const Word w = read_word(c.word, "--word");
  const WeightTable wt = read_weights(c);
  const NormTable table(w, wt, {c.threads});
  if (c.format == "json") {
    json j{{"value", table.value()}};
    if (c.folding) j["witness"] = {{"pairs", pairs_json(table.traceback())}};
    out << j.dump() << '\n';
  } else {
    out << num(table.value()) << '\n';
    if (c.folding) print_pairs(out, table.traceback());
  }
  return kOk;
}

int cmd_distance(const Config& c, std::ostream& out) {
  const Word w1 = read_word(c.word1, "--word1");
  const Word w2 = read_word(c.word2, "--word2");
  const WeightTable wt = read_weights(c);
  const NormOptions opts{c.threads};
  if (!c.witness) {
    const double d = distance(w1, w2, wt, opts);
    if (c.format == "json") {
      out << json{{"value", d}}.dump() << '\n';
    } else {
      out << num(d) << '\n';
    }
    return kOk;
  }
  const MixedFolding mf = optimal_mixed_folding(w1, w2, wt, opts);
  const double d = mixed_folding_cost(w1, w2, wt, mf);
  if (c.format == "json") {
    json j{{"value", d},
           {"witness", {{"p", mf.p}, {"q", mf.q}, {"pairs", pairs_json(mf.folding)}}}};
    out << j.dump() << '\n';
  } else {
    out << num(d) << '\n' << "p " << mf.p << '\n' << "q " << mf.q << '\n';
    print_pairs(out, mf.folding);
  }
  return kOk;
}

int cmd_area(const Config& c, std::ostream& out) {
  const auto curves = load_curves(c.curves);
  if (c.null_area && curves.size() != 1) {
    throw UsageError("--null needs exactly one curve in '" + c.curves + "' (found " +
                     std::to_string(curves.size()) + ")");
  }
  if (!c.null_area && curves.size() != 2) {
    throw UsageError("'" + c.curves + "' holds " + std::to_string(curves.size()) +
                     " curves; pass two curves, or one with --null");
  }
  const NormOptions opts{c.threads};
  const double value = c.null_area ? null_homotopy_area(curves[0], c.eps, opts)
                                   : homotopy_area(curves[0], curves[1], c.eps, opts);
  if (!c.svg.empty()) write_file(c.svg, render_svg(build_arrangement(curves, c.eps), curves));
  if (c.format == "json") {
    out << json{{"value", value}}.dump() << '\n';
  } else {
    out << num(value) << '\n';
  }
  return kOk;
}

int cmd_construct(const Config& c, std::ostream& out) {
  const Word w = build_wbar(c.m);
  if (!c.word_out.empty()) write_file(c.word_out, format_word(w) + "\n");
  std::optional<ClosedPolyline> curve;
  if (!c.curve_out.empty() || !c.svg.empty()) curve = emit_grid_curve(c.m, c.delta);
  if (!c.curve_out.empty()) write_file(c.curve_out, curves_to_json({*curve}));
  if (!c.svg.empty()) {
    write_file(c.svg, render_svg(build_arrangement({*curve}, c.delta / 100), {*curve}));
  }
  const std::size_t reduced = free_reduce(w).size();
  if (c.format == "json") {
    json j{{"value", w.size()}, {"reduced_length", reduced}};
    if (curve) j["curve_vertices"] = curve->size();
    out << j.dump() << '\n';
  } else {
    out << w.size() << '\n';
    out << "reduced length " << reduced << '\n';
    if (curve) out << "curve vertices " << curve->size() << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  const NormOptions opts{c.threads};
  const MainBoundsReport main = verify_main_bounds(c.m, c.force, opts);
  std::vector<BoundCheck> checks = main.checks;
  for (std::size_t k = 0; k < c.m; ++k) {
    const auto more = verify_upper_bounds(c.m, k, c.force, opts);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  const auto failed = std::count_if(checks.begin(), checks.end(),
                                    [](const BoundCheck& b) { return !b.ok; });
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& b : checks) {
      rows.push_back({{"name", b.name},
                      {"value", b.value},
                      {"bound", b.bound},
                      {"relation", b.upper ? "<=" : ">="},
                      {"ok", b.ok}});
    }
    out << json{{"value", failed}, {"checks", rows}}.dump() << '\n';
  } else {
    for (const auto& b : checks) {
      out << (b.ok ? "PASS  " : "FAIL  ") << b.name << "  (value " << num(b.value) << ")\n";
    }
    out << checks.size() - static_cast<std::size_t>(failed) << '/' << checks.size()
        << " checks passed\n";
  }
  if (failed > 0) {
    err << failed << " bound checks failed\n";
    return kDomainError;
  }
  return kOk;
}

int cmd_bench(const Config& c, std::ostream& out) {
  std::mt19937_64 rng(2024);
  std::vector<double> xs, ys;
  json rows = json::array();
  for (std::size_t n : c.lengths) {
    Word w;
    std::uniform_int_distribution<std::uint32_t> code(0, 3);
    for (std::size_t i = 0; i < n; ++i) w.push_back(Letter::from_code(code(rng)));
    const auto t0 = std::chrono::steady_clock::now();
    const double v = NormTable(w, WeightTable::unit(), {c.threads}).value();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(secs, 1e-9)));
    rows.push_back({{"length", n}, {"seconds", secs}, {"norm", v}});
    if (c.format != "json") out << "n=" << n << "  " << num(secs) << " s  norm " << num(v) << '\n';
  }
  // Least-squares slope of log time against log length.
  double exponent = 0.0;
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx > 0) exponent = sxy / sxx;
  }
  if (c.format == "json") {
    out << json{{"value", exponent}, {"runs", rows}}.dump() << '\n';
  } else {
    out << "fitted exponent " << num(exponent) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Weighted cancellation norm, cancellation distance and homotopy area", "wcn"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  auto* norm_cmd = app.add_subcommand("norm", "Cancellation norm of a word");
  norm_cmd->add_option("--word", c.word, "Word, inline or @file")->required();
  norm_cmd->add_option("--weights", c.weights, "Weight table file (default: all 1)");
  norm_cmd->add_flag("--folding", c.folding, "Also print an optimal folding as `i j` lines");

  auto* dist_cmd = app.add_subcommand("distance", "Cancellation distance between conjugacy classes");
  dist_cmd->add_option("--word1", c.word1, "First word, inline or @file")->required();
  dist_cmd->add_option("--word2", c.word2, "Second word, inline or @file")->required();
  dist_cmd->add_option("--weights", c.weights, "Weight table file (default: all 1)");
  dist_cmd->add_flag("--witness", c.witness, "Also print p, q and the mixed folding");

  auto* area_cmd = app.add_subcommand("area", "Minimum homotopy area between closed curves");
  area_cmd->add_option("--curves", c.curves, "JSON curve file")->required();
  area_cmd->add_flag("--null", c.null_area, "Null-homotopy area of a single curve");
  area_cmd->add_option("--eps", c.eps, "General-position tolerance")
      ->check(CLI::PositiveNumber);
  area_cmd->add_option("--svg", c.svg, "Write an SVG rendering of the arrangement");

  auto* cons_cmd = app.add_subcommand("construct", "Build the twisted word and its grid curve");
  cons_cmd->add_option("--m", c.m, "Construction parameter (>= 2)")->required();
  cons_cmd->add_option("--word-out", c.word_out, "Write the word here");
  cons_cmd->add_option("--curve-out", c.curve_out, "Write the grid curve (JSON) here");
  cons_cmd->add_option("--delta", c.delta, "Strand spacing parameter, in (0, 0.1)")
      ->check(CLI::Range(0.0, 0.1));
  cons_cmd->add_option("--svg", c.svg, "Write an SVG rendering of the grid curve");

  auto* verify_cmd = app.add_subcommand("verify", "Check the norm bounds of the construction");
  verify_cmd->add_option("--m", c.m, "Construction parameter (>= 2)")->required();
  verify_cmd->add_flag("--force", c.force, "Run the DP past the size guard");

  auto* bench_cmd = app.add_subcommand("bench", "Time the norm DP on random words");
  bench_cmd->add_option("--lengths", c.lengths, "Word lengths to time")->expected(1, -1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (c.delta <= 0.0 || c.delta >= 0.1) {
    err << "error: --delta must lie in (0, 0.1)\n";
    return kUsageError;
  }

  try {
    if (norm_cmd->parsed()) return cmd_norm(c, out);
    if (dist_cmd->parsed()) return cmd_distance(c, out);
    if (area_cmd->parsed()) return cmd_area(c, out);
    if (cons_cmd->parsed()) return cmd_construct(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out, err);
    if (bench_cmd->parsed()) return cmd_bench(c, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace wcn::cli
