// deadends: enumerate balls in Cayley graphs, find dead ends, and check the
// Houghton-group word constructions.
//
// Exit codes: 0 success, 2 usage or refusal, 3 resource limit, 4 internal.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "cayley/cayley.hpp"

namespace {

struct ScanArgs {
  std::string group;
  int radius = 0;
  int workers = 1;
  std::uint64_t memory_mib = 4096;
  std::string report_path;
  int annulus_k = -1;
  int depth_cap = 8;
};

struct DotArgs {
  std::string group;
  int radius = 0;
  std::string out_path;
  bool force = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

int run_scan(const ScanArgs& args) {
  auto any = cayley::parse_group_spec(args.group);
  const auto t0 = std::chrono::steady_clock::now();
  std::visit(
      [&](const auto& g) {
        cayley::BallOptions opts;
        opts.workers = args.workers;
        opts.memory_budget_bytes = args.memory_mib * 1024ull * 1024ull;
        auto dmap = cayley::ball_distances(g, args.radius, opts);
        auto records = cayley::scan_dead_ends(g, dmap, args.depth_cap);
        std::optional<int> ak;
        if (args.annulus_k >= 0) ak = args.annulus_k;
        auto report = cayley::make_scan_report(g, args.group, dmap, records, ak);
        write_text(args.report_path, cayley::render_report(report));
        std::cerr << "scan: " << dmap.size() << " elements, " << records.size()
                  << " dead ends, " << seconds_since(t0) << "s\n";
      },
      any);
  return 0;
}

int run_verify(int k) {
  if (k < 1) {
    std::cerr << "verify: --k must be >= 1\n";
    return 2;
  }
  cayley::HoughtonH2 h2;
  const auto gk = cayley::HoughtonH2::make_gk(k);
  const auto wk = cayley::build_w(k);
  const auto wx = cayley::expand_to_x(h2, wk);

  const std::int64_t formula_w = static_cast<std::int64_t>(k) * (2 * k - 1);
  std::int64_t formula_wx = 1;
  for (std::int64_t l = 2; l <= k; ++l) formula_wx += 8 * l - 5;

  std::cout << "houghton g_k verification, k = " << k << "\n";
  std::cout << "  |w_k|                 " << wk.length() << "\n";
  std::cout << "  k(2k-1)               " << formula_w << "\n";
  std::cout << "  e(g_k)                " << cayley::effect(gk) << "\n";
  std::cout << "  eval(w_k) == g_k      "
            << (cayley::evaluate_y(h2, wk) == gk ? "yes" : "NO") << "\n";
  std::cout << "  |expanded w_k|        " << wx.length() << "\n";
  std::cout << "  1+sum(8l-5)           " << formula_wx << "\n";
  std::cout << "  eval(expansion)==g_k  "
            << (cayley::evaluate(h2, wx) == gk ? "yes" : "NO") << "\n";

  if (k <= 2) {
    const int radius = static_cast<int>(formula_wx);
    auto dmap = cayley::ball_distances(h2, radius);
    auto d = dmap.distance(h2, gk);
    std::cout << "  d_X(1,g_k)            " << (d ? std::to_string(*d) : "> " + std::to_string(radius))
              << "\n";
    bool dead = d && cayley::is_dead_end(h2, gk, dmap);
    std::cout << "  dead end              " << (dead ? "yes" : "no") << "\n";
    if (dead) {
      auto depth = cayley::dead_end_depth(h2, gk, dmap);
      auto sd = cayley::strong_depth(h2, gk, dmap);
      std::cout << "  depth >= k            "
                << (depth.depth >= k ? "yes" : "no") << " (depth "
                << (depth.exact ? "= " : ">= ") << depth.depth << ")\n";
      std::cout << "  strong depth >= k     " << (sd >= k ? "yes" : "no")
                << " (strong depth = " << sd << ")\n";
    } else {
      std::cout << "  depth >= k            not applicable\n";
      std::cout << "  strong depth >= k     not applicable\n";
    }
  } else {
    std::cout << "  d_X(1,g_k)            skipped (ball of radius "
              << formula_wx << " is out of reach)\n";
    std::cout << "  dead end              skipped\n";
    std::cout << "  depth >= k            skipped\n";
    std::cout << "  strong depth >= k     skipped\n";
  }
  return 0;
}

int run_dot(const DotArgs& args) {
  if (args.radius > 6 && !args.force) {
    std::cerr << "export-dot: radius " << args.radius
              << " would be unreadable; pass --force to override\n";
    return 2;
  }
  auto any = cayley::parse_group_spec(args.group);
  std::visit(
      [&](const auto& g) {
        auto dmap = cayley::ball_distances(g, args.radius);
        std::ostringstream os;
        cayley::export_dot(g, dmap, os);
        write_text(args.out_path, os.str());
      },
      any);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dead ends in Cayley graphs"};
  app.require_subcommand(1);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "enumerate a ball and report dead ends");
  scan->add_option("--group", scan_args.group, "group spec string")->required();
  scan->add_option("--radius", scan_args.radius, "ball radius")->required();
  scan->add_option("--workers", scan_args.workers, "BFS worker threads");
  scan->add_option("--memory-mib", scan_args.memory_mib, "memory budget in MiB");
  scan->add_option("--report", scan_args.report_path, "write the JSON report here");
  scan->add_option("--annulus-k", scan_args.annulus_k,
                   "also count components of the annulus k < d <= radius");
  scan->add_option("--depth-cap", scan_args.depth_cap,
                   "probe depth at most this far before reporting a bound");

  auto* houghton = app.add_subcommand("houghton", "Houghton group H2 utilities");
  houghton->require_subcommand(1);
  int verify_k = 0;
  auto* verify = houghton->add_subcommand("verify", "check the g_k constructions");
  verify->add_option("--k", verify_k, "which g_k")->required();

  DotArgs dot_args;
  auto* dot = app.add_subcommand("export-dot", "emit a ball as a DOT graph");
  dot->add_option("--group", dot_args.group, "group spec string")->required();
  dot->add_option("--radius", dot_args.radius, "ball radius")->required();
  dot->add_option("--out", dot_args.out_path, "output path (default stdout)");
  dot->add_flag("--force", dot_args.force, "export even when the radius exceeds 6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*scan) return run_scan(scan_args);
    if (*verify) return run_verify(verify_k);
    if (*dot) return run_dot(dot_args);
    return 2;
  } catch (const cayley::MemoryBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
