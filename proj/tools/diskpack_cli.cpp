// diskpack command-line driver.
#include "diskpack/arrangement.hpp"
#include "diskpack/bounds.hpp"
#include "diskpack/instances.hpp"
#include "diskpack/io.hpp"
#include "diskpack/selector.hpp"
#include "diskpack/svg.hpp"
#include "diskpack/union_area.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace diskpack;

constexpr int kExitInvalid = 2;
constexpr int kExitVerification = 3;

void emit(const std::string& path, const std::string& text)
{
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

DiskSet load_instance(const std::string& path)
{
  return parse_instance(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_text_file(path));
}

void print_kv(const char* key, double value)
{
  std::printf("%-20s %s\n", key, format_real(value).c_str());
}

struct GenerateArgs
{
  std::string kind;
  int n = 100;
  double epsilon = 0.01;
  double box = 20.0;
  int clusters = 4;
  double spread = 2.0;
  std::uint64_t seed = 1;
  std::string input;
  std::string output;
};

int run_generate(const GenerateArgs& g)
{
  DiskSet disks;
  if (g.kind == "spirograph") {
    disks = gen_spirograph(g.n, g.epsilon, g.seed);
  } else if (g.kind == "random") {
    disks = gen_random(g.n, g.box, g.seed);
  } else if (g.kind == "clustered") {
    disks = gen_clustered(g.n, g.clusters, g.spread, g.box, g.seed);
  } else {
    if (g.input.empty()) {
      throw std::invalid_argument("generate reduction: --input is required");
    }
    const DepthReduction red = gen_depth_reduction(load_instance(g.input));
    std::fprintf(stderr, "lattice side %s\n", format_real(red.lattice.side).c_str());
    disks = red.disks;
  }
  emit(g.output, serialize_instance(disks));
  return 0;
}

struct SolveArgs
{
  std::string instance;
  std::string colours = "3";
  std::string method = "basic";
  int k = 3;
  int grid = 64;
  std::string output;
};

Solution solve(const DiskSet& disks, const SolveArgs& s, std::string& parameters)
{
  if (s.colours == "1") {
    parameters = "colours=1";
    return solve_rado_1colour(disks);
  }
  if (s.colours == "2") {
    parameters = "colours=2";
    return solve_square_2colour(disks);
  }
  if (s.colours == "k") {
    parameters = "colours=k k=" + std::to_string(s.k);
    return solve_kcolour(disks, s.k);
  }
  if (s.method == "weighted") {
    parameters = "colours=3 method=weighted grid=" + std::to_string(s.grid);
    return solve_weighted_3colour(disks, OffsetSampling{s.grid, true, true});
  }
  parameters = "colours=3 method=basic";
  return solve_basic_3colour(disks);
}

int run_solve(const SolveArgs& s)
{
  const DiskSet disks = load_instance(s.instance);
  ResultFile result;
  const Solution sol = solve(disks, s, result.parameters);
  result.instance_hash = instance_hash(disks);
  result.solver = sol.assignment.solver;
  result.assignment = sol.assignment;
  result.report = sol.report;
  if (s.output.empty()) {
    std::printf("%-20s %s\n", "solver", result.solver.c_str());
    std::printf("%-20s %zu of %zu\n", "selected", sol.assignment.selected_count, disks.size());
    print_kv("union_area", sol.report.union_area);
    print_kv("selected_area", sol.report.selected_area);
    print_kv("ratio", sol.report.ratio);
    print_kv("guarantee", sol.report.guarantee);
    std::printf("%-20s %d\n", "lattice_points_hit", sol.report.lattice_points_hit);
  } else {
    write_text_file(s.output, serialize_result(result));
  }
  return 0;
}

bool close(double a, double b)
{
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

int run_verify(const std::string& instance_path, const std::string& result_path)
{
  const DiskSet disks = load_instance(instance_path);
  const ResultFile result = parse_result(read_text_file(result_path));
  if (result.instance_hash != instance_hash(disks)) {
    std::fprintf(stderr, "verification failed: result belongs to instance %s, not %s\n",
                 result.instance_hash.c_str(), instance_hash(disks).c_str());
    return kExitVerification;
  }
  const CoverageReport report = verify(disks, result.assignment);
  if (!close(report.union_area, result.report.union_area) ||
      !close(report.selected_area, result.report.selected_area)) {
    std::fprintf(stderr, "verification failed: recorded areas do not match the recomputed ones\n");
    return kExitVerification;
  }
  if (report.ratio < result.assignment.guarantee - 1e-9) {
    std::fprintf(stderr, "verification failed: ratio %s below guarantee %s\n", format_real(report.ratio).c_str(),
                 format_real(result.assignment.guarantee).c_str());
    return kExitVerification;
  }
  std::printf("ok: %zu disks selected, ratio %s >= guarantee %s\n", result.assignment.selected_count,
              format_real(report.ratio).c_str(), format_real(result.assignment.guarantee).c_str());
  return 0;
}

struct AreaArgs
{
  std::string instance;
  std::uint64_t monte_carlo = 0;
  std::uint64_t seed = 1;
  double scale = 1.0;
};

int run_area(const AreaArgs& a)
{
  const DiskSet disks = load_instance(a.instance);
  print_kv("union_area", a.scale == 1.0 ? exact_union_area(disks) : scaled_union_area(disks, a.scale));
  if (a.monte_carlo > 0) {
    DiskSet scaled = disks;
    scaled.radius *= a.scale;
    if (scaled.radius <= 0.0) {
      throw std::invalid_argument("--monte-carlo needs a positive scale");
    }
    const MonteCarloEstimate mc = monte_carlo_union_area(scaled, a.monte_carlo, a.seed);
    print_kv("monte_carlo", mc.area);
    print_kv("standard_error", mc.standard_error);
  }
  if (!disks.empty()) {
    const auto circles = disks.circles();
    std::printf("%-20s %d\n", "max_depth", max_depth(circles).depth);
  }
  return 0;
}

int run_bounds()
{
  const BoundsTable t = bound_table();
  auto row = [](const char* name, double v) {
    std::printf("%-20s %.12f  (1/%.5f)\n", name, v, 1.0 / v);
  };
  row("c1_lb", t.c1_lb);
  row("c2_basic", t.c2_basic);
  row("c3_basic", t.c3_basic);
  row("c3_weighted", t.c3_weighted);
  row("c3_upper", t.c3_upper);
  std::printf("%-20s %.12f\n", "delta", t.delta);
  std::printf("%-20s %.12f\n", "delta2", t.delta2);
  std::printf("%-20s %.12f\n", "weighted_constant", t.weighted_constant);
  for (int k : {3, 4, 7, 9, 12, 13}) {
    std::printf("k=%-2d alpha %.10f  delta %.10f  guarantee %.10f\n", k, alpha_k(k), delta_k(k), kcolour_guarantee(k));
  }
  return 0;
}

struct RenderArgs
{
  std::string instance;
  std::string result;
  std::string output;
  bool lattice = false;
  bool hexagons = false;
  double scale = 40.0;
};

int run_render(const RenderArgs& r)
{
  const DiskSet disks = load_instance(r.instance);
  std::optional<Assignment> assignment;
  std::optional<LatticeUsed> lattice;
  if (!r.result.empty()) {
    assignment = parse_result(read_text_file(r.result)).assignment;
  } else if (r.lattice || r.hexagons) {
    // Without a result show the basic solver's selection.
    assignment = solve_basic_3colour(disks).assignment;
  }
  emit(r.output, render_svg(disks, assignment, lattice, SvgOptions{r.scale, r.lattice, r.hexagons}));
  return 0;
}

int run_bench(int n, double box, std::uint64_t seed, int grid)
{
  const DiskSet disks = gen_random(n, box, seed);
  auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const Solution s = fn();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%-10s %9.2f ms  ratio %.6f  guarantee %.6f\n", name, ms, s.report.ratio, s.report.guarantee);
  };
  std::printf("instance: random n=%d box=%g seed=%llu, threads %u\n", n, box, static_cast<unsigned long long>(seed),
              worker_threads());
  timed("rado1", [&] { return solve_rado_1colour(disks); });
  timed("square2", [&] { return solve_square_2colour(disks); });
  timed("basic3", [&] { return solve_basic_3colour(disks); });
  timed("weighted3", [&] { return solve_weighted_3colour(disks, OffsetSampling{grid, true, true}); });
  timed("kcolour7", [&] { return solve_kcolour(disks, 7); });
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Lattice-based k-colourable disk selection"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("kind", gen.kind, "spirograph | random | clustered | reduction")
    ->required()
    ->check(CLI::IsMember({"spirograph", "random", "clustered", "reduction"}));
  generate->add_option("-n,--n", gen.n, "Number of disks")->capture_default_str();
  generate->add_option("--epsilon", gen.epsilon, "Spirograph ring inset (ring radius 1 - epsilon)")
    ->capture_default_str();
  generate->add_option("--box", gen.box, "Side of the square holding the centers")->capture_default_str();
  generate->add_option("--clusters", gen.clusters, "Cluster count")->capture_default_str();
  generate->add_option("--spread", gen.spread, "Cluster radius")->capture_default_str();
  generate->add_option("--seed", gen.seed, "PRNG seed (spirograph: 0 means no rotation)")->capture_default_str();
  generate->add_option("--input", gen.input, "Instance to transform (reduction)");
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  SolveArgs sol;
  auto* solve_cmd = app.add_subcommand("solve", "Select and colour disks");
  solve_cmd->add_option("instance", sol.instance, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--colours", sol.colours, "1, 2, 3 or k")
    ->check(CLI::IsMember({"1", "2", "3", "k"}))
    ->capture_default_str();
  solve_cmd->add_option("--method", sol.method, "3-colour method: basic or weighted")
    ->check(CLI::IsMember({"basic", "weighted"}))
    ->capture_default_str();
  solve_cmd->add_option("--k", sol.k, "Colour count for --colours k (Loeschian)")->capture_default_str();
  solve_cmd->add_option("--grid", sol.grid, "Weighted method: offset grid per axis")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  solve_cmd->add_option("-o,--output", sol.output, "Result file (default: summary on stdout)");

  std::string verify_instance;
  std::string verify_result;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result file against its instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("result", verify_result, "Result file")->required();

  AreaArgs area;
  auto* area_cmd = app.add_subcommand("area", "Union area of an instance");
  area_cmd->add_option("instance", area.instance, "Instance file")->required();
  area_cmd->add_option("--monte-carlo", area.monte_carlo, "Also estimate with this many samples");
  area_cmd->add_option("--seed", area.seed, "Monte Carlo seed")->capture_default_str();
  area_cmd->add_option("--scale", area.scale, "Radius scale factor in [0, 1]")
    ->check(CLI::Range(0.0, 1.0))
    ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand("bounds", "Print the guarantee constants");

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  render_cmd->add_option("instance", ren.instance, "Instance file")->required();
  render_cmd->add_option("--result", ren.result, "Result file whose selection to draw");
  render_cmd->add_flag("--lattice", ren.lattice, "Draw lattice points");
  render_cmd->add_flag("--hexagons", ren.hexagons, "Draw Voronoi cells");
  render_cmd->add_option("--scale", ren.scale, "Pixels per unit")->check(CLI::PositiveNumber)->capture_default_str();
  render_cmd->add_option("-o,--output", ren.output, "SVG file (default stdout)");

  int bench_n = 200;
  double bench_box = 20.0;
  std::uint64_t bench_seed = 42;
  int bench_grid = 64;
  auto* bench_cmd = app.add_subcommand("bench", "Time every solver on a random instance");
  bench_cmd->add_option("-n,--n", bench_n, "Number of disks")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--box", bench_box, "Box side")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--grid", bench_grid, "Weighted offset grid")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*generate) {
      return run_generate(gen);
    }
    if (*solve_cmd) {
      return run_solve(sol);
    }
    if (*verify_cmd) {
      return run_verify(verify_instance, verify_result);
    }
    if (*area_cmd) {
      return run_area(area);
    }
    if (*bounds_cmd) {
      return run_bounds();
    }
    if (*render_cmd) {
      return run_render(ren);
    }
    if (*bench_cmd) {
      return run_bench(bench_n, bench_box, bench_seed, bench_grid);
    }
  } catch (const VerificationError& e) {
    std::fprintf(stderr, "verification failed: %s\n", e.what());
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
