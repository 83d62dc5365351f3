#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>

#include "ndthin/baselines.hpp"
#include "ndthin/errors.hpp"
#include "ndthin/io.hpp"
#include "ndthin/metrics.hpp"
#include "ndthin/shapes.hpp"
#include "ndthin/thin_nd.hpp"

namespace ndthin::cli {

namespace {

FileFormat resolve_format(const std::string& path, const std::string& override_name) {
  if (!override_name.empty()) {
    if (auto f = parse_format(override_name)) return *f;
    throw UsageError("unknown format '" + override_name + "'");
  }
  if (auto f = format_from_path(path)) return *f;
  throw UsageError("cannot infer the format of '" + path + "'; use .pbm, .ndbin or .csv");
}

BinaryPattern load(const std::string& path, const std::string& format) {
  return load_pattern(path, resolve_format(path, format));
}

void save(const std::string& path, const std::string& format, const BinaryPattern& pattern) {
  const auto f = resolve_format(path, format);
  if (f == FileFormat::pbm && pattern.rank() != 2) {
    throw UsageError("PBM output needs a 2D pattern; use .ndbin or .csv");
  }
  save_pattern(path, pattern, f);
}

ThinResult run_algorithm(const std::string& algo, const BinaryPattern& pattern,
                         const std::optional<Schedule>& schedule) {
  if (algo == "zs") return zs_thin(pattern);
  if (algo == "gh") return gh_thin(pattern);
  if (algo == "nd") return thin(pattern, schedule ? *schedule : Schedule::standard(pattern.rank()));
  throw UsageError("unknown algorithm '" + algo + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    items.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return items;
}

Shape parse_grid(const std::string& text) {
  Shape grid;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    const auto token = text.substr(start, pos == std::string::npos ? pos : pos - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 9) {
      throw UsageError("grid must look like 7x7 or 5x5x5, got '" + text + "'");
    }
    grid.push_back(std::stoul(token));
    if (pos == std::string::npos) return grid;
    start = pos + 1;
  }
}

void warn_if_grown(const MetricsReport& report, std::ostream& err) {
  if (!report.skeleton_within_input) {
    err << "warning: skeleton contains pixels that are background in the input\n";
  }
}

std::string real9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

/// Column-wise means of the reports for one algorithm.
std::string mean_row(const std::string& algo, const std::vector<MetricsReport>& reports) {
  double s_r = 0, m_t = 0, n = 0, delta = 0, a_in = 0, a_sk = 0;
  bool have_mt = true;
  for (const auto& r : reports) {
    s_r += r.s_r;
    if (r.m_t) {
      m_t += *r.m_t;
    } else {
      have_mt = false;
    }
    n += static_cast<double>(r.n);
    delta += static_cast<double>(r.component_delta);
    a_in += static_cast<double>(r.area_input);
    a_sk += static_cast<double>(r.area_skeleton);
  }
  const auto count = static_cast<double>(reports.size());
  return "mean:" + algo + ',' + real9(s_r / count) + ',' +
         (have_mt ? real9(m_t / count) : std::string("NA")) + ',' + real9(n / count) + ',' +
         real9(delta / count) + ',' + real9(a_in / count) + ',' + real9(a_sk / count);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ScheduleError*>(&e) ||
      dynamic_cast<const UsageError*>(&e) || dynamic_cast<const IoError*>(&e)) {
    return kUsageError;
  }
  return kAlgorithmError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential thinning of N-dimensional binary patterns", "ndthin"};
  app.require_subcommand(1);

  // thin
  auto* thin_cmd = app.add_subcommand("thin", "Thin one pattern file");
  std::string algo = "nd";
  std::string input;
  std::string output;
  std::string schedule_text;
  std::string input_format;
  std::string output_format;
  bool print_metrics = false;
  thin_cmd->add_option("--algo", algo, "nd, zs or gh")
      ->check(CLI::IsMember({"nd", "zs", "gh"}))
      ->capture_default_str();
  thin_cmd->add_option("--input", input, "Input pattern (.pbm or .ndbin)")->required();
  thin_cmd->add_option("--output", output, "Output skeleton (.pbm, .ndbin or .csv)")->required();
  thin_cmd->add_option("--schedule", schedule_text, "Erosion schedule, e.g. 1fb,0fb (nd only)");
  thin_cmd->add_option("--input-format", input_format, "Override the input format");
  thin_cmd->add_option("--format", output_format, "Override the output format");
  thin_cmd->add_flag("--metrics", print_metrics, "Print a metrics CSV report");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare algorithms on 2D patterns");
  std::vector<std::string> inputs;
  std::string algos = "zs,gh,nd";
  compare_cmd->add_option("--input", inputs, "Input patterns")->required()->expected(1, -1);
  compare_cmd->add_option("--algos", algos, "Comma-separated algorithms")->capture_default_str();
  compare_cmd->add_option("--schedule", schedule_text, "Erosion schedule for nd");
  compare_cmd->add_option("--input-format", input_format, "Override the input format");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Evaluate an existing skeleton");
  std::string skeleton_path;
  std::size_t iterations = 0;
  std::string label = "skeleton";
  metrics_cmd->add_option("--input", input, "Original pattern")->required();
  metrics_cmd->add_option("--skeleton", skeleton_path, "Skeleton pattern")->required();
  metrics_cmd->add_option("--iterations", iterations, "Iteration count to report");
  metrics_cmd->add_option("--algo", label, "Label for the algorithm column");
  metrics_cmd->add_option("--input-format", input_format, "Override the input formats");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic shape");
  std::string kind_name;
  std::string grid_text;
  ShapeSpec spec;
  std::optional<double> rugged;
  std::uint64_t seed = 0;
  gen_cmd->add_option("--shape", kind_name, "square, rectangle, disc, triangle, sphere, "
                                            "cylinder, hyperboloid-one-sheet, "
                                            "hyperboloid-two-sheet, elliptic-paraboloid")
      ->required();
  gen_cmd->add_option("--grid", grid_text, "Grid extents, e.g. 32x32 or 24x24x24")->required();
  gen_cmd->add_option("--side", spec.side);
  gen_cmd->add_option("--width", spec.width);
  gen_cmd->add_option("--height", spec.height);
  gen_cmd->add_option("--radius", spec.radius);
  gen_cmd->add_option("--a", spec.a, "Quadric semi-axis along axis 0");
  gen_cmd->add_option("--b", spec.b, "Quadric semi-axis along axis 1");
  gen_cmd->add_option("--c", spec.c, "Quadric scale along axis 2");
  gen_cmd->add_option("--rugged", rugged, "Boundary removal probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", seed, "Seed for --rugged");
  gen_cmd->add_option("--output", output, "Output file")->required();
  gen_cmd->add_option("--format", output_format, "Override the output format");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kSuccess : kUsageError;
  }

  try {
    std::optional<Schedule> schedule;
    if (!schedule_text.empty()) schedule = Schedule::parse(schedule_text);

    if (*thin_cmd) {
      if (schedule && algo != "nd") throw UsageError("--schedule applies to --algo nd only");
      const auto pattern = load(input, input_format);
      const auto result = run_algorithm(algo, pattern, schedule);
      save(output, output_format, result.skeleton);
      if (print_metrics) {
        const auto report = evaluate(pattern, result);
        warn_if_grown(report, err);
        out << csv_header() << '\n' << to_csv_row(algo, report) << '\n';
      }
    } else if (*compare_cmd) {
      const auto names = split_list(algos);
      for (const auto& name : names) {
        if (name != "nd" && name != "zs" && name != "gh") {
          throw UsageError("unknown algorithm '" + name + "' in --algos");
        }
      }
      std::vector<std::vector<MetricsReport>> per_algo(names.size());
      std::vector<std::string> rows;
      for (const auto& path : inputs) {
        const auto pattern = load(path, input_format);
        if (pattern.rank() != 2) throw DimensionError(path + " is not a 2D pattern");
        for (std::size_t a = 0; a < names.size(); ++a) {
          const auto report = evaluate(pattern, run_algorithm(names[a], pattern, schedule));
          warn_if_grown(report, err);
          rows.push_back(to_csv_row(names[a], report));
          per_algo[a].push_back(report);
        }
      }
      out << csv_header() << '\n';
      for (const auto& row : rows) out << row << '\n';
      if (inputs.size() > 1) {
        for (std::size_t a = 0; a < names.size(); ++a) out << mean_row(names[a], per_algo[a]) << '\n';
      }
    } else if (*metrics_cmd) {
      const auto pattern = load(input, input_format);
      const auto skeleton = load(skeleton_path, input_format);
      const auto report = evaluate(pattern, ThinResult{skeleton, iterations});
      warn_if_grown(report, err);
      out << csv_header() << '\n' << to_csv_row(label, report) << '\n';
    } else if (*gen_cmd) {
      const auto kind = parse_shape_kind(kind_name);
      if (!kind) throw UsageError("unknown shape '" + kind_name + "'");
      spec.kind = *kind;
      spec.grid = parse_grid(grid_text);
      auto pattern = generate(spec);
      if (rugged) pattern = ruggedize(pattern, RuggedSpec{*rugged, seed});
      save(output, output_format, pattern);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kSuccess;
}

}  // namespace ndthin::cli
