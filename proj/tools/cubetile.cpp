// cubetile: command-line front end for the cube tiling / spectrum toolkit.
//
// Exit codes: 0 success or agreement, 1 error, 2 certified disagreement
// between the tiling decision and the spectral test (a bug trap).

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubetile/analysis.hpp"
#include "cubetile/cubeset_io.hpp"
#include "cubetile/errors.hpp"
#include "cubetile/harness.hpp"
#include "cubetile/tiling.hpp"
#include "cubetile/transforms.hpp"

namespace {

using namespace cubetile;

constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file holds either one (possibly pretty-printed) cubeset or JSON lines.
std::vector<TranslateSet> read_sets(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return {parse_cubeset(text)};
  } catch (const ParseError&) {
    std::istringstream lines(text);
    auto sets = read_cubeset_lines(lines);
    if (sets.empty()) throw ParseError(path + ": no cubeset found");
    return sets;
  }
}

TranslateSet read_one(const std::string& path) {
  auto sets = read_sets(path);
  if (sets.size() != 1) throw ParseError(path + ": expected exactly one cubeset");
  return sets.front();
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

void write_csv(const std::string& path, const std::vector<CompletenessReport>& reports) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << CompletenessReport::csv_header() << '\n';
  for (const auto& r : reports) out << r.csv_row() << '\n';
}

std::size_t axis_index(int axis) {
  if (axis < 1) throw PreconditionError("axes are numbered from 1");
  return static_cast<std::size_t>(axis - 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling and spectral checks for translates of the unit cube"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file;
  std::vector<std::string> files;
  std::string csv_path;
  std::string samples_path;
  std::int64_t cutoff = 100;
  double eps = 0.05;
  std::int64_t window_radius = 0;
  std::int64_t budget = kDefaultCellBudget;

  auto* check_tiling_cmd = app.add_subcommand("check-tiling", "Decide whether a periodic set tiles R^d");
  check_tiling_cmd->add_option("file", file, "Cubeset file ('-' for stdin)")->required();
  check_tiling_cmd->add_option("--budget", budget, "Maximum torus grid cells");
  check_tiling_cmd->callback([&] {
    std::cout << check_tiling(read_one(file), budget).to_text() << '\n';
  });

  auto* orth_cmd = app.add_subcommand("check-orthogonal", "List non-orthogonal pairs of translates");
  orth_cmd->add_option("file", file, "Cubeset file")->required();
  orth_cmd->add_option("--window", window_radius, "Restrict to the box (-N-1, N+1)^d");
  orth_cmd->callback([&] {
    const TranslateSet set = read_one(file);
    std::optional<Window> window;
    if (window_radius > 0) window = Window::radius(set.dim(), Rational(static_cast<long>(window_radius)));
    const auto report = check_orthogonality(set, window);
    if (report.empty()) {
      std::cout << "ORTHOGONAL\n";
    } else {
      std::cout << report.to_text();
    }
  });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Completeness sums and a spectrum verdict");
  spectrum_cmd->add_option("file", file, "Cubeset file")->required();
  spectrum_cmd->add_option("--n", cutoff, "Cutoff N");
  spectrum_cmd->add_option("--eps", eps, "Completeness tolerance");
  spectrum_cmd->add_option("--samples", samples_path, "JSON array of sample points");
  spectrum_cmd->add_option("--csv", csv_path, "Write the per-sample reports as CSV");
  spectrum_cmd->callback([&] {
    const TranslateSet set = read_one(file);
    const auto samples =
        samples_path.empty() ? default_samples(set) : parse_points(nlohmann::json::parse(slurp(samples_path)));
    const auto verdict = spectrum_verdict(set, samples, cutoff, eps);
    if (csv_path.empty()) {
      std::cout << CompletenessReport::csv_header() << '\n';
      for (const auto& r : verdict.reports) std::cout << r.csv_row() << '\n';
    } else {
      write_csv(csv_path, verdict.reports);
    }
    std::cout << (verdict.likely_spectrum ? std::string("LikelySpectrum")
                                          : "NotSpectrum at " + verdict.witness->to_string())
              << '\n';
  });

  auto* cross_cmd = app.add_subcommand("cross-check", "Run the tiling decision against the spectral test");
  cross_cmd->add_option("files", files, "Cubeset files (single documents or JSON lines)")->required();
  cross_cmd->add_option("--n", cutoff, "Cutoff N");
  cross_cmd->add_option("--eps", eps, "Completeness tolerance");
  cross_cmd->add_option("--csv", csv_path, "Write every completeness report as CSV");
  cross_cmd->callback([&] {
    std::vector<std::pair<std::string, TranslateSet>> jobs;
    for (const auto& f : files) {
      const auto sets = read_sets(f);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        jobs.emplace_back(sets.size() == 1 ? f : f + "#" + std::to_string(i + 1), sets[i]);
      }
    }
    CrossCheckOptions options;
    options.cutoff = cutoff;
    options.eps = eps;
    std::vector<std::future<CrossCheckResult>> pending;
    for (const auto& [id, set] : jobs) {
      pending.push_back(std::async(std::launch::async, [&options, id = id, set = set] { return cross_check(set, options, id); }));
    }
    std::vector<CompletenessReport> all_reports;
    for (auto& f : pending) {
      const auto result = f.get();
      std::cout << result.summary() << '\n';
      all_reports.insert(all_reports.end(), result.completeness.begin(), result.completeness.end());
      if (!result.agreement) exit_code = kExitDisagreement;
    }
    if (!csv_path.empty()) write_csv(csv_path, all_reports);
  });

  int axis = 1;
  std::string anchor_text = "0";
  std::string shift_text = "0";
  auto* slide_cmd = app.add_subcommand("slide", "Slide one residue class along an axis");
  slide_cmd->add_option("file", file, "Cubeset file")->required();
  slide_cmd->add_option("--axis", axis, "Axis, numbered from 1")->required();
  slide_cmd->add_option("--anchor", anchor_text, "Anchor a: translates with t_axis - a in Z stay")->required();
  slide_cmd->add_option("--shift", shift_text, "Shift b applied to the other translates")->required();
  slide_cmd->callback([&] {
    const auto image = slide(read_one(file), {axis_index(axis), Rational::parse(anchor_text), Rational::parse(shift_text)});
    std::cout << to_json_line(image) << '\n';
  });

  bool trace = false;
  auto* integerize_cmd = app.add_subcommand("integerize", "Slide every translate in (-N, N)^d onto Z^d");
  integerize_cmd->add_option("file", file, "Cubeset file")->required();
  integerize_cmd->add_option("--n", cutoff, "Cutoff N")->required();
  integerize_cmd->add_flag("--trace", trace, "Emit every intermediate set as a JSON line");
  integerize_cmd->callback([&] {
    IntegerizeOptions options;
    if (trace) options.trace = [](const TranslateSet& s, const SlideSpec&) { std::cout << to_json_line(s) << '\n'; };
    std::cout << to_json_line(integerize(read_one(file), cutoff, options).set) << '\n';
  });

  std::size_t dim = 2;
  std::string period_text;
  std::int64_t den = 1;
  bool dedup = false;
  std::int64_t limit = 0;
  std::uint64_t seed = 0;
  bool seeded = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every torus tiling on the 1/q grid as JSON lines");
  enumerate_cmd->add_option("--dim", dim, "Dimension d")->required();
  enumerate_cmd->add_option("--period", period_text, "Periods n1,n2,...")->required();
  enumerate_cmd->add_option("--den", den, "Grid denominator q")->required();
  enumerate_cmd->add_flag("--dedup", dedup, "Drop torus translates of earlier tilings");
  enumerate_cmd->add_option("--limit", limit, "Stop after this many tilings (0 = all)");
  enumerate_cmd->add_option("--seed", seed, "Shuffle candidate order with this seed")->each([&](const std::string&) { seeded = true; });
  enumerate_cmd->callback([&] {
    EnumerationOptions options;
    options.dedup_translations = dedup;
    if (seeded) options.shuffle_seed = seed;
    TilingEnumerator stream(dim, parse_int_list(period_text), den, options);
    std::int64_t emitted = 0;
    while (auto tiling = stream.next()) {
      std::cout << to_json_line(*tiling) << '\n';
      if (limit > 0 && ++emitted >= limit) break;
    }
  });

  auto* gen_cmd = app.add_subcommand("gen", "Generate translate sets");
  gen_cmd->require_subcommand(1);
  auto* gen_lattice_cmd = gen_cmd->add_subcommand("lattice", "Z^d");
  gen_lattice_cmd->add_option("--dim", dim, "Dimension d")->required();
  gen_lattice_cmd->callback([&] { std::cout << to_json_line(gen_lattice(dim)) << '\n'; });

  std::string shifts_text;
  auto* gen_columns_cmd = gen_cmd->add_subcommand("columns", "Z^d with independently shifted columns");
  gen_columns_cmd->add_option("--dim", dim, "Dimension d")->required();
  gen_columns_cmd->add_option("--shifts", shifts_text, "One shift in [0,1) per column, comma separated")->required();
  gen_columns_cmd->add_option("--axis", axis, "Column axis, numbered from 1 (default: last)");
  gen_columns_cmd->add_option("--period", period_text, "Periods n1,n2,... (default: shifts along the first other axis)");
  gen_columns_cmd->callback([&] {
    const auto shifts = parse_rational_list(shifts_text);
    const std::size_t column_axis = gen_columns_cmd->count("--axis") ? axis_index(axis) : dim - 1;
    std::vector<std::int64_t> period;
    if (!period_text.empty()) {
      period = parse_int_list(period_text);
    } else {
      period.assign(dim, 1);
      for (std::size_t j = 0; j < dim; ++j) {
        if (j != column_axis) {
          period[j] = static_cast<std::int64_t>(shifts.size());
          break;
        }
      }
    }
    std::cout << to_json_line(gen_shifted_columns(dim, period, shifts, column_axis)) << '\n';
  });

  std::size_t steps = 0;
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Random composition of slides applied to Z^d");
  gen_random_cmd->add_option("--seed", seed, "Random seed")->required();
  gen_random_cmd->add_option("--dim", dim, "Dimension d")->required();
  gen_random_cmd->add_option("--steps", steps, "Number of random moves")->required();
  gen_random_cmd->callback([&] { std::cout << to_json_line(gen_random_slides(seed, dim, steps)) << '\n'; });

  auto* twins_cmd = app.add_subcommand("twins", "Find two cubes sharing a full face");
  twins_cmd->add_option("file", file, "Cubeset file")->required();
  twins_cmd->callback([&] {
    if (auto twin = has_face_twin(read_one(file))) {
      std::cout << "TWIN: " << twin->first.to_string() << " | " << twin->second.to_string() << '\n';
    } else {
      std::cout << "NONE\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const cubetile::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return exit_code;
}
