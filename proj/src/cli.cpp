#include "rotkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rotkit/census.hpp"
#include "rotkit/classify.hpp"
#include "rotkit/combinatorics.hpp"
#include "rotkit/distance.hpp"
#include "rotkit/stats.hpp"
#include "rotkit/svg_plot.hpp"
#include "rotkit/tree.hpp"
#include "rotkit/triangulation.hpp"

namespace rotkit {

namespace {

std::string trim(const std::string& text) {
  std::size_t lo = text.find_first_not_of(" \t\r\n");
  if (lo == std::string::npos) return "";
  std::size_t hi = text.find_last_not_of(" \t\r\n");
  return text.substr(lo, hi - lo + 1);
}

// Trees are accepted anywhere a triangulation is: a leading digit selects the
// "m:(a,b),..." form, '(' or 'L' the tree grammar.
Triangulation parse_instance(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty instance");
  if (std::isdigit(static_cast<unsigned char>(text[0]))) return Triangulation::parse(text);
  if (text[0] == '(' || text[0] == 'L') return tree_to_triangulation(parse_tree(text));
  throw std::invalid_argument(
      "instance must be a tree \"(LL)\" or a triangulation \"m:(a,b),...\"");
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 1)
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got \"" + v +
                                "\"");
  return static_cast<int>(parsed);
}

std::pair<int, int> parse_size_range(const std::string& text) {
  auto sep = text.find("..");
  auto to_int = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("size must be N or A..B, got \"" + text + "\"");
    return std::stoi(part);
  };
  if (sep == std::string::npos) {
    int n = to_int(text);
    return {n, n};
  }
  int lo = to_int(text.substr(0, sep));
  int hi = to_int(text.substr(sep + 2));
  if (lo > hi) throw std::invalid_argument("size range must satisfy A <= B, got \"" + text + "\"");
  return {lo, hi};
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  CsvTable csv;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (csv.header.empty()) {
      csv.header = std::move(fields);
      continue;
    }
    if (fields.size() != csv.header.size())
      throw std::runtime_error(path + ": row has " + std::to_string(fields.size()) +
                               " fields, header has " + std::to_string(csv.header.size()));
    csv.rows.push_back(std::move(fields));
  }
  if (csv.header.empty()) throw std::runtime_error(path + ": no header row");
  return csv;
}

// Census files carry a `total` column, sample files `iters`; either provides
// the denominator when fractions are requested.
std::vector<FractionPoint> load_points(const CsvTable& csv, const std::string& column,
                                       bool fractions, int* non_positive) {
  int size_col = csv.column("size");
  int value_col = csv.column(column);
  if (size_col < 0) throw std::runtime_error("input is missing the size column");
  if (value_col < 0) throw std::runtime_error("input is missing the " + column + " column");
  int denom_col = -1;
  if (fractions) {
    denom_col = csv.column("total");
    if (denom_col < 0) denom_col = csv.column("iters");
    if (denom_col < 0) throw std::runtime_error("input has neither a total nor an iters column");
  }
  std::vector<FractionPoint> points;
  for (const auto& row : csv.rows) {
    FractionPoint p;
    p.size = std::stoi(row[size_col]);
    p.value = std::stod(row[value_col]);
    if (fractions) p.value /= std::stod(row[denom_col]);
    if (p.value <= 0.0 && non_positive != nullptr) ++*non_positive;
    points.push_back(p);
  }
  return points;
}

const char* model_name(FitModel model) {
  return model == FitModel::ExponentialFraction ? "exp" : "powcube";
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "size,no_common,difficult,total\n";
  for (const auto& r : rows)
    out << r.size << ',' << r.no_common << ',' << r.difficult << ',' << r.total << '\n';
}

void write_sample_csv(std::ostream& out, const std::vector<SampleRow>& rows) {
  out << "size,iters,no_common,difficult,seed,workers\n";
  for (const auto& r : rows)
    out << r.size << ',' << r.iterations << ',' << r.no_common_hits << ',' << r.difficult_hits
        << ',' << r.seed << ',' << r.workers << '\n';
}

template <typename WriteFn>
void emit_table(std::ostream& out, const std::string& out_path, WriteFn write) {
  if (out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  write(file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"census and sampling workbench for rotation-distance instances"};
  app.name("rotkit");
  app.require_subcommand(1);

  int threads_default = 0;
  try {
    threads_default = env_int("ROTKIT_THREADS", 0);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  auto size_range_check = CLI::Validator(
      [](std::string& value) {
        try {
          parse_size_range(value);
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return std::string();
      },
      "N or A..B", "SIZE_RANGE");

  // catalan
  auto* cmd_catalan = app.add_subcommand("catalan", "number of trees of a given size");
  int catalan_n = 0;
  cmd_catalan->add_option("--n", catalan_n, "tree size, >= 0")->required();
  cmd_catalan->callback([&] { out << catalan(catalan_n) << '\n'; });

  // classes
  auto* cmd_classes = app.add_subcommand("classes", "dihedral symmetry classes of a given size");
  int classes_size = 0;
  bool classes_list = false;
  cmd_classes->add_option("--size", classes_size, "tree size, >= 1")->required();
  cmd_classes->add_flag("--list", classes_list, "list each representative with its orbit size");
  cmd_classes->callback([&] {
    std::vector<std::pair<Triangulation, int>> reps;
    enumerate_class_representatives(classes_size, [&](const Triangulation& t, int orbit) {
      reps.push_back({t, orbit});
    });
    out << reps.size() << '\n';
    if (classes_list)
      for (const auto& [rep, orbit] : reps) out << rep.to_string() << ' ' << orbit << '\n';
  });

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "classify a pair of instances");
  std::string classify_a, classify_b;
  cmd_classify->add_option("--a", classify_a, "first instance")->required();
  cmd_classify->add_option("--b", classify_b, "second instance")->required();
  cmd_classify->callback([&] {
    TreePairProblem pair(parse_instance(classify_a), parse_instance(classify_b));
    PairClass cls = classify_pair(pair);
    out << to_string(cls) << '\n';
    if (cls == PairClass::HasCommon) {
      out << "common:";
      for (Diagonal d : common_diagonals(pair)) out << " (" << d.a << ',' << d.b << ')';
      out << '\n';
    } else if (cls == PairClass::OneOff) {
      for (const OneOffWitness& w : one_off_diagonals(pair))
        out << "one_off: side=" << (w.side == OneOffWitness::Side::S ? 'S' : 'T') << " target=("
            << w.target.a << ',' << w.target.b << ") flipped=(" << w.flipped.a << ','
            << w.flipped.b << ")\n";
    }
  });

  // distance
  auto* cmd_distance = app.add_subcommand("distance", "exact flip distance of a pair");
  std::string distance_a, distance_b;
  int distance_cap = 13;
  cmd_distance->add_option("--a", distance_a, "first instance")->required();
  cmd_distance->add_option("--b", distance_b, "second instance")->required();
  cmd_distance->add_option("--cap", distance_cap, "largest accepted size (default 13)");
  cmd_distance->callback([&] {
    TreePairProblem pair(parse_instance(distance_a), parse_instance(distance_b));
    out << exact_distance(pair, distance_cap).distance << '\n';
  });

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "reduce a pair to difficult parts");
  std::string reduce_a, reduce_b;
  cmd_reduce->add_option("--a", reduce_a, "first instance")->required();
  cmd_reduce->add_option("--b", reduce_b, "second instance")->required();
  cmd_reduce->callback([&] {
    TreePairProblem pair(parse_instance(reduce_a), parse_instance(reduce_b));
    Reduction red = reduce_fully(pair);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : red.parts)
      parts.push_back({{"s", part.s.to_string()}, {"t", part.t.to_string()}});
    nlohmann::json doc{{"one_off_moves", red.one_off_moves}, {"parts", parts}};
    out << doc.dump(2) << '\n';
  });

  // census
  auto* cmd_census = app.add_subcommand("census", "exact census of one size or a range");
  std::string census_size, census_out, census_checkpoint;
  int census_threads = threads_default;
  bool census_naive = false;
  cmd_census->add_option("--size", census_size, "tree size N or range A..B")
      ->required()
      ->check(size_range_check);
  cmd_census->add_option("--threads", census_threads, "worker threads (0 = all)");
  cmd_census->add_flag("--naive", census_naive, "use the all-pairs reference implementation");
  cmd_census->add_option("--out", census_out, "write CSV to a file instead of stdout");
  cmd_census->add_option("--checkpoint", census_checkpoint,
                         "resume file for long runs (single size only)");
  cmd_census->callback([&] {
    auto [lo, hi] = parse_size_range(census_size);
    if (!census_checkpoint.empty() && lo != hi)
      throw std::invalid_argument("--checkpoint needs a single size, not a range");
    int max_size = env_int("ROTKIT_CENSUS_MAX", 12);
    std::vector<CensusRow> rows;
    for (int n = lo; n <= hi; ++n)
      rows.push_back(census_naive
                         ? exact_census_naive(n)
                         : exact_census(n, census_threads, max_size,
                                        census_checkpoint.empty()
                                            ? std::nullopt
                                            : std::optional<std::string>(census_checkpoint)));
    emit_table(out, census_out, [&](std::ostream& o) { write_census_csv(o, rows); });
  });

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "Monte-Carlo census of one size");
  int sample_size = 0, sample_threads = threads_default;
  std::uint64_t sample_iters = 0, sample_seed = 0;
  std::string sample_out;
  cmd_sample->add_option("--size", sample_size, "tree size, >= 3")->required();
  cmd_sample->add_option("--iters", sample_iters, "number of sampled pairs")->required();
  cmd_sample->add_option("--seed", sample_seed, "RNG seed")->required();
  cmd_sample->add_option("--threads", sample_threads, "worker threads (0 = all)");
  cmd_sample->add_option("--out", sample_out, "write CSV to a file instead of stdout");
  cmd_sample->callback([&] {
    std::vector<SampleRow> rows{sample_census(sample_size, sample_iters, sample_seed,
                                              sample_threads)};
    emit_table(out, sample_out, [&](std::ostream& o) { write_sample_csv(o, rows); });
  });

  // fit
  auto* cmd_fit = app.add_subcommand("fit", "fit a decay model to census or sample CSV");
  std::string fit_input, fit_column = "no_common", fit_model = "exp";
  cmd_fit->add_option("--input", fit_input, "census or sample CSV file")->required();
  cmd_fit->add_option("--column", fit_column, "no_common or difficult")
      ->check(CLI::IsMember({"no_common", "difficult"}));
  cmd_fit->add_option("--model", fit_model, "exp (fractions) or powcube (counts)")
      ->check(CLI::IsMember({"exp", "powcube"}));
  cmd_fit->callback([&] {
    CsvTable csv = read_csv(fit_input);
    bool fractions = fit_model == "exp";
    int non_positive = 0;
    auto points = load_points(csv, fit_column, fractions, &non_positive);
    if (non_positive > 0)
      err << "note: " << non_positive << " non-positive point(s) excluded from the fit\n";
    FitResult fit = fractions ? fit_exponential(points) : fit_power_cube(points);
    nlohmann::json doc{{"model", model_name(fit.model)},
                       {"scale", fit.scale},
                       {"ratio", fit.ratio},
                       {"rss", fit.rss},
                       {"points", fit.points_used}};
    out << doc.dump(2) << '\n';
  });

  // plot
  auto* cmd_plot = app.add_subcommand("plot", "SVG log-plot of fractions from census or sample CSV");
  std::string plot_input, plot_column = "no_common", plot_output;
  bool plot_fit = false;
  cmd_plot->add_option("--input", plot_input, "census or sample CSV file")->required();
  cmd_plot->add_option("--column", plot_column, "no_common or difficult")
      ->check(CLI::IsMember({"no_common", "difficult"}));
  cmd_plot->add_option("--output", plot_output, "SVG file to write")->required();
  cmd_plot->add_flag("--fit", plot_fit, "overlay the fitted exponential");
  cmd_plot->callback([&] {
    CsvTable csv = read_csv(plot_input);
    int non_positive = 0;
    auto points = load_points(csv, plot_column, true, &non_positive);
    if (non_positive > 0)
      err << "note: " << non_positive << " non-positive point(s) omitted from the plot\n";
    FitResult fit;
    const FitResult* fit_ptr = nullptr;
    if (plot_fit) {
      fit = fit_exponential(points);
      fit_ptr = &fit;
    }
    PlotOptions options;
    options.y_label = "log fraction";
    options.title = plot_column + " fraction by size";
    emit_plot(points, fit_ptr, plot_output, options);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rotkit
