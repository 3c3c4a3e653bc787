#include "degpart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "degpart/error.hpp"
#include "degpart/generators.hpp"
#include "degpart/graph.hpp"
#include "degpart/partitioner.hpp"
#include "degpart/verify.hpp"

namespace degpart {

namespace {

constexpr std::size_t kMaxParts = 1'000'000;

// Raised for bad flag values; maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what, std::size_t max_entries) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const char* first = text.data() + start;
    const char* last = text.data() + comma;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last || value < 0) {
      throw UsageError(std::string(what) + ": '" + text + "' is not a comma-separated list of non-negative integers");
    }
    values.push_back(value);
    if (values.size() > max_entries) {
      throw UsageError(std::string(what) + ": more than " + std::to_string(max_entries) + " entries");
    }
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return values;
}

DegeneracySpec parse_parts(const std::string& text) { return DegeneracySpec(parse_int_list(text, "--parts", kMaxParts)); }

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

Partition load_partition(const std::string& path, Vertex n, std::size_t part_count) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::int64_t v = -1;
    std::int64_t k = -1;
    std::string rest;
    if (!(fields >> v >> k) || (fields >> rest)) throw ParseError(line_no, "expected 'vertex part'");
    if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    if (k < 1 || k > INT32_MAX) throw ParseError(line_no, "part " + std::to_string(k) + " out of range");
    if (labels[v] != 0) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
    labels[v] = static_cast<std::int32_t>(k);
  }
  return Partition::from_labels(std::move(labels), part_count);
}

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct PartitionFlags {
  std::string input;
  std::string parts;
  std::string output;
  bool verify = false;
  bool json = false;
  bool no_timing = false;
};

int run_partition(const PartitionFlags& flags, std::ostream& out, std::ostream& err) {
  const DegeneracySpec spec = parse_parts(flags.parts);
  const Graph g = load_graph(flags.input);

  const auto start = std::chrono::steady_clock::now();
  const Partition result = partition(g, spec);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (flags.verify) {
    const VerifyReport report = verify_partition(g, result, spec);
    if (!report.ok) {
      err << "internal error: verifier rejected the computed partition";
      if (!report.coverage_ok) err << " (" << report.coverage_error << ")";
      err << "\n";
      return kExitInternal;
    }
  }

  std::string text;
  if (flags.json) {
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    doc["m"] = g.m();
    doc["delta"] = g.max_degree();
    doc["spec"] = spec.values();
    auto parts = nlohmann::ordered_json::array();
    for (std::int32_t k = 1; k <= result.highest_used(); ++k) parts.push_back(result.members(k));
    doc["parts"] = std::move(parts);
    doc["verified"] = flags.verify ? nlohmann::ordered_json(true) : nlohmann::ordered_json(nullptr);
    doc["wall_time_ms"] = flags.no_timing ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(wall_ms);
    text = doc.dump() + "\n";
  } else {
    std::ostringstream lines;
    for (Vertex v = 0; v < g.n(); ++v) lines << v << ' ' << result.part_of(v) << '\n';
    text = lines.str();
  }
  emit(flags.output, text, out);
  return kExitOk;
}

struct VerifyFlags {
  std::string input;
  std::string partition;
  std::string parts;
};

int run_verify(const VerifyFlags& flags, std::ostream& out) {
  const DegeneracySpec spec = parse_parts(flags.parts);
  const Graph g = load_graph(flags.input);
  const Partition part = load_partition(flags.partition, g.n(), spec.size());
  const VerifyReport report = verify_partition(g, part, spec);
  if (!report.coverage_ok) {
    out << "rejected: " << report.coverage_error << "\n";
    return kExitRejected;
  }
  for (const PartCheck& check : report.parts) {
    out << "part " << check.part << ": size " << check.size << ", bound " << check.claimed << ", degeneracy "
        << check.measured << (check.pass ? ", ok" : ", FAIL") << "\n";
  }
  out << (report.ok ? "ok" : "rejected") << "\n";
  return report.ok ? kExitOk : kExitRejected;
}

struct GenFlags {
  std::string family;
  std::string name;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenFlags& flags, std::ostream& out) {
  Graph g;
  if (flags.family == "fixture") {
    g = fixture(flags.name);
  } else if (flags.family == "regular") {
    if (flags.n < 1 || flags.n > INT32_MAX || flags.d < 0 || flags.d > INT32_MAX) {
      throw UsageError("--n and --d out of range");
    }
    g = random_regular(static_cast<Vertex>(flags.n), static_cast<std::int32_t>(flags.d), flags.seed);
  } else if (flags.family == "connected") {
    if (flags.n < 1 || flags.n > INT32_MAX) throw UsageError("--n out of range");
    g = random_connected(static_cast<Vertex>(flags.n), flags.m, flags.seed);
  } else {
    throw UsageError("unknown family '" + flags.family + "'");
  }
  emit(flags.output, serialize_edge_list(g), out);
  return kExitOk;
}

struct BenchFlags {
  std::string family = "regular";
  std::int64_t d = 3;
  std::string sizes;
  std::int64_t reps = 5;
  std::uint64_t seed = 1;
  std::string parts;
};

int run_bench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.family != "regular") throw UsageError("only the regular family is benchmarked");
  if (flags.reps < 1) throw UsageError("--reps must be at least 1");
  if (flags.d < 0 || flags.d > INT32_MAX) throw UsageError("--d out of range");
  const DegeneracySpec spec = parse_parts(flags.parts);
  const auto sizes = parse_int_list(flags.sizes, "--sizes", 1000);

  out << "n,m,median_ms,ms_per_edge,ratio\n";
  double previous = 0;
  double max_ratio = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || sizes[i] > INT32_MAX) throw UsageError("--sizes entry out of range");
    const Graph g = random_regular(static_cast<Vertex>(sizes[i]), static_cast<std::int32_t>(flags.d), flags.seed + i);
    std::vector<double> times;
    Partition last;
    for (std::int64_t r = 0; r < flags.reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      last = partition(g, spec);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    if (!verify_partition(g, last, spec).ok) {
      err << "internal error: verifier rejected the partition for n = " << sizes[i] << "\n";
      return kExitInternal;
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 == 1 ? times[times.size() / 2]
                                                 : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
    out << g.n() << ',' << g.m() << ',' << median << ',' << median / static_cast<double>(std::max<std::int64_t>(g.m(), 1))
        << ',';
    if (i > 0) {
      const double ratio = median / previous;
      max_ratio = std::max(max_ratio, ratio);
      out << ratio;
    }
    out << '\n';
    previous = median;
  }
  out << "max_ratio,,,," << max_ratio << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition a graph into parts of bounded degeneracy", "degpart"};
  app.require_subcommand(1);

  PartitionFlags pflags;
  auto* part_cmd = app.add_subcommand("partition", "Partition a graph");
  part_cmd->add_option("--input", pflags.input, "Edge-list file")->required();
  part_cmd->add_option("--parts", pflags.parts, "Comma-separated degeneracy bounds p1,...,ps")->required();
  part_cmd->add_option("--output", pflags.output, "Write the result here instead of standard output");
  part_cmd->add_flag("--verify", pflags.verify, "Check the result before printing it");
  part_cmd->add_flag("--json", pflags.json, "Print a JSON object instead of 'v k' lines");
  part_cmd->add_flag("--no-timing", pflags.no_timing, "Leave wall_time_ms null in JSON output");

  VerifyFlags vflags;
  auto* verify_cmd = app.add_subcommand("verify", "Check a partition file against a graph");
  verify_cmd->add_option("--input", vflags.input, "Edge-list file")->required();
  verify_cmd->add_option("--partition", vflags.partition, "File of 'v k' lines")->required();
  verify_cmd->add_option("--parts", vflags.parts, "Comma-separated degeneracy bounds")->required();

  GenFlags gflags;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("--family", gflags.family, "fixture, regular or connected")->required();
  gen_cmd->add_option("--name", gflags.name, "Fixture name, e.g. petersen or complete(5)");
  gen_cmd->add_option("--n", gflags.n, "Number of vertices");
  gen_cmd->add_option("--d", gflags.d, "Degree for the regular family");
  gen_cmd->add_option("--m", gflags.m, "Number of edges for the connected family");
  gen_cmd->add_option("--seed", gflags.seed, "64-bit seed");
  gen_cmd->add_option("--output", gflags.output, "Write here instead of standard output");

  BenchFlags bflags;
  auto* bench_cmd = app.add_subcommand("bench", "Time partition on random regular graphs, CSV output");
  bench_cmd->add_option("--family", bflags.family, "Graph family (regular)");
  bench_cmd->add_option("--d", bflags.d, "Degree");
  bench_cmd->add_option("--sizes", bflags.sizes, "Comma-separated vertex counts")->required();
  bench_cmd->add_option("--reps", bflags.reps, "Runs per size; the median is reported");
  bench_cmd->add_option("--seed", bflags.seed, "64-bit seed");
  bench_cmd->add_option("--parts", bflags.parts, "Comma-separated degeneracy bounds")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*part_cmd) return run_partition(pflags, out, err);
    if (*verify_cmd) return run_verify(vflags, out);
    if (*gen_cmd) return run_gen(gflags, out);
    return run_bench(bflags, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const PreconditionViolated& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace degpart
