// bqcnn: reproducible experiments for branching quantum convolutional
// networks. Subcommands: params, expressibility, gen-data, train.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bqcnn/ansatz.hpp"
#include "bqcnn/datagen.hpp"
#include "bqcnn/dataset.hpp"
#include "bqcnn/engine.hpp"
#include "bqcnn/errors.hpp"
#include "bqcnn/expressibility.hpp"
#include "bqcnn/optimizer.hpp"
#include "bqcnn/physics.hpp"
#include "bqcnn/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitBadArguments = 2;
constexpr int kExitDatasetError = 3;
constexpr int kExitNumericalError = 4;

std::uint64_t string_digest(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json meta_block(std::uint64_t seed, const json& config) {
  return {{"version", bqcnn::kVersion},
          {"seed", seed},
          {"config_digest", hex64(string_digest(config.dump()))}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bqcnn::BranchingCircuit make_circuit(const std::string& ansatz, int n_qubits,
                                     int branch_limit) {
  if (ansatz == "qcnn") return bqcnn::build_qcnn(n_qubits);
  if (ansatz == "bqcnn")
    return bqcnn::build_bqcnn(n_qubits, branch_limit > 0
                                            ? bqcnn::BranchPolicy::limit(branch_limit)
                                            : bqcnn::BranchPolicy::full());
  if (ansatz == "none") return bqcnn::build_empty(n_qubits);
  throw std::invalid_argument("unknown ansatz '" + ansatz + "'");
}

// ---------------------------------------------------------------- params --

struct ParamsArgs {
  int n_qubits = 4;
  std::string ansatz = "qcnn";
  int branch_limit = 0;
  std::uint64_t seed = 0;
  bool full_circuit = false;
};

void stage_breakdown(const bqcnn::CircuitNode& node, int level, json& stages) {
  while (stages.size() <= static_cast<std::size_t>(level))
    stages.push_back({{"level", static_cast<int>(stages.size())},
                      {"live_qubits", 0},
                      {"nodes", 0},
                      {"conv_gates_per_node", 0},
                      {"pool_ops_per_node", 0},
                      {"params", 0}});
  auto& s = stages[level];
  s["live_qubits"] = static_cast<int>(node.stage.live.size());
  s["nodes"] = s["nodes"].get<int>() + 1;
  s["conv_gates_per_node"] = static_cast<int>(node.stage.conv.size());
  s["pool_ops_per_node"] = static_cast<int>(node.stage.pool.size());
  s["params"] = s["params"].get<int>() +
                bqcnn::kSu4AngleCount * static_cast<int>(node.stage.conv.size()) +
                bqcnn::kSu2AngleCount * static_cast<int>(node.stage.pool.size());
  for (const auto& child : node.children) stage_breakdown(child, level + 1, stages);
}

int cmd_params(const ParamsArgs& args) {
  auto circuit = make_circuit(args.ansatz, args.n_qubits, args.branch_limit);
  json config = {{"command", "params"},
                 {"n_qubits", args.n_qubits},
                 {"ansatz", args.ansatz},
                 {"branch_limit", args.branch_limit}};
  json out;
  out["meta"] = meta_block(args.seed, config);
  out["n_qubits"] = args.n_qubits;
  out["ansatz"] = args.ansatz;
  out["parameter_count"] = circuit.parameter_count();
  json stages = json::array();
  stage_breakdown(circuit.root(), 0, stages);
  out["stages"] = stages;
  if (args.full_circuit) out["circuit"] = circuit.to_json();
  std::cout << out.dump(2) << '\n';
  return 0;
}

// -------------------------------------------------------- expressibility --

struct ExprArgs {
  int n_qubits = 8;
  std::string ansatz = "bqcnn";
  int branch_limit = 0;
  std::int64_t pairs = 4500;
  int bins = 500;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  std::string csv;
};

int cmd_expressibility(const ExprArgs& args) {
  auto circuit = make_circuit(args.ansatz, args.n_qubits, args.branch_limit);
  auto result = bqcnn::estimate(circuit, args.pairs, args.bins, args.seed, args.threads);

  json config = {{"command", "expressibility"}, {"n_qubits", args.n_qubits},
                 {"ansatz", args.ansatz},       {"branch_limit", args.branch_limit},
                 {"n_pairs", args.pairs},       {"n_bins", args.bins}};
  json out;
  out["meta"] = meta_block(args.seed, config);
  out["n_qubits"] = args.n_qubits;
  out["ansatz"] = args.ansatz;
  out["n_pairs"] = args.pairs;
  out["n_bins"] = args.bins;
  out["seed"] = args.seed;
  out["kl"] = result.kl;
  out["histogram_counts"] = result.histogram.counts;

  if (args.out.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    write_text(args.out, out.dump(2) + "\n");
    std::cout << "wrote " << args.out << " (kl=" << format_double(result.kl) << ")\n";
  }

  if (!args.csv.empty()) {
    std::string csv = "# bqcnn expressibility histogram version=" +
                      std::string(bqcnn::kVersion) + " seed=" +
                      std::to_string(args.seed) + " config=" +
                      hex64(string_digest(config.dump())) + "\n";
    csv += "bin_lo,bin_hi,count,haar_mass\n";
    for (int b = 0; b < result.histogram.n_bins; ++b) {
      const double lo = result.histogram.edge(b);
      const double hi = result.histogram.edge(b + 1);
      csv += format_double(lo) + "," + format_double(hi) + "," +
             std::to_string(result.histogram.counts[b]) + "," +
             format_double(bqcnn::haar_bin_mass(lo, hi, args.n_qubits)) + "\n";
    }
    write_text(args.csv, csv);
  }
  return 0;
}

// --------------------------------------------------------------- gen-data --

struct GenDataArgs {
  std::string kind = "artificial";
  int n_qubits = 4;
  std::string ansatz = "bqcnn";
  int branch_limit = 0;
  std::uint64_t seed = 7;
  int points = 16;
  std::string out;
};

int cmd_gen_data(const GenDataArgs& args) {
  bqcnn::LabeledDataset ds;
  json config = {{"command", "gen-data"}, {"kind", args.kind}};
  if (args.kind == "artificial") {
    config["n_qubits"] = args.n_qubits;
    config["ansatz"] = args.ansatz;
    config["branch_limit"] = args.branch_limit;
    auto circuit = make_circuit(args.ansatz, args.n_qubits, args.branch_limit);
    auto params = bqcnn::random_parameters(circuit, args.seed);
    ds = bqcnn::artificial_dataset(circuit, params);
    ds.metadata["seed"] = args.seed;
    ds.metadata["branch_limit"] = args.branch_limit;
  } else if (args.kind == "spt") {
    config["points"] = args.points;
    ds = bqcnn::spt_dataset(args.points);
  } else {
    throw std::invalid_argument("unknown dataset kind '" + args.kind + "'");
  }
  ds.metadata["meta"] = meta_block(args.seed, config);

  if (args.out.empty()) {
    std::cout << bqcnn::dataset_to_json(ds).dump(2) << '\n';
  } else {
    bqcnn::save_dataset(ds, args.out);
    std::cout << "wrote " << args.out << " (" << ds.size() << " items)\n";
  }
  return 0;
}

// ------------------------------------------------------------------ train --

struct TrainArgs {
  std::string data;
  std::string ansatz = "bqcnn";
  int branch_limit = 0;
  bool both = false;
  bqcnn::GAConfig ga;
  std::string out = "train";
};

std::string history_csv(const bqcnn::TrainingResult& result, std::uint64_t seed,
                        const json& config) {
  std::string csv = "# bqcnn training history version=" +
                    std::string(bqcnn::kVersion) + " seed=" + std::to_string(seed) +
                    " config=" + hex64(string_digest(config.dump())) + "\n";
  csv += "generation,best_cost,mean_cost,best_correctness\n";
  for (std::size_t g = 0; g < result.history.generations.size(); ++g) {
    const auto& s = result.history.generations[g];
    csv += std::to_string(g) + "," + format_double(s.best_cost) + "," +
           format_double(s.mean_cost) + "," + format_double(1.0 - s.best_cost) + "\n";
  }
  return csv;
}

std::string chromosome_hex(const bqcnn::Chromosome& c) {
  std::string hex;
  for (std::size_t i = 0; i < c.bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4 && i + j < c.bits.size(); ++j)
      nibble |= (c.bits[i + j] & 1) << j;
    hex += "0123456789abcdef"[nibble];
  }
  return hex;
}

json checkpoint_json(const bqcnn::TrainingResult& result, const std::string& ansatz,
                     const bqcnn::GAConfig& ga, const json& config) {
  json ck;
  ck["meta"] = meta_block(ga.seed, config);
  ck["ansatz"] = ansatz;
  ck["config"] = {{"population_size", ga.population_size},
                  {"elite_fraction", ga.elite_fraction},
                  {"mutation_rate", ga.mutation_rate},
                  {"bits_per_angle", ga.bits_per_angle},
                  {"generations", ga.generations},
                  {"seed", ga.seed},
                  {"shots", ga.shots}};
  ck["best_cost"] = result.best_cost;
  ck["best_correctness"] = 1.0 - result.best_cost;
  ck["best_chromosome_hex"] = chromosome_hex(result.best_chromosome);
  ck["bits_per_angle"] = result.best_chromosome.bits_per_angle;
  ck["best_params"] = result.best_params;
  return ck;
}

int cmd_train(const TrainArgs& args) {
  bqcnn::LabeledDataset ds = bqcnn::load_dataset(args.data);

  auto run_one = [&](const std::string& ansatz) {
    auto circuit = make_circuit(ansatz, ds.n_qubits, args.branch_limit);
    json config = {{"command", "train"},
                   {"ansatz", ansatz},
                   {"branch_limit", args.branch_limit},
                   {"dataset_kind", ds.kind},
                   {"generations", args.ga.generations},
                   {"population_size", args.ga.population_size}};
    auto result = bqcnn::train(circuit, ds, args.ga);
    const std::string stem =
        args.both ? args.out + "_" + ansatz : args.out;
    write_text(stem + "_history.csv", history_csv(result, args.ga.seed, config));
    write_text(stem + "_checkpoint.json",
               checkpoint_json(result, ansatz, args.ga, config).dump(2) + "\n");
    std::cout << ansatz << ": final best correctness "
              << format_double(1.0 - result.best_cost) << "\n";
    return result;
  };

  if (!args.both) {
    run_one(args.ansatz);
    return 0;
  }

  auto rb = run_one("bqcnn");
  auto rq = run_one("qcnn");
  std::string csv = "# bqcnn training comparison version=" +
                    std::string(bqcnn::kVersion) + " seed=" +
                    std::to_string(args.ga.seed) + "\n";
  csv += "generation,bqcnn_best_correctness,qcnn_best_correctness\n";
  const std::size_t n = std::min(rb.history.generations.size(),
                                 rq.history.generations.size());
  for (std::size_t g = 0; g < n; ++g)
    csv += std::to_string(g) + "," +
           format_double(1.0 - rb.history.generations[g].best_cost) + "," +
           format_double(1.0 - rq.history.generations[g].best_cost) + "\n";
  write_text(args.out + "_compare.csv", csv);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching QCNN statevector simulator and training toolkit"};
  app.require_subcommand(1);

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "Parameter count and stage breakdown");
  params->add_option("--n", pa.n_qubits, "Circuit width (2, 4, 8 or 16)");
  params->add_option("--ansatz", pa.ansatz, "qcnn | bqcnn | none")
      ->default_str("qcnn");
  params->add_option("--branch-limit", pa.branch_limit,
                     "Max branches per pooling node (0 = full)");
  params->add_option("--seed", pa.seed, "Recorded in the output metadata");
  params->add_flag("--circuit", pa.full_circuit, "Include the circuit JSON");

  ExprArgs ea;
  auto* expr = app.add_subcommand("expressibility",
                                  "KL divergence from the Haar fidelity distribution");
  expr->add_option("--n", ea.n_qubits, "Circuit width");
  expr->add_option("--ansatz", ea.ansatz, "qcnn | bqcnn | none")->default_str("bqcnn");
  expr->add_option("--branch-limit", ea.branch_limit, "Max branches (0 = full)");
  expr->add_option("--pairs", ea.pairs, "Number of random parameter pairs");
  expr->add_option("--bins", ea.bins, "Histogram bins");
  expr->add_option("--seed", ea.seed, "Master seed");
  expr->add_option("--threads", ea.threads, "Worker cap (0 = hardware)");
  expr->add_option("--out", ea.out, "Result JSON path (default: stdout)");
  expr->add_option("--csv", ea.csv, "Histogram CSV path");

  GenDataArgs ga;
  auto* gen = app.add_subcommand("gen-data", "Generate a labeled dataset");
  gen->add_option("--kind", ga.kind, "artificial | spt");
  gen->add_option("--n", ga.n_qubits, "Circuit width (artificial)");
  gen->add_option("--ansatz", ga.ansatz, "Generating ansatz (artificial)");
  gen->add_option("--branch-limit", ga.branch_limit, "Max branches (0 = full)");
  gen->add_option("--seed", ga.seed, "Generator seed (artificial)");
  gen->add_option("--points", ga.points, "Grid points per branch (spt)");
  gen->add_option("--out", ga.out, "Dataset JSON path (default: stdout)");

  TrainArgs ta;
  auto* train = app.add_subcommand("train", "Genetic-algorithm training");
  train->add_option("--data", ta.data, "Dataset JSON path")->required();
  train->add_option("--ansatz", ta.ansatz, "qcnn | bqcnn");
  train->add_option("--branch-limit", ta.branch_limit, "Max branches (0 = full)");
  train->add_flag("--both", ta.both,
                  "Train bqcnn and qcnn on the same dataset and emit a comparison CSV");
  train->add_option("--generations", ta.ga.generations, "Training generations");
  train->add_option("--population", ta.ga.population_size, "Population size");
  train->add_option("--elite", ta.ga.elite_fraction, "Elite fraction [0, 1)");
  train->add_option("--mutation-rate", ta.ga.mutation_rate,
                    "Per-bit mutation probability (negative = 1/length)");
  train->add_option("--bits", ta.ga.bits_per_angle, "Bits per angle");
  train->add_option("--seed", ta.ga.seed, "Master seed");
  train->add_option("--shots", ta.ga.shots,
                    "Shots per cost evaluation (0 = exact; 512 mirrors shot-based runs)");
  train->add_option("--threads", ta.ga.n_threads, "Worker cap (0 = hardware)");
  train->add_option("--out", ta.out, "Output path prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    if (*params) return cmd_params(pa);
    if (*expr) return cmd_expressibility(ea);
    if (*gen) return cmd_gen_data(ga);
    if (*train) return cmd_train(ta);
    return kExitBadArguments;
  } catch (const bqcnn::schema_error& e) {
    std::cerr << "dataset error: " << e.what() << '\n';
    return kExitDatasetError;
  } catch (const bqcnn::numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDatasetError;
  }
}
