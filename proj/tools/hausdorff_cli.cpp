// hausdorff: exact Hausdorff distances between finite simplicial complexes.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 invariant violation,
// 4 too large, 5 empty intersection, 6 law weights invalid.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hausdorff/complex.hpp"
#include "hausdorff/io.hpp"
#include "hausdorff/iso.hpp"
#include "hausdorff/metric.hpp"

namespace {

using namespace hausdorff;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvariant = 3,
  kTooLarge = 4,
  kEmptyIntersection = 5,
  kBadLaw = 6,
};

constexpr std::size_t kDefaultMatrixVertices = 4;

struct CliConfig {
  std::string format = "auto";
  std::string out;
  int jobs = 0;
  bool extended = false;
  bool witness = false;
  bool iso = true;

  std::vector<std::string> inputs;
  std::size_t n = 0;
  std::string op;
  std::size_t k = 0;
  std::string law;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + cfg.out + "'");
  f << text;
}

Complex load(const CliConfig& cfg, const std::string& path) {
  return io::read_complex(path, io::parse_format(cfg.format));
}

void require_inputs(const CliConfig& cfg, std::size_t count) {
  if (cfg.inputs.size() != count) {
    throw CLI::ValidationError("expected " + std::to_string(count) + " input file(s), got " +
                               std::to_string(cfg.inputs.size()));
  }
}

void check_enumeration_size(const CliConfig& cfg) {
  if (cfg.n > kMaxEnumerateVertices) {
    throw TooLarge("n = " + std::to_string(cfg.n) + " exceeds the enumeration cap of " +
                   std::to_string(kMaxEnumerateVertices));
  }
  if (cfg.n > kDefaultMatrixVertices && !cfg.extended) {
    throw TooLarge("n = " + std::to_string(cfg.n) + " requires --extended");
  }
}

void cmd_dist(const CliConfig& cfg) {
  const auto a = load(cfg, cfg.inputs.at(0));
  const auto b = load(cfg, cfg.inputs.at(1));
  emit(cfg, distance(a, b).to_string() + "\n");
}

void cmd_iso_dist(const CliConfig& cfg) {
  const auto a = load(cfg, cfg.inputs.at(0));
  const auto b = load(cfg, cfg.inputs.at(1));
  const auto result = class_distance(a, b);
  std::string text = result.value.to_string() + "\n";
  if (cfg.witness) {
    std::string line;
    for (const auto& [u, v] : result.witness) {
      if (!line.empty()) line += ' ';
      line += std::to_string(u) + "->" + std::to_string(v);
    }
    text += line + "\n";
  }
  emit(cfg, text);
}

void cmd_matrix(const CliConfig& cfg) {
  check_enumeration_size(cfg);
  const auto classes = enumerate_classes(cfg.n);
  emit(cfg, io::to_tsv(class_distance_matrix(classes, cfg.jobs)));
}

void cmd_enumerate(const CliConfig& cfg) {
  check_enumeration_size(cfg);
  std::vector<Complex> reps;
  for (auto& c : enumerate_classes(cfg.n)) reps.push_back(std::move(c.complex));
  emit(cfg, io::to_json(reps) + "\n");
}

void cmd_transform(const CliConfig& cfg) {
  if (cfg.op == "skeleton") {
    require_inputs(cfg, 1);
    emit(cfg, io::to_json(skeleton(load(cfg, cfg.inputs[0]), cfg.k)) + "\n");
  } else if (cfg.op == "sd") {
    require_inputs(cfg, 1);
    emit(cfg, io::to_json(barycentric_subdivision(load(cfg, cfg.inputs[0])).complex) + "\n");
  } else if (cfg.op == "components") {
    require_inputs(cfg, 1);
    emit(cfg, io::to_json(connected_components(load(cfg, cfg.inputs[0]))) + "\n");
  } else if (cfg.op == "intersect") {
    require_inputs(cfg, 2);
    emit(cfg, io::to_json(intersect(load(cfg, cfg.inputs[0]), load(cfg, cfg.inputs[1]))) + "\n");
  } else {
    throw CLI::ValidationError("unknown transform '" + cfg.op + "'");
  }
}

void cmd_law_dist(const CliConfig& cfg) {
  const auto k = load(cfg, cfg.inputs.at(0));
  const auto alpha = io::parse_law(cfg.law);
  emit(cfg, law_distance(alpha, k).to_string() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Exact Hausdorff distances between finite simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Input format: json, lines or auto")
      ->check(CLI::IsMember({"json", "lines", "auto"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads for matrix evaluation (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--extended", cfg.extended, "Allow the 5-vertex enumeration");
  app.add_flag("--witness", cfg.witness, "Also print the minimizing vertex bijection");

  auto* dist = app.add_subcommand("dist", "Hausdorff distance between two complexes");
  dist->add_option("inputs", cfg.inputs, "Two complex files")->required()->expected(2);

  auto* iso = app.add_subcommand("iso-dist", "Distance between isomorphism classes");
  iso->add_option("inputs", cfg.inputs, "Two complex files")->required()->expected(2);

  auto* matrix = app.add_subcommand("matrix", "Class distance matrix on n vertices (TSV)");
  matrix->add_option("n", cfg.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  matrix->add_flag("--iso", cfg.iso, "Distances between isomorphism classes (the only mode)");

  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes on n vertices (JSON)");
  enumerate->add_option("n", cfg.n, "Number of vertices")->required()->check(CLI::PositiveNumber);

  auto* transform = app.add_subcommand("transform", "skeleton | sd | components | intersect");
  transform->add_option("op", cfg.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"skeleton", "sd", "components", "intersect"}));
  transform->add_option("inputs", cfg.inputs, "Input complex file(s)")->required();
  transform->add_option("--k", cfg.k, "Skeleton dimension");

  auto* law = app.add_subcommand("law-dist", "Distance from a probability law to a complex");
  law->add_option("input", cfg.inputs, "Complex file")->required()->expected(1);
  law->add_option("--law", cfg.law, "Weights as v:p/q,v:p/q,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*dist) cmd_dist(cfg);
    else if (*iso) cmd_iso_dist(cfg);
    else if (*matrix) cmd_matrix(cfg);
    else if (*enumerate) cmd_enumerate(cfg);
    else if (*transform) cmd_transform(cfg);
    else if (*law) cmd_law_dist(cfg);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidLaw& e) {
    std::cerr << "invalid law: " << e.what() << "\n";
    return kBadLaw;
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kTooLarge;
  } catch (const EmptyIntersection& e) {
    std::cerr << "empty intersection: " << e.what() << "\n";
    return kEmptyIntersection;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const EmptyInput& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return kInvariant;
  } catch (const NotInjective& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return kInvariant;
  } catch (const UndefinedVertex& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
