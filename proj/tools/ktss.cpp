// Command-line front end: learns unions of strictly k-testable languages
// from word files and emits vectors, linkage, clusters, dendrograms, and
// DFAs as canonical JSON or DOT.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ktss/canonical.hpp"
#include "ktss/clustering.hpp"
#include "ktss/dfa.hpp"
#include "ktss/errors.hpp"
#include "ktss/serialize.hpp"
#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoFailure("cannot read " + path);
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!std::cout) throw IoFailure("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoFailure("cannot write " + path);
}

// One word per line; blank lines are skipped; a trailing CR is tolerated.
std::vector<std::string> read_word_lines(const std::string& path) {
  const std::string content = read_file(path);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    std::string line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
    if (end == content.size()) break;
    start = end + 1;
  }
  return lines;
}

ktss::SymbolCodec make_codec(const std::string& separator) {
  if (separator.empty()) return ktss::SymbolCodec{};
  if (separator.size() != 1) {
    throw ktss::ParseError("--separator must be a single character");
  }
  return ktss::SymbolCodec{separator[0]};
}

ktss::KTestVector load_vector(const std::string& path,
                              ktss::SymbolCodec& codec) {
  return ktss::vector_from_json(read_file(path), codec);
}

int run_learn(const std::string& input, int k,
              std::optional<std::int32_t> clusters, const std::string& out,
              const std::string& dendrogram, const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const std::vector<std::string> lines = read_word_lines(input);
  if (lines.empty()) {
    std::cerr << "error: empty sample\n";
    return kExitUsage;
  }
  std::vector<ktss::Word> words;
  words.reserve(lines.size());
  for (const std::string& line : lines) words.push_back(codec.decode(line));

  std::vector<ktss::KTestVector> leaves;
  leaves.reserve(words.size());
  for (const ktss::Word& w : words) {
    leaves.push_back(ktss::extract(k, std::span<const ktss::Word>(&w, 1)));
  }
  const ktss::Linkage linkage = ktss::nn_chain_linkage(leaves);
  ktss::Clustering clustering;
  if (clusters.has_value()) {
    clustering = ktss::cut(leaves, linkage, *clusters);
    if (!clustering.reached_target) {
      std::cerr << "warning: only " << clustering.clusters.size()
                << " clusters are reachable; requested " << *clusters << "\n";
    }
  } else {
    clustering = ktss::cut(leaves, linkage, 1);
    clustering.reached_target = true;
  }

  write_output(out, ktss::result_to_json(k, lines, words, linkage, clustering,
                                         codec));
  if (!dendrogram.empty()) {
    write_output(dendrogram, ktss::dendrogram_to_dot(lines, linkage));
  }
  return kExitOk;
}

int run_vector(const std::string& input, int k, bool per_word,
               const std::string& out, const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const std::vector<std::string> lines = read_word_lines(input);
  std::vector<ktss::Word> words;
  words.reserve(lines.size());
  for (const std::string& line : lines) words.push_back(codec.decode(line));

  if (per_word) {
    std::vector<ktss::KTestVector> vectors;
    vectors.reserve(words.size());
    for (const ktss::Word& w : words) {
      vectors.push_back(ktss::extract(k, std::span<const ktss::Word>(&w, 1)));
    }
    write_output(out, ktss::vectors_to_json(vectors, codec));
  } else {
    write_output(out,
                 ktss::vector_to_json(ktss::extract(k, words), codec));
  }
  return kExitOk;
}

int run_member(const std::string& vector_path, const std::string& word,
               const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const ktss::KTestVector vector = load_vector(vector_path, codec);
  const ktss::Word query = codec.decode(word);
  std::cout << (vector.contains(query) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_compatible(const std::string& path_a, const std::string& path_b,
                   const std::string& graph_debug,
                   const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const ktss::KTestVector a = load_vector(path_a, codec);
  const ktss::KTestVector b = load_vector(path_b, codec);
  if (!graph_debug.empty() && a.k() >= 2) {
    const auto graph = ktss::CompatibilityGraph::build(ktss::canonicalize(a),
                                                       ktss::canonicalize(b));
    write_output(graph_debug, ktss::graph_to_dot(graph, codec));
  }
  std::cout << (ktss::union_is_exact(a, b) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const ktss::KTestVector a = load_vector(path_a, codec);
  const ktss::KTestVector b = load_vector(path_b, codec);
  std::cout << ktss::distance(a, b) << "\n";
  return kExitOk;
}

int run_dfa(const std::string& vector_path, const std::string& out,
            const std::string& separator) {
  ktss::SymbolCodec codec = make_codec(separator);
  const ktss::KTestVector vector = load_vector(vector_path, codec);
  write_output(out, ktss::dfa_to_dot(ktss::to_dfa(vector), codec));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learner for unions of strictly k-testable languages"};
  app.require_subcommand(1);

  std::string input, out, dendrogram, separator, word;
  std::string path_a, path_b, graph_debug;
  int k = 0;
  std::int32_t clusters = 0;
  bool per_word = false;

  auto* learn = app.add_subcommand(
      "learn", "Cluster a word file into unions of k-testable languages");
  learn->add_option("input", input, "word file, one word per line")
      ->required();
  learn->add_option("--k", k, "window size")->required();
  auto* clusters_opt =
      learn->add_option("--clusters", clusters, "desired cluster count");
  learn->add_option("--out", out, "output path (default: stdout)");
  learn->add_option("--dendrogram", dendrogram, "DOT dendrogram path");
  learn->add_option("--separator", separator, "symbol separator character");

  auto* vector_cmd =
      app.add_subcommand("vector", "Extract k-test vectors from a word file");
  vector_cmd->add_option("input", input, "word file")->required();
  vector_cmd->add_option("--k", k, "window size")->required();
  vector_cmd->add_flag("--per-word", per_word, "one vector per line");
  vector_cmd->add_option("--out", out, "output path (default: stdout)");
  vector_cmd->add_option("--separator", separator,
                         "symbol separator character");

  auto* member =
      app.add_subcommand("member", "Test membership of a word in a vector");
  member->add_option("vector", path_a, "vector JSON file")->required();
  member->add_option("word", word, "query word")
      ->required()
      // an empty positional still counts as provided
      ->expected(1);
  member->add_option("--separator", separator, "symbol separator character");

  auto* compatible = app.add_subcommand(
      "compatible", "Decide whether the union of two vectors is exact");
  compatible->add_option("a", path_a, "vector JSON file")->required();
  compatible->add_option("b", path_b, "vector JSON file")->required();
  compatible->add_option("--graph-debug", graph_debug,
                         "write the colored compatibility graph as DOT");
  compatible->add_option("--separator", separator,
                         "symbol separator character");

  auto* distance_cmd = app.add_subcommand(
      "distance", "Print the metric distance between two vectors");
  distance_cmd->add_option("a", path_a, "vector JSON file")->required();
  distance_cmd->add_option("b", path_b, "vector JSON file")->required();
  distance_cmd->add_option("--separator", separator,
                           "symbol separator character");

  auto* dfa_cmd = app.add_subcommand(
      "dfa", "Write the vector's sliding-window DFA as DOT");
  dfa_cmd->add_option("vector", path_a, "vector JSON file")->required();
  dfa_cmd->add_option("--out", out, "output path (default: stdout)");
  dfa_cmd->add_option("--separator", separator, "symbol separator character");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (learn->parsed()) {
      if (k < 1) {
        std::cerr << "error: --k must be >= 1\n";
        return kExitUsage;
      }
      std::optional<std::int32_t> target;
      if (clusters_opt->count() > 0) target = clusters;
      return run_learn(input, k, target, out, dendrogram, separator);
    }
    if (vector_cmd->parsed()) {
      if (k < 1) {
        std::cerr << "error: --k must be >= 1\n";
        return kExitUsage;
      }
      return run_vector(input, k, per_word, out, separator);
    }
    if (member->parsed()) return run_member(path_a, word, separator);
    if (compatible->parsed()) {
      return run_compatible(path_a, path_b, graph_debug, separator);
    }
    if (distance_cmd->parsed()) return run_distance(path_a, path_b, separator);
    if (dfa_cmd->parsed()) return run_dfa(path_a, out, separator);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ktss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
