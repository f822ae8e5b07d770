#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ktss/serialize.hpp"
#include "ktss/test_vector.hpp"
#include "ktss/word.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command =
      std::string(KTSS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ktss_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ktss::Word w(const std::string& ascii) { return ktss::utf8_decode(ascii); }

ktss::KTestVector sample_vector(int k,
                                std::initializer_list<std::string> sample) {
  std::vector<ktss::Word> words;
  for (const auto& s : sample) words.push_back(w(s));
  return ktss::extract(k, words);
}

const char* kExampleFile =
    "baba\nabba\nabcabc\ncbacba\nabbbba\ncbacbacba\nabbba\nbabababc\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("vector per word reproduces the example table") {
    TempDir dir;
    const auto input = dir.write("words.txt", kExampleFile);
    const auto result = run("vector " + input.string() + " --k 3 --per-word");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("\"prefixes\": [\n      \"ba\"\n    ]") !=
          std::string::npos);
    // The abbbba row: suffixes follow the definition, not the printed table.
    CHECK(result.output.find("\"abb\",\n      \"bba\",\n      \"bbb\"") !=
          std::string::npos);
    CHECK(result.output.back() == '\n');
  }

  TEST_CASE("whole-file vector and the bottom document") {
    TempDir dir;
    const auto input = dir.write("words.txt", "baba\nbaba\n");
    const auto result = run("vector " + input.string() + " --k 3");
    REQUIRE(result.exit_code == 0);
    ktss::SymbolCodec codec;
    CHECK(ktss::vector_from_json(result.output, codec) ==
          sample_vector(3, {"baba"}));

    const auto empty = dir.write("empty.txt", "");
    const auto bottom = run("vector " + empty.string() + " --k 3");
    REQUIRE(bottom.exit_code == 0);
    ktss::SymbolCodec codec2;
    CHECK(ktss::vector_from_json(bottom.output, codec2) ==
          ktss::KTestVector::bottom(3));
  }

  TEST_CASE("learn emits clusters, linkage, and a dendrogram") {
    TempDir dir;
    const auto input = dir.write("words.txt", kExampleFile);
    const auto out = dir / "result.json";
    const auto dot = dir / "dendrogram.dot";
    const auto result =
        run("learn " + input.string() + " --k 3 --clusters 3 --out " +
            out.string() + " --dendrogram " + dot.string());
    REQUIRE(result.exit_code == 0);
    const std::string json = slurp(out);
    CHECK(json.find("\"clusters\"") != std::string::npos);
    CHECK(json.find("\"members\": [\n        0,\n        7\n      ]") !=
          std::string::npos);
    const std::string dendro = slurp(dot);
    CHECK(dendro.find("digraph dendrogram") != std::string::npos);
    CHECK(dendro.find("baba") != std::string::npos);

    // Byte-identical on a second run.
    const auto out2 = dir / "result2.json";
    REQUIRE(run("learn " + input.string() + " --k 3 --clusters 3 --out " +
                out2.string())
                .exit_code == 0);
    CHECK(slurp(out2) == json);
  }

  TEST_CASE("learn rejects an empty sample") {
    TempDir dir;
    const auto input = dir.write("empty.txt", "\n\n");
    CHECK(run("learn " + input.string() + " --k 3").exit_code == 2);
  }

  TEST_CASE("learn groups the job pattern file into four clusters") {
    TempDir dir;
    const auto input = dir.write("jobs.txt",
                                 "aaaaa\naaaaaaaaaa\nabababab\nabababababab\n"
                                 "abcabcabc\nabcabcabcabcabc\nabcbcbcbca\n");
    const auto result = run("learn " + input.string() + " --k 3 --clusters 4");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("\"members\": [\n        0,\n        1\n      ]") !=
          std::string::npos);
    CHECK(result.output.find("\"members\": [\n        2,\n        3\n      ]") !=
          std::string::npos);
    CHECK(result.output.find("\"members\": [\n        4,\n        5\n      ]") !=
          std::string::npos);
    CHECK(result.output.find("\"members\": [\n        6\n      ]") !=
          std::string::npos);
  }

  TEST_CASE("member, compatible, and distance answer from vector files") {
    TempDir dir;
    ktss::SymbolCodec codec;
    const auto z1 = sample_vector(3, {"baba"});
    const auto z8 = sample_vector(3, {"babababc"});
    const auto a = dir.write("z1.json", ktss::vector_to_json(z1, codec));
    const auto b = dir.write("z8.json", ktss::vector_to_json(z8, codec));

    auto member = run("member " + a.string() + " bababa");
    CHECK(member.exit_code == 0);
    CHECK(member.output == "true\n");
    member = run("member " + a.string() + " \"\"");
    CHECK(member.exit_code == 0);
    CHECK(member.output == "false\n");

    auto compatible = run("compatible " + a.string() + " " + b.string());
    CHECK(compatible.exit_code == 0);
    CHECK(compatible.output == "true\n");

    auto dist = run("distance " + a.string() + " " + b.string());
    CHECK(dist.exit_code == 0);
    CHECK(dist.output == "3\n");
  }

  TEST_CASE("compatible detects the non-closure pair and dumps the graph") {
    TempDir dir;
    ktss::SymbolCodec codec;
    const auto z = ktss::KTestVector::make(3, {w("aa")}, {w("aa")},
                                           {w("aaa")}, {});
    const auto zp = ktss::KTestVector::make(
        3, {w("ba"), w("bb")}, {w("ab"), w("bb")},
        {w("baa"), w("bab"), w("aaa"), w("aab")}, {});
    const auto a = dir.write("z.json", ktss::vector_to_json(z, codec));
    const auto b = dir.write("zp.json", ktss::vector_to_json(zp, codec));
    const auto dot = dir / "graph.dot";
    const auto result = run("compatible " + a.string() + " " + b.string() +
                            " --graph-debug " + dot.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output == "false\n");
    CHECK(slurp(dot).find("fillcolor=red") != std::string::npos);

    // The joined vector accepts the witness word that neither operand has.
    const auto joined = ktss::join(z, zp);
    const auto j = dir.write("join.json", ktss::vector_to_json(joined, codec));
    CHECK(run("member " + j.string() + " aab").output == "true\n");
    CHECK(run("member " + a.string() + " aab").output == "false\n");
    CHECK(run("member " + b.string() + " aab").output == "false\n");
  }

  TEST_CASE("dfa writes DOT") {
    TempDir dir;
    ktss::SymbolCodec codec;
    const auto z = ktss::KTestVector::make(3, {w("aa")}, {w("aa")},
                                           {w("aaa")}, {});
    const auto a = dir.write("z.json", ktss::vector_to_json(z, codec));
    const auto result = run("dfa " + a.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("doublecircle") != std::string::npos);

    const auto bottom = dir.write(
        "bottom.json",
        ktss::vector_to_json(ktss::KTestVector::bottom(3), codec));
    const auto single = run("dfa " + bottom.string());
    CHECK(single.output.find("q0 [shape=circle]") != std::string::npos);
    CHECK(single.output.find("q1") == std::string::npos);
  }

  TEST_CASE("separator mode tokenizes multi-character symbols") {
    TempDir dir;
    const auto input = dir.write("jobs.txt",
                                 "cover,page,page,cover\n"
                                 "cover,page,page,page,cover\n");
    const auto result =
        run("vector " + input.string() + " --k 2 --separator ,");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("\"cover,page\"") != std::string::npos);
    CHECK(result.output.find("\"page,cover\"") != std::string::npos);
  }

  TEST_CASE("usage and io failures use the documented exit codes") {
    TempDir dir;
    CHECK(run("learn /nonexistent/file --k 3").exit_code == 1);
    CHECK(run("nonsense").exit_code == 2);
    const auto bad = dir.write("bad.json", "{");
    CHECK(run("member " + bad.string() + " abc").exit_code == 2);
    const auto input = dir.write("words.txt", "ab\n");
    CHECK(run("vector " + input.string() + " --k 0").exit_code == 2);
    CHECK(run("learn " + input.string() + " --k 3 --clusters 0").exit_code ==
          2);
  }
}
