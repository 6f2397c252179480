#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

const char* kToyCsv =
    "test_function,optimizer,criterion,direction,value\n"
    "f1,Adam,c1,min,1\n"
    "f1,Adam,c2,min,4\n"
    "f1,Momentum,c1,min,2\n"
    "f1,Momentum,c2,min,2\n"
    "f1,SGD,c1,min,3\n"
    "f1,SGD,c2,min,3\n"
    "f2,Adam,c1,min,2\n"
    "f2,Adam,c2,min,2\n"
    "f2,Momentum,c1,min,1\n"
    "f2,Momentum,c2,min,4\n"
    "f2,SGD,c1,min,3\n"
    "f2,SGD,c2,min,3\n"
    "f3,Adam,c1,min,1\n"
    "f3,Adam,c2,min,1\n"
    "f3,Momentum,c1,min,3\n"
    "f3,Momentum,c2,min,3\n"
    "f3,SGD,c1,min,2\n"
    "f3,SGD,c2,min,2\n";

struct CliFixture {
  fs::path dir = fs::path("test_tmp_cli");
  std::string cli;

  CliFixture() {
    const char* env = std::getenv("UFGDEPTH_CLI");
    REQUIRE(env != nullptr);
    cli = env;
    fs::remove_all(dir);
    fs::create_directories(dir);
    write("toy.csv", kToyCsv);
  }
  ~CliFixture() { fs::remove_all(dir); }

  void write(const std::string& name, const std::string& content) const {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
  }

  std::string read(const fs::path& path) const {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
  }

  int run(const std::string& args, std::string* stdout_text = nullptr) const {
    const fs::path out = dir / "stdout.txt";
    const std::string command =
        "\"" + cli + "\" " + args + " > " + (dir / "stdout.txt").string() + " 2> " +
        (dir / "stderr.txt").string();
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    if (stdout_text) *stdout_text = read(out);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
  }

  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("analyze writes a deterministic report and diagrams") {
  CliFixture fx;
  const std::string args = "analyze --input " + fx.path("toy.csv") +
                           " --ties error --out-report " + fx.path("report.json") +
                           " --out-hasse-dir " + fx.path("hasse");
  CHECK(fx.run(args) == 0);
  const std::string first = fx.read(fx.path("report.json"));
  auto json = nlohmann::json::parse(first);
  CHECK(json["version"] == "0.1.0");
  CHECK(json["family_size"] == 3);
  CHECK(json["functions"][0]["depth"]["exact"] == "2/3");

  for (int k = 0; k < 3; ++k) {
    const std::string dot =
        fx.read(fx.path("hasse") + "/poset_00" + std::to_string(k) + ".dot");
    CHECK(dot.starts_with("digraph hasse {"));
  }
  const std::string dot_before = fx.read(fx.path("hasse") + "/poset_000.dot");

  CHECK(fx.run(args) == 0);
  CHECK(fx.read(fx.path("report.json")) == first);
  CHECK(fx.read(fx.path("hasse") + "/poset_000.dot") == dot_before);
}

TEST_CASE("tie policy drives the exit code") {
  CliFixture fx;
  fx.write("tied.csv",
           "test_function,optimizer,criterion,direction,value\n"
           "f1,a,c,min,1\n"
           "f1,b,c,min,2\n"
           "f2,a,c,min,2\n"
           "f2,b,c,min,1\n"
           "f3,a,c,min,7\n"
           "f3,b,c,min,7\n");
  CHECK(fx.run("analyze --input " + fx.path("tied.csv") + " --ties error --out-report " +
               fx.path("r.json")) == 2);

  CHECK(fx.run("analyze --input " + fx.path("tied.csv") + " --ties drop --out-report " +
               fx.path("r.json")) == 0);
  auto json = nlohmann::json::parse(fx.read(fx.path("r.json")));
  REQUIRE(json["dropped_functions"].size() == 1);
  CHECK(json["dropped_functions"][0]["function"] == "f3");
}

TEST_CASE("parse failures exit with code 3") {
  CliFixture fx;
  fx.write("bad.csv", "not,a,valid,header\n");
  CHECK(fx.run("analyze --input " + fx.path("bad.csv") + " --ties error --out-report " +
               fx.path("r.json")) == 3);
  CHECK(fx.run("analyze --input " + fx.path("absent.csv") + " --ties error --out-report " +
               fx.path("r.json")) == 3);
  fx.write("query.txt", "SGD<Oops\n");
  CHECK(fx.run("depth --input " + fx.path("toy.csv") + " --ties error --query " +
               fx.path("query.txt")) == 3);
}

TEST_CASE("depth of a supplied query poset") {
  CliFixture fx;
  fx.write("query.txt", "SGD<Adam\n");
  std::string out;
  CHECK(fx.run("depth --input " + fx.path("toy.csv") + " --ties error --query " +
               fx.path("query.txt"), &out) == 0);
  CHECK(out == "depth 1 (1)\n");

  // Cover edges suffice: the closure of the chain is taken automatically.
  fx.write("chain.txt", "Momentum<SGD\nSGD<Adam\n");
  CHECK(fx.run("depth --input " + fx.path("toy.csv") + " --ties error --query " +
               fx.path("chain.txt"), &out) == 0);
  CHECK(out == "depth 2/3 (0.66666666666666667)\n");

  fx.write("cycle.txt", "SGD<Adam\nAdam<SGD\n");
  CHECK(fx.run("depth --input " + fx.path("toy.csv") + " --ties error --query " +
               fx.path("cycle.txt"), &out) == 3);
}

TEST_CASE("ufg subcommand prints the family") {
  CliFixture fx;
  std::string out;
  CHECK(fx.run("ufg --input " + fx.path("toy.csv") + " --ties error", &out) == 0);
  CHECK(out.find("set {p0,p1} weight 1/9") != std::string::npos);
  CHECK(out.find("set {p0,p2} weight 1/9") != std::string::npos);
  CHECK(out.find("set {p1,p2} weight 1/9") != std::string::npos);
  CHECK(out.find("family size 3") != std::string::npos);
  CHECK(out.find("normalizer 3 (3)") != std::string::npos);
}

TEST_CASE("oracle check subcommand") {
  CliFixture fx;
  std::string out;
  CHECK(fx.run("oracle-check --input " + fx.path("toy.csv"), &out) == 0);
  CHECK(out.find("oracle check passed") != std::string::npos);
}

TEST_CASE("hasse subcommand") {
  CliFixture fx;
  CHECK(fx.run("hasse --input " + fx.path("toy.csv") + " --function f3 --out " +
               fx.path("f3.dot")) == 0);
  CHECK(fx.read(fx.path("f3.dot")) ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  \"Adam\";\n"
        "  \"Momentum\";\n"
        "  \"SGD\";\n"
        "  \"Momentum\" -> \"SGD\";\n"
        "  \"SGD\" -> \"Adam\";\n"
        "}\n");
  CHECK(fx.run("hasse --input " + fx.path("toy.csv") + " --function nope --out " +
               fx.path("x.dot")) == 1);
}
