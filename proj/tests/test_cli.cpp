#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "redwords/cli.hpp"

using namespace redwords;

namespace {

struct Run {
  int rc = 0;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("words enumerate") {
  const Run count = cli({"words", "enumerate", "35124", "--count-only"});
  CHECK(count.rc == 0);
  CHECK(count.out == "5\n");

  const Run list = cli({"words", "enumerate", "35124"});
  CHECK(list.rc == 0);
  CHECK(list.out == "21432\n24132\n24312\n42132\n42312\n");

  const Run json = cli({"words", "enumerate", "4231", "--json"});
  CHECK(json.rc == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["count"] == 6);
  CHECK(doc["words"].size() == 6);
  CHECK(doc["words"][0] == "12321");
}

TEST_CASE("perm info") {
  const Run r = cli({"perm", "info", "51342"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("length        6") != std::string::npos);
  CHECK(r.out.find("descents      {1,4}") != std::string::npos);
  CHECK(r.out.find("cycle type    (3,1,1)") != std::string::npos);
  CHECK(r.out.find("lehmer code   (4,0,1,1,0)") != std::string::npos);

  const Run g = cli({"perm", "info", "45123", "--json"});
  const auto doc = nlohmann::json::parse(g.out);
  CHECK(doc["grassmannian"] == true);
  CHECK(doc["descent_position"] == 2);
  CHECK(doc["length"] == 6);
}

TEST_CASE("usage errors exit 2") {
  const Run bad_perm = cli({"perm", "info", "51341"});
  CHECK(bad_perm.rc == 2);
  CHECK(bad_perm.err.find("duplicated") != std::string::npos);

  CHECK(cli({"family", "verify", "3"}).rc == 2);
  CHECK(cli({"nonsense"}).rc == 2);
  CHECK(cli({"perm", "info", "123", "--nope"}).rc == 2);
  CHECK(cli({}).rc == 2);
  CHECK(cli({"words", "enumerate", "654321", "--budget", "10"}).rc == 2);
}

TEST_CASE("family verify") {
  const Run r = cli({"family", "verify", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("predicted 10  actual 10") != std::string::npos);
  CHECK(r.out.find("2d + 3d^2 + 4d^3 + d^4") != std::string::npos);
  CHECK(r.out.find("result              pass") != std::string::npos);

  const Run j = cli({"family", "verify", "6", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["order_actual"] == 15);
  CHECK(doc["braid_vertex_count"] == 8);
}

TEST_CASE("family series") {
  const Run r = cli({"family", "series", "--max-n", "8"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("2d^2 z^3") != std::string::npos);
  CHECK(r.out.find("z^4  2d + 2d^2 + 2d^3") != std::string::npos);
  CHECK(r.out.find("difference (closed form - termwise)  2d^2 z^3") != std::string::npos);
}

TEST_CASE("tableaux list") {
  const Run r = cli({"tableaux", "list", "5", "--recording-only"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("345|2|1  reading 12345  rank 0  recording") != std::string::npos);
  CHECK(r.out.find("123|5|4  reading 45123  rank 6  recording") != std::string::npos);

  const Run j = cli({"tableaux", "list", "4", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 12);
  CHECK(doc[0].contains("first_row"));
  CHECK(doc[0].contains("reading"));

  const Run jr = cli({"tableaux", "list", "4", "--json", "--recording-only"});
  CHECK(nlohmann::json::parse(jr.out).size() == 6);
}

TEST_CASE("simplex commands") {
  const Run pts = cli({"simplex", "points", "3"});
  CHECK(pts.rc == 0);
  CHECK(pts.out.find("(0,0)  weight 0  partition ()") != std::string::npos);
  CHECK(pts.out.find("(0,3)  weight 6  partition (3,3)") != std::string::npos);

  const Run gauss = cli({"simplex", "gaussian", "3"});
  CHECK(gauss.rc == 0);
  CHECK(gauss.out.find("[5 2]_q = 1 + q + 2q^2 + 2q^3 + 2q^4 + q^5 + q^6") !=
        std::string::npos);
  CHECK(gauss.out.find("value at q=1: 10") != std::string::npos);

  const Run dot = cli({"simplex", "graph", "2", "--format", "dot"});
  CHECK(dot.rc == 0);
  CHECK(dot.out.find("graph {") == 0);
  CHECK(dot.out.find("\"(0,0)\" -- \"(1,0)\" [label=\"cover\"]") != std::string::npos);

  const Run js = cli({"simplex", "graph", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["vertices"].size() == 6);
  CHECK(doc["edges"].size() == 6);
}

TEST_CASE("words graph") {
  const Run dot = cli({"words", "graph", "4231"});
  CHECK(dot.rc == 0);
  CHECK(dot.out.find("\"12321\" -- \"13231\" [label=\"braid\"]") != std::string::npos);

  const Run js = cli({"words", "graph", "35124", "--format", "json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["vertices"].size() == 5);
  CHECK(doc["edges"].size() == 5);
}

TEST_CASE("iso chain") {
  const Run r = cli({"iso", "chain", "4"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("words -> tableaux: verified") != std::string::npos);
  CHECK(r.out.find("chain verified") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "redwords_chain_test";
  std::filesystem::remove_all(dir);
  const Run w = cli({"iso", "chain", "5", "--emit", "json", "--outdir", dir.string()});
  CHECK(w.rc == 0);
  for (const char* name : {"words", "tableaux", "readings", "partitions", "lattice"})
    CHECK(std::filesystem::exists(dir / (std::string(name) + ".json")));
  CHECK(std::filesystem::exists(dir / "maps.json"));
  CHECK(std::filesystem::exists(dir / "summary.txt"));
  std::ifstream maps(dir / "maps.json");
  const auto doc = nlohmann::json::parse(maps);
  CHECK(doc["n"] == 5);
  CHECK(doc["links"].size() == 4);
  CHECK(doc["links"][0]["map"]["234321"] == "345|2|1");
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify all at a reduced range") {
  const Run r = cli({"verify", "all", "--max-n", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("[ 1] PASS") != std::string::npos);
  CHECK(r.out.find("[11] PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args :
       {std::vector<std::string>{"words", "graph", "51342"},
        std::vector<std::string>{"tableaux", "list", "5", "--json"},
        std::vector<std::string>{"iso", "chain", "4"}}) {
    const Run a = cli(args);
    const Run b = cli(args);
    CHECK(a.out == b.out);
    CHECK(a.rc == b.rc);
  }
}

TEST_CASE("help exits zero") {
  CHECK(cli({"--help"}).rc == 0);
  CHECK(cli({"words", "--help"}).rc == 0);
}
