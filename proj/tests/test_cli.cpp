#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(RWIND_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const Run small = run("enumerate --max-length 3.2");
  CHECK(small.code == 0);
  CHECK(count_lines(small.out) == 6);
  CHECK(small.out.find("\n3-1,5,3.13359847394,2\n") != std::string::npos);

  const Run empty = run("enumerate --max-length 1");
  CHECK(empty.code == 0);
  CHECK(empty.out == "word,trace,length,psi\n");

  const Run json = run("enumerate --max-length 6.3 --format json");
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  bool found = false;
  for (const auto& item : doc)
    if (item["word"] == nlohmann::json::array({3, 7})) {
      found = true;
      CHECK(item["trace"] == 23);
      CHECK(item["psi"] == -4);
      CHECK(item["length"].get<double>() == doctest::Approx(6.2671969479));
    }
  CHECK(found);

  CHECK(run("enumerate --max-length 12 --threads 1").out == run("enumerate --max-length 12 --threads 4").out);
  CHECK(run("enumerate --max-length 25").code == 3);
  CHECK(run("enumerate --max-length 5 --format xml").code == 1);
  CHECK(run("enumerate --max-length 5 --bogus").code == 1);
  CHECK(run("enumerate").code == 1);
  CHECK(run("").code == 1);
}

TEST_CASE("psi") {
  const Run all = run("psi --matrix 22,3,7,1 --method all");
  CHECK(all.code == 0);
  CHECK(all.out == "cf -4\ndedekind -4\ncocycle -4\nindex -4\nperiod -4.000000000\n");
  const Run id = run("psi --matrix 1,0,0,1");
  CHECK(id.code == 0);
  CHECK(id.out.find("dedekind 0\n") != std::string::npos);
  CHECK(run("psi --matrix 1,1,1,1").code == 1);
  CHECK(run("psi --matrix 1,2,3").code == 1);
  CHECK(run("psi --word 3-7 --method cf").out == "cf -4\n");
  CHECK(run("psi --word 3,7 --method dedekind").out == "dedekind -4\n");
  CHECK(run("psi --word 3-7-1").code == 1);
  CHECK(run("psi --matrix 1,1,0,1 --method cf").code == 1);
  CHECK(run("psi --matrix 1,1,0,1 --method index").code == 1);
  CHECK(run("psi --matrix 22,3,7,1 --word 3-7").code == 1);
  CHECK(run("psi --matrix 22,3,7,1 --method nope").code == 1);
  // Non-primitive: cf is skipped, the rest agree on 2 psi.
  const Run square = run("psi --matrix 5,3,3,2");
  CHECK(square.code == 0);
  CHECK(square.out == "dedekind 0\ncocycle 0\nindex 0\nperiod 0.000000000\n");
}

TEST_CASE("index") {
  const Run r = run("index --word 3-7");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["index"] == -4);
  CHECK(run("index --matrix 1,1,0,1").code == 1);
}

TEST_CASE("stats commands") {
  const Run density = run("stats-density --max-length 12 --n-range -5..5");
  CHECK(density.code == 0);
  CHECK(count_lines(density.out) == 12);
  CHECK(density.out.rfind("n,count,empirical,predicted,ratio\n", 0) == 0);

  const Run twisted = run("stats-twisted --max-length 12 --r-grid -0.45:0.45:0.05");
  CHECK(twisted.code == 0);
  CHECK(count_lines(twisted.out) == 20);
  CHECK(twisted.out.find("relative_error") != std::string::npos);
  CHECK(twisted.out.find("\n0,") != std::string::npos);

  const Run cauchy = run("stats-cauchy --max-length 12");
  CHECK(cauchy.code == 0);
  CHECK(nlohmann::json::parse(cauchy.out).contains("ks_statistic"));

  const Run equi = run("stats-equidist --max-length 12 --modulus 3");
  CHECK(equi.code == 0);
  CHECK(count_lines(equi.out) == 4);

  CHECK(run("stats-cauchy --max-length 5").code == 3);
  CHECK(run("stats-equidist --max-length 5").code == 3);
  CHECK(run("stats-density --n-range 5").code == 1);
  CHECK(run("stats-twisted --r-grid 1:0:0.1").code == 1);
}

TEST_CASE("plot data") {
  const std::string path = std::string(RWIND_TEST_TMP) + "/density_plot.csv";
  CHECK(run("stats-density --max-length 10 --n-range -2..2 --csv-out " + path).code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char line[256];
  REQUIRE(std::fgets(line, sizeof line, f) != nullptr);
  CHECK(std::string(line) == "x,empirical,predicted\n");
  int rows = 0;
  while (std::fgets(line, sizeof line, f)) ++rows;
  std::fclose(f);
  CHECK(rows == 5);
}

TEST_CASE("verify guard and determinism") {
  CHECK(run("verify --max-length 25").code == 1);
  const Run a = run("verify --max-length 8 --sample 40 --seed 5");
  const Run b = run("verify --max-length 8 --sample 40 --seed 5 --threads 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["failed"] == 0);
  for (const auto& s : doc["suites"]) {
    CHECK(s.contains("suite"));
    CHECK(s.contains("details"));
  }
}
