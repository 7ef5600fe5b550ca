// Integration tests that drive the installed command-line binary.  The path
// to the executable arrives through the KENDALL_CLI environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

std::string cli_path() {
  const char* exe = std::getenv("KENDALL_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "KENDALL_CLI must point at the binary");
  return exe;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), got);
  }
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("renewal grid contains the frozen closed-form point") {
    const auto r = run_cli("renewal --dist dirac1 --alpha 1 --tmin 1 --tmax 10 --points 10");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"t", "R", "EN2", "VarN"});
    bool found = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (std::stod(rows[i][0]) == 2.0) {
        found = true;
        CHECK(std::stod(rows[i][1]) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(std::stod(rows[i][2]) == doctest::Approx(13.0).epsilon(1e-12));
        CHECK(std::stod(rows[i][3]) == doctest::Approx(4.0).epsilon(1e-12));
      }
    }
    CHECK(found);
  }

  TEST_CASE("simulate is byte identical across runs") {
    const std::string args = "simulate --dist uniform01 --alpha 1 --n 5 --paths 3 --seed 7";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto rows = parse_csv(a.out);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0] == std::vector<std::string>{"path_id", "step_index", "value"});
  }

  TEST_CASE("simulate requires a seed") {
    const auto r = run_cli("simulate --dist uniform01 --alpha 1 --n 5 --paths 3");
    CHECK(r.status == 2);
  }

  TEST_CASE("pmf emits the frozen unit point mass family") {
    const auto r = run_cli("pmf --dist dirac1 --alpha 1 --t 2 --nmax 3");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == std::vector<std::string>{"n", "pmf"});
    const std::array<double, 4> expected = {0.0, 0.25, 0.25, 0.1875};
    for (int n = 0; n <= 3; ++n) {
      CHECK(std::stod(rows[n + 1][0]) == n);
      CHECK(std::stod(rows[n + 1][1]) == doctest::Approx(expected[n]).epsilon(1e-14));
    }
  }

  TEST_CASE("asymptotics rows stay inside the advertised tolerance") {
    const auto r = run_cli("asymptotics --dist pareto --beta 1 --alpha 2 --x 1e6");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] ==
          std::vector<std::string>{"quantity", "x", "finite", "limit", "rel_error"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      INFO(rows[i][0]);
      CHECK(std::stod(rows[i][4]) <= 0.02);
    }
  }

  TEST_CASE("catalog lists every law") {
    const auto r = run_cli("catalog");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows.size() == 9);
    CHECK(r.out.find("dirac1") != std::string::npos);
    CHECK(r.out.find("student_like") != std::string::npos);
  }

  TEST_CASE("verify suite runs clean and reports rows") {
    const auto r = run_cli("verify --suite closedform --alpha 1");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0][0] == "id");
    CHECK(rows[1][0] == "1");
  }

  TEST_CASE("error classes map to distinct exit codes") {
    CHECK(run_cli("renewal --dist nosuch --alpha 1 --tmin 1 --tmax 2 --points 3").status == 3);
    CHECK(run_cli("pmf --dist dirac1 --alpha 1 --t -1 --nmax 3").status == 4);
    CHECK(run_cli("verify --suite nosuch").status == 4);
    CHECK(run_cli("pmf --dist dirac1 --alpha 1 --t 2").status == 2);
  }

  TEST_CASE("json output mirrors the csv rows") {
    const auto r =
        run_cli("--format json renewal --dist dirac1 --alpha 1 --tmin 1 --tmax 3 --points 3");
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[1]["t"].get<double>() == 2.0);
    CHECK(doc[1]["R"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("config file supplies flags and the command line wins") {
    const auto cfg = temp_file("kendall_cli_cfg.txt");
    {
      std::ofstream out(cfg);
      out << "renewal.dist=dirac1\nrenewal.alpha=1\nrenewal.tmin=1\nrenewal.tmax=3\n"
             "renewal.points=3\n";
    }
    const auto from_file = run_cli("--config " + cfg.string() + " renewal");
    REQUIRE(from_file.status == 0);
    const auto rows = parse_csv(from_file.out);
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[2][0]) == 2.0);
    CHECK(std::stod(rows[2][1]) == doctest::Approx(3.0).epsilon(1e-12));

    const auto overridden =
        run_cli("--config " + cfg.string() + " renewal --points 5");
    REQUIRE(overridden.status == 0);
    CHECK(parse_csv(overridden.out).size() == 6);
    std::filesystem::remove(cfg);
  }

  TEST_CASE("output lands in a file when requested") {
    const auto path = temp_file("kendall_cli_out.csv");
    const auto r = run_cli("--output " + path.string() +
                           " renewal --dist dirac1 --alpha 1 --tmin 1 --tmax 3 --points 3");
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    const auto rows = parse_csv(content.str());
    REQUIRE(rows.size() == 4);
    CHECK(std::stod(rows[2][1]) == doctest::Approx(3.0).epsilon(1e-12));
    std::filesystem::remove(path);
  }

  TEST_CASE("help documents the exit code table") {
    const auto r = run_cli("--help");
    CHECK(r.status == 0);
    CHECK(r.out.find("verification suite had a failing criterion") != std::string::npos);
  }
}
