#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + KGL_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("field-table") {
  CliResult r = run_cli("field-table --r 2");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "value,inverse,trace,lambda\n"
        "0x0,NA,0,1\n"
        "0x1,0x1,0,1\n"
        "0x2,0x3,1,-1\n"
        "0x3,0x2,1,-1\n");
}

TEST_CASE("kloosterman table and single value") {
  CliResult table = run_cli("kloosterman --r 2");
  CHECK(table.status == 0);
  CHECK(table.out == "a,value\n0x1,3\n0x2,-1\n0x3,-1\n");

  CliResult one = run_cli("kloosterman --r 2 --m 2 --a 0x1");
  CHECK(one.status == 0);
  CHECK(one.out == "a,value\n0x1,5\n");
}

TEST_CASE("census with class numbers") {
  CliResult r = run_cli("census --r 2 --check-class-number");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "t,count,class_number_4q,match_4q,class_number_q,match_q\n"
        "-1,2,2,true,1,false\n"
        "3,1,1,true,NA,NA\n");

  CliResult plain = run_cli("census --r 3");
  CHECK(plain.status == 0);
  CHECK(plain.out == "t,count\n-5,1\n-1,3\n3,3\n");
}

TEST_CASE("glsum agreement") {
  CliResult r = run_cli("glsum --r 2 --t 2 --a 0x1 --method both");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "t,a,method,value\n"
        "2,0x1,direct,84\n"
        "2,0x1,recursive,84\n");

  CliResult big = run_cli("glsum --r 2 --t 3 --a 0x1");
  CHECK(big.status == 0);
  CHECK(big.out == "t,a,method,value\n3,0x1,recursive,15552\n");

  CliResult bad = run_cli("glsum --r 2 --t 3 --a 0x1 --method direct");
  CHECK(bad.status == 2);
}

TEST_CASE("nbeta in both formats") {
  CliResult csv = run_cli("nbeta --r 2 --method both");
  CHECK(csv.status == 0);
  CHECK(csv.out == "beta,n\n0x0,92\n0x1,40\n0x2,24\n0x3,24\n");

  CliResult js = run_cli("nbeta --r 2 --method both --format json");
  CHECK(js.status == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("command") == "nbeta");
  CHECK(j.at("q") == 4);
  CHECK(j.at("modulus") == "0x7");
  CHECK(j.at("match") == true);
  REQUIRE(j.at("counts").size() == 4);
  CHECK(j["counts"][0]["beta"] == "0x0");
  CHECK(j["counts"][0]["n"] == 92);
  CHECK(j["counts"][1]["n"] == 40);
}

TEST_CASE("dual-weights") {
  CliResult r = run_cli("dual-weights --r 2");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "a,k,weight\n"
        "0x0,NA,0\n"
        "0x1,3,48\n"
        "0x2,-1,64\n"
        "0x3,-1,64\n");
}

TEST_CASE("weight-dist with cache") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("kgl-cache-" + std::to_string(getpid()));
  fs::remove_all(dir);

  std::string args = "weight-dist --r 2 --method both --cache-dir " + dir.string();
  CliResult first = run_cli(args);
  CHECK(first.status == 0);
  CHECK(fs::exists(dir / "wd-r2-m0x7-dp.json"));
  CHECK(fs::exists(dir / "wd-r2-m0x7-transform.json"));

  CliResult second = run_cli(args);
  CHECK(second.status == 0);
  CHECK(second.out == first.out);

  std::istringstream in(first.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "j,c");
  REQUIRE(std::getline(in, line));
  CHECK(line == "0,1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "1,92");
  int rows = 2;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 181);
  CHECK(last == "180,1");

  fs::remove_all(dir);
}

TEST_CASE("moments agree for both modes") {
  CliResult r = run_cli("moments --r 2 --h-max 4");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "h,mk2,mk_even\n"
        "0,3,3\n"
        "1,-1,11\n"
        "2,43,83\n"
        "3,71,731\n"
        "4,787,6563\n");
}

TEST_CASE("verify passes and is deterministic") {
  CliResult a = run_cli("verify --r 2 --no-timing --threads 1");
  CHECK(a.status == 0);
  CHECK(a.out.find("verify r=2 q=4 modulus=0x7 h_max=10") == 0);
  CHECK(a.out.find("result PASS") != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);
  CHECK(a.out.find("time ") == std::string::npos);

  CliResult b = run_cli("verify --r 2 --no-timing --threads 4");
  CHECK(b.status == 0);
  CHECK(b.out == a.out);

  CliResult c = run_cli("verify --r 2 --no-timing --threads 4");
  CHECK(c.out == a.out);

  CliResult js = run_cli("verify --r 2 --no-timing --format json");
  CHECK(js.status == 0);
  nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j.at("all_pass") == true);
  CHECK(!j.contains("seconds"));
}

TEST_CASE("output goes to a file on request") {
  namespace fs = std::filesystem;
  fs::path file = fs::temp_directory_path() / ("kgl-out-" + std::to_string(getpid()) + ".csv");
  fs::remove(file);

  CliResult direct = run_cli("field-table --r 3");
  CliResult redirected = run_cli("field-table --r 3 --output " + file.string());
  CHECK(redirected.status == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(file) == direct.out);
  fs::remove(file);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("kloosterman --r 1").status == 2);
  CHECK(run_cli("weight-dist --r 5").status == 2);
  CHECK(run_cli("glsum --r 2 --t 2").status == 2);
  CHECK(run_cli("moments --r 2").status == 2);
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("field-table --r 2 --modulus 0x5").status == 2);
  CHECK(run_cli("kloosterman --r 2 --a zz").status == 2);
}
