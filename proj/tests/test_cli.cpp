#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(FTCAP_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: spectrum CSV layout") {
  const std::string path = "/tmp/ftcap_spectrum.csv";
  REQUIRE(run("spectrum --K 10 --out " + path) == 0);
  const std::string body = slurp(path);
  CHECK(body.rfind("k,omega_k,lambda_k,trace_partial\n", 0) == 0);
  // 1 header + 10 records, '\n' endings only
  int lines = 0;
  for (char c : body) {
    if (c == '\n') ++lines;
    CHECK(c != '\r');
  }
  CHECK(lines == 11);
}

TEST_CASE("cli: bits conversion divides by ln 2") {
  const std::string pn = "/tmp/ftcap_sh_nats.csv";
  const std::string pb = "/tmp/ftcap_sh_bits.csv";
  REQUIRE(run("shannon --out " + pn) == 0);
  REQUIRE(run("shannon --unit bits --out " + pb) == 0);

  auto last_value = [](const std::string& body) {
    const auto pos = body.rfind(',');
    return std::stod(body.substr(pos + 1));
  };
  const double nats = last_value(slurp(pn));
  const double bits = last_value(slurp(pb));
  CHECK(bits == doctest::Approx(nats / 0.6931471805599453).epsilon(1e-10));
}

TEST_CASE("cli: exit codes") {
  CHECK(run("spectrum --T -1 --out /dev/null 2>/dev/null") == 1);
  CHECK(run("no-such-command 2>/dev/null") == 1);
  CHECK(run("shannon --fig1-setting --out /dev/null") == 0);
}

TEST_CASE("cli: mi subcommand, AWGN noise path") {
  const std::string path = "/tmp/ftcap_mi.csv";
  REQUIRE(run("mi --signal exp --noise awgn --T 2 --n-list 16 32 --out " + path) == 0);
  const std::string body = slurp(path);
  CHECK(body.rfind("n,I,rate\n", 0) == 0);
}

TEST_CASE("cli: check is deterministic and honest") {
  const std::string p1 = "/tmp/ftcap_check1.json";
  const std::string p2 = "/tmp/ftcap_check2.json";
  REQUIRE(run("check --json --out " + p1) == 0);
  REQUIRE(run("check --json --out " + p2) == 0);
  const std::string a = slurp(p1);
  const std::string b = slurp(p2);
  REQUIRE(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"all_passed\": true") != std::string::npos);

  // negative control: corrupted eigenfrequencies must fail the residual check
  const std::string p3 = "/tmp/ftcap_check_bad.json";
  CHECK(run("check --json --inject-omega-error --out " + p3) == 3);
  const std::string bad = slurp(p3);
  CHECK(bad.find("integral-equation-residual") != std::string::npos);
  CHECK(bad.find("\"all_passed\": false") != std::string::npos);
}
