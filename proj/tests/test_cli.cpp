#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

// Integration tests that drive the built binary end to end.
// ALTSUM_CLI_PATH is injected by the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
  std::string command = env_prefix + std::string(ALTSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("catalog lists the built-in series") {
  RunResult r = run("catalog --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["schema"] == "altsum/1");
  CHECK(doc["series"][0]["id"] == "pi4");
  CHECK(doc["series"][1]["id"] == "ln2");
}

TEST_CASE("sum emits exact and decimal values") {
  RunResult r = run("sum --series pi4 --n 2 --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["value"] == "2/3");
  CHECK(doc["value_decimal"] == "0.666666666667");

  RunResult text = run("sum --series pi4 --n 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("value = 2/3") != std::string::npos);
}

TEST_CASE("solve reproduces the headline indices") {
  RunResult r = run("solve --series ln2 --eps 1/20000 --method jb:0 --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["n"] == 10000);
  CHECK(doc["certificate"]["upper"] == "1/20000");
  CHECK(doc["certificate"]["upper_strict"] == true);

  RunResult r2 = run("solve --series pi4 --eps 5e-5 --method jb:2 --output json");
  CHECK(r2.exit_code == 0);
  CHECK(parse(r2)["n"] == 5000);

  RunResult r3 = run("solve --series pi4 --eps 1/2 --method true --output json");
  CHECK(r3.exit_code == 0);
  auto doc3 = parse(r3);
  CHECK(doc3["n"] == 1);
  CHECK(doc3["certificate"].contains("remainder"));
}

TEST_CASE("euler emits the transformed sum") {
  RunResult r = run("euler --series pi4 --n 13 --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["value"] == "1314078208/1673196525");
  CHECK(doc["method"] == "euler(13)");
  CHECK(doc["backend"] == "exact");

  RunResult enc = run("euler --series pi4 --n 13 --enclosure --output json");
  CHECK(enc.exit_code == 0);
  auto doc2 = parse(enc);
  CHECK(doc2.contains("enclosure"));
  CHECK(doc2["enclosure"]["lower"] == "1314078208/1673196525");
}

TEST_CASE("hybrid and accel-solve") {
  RunResult r = run("hybrid --series pi4 --head 10 --tail 11 --digits 9 --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["value_decimal"] == "0.785398163");
  CHECK(doc["terms_consumed"] == 21);

  RunResult a = run("accel-solve --series pi4 --eps 1/20000 --output json");
  CHECK(a.exit_code == 0);
  CHECK(parse(a)["n"] == 13);
}

TEST_CASE("bounds subcommand") {
  RunResult r = run("bounds --series ln2 --n 10000 --k 0 --output json");
  CHECK(r.exit_code == 0);
  auto doc = parse(r);
  CHECK(doc["lower"] == "1/20002");
  CHECK(doc["upper"] == "1/20000");
  CHECK(doc["sign"] == 1);

  RunResult l = run("bounds --series pi4 --n 1 --method leibniz --output json");
  CHECK(l.exit_code == 0);
  CHECK(parse(l)["upper"] == "1/3");
  CHECK(parse(l)["sign"] == -1);

  RunResult jk = run("bounds --series pi4 --n 10 --method jb:2 --output json");
  CHECK(jk.exit_code == 0);
  CHECK(parse(jk)["lower"] == "43/1725");
}

TEST_CASE("table subcommand emits csv with header") {
  RunResult r = run("table --series pi4 --start 1 --width 3 --max-order 1 --output csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.starts_with("r,n,value_exact,value_decimal\n"));
  CHECK(r.out.find("1,1,2/3,") != std::string::npos);
}

TEST_CASE("help exits 0") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("solve --help").exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("sum --series pi4").exit_code == 2);              // missing --n
  CHECK(run("sum --series nope --n 2").exit_code == 2);       // bad designator
  CHECK(run("sum --series pi4 --n 2 --bogus").exit_code == 2);
  CHECK(run("sum --series pi4 --n 2 --digits 0").exit_code == 2);
  CHECK(run("sum --series pi4 --n 2 --digits 1001").exit_code == 2);
  CHECK(run("solve --series pi4 --eps 0 --method jb:0").exit_code == 2);
  CHECK(run("accel-solve --series pi4 --eps -1/2").exit_code == 2);
  CHECK(run("sum --series pi4 --n 2 --output csv").exit_code == 2);  // csv is table-only
  CHECK(run("").exit_code == 2);  // subcommand required
}

TEST_CASE("domain errors exit 1 with a structured error object") {
  // eps unreachable within the order guard
  RunResult r = run("accel-solve --series pi4 --eps 1e-200 --output json");
  CHECK(r.exit_code == 1);
  auto doc = parse(r);
  CHECK(doc["schema"] == "altsum/1");
  CHECK(doc["error"]["kind"] == "unreachable_eps");
  CHECK(doc["error"].contains("message"));
  CHECK(doc["error"].contains("context"));

  // no known limit for a custom family
  RunResult t = run("solve --series lin:1,3 --eps 1/10 --method true --output json");
  CHECK(t.exit_code == 1);
  CHECK(parse(t)["error"]["kind"] == "no_known_limit");

  // exact sum guard
  RunResult g = run("sum --series ln2 --n 2000000 --output json");
  CHECK(g.exit_code == 1);
  CHECK(parse(g)["error"]["kind"] == "guard_exceeded");
}

TEST_CASE("hypothesis refusal surfaces through the CLI") {
  std::string path = "cli_bad_series_tmp.txt";
  {
    std::ofstream out(path);
    out << "1\n9/10\n1/2\n2/5\n1/5\n1/10\n";
  }
  RunResult r = run("bounds --series file:" + path + " --n 1 --k 0 --output json");
  CHECK(r.exit_code == 1);
  auto doc = parse(r);
  CHECK(doc["error"]["kind"] == "hypothesis_failed");
  CHECK(doc["error"]["context"].get<std::string>().find("order=1") != std::string::npos);
}

TEST_CASE("sampled series through the CLI") {
  std::string path = "cli_good_series_tmp.txt";
  {
    std::ofstream out(path);
    out << "# pi4 prefix\n1\n1/3\n1/5\n1/7\n1/9\n1/11\n1/13\n";
  }
  RunResult r = run("bounds --series file:" + path + " --n 1 --k 0 --output json");
  CHECK(r.exit_code == 0);
  CHECK(parse(r)["lower"] == "1/6");
  CHECK(parse(r)["upper"] == "1/2");
}

TEST_CASE("output is byte-identical across runs") {
  RunResult a = run("euler --series pi4 --n 13 --output json");
  RunResult b = run("euler --series pi4 --n 13 --output json");
  CHECK(a.out == b.out);
  RunResult c = run("table --series ln2 --width 4 --max-order 2 --output csv");
  RunResult d = run("table --series ln2 --width 4 --max-order 2 --output csv");
  CHECK(c.out == d.out);
}

TEST_CASE("constants file override via environment") {
  // a valid override with shifted ln2 digits changes true-remainder searches
  std::string good = "cli_constants_good_tmp.txt";
  {
    std::ofstream out(good);
    out << "pi_over_4 0.7853981633974483096156608458198757210492923498437764 test\n";
    out << "ln2 0.7500000000000000000000000000000000000000000000000000 shifted\n";
  }
  RunResult r = run("solve --series ln2 --eps 1/10 --method true --output json",
                    "ALTSUM_CONSTANTS=" + good + " ");
  CHECK(r.exit_code == 0);
  // |3/4 - S_3| = |3/4 - 5/6| = 1/12 < 1/10 first at n = 3; the builtin
  // value gives n = 5, so the override is demonstrably in effect
  CHECK(parse(r)["n"] == 3);

  // an invalid override (too few digits) is a domain error
  std::string bad = "cli_constants_bad_tmp.txt";
  {
    std::ofstream out(bad);
    out << "ln2 0.6931 short\n";
  }
  RunResult e = run("solve --series ln2 --eps 1/10 --method true --output json",
                    "ALTSUM_CONSTANTS=" + bad + " ");
  CHECK(e.exit_code == 1);
  CHECK(parse(e)["error"]["kind"] == "parse_error");
}
