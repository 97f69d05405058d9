#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cache.hpp"
#include "commands.hpp"

using namespace arithmorse;
using namespace arithmorse::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "arithmorse");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) v.push_back(f);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "arithmorse_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli({"build", "--n", "1"}).code == kExitUsage);
  CHECK(run_cli({"build", "--n", "10", "--bogus"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  const auto help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("table") != std::string::npos);
  CHECK(run_cli({"table", "--kind", "divisor", "--n-max", "30"}).code == kExitUsage);
  CHECK(run_cli({"table", "--n-max", "20", "--sieve-limit", "10"}).code == kExitUsage);
  CHECK(run_cli({"table", "--n-max", "20", "--field-prime", "9"}).code == kExitUsage);
  CHECK(run_cli({"table", "--n-max", "20", "--checkpoints", "3,x"}).code == kExitUsage);
  CHECK(run_cli({"table", "--n-max", "20", "--checkpoints", "25"}).code == kExitUsage);
  CHECK(run_cli({"verify", "--checks", "nonsense"}).code == kExitUsage);
  CHECK(run_cli({"series", "--what", "volume"}).code == kExitUsage);
  CHECK(run_cli({"build", "--n", "10", "--format", "dot", "--kind", "ring"}).code == kExitUsage);
}

TEST_CASE("build command") {
  const auto j = run_cli({"build", "--kind", "prime", "--n", "6", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["vertices"] == nlohmann::json::array({2, 3, 5, 6}));
  const auto dot = run_cli({"build", "--kind", "divisor", "--n", "30", "--format", "dot"});
  CHECK(dot.code == kExitOk);
  CHECK(dot.out.rfind("graph divisor_30 {", 0) == 0);
  const auto csv = run_cli({"build", "--kind", "integer", "--n", "6"});
  CHECK(csv.out == "a,b\n2,4\n2,6\n3,6\n");
  const auto path = scratch("g.json");
  CHECK(run_cli({"--out", path.string(), "build", "--n", "6", "--format", "json"}).code == kExitOk);
  CHECK(slurp(path) == j.out);
}

TEST_CASE("table command") {
  const auto t = run_cli({"table", "--n-max", "10", "--threads", "1"});
  REQUIRE(t.code == kExitOk);
  const auto ls = lines(t.out);
  REQUIRE(ls.size() == 10);
  const auto header = fields(ls[0]);
  CHECK(header.size() == 21);
  const auto row = fields(ls.back());
  auto col = [&](const std::string& name) {
    return row[static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin())];
  };
  CHECK(col("n") == "10");
  CHECK(col("chi") == "2");
  CHECK(col("mertens") == "-1");
  CHECK(col("b0") == "2");
  CHECK(col("c1") == "2");
  CHECK(col("strong") == "true");

  const auto sixty = run_cli({"table", "--n-max", "60", "--threads", "1"});
  CHECK(lines(sixty.out).size() == 60);
  CHECK(sixty.out.find("false") == std::string::npos);
  CHECK(run_cli({"table", "--n-max", "60", "--threads", "4"}).out == sixty.out);
  CHECK(run_cli({"table", "--n-max", "60", "--kind", "integer", "--threads", "2"}).out.find("false") ==
        std::string::npos);

  const auto sel = run_cli({"table", "--n-max", "40", "--checkpoints", "15,30"});
  REQUIRE(sel.code == kExitOk);
  const auto sl = lines(sel.out);
  REQUIRE(sl.size() == 3);
  CHECK(fields(sl[1])[0] == "15");
  CHECK(fields(sl[2])[0] == "30");

  const auto js = run_cli({"table", "--n-max", "12", "--format", "json"});
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc.size() == 11);
  CHECK(doc.back()["betti"] == nlohmann::json::array({3}));

  const auto events = scratch("events.csv");
  CHECK(run_cli({"table", "--n-max", "30", "--events", events.string()}).code == kExitOk);
  const auto ev = lines(slurp(events));
  CHECK(ev.front() == "n,mu,sphere_dim,morse_index,ph_index,kind");
  CHECK(ev.back() == "30,-1,1,2,1,critical");
  CHECK(ev.size() == 19);
}

TEST_CASE("table cache round trip") {
  const auto cache = scratch("cache.jsonl");
  const auto plain = run_cli({"table", "--n-max", "80", "--threads", "1"});
  const auto cold = run_cli({"--cache", cache.string(), "table", "--n-max", "80"});
  REQUIRE(cold.code == kExitOk);
  CHECK(cold.out == plain.out);
  CHECK(cold.err.find("cache: 0 hits") != std::string::npos);
  CHECK(lines(slurp(cache)).size() == 49);
  const auto warm = run_cli({"--cache", cache.string(), "table", "--n-max", "80"});
  CHECK(warm.out == plain.out);
  CHECK(warm.err.find("cache: 49 hits") != std::string::npos);

  const auto first = nlohmann::json::parse(lines(slurp(cache)).front());
  CHECK(first["kind"] == "prime");
  CHECK(first["n"] == 2);
  CHECK(first["tool_version"] == tool_version());

  // An interrupted append leaves a partial last line; it is dropped with a warning.
  const auto intact = slurp(cache);
  {
    std::ofstream f(cache, std::ios::app | std::ios::binary);
    f << R"({"kind":"prime","n":81,"tool_ver)";
  }
  const auto repaired = run_cli({"--cache", cache.string(), "table", "--n-max", "80"});
  CHECK(repaired.code == kExitOk);
  CHECK(repaired.out == plain.out);
  CHECK(repaired.err.find("warning") != std::string::npos);
  CHECK(slurp(cache) == intact);

  // Extending the sweep appends only the new checkpoints.
  const auto more = run_cli({"--cache", cache.string(), "table", "--n-max", "90"});
  CHECK(more.err.find("cache: 49 hits") != std::string::npos);
  CHECK(lines(slurp(cache)).size() == 55);

  // Corruption before the last line is an error.
  {
    std::ofstream f(cache, std::ios::binary | std::ios::trunc);
    f << "not json\n" << intact;
  }
  CHECK(run_cli({"--cache", cache.string(), "table", "--n-max", "80"}).code == kExitFailure);
}

TEST_CASE("cache ignores other versions and primes") {
  const auto cache = scratch("versions.jsonl");
  std::ostringstream warn;
  {
    JsonlCache c(cache.string(), "old", warn);
    CheckpointRecord r;
    r.n = 5;
    r.betti = {3};
    r.f_vector = {3};
    r.chi = 3;
    r.mertens = -2;
    r.c = {3};
    c.store(r);
    CHECK(c.lookup(GraphFamily::Prime, 5, kDefaultFieldPrime).has_value());
  }
  JsonlCache fresh(cache.string(), "new", warn);
  CHECK_FALSE(fresh.lookup(GraphFamily::Prime, 5, kDefaultFieldPrime).has_value());
  JsonlCache same(cache.string(), "old", warn);
  CHECK(same.lookup(GraphFamily::Prime, 5, kDefaultFieldPrime).has_value());
  CHECK_FALSE(same.lookup(GraphFamily::Prime, 5, 1000003).has_value());
  CHECK_FALSE(same.lookup(GraphFamily::Integer, 5, kDefaultFieldPrime).has_value());
  CHECK(warn.str().empty());
}

TEST_CASE("series command") {
  const auto d = run_cli({"series", "--what", "dimension", "--n-max", "6"});
  REQUIRE(d.code == kExitOk);
  const auto ls = lines(d.out);
  CHECK(ls.front() == "n,dimension,decimal");
  CHECK(ls[1] == "2,0,0.000000000000");
  CHECK(ls.back() == "6,3/4,0.750000000000");
  const auto w = run_cli({"series", "--what", "wu", "--n-max", "10"});
  REQUIRE(w.code == kExitOk);
  const auto wl = lines(w.out);
  CHECK(wl.front() == "n,wu,scaled_chi");
  CHECK(wl[1] == "2,1,85");
  CHECK(wl.size() == 10);
  const auto long_run = run_cli({"series", "--n-max", "200"});
  CHECK(long_run.err.find("fit over 6 <= n <= 200") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto k = run_cli({"--checks", "kummer", "verify", "--d", "4"});
  CHECK(k.code == kExitOk);
  CHECK(k.out.find("[PASS] kummer") != std::string::npos);
  CHECK(k.out.find("Divisor(210): sphere dim 2") != std::string::npos);
  CHECK(k.out.find("betti (1,0,1)") != std::string::npos);
  CHECK(k.out.find("lefschetz (0,0)") != std::string::npos);
  const auto small = run_cli({"--checks", "mertens,hopf,morse-weak,morse-strong,formulas,diameter", "--n-max", "300",
                              "verify"});
  CHECK(small.code == kExitOk);
  CHECK(small.out.find("[FAIL]") == std::string::npos);
  CHECK(small.out.find("6/6 suites passed") != std::string::npos);
  CHECK(run_cli({"--checks", "kummer", "verify", "--d", "7"}).code == kExitUsage);
}

TEST_CASE("least squares fit") {
  std::vector<double> x, y;
  for (int i = 6; i <= 500; ++i) {
    x.push_back(i);
    y.push_back(0.25 - 3e-5 * i + 0.2 * std::log(static_cast<double>(i)));
  }
  const auto f = fit_const_linear_log(x, y);
  CHECK(f.constant == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(f.linear == doctest::Approx(-3e-5).epsilon(1e-7));
  CHECK(f.log == doctest::Approx(0.2).epsilon(1e-9));
  CHECK_THROWS_AS(fit_const_linear_log({1, 2}, {1, 2}), std::invalid_argument);
}
