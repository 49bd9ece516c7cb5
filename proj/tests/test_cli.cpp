#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "splitquat/cli.hpp"
#include "splitquat/fuzz.hpp"
#include "splitquat/serialize.hpp"
#include "splitquat/solver.hpp"

using namespace splitquat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "splitquat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve exit codes") {
  auto r = run({"solve", "--a", "1", "--b", "2", "--c", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("quadric") != std::string::npos);
  CHECK(r.err.empty());

  r = run({"solve", "--a", "1", "--b", "0", "--c", "3+1i+1j+1k"});
  CHECK(r.code == 2);
  CHECK(r.err.empty());

  r = run({"solve", "--a", "1", "--b", "2x", "--c", "0"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("position 1") != std::string::npos);

  CHECK(run({"solve", "--bogus"}).code == 1);
  CHECK(run({"nosuch"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--a", "1+1j", "--b", "1i+1j", "--c", "-1+1i", "--x", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find('0') != std::string::npos);
  r = run({"verify", "--a", "1+1j", "--b", "1i+1j", "--c", "-1+1i", "--x", "2"});
  CHECK(r.code == 2);
}

TEST_CASE("json round trip is bit-exact") {
  Rng rng(3);
  for (FuzzType t : {FuzzType::I, FuzzType::II, FuzzType::III, FuzzType::IV})
    for (int n = 0; n < 25; ++n) {
      const auto inst = planted_instance(t, rng);
      const auto s = solve(inst.a, inst.b, inst.c);
      const std::string text = to_json(s);
      const auto back = parse_solution_set(text);
      CHECK(to_json(back) == text);
      REQUIRE(back.components.size() == s.components.size());
      for (std::size_t k = 0; k < s.components.size(); ++k)
        CHECK(coefficient_vector(back.components[k]) == coefficient_vector(s.components[k]));
    }
  CHECK_THROWS_AS(parse_solution_set("{\"components\":[{\"kind\":\"blob\"}]}"), FormatError);
  CHECK_THROWS_AS(parse_solution_set("not json"), FormatError);
}

TEST_CASE("cli json matches the library") {
  const auto r = run({"solve", "--a", "1", "--b", "1i+1j", "--c", "-1+1i+1j", "--json"});
  CHECK(r.code == 0);
  const auto s = solve(1.0, {0, 1, 1, 0}, {-1, 1, 1, 0});
  CHECK(r.out == to_json(s) + "\n");
}

TEST_CASE("equation file") {
  const auto path = std::filesystem::temp_directory_path() / "splitquat_cli_eq.json";
  {
    std::ofstream f(path);
    f << R"({"a":[1,0,1,0],"b":[0,1,1,0],"c":[-1,1,0,0]})";
  }
  const auto r = run({"solve", "--file", path.string(), "--json"});
  CHECK(r.code == 0);
  const auto s = parse_solution_set(r.out);
  CHECK(membership_distance(s, -1.0) <= 1e-12);
  CHECK(membership_distance(s, {0, 2, 2, 1}) <= 1e-12);
  std::filesystem::remove(path);
  CHECK(run({"solve", "--file", path.string()}).code == 1);
}

TEST_CASE("sqrt, fuzz and oracle") {
  auto r = run({"sqrt", "--w", "-1", "--json"});
  CHECK(r.code == 0);
  r = run({"fuzz", "--trials", "200", "--seed", "42", "--type", "II"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(run({"fuzz", "--trials", "10", "--type", "V"}).code == 1);
  r = run({"oracle", "--a", "1", "--b", "0", "--c", "-1", "--starts", "16"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}
