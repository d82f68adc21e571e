#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stablelab/cli.hpp"
#include "stablelab/error.hpp"
#include "stablelab/json_io.hpp"

using namespace stablelab;
using io::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stablelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "stablelab-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("rational round trip") {
  for (auto r : {make_rational(0), make_rational(1, 2), make_rational(-7, 3), make_rational(5)}) {
    auto j = io::to_json(r);
    CHECK(io::rational_from_json(j) == r);
  }
  Rational big = make_rational(1, 3);
  for (int i = 0; i < 5; ++i) big *= make_rational(1'000'000'007, 999'999'937);
  CHECK(io::rational_from_json(json::parse(io::dump(io::to_json(big)))) == big);
  CHECK(io::to_json(make_rational(2, 4)) == json{{"num", 1}, {"den", 2}});
}

TEST_CASE("group, subgroup and class set round trips") {
  for (const char* name : {"S3", "Q8", "Z/2 x Z/3", "(Z/8)*", "D4"}) {
    auto g = make_preset(name);
    auto back = io::group_from_json(json::parse(io::dump(io::to_json(*g))));
    CHECK(back->order() == g->order());
    for (Element a = 0; a < g->order(); ++a) {
      CHECK(back->label(a) == g->label(a));
      for (Element b = 0; b < g->order(); ++b) CHECK(back->mul(a, b) == g->mul(a, b));
    }
    for (const auto& h : subgroups(g)) CHECK(io::subgroup_from_json(g, io::to_json(h)) == h);
    const auto k = g->classes().size();
    for (std::size_t c = 0; c < k; ++c) {
      ClassSet s(g, {c, k - 1});
      CHECK(io::class_set_from_json(g, io::to_json(s)) == s);
    }
  }
  auto s3 = make_preset("S3");
  CHECK(io::subgroup_from_json(s3, "whole").is_whole());
  CHECK(io::subgroup_from_json(s3, "trivial").is_trivial());
  CHECK_THROWS_AS(io::class_set_from_json(s3, json{{"elements", {"(1 2)"}}}), Error);
}

TEST_CASE("module and cohomology round trips") {
  std::vector<ModulePtr> mods = {GModule::multiplication(8), GModule::regular(make_preset("Z/3"), 3),
                                 GModule::trivial(make_preset("S3"), {2, 2})};
  for (const auto& a : mods) {
    auto back = io::module_from_json(json::parse(io::dump(io::to_json(*a))));
    CHECK(back->fingerprint() == a->fingerprint());

    auto r = h1(a);
    auto rr = io::h1_result_from_json(a, json::parse(io::dump(io::to_json(r))));
    CHECK(rr.factors == r.factors);
    REQUIRE(rr.generators.size() == r.generators.size());
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      CHECK(r.space->coords(rr.generators[i]) == r.space->coords(r.generators[i]));
  }
}

TEST_CASE("report round trip") {
  auto c = SweepCatalog::default_catalog(4);
  c.modules = {ModuleRecipe{{2}}};
  auto rep = sweep(c, {"containment", "cyclic-decomposition"});
  auto text = io::dump(io::to_json(rep));
  CHECK(io::dump(io::to_json(io::report_from_json(json::parse(text)))) == text);
  CHECK(text.find("seconds") == std::string::npos);
}

TEST_CASE("cli examples") {
  auto w = scratch("w.json");
  write_file(w, "\"whole\"\n");
  auto r = cli({"density", "basechange", "--group", "S3", "--sigma", "1", "--subgroup-file", w.string()});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out) == json{{"num", 1}, {"den", 2}});

  auto v = cli({"verify", "--claims", "containment", "--max-order", "12"});
  CHECK(v.code == kExitOk);
  auto rep = json::parse(v.out);
  CHECK(rep["violations"].empty());
  CHECK(rep["checked"].get<std::size_t>() > 0);

  auto bad = cli({"nonsense"});
  CHECK(bad.code == kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli errors") {
  auto unknown = cli({"group", "--group", "S9"});
  CHECK(unknown.code == kExitUsage);
  auto err = json::parse(unknown.err);
  CHECK(err["error"]["kind"] == "unknown-name");

  auto malformed = scratch("bad.json");
  write_file(malformed, "{not json");
  CHECK(cli({"density", "basechange", "--group", "S3", "--sigma", "1", "--subgroup-file", malformed.string()}).code ==
        kExitUsage);

  auto cap = cli({"cohom", "h1", "--oracle", "--group", "S4", "--orders", "2"});
  CHECK(cap.code == kExitCap);
}

TEST_CASE("cli output is byte-deterministic") {
  const std::vector<std::string> args = {"verify", "--claims", "cyclic-decomposition,containment", "--max-order", "8"};
  auto a = cli(args);
  auto b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);

  auto o1 = scratch("o1.json"), o2 = scratch("o2.json");
  auto with_out = args;
  with_out.insert(with_out.begin(), {"--out", o1.string()});
  CHECK(cli(with_out).code == kExitOk);
  with_out[1] = o2.string();
  CHECK(cli(with_out).code == kExitOk);
  CHECK(read_file(o1) == read_file(o2));
  CHECK(read_file(o1) == a.out);
  auto meta = json::parse(read_file(o1.string() + ".meta.json"));
  CHECK(meta.contains("seconds"));
}

TEST_CASE("csv summaries") {
  auto r = cli({"--format", "csv", "cyclo", "estimate", "--modulus", "8", "--residues", "1", "--bound", "10000"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("quantity,exact,empirical") != std::string::npos);
  CHECK(r.out.find("density,1/4,") != std::string::npos);

  auto v = cli({"--format", "csv", "verify", "--claims", "density", "--max-order", "6"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("density") != std::string::npos);
}

TEST_CASE("cohomology cache directory") {
  auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("STABLELAB_CACHE_DIR", dir.c_str(), 1);
  auto first = cli({"cohom", "h1", "--module-preset", "multiplication", "--n", "8"});
  auto second = cli({"cohom", "h1", "--module-preset", "multiplication", "--n", "8"});
  ::unsetenv("STABLELAB_CACHE_DIR");
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);
  CHECK(json::parse(first.out)["order"] == 2);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
}
