#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "equihodge/errors.hpp"
#include "equihodge/io.hpp"

using namespace equihodge;

namespace {

const std::string fixtures = EQUIHODGE_FIXTURE_DIR;

std::string path_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ValidationError& e) {
    return e.path();
  }
  return "<accepted>";
}

const char* two_points = R"({
  "name": "p",
  "group": {"kind": "cyclic", "order": 2},
  "space": {"type": "finite-set", "points": ["a", "b"]},
  "action": {"vertex_maps": [["a", "b"], ["b", "a"]]}
})";

std::string with(std::string doc, const std::string& from, const std::string& to) {
  const auto at = doc.find(from);
  REQUIRE(at != std::string::npos);
  return doc.replace(at, from.size(), to);
}

int exit_status(const std::string& args) {
  const std::string cmd = std::string("\"") + EQUIHODGE_CLI + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string output_of(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string("\"") + EQUIHODGE_CLI + "\" " + args).c_str(), "r");
  std::array<char, 1024> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

}  // namespace

TEST_CASE("the hexagon document round-trips") {
  const Problem p = load_problem(fixtures + "/fix1.json");
  CHECK(p.space_type == "simplicial");
  CHECK(p.complex->count(0) == 6);
  CHECK(p.complex->count(1) == 6);
  CHECK(p.group->order() == 3);
  CHECK(p.fingerprint.size() == 16);
  REQUIRE(p.weight.has_value());
  CHECK(p.weight->at(Simplex{Vertex(1)}) == 2);
}

TEST_CASE("the periodic line parses over a rank-one lattice") {
  const Problem p = load_problem(fixtures + "/fix4p.json");
  CHECK(p.complex->is_periodic());
  CHECK_FALSE(p.group->is_finite());
  CHECK(p.group->rank() == 1);
  CHECK(p.complex->count(0) == 2);
  CHECK(p.complex->count(1) == 2);
  REQUIRE(p.cutoff.has_value());
  CHECK(p.cutoff->default_value == 0);
}

TEST_CASE("validation errors point into the document") {
  CHECK(path_of(two_points) == "<accepted>");
  CHECK(path_of("{") == "");
  CHECK(path_of(with(two_points, R"({"kind": "cyclic", "order": 2})", R"({"kind": "finite"})")) == "group.mult");
  CHECK(path_of(with(two_points, R"("kind": "cyclic")", R"("kind": "dihedral")")) == "group.kind");
  CHECK(path_of(with(two_points, R"("order": 2)", R"("order": 0)")) == "group.order");
  CHECK(path_of(with(two_points, R"(["b", "a"]])", R"(["b", "a"], ["a", "b"]])")) == "action.vertex_maps");
  CHECK(path_of(with(two_points, R"("finite-set")", R"("torus")")) == "space.type");
  CHECK(path_of(with(two_points, R"("name": "p",)", R"("name": "p", "colour": 1,)")) != "<accepted>");
  CHECK(path_of(with(two_points, "}\n}", R"(}, "cutoff": {"default": "-1"}})")) == "cutoff.default");
  CHECK(path_of(with(two_points, "}\n}", R"(}, "algebra": {"type": "lie"}})")) == "algebra.type");
  // A non-homomorphic table.
  CHECK(path_of(with(two_points, R"({"kind": "cyclic", "order": 2})",
                     R"({"kind": "finite", "mult": [[0, 1], [1, 1]]})")) != "<accepted>");
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6", "x") == Rational(1, 2));
  CHECK(parse_rational("-4", "x") == -4);
  CHECK(parse_rational("0/5", "x") == 0);
  CHECK(parse_rational("3/6", "x").get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1/0", "x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/", "x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("a", "x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5", "x"), ValidationError);
}

TEST_CASE("fingerprints") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("reports render deterministically in both formats") {
  const Problem p = load_problem(fixtures + "/fix5.json");
  const auto reports = run_command("betti", p, {});
  CHECK(exit_code(reports) == 0);
  const std::string json = render("betti", p, reports, OutputFormat::json);
  CHECK(json == render("betti", p, run_command("betti", p, {}), OutputFormat::json));
  CHECK(json.find("\"timing_ms\"") == std::string::npos);
  CHECK(render("betti", p, reports, OutputFormat::json, 1.5).find("\"timing_ms\"") != std::string::npos);
  const std::string tsv = render("betti", p, reports, OutputFormat::tsv);
  CHECK(tsv.rfind("format\tequihodge-report\t1\n", 0) == 0);
  CHECK(tsv.find("\ncommand\tbetti\n") != std::string::npos);
  CHECK(tsv.find("\nsection\tbetti\tpass\n") != std::string::npos);
}

TEST_CASE("sections a document cannot support are declined, not failed") {
  const Problem p = load_problem(fixtures + "/fix4p.json");
  const auto reports = run_command("cyclic", p, {});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].checks.front().status == CheckStatus::declined);
  CHECK(exit_code(reports) == 0);
  const auto duality = run_command("duality", load_problem(fixtures + "/fix2.json"), {});
  CHECK(duality[0].checks.front().status == CheckStatus::declined);
}

TEST_CASE("a failed check maps to exit code 2") {
  Report r;
  r.title = "x";
  r.check("holds", true);
  CHECK(exit_code({r}) == 0);
  r.skip("later", "not applicable");
  CHECK(exit_code({r}) == 0);
  r.check("broken", false, "witness");
  CHECK(exit_code({r}) == 2);
}

TEST_CASE("command-line exit codes") {
  CHECK(exit_status("betti \"" + fixtures + "/fix1.json\"") == 0);
  CHECK(exit_status("euler --k-list 0,1 \"" + fixtures + "/fix1.json\"") == 0);
  CHECK(exit_status("bogus \"" + fixtures + "/fix1.json\"") == 1);
  CHECK(exit_status("betti /nonexistent.json") == 1);
  CHECK(exit_status("euler --k-list 1,x \"" + fixtures + "/fix1.json\"") == 1);
  CHECK(exit_status("cyclic --max-degree 99 \"" + fixtures + "/fix1.json\"") == 1);
  CHECK(exit_status("betti --output xml \"" + fixtures + "/fix1.json\"") == 1);
  // Every orbit of the periodic line meets f = 1; the triangle below has f = 0 on its edges.
  CHECK(exit_status("hodge --strict-cutoff \"" + fixtures + "/fix4p.json\"") == 0);
  const std::string uncovered = "/tmp/equihodge_test_uncovered.json";
  std::ofstream(uncovered) << R"({"name": "h", "group": {"kind": "trivial"},
    "space": {"type": "simplicial", "vertices": 3, "simplices": [[0, 1], [1, 2], [2, 0]]},
    "cutoff": {"default": "0", "values": [{"simplex": [0], "value": "1"}, {"simplex": [1], "value": "1"},
                                          {"simplex": [2], "value": "1"}]}})";
  CHECK(exit_status("hodge --strict-cutoff " + uncovered) == 1);

  const std::string bad = "/tmp/equihodge_test_bad.json";
  std::ofstream(bad) << "{\"name\": 1}";
  CHECK(exit_status("betti " + bad) == 1);

  const std::string tsv = output_of("betti --output tsv \"" + fixtures + "/fix5.json\"");
  CHECK(tsv.rfind("format\tequihodge-report\t1\n", 0) == 0);
}
