#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "fixtures.hpp"
#include "fsk/io.hpp"
#include "json.hpp"

using namespace fsk;
using namespace fsk::testing;

namespace {

const std::string kData = FSK_TEST_DATA;
const std::vector<std::string> kFixtures{"node.fsk", "node5.fsk", "snc.fsk", "cubic7.fsk", "quartic5.fsk",
                                         "node_ext.fsk"};

int cli(const std::string& args, const std::string& redirect = "> /dev/null") {
  const std::string cmd = std::string(FSK_BINARY) + " " + args + " " + redirect + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string data(const std::string& f) { return kData + "/" + f; }

void require_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_spec(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("minimal node file") {
  JobSpec job = parse_spec("ring { p = 2 ; vars = x y ; mod = x*y }\nideal I = x, y\n");
  CHECK(job.ring.ring->p() == 2);
  CHECK(job.ring.ring->names() == std::vector<std::string>{"x", "y"});
  CHECK(job.ring.J == I(job.ring.ring, "x*y"));
  CHECK(job.ideal("I") == I(job.ring.ring, "x, y"));
}

TEST_CASE("comments, whitespace and multi-line statements") {
  JobSpec job = parse_spec(
      "# header\n"
      "ring {\n  p = 5 ;   # prime\n  vars = a b\n}\n"
      "ideal J = a^2 + b,\n   a*b\n"
      "hint J = [ a ] [ b ]\n");
  CHECK(job.ideal("J") == I(job.ring.ring, "a^2+b, a*b"));
  CHECK(job.ring.J.is_zero());
  CHECK(job.hints_for("J").size() == 2);
  CHECK(job.hints_for("nothing").empty());
}

TEST_CASE("malformed input is rejected with positions") {
  require_parse_error("ring { p = 4 ; vars = x }\n", 1, 12);
  require_parse_error("ring { p = 3 ; vars = x y }\nideal I = x, w\n", 2, 14);
  require_parse_error("ring { p = 3 ; vars = x ; mod = 0 }\n", 1, 33);
  require_parse_error("ideal I = x\n", 1, 1);
  require_parse_error("ring { p = 3 ; vars = x }\nhint K = [ x ]\n", 2, 6);
  require_parse_error("ring { p = 3 ; vars = x }\nextend S { var = T ; rel = x*T^2 }\n", 2, 28);
  require_parse_error("ring { p = 3 ; vars = x }\nextend S { var = x ; rel = x^2 }\n", 2, 18);
  require_parse_error("ring { p = 3 ; vars = x ; colour = 1 }\n", 1, 27);
}

TEST_CASE("extension stanzas") {
  JobSpec job = read_spec_file(data("node_ext.fsk"));
  REQUIRE(job.extensions.size() == 1);
  const ExtensionPresentation& S = job.extension("S");
  CHECK(S.adjoined == std::vector<std::string>{"T"});
  CHECK(S.monic[0] == P(S.ring, "T^2+T"));
  CHECK(S.relations.size() == 1);
  REQUIRE(S.birational.size() == 1);
  CHECK(S.birational[0].X == P(S.ring, "x+y"));
  CHECK(trace_ideal(S) == I(job.ring.ring, "x, y"));
  CHECK(trace_ideal(S, TraceRoute::Hom) == I(job.ring.ring, "x, y"));
}

TEST_CASE("print and parse round trip") {
  for (const auto& f : kFixtures) {
    JobSpec a = read_spec_file(data(f));
    const std::string text = print_spec(a);
    JobSpec b = parse_spec(text);
    CHECK_MESSAGE(print_spec(b) == text, f);
    CHECK(print_ring(a.ring) == print_ring(b.ring));
    REQUIRE(a.ideals.size() == b.ideals.size());
    for (std::size_t i = 0; i < a.ideals.size(); ++i) {
      CHECK(a.ideals[i].first == b.ideals[i].first);
      CHECK(a.ideals[i].second.canonical_strings() == b.ideals[i].second.canonical_strings());
    }
    REQUIRE(a.extensions.size() == b.extensions.size());
    for (std::size_t i = 0; i < a.extensions.size(); ++i)
      CHECK(a.extensions[i].second.ideal().canonical_strings() == b.extensions[i].second.ideal().canonical_strings());
  }
}

TEST_CASE("built extensions survive serialization") {
  auto N = node(5);
  auto b = build_extension(N, N.irrelevant());
  JobSpec job = parse_spec(print_ring(N) + print_extension(b.S, "S"));
  const ExtensionPresentation& S = job.extension("S");
  CHECK(S.ideal().canonical_strings() == b.S.ideal().canonical_strings());
  CHECK(trace_ideal(S).canonical_strings() == trace_ideal(b.S).canonical_strings());

  auto R = snc();
  auto c = build_extension(R, I(R.ring, "x*y"));
  JobSpec job2 = parse_spec(print_ring(R) + print_extension(c.S, "S"));
  CHECK(trace_ideal(job2.extension("S")).canonical_strings() == I(R.ring, "x*y").canonical_strings());
}

TEST_CASE("lattice export") {
  auto R = snc();
  CompatibleLattice L = enumerate_compatible(fedder_element(R), R);
  auto j = nlohmann::json::parse(emit_lattice(L, R, LatticeFormat::Json));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"compatible_primes", "containments", "ideals", "minimal_primes", "p", "ring"});
  CHECK(j["p"] == 2);
  CHECK(j["compatible_primes"].size() == 7);
  CHECK(j["minimal_primes"].size() == 3);
  CHECK(j["ideals"].size() == L.ideals.size());
  for (const auto& e : j["containments"]) {
    const Ideal small = L.ideals.at(e[0].get<std::size_t>());
    const Ideal big = L.ideals.at(e[1].get<std::size_t>());
    CHECK(big.contains(small));
    CHECK(small != big);
  }

  const std::string dot = emit_lattice(L, R, LatticeFormat::Dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  // (x, y) is covered by the maximal ideal; (x) is not, since (x, y) lies between.
  std::size_t ix = 0, ixy = 0, im = 0;
  for (std::size_t i = 0; i < L.ideals.size(); ++i) {
    if (L.ideals[i] == I(R.ring, "x")) ix = i;
    if (L.ideals[i] == I(R.ring, "x, y")) ixy = i;
    if (L.ideals[i] == I(R.ring, "x, y, z")) im = i;
  }
  auto edge = [&](std::size_t a, std::size_t b) {
    return dot.find("n" + std::to_string(a) + " -> n" + std::to_string(b) + ";") != std::string::npos;
  };
  CHECK(edge(ixy, im));
  CHECK_FALSE(edge(ix, im));
}

TEST_CASE("command line exit codes") {
  CHECK(cli("fpure " + data("node.fsk")) == 0);
  CHECK(cli("fpure " + data("snc.fsk")) == 0);
  CHECK(cli("fpure " + data("cubic7.fsk")) == 0);
  CHECK(cli("fpure " + data("quartic5.fsk")) == 1);
  CHECK(cli("compatible " + data("node.fsk") + " --ideal I") == 0);
  CHECK(cli("fixed " + data("quartic5.fsk") + " --ideal M2") == 0);
  CHECK(cli("verify " + data("node.fsk") + " --ideal I --extension " + data("node_ext.fsk")) == 0);
  // The normalization does not realize (x).
  CHECK(cli("verify " + data("node.fsk") + " --ideal X --extension " + data("node_ext.fsk")) == 1);
  // Errors exit 2.
  CHECK(cli("fpure /nonexistent.fsk") == 2);
  CHECK(cli("bogus " + data("node.fsk")) == 2);
  CHECK(cli("closure " + data("node.fsk")) == 2);
  CHECK(cli("verify " + data("node.fsk") + " --ideal I --extension " + data("snc.fsk")) == 2);
}

TEST_CASE("command line build, lattice and json output") {
  const std::string dir = FSK_TEST_OUT;
  CHECK(cli("build " + data("node.fsk") + " --ideal I --json " + dir + "/node_build.json", "> " + dir + "/node_built.fsk") == 0);
  CHECK(cli("verify " + data("node.fsk") + " --ideal I --extension " + dir + "/node_built.fsk --json " + dir +
            "/node_verify.json") == 0);
  std::ifstream in(dir + "/node_verify.json");
  auto j = nlohmann::json::parse(in);
  CHECK(j["equals_input"] == true);
  CHECK(j["tau"] == nlohmann::json::array({"x", "y"}));

  CHECK(cli("compatible " + data("snc.fsk") + " --lattice " + dir + "/snc.json") == 0);
  std::ifstream lin(dir + "/snc.json");
  auto l = nlohmann::json::parse(lin);
  CHECK(l["compatible_primes"].size() == 7);

  setenv("FSK_CAP", "not-a-number", 1);
  CHECK(cli("closure " + data("node.fsk") + " --ideal X") == 2);
  setenv("FSK_CAP", "8", 1);
  CHECK(cli("closure " + data("node.fsk") + " --ideal X") == 0);
  unsetenv("FSK_CAP");
}
