#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gammasr/io.hpp"

using namespace gammasr;

namespace {
  Instance parse(std::string const& text) {
    std::istringstream in(text);
    return parse_gsr(in);
  }

  GsrErrorCode code_of(std::string const& text) {
    try {
      (void)parse(text);
    } catch (GsrError const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return GsrErrorCode::io;
  }

  std::string const kBoolean = R"(# boolean instance
[gamma_semiring]
name = GB
S = 0 1
G = 0 1
[add_S]
0 1
1 1
[add_G]
0 1
1 1
[product]
gamma = 0
0 0
0 0
gamma = 1
0 0
0 1
)";

  std::string replace(std::string s, std::string const& from, std::string const& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
  }
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("the documented boolean file parses to GB") {
    auto const inst = parse(kBoolean);
    REQUIRE(std::holds_alternative<GammaSemiring>(inst));
    CHECK(std::get<GammaSemiring>(inst) == boolean_gamma_semiring());
  }

  TEST_CASE("generated instances round-trip") {
    for (auto const& g : {boolean_gamma_semiring(), zn_gamma_semiring(2), zn_gamma_semiring(4)}) {
      std::ostringstream out;
      write_gsr(out, g);
      auto const back = parse(out.str());
      REQUIRE(std::holds_alternative<GammaSemiring>(back));
      CHECK(std::get<GammaSemiring>(back) == g);
    }
    for (auto const& r : {boolean_semiring(), zn_semiring(4)}) {
      std::ostringstream out;
      write_gsr(out, r);
      auto const back = parse(out.str());
      REQUIRE(std::holds_alternative<Semiring>(back));
      CHECK(std::get<Semiring>(back) == r);
    }
  }

  TEST_CASE("product blocks may come in any order") {
    auto const swapped = replace(replace(kBoolean, "gamma = 0\n0 0\n0 0\ngamma = 1\n0 0\n0 1\n",
                                         "gamma = 1\n0 0\n0 1\ngamma = 0\n0 0\n0 0\n"),
                                 "# boolean", "# swapped");
    CHECK(std::get<GammaSemiring>(parse(swapped)) == boolean_gamma_semiring());
  }

  TEST_CASE("missing product section is a syntax error naming it") {
    auto const text = kBoolean.substr(0, kBoolean.find("[product]"));
    try {
      (void)parse(text);
      FAIL("expected an error");
    } catch (GsrError const& e) {
      CHECK(e.code() == GsrErrorCode::syntax);
      CHECK(std::string(e.what()).find("[product]") != std::string::npos);
    }
  }

  TEST_CASE("error codes") {
    CHECK(code_of(replace(kBoolean, "S = 0 1", "S = 0 0")) == GsrErrorCode::duplicate_id);
    CHECK(code_of(replace(kBoolean, "[add_S]\n0 1\n", "[add_S]\n0 1 1\n")) == GsrErrorCode::ragged_row);
    CHECK(code_of(replace(kBoolean, "gamma = 1\n0 0\n0 1\n", "gamma = 1\n0 0\n")) == GsrErrorCode::ragged_row);
    CHECK(code_of(replace(kBoolean, "[add_S]\n0 1\n1 1\n", "[add_S]\n1 1\n1 1\n")) == GsrErrorCode::missing_zero);
    CHECK(code_of(replace(kBoolean, "gamma = 1\n0 0\n0 1\n", "gamma = 1\n0 0\n0 x\n")) == GsrErrorCode::syntax);
    CHECK(code_of(replace(kBoolean, "[gamma_semiring]", "[nonsense]")) == GsrErrorCode::syntax);
    CHECK(code_of("") == GsrErrorCode::syntax);
    CHECK(code_of(replace(kBoolean, "name = GB\n", "")) == GsrErrorCode::syntax);
  }

  TEST_CASE("error lines are reported") {
    try {
      (void)parse(replace(kBoolean, "[add_G]\n0 1\n", "[add_G]\n0\n"));
      FAIL("expected an error");
    } catch (GsrError const& e) {
      CHECK(e.line() == 10);
      CHECK(std::string(e.what()).rfind("line 10:", 0) == 0);
    }
  }

  TEST_CASE("load validates axioms and reports io errors") {
    auto const dir = std::filesystem::temp_directory_path();
    auto const bad = dir / "gammasr_test_bad.gsr";
    {
      std::ofstream out(bad);
      out << replace(kBoolean, "gamma = 0\n0 0\n0 0\n", "gamma = 0\n0 0\n0 1\n");
    }
    try {
      (void)load_gsr(bad.string());
      FAIL("expected an axiom error");
    } catch (GsrError const& e) {
      CHECK(e.code() == GsrErrorCode::axiom);
      CHECK(std::string(e.what()).find("zero.gamma") != std::string::npos);
    }
    std::filesystem::remove(bad);
    try {
      (void)load_gsr((dir / "gammasr_no_such_file.gsr").string());
      FAIL("expected an io error");
    } catch (GsrError const& e) {
      CHECK(e.code() == GsrErrorCode::io);
    }
  }

  TEST_CASE("fuzzy subset files") {
    std::vector<std::string> const ids = {"0", "1", "2", "3"};
    std::istringstream             in("# mu\n0 : 1/1\n2 : 1/2\n");
    auto const                     mu = parse_fz(in, ids);
    CHECK(mu == FuzzySubset{Grade::one(), Grade::zero(), Grade(1, 2), Grade::zero()});
    std::ostringstream out;
    write_fz(out, mu, ids);
    CHECK(out.str() == "0 : 1/1\n1 : 0/1\n2 : 1/2\n3 : 0/1\n");
    std::istringstream again(out.str());
    CHECK(parse_fz(again, ids) == mu);

    std::istringstream dup("0 : 1\n0 : 1\n");
    CHECK_THROWS_AS((void)parse_fz(dup, ids), GsrError);
    std::istringstream unknown("9 : 1\n");
    CHECK_THROWS_AS((void)parse_fz(unknown, ids), GsrError);
    std::istringstream badgrade("1 : 3/2\n");
    CHECK_THROWS_AS((void)parse_fz(badgrade, ids), GsrError);
  }

  TEST_CASE("violation descriptions use ids") {
    auto const g = boolean_gamma_semiring();
    CHECK(describe(AxiomViolation{"zero.left", {1, 0}}, g) == "axiom zero.left violated at (1, 0)");
    CHECK(describe(AxiomViolation{"add.identity", {1}}, zn_semiring(2)) ==
          "axiom add.identity violated at (1)");
  }
}
