// Drives the gsl binary end to end: exit codes, file round trips and the
// shape of its reports.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code;
    std::string out;
  };

  Run gsl(std::string const& args, std::string const& env = "") {
    std::string const cmd = env + (env.empty() ? "" : " ") + GSL_PATH + " " + args + " 2>/dev/null";
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char        buf[4096];
    while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int const status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void spit(fs::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }

  std::string above_timing(std::string const& text) {
    return text.substr(0, text.find("-- timing --"));
  }

  struct Workdir {
    fs::path dir;
    Workdir() {
      dir = fs::temp_directory_path() / ("gsl_cli_" + std::to_string(::getpid()));
      fs::create_directories(dir);
    }
    ~Workdir() {
      fs::remove_all(dir);
    }
    std::string operator/(std::string const& name) const {
      return (dir / name).string();
    }
  };

  std::string const kHeader = "[gamma_semiring]\nname = GB\nS = 0 1\nG = 0 1\n"
                              "[add_S]\n0 1\n1 1\n[add_G]\n0 1\n1 1\n[product]\n";
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate, validate and verify") {
    Workdir w;
    REQUIRE(gsl("gen boolean -o " + (w / "gb.gsr")).code == 0);
    REQUIRE(gsl("gen zn 4 -o " + (w / "z4.gsr")).code == 0);
    auto const v = gsl("validate " + (w / "gb.gsr"));
    CHECK(v.code == 0);
    CHECK(v.out.find("GB: ok") != std::string::npos);
    auto const all = gsl("verify " + (w / "gb.gsr") + " --suite all");
    CHECK(all.code == 0);
    CHECK(all.out.find("status: fail") == std::string::npos);
  }

  TEST_CASE("unmet preconditions still exit 0") {
    Workdir w;
    REQUIRE(gsl("gen zn 4 -o " + (w / "z4.gsr")).code == 0);
    auto const r = gsl("verify " + (w / "z4.gsr") + " --suite th3.18");
    CHECK(r.code == 0);
    CHECK(r.out.find("status: precondition-unmet") != std::string::npos);
    CHECK(r.out.find("not zero-divisor free") != std::string::npos);
  }

  TEST_CASE("usage, parse and io errors exit 2") {
    Workdir w;
    CHECK(gsl("verify " + (w / "missing.gsr")).code == 2);
    CHECK(gsl("frobnicate").code == 2);
    REQUIRE(gsl("gen boolean -o " + (w / "gb.gsr")).code == 0);
    CHECK(gsl("verify " + (w / "gb.gsr") + " --suite bogus").code == 2);
    spit(w / "broken.gsr", kHeader + "gamma = 0\n0 0\n");
    CHECK(gsl("validate " + (w / "broken.gsr")).code == 2);
  }

  TEST_CASE("axiom violations exit 1 from validate") {
    Workdir w;
    spit(w / "bad.gsr", kHeader + "gamma = 0\n0 0\n0 1\ngamma = 1\n0 0\n0 1\n");
    auto const r = gsl("validate " + (w / "bad.gsr"));
    CHECK(r.code == 1);
    CHECK(r.out.find("zero.gamma violated at (1, 1)") != std::string::npos);
    auto const j = nlohmann::json::parse(gsl("validate " + (w / "bad.gsr") + " --json").out);
    CHECK(j["ok"] == false);
    CHECK(j["violations"][0]["axiom"] == "zero.gamma");
  }

  TEST_CASE("a failing suite exits 1") {
    // The all-zero product has no unities and its transfers collapse.
    Workdir w;
    spit(w / "zp.gsr", kHeader + "gamma = 0\n0 0\n0 0\ngamma = 1\n0 0\n0 0\n");
    REQUIRE(gsl("validate " + (w / "zp.gsr")).code == 0);
    auto const r = gsl("verify " + (w / "zp.gsr") + " --suite prop3.4");
    CHECK(r.code == 1);
    CHECK(r.out.find("clause (i): fail") != std::string::npos);
    CHECK(r.out.find("clause (ii): precondition-unmet") != std::string::npos);
  }

  TEST_CASE("json reports parse and are deterministic") {
    Workdir w;
    REQUIRE(gsl("gen zn 2 -o " + (w / "z2.gsr")).code == 0);
    auto const a = gsl("verify " + (w / "z2.gsr") + " --suite all --report json");
    auto const b = gsl("verify " + (w / "z2.gsr") + " --suite all --report json");
    REQUIRE(a.code == 0);
    auto const ja = nlohmann::json::parse(a.out);
    auto const jb = nlohmann::json::parse(b.out);
    CHECK(ja["reports"] == jb["reports"]);
    CHECK(ja["config"] == jb["config"]);
    REQUIRE(ja["reports"].is_array());
    for (auto const& rep : ja["reports"]) {
      CHECK(rep.size() == 7);
      for (auto key : {"suite", "instance", "chain", "status", "counterexample", "counts", "notes"})
        CHECK(rep.contains(key));
    }
    CHECK(ja["timing"].size() == ja["reports"].size());

    auto const t1 = gsl("verify " + (w / "z2.gsr") + " --suite all");
    auto const t2 = gsl("verify " + (w / "z2.gsr") + " --suite all");
    CHECK(above_timing(t1.out) == above_timing(t2.out));
  }

  TEST_CASE("the cap can come from the environment") {
    Workdir w;
    REQUIRE(gsl("gen zn 4 -o " + (w / "z4.gsr")).code == 0);
    CHECK(gsl("ideals " + (w / "z4.gsr") + " --fuzzy").code == 0);
    CHECK(gsl("ideals " + (w / "z4.gsr") + " --fuzzy", "GSL_CAP=10").code == 2);
    CHECK(gsl("ideals " + (w / "z4.gsr") + " --fuzzy --cap 10").code == 2);
  }

  TEST_CASE("ideal and operator listings") {
    Workdir w;
    REQUIRE(gsl("gen zn 4 -o " + (w / "z4.gsr")).code == 0);
    auto const fz = gsl("ideals " + (w / "z4.gsr") + " --fuzzy");
    CHECK(fz.out.find("6 fuzzy two ideals") != std::string::npos);
    auto const op = gsl("operators " + (w / "z4.gsr") + " --side left");
    CHECK(op.code == 0);
    CHECK(op.out.find("size: 4") != std::string::npos);
    CHECK(op.out.find("unity: f1") != std::string::npos);
    auto const oj = nlohmann::json::parse(gsl("operators " + (w / "z4.gsr") + " --side right --json").out);
    CHECK(oj.is_object());
  }

  TEST_CASE("transfer round trip through files") {
    Workdir w;
    REQUIRE(gsl("gen zn 4 -o " + (w / "z4.gsr")).code == 0);
    spit(w / "mu.fz", "0 : 1\n2 : 1/2\n");
    REQUIRE(gsl("transfer " + (w / "z4.gsr") + " --subset " + (w / "mu.fz") + " --map plusprime -o "
                + (w / "up.fz"))
                .code
            == 0);
    CHECK(slurp(w / "up.fz") == "f0 : 1/1\nf1 : 0/1\nf2 : 1/2\nf3 : 0/1\n");
    auto const back = gsl("transfer " + (w / "z4.gsr") + " --subset " + (w / "up.fz") + " --map plus");
    CHECK(back.code == 0);
    CHECK(back.out == "0 : 1/1\n1 : 0/1\n2 : 1/2\n3 : 0/1\n");
    spit(w / "junk.fz", "7 : 1\n");
    CHECK(gsl("transfer " + (w / "z4.gsr") + " --subset " + (w / "junk.fz") + " --map plusprime").code == 2);
  }

  TEST_CASE("matrix emission produces a loadable instance") {
    Workdir w;
    REQUIRE(gsl("gen boolean -o " + (w / "gb.gsr")).code == 0);
    auto const m = gsl("matrix " + (w / "gb.gsr") + " --n 2 --emit " + (w / "m2.gsr"));
    CHECK(m.code == 0);
    CHECK(m.out.find("|S_n| = 16") != std::string::npos);
    auto const v = gsl("validate " + (w / "m2.gsr"));
    CHECK(v.code == 0);
    CHECK(v.out.find("M2(GB): ok") != std::string::npos);
  }
}
