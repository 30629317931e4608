// gsl: generate, inspect and verify finite Gamma-semirings.
//
// Exit codes: 0 success, 1 a verification failed (or `validate` found an
// axiom violation), 2 usage, parse or resource errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammasr/core.hpp"
#include "gammasr/fuzzy.hpp"
#include "gammasr/io.hpp"
#include "gammasr/matrix.hpp"
#include "gammasr/operators.hpp"
#include "gammasr/report.hpp"
#include "gammasr/transfer.hpp"
#include "gammasr/verify.hpp"

namespace {

  using namespace gammasr;
  using json = nlohmann::ordered_json;

  constexpr int kOk      = 0;
  constexpr int kFailed  = 1;
  constexpr int kUsage   = 2;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  GammaSemiring require_gamma(Instance const& instance, std::string const& what) {
    if (auto const* g = std::get_if<GammaSemiring>(&instance)) {
      return *g;
    }
    throw UsageError(what + " needs a Gamma-semiring file");
  }

  // Writes to `path`, or to stdout when it is empty.
  void emit(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw GsrError(GsrErrorCode::io, 0, "cannot write '" + path + "'");
    }
    out << text;
  }

  template <typename T>
  std::string gsr_text(T const& x) {
    std::ostringstream out;
    write_gsr(out, x);
    return out.str();
  }

  json ids_json(CrispSubset const& s, std::vector<std::string> const& ids) {
    json out = json::array();
    for (auto m : s.members()) {
      out.push_back(ids[m]);
    }
    return out;
  }

  std::uint64_t default_cap() {
    if (char const* env = std::getenv("GSL_CAP")) {
      try {
        std::size_t   used = 0;
        std::uint64_t cap  = std::stoull(env, &used);
        if (used == std::string(env).size() && cap > 0) {
          return cap;
        }
      } catch (std::exception const&) {
      }
      throw UsageError(std::string("GSL_CAP must be a positive integer, got '") + env + "'");
    }
    return EnumerationLimits{}.cap;
  }

  struct Options {
    std::string   file;
    std::string   output;
    std::string   kind_text = "two";
    std::string   side_text = "left";
    std::string   chain_text;
    std::string   suite = "all";
    std::string   report = "text";
    std::string   subset;
    std::string   map;
    std::string   gen_kind;
    std::size_t   zn = 0;
    std::size_t   n  = 2;
    std::uint64_t cap = 0;
    unsigned      workers = 1;
    bool          fuzzy = false;
    bool          dump = false;
    bool          json = false;
    bool          no_enforce = false;
    bool          kind_given = false;
  };

  int run_gen(Options const& o) {
    GammaSemiring g = boolean_gamma_semiring();
    if (o.gen_kind == "zn") {
      if (o.zn < 2) {
        throw UsageError("gen zn needs N >= 2");
      }
      g = zn_gamma_semiring(o.zn);
    } else if (o.gen_kind == "from-semiring") {
      if (o.file.empty()) {
        throw UsageError("gen from-semiring needs a semiring file");
      }
      auto const instance = load_gsr(o.file);
      auto const* r       = std::get_if<Semiring>(&instance);
      if (r == nullptr) {
        throw UsageError("gen from-semiring needs a [semiring] file");
      }
      g = gamma_semiring_from(*r);
    }
    emit(o.output, gsr_text(g));
    return kOk;
  }

  int run_validate(Options const& o) {
    std::ifstream in(o.file);
    if (!in) {
      throw GsrError(GsrErrorCode::io, 0, "cannot open '" + o.file + "'");
    }
    auto const instance = parse_gsr(in);
    json       out;
    std::string text;
    bool       ok = true;
    std::visit(
        [&](auto const& x) {
          ValidationOutcome outcome;
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GammaSemiring>) {
            outcome = validate_gamma_semiring(x);
          } else {
            outcome = validate_semiring(x);
          }
          ok                = outcome.ok();
          out["instance"]   = x.name();
          out["ok"]         = ok;
          out["violations"] = json::array();
          text              = x.name() + ": " + (ok ? "ok" : "axiom violations") + "\n";
          for (auto const& v : outcome.violations) {
            json w = json::array();
            for (auto i : v.witness) {
              w.push_back(i);
            }
            out["violations"].push_back(
                {{"axiom", v.axiom}, {"witness", w}, {"message", describe(v, x)}});
            text += "  " + describe(v, x) + "\n";
          }
        },
        instance);
    std::cout << (o.json ? out.dump(2) + "\n" : text);
    return ok ? kOk : kFailed;
  }

  int run_operators(Options const& o, ClosureLimits const& closure) {
    auto const g    = require_gamma(load_gsr(o.file), "operators");
    auto const side = parse_side(o.side_text);
    auto const op   = build_operator_semiring(g, side, closure);
    auto const unit = find_unity(g, op);
    if (o.json) {
      json out;
      out["instance"] = g.name();
      out["side"]     = to_string(side);
      out["size"]     = op.size();
      out["unity"]    = unit ? json{{"id", op.semiring().ids()[*unit]},
                                    {"provenance", op.describe(*unit, g)}}
                             : json(nullptr);
      out["elements"] = json::array();
      for (Index i = 0; i < op.size(); ++i) {
        json action = json::array();
        for (auto v : op.element(i)) {
          action.push_back(g.s_ids()[v]);
        }
        out["elements"].push_back({{"id", op.semiring().ids()[i]},
                                   {"action", action},
                                   {"provenance", op.describe(i, g)}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "instance: " << g.name() << "\nside: " << to_string(side)
                << "\nsize: " << op.size() << "\nunity: "
                << (unit ? op.semiring().ids()[*unit] + " = " + op.describe(*unit, g)
                         : std::string("none"))
                << "\n";
      for (Index i = 0; i < op.size(); ++i) {
        std::cout << "  " << op.semiring().ids()[i] << " : (";
        for (std::size_t a = 0; a < op.element(i).size(); ++a) {
          std::cout << (a ? " " : "") << g.s_ids()[op.element(i)[a]];
        }
        std::cout << ")  = " << op.describe(i, g) << "\n";
      }
    }
    if (o.dump) {
      std::cout << gsr_text(op.semiring());
    }
    return kOk;
  }

  int run_ideals(Options const& o, VerifyConfig const& cfg) {
    auto const instance = load_gsr(o.file);
    auto const kind     = parse_ideal_kind(o.kind_text);
    json       out;
    std::visit(
        [&](auto const& x) {
          std::vector<std::string> ids;
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GammaSemiring>) {
            ids = x.s_ids();
          } else {
            ids = x.ids();
          }
          out["instance"] = x.name();
          out["kind"]     = to_string(kind);
          if (o.fuzzy) {
            out["chain"] = grades_json(cfg.chain);
            auto const fi = enumerate_fuzzy_ideals(x, cfg.chain, kind, cfg.enumeration);
            out["count"]  = fi.size();
            out["ideals"] = json::array();
            for (auto const& mu : fi) {
              out["ideals"].push_back(grades_json(mu));
            }
            if (!o.json) {
              std::cout << x.name() << ": " << fi.size() << " fuzzy " << to_string(kind)
                        << " ideals over {" << cfg.chain.to_string() << "}\n";
              for (auto const& mu : fi) {
                std::cout << "  " << mu.to_string() << "\n";
              }
            }
          } else {
            auto const ideals = enumerate_crisp_ideals(x, kind, cfg.enumeration.cap);
            out["count"]      = ideals.size();
            out["ideals"]     = json::array();
            for (auto const& I : ideals) {
              out["ideals"].push_back(ids_json(I, ids));
            }
            if (!o.json) {
              std::cout << x.name() << ": " << ideals.size() << " " << to_string(kind)
                        << " ideals\n";
              for (auto const& I : ideals) {
                std::cout << "  " << I.to_string(ids) << "\n";
              }
            }
          }
        },
        instance);
    if (o.json) {
      std::cout << out.dump(2) << "\n";
    }
    return kOk;
  }

  int run_transfer(Options const& o, ClosureLimits const& closure) {
    auto const g     = require_gamma(load_gsr(o.file), "transfer");
    bool const left  = o.map == "plus" || o.map == "plusprime";
    bool const lift  = o.map == "plusprime" || o.map == "starprime";
    auto const op    = build_operator_semiring(g, left ? Side::left : Side::right, closure);
    auto const& from = lift ? g.s_ids() : op.semiring().ids();
    auto const& to   = lift ? op.semiring().ids() : g.s_ids();
    auto const  mu   = load_fz(o.subset, from);
    auto const  image = lift ? lift_to_operators(op, mu) : restrict_to_base(g, op, mu);
    std::ostringstream text;
    write_fz(text, image, to);
    emit(o.output, text.str());
    return kOk;
  }

  int run_matrix(Options const& o, VerifyConfig const& cfg) {
    auto const g      = require_gamma(load_gsr(o.file), "matrix");
    auto       config = cfg;
    config.n          = o.n;
    auto const m      = build_matrix_gamma(g, o.n, cfg.matrix_cap);
    auto const rep    = verify_matrix_instance(g, config);
    if (o.json) {
      std::cout << to_json(rep).dump(2) << "\n";
    } else {
      std::cout << m.ring.name() << ": |S_n| = " << m.ring.s_size()
                << ", |Gamma_n| = " << m.ring.g_size() << ", validation: "
                << to_string(rep.status) << "\n";
      for (auto const& note : rep.notes) {
        std::cout << "  - " << note << "\n";
      }
    }
    if (!o.output.empty()) {
      emit(o.output, gsr_text(m.ring));
    }
    return rep.status == Status::fail ? kFailed : kOk;
  }

  int run_verify(Options const& o, VerifyConfig const& cfg) {
    auto const instance = load_gsr(o.file);
    auto       config   = cfg;
    config.n            = o.n;
    std::optional<IdealKind> kind;
    if (o.kind_given) {
      kind = parse_ideal_kind(o.kind_text);
    }
    std::vector<VerificationReport> reports;
    try {
      if (auto const* g = std::get_if<GammaSemiring>(&instance)) {
        reports = run_suite(*g, o.suite, config, kind);
      } else {
        reports = run_suite(std::get<Semiring>(instance), o.suite, config);
      }
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }
    std::cout << (o.report == "json" ? render_json(reports, config.to_json())
                                     : render_text(reports, config.to_json()));
    for (auto const& r : reports) {
      if (r.status == Status::fail) {
        return kFailed;
      }
    }
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Gamma-semirings, operator semirings and fuzzy ideals"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("kind", o.gen_kind, "boolean | zn | from-semiring")
      ->required()
      ->check(CLI::IsMember({"boolean", "zn", "from-semiring"}));
  gen->add_option("arg", o.file, "N for zn, semiring file for from-semiring");
  gen->add_option("-o,--output", o.output, "Output path (stdout when omitted)");

  auto* validate = app.add_subcommand("validate", "Check the axioms of an instance file");
  validate->add_option("file", o.file)->required();
  validate->add_flag("--json", o.json, "JSON output");

  auto* operators = app.add_subcommand("operators", "Build the left or right operator semiring");
  operators->add_option("file", o.file)->required();
  operators->add_option("--side", o.side_text)->check(CLI::IsMember({"left", "right"}));
  operators->add_flag("--dump", o.dump, "Print the tables in semiring file format");
  operators->add_flag("--json", o.json, "JSON output");

  auto* ideals = app.add_subcommand("ideals", "Enumerate crisp or fuzzy ideals");
  ideals->add_option("file", o.file)->required();
  ideals->add_flag("--fuzzy", o.fuzzy, "Enumerate fuzzy ideals over the chain");
  ideals->add_option("--chain", o.chain_text, "Grade chain, e.g. 0,1/2,1");
  ideals->add_option("--kind", o.kind_text)->check(CLI::IsMember({"left", "right", "two"}));
  ideals->add_flag("--json", o.json, "JSON output");

  auto* transfer = app.add_subcommand("transfer", "Apply a transfer map to a fuzzy subset");
  transfer->add_option("file", o.file)->required();
  transfer->add_option("--subset", o.subset, ".fz file")->required();
  transfer->add_option("--map", o.map)
      ->required()
      ->check(CLI::IsMember({"plus", "plusprime", "star", "starprime"}));
  transfer->add_option("-o,--output", o.output, "Output path (stdout when omitted)");

  auto* matrix = app.add_subcommand("matrix", "Build the matrix Gamma_n-semiring");
  matrix->add_option("file", o.file)->required();
  matrix->add_option("--n", o.n)->check(CLI::PositiveNumber);
  matrix->add_option("--emit", o.output, "Write the matrix instance to this path");
  matrix->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("file", o.file)->required();
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--chain", o.chain_text, "Grade chain, e.g. 0,1/2,1");
  verify->add_option("--kind", o.kind_text)->check(CLI::IsMember({"left", "right", "two"}));
  verify->add_option("--n", o.n)->check(CLI::PositiveNumber);
  verify->add_option("--report", o.report)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--no-enforce", o.no_enforce, "Run gated checks anyway");

  for (auto* sub : {ideals, verify, matrix}) {
    sub->add_option("--cap", o.cap, "Enumeration cap (default GSL_CAP or 1e8)");
    sub->add_option("--workers", o.workers, "Enumeration workers")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  o.kind_given = verify->count("--kind") > 0;

  try {
    VerifyConfig cfg;
    if (!o.chain_text.empty()) {
      cfg.chain = GradeChain::parse(o.chain_text);
    }
    cfg.enumeration.cap     = o.cap ? o.cap : default_cap();
    cfg.enumeration.workers = o.workers;
    cfg.enforce_preconditions = !o.no_enforce;

    if (*gen) {
      if (o.gen_kind == "zn") {
        try {
          o.zn = std::stoul(o.file);
        } catch (std::exception const&) {
          throw UsageError("gen zn needs a numeric N");
        }
        o.file.clear();
      }
      return run_gen(o);
    }
    if (*validate) {
      return run_validate(o);
    }
    if (*operators) {
      return run_operators(o, cfg.closure);
    }
    if (*ideals) {
      return run_ideals(o, cfg);
    }
    if (*transfer) {
      return run_transfer(o, cfg.closure);
    }
    if (*matrix) {
      return run_matrix(o, cfg);
    }
    return run_verify(o, cfg);
  } catch (GsrError const& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
  } catch (ResourceError const& e) {
    std::cerr << "error[cap]: " << e.what() << "\n";
  } catch (UsageError const& e) {
    std::cerr << "usage: " << e.what() << "\n";
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (StructuralError const& e) {
    std::cerr << "error[structure]: " << e.what() << "\n";
  }
  return kUsage;
}
