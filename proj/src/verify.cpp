#include "gammasr/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gammasr/matrix.hpp"
#include "gammasr/transfer.hpp"

namespace gammasr {

  using json = nlohmann::ordered_json;

  json VerifyConfig::to_json() const {
    json out;
    out["chain"]                 = grades_json(chain);
    out["n"]                     = n;
    out["enumeration_cap"]       = enumeration.cap;
    out["closure_cap"]           = closure.max_elements;
    out["matrix_cap"]            = matrix_cap;
    out["validation_budget"]     = validation_budget;
    out["enforce_preconditions"] = enforce_preconditions;
    return out;
  }

  namespace {

    class Stopwatch {
     public:
      explicit Stopwatch(VerificationReport& report)
          : report_(report), start_(std::chrono::steady_clock::now()) {}
      ~Stopwatch() {
        report_.elapsed = std::chrono::steady_clock::now() - start_;
      }
      Stopwatch(Stopwatch const&)            = delete;
      Stopwatch& operator=(Stopwatch const&) = delete;

     private:
      VerificationReport&                   report_;
      std::chrono::steady_clock::time_point start_;
    };

    VerificationReport make_report(std::string suite,
                                   std::string instance,
                                   std::optional<GradeChain> chain = std::nullopt) {
      VerificationReport r;
      r.suite    = std::move(suite);
      r.instance = std::move(instance);
      r.chain    = std::move(chain);
      return r;
    }

    json ids_json(CrispSubset const& subset, std::vector<std::string> const& ids) {
      json out = json::array();
      for (auto m : subset.members()) {
        out.push_back(ids.at(m));
      }
      return out;
    }

    json ids_json(std::vector<Index> const& members, std::vector<std::string> const& ids) {
      json out = json::array();
      for (auto m : members) {
        out.push_back(ids.at(m));
      }
      return out;
    }

    // Per-clause bookkeeping for suites made of several named checks.
    class ClauseLog {
     public:
      void checked(std::string const& clause, std::uint64_t k = 1) {
        entry(clause).checked += k;
      }
      void failed(std::string const& clause) {
        entry(clause).failed = true;
      }
      void gated(std::string const& clause, std::string why) {
        entry(clause).gated = std::move(why);
      }
      [[nodiscard]] bool is_gated(std::string const& clause) {
        return !entry(clause).gated.empty();
      }

      void finish(VerificationReport& report, bool enforce) const {
        std::uint64_t total = 0;
        for (auto const& c : clauses_) {
          total += c.checked;
          std::string line = "clause " + c.name + ": ";
          if (c.failed) {
            line += "fail";
          } else if (!c.gated.empty() && enforce) {
            line += "precondition-unmet (" + c.gated + ")";
          } else {
            line += "pass (" + std::to_string(c.checked) + " checks)";
            if (!c.gated.empty()) {
              line += " [ran without: " + c.gated + "]";
            }
          }
          report.note(line);
        }
        report.add_count("checks", total);
        if (enforce) {
          for (auto const& c : clauses_) {
            if (!c.gated.empty()) {
              report.unmet("clause " + c.name + " gated: " + c.gated);
            }
          }
        }
      }

     private:
      struct Clause {
        std::string   name;
        std::uint64_t checked = 0;
        bool          failed  = false;
        std::string   gated;
      };
      Clause& entry(std::string const& name) {
        for (auto& c : clauses_) {
          if (c.name == name) {
            return c;
          }
        }
        clauses_.push_back({name, 0, false, {}});
        return clauses_.back();
      }
      std::vector<Clause> clauses_;
    };

    bool contains_sorted(std::vector<FuzzySubset> const& sorted, FuzzySubset const& mu) {
      return std::binary_search(sorted.begin(), sorted.end(), mu);
    }

    // (+)/intersection closure plus top and bottom elements of an enumerated
    // family of fuzzy ideals.
    template <typename Structure>
    void check_lattice_closure(VerificationReport&             rep,
                               ClauseLog&                      log,
                               Structure const&                s,
                               std::vector<FuzzySubset> const& family,
                               std::string const&              where) {
      std::string const clause = "lattice(" + where + ")";
      if (family.empty()) {
        log.failed(clause);
        rep.fail({{"clause", clause}, {"reason", "no fuzzy ideals enumerated"}});
        return;
      }
      std::size_t const n      = family.front().size();
      auto const        top    = FuzzySubset::constant(n, Grade::one());
      auto              bottom = FuzzySubset(n);
      bottom[0]                = Grade::one();
      for (auto const& [name, mu] : {std::pair{"top", top}, std::pair{"bottom", bottom}}) {
        log.checked(clause);
        if (!contains_sorted(family, mu)) {
          log.failed(clause);
          rep.fail({{"clause", clause}, {"missing", name}, {"mu", grades_json(mu)}});
        }
      }
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
          log.checked(clause, 2);
          auto const sum  = fuzzy_sum(s, family[i], family[j]);
          auto const meet = fuzzy_intersection(family[i], family[j]);
          if (!contains_sorted(family, sum) || !contains_sorted(family, meet)) {
            log.failed(clause);
            rep.fail({{"clause", clause},
                      {"mu1", grades_json(family[i])},
                      {"mu2", grades_json(family[j])},
                      {"sum", grades_json(sum)},
                      {"intersection", grades_json(meet)}});
          }
        }
      }
    }

    struct Operators {
      OperatorSemiring     left;
      OperatorSemiring     right;
      std::optional<Index> left_unity;
      std::optional<Index> right_unity;
    };

    Operators build_both(GammaSemiring const& g, VerifyConfig const& cfg) {
      auto left  = build_operator_semiring(g, Side::left, cfg.closure);
      auto right = build_operator_semiring(g, Side::right, cfg.closure);
      auto lu    = find_unity(g, left);
      auto ru    = find_unity(g, right);
      return {std::move(left), std::move(right), lu, ru};
    }

    void note_unities(VerificationReport& rep, GammaSemiring const& g, Operators const& ops) {
      rep.note(ops.left_unity ? "left unity " + ops.left.describe(*ops.left_unity, g)
                              : std::string("no left unity"));
      rep.note(ops.right_unity ? "right unity " + ops.right.describe(*ops.right_unity, g)
                               : std::string("no right unity"));
    }

    // Transfer-map clauses for one operator side. On the left side the
    // round trip through S needs the right unity and the round trip
    // through L needs the left unity; the right side swaps them.
    void transfer_clauses(VerificationReport&             rep,
                          ClauseLog&                      log,
                          GammaSemiring const&            g,
                          OperatorSemiring const&         op,
                          bool                            has_s_roundtrip_unity,
                          bool                            has_op_roundtrip_unity,
                          std::vector<FuzzySubset> const& fi_s,
                          VerifyConfig const&             cfg) {
      bool const        left   = op.side() == Side::left;
      std::string const suffix = left ? "" : "*";
      std::string const side   = to_string(op.side());
      Semiring const&   ring   = op.semiring();
      auto const        fi_op  = enumerate_fuzzy_ideals(ring, cfg.chain, IdealKind::two_sided,
                                                        cfg.enumeration);
      rep.add_count(left ? "fi_L" : "fi_R", fi_op.size());

      auto cx = [&](std::string const& clause) {
        json j;
        j["clause"] = clause;
        j["side"]   = side;
        return j;
      };
      auto fail = [&](std::string const& clause, json witness) {
        log.failed(clause);
        rep.fail(std::move(witness));
      };

      std::vector<FuzzySubset> lifts;
      for (auto const& sigma : fi_s) {
        lifts.push_back(lift_to_operators(op, sigma));
      }

      // (i) lifts of fuzzy ideals are fuzzy ideals, non-constancy survives.
      std::string clause = "(i)" + suffix;
      for (std::size_t i = 0; i < fi_s.size(); ++i) {
        log.checked(clause);
        bool ok = is_fuzzy_ideal(ring, lifts[i], IdealKind::two_sided)
                  && lifts[i][0] == Grade::one()
                  && (fi_s[i].is_constant() || !lifts[i].is_constant());
        if (!ok) {
          auto w     = cx(clause);
          w["sigma"] = grades_json(fi_s[i]);
          w["lift"]  = grades_json(lifts[i]);
          fail(clause, w);
        }
      }

      // (ii) restricting the lift gives sigma back.
      clause = "(ii)" + suffix;
      if (!has_s_roundtrip_unity) {
        log.gated(clause, left ? "no right unity" : "no left unity");
      }
      if (has_s_roundtrip_unity || !cfg.enforce_preconditions) {
        for (std::size_t i = 0; i < fi_s.size(); ++i) {
          log.checked(clause);
          auto const back = restrict_to_base(g, op, lifts[i]);
          if (back != fi_s[i]) {
            auto w         = cx(clause);
            w["sigma"]     = grades_json(fi_s[i]);
            w["roundtrip"] = grades_json(back);
            fail(clause, w);
          }
        }
      }

      // (iii) injectivity.
      clause = "(iii)" + suffix;
      for (std::size_t i = 0; i < fi_s.size(); ++i) {
        for (std::size_t j = i + 1; j < fi_s.size(); ++j) {
          log.checked(clause);
          if (lifts[i] == lifts[j]) {
            auto w      = cx(clause);
            w["sigma1"] = grades_json(fi_s[i]);
            w["sigma2"] = grades_json(fi_s[j]);
            w["lift"]   = grades_json(lifts[i]);
            fail(clause, w);
          }
        }
      }

      // (iv) (+), (v) intersection, (vi) monotonicity.
      for (std::size_t i = 0; i < fi_s.size(); ++i) {
        for (std::size_t j = 0; j < fi_s.size(); ++j) {
          auto const& s1 = fi_s[i];
          auto const& s2 = fi_s[j];

          clause = "(iv)" + suffix;
          log.checked(clause);
          auto const lhs_sum = lift_to_operators(op, fuzzy_sum(g, s1, s2));
          auto const rhs_sum = fuzzy_sum(ring, lifts[i], lifts[j]);
          if (lhs_sum != rhs_sum) {
            auto w      = cx(clause);
            w["sigma1"] = grades_json(s1);
            w["sigma2"] = grades_json(s2);
            w["lhs"]    = grades_json(lhs_sum);
            w["rhs"]    = grades_json(rhs_sum);
            fail(clause, w);
          }

          clause = "(v)" + suffix;
          log.checked(clause);
          auto const lhs_meet = lift_to_operators(op, fuzzy_intersection(s1, s2));
          auto const rhs_meet = fuzzy_intersection(lifts[i], lifts[j]);
          if (lhs_meet != rhs_meet) {
            auto w      = cx(clause);
            w["sigma1"] = grades_json(s1);
            w["sigma2"] = grades_json(s2);
            w["lhs"]    = grades_json(lhs_meet);
            w["rhs"]    = grades_json(rhs_meet);
            fail(clause, w);
          }

          clause = "(vi)" + suffix;
          log.checked(clause);
          if (included_in(s1, s2) && !included_in(lifts[i], lifts[j])) {
            auto w      = cx(clause);
            w["sigma1"] = grades_json(s1);
            w["sigma2"] = grades_json(s2);
            fail(clause, w);
          }
        }
      }

      std::vector<FuzzySubset> restricts;
      for (auto const& mu : fi_op) {
        restricts.push_back(restrict_to_base(g, op, mu));
      }

      // (vii) restrictions of fuzzy ideals are fuzzy ideals.
      clause = "(vii)" + suffix;
      for (std::size_t i = 0; i < fi_op.size(); ++i) {
        log.checked(clause);
        bool ok = is_fuzzy_ideal(g, restricts[i], IdealKind::two_sided)
                  && restricts[i][0] == Grade::one()
                  && (fi_op[i].is_constant() || !restricts[i].is_constant());
        if (!ok) {
          auto w           = cx(clause);
          w["mu"]          = grades_json(fi_op[i]);
          w["restriction"] = grades_json(restricts[i]);
          fail(clause, w);
        }
      }

      // (viii) lifting the restriction gives mu back.
      clause = "(viii)" + suffix;
      if (!has_op_roundtrip_unity) {
        log.gated(clause, left ? "no left unity" : "no right unity");
      }
      if (has_op_roundtrip_unity || !cfg.enforce_preconditions) {
        for (std::size_t i = 0; i < fi_op.size(); ++i) {
          log.checked(clause);
          auto const back = lift_to_operators(op, restricts[i]);
          if (back != fi_op[i]) {
            auto w         = cx(clause);
            w["mu"]        = grades_json(fi_op[i]);
            w["roundtrip"] = grades_json(back);
            fail(clause, w);
          }
        }
      }

      // (ix) monotonicity of restriction.
      clause = "(ix)" + suffix;
      for (std::size_t i = 0; i < fi_op.size(); ++i) {
        for (std::size_t j = 0; j < fi_op.size(); ++j) {
          log.checked(clause);
          if (included_in(fi_op[i], fi_op[j]) && !included_in(restricts[i], restricts[j])) {
            auto w   = cx(clause);
            w["mu1"] = grades_json(fi_op[i]);
            w["mu2"] = grades_json(fi_op[j]);
            fail(clause, w);
          }
        }
      }

      // Intersection commutes with restriction, for arbitrary fuzzy subsets:
      // every pair from the probe family and the whole family at once. The
      // probe family is every chain-valued subset of the operator semiring
      // when that is small, else the enumerated ideals.
      clause = "meet-restrict" + suffix;
      std::vector<FuzzySubset> probes = fi_op;
      if (candidate_count(cfg.chain.size(), op.size() + 1) <= 729) {
        probes.clear();
        std::vector<std::size_t> level(op.size(), 0);
        while (true) {
          FuzzySubset mu(op.size());
          for (std::size_t k = 0; k < op.size(); ++k) {
            mu[k] = cfg.chain[level[k]];
          }
          probes.push_back(std::move(mu));
          std::size_t k = 0;
          while (k < op.size() && ++level[k] == cfg.chain.size()) {
            level[k++] = 0;
          }
          if (k == op.size()) {
            break;
          }
        }
      }
      for (std::size_t i = 0; i < probes.size(); ++i) {
        for (std::size_t j = i; j < probes.size(); ++j) {
          log.checked(clause);
          auto const lhs = fuzzy_intersection(restrict_to_base(g, op, probes[i]),
                                              restrict_to_base(g, op, probes[j]));
          auto const rhs = restrict_to_base(g, op, fuzzy_intersection(probes[i], probes[j]));
          if (lhs != rhs) {
            auto w   = cx(clause);
            w["mu1"] = grades_json(probes[i]);
            w["mu2"] = grades_json(probes[j]);
            w["lhs"] = grades_json(lhs);
            w["rhs"] = grades_json(rhs);
            fail(clause, w);
          }
        }
      }
      if (!probes.empty()) {
        log.checked(clause);
        std::vector<FuzzySubset> restricted;
        for (auto const& mu : probes) {
          restricted.push_back(restrict_to_base(g, op, mu));
        }
        if (fuzzy_intersection(restricted)
            != restrict_to_base(g, op, fuzzy_intersection(probes))) {
          auto w      = cx(clause);
          w["family"] = "all probes";
          fail(clause, w);
        }
      }
    }

    // Non-constant mu is constant on the nonzero elements with a value below
    // mu(0).
    bool semifield_condition(FuzzySubset const& mu) {
      if (mu.is_constant()) {
        return true;
      }
      for (std::size_t x = 1; x < mu.size(); ++x) {
        if (mu[x] != mu[1] || !(mu[x] < mu[0])) {
          return false;
        }
      }
      return true;
    }

    std::optional<FuzzySubset> first_condition_violation(std::vector<FuzzySubset> const& fi) {
      for (auto const& mu : fi) {
        if (!semifield_condition(mu)) {
          return mu;
        }
      }
      return std::nullopt;
    }

    // Shared body of the two fuzzy semifield characterizations: the
    // structural verdict `is_field`, an optional nonzero proper ideal
    // witnessing its failure, and the enumerated fuzzy ideals.
    void check_characterization(VerificationReport&               rep,
                                bool                              gated,
                                Check const&                      is_field,
                                std::optional<CrispSubset> const& bad_ideal,
                                std::vector<std::string> const&   ids,
                                std::vector<FuzzySubset> const&   fi,
                                std::string const&                what) {
      auto const violation = first_condition_violation(fi);
      std::uint64_t nonconstant = 0;
      for (auto const& mu : fi) {
        nonconstant += mu.is_constant() ? 0 : 1;
      }
      rep.add_count("fuzzy_ideals", fi.size());
      rep.add_count("nonconstant", nonconstant);

      rep.note(what + ": " + (is_field.holds() ? "yes" : "no"));
      if (bad_ideal) {
        auto const lambda   = characteristic(*bad_ideal);
        bool const listed   = contains_sorted(fi, lambda);
        bool const violates = !semifield_condition(lambda);
        rep.note("nonzero proper ideal " + bad_ideal->to_string(ids) + "; its characteristic function "
                 + lambda.to_string() + (listed ? " is" : " is not")
                 + " an enumerated fuzzy ideal and " + (violates ? "violates" : "satisfies")
                 + " the fuzzy condition");
      }
      rep.note(violation ? "fuzzy condition violated by " + violation->to_string()
                         : std::string("fuzzy condition holds for every non-constant fuzzy ideal"));
      if (gated) {
        return;
      }
      if (is_field.holds() && violation) {
        rep.fail({{"implication", what + " => fuzzy condition"},
                  {"mu", grades_json(*violation)}});
      }
      if (!is_field.holds() && !violation) {
        json w{{"implication", "fuzzy condition => " + what}};
        if (bad_ideal) {
          w["ideal"] = ids_json(*bad_ideal, ids);
        }
        rep.fail(w);
      }
      if (bad_ideal) {
        auto const lambda = characteristic(*bad_ideal);
        if (contains_sorted(fi, lambda) && semifield_condition(lambda)) {
          rep.fail({{"implication", "fuzzy condition => " + what},
                    {"ideal", ids_json(*bad_ideal, ids)},
                    {"mu", grades_json(lambda)}});
        }
      }
    }

    std::optional<CrispSubset> nonzero_proper_ideal(std::vector<CrispSubset> const& ideals) {
      for (auto const& I : ideals) {
        if (I.count() > 1 && I.count() < I.carrier_size()) {
          return I;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  VerificationReport verify_transfer_properties(GammaSemiring const& g, VerifyConfig const& cfg) {
    auto      rep = make_report("prop3.4", g.name(), cfg.chain);
    Stopwatch sw(rep);
    auto const ops  = build_both(g, cfg);
    auto const fi_s = enumerate_fuzzy_ideals(g, cfg.chain, IdealKind::two_sided, cfg.enumeration);
    rep.add_count("fi_S", fi_s.size());
    note_unities(rep, g, ops);
    ClauseLog log;
    transfer_clauses(rep, log, g, ops.left, ops.right_unity.has_value(),
                     ops.left_unity.has_value(), fi_s, cfg);
    transfer_clauses(rep, log, g, ops.right, ops.left_unity.has_value(),
                     ops.right_unity.has_value(), fi_s, cfg);
    log.finish(rep, cfg.enforce_preconditions);
    return rep;
  }

  VerificationReport verify_fuzzy_lattice_iso(GammaSemiring const& g,
                                              VerifyConfig const&  cfg,
                                              IdealKind            kind) {
    auto      rep = make_report(std::string("th3.8/") + to_string(kind), g.name(), cfg.chain);
    Stopwatch sw(rep);
    if (kind == IdealKind::left) {
      rep.unmet("fuzzy left ideals: the transfer to the operator semiring is not part of the "
                "claimed isomorphism; left unverified");
      return rep;
    }
    auto const ops = build_both(g, cfg);
    note_unities(rep, g, ops);
    bool const unities = ops.left_unity && ops.right_unity;
    if (!unities) {
      rep.unmet("requires both unities");
      if (cfg.enforce_preconditions) {
        return rep;
      }
    }

    ClauseLog  log;
    auto const fi_s = enumerate_fuzzy_ideals(g, cfg.chain, kind, cfg.enumeration);
    rep.add_count("fi_S", fi_s.size());
    check_lattice_closure(rep, log, g, fi_s, "S");

    for (auto const* op : {&ops.left, &ops.right}) {
      std::string const tag  = op->side() == Side::left ? "L" : "R";
      Semiring const&   ring = op->semiring();
      auto const fi_op = enumerate_fuzzy_ideals(ring, cfg.chain, kind, cfg.enumeration);
      rep.add_count("fi_" + tag, fi_op.size());
      check_lattice_closure(rep, log, ring, fi_op, tag);

      std::vector<FuzzySubset> images;
      for (auto const& sigma : fi_s) {
        images.push_back(lift_to_operators(*op, sigma));
      }
      std::string clause = "into(" + tag + ")";
      for (std::size_t i = 0; i < fi_s.size(); ++i) {
        log.checked(clause);
        if (!contains_sorted(fi_op, images[i])) {
          log.failed(clause);
          rep.fail({{"clause", clause}, {"sigma", grades_json(fi_s[i])},
                    {"image", grades_json(images[i])}});
        }
      }
      clause      = "bijective(" + tag + ")";
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      log.checked(clause);
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        log.failed(clause);
        rep.fail({{"clause", clause}, {"reason", "not injective"},
                  {"image", grades_json(*std::adjacent_find(sorted.begin(), sorted.end()))}});
      } else if (sorted != fi_op) {
        log.failed(clause);
        json missing = nullptr;
        for (auto const& mu : fi_op) {
          if (!std::binary_search(sorted.begin(), sorted.end(), mu)) {
            missing = grades_json(mu);
            break;
          }
        }
        rep.fail({{"clause", clause}, {"reason", "not surjective"}, {"missing", missing}});
      }
      rep.note("FI(S) " + std::to_string(fi_s.size()) + " <-> FI(" + tag + ") "
               + std::to_string(fi_op.size()));

      for (std::size_t i = 0; i < fi_s.size(); ++i) {
        for (std::size_t j = 0; j < fi_s.size(); ++j) {
          clause = "inclusion(" + tag + ")";
          log.checked(clause);
          if (included_in(fi_s[i], fi_s[j]) != included_in(images[i], images[j])) {
            log.failed(clause);
            rep.fail({{"clause", clause}, {"sigma1", grades_json(fi_s[i])},
                      {"sigma2", grades_json(fi_s[j])}});
          }
          if (j < i) {
            continue;
          }
          clause = "operations(" + tag + ")";
          log.checked(clause, 2);
          auto const sum_img  = lift_to_operators(*op, fuzzy_sum(g, fi_s[i], fi_s[j]));
          auto const meet_img = lift_to_operators(*op, fuzzy_intersection(fi_s[i], fi_s[j]));
          if (sum_img != fuzzy_sum(ring, images[i], images[j])
              || meet_img != fuzzy_intersection(images[i], images[j])) {
            log.failed(clause);
            rep.fail({{"clause", clause}, {"sigma1", grades_json(fi_s[i])},
                      {"sigma2", grades_json(fi_s[j])}});
          }
        }
      }
    }
    log.finish(rep, cfg.enforce_preconditions);
    return rep;
  }

  VerificationReport verify_characteristic_transfer(GammaSemiring const& g,
                                                    VerifyConfig const&  cfg) {
    auto      rep = make_report("lemmas", g.name());
    Stopwatch sw(rep);
    auto const ops = build_both(g, cfg);
    ClauseLog  log;
    std::uint64_t s_ideals = 0, op_ideals = 0;
    for (auto kind : {IdealKind::two_sided, IdealKind::left, IdealKind::right}) {
      auto const ideals_s = enumerate_crisp_ideals(g, kind, cfg.enumeration.cap);
      s_ideals += ideals_s.size();
      for (auto const* op : {&ops.left, &ops.right}) {
        std::string const tag  = op->side() == Side::left ? "L" : "R";
        Semiring const&   ring = op->semiring();
        std::string const k    = to_string(kind);

        std::string clause = "lift-characteristic(" + tag + "," + k + ")";
        for (auto const& I : ideals_s) {
          log.checked(clause);
          auto const image     = plusprime_set(g, *op, I);
          auto const pointwise = plusprime_set_pointwise(*op, I);
          auto const lifted    = lift_to_operators(*op, characteristic(I));
          if (lifted != characteristic(image) || image != pointwise
              || !is_crisp_ideal(ring, image, kind)) {
            log.failed(clause);
            rep.fail({{"clause", clause},
                      {"ideal", ids_json(I, g.s_ids())},
                      {"image", ids_json(image, ring.ids())},
                      {"pointwise_image", ids_json(pointwise, ring.ids())},
                      {"lifted", grades_json(lifted)}});
          }
        }

        auto const ideals_op = enumerate_crisp_ideals(ring, kind, cfg.enumeration.cap);
        op_ideals += ideals_op.size();
        clause = "restrict-characteristic(" + tag + "," + k + ")";
        for (auto const& J : ideals_op) {
          log.checked(clause);
          auto const image      = plus_set(g, *op, J);
          auto const restricted = restrict_to_base(g, *op, characteristic(J));
          if (restricted != characteristic(image) || !is_crisp_ideal(g, image, kind)) {
            log.failed(clause);
            rep.fail({{"clause", clause},
                      {"ideal", ids_json(J, ring.ids())},
                      {"image", ids_json(image, g.s_ids())},
                      {"restricted", grades_json(restricted)}});
          }
        }
      }
    }
    rep.add_count("ideals_S", s_ideals);
    rep.add_count("ideals_operators", op_ideals);
    log.finish(rep, cfg.enforce_preconditions);
    return rep;
  }

  VerificationReport verify_crisp_lattice_iso(GammaSemiring const& g,
                                              VerifyConfig const&  cfg,
                                              IdealKind            kind) {
    auto      rep = make_report(std::string("th3.15/") + to_string(kind), g.name());
    Stopwatch sw(rep);
    if (kind == IdealKind::left) {
      rep.unmet("left ideals are not part of the claimed isomorphism; left unverified");
      return rep;
    }
    auto const ops = build_both(g, cfg);
    note_unities(rep, g, ops);
    if (!(ops.left_unity && ops.right_unity)) {
      rep.unmet("requires both unities");
      if (cfg.enforce_preconditions) {
        return rep;
      }
    }
    ClauseLog  log;
    auto const ideals_s = enumerate_crisp_ideals(g, kind, cfg.enumeration.cap);
    rep.add_count("ideals_S", ideals_s.size());
    for (auto const* op : {&ops.left, &ops.right}) {
      std::string const tag       = op->side() == Side::left ? "L" : "R";
      Semiring const&   ring      = op->semiring();
      auto const        ideals_op = enumerate_crisp_ideals(ring, kind, cfg.enumeration.cap);
      rep.add_count("ideals_" + tag, ideals_op.size());

      std::vector<CrispSubset> images;
      std::string              pairing;
      for (auto const& I : ideals_s) {
        images.push_back(plusprime_set(g, *op, I));
        pairing += (pairing.empty() ? "" : ", ") + I.to_string(g.s_ids()) + " -> "
                   + images.back().to_string(ring.ids());
      }
      rep.note("pairing S -> " + tag + ": " + pairing);

      std::string clause = "bijective(" + tag + ")";
      auto        sorted = images;
      std::sort(sorted.begin(), sorted.end());
      log.checked(clause);
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()
          || sorted != ideals_op) {
        log.failed(clause);
        json img = json::array();
        for (auto const& J : images) {
          img.push_back(ids_json(J, ring.ids()));
        }
        rep.fail({{"clause", clause}, {"images", img}});
      }

      clause = "inverse(" + tag + ")";
      for (std::size_t i = 0; i < ideals_s.size(); ++i) {
        log.checked(clause);
        if (plus_set(g, *op, images[i]) != ideals_s[i]) {
          log.failed(clause);
          rep.fail({{"clause", clause}, {"ideal", ids_json(ideals_s[i], g.s_ids())}});
        }
      }
      for (auto const& J : ideals_op) {
        log.checked(clause);
        if (plusprime_set(g, *op, plus_set(g, *op, J)) != J) {
          log.failed(clause);
          rep.fail({{"clause", clause}, {"ideal", ids_json(J, ring.ids())}});
        }
      }

      clause = "inclusion(" + tag + ")";
      for (std::size_t i = 0; i < ideals_s.size(); ++i) {
        for (std::size_t j = 0; j < ideals_s.size(); ++j) {
          log.checked(clause);
          if (ideals_s[i].subset_of(ideals_s[j]) != images[i].subset_of(images[j])) {
            log.failed(clause);
            rep.fail({{"clause", clause},
                      {"ideal1", ids_json(ideals_s[i], g.s_ids())},
                      {"ideal2", ids_json(ideals_s[j], g.s_ids())}});
          }
        }
      }
    }
    log.finish(rep, cfg.enforce_preconditions);
    return rep;
  }

  VerificationReport verify_semifield_characterization(Semiring const& r, VerifyConfig const& cfg) {
    auto      rep = make_report("th3.17", r.name(), cfg.chain);
    Stopwatch sw(rep);
    if (!is_mul_commutative(r)) {
      rep.unmet("multiplication is not commutative");
      return rep;
    }
    if (r.size() == 1) {
      rep.unmet("one-element semiring: every fuzzy ideal is constant and the structure is "
                "classified as not a semifield");
      return rep;
    }
    auto const field = is_semifield(r);
    auto const inv   = is_semifield_by_inverses(r);
    std::optional<CrispSubset> bad;
    if (!field.holds()) {
      CrispSubset I(r.size());
      for (auto m : field.witness) {
        I.insert(m);
      }
      bad = I;
    }
    auto const fi = enumerate_fuzzy_ideals(r, cfg.chain, IdealKind::two_sided, cfg.enumeration);
    check_characterization(rep, false, field, bad, r.ids(), fi, "semifield");
    if (inv.verdict == Verdict::precondition_unmet) {
      rep.note("inverse-based semifield predicate not applicable: " + inv.note);
    } else if (inv.holds() != field.holds()) {
      rep.note(std::string("semifield predicates disagree: ideal-simple=")
               + (field.holds() ? "yes" : "no") + ", invertible=" + (inv.holds() ? "yes" : "no"));
    } else {
      rep.note("semifield predicates agree");
    }
    return rep;
  }

  VerificationReport verify_gamma_semifield_characterization(GammaSemiring const& g,
                                                             VerifyConfig const&  cfg) {
    auto      rep = make_report("th3.18", g.name(), cfg.chain);
    Stopwatch sw(rep);
    auto const comm = is_commutative(g);
    auto const zdf  = is_zdf(g);
    bool       gate = false;
    if (!comm.holds()) {
      rep.unmet("not commutative");
      gate = true;
    }
    if (!zdf.holds()) {
      rep.unmet("not zero-divisor free");
      gate = true;
    }
    if (g.s_size() == 1) {
      rep.unmet("one-element carrier");
      gate = true;
    }
    if (!comm.holds()) {
      return rep;
    }
    auto const field  = is_gamma_semifield(g);
    auto const ideals = enumerate_crisp_ideals(g, IdealKind::two_sided, cfg.enumeration.cap);
    auto const fi     = enumerate_fuzzy_ideals(g, cfg.chain, IdealKind::two_sided, cfg.enumeration);
    check_characterization(rep, gate && cfg.enforce_preconditions, field,
                           field.holds() ? std::nullopt : nonzero_proper_ideal(ideals), g.s_ids(),
                           fi, "Gamma-semifield");
    return rep;
  }

  VerificationReport verify_semifield_transfer(GammaSemiring const& g, VerifyConfig const& cfg) {
    auto      rep = make_report("transfer-semifield", g.name(), cfg.chain);
    Stopwatch sw(rep);
    auto const comm = is_commutative(g);
    auto const zdf  = is_zdf(g);
    bool       gate = !comm.holds() || !zdf.holds();
    if (!comm.holds()) {
      rep.unmet("not commutative");
    }
    if (!zdf.holds()) {
      rep.unmet("not zero-divisor free");
    }
    auto const left = build_operator_semiring(g, Side::left, cfg.closure);
    rep.add_count("L", left.size());
    auto const gsf = comm.holds() ? is_gamma_semifield(g) : Check{Verdict::precondition_unmet, {}, {}};
    auto const sf  = is_semifield(left.semiring());
    auto verdict   = [](Check const& c) {
      return c.verdict == Verdict::yes ? "yes" : c.verdict == Verdict::no ? "no" : "n/a";
    };
    rep.note(std::string("Gamma-semifield(S): ") + verdict(gsf) + ", semifield(L): " + verdict(sf));
    if (gate && cfg.enforce_preconditions) {
      return rep;
    }
    if (gsf.verdict == Verdict::precondition_unmet || sf.verdict == Verdict::precondition_unmet) {
      rep.unmet("a semifield predicate is not applicable");
      return rep;
    }
    if (gsf.holds() != sf.holds()) {
      rep.fail({{"clause", "Gamma-semifield(S) <=> semifield(L)"},
                {"gamma_semifield", gsf.holds()},
                {"semifield_L", sf.holds()}});
    }
    auto const side_s = verify_gamma_semifield_characterization(g, cfg);
    auto const side_l = verify_semifield_characterization(left.semiring(), cfg);
    for (auto const* sub : {&side_s, &side_l}) {
      rep.note(sub->suite + " on " + sub->instance + ": " + to_string(sub->status));
      if (sub->status == Status::fail) {
        rep.fail({{"clause", sub->suite + " on " + sub->instance},
                  {"counterexample", sub->counterexample}});
      }
    }
    return rep;
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {
        "prop3.4", "th3.8", "lemmas", "th3.15", "th3.17", "th3.18", "transfer-semifield",
        "matrix", "all"};
    return names;
  }

  namespace {
    template <typename F>
    VerificationReport guarded(std::string const& suite,
                               std::string const& instance,
                               VerifyConfig const& cfg,
                               F&&                 body) {
      try {
        return body();
      } catch (ResourceError const& e) {
        auto rep = make_report(suite, instance, cfg.chain);
        rep.unmet(std::string("cap exceeded: ") + e.what());
        return rep;
      }
    }

    std::vector<IdealKind> kinds_for(std::optional<IdealKind> kind, bool all) {
      if (kind) {
        return {*kind};
      }
      if (all) {
        return {IdealKind::two_sided, IdealKind::right};
      }
      return {IdealKind::two_sided};
    }

    void matrix_suites(std::vector<VerificationReport>& out,
                       GammaSemiring const&             g,
                       VerifyConfig const&              cfg) {
      out.push_back(guarded("matrix", g.name(), cfg,
                            [&] { return verify_matrix_instance(g, cfg); }));
      for (auto side : {Side::left, Side::right}) {
        out.push_back(guarded(std::string("matrix.iso/") + to_string(side), g.name(), cfg,
                              [&] { return check_operator_matrix_iso(g, cfg.n, side, cfg); }));
      }
      std::vector<GradeChain> chains = {GradeChain::binary()};
      if (cfg.chain != GradeChain::binary()) {
        chains.push_back(cfg.chain);
      }
      for (auto const& chain : chains) {
        out.push_back(guarded("th3.19", g.name(), cfg, [&] {
          return verify_matrix_fuzzy_bijection(g, cfg.n, chain, cfg);
        }));
      }
    }
  }  // namespace

  std::vector<VerificationReport> run_suite(GammaSemiring const&     g,
                                            std::string_view         suite,
                                            VerifyConfig const&      cfg,
                                            std::optional<IdealKind> kind) {
    bool const all = suite == "all";
    if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    std::vector<VerificationReport> out;
    auto const& name = g.name();
    if (all || suite == "prop3.4") {
      out.push_back(guarded("prop3.4", name, cfg, [&] { return verify_transfer_properties(g, cfg); }));
    }
    if (all || suite == "th3.8") {
      for (auto k : kinds_for(kind, all)) {
        out.push_back(guarded("th3.8", name, cfg, [&] { return verify_fuzzy_lattice_iso(g, cfg, k); }));
      }
    }
    if (all || suite == "lemmas") {
      out.push_back(guarded("lemmas", name, cfg, [&] { return verify_characteristic_transfer(g, cfg); }));
    }
    if (all || suite == "th3.15") {
      for (auto k : kinds_for(kind, all)) {
        out.push_back(guarded("th3.15", name, cfg, [&] { return verify_crisp_lattice_iso(g, cfg, k); }));
      }
    }
    if (all || suite == "th3.17") {
      out.push_back(guarded("th3.17", name + ".L", cfg, [&] {
        auto const left = build_operator_semiring(g, Side::left, cfg.closure);
        return verify_semifield_characterization(left.semiring(), cfg);
      }));
    }
    if (all || suite == "th3.18") {
      out.push_back(guarded("th3.18", name, cfg,
                            [&] { return verify_gamma_semifield_characterization(g, cfg); }));
    }
    if (all || suite == "transfer-semifield") {
      out.push_back(guarded("transfer-semifield", name, cfg,
                            [&] { return verify_semifield_transfer(g, cfg); }));
    }
    if (all || suite == "matrix") {
      matrix_suites(out, g, cfg);
    }
    return out;
  }

  std::vector<VerificationReport> run_suite(Semiring const&     r,
                                            std::string_view    suite,
                                            VerifyConfig const& cfg) {
    if (suite != "all" && suite != "th3.17") {
      throw std::invalid_argument("suite '" + std::string(suite)
                                  + "' needs a Gamma-semiring; semiring files support th3.17");
    }
    return {guarded("th3.17", r.name(), cfg,
                    [&] { return verify_semifield_characterization(r, cfg); })};
  }

  std::vector<VerificationReport> run_all(GammaSemiring const& g, VerifyConfig const& cfg) {
    return run_suite(g, "all", cfg);
  }

}  // namespace gammasr
