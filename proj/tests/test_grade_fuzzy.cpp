#include <doctest.h>

#include <random>

#include "gammasr/fuzzy.hpp"
#include "oracles.hpp"

using namespace gammasr;

namespace {
  Grade const h = Grade(1, 2);
  Grade const o = Grade::one();
  Grade const z = Grade::zero();

  std::vector<FuzzySubset> as_subsets(std::vector<oracle::Grades> const& v) {
    std::vector<FuzzySubset> out;
    for (auto const& g : v) out.emplace_back(g);
    return out;
  }

  oracle::Kind to_oracle(IdealKind k) {
    return k == IdealKind::left ? oracle::Kind::left
         : k == IdealKind::right ? oracle::Kind::right
                                 : oracle::Kind::two;
  }

  std::vector<CrispSubset> as_crisp(std::vector<std::vector<bool>> const& v) {
    std::vector<CrispSubset> out;
    for (auto const& s : v) out.emplace_back(s);
    return out;
  }
}  // namespace

TEST_SUITE("grade") {
  TEST_CASE("parsing and normal form") {
    CHECK(Grade::parse("2/4") == h);
    CHECK(Grade::parse("1") == o);
    CHECK(Grade::parse("0") == z);
    CHECK(Grade::parse("0/7").to_string() == "0/1");
    CHECK(o.to_string() == "1/1");
    CHECK_THROWS_AS((void)Grade::parse("3/2"), std::invalid_argument);
    CHECK_THROWS_AS((void)Grade::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Grade::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS((void)Grade::parse("-1/2"), std::invalid_argument);
  }

  TEST_CASE("ordering is rational ordering") {
    CHECK(Grade(1, 3) < Grade(1, 2));
    CHECK(Grade(2, 3) > Grade(1, 2));
    CHECK(Grade(999999999999, 1000000000000) < o);
    CHECK(std::min(Grade(1, 3), Grade(2, 7)) == Grade(2, 7));
  }

  TEST_CASE("chains") {
    GradeChain const c;
    CHECK(c.size() == 3);
    CHECK(c.to_string() == "0/1,1/2,1/1");
    CHECK(GradeChain::parse("1, 1/3, 0, 1/3").to_string() == "0/1,1/3,1/1");
    CHECK(GradeChain::binary().size() == 2);
    CHECK(c.index_of(h) == 1);
    CHECK_FALSE(c.contains(Grade(1, 3)));
    CHECK_THROWS_AS((void)GradeChain::parse("0,1/2"), std::invalid_argument);
    CHECK_THROWS_AS((void)GradeChain::parse("1/2,1"), std::invalid_argument);
  }
}

TEST_SUITE("fuzzy") {
  TEST_CASE("subset helpers") {
    FuzzySubset const mu{o, h};
    CHECK(mu.to_string() == "(1/1, 1/2)");
    CHECK_FALSE(mu.is_constant());
    CHECK(FuzzySubset::constant(3, h).is_constant());
    CHECK_FALSE(FuzzySubset(2).is_nonempty());
    CHECK(included_in(FuzzySubset{o, z}, mu));
    CHECK_FALSE(included_in(mu, FuzzySubset{o, z}));
    CHECK_THROWS_AS((void)included_in(mu, FuzzySubset(3)), std::invalid_argument);
    auto const I = CrispSubset::of(4, {0, 2});
    CHECK(I.to_string({"0", "1", "2", "3"}) == "{0,2}");
    CHECK(characteristic(I) == FuzzySubset{o, z, o, z});
    CHECK(characteristic(CrispSubset(3)) == FuzzySubset::constant(3, z));
    CHECK(characteristic(CrispSubset::full(3)) == FuzzySubset::constant(3, o));
  }

  TEST_CASE("fuzzy ideal predicates") {
    auto const gb = boolean_gamma_semiring();
    CHECK(is_fuzzy_ideal(gb, FuzzySubset{o, h}, IdealKind::two_sided));
    CHECK_FALSE(is_fuzzy_ideal(gb, FuzzySubset{h, o}, IdealKind::two_sided));
    CHECK(is_fuzzy_ideal(gb, FuzzySubset::constant(2, o), IdealKind::two_sided));
    CHECK_FALSE(is_fuzzy_ideal(gb, FuzzySubset(2), IdealKind::two_sided));
    auto const b = boolean_semiring();
    CHECK(is_fuzzy_ideal(b, FuzzySubset{o, h}, IdealKind::two_sided));
    CHECK_FALSE(is_fuzzy_ideal(b, FuzzySubset{h, o}, IdealKind::two_sided));
    CHECK(is_fuzzy_ideal(b, FuzzySubset::constant(2, o), IdealKind::left));
  }

  TEST_CASE("fuzzy sum and intersection") {
    auto const z2 = zn_gamma_semiring(2);
    CHECK(fuzzy_sum(z2, FuzzySubset{o, h}, FuzzySubset{o, z}) == FuzzySubset{o, h});
    for (auto t : {z, h, o}) {
      FuzzySubset const mu{o, t};
      CHECK(fuzzy_sum(z2, mu, mu) == mu);
    }
    auto const  z4  = zn_gamma_semiring(4);
    FuzzySubset mu2 = {o, h, o, h};
    CHECK(fuzzy_sum(z4, characteristic(CrispSubset::of(4, {0})), mu2) == mu2);
    CHECK(fuzzy_intersection(mu2, mu2) == mu2);
    CHECK(fuzzy_intersection(FuzzySubset{o, h}, FuzzySubset{o, z}) == FuzzySubset{o, z});
    CHECK(fuzzy_intersection(FuzzySubset::constant(2, o), FuzzySubset{o, h}) == FuzzySubset{o, h});
    std::vector<FuzzySubset> family = {{o, h, o, h}, {o, z, o, o}, {o, o, h, o}};
    CHECK(fuzzy_intersection(family) == FuzzySubset{o, z, h, h});
    CHECK_THROWS_AS((void)fuzzy_intersection(FuzzySubset{o}, FuzzySubset{o, o}), std::invalid_argument);
  }

  TEST_CASE("enumeration counts on the named instances") {
    GradeChain const chain;
    CHECK(enumerate_fuzzy_ideals(boolean_gamma_semiring(), chain, IdealKind::two_sided).size() == 3);
    CHECK(enumerate_fuzzy_ideals(zn_gamma_semiring(2), chain, IdealKind::two_sided).size() == 3);
    auto const z4 = enumerate_fuzzy_ideals(zn_gamma_semiring(4), chain, IdealKind::two_sided);
    REQUIRE(z4.size() == 6);
    for (auto const& mu : z4) {
      CHECK(mu[0] == o);
      CHECK(mu[1] == mu[3]);
      CHECK(mu[1] <= mu[2]);
    }
    CHECK(std::is_sorted(z4.begin(), z4.end()));
  }

  TEST_CASE("enumeration agrees with brute-force filtering") {
    std::vector<GammaSemiring> instances = {boolean_gamma_semiring(), zn_gamma_semiring(2),
                                            zn_gamma_semiring(3), zn_gamma_semiring(4),
                                            zn_gamma_semiring(5)};
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
      auto g = oracle::random_gamma(rng, 2 + i % 3, 1 + i % 3);
      if (validate_gamma_semiring(g).ok()) instances.push_back(g);
    }
    for (auto const& chain : {GradeChain::binary(), GradeChain(), GradeChain::parse("0,1/3,2/3,1")}) {
      for (auto const& g : instances) {
        for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
          CAPTURE(g.name());
          auto const got = enumerate_fuzzy_ideals(g, chain, kind);
          auto const exp = as_subsets(oracle::fuzzy_ideals(g, g.s_size(), chain, to_oracle(kind)));
          CHECK(got == exp);
          auto const crisp = enumerate_crisp_ideals(g, kind);
          CHECK(crisp == as_crisp(oracle::crisp_ideals(g, to_oracle(kind))));
        }
      }
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      auto const r = zn_semiring(n);
      CHECK(enumerate_fuzzy_ideals(r, GradeChain(), IdealKind::two_sided)
            == as_subsets(oracle::fuzzy_ideals(r, r.size(), GradeChain(), oracle::Kind::two)));
      CHECK(enumerate_crisp_ideals(r, IdealKind::two_sided)
            == as_crisp(oracle::crisp_ideals(r, oracle::Kind::two)));
    }
  }

  TEST_CASE("binary chain ideals are characteristic functions of crisp ideals") {
    for (auto const& g : {boolean_gamma_semiring(), zn_gamma_semiring(4), zn_gamma_semiring(6)}) {
      for (auto kind : {IdealKind::left, IdealKind::right, IdealKind::two_sided}) {
        std::vector<FuzzySubset> lambdas;
        for (auto const& I : enumerate_crisp_ideals(g, kind)) lambdas.push_back(characteristic(I));
        std::sort(lambdas.begin(), lambdas.end());
        CHECK(enumerate_fuzzy_ideals(g, GradeChain::binary(), kind) == lambdas);
      }
    }
  }

  TEST_CASE("lambda_I is a fuzzy ideal exactly when I is an ideal") {
    auto const g = zn_gamma_semiring(4);
    for (auto const& s : oracle::all_subsets(4)) {
      CrispSubset const I(s);
      CHECK(is_crisp_ideal(g, I, IdealKind::two_sided)
            == (is_fuzzy_ideal(g, characteristic(I), IdealKind::two_sided) && I.contains(0)));
    }
    CHECK(enumerate_crisp_ideals(zn_gamma_semiring(4), IdealKind::two_sided)
          == std::vector<CrispSubset>{CrispSubset::of(4, {0}), CrispSubset::of(4, {0, 2}),
                                      CrispSubset::full(4)});
    CHECK(enumerate_crisp_ideals(boolean_semiring(), IdealKind::two_sided).size() == 2);
  }

  TEST_CASE("parallel enumeration matches the sequential order") {
    auto const g = zn_gamma_semiring(6);
    auto const chain = GradeChain::parse("0,1/4,1/2,3/4,1");
    auto const seq   = enumerate_fuzzy_ideals(g, chain, IdealKind::two_sided);
    for (unsigned w : {2U, 3U, 8U}) {
      CHECK(enumerate_fuzzy_ideals(g, chain, IdealKind::two_sided, {100'000'000, w}) == seq);
    }
  }

  TEST_CASE("lattice closure of enumerated ideals") {
    auto const g  = zn_gamma_semiring(4);
    auto const fi = enumerate_fuzzy_ideals(g, GradeChain(), IdealKind::two_sided);
    for (auto const& a : fi)
      for (auto const& b : fi) {
        CHECK(std::binary_search(fi.begin(), fi.end(), fuzzy_sum(g, a, b)));
        CHECK(std::binary_search(fi.begin(), fi.end(), fuzzy_intersection(a, b)));
        CHECK(fuzzy_sum(g, a, b) == fuzzy_sum(g, b, a));
        for (auto const& c : fi) CHECK(fuzzy_sum(g, fuzzy_sum(g, a, b), c) == fuzzy_sum(g, a, fuzzy_sum(g, b, c)));
      }
  }

  TEST_CASE("caps") {
    CHECK(candidate_count(3, 4) == 27);
    CHECK(candidate_count(3, 1) == 1);
    CHECK(candidate_count(2, 200) == UINT64_MAX);
    CHECK_THROWS_AS((void)enumerate_fuzzy_ideals(zn_gamma_semiring(4), GradeChain(),
                                                 IdealKind::two_sided, {26, 1}),
                    ResourceError);
    CHECK_NOTHROW((void)enumerate_fuzzy_ideals(zn_gamma_semiring(4), GradeChain(),
                                               IdealKind::two_sided, {27, 1}));
    CHECK_THROWS_AS((void)enumerate_crisp_ideals(zn_gamma_semiring(4), IdealKind::two_sided, 7),
                    ResourceError);
  }

  TEST_CASE("ideal kinds parse") {
    CHECK(parse_ideal_kind("two") == IdealKind::two_sided);
    CHECK(parse_ideal_kind("two-sided") == IdealKind::two_sided);
    CHECK(parse_ideal_kind("left") == IdealKind::left);
    CHECK(std::string(to_string(IdealKind::right)) == "right");
    CHECK_THROWS_AS((void)parse_ideal_kind("up"), std::invalid_argument);
  }
}
