#include <doctest.h>

#include <random>

#include "gammasr/operators.hpp"
#include "gammasr/transfer.hpp"
#include "oracles.hpp"

using namespace gammasr;

namespace {
  Grade const h = Grade(1, 2);
  Grade const o = Grade::one();
  Grade const z = Grade::zero();

  std::set<ActionMap> as_set(OperatorSemiring const& op) {
    return {op.elements().begin(), op.elements().end()};
  }

  GammaSemiring zero_product(GammaSemiring const& g) {
    return GammaSemiring("zero", g.s_ids(), g.g_ids(), g.add_table(), g.add_gamma_table(),
                         std::vector<Index>(g.product_table().size(), 0));
  }
}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("single-pair actions on GB") {
    auto const g = boolean_gamma_semiring();
    CHECK(action_of_pair(g, {0, 1}, Side::left) == ActionMap{0, 0});
    CHECK(action_of_pair(g, {1, 1}, Side::left) == ActionMap{0, 1});
    CHECK(action_of_pair(g, {1, 0}, Side::left) == ActionMap{0, 0});
    CHECK(action_of_pair(g, {1, 1}, Side::right) == ActionMap{0, 1});
  }

  TEST_CASE("operator semiring sizes match the formal-sum oracle") {
    std::vector<GammaSemiring> instances = {boolean_gamma_semiring(), zn_gamma_semiring(2),
                                            zn_gamma_semiring(3), zn_gamma_semiring(4),
                                            zn_gamma_semiring(6)};
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
      auto g = oracle::random_gamma(rng, 2 + i % 3, 1 + i % 4);
      if (validate_gamma_semiring(g).ok()) instances.push_back(g);
    }
    for (auto const& g : instances) {
      for (auto side : {Side::left, Side::right}) {
        auto const op  = build_operator_semiring(g, side);
        auto const exp = oracle::formal_sum_actions(g, side == Side::left, g.s_size() * g.g_size());
        CHECK(as_set(op) == exp);
        CHECK(oracle::semiring_ok(op.semiring()));
        CHECK(validate_semiring(op.semiring()).ok());
      }
    }
  }

  TEST_CASE("named operator semirings") {
    auto const gb = build_operator_semiring(boolean_gamma_semiring(), Side::left);
    CHECK(gb.size() == 2);
    CHECK(gb.element(0) == ActionMap{0, 0});
    CHECK(gb.element(1) == ActionMap{0, 1});
    CHECK(gb.semiring().add_table() == boolean_semiring().add_table());
    CHECK(gb.semiring().mul_table() == boolean_semiring().mul_table());

    auto const z2 = build_operator_semiring(zn_gamma_semiring(2), Side::left);
    CHECK(z2.size() == 2);
    CHECK(z2.add(1, 1) == 0);

    auto const z4 = build_operator_semiring(zn_gamma_semiring(4), Side::left);
    REQUIRE(z4.size() == 4);
    for (Index k = 0; k < 4; ++k)
      for (Index a = 0; a < 4; ++a) CHECK(z4.element(k)[a] == (k * a) % 4);
    CHECK(z4.semiring().add_table() == zn_semiring(4).add_table());
    CHECK(z4.semiring().mul_table() == zn_semiring(4).mul_table());
    CHECK(z4.semiring().ids() == std::vector<std::string>{"f0", "f1", "f2", "f3"});
    CHECK(z4.describe(2, zn_gamma_semiring(4)) == "[1,2]");
    CHECK(z4.describe(0, zn_gamma_semiring(4)) == "[0,0]");
  }

  TEST_CASE("product law on generators") {
    for (auto const& g : {zn_gamma_semiring(4), zn_gamma_semiring(3), boolean_gamma_semiring()}) {
      auto const L = build_operator_semiring(g, Side::left);
      auto const R = build_operator_semiring(g, Side::right);
      for (Index x = 0; x < g.s_size(); ++x)
        for (Index al = 0; al < g.g_size(); ++al)
          for (Index y = 0; y < g.s_size(); ++y)
            for (Index be = 0; be < g.g_size(); ++be) {
              auto const f  = *L.find(action_of_pair(g, {x, al}, Side::left));
              auto const k  = *L.find(action_of_pair(g, {y, be}, Side::left));
              auto const fk = *L.find(action_of_pair(g, {g.product(x, al, y), be}, Side::left));
              CHECK(L.mul(f, k) == fk);
              // [al, x][be, y] = [al, x be y] on the right.
              auto const rf  = *R.find(action_of_pair(g, {al, x}, Side::right));
              auto const rk  = *R.find(action_of_pair(g, {be, y}, Side::right));
              auto const rfk = *R.find(action_of_pair(g, {al, g.product(x, be, y)}, Side::right));
              CHECK(R.mul(rf, rk) == rfk);
            }
    }
  }

  TEST_CASE("left and right coincide on symmetric commutative instances") {
    for (auto const& g : {boolean_gamma_semiring(), zn_gamma_semiring(2), zn_gamma_semiring(4)}) {
      auto const L = build_operator_semiring(g, Side::left);
      auto const R = build_operator_semiring(g, Side::right);
      CHECK(L.elements() == R.elements());
      CHECK(L.semiring().mul_table() == R.semiring().mul_table());
    }
  }

  TEST_CASE("rebuilding is deterministic") {
    auto const g = zn_gamma_semiring(6);
    auto const a = build_operator_semiring(g, Side::left);
    auto const b = build_operator_semiring(g, Side::left);
    CHECK(a.elements() == b.elements());
    for (Index i = 0; i < a.size(); ++i) CHECK(a.provenance(i) == b.provenance(i));
  }

  TEST_CASE("elements are additive maps fixing zero") {
    auto const g = zn_gamma_semiring(6);
    auto const L = build_operator_semiring(g, Side::left);
    for (auto const& f : L.elements()) {
      CHECK(f[0] == 0);
      for (Index a = 0; a < 6; ++a)
        for (Index b = 0; b < 6; ++b) CHECK(f[g.add(a, b)] == g.add(f[a], f[b]));
    }
  }

  TEST_CASE("unities") {
    auto const gb = boolean_gamma_semiring();
    auto const L  = build_operator_semiring(gb, Side::left);
    REQUIRE(find_unity(gb, L).has_value());
    CHECK(L.describe(*find_unity(gb, L), gb) == "[1,1]");
    auto const z4 = zn_gamma_semiring(4);
    auto const L4 = build_operator_semiring(z4, Side::left);
    CHECK(L4.describe(*find_unity(z4, L4), z4) == "[1,1]");
    auto const zp = zero_product(gb);
    auto const L0 = build_operator_semiring(zp, Side::left);
    CHECK(L0.size() == 1);
    CHECK_FALSE(find_unity(zp, L0).has_value());
  }

  TEST_CASE("closure cap") {
    CHECK_THROWS_AS((void)build_operator_semiring(zn_gamma_semiring(4), Side::left, {3, {}}),
                    ResourceError);
    CHECK_NOTHROW((void)build_operator_semiring(zn_gamma_semiring(4), Side::left, {4, {}}));
  }

  TEST_CASE("crisp correspondences") {
    auto const gb = boolean_gamma_semiring();
    auto const L  = build_operator_semiring(gb, Side::left);
    CHECK(plus_set(gb, L, CrispSubset::of(2, {0})) == CrispSubset::of(2, {0}));
    CHECK(plus_set(gb, L, CrispSubset::full(2)) == CrispSubset::full(2));
    CHECK(plus_set(gb, L, CrispSubset(2)) == CrispSubset(2));

    auto const z4 = zn_gamma_semiring(4);
    auto const L4 = build_operator_semiring(z4, Side::left);
    auto const R4 = build_operator_semiring(z4, Side::right);
    CHECK(plusprime_set(z4, L4, CrispSubset::of(4, {0, 2})) == CrispSubset::of(4, {0, 2}));
    CHECK(plusprime_set(z4, L4, CrispSubset::full(4)) == CrispSubset::full(4));
    CHECK(plusprime_set(z4, L4, CrispSubset::of(4, {0})) == CrispSubset::of(4, {0}));
    CHECK(starprime_set(z4, R4, CrispSubset::of(4, {0, 2})) == CrispSubset::of(4, {0, 2}));
    CHECK(starprime_set(z4, R4, CrispSubset::of(4, {0})) == CrispSubset::of(4, {0}));
    CHECK(star_set(z4, R4, CrispSubset::full(4)) == CrispSubset::full(4));
    CHECK(star_set(gb, build_operator_semiring(gb, Side::right), CrispSubset::of(2, {0}))
          == CrispSubset::of(2, {0}));
    CHECK_THROWS_AS((void)star_set(z4, L4, CrispSubset::full(4)), std::invalid_argument);
  }

  TEST_CASE("closure and pointwise plus-prime agree") {
    // f(S) is already additively closed for an additive f, so both readings
    // coincide on every subset, ideal or not.
    for (auto const& g : {zn_gamma_semiring(4), zn_gamma_semiring(6)}) {
      for (auto side : {Side::left, Side::right}) {
        auto const op = build_operator_semiring(g, side);
        for (auto const& q : oracle::all_subsets(g.s_size())) {
          CrispSubset const Q(q);
          CHECK(plusprime_set(g, op, Q) == plusprime_set_pointwise(op, Q));
        }
      }
    }
  }

  TEST_CASE("sides parse") {
    CHECK(parse_side("left") == Side::left);
    CHECK(std::string(to_string(Side::right)) == "right");
    CHECK_THROWS_AS((void)parse_side("up"), std::invalid_argument);
  }
}

TEST_SUITE("transfer") {
  TEST_CASE("restriction examples on GB") {
    auto const g = boolean_gamma_semiring();
    auto const L = build_operator_semiring(g, Side::left);
    for (auto t : {z, h, o}) CHECK(restrict_plus(g, L, FuzzySubset{o, t}) == FuzzySubset{o, t});
    CHECK(restrict_plus(g, L, FuzzySubset::constant(2, o)) == FuzzySubset::constant(2, o));
    CHECK(restrict_plus(g, L, characteristic(CrispSubset::of(2, {0}))) == characteristic(CrispSubset::of(2, {0})));
  }

  TEST_CASE("lift examples") {
    auto const g = boolean_gamma_semiring();
    auto const L = build_operator_semiring(g, Side::left);
    CHECK(lift_plusprime(L, FuzzySubset{o, h}) == FuzzySubset{o, h});
    CHECK(lift_plusprime(L, FuzzySubset::constant(2, o)) == FuzzySubset::constant(2, o));
    auto const z4 = zn_gamma_semiring(4);
    auto const L4 = build_operator_semiring(z4, Side::left);
    CHECK(lift_plusprime(L4, characteristic(CrispSubset::of(4, {0, 2}))) == FuzzySubset{o, z, o, z});
  }

  TEST_CASE("right duals give identical grades on commutative instances") {
    for (auto const& g : {boolean_gamma_semiring(), zn_gamma_semiring(2), zn_gamma_semiring(4)}) {
      auto const L = build_operator_semiring(g, Side::left);
      auto const R = build_operator_semiring(g, Side::right);
      for (auto const& mu : enumerate_fuzzy_ideals(g, GradeChain(), IdealKind::two_sided)) {
        CHECK(lift_plusprime(L, mu) == lift_starprime(R, mu));
      }
      for (auto const& mu : enumerate_fuzzy_ideals(L.semiring(), GradeChain(), IdealKind::two_sided)) {
        CHECK(restrict_plus(g, L, mu) == restrict_star(g, R, mu));
      }
      CHECK_THROWS_AS((void)restrict_star(g, L, FuzzySubset::constant(L.size(), o)), std::invalid_argument);
      CHECK_THROWS_AS((void)lift_plusprime(R, FuzzySubset::constant(g.s_size(), o)), std::invalid_argument);
    }
  }

  TEST_CASE("transfer maps follow their defining formulas") {
    auto const g = zn_gamma_semiring(6);
    auto const L = build_operator_semiring(g, Side::left);
    std::mt19937 rng(3);
    GradeChain const chain = GradeChain::parse("0,1/3,2/3,1");
    for (int t = 0; t < 50; ++t) {
      FuzzySubset sigma(g.s_size()), mu(L.size());
      for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = chain[rng() % 4];
      for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = chain[rng() % 4];
      auto const lifted = lift_plusprime(L, sigma);
      for (Index f = 0; f < L.size(); ++f) {
        Grade m = o;
        for (Index s = 0; s < g.s_size(); ++s) m = std::min(m, sigma[L.element(f)[s]]);
        CHECK(lifted[f] == m);
      }
      auto const restricted = restrict_plus(g, L, mu);
      for (Index x = 0; x < g.s_size(); ++x) {
        Grade m = o;
        for (Index c = 0; c < g.g_size(); ++c) m = std::min(m, mu[*L.find(action_of_pair(g, {x, c}, Side::left))]);
        CHECK(restricted[x] == m);
      }
    }
  }

  TEST_CASE("size mismatch is rejected") {
    auto const g = boolean_gamma_semiring();
    auto const L = build_operator_semiring(g, Side::left);
    CHECK_THROWS_AS((void)lift_plusprime(L, FuzzySubset(3)), std::invalid_argument);
    CHECK_THROWS_AS((void)restrict_plus(g, L, FuzzySubset(5)), std::invalid_argument);
    CHECK_THROWS_AS((void)restrict_plus(zn_gamma_semiring(3), L, FuzzySubset(2)), std::invalid_argument);
  }
}
