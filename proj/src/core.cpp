#include "gammasr/core.hpp"

#include <array>
#include <optional>
#include <set>
#include <utility>

namespace gammasr {

  namespace {

    void check_ids(std::vector<std::string> const& ids, char const* what) {
      if (ids.empty()) {
        throw StructuralError(std::string(what) + " carrier is empty");
      }
      std::set<std::string> seen;
      for (auto const& id : ids) {
        if (id.empty()) {
          throw StructuralError(std::string(what) + " carrier has an empty id");
        }
        if (!seen.insert(id).second) {
          throw StructuralError(std::string("duplicate id '") + id + "' in "
                                + what + " carrier");
        }
      }
    }

    void check_table(std::vector<Index> const& table,
                     std::size_t               expected,
                     std::size_t               range,
                     char const*               what) {
      if (table.size() != expected) {
        throw StructuralError(std::string(what) + " table has "
                              + std::to_string(table.size())
                              + " entries, expected "
                              + std::to_string(expected));
      }
      for (auto v : table) {
        if (v >= range) {
          throw StructuralError(std::string(what) + " table entry "
                                + std::to_string(v) + " is out of range");
        }
      }
    }

    // Scans all n-tuples over the given extents in lexicographic order and
    // records the first tuple for which `holds` is false.
    template <std::size_t N, typename Pred>
    void scan(ValidationOutcome&                 out,
              char const*                        axiom,
              std::array<std::size_t, N> const& extents,
              Pred&&                             holds) {
      std::array<Index, N> t{};
      for (std::size_t i = 0; i < N; ++i) {
        if (extents[i] == 0) {
          return;
        }
      }
      while (true) {
        if (!holds(t)) {
          out.violations.push_back(
              {axiom, std::vector<Index>(t.begin(), t.end())});
          return;
        }
        std::size_t k = N;
        while (k > 0) {
          --k;
          if (++t[k] < extents[k]) {
            break;
          }
          t[k] = 0;
          if (k == 0) {
            return;
          }
        }
      }
    }

    template <typename Add>
    void scan_monoid(ValidationOutcome& out,
                     std::string const& prefix,
                     std::size_t        n,
                     Add&&              add) {
      scan<2>(out, (prefix + ".commutative").c_str(), {n, n}, [&](auto t) {
        return add(t[0], t[1]) == add(t[1], t[0]);
      });
      scan<3>(out, (prefix + ".associative").c_str(), {n, n, n}, [&](auto t) {
        return add(add(t[0], t[1]), t[2]) == add(t[0], add(t[1], t[2]));
      });
      scan<1>(out, (prefix + ".identity").c_str(), {n}, [&](auto t) {
        return add(0, t[0]) == t[0] && add(t[0], 0) == t[0];
      });
    }

  }  // namespace

  GammaSemiring::GammaSemiring(std::string              name,
                               std::vector<std::string> s_ids,
                               std::vector<std::string> g_ids,
                               std::vector<Index>       add_s,
                               std::vector<Index>       add_g,
                               std::vector<Index>       product)
      : name_(std::move(name)),
        s_ids_(std::move(s_ids)),
        g_ids_(std::move(g_ids)),
        add_s_(std::move(add_s)),
        add_g_(std::move(add_g)),
        product_(std::move(product)) {
    check_ids(s_ids_, "S");
    check_ids(g_ids_, "Gamma");
    std::size_t const ns = s_ids_.size(), ng = g_ids_.size();
    check_table(add_s_, ns * ns, ns, "add_S");
    check_table(add_g_, ng * ng, ng, "add_G");
    check_table(product_, ns * ng * ns, ns, "product");
  }

  GammaSemiring GammaSemiring::renamed(std::string name) const {
    GammaSemiring copy = *this;
    copy.name_         = std::move(name);
    return copy;
  }

  GammaSemiring GammaSemiring::with_product(Index a,
                                            Index gamma,
                                            Index b,
                                            Index value) const {
    if (a >= s_size() || b >= s_size() || gamma >= g_size() || value >= s_size()) {
      throw StructuralError("product cell out of range");
    }
    GammaSemiring copy = *this;
    copy.product_[(a * g_size() + gamma) * s_size() + b] = value;
    return copy;
  }

  Semiring::Semiring(std::string              name,
                     std::vector<std::string> ids,
                     std::vector<Index>       add,
                     std::vector<Index>       mul)
      : name_(std::move(name)),
        ids_(std::move(ids)),
        add_(std::move(add)),
        mul_(std::move(mul)) {
    check_ids(ids_, "semiring");
    std::size_t const n = ids_.size();
    check_table(add_, n * n, n, "add");
    check_table(mul_, n * n, n, "mul");
  }

  Semiring Semiring::renamed(std::string name) const {
    Semiring copy = *this;
    copy.name_    = std::move(name);
    return copy;
  }

  Semiring Semiring::with_mul(Index a, Index b, Index value) const {
    if (a >= size() || b >= size() || value >= size()) {
      throw StructuralError("mul cell out of range");
    }
    Semiring copy              = *this;
    copy.mul_[a * size() + b] = value;
    return copy;
  }

  ValidationOutcome validate_gamma_semiring(GammaSemiring const& g) {
    ValidationOutcome out;
    std::size_t const ns = g.s_size(), ng = g.g_size();
    auto add  = [&](Index a, Index b) { return g.add(a, b); };
    auto addg = [&](Index a, Index b) { return g.add_gamma(a, b); };
    auto p    = [&](Index a, Index al, Index b) { return g.product(a, al, b); };

    scan_monoid(out, "S.add", ns, add);
    scan_monoid(out, "G.add", ng, addg);

    scan<4>(out, "distributive.left", {ns, ns, ng, ns}, [&](auto t) {
      auto [a, b, al, c] = t;
      return p(add(a, b), al, c) == add(p(a, al, c), p(b, al, c));
    });
    scan<4>(out, "distributive.right", {ns, ng, ns, ns}, [&](auto t) {
      auto [a, al, b, c] = t;
      return p(a, al, add(b, c)) == add(p(a, al, b), p(a, al, c));
    });
    scan<4>(out, "distributive.gamma", {ns, ng, ng, ns}, [&](auto t) {
      auto [a, al, be, b] = t;
      return p(a, addg(al, be), b) == add(p(a, al, b), p(a, be, b));
    });
    scan<5>(out, "associative", {ns, ng, ns, ng, ns}, [&](auto t) {
      auto [a, al, b, be, c] = t;
      return p(a, al, p(b, be, c)) == p(p(a, al, b), be, c);
    });
    scan<2>(out, "zero.left", {ng, ns}, [&](auto t) {
      return p(0, t[0], t[1]) == 0;
    });
    scan<2>(out, "zero.right", {ns, ng}, [&](auto t) {
      return p(t[0], t[1], 0) == 0;
    });
    scan<2>(out, "zero.gamma", {ns, ns}, [&](auto t) {
      return p(t[0], 0, t[1]) == 0;
    });
    return out;
  }

  ValidationOutcome validate_semiring(Semiring const& r) {
    ValidationOutcome out;
    std::size_t const n   = r.size();
    auto              add = [&](Index a, Index b) { return r.add(a, b); };
    auto              mul = [&](Index a, Index b) { return r.mul(a, b); };

    scan_monoid(out, "add", n, add);
    scan<3>(out, "mul.associative", {n, n, n}, [&](auto t) {
      return mul(mul(t[0], t[1]), t[2]) == mul(t[0], mul(t[1], t[2]));
    });
    scan<3>(out, "distributive.left", {n, n, n}, [&](auto t) {
      return mul(t[0], add(t[1], t[2])) == add(mul(t[0], t[1]), mul(t[0], t[2]));
    });
    scan<3>(out, "distributive.right", {n, n, n}, [&](auto t) {
      return mul(add(t[0], t[1]), t[2]) == add(mul(t[0], t[2]), mul(t[1], t[2]));
    });
    scan<1>(out, "zero.absorbing", {n}, [&](auto t) {
      return mul(0, t[0]) == 0 && mul(t[0], 0) == 0;
    });
    return out;
  }

  std::uint64_t validation_cost(GammaSemiring const& g) {
    std::uint64_t const ns = g.s_size(), ng = g.g_size();
    return ns * ns * ns + ng * ng * ng + 2 * ns * ns * ng * ns
           + ns * ng * ng * ns + ns * ng * ns * ng * ns;
  }

  Check is_commutative(GammaSemiring const& g) {
    for (Index a = 0; a < g.s_size(); ++a) {
      for (Index al = 0; al < g.g_size(); ++al) {
        for (Index b = 0; b < g.s_size(); ++b) {
          if (g.product(a, al, b) != g.product(b, al, a)) {
            return {Verdict::no, {a, al, b}, {}};
          }
        }
      }
    }
    return {};
  }

  Check is_zdf(GammaSemiring const& g) {
    for (Index a = 1; a < g.s_size(); ++a) {
      for (Index al = 1; al < g.g_size(); ++al) {
        for (Index b = 1; b < g.s_size(); ++b) {
          if (g.product(a, al, b) == 0) {
            return {Verdict::no, {a, al, b}, {}};
          }
        }
      }
    }
    return {};
  }

  Check is_gamma_semifield(GammaSemiring const& g) {
    if (!is_commutative(g)) {
      return {Verdict::precondition_unmet, {}, "not commutative"};
    }
    if (g.s_size() == 1 || g.g_size() == 1) {
      return {Verdict::no, {}, "one-element carrier"};
    }
    std::size_t const ns = g.s_size(), ng = g.g_size();
    for (Index a = 1; a < ns; ++a) {
      for (Index al = 1; al < ng; ++al) {
        bool found = false;
        for (Index b = 0; b < ns && !found; ++b) {
          Index const ab = g.product(a, al, b);
          for (Index be = 0; be < ng && !found; ++be) {
            bool all = true;
            for (Index d = 0; d < ns && all; ++d) {
              all = g.product(ab, be, d) == d;
            }
            found = all;
          }
        }
        if (!found) {
          return {Verdict::no, {a, al}, {}};
        }
      }
    }
    return {};
  }

  bool is_mul_commutative(Semiring const& r) {
    for (Index a = 0; a < r.size(); ++a) {
      for (Index b = a + 1; b < r.size(); ++b) {
        if (r.mul(a, b) != r.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<bool> generated_ideal(Semiring const& r, Index x) {
    std::size_t const  n = r.size();
    std::vector<bool>  in(n, false);
    std::vector<Index> members;
    auto               insert = [&](Index y) {
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    };
    insert(0);
    insert(x);
    // Saturate: every member absorbs products on both sides and sums with
    // every other member.
    for (std::size_t i = 0; i < members.size(); ++i) {
      Index const m = members[i];
      for (Index s = 0; s < n; ++s) {
        insert(r.mul(s, m));
        insert(r.mul(m, s));
      }
      for (std::size_t j = 0; j <= i; ++j) {
        insert(r.add(m, members[j]));
      }
    }
    return in;
  }

  Check is_semifield(Semiring const& r) {
    if (!is_mul_commutative(r)) {
      return {Verdict::precondition_unmet, {}, "multiplication not commutative"};
    }
    if (r.size() == 1) {
      return {Verdict::no, {}, "one-element semiring"};
    }
    for (Index x = 1; x < r.size(); ++x) {
      auto ideal = generated_ideal(r, x);
      for (Index y = 0; y < r.size(); ++y) {
        if (!ideal[y]) {
          std::vector<Index> members;
          for (Index z = 0; z < r.size(); ++z) {
            if (ideal[z]) {
              members.push_back(z);
            }
          }
          return {Verdict::no, members, {}};
        }
      }
    }
    return {};
  }

  Check is_semifield_by_inverses(Semiring const& r) {
    if (!is_mul_commutative(r)) {
      return {Verdict::precondition_unmet, {}, "multiplication not commutative"};
    }
    std::size_t const n = r.size();
    if (n == 1) {
      return {Verdict::no, {}, "one-element semiring"};
    }
    std::optional<Index> identity;
    for (Index e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        ok = r.mul(e, x) == x && r.mul(x, e) == x;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      return {Verdict::precondition_unmet, {}, "no multiplicative identity"};
    }
    for (Index x = 1; x < n; ++x) {
      bool inverse = false;
      for (Index y = 0; y < n && !inverse; ++y) {
        inverse = r.mul(x, y) == *identity;
      }
      if (!inverse) {
        return {Verdict::no, {x}, {}};
      }
    }
    return {};
  }

  namespace {
    std::vector<std::string> numeric_ids(std::size_t n) {
      std::vector<std::string> ids;
      for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(std::to_string(i));
      }
      return ids;
    }
  }  // namespace

  GammaSemiring boolean_gamma_semiring() {
    std::vector<Index> add = {0, 1, 1, 1};
    std::vector<Index> prod(8, 0);
    prod[(1 * 2 + 1) * 2 + 1] = 1;
    return GammaSemiring("GB", numeric_ids(2), numeric_ids(2), add, add, prod);
  }

  GammaSemiring zn_gamma_semiring(std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("Z_n requires n >= 2");
    }
    std::vector<Index> add(n * n), prod(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = static_cast<Index>((a + b) % n);
        for (std::size_t c = 0; c < n; ++c) {
          prod[(a * n + b) * n + c] = static_cast<Index>((a * b * c) % n);
        }
      }
    }
    return GammaSemiring("Z" + std::to_string(n), numeric_ids(n),
                         numeric_ids(n), add, add, prod);
  }

  GammaSemiring gamma_semiring_from(Semiring const& r) {
    std::size_t const  n = r.size();
    std::vector<Index> prod(n * n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index al = 0; al < n; ++al) {
        for (Index b = 0; b < n; ++b) {
          prod[(a * n + al) * n + b] = r.mul(r.mul(a, al), b);
        }
      }
    }
    return GammaSemiring(r.name(), r.ids(), r.ids(), r.add_table(),
                         r.add_table(), prod);
  }

  Semiring boolean_semiring() {
    return Semiring("B", numeric_ids(2), {0, 1, 1, 1}, {0, 0, 0, 1});
  }

  Semiring zn_semiring(std::size_t n) {
    if (n < 2) {
      throw std::invalid_argument("Z_n requires n >= 2");
    }
    std::vector<Index> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = static_cast<Index>((a + b) % n);
        mul[a * n + b] = static_cast<Index>((a * b) % n);
      }
    }
    return Semiring("Z" + std::to_string(n), numeric_ids(n), add, mul);
  }

}  // namespace gammasr
