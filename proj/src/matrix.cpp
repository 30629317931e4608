#include "gammasr/matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "gammasr/transfer.hpp"

namespace gammasr {

  using json = nlohmann::ordered_json;

  MatrixCodec::MatrixCodec(std::size_t base, std::size_t n, std::size_t cap)
      : base_(base), n_(n), count_(1) {
    if (n == 0) {
      throw std::invalid_argument("matrix size must be positive");
    }
    for (std::size_t i = 0; i < n * n; ++i) {
      if (count_ > cap / std::max<std::size_t>(base, 1)) {
        throw ResourceError("matrix carrier " + std::to_string(base) + "^"
                            + std::to_string(n * n) + " exceeds cap "
                            + std::to_string(cap));
      }
      count_ *= base;
    }
  }

  std::vector<Index> MatrixCodec::decode(Index k) const {
    std::vector<Index> entries(n_ * n_);
    for (std::size_t i = entries.size(); i-- > 0;) {
      entries[i] = static_cast<Index>(k % base_);
      k          = static_cast<Index>(k / base_);
    }
    return entries;
  }

  Index MatrixCodec::encode(std::span<Index const> entries) const {
    std::size_t k = 0;
    for (auto e : entries) {
      k = k * base_ + e;
    }
    return static_cast<Index>(k);
  }

  namespace {

    std::vector<std::string> matrix_ids(std::size_t count) {
      std::vector<std::string> ids;
      ids.reserve(count);
      for (std::size_t k = 0; k < count; ++k) {
        ids.push_back("m" + std::to_string(k));
      }
      return ids;
    }

    std::vector<std::vector<Index>> decode_all(MatrixCodec const& codec) {
      std::vector<std::vector<Index>> out;
      out.reserve(codec.count());
      for (std::size_t k = 0; k < codec.count(); ++k) {
        out.push_back(codec.decode(static_cast<Index>(k)));
      }
      return out;
    }

    template <typename Add>
    std::vector<Index> entrywise_table(MatrixCodec const&                     codec,
                                       std::vector<std::vector<Index>> const& decoded,
                                       Add                                    add) {
      std::size_t const  count = codec.count();
      std::vector<Index> table(count * count);
      std::vector<Index> sum(codec.n() * codec.n());
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
          for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] = add(decoded[a][i], decoded[b][i]);
          }
          table[a * count + b] = codec.encode(sum);
        }
      }
      return table;
    }

    std::string matrix_name(std::string const& base, std::size_t n) {
      return "M" + std::to_string(n) + "(" + base + ")";
    }

  }  // namespace

  MatrixGammaSemiring build_matrix_gamma(GammaSemiring const& base, std::size_t n, std::size_t cap) {
    MatrixCodec const s_codec(base.s_size(), n, cap);
    MatrixCodec const g_codec(base.g_size(), n, cap);
    auto const        s_mats = decode_all(s_codec);
    auto const        g_mats = decode_all(g_codec);
    std::size_t const ns     = s_codec.count();
    std::size_t const ng     = g_codec.count();

    auto add_s = entrywise_table(s_codec, s_mats, [&](Index x, Index y) { return base.add(x, y); });
    auto add_g = entrywise_table(g_codec, g_mats,
                                 [&](Index x, Index y) { return base.add_gamma(x, y); });

    std::vector<Index> product(ns * ng * ns);
    std::vector<Index> entries(n * n);
    for (std::size_t a = 0; a < ns; ++a) {
      auto const& A = s_mats[a];
      for (std::size_t d = 0; d < ng; ++d) {
        auto const& D = g_mats[d];
        for (std::size_t b = 0; b < ns; ++b) {
          auto const& B = s_mats[b];
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              Index acc = 0;
              for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                  acc = base.add(acc, base.product(A[i * n + k], D[k * n + l], B[l * n + j]));
                }
              }
              entries[i * n + j] = acc;
            }
          }
          product[(a * ng + d) * ns + b] = s_codec.encode(entries);
        }
      }
    }
    GammaSemiring ring(matrix_name(base.name(), n), matrix_ids(ns), matrix_ids(ng), std::move(add_s),
                       std::move(add_g), std::move(product));
    return MatrixGammaSemiring{base, n, s_codec, g_codec, std::move(ring)};
  }

  Semiring build_matrix_semiring(Semiring const& r, std::size_t n, std::size_t cap) {
    MatrixCodec const codec(r.size(), n, cap);
    auto const        mats  = decode_all(codec);
    std::size_t const count = codec.count();
    auto add = entrywise_table(codec, mats, [&](Index x, Index y) { return r.add(x, y); });

    std::vector<Index> mul(count * count);
    std::vector<Index> entries(n * n);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            Index acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
              acc = r.add(acc, r.mul(mats[a][i * n + k], mats[b][k * n + j]));
            }
            entries[i * n + j] = acc;
          }
        }
        mul[a * count + b] = codec.encode(entries);
      }
    }
    return Semiring(matrix_name(r.name(), n), matrix_ids(count), std::move(add), std::move(mul));
  }

  FuzzySubset lift_fuzzy_to_matrix(MatrixGammaSemiring const& m, FuzzySubset const& mu) {
    if (mu.size() != m.base.s_size()) {
      throw std::invalid_argument("fuzzy subset size does not match the base carrier");
    }
    FuzzySubset out(m.s_codec.count());
    for (std::size_t k = 0; k < m.s_codec.count(); ++k) {
      Grade g = Grade::one();
      for (auto e : m.s_codec.decode(static_cast<Index>(k))) {
        g = std::min(g, mu[e]);
      }
      out[k] = g;
    }
    return out;
  }

  VerificationReport verify_matrix_instance(GammaSemiring const& base, VerifyConfig const& cfg) {
    VerificationReport rep;
    rep.suite    = "matrix";
    rep.instance = base.name();
    auto const start = std::chrono::steady_clock::now();
    auto finish = [&] { rep.elapsed = std::chrono::steady_clock::now() - start; };

    auto const m = build_matrix_gamma(base, cfg.n, cfg.matrix_cap);
    rep.note("n = " + std::to_string(cfg.n));
    rep.add_count("S_n", m.ring.s_size());
    rep.add_count("G_n", m.ring.g_size());
    auto const cost = validation_cost(m.ring);
    rep.add_count("axiom_tuples", cost);
    if (cost > cfg.validation_budget) {
      rep.unmet("axiom scan needs " + std::to_string(cost) + " tuple evaluations, budget is "
                + std::to_string(cfg.validation_budget));
      finish();
      return rep;
    }
    auto const outcome = validate_gamma_semiring(m.ring);
    if (!outcome.ok()) {
      auto const& v = outcome.violations.front();
      json        w = json::array();
      for (auto x : v.witness) {
        w.push_back("m" + std::to_string(x));
      }
      rep.fail({{"axiom", v.axiom}, {"witness", w}});
    } else {
      rep.note("matrix Gamma-semiring axioms hold");
    }
    finish();
    return rep;
  }

  VerificationReport check_operator_matrix_iso(GammaSemiring const& base,
                                               std::size_t          n,
                                               Side                 side,
                                               VerifyConfig const&  cfg) {
    VerificationReport rep;
    rep.suite        = std::string("matrix.iso/") + to_string(side);
    rep.instance     = base.name();
    auto const start = std::chrono::steady_clock::now();

    auto const        m     = build_matrix_gamma(base, n, cfg.matrix_cap);
    auto const        opm   = build_operator_semiring(m.ring, side, cfg.closure);
    auto const        opb   = build_operator_semiring(base, side, cfg.closure);
    auto const        mats  = build_matrix_semiring(opb.semiring(), n, cfg.matrix_cap);
    MatrixCodec const codec(opb.size(), n, cfg.matrix_cap);
    bool const        left  = side == Side::left;
    std::size_t const cells = n * n;
    rep.add_count("operators_S_n", opm.size());
    rep.add_count("matrices_over_operators", mats.size());

    // Base operator element of a single pair.
    auto pair_element = [&](Index first, Index second) {
      auto const found = opb.find(action_of_pair(base, Term{first, second}, side));
      if (!found) {
        throw std::logic_error("single-pair action missing from operator closure");
      }
      return *found;
    };

    // Image of a matrix generator: [X, D] -> (sum_t [x_ut, d_tk])_{u,k} on the
    // left, [D, X] -> (sum_t [d_jt, x_tv])_{j,v} on the right.
    auto generator_image = [&](Term term) {
      auto const first  = left ? m.s_codec.decode(term.first) : m.g_codec.decode(term.first);
      auto const second = left ? m.g_codec.decode(term.second) : m.s_codec.decode(term.second);
      std::vector<Index> entries(cells);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Index acc = OperatorSemiring::zero();
          for (std::size_t t = 0; t < n; ++t) {
            acc = opb.add(acc, pair_element(first[i * n + t], second[t * n + j]));
          }
          entries[i * n + j] = acc;
        }
      }
      return codec.encode(entries);
    };

    // Joint additive closure of (operator of S_n, matrix) pairs started from
    // the generator pairs. A consistent closure is the graph of the mapping.
    std::vector<std::optional<Index>> image(opm.size());
    std::vector<std::optional<Index>> preimage(mats.size());
    std::vector<std::pair<Index, Index>> pairs;
    bool consistent = true;
    auto insert = [&](Index f, Index mat, json const& origin) {
      if (image[f] && *image[f] == mat) {
        return;
      }
      if (image[f] || preimage[mat]) {
        consistent = false;
        rep.fail({{"clause", image[f] ? "well-defined" : "injective"},
                  {"operator", opm.semiring().ids()[f]},
                  {"matrix", mats.ids()[mat]},
                  {"conflict", image[f] ? mats.ids()[*image[f]] : opm.semiring().ids()[*preimage[mat]]},
                  {"origin", origin}});
        return;
      }
      image[f]      = mat;
      preimage[mat] = f;
      pairs.emplace_back(f, mat);
    };

    std::size_t const s_count = m.s_codec.count();
    std::size_t const g_count = m.g_codec.count();
    std::size_t const generators = s_count * g_count;
    rep.add_count("generators", generators);
    for (std::size_t a = 0; a < (left ? s_count : g_count) && consistent; ++a) {
      for (std::size_t b = 0; b < (left ? g_count : s_count) && consistent; ++b) {
        Term const term{static_cast<Index>(a), static_cast<Index>(b)};
        auto const f = opm.find(action_of_pair(m.ring, term, side));
        if (!f) {
          throw std::logic_error("generator action missing from operator closure");
        }
        insert(*f, generator_image(term), json{{"generator", json::array({"m" + std::to_string(a), "m" + std::to_string(b)})}});
      }
    }
    for (std::size_t w = 0; w < pairs.size() && consistent; ++w) {
      for (std::size_t u = 0; u <= w && consistent; ++u) {
        auto const [f1, m1] = pairs[w];
        auto const [f2, m2] = pairs[u];
        insert(opm.add(f1, f2), mats.add(m1, m2), json{{"sum_of", json::array({opm.semiring().ids()[f1], opm.semiring().ids()[f2]})}});
      }
    }
    if (!consistent) {
      rep.elapsed = std::chrono::steady_clock::now() - start;
      return rep;
    }

    if (pairs.size() != opm.size() || pairs.size() != mats.size()) {
      json missing = nullptr;
      for (std::size_t k = 0; k < mats.size(); ++k) {
        if (!preimage[k]) {
          missing = mats.ids()[k];
          break;
        }
      }
      rep.fail({{"clause", "bijective"},
                {"closure_pairs", pairs.size()},
                {"operators", opm.size()},
                {"matrices", mats.size()},
                {"missing_matrix", missing}});
      rep.elapsed = std::chrono::steady_clock::now() - start;
      return rep;
    }

    if (*image[OperatorSemiring::zero()] != 0) {
      rep.fail({{"clause", "zero"}, {"image", mats.ids()[*image[0]]}});
    }
    std::uint64_t checks = 0;
    for (Index f = 0; f < opm.size(); ++f) {
      for (Index g = 0; g < opm.size(); ++g) {
        checks += 2;
        if (*image[opm.add(f, g)] != mats.add(*image[f], *image[g])) {
          rep.fail({{"clause", "additive"},
                    {"f", opm.semiring().ids()[f]},
                    {"g", opm.semiring().ids()[g]}});
        }
        if (*image[opm.mul(f, g)] != mats.mul(*image[f], *image[g])) {
          rep.fail({{"clause", "multiplicative"},
                    {"f", opm.semiring().ids()[f]},
                    {"g", opm.semiring().ids()[g]}});
        }
      }
    }

    // The matrix image acts on S_n like the operator it comes from.
    auto const s_mats = decode_all(m.s_codec);
    for (Index f = 0; f < opm.size(); ++f) {
      auto const M = codec.decode(*image[f]);
      for (std::size_t a = 0; a < s_count; ++a) {
        auto const&        A = s_mats[a];
        std::vector<Index> out(cells);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t v = 0; v < n; ++v) {
            Index acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
              acc = left ? base.add(acc, opb.element(M[i * n + k])[A[k * n + v]])
                         : base.add(acc, opb.element(M[k * n + v])[A[i * n + k]]);
            }
            out[i * n + v] = acc;
          }
        }
        ++checks;
        if (m.s_codec.encode(out) != opm.element(f)[a]) {
          rep.fail({{"clause", "action"},
                    {"operator", opm.semiring().ids()[f]},
                    {"matrix", mats.ids()[*image[f]]},
                    {"argument", m.ring.s_ids()[a]}});
        }
      }
    }
    rep.add_count("checks", checks);
    rep.note(std::to_string(opm.size()) + " operators of " + m.ring.name() + " <-> "
             + std::to_string(mats.size()) + " matrices over " + opb.semiring().name());
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
  }

  VerificationReport verify_matrix_fuzzy_bijection(GammaSemiring const& base,
                                                   std::size_t          n,
                                                   GradeChain const&    chain,
                                                   VerifyConfig const&  cfg) {
    VerificationReport rep;
    rep.suite        = "th3.19";
    rep.instance     = base.name();
    rep.chain        = chain;
    auto const start = std::chrono::steady_clock::now();

    auto const m    = build_matrix_gamma(base, n, cfg.matrix_cap);
    auto const fi_s = enumerate_fuzzy_ideals(base, chain, IdealKind::two_sided, cfg.enumeration);
    rep.note("n = " + std::to_string(n));
    rep.add_count("fi_S", fi_s.size());

    std::vector<FuzzySubset> images;
    for (auto const& mu : fi_s) {
      images.push_back(lift_fuzzy_to_matrix(m, mu));
      if (!is_fuzzy_ideal(m.ring, images.back(), IdealKind::two_sided)
          || images.back()[0] != Grade::one()) {
        rep.fail({{"clause", "into"}, {"mu", grades_json(mu)}});
      }
    }
    for (std::size_t i = 0; i < fi_s.size(); ++i) {
      for (std::size_t j = 0; j < fi_s.size(); ++j) {
        if (i != j && images[i] == images[j]) {
          rep.fail({{"clause", "injective"},
                    {"mu1", grades_json(fi_s[i])},
                    {"mu2", grades_json(fi_s[j])}});
        }
        if (included_in(fi_s[i], fi_s[j]) != included_in(images[i], images[j])) {
          rep.fail({{"clause", "inclusion"},
                    {"mu1", grades_json(fi_s[i])},
                    {"mu2", grades_json(fi_s[j])}});
        }
      }
    }

    auto const candidates = candidate_count(chain.size(), m.ring.s_size());
    if (candidates > cfg.enumeration.cap) {
      rep.note("candidate space " + std::to_string(candidates) + " exceeds cap "
               + std::to_string(cfg.enumeration.cap));
      rep.unmet("injective + inclusion-preserving verified; surjectivity skipped (cap)");
    } else {
      auto const fi_n = enumerate_fuzzy_ideals(m.ring, chain, IdealKind::two_sided, cfg.enumeration);
      rep.add_count("fi_S_n", fi_n.size());
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != fi_n) {
        json missing = nullptr;
        for (auto const& mu : fi_n) {
          if (!std::binary_search(sorted.begin(), sorted.end(), mu)) {
            missing = grades_json(mu);
            break;
          }
        }
        rep.fail({{"clause", "surjective"}, {"missing", missing}});
      }
      rep.note("direct map mu -> mu_n: " + std::string(sorted == fi_n ? "bijective" : "not onto"));
      rep.note("cardinality: |FI(S)| = " + std::to_string(fi_s.size()) + ", |FI(S_n)| = "
               + std::to_string(fi_n.size()) + (fi_s.size() == fi_n.size() ? " (equal)" : " (differ)"));
    }
    if (std::uint64_t{1} << std::min<std::size_t>(63, m.ring.s_size() - 1) <= cfg.enumeration.cap
        && m.ring.s_size() <= 64) {
      rep.add_count("crisp_S", enumerate_crisp_ideals(base, IdealKind::two_sided).size());
      rep.add_count("crisp_S_n",
                    enumerate_crisp_ideals(m.ring, IdealKind::two_sided, cfg.enumeration.cap).size());
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
  }

}  // namespace gammasr
