#include "gammasr/operators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gammasr {

  char const* to_string(Side side) noexcept {
    return side == Side::left ? "left" : "right";
  }

  Side parse_side(std::string_view text) {
    if (text == "left") {
      return Side::left;
    }
    if (text == "right") {
      return Side::right;
    }
    throw std::invalid_argument("unknown side '" + std::string(text) + "'");
  }

  ActionMap action_of_pair(GammaSemiring const& g, Term term, Side side) {
    ActionMap out(g.s_size());
    for (Index a = 0; a < g.s_size(); ++a) {
      out[a] = side == Side::left ? g.product(term.first, term.second, a)
                                  : g.product(a, term.first, term.second);
    }
    return out;
  }

  std::size_t OperatorSemiring::MapHash::operator()(ActionMap const& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : m) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  OperatorSemiring::OperatorSemiring(Side                           side,
                                     std::size_t                    base_size,
                                     std::size_t                    base_gamma_size,
                                     std::vector<ActionMap>         elements,
                                     std::vector<std::vector<Term>> provenance,
                                     Semiring                       semiring)
      : side_(side),
        base_size_(base_size),
        base_gamma_size_(base_gamma_size),
        elements_(std::move(elements)),
        provenance_(std::move(provenance)),
        semiring_(std::move(semiring)) {
    for (Index i = 0; i < elements_.size(); ++i) {
      index_.emplace(elements_[i], i);
    }
  }

  std::optional<Index> OperatorSemiring::find(ActionMap const& map) const {
    auto it = index_.find(map);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::string OperatorSemiring::describe(Index i, GammaSemiring const& g) const {
    std::string out;
    for (auto const& t : provenance_.at(i)) {
      if (!out.empty()) {
        out += '+';
      }
      if (side_ == Side::left) {
        out += "[" + g.s_ids()[t.first] + "," + g.g_ids()[t.second] + "]";
      } else {
        out += "[" + g.g_ids()[t.first] + "," + g.s_ids()[t.second] + "]";
      }
    }
    return out;
  }

  void OperatorSemiring::require_base(GammaSemiring const& g) const {
    if (g.s_size() != base_size_ || g.g_size() != base_gamma_size_) {
      throw std::invalid_argument("operator semiring was built from a different instance");
    }
  }

  OperatorSemiring build_operator_semiring(GammaSemiring const& g,
                                           Side                 side,
                                           ClosureLimits const& limits) {
    using Clock          = std::chrono::steady_clock;
    auto const  started  = Clock::now();
    std::size_t const ns = g.s_size();

    auto over_budget = [&] {
      return limits.time_budget.count() > 0
             && Clock::now() - started > limits.time_budget;
    };

    // Distinct single-pair actions, each with its lexicographically least term.
    std::vector<ActionMap> gen_maps;
    std::vector<Term>      gen_terms;
    {
      std::unordered_map<ActionMap, Index, OperatorSemiring::MapHash> seen;
      std::size_t const first_extent  = side == Side::left ? ns : g.g_size();
      std::size_t const second_extent = side == Side::left ? g.g_size() : ns;
      for (Index a = 0; a < first_extent; ++a) {
        for (Index b = 0; b < second_extent; ++b) {
          Term const t{a, b};
          auto       map = action_of_pair(g, t, side);
          if (seen.emplace(map, static_cast<Index>(gen_maps.size())).second) {
            gen_maps.push_back(std::move(map));
            gen_terms.push_back(t);
          }
        }
      }
    }

    std::vector<ActionMap>                                          maps;
    std::vector<std::vector<Term>>                                  prov;
    std::unordered_map<ActionMap, Index, OperatorSemiring::MapHash> known;
    std::vector<Index>                                              frontier;
    for (std::size_t i = 0; i < gen_maps.size(); ++i) {
      known.emplace(gen_maps[i], static_cast<Index>(maps.size()));
      frontier.push_back(static_cast<Index>(maps.size()));
      maps.push_back(gen_maps[i]);
      prov.push_back({gen_terms[i]});
    }
    if (maps.size() > limits.max_elements) {
      throw ResourceError("operator semiring closure exceeds "
                          + std::to_string(limits.max_elements) + " elements");
    }

    // Level k of the worklist holds the actions whose shortest generating
    // sum has k terms.
    ActionMap sum(ns);
    while (!frontier.empty()) {
      std::map<ActionMap, std::vector<Term>> fresh;
      for (auto f : frontier) {
        for (std::size_t j = 0; j < gen_maps.size(); ++j) {
          for (Index a = 0; a < ns; ++a) {
            sum[a] = g.add(maps[f][a], gen_maps[j][a]);
          }
          if (known.count(sum) != 0) {
            continue;
          }
          std::vector<Term> candidate = prov[f];
          candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), gen_terms[j]),
                           gen_terms[j]);
          auto [it, inserted] = fresh.emplace(sum, candidate);
          if (!inserted && candidate < it->second) {
            it->second = std::move(candidate);
          }
        }
        if (over_budget()) {
          throw ResourceError("operator semiring closure exceeded its time budget");
        }
      }
      frontier.clear();
      for (auto& [map, terms] : fresh) {
        if (maps.size() >= limits.max_elements) {
          throw ResourceError("operator semiring closure exceeds "
                              + std::to_string(limits.max_elements) + " elements");
        }
        known.emplace(map, static_cast<Index>(maps.size()));
        frontier.push_back(static_cast<Index>(maps.size()));
        maps.push_back(map);
        prov.push_back(std::move(terms));
      }
    }

    std::vector<Index> order(maps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Index x, Index y) { return maps[x] < maps[y]; });

    std::vector<ActionMap>         elements;
    std::vector<std::vector<Term>> provenance;
    std::unordered_map<ActionMap, Index, OperatorSemiring::MapHash> position;
    for (auto i : order) {
      position.emplace(maps[i], static_cast<Index>(elements.size()));
      elements.push_back(std::move(maps[i]));
      provenance.push_back(std::move(prov[i]));
    }

    std::size_t const  n = elements.size();
    std::vector<Index> add(n * n), mul(n * n);
    ActionMap          tmp(ns);
    auto               lookup = [&](ActionMap const& m) {
      auto it = position.find(m);
      if (it == position.end()) {
        throw std::logic_error("operator semiring is not closed");
      }
      return it->second;
    };
    for (Index f = 0; f < n; ++f) {
      for (Index h = 0; h < n; ++h) {
        for (Index a = 0; a < ns; ++a) {
          tmp[a] = g.add(elements[f][a], elements[h][a]);
        }
        add[f * n + h] = lookup(tmp);
        for (Index a = 0; a < ns; ++a) {
          tmp[a] = side == Side::left ? elements[f][elements[h][a]]
                                      : elements[h][elements[f][a]];
        }
        mul[f * n + h] = lookup(tmp);
      }
    }

    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("f" + std::to_string(i));
    }
    std::string name = g.name() + (side == Side::left ? ".L" : ".R");
    return OperatorSemiring(side, ns, g.g_size(), std::move(elements), std::move(provenance),
                            Semiring(std::move(name), std::move(ids), std::move(add),
                                     std::move(mul)));
  }

  std::optional<Index> find_unity(GammaSemiring const& g, OperatorSemiring const& op) {
    op.require_base(g);
    ActionMap identity(g.s_size());
    std::iota(identity.begin(), identity.end(), 0);
    return op.find(identity);
  }

  CrispSubset plus_set(GammaSemiring const&    g,
                       OperatorSemiring const& op,
                       CrispSubset const&      p) {
    op.require_base(g);
    if (p.carrier_size() != op.size()) {
      throw std::invalid_argument("subset does not live on the operator semiring");
    }
    CrispSubset out(g.s_size());
    for (Index a = 0; a < g.s_size(); ++a) {
      bool all = true;
      for (Index gamma = 0; gamma < g.g_size() && all; ++gamma) {
        Term const t  = op.side() == Side::left ? Term{a, gamma} : Term{gamma, a};
        auto const ix = op.find(action_of_pair(g, t, op.side()));
        all           = ix && p.contains(*ix);
      }
      if (all) {
        out.insert(a);
      }
    }
    return out;
  }

  CrispSubset plusprime_set(GammaSemiring const&    g,
                            OperatorSemiring const& op,
                            CrispSubset const&      q) {
    op.require_base(g);
    if (q.carrier_size() != g.s_size()) {
      throw std::invalid_argument("subset does not live on S");
    }
    CrispSubset out(op.size());
    for (Index f = 0; f < op.size(); ++f) {
      // All finite sums of values of f.
      std::vector<bool>  reached(g.s_size(), false);
      std::vector<Index> values;
      for (auto v : op.element(f)) {
        if (!reached[v]) {
          reached[v] = true;
          values.push_back(v);
        }
      }
      std::vector<Index> const images = values;
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (auto v : images) {
          Index const s = g.add(values[i], v);
          if (!reached[s]) {
            reached[s] = true;
            values.push_back(s);
          }
        }
      }
      if (std::all_of(values.begin(), values.end(), [&](Index v) { return q.contains(v); })) {
        out.insert(f);
      }
    }
    return out;
  }

  CrispSubset plusprime_set_pointwise(OperatorSemiring const& op, CrispSubset const& q) {
    if (q.carrier_size() != op.base_size()) {
      throw std::invalid_argument("subset does not live on S");
    }
    CrispSubset out(op.size());
    for (Index f = 0; f < op.size(); ++f) {
      auto const& m = op.element(f);
      if (std::all_of(m.begin(), m.end(), [&](Index v) { return q.contains(v); })) {
        out.insert(f);
      }
    }
    return out;
  }

  namespace {
    void require_right(OperatorSemiring const& op) {
      if (op.side() != Side::right) {
        throw std::invalid_argument("expected the right operator semiring");
      }
    }
  }  // namespace

  CrispSubset star_set(GammaSemiring const& g, OperatorSemiring const& right, CrispSubset const& p) {
    require_right(right);
    return plus_set(g, right, p);
  }

  CrispSubset starprime_set(GammaSemiring const&    g,
                            OperatorSemiring const& right,
                            CrispSubset const&      q) {
    require_right(right);
    return plusprime_set(g, right, q);
  }

}  // namespace gammasr
