#include "gammasr/fuzzy.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>

namespace gammasr {

  char const* to_string(IdealKind kind) noexcept {
    switch (kind) {
      case IdealKind::left:
        return "left";
      case IdealKind::right:
        return "right";
      case IdealKind::two_sided:
        return "two";
    }
    return "?";
  }

  IdealKind parse_ideal_kind(std::string_view text) {
    if (text == "left") {
      return IdealKind::left;
    }
    if (text == "right") {
      return IdealKind::right;
    }
    if (text == "two" || text == "two-sided") {
      return IdealKind::two_sided;
    }
    throw std::invalid_argument("unknown ideal kind '" + std::string(text) + "'");
  }

  bool FuzzySubset::is_constant() const {
    return std::adjacent_find(grades_.begin(), grades_.end(), std::not_equal_to<>())
           == grades_.end();
  }

  bool FuzzySubset::is_nonempty() const {
    return std::any_of(grades_.begin(), grades_.end(),
                       [](Grade const& g) { return g != Grade::zero(); });
  }

  std::string FuzzySubset::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < grades_.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += grades_[i].to_string();
    }
    return out + ")";
  }

  namespace {
    void require_same_size(std::size_t a, std::size_t b) {
      if (a != b) {
        throw std::invalid_argument("fuzzy subsets live on different carriers ("
                                    + std::to_string(a) + " vs "
                                    + std::to_string(b) + " elements)");
      }
    }
  }  // namespace

  bool included_in(FuzzySubset const& x, FuzzySubset const& y) {
    require_same_size(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) {
        return false;
      }
    }
    return true;
  }

  CrispSubset CrispSubset::of(std::size_t n, std::initializer_list<Index> members) {
    CrispSubset out(n);
    for (auto m : members) {
      if (m >= n) {
        throw std::out_of_range("crisp subset member out of range");
      }
      out.insert(m);
    }
    return out;
  }

  std::size_t CrispSubset::count() const {
    return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
  }

  std::vector<Index> CrispSubset::members() const {
    std::vector<Index> out;
    for (Index i = 0; i < members_.size(); ++i) {
      if (members_[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool CrispSubset::subset_of(CrispSubset const& other) const {
    require_same_size(carrier_size(), other.carrier_size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] && !other.members_[i]) {
        return false;
      }
    }
    return true;
  }

  std::string CrispSubset::to_string(std::vector<std::string> const& ids) const {
    std::string out = "{";
    bool        first = true;
    for (auto m : members()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += ids.at(m);
    }
    return out + "}";
  }

  FuzzySubset characteristic(CrispSubset const& subset) {
    FuzzySubset out(subset.carrier_size());
    for (Index i = 0; i < subset.carrier_size(); ++i) {
      if (subset.contains(i)) {
        out[i] = Grade::one();
      }
    }
    return out;
  }

  FuzzySubset fuzzy_intersection(std::span<FuzzySubset const> family) {
    if (family.empty()) {
      throw std::invalid_argument("intersection of an empty family");
    }
    FuzzySubset out = family.front();
    for (auto const& mu : family.subspan(1)) {
      require_same_size(out.size(), mu.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::min(out[i], mu[i]);
      }
    }
    return out;
  }

  FuzzySubset fuzzy_intersection(FuzzySubset const& x, FuzzySubset const& y) {
    FuzzySubset const family[] = {x, y};
    return fuzzy_intersection(family);
  }

  namespace {
    template <typename Add>
    FuzzySubset sum_over(std::size_t        n,
                         Add&&              add,
                         FuzzySubset const& x,
                         FuzzySubset const& y) {
      require_same_size(x.size(), n);
      require_same_size(y.size(), n);
      // Every z = z + 0 decomposes, so the maximum is over a non-empty set.
      FuzzySubset out(n);
      for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
          Index const z = add(u, v);
          out[z]        = std::max(out[z], std::min(x[u], y[v]));
        }
      }
      return out;
    }
  }  // namespace

  FuzzySubset fuzzy_sum(GammaSemiring const& g,
                        FuzzySubset const&   x,
                        FuzzySubset const&   y) {
    return sum_over(
        g.s_size(), [&](Index u, Index v) { return g.add(u, v); }, x, y);
  }

  FuzzySubset fuzzy_sum(Semiring const& r, FuzzySubset const& x, FuzzySubset const& y) {
    return sum_over(
        r.size(), [&](Index u, Index v) { return r.add(u, v); }, x, y);
  }

  bool is_fuzzy_ideal(GammaSemiring const& g, FuzzySubset const& mu, IdealKind kind) {
    require_same_size(mu.size(), g.s_size());
    if (!mu.is_nonempty()) {
      return false;
    }
    std::size_t const ns = g.s_size(), ng = g.g_size();
    for (Index x = 0; x < ns; ++x) {
      for (Index y = 0; y < ns; ++y) {
        if (mu[g.add(x, y)] < std::min(mu[x], mu[y])) {
          return false;
        }
        for (Index gamma = 0; gamma < ng; ++gamma) {
          Grade const p = mu[g.product(x, gamma, y)];
          if (kind != IdealKind::right && p < mu[y]) {
            return false;
          }
          if (kind != IdealKind::left && p < mu[x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_fuzzy_ideal(Semiring const& r, FuzzySubset const& mu, IdealKind kind) {
    require_same_size(mu.size(), r.size());
    if (!mu.is_nonempty()) {
      return false;
    }
    for (Index x = 0; x < r.size(); ++x) {
      for (Index y = 0; y < r.size(); ++y) {
        if (mu[r.add(x, y)] < std::min(mu[x], mu[y])) {
          return false;
        }
        Grade const p = mu[r.mul(x, y)];
        if (kind != IdealKind::right && p < mu[y]) {
          return false;
        }
        if (kind != IdealKind::left && p < mu[x]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_crisp_ideal(GammaSemiring const& g, CrispSubset const& subset, IdealKind kind) {
    require_same_size(subset.carrier_size(), g.s_size());
    if (!subset.contains(0)) {
      return false;
    }
    auto const members = subset.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!subset.contains(g.add(x, y))) {
          return false;
        }
      }
      for (Index s = 0; s < g.s_size(); ++s) {
        for (Index gamma = 0; gamma < g.g_size(); ++gamma) {
          if (kind != IdealKind::right && !subset.contains(g.product(s, gamma, x))) {
            return false;
          }
          if (kind != IdealKind::left && !subset.contains(g.product(x, gamma, s))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_crisp_ideal(Semiring const& r, CrispSubset const& subset, IdealKind kind) {
    require_same_size(subset.carrier_size(), r.size());
    if (!subset.contains(0)) {
      return false;
    }
    auto const members = subset.members();
    for (auto x : members) {
      for (auto y : members) {
        if (!subset.contains(r.add(x, y))) {
          return false;
        }
      }
      for (Index s = 0; s < r.size(); ++s) {
        if (kind != IdealKind::right && !subset.contains(r.mul(s, x))) {
          return false;
        }
        if (kind != IdealKind::left && !subset.contains(r.mul(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    void dedupe(IdealConstraints& c) {
      auto add_key = [](auto const& a) { return std::tuple(a.lhs, a.rhs, a.sum); };
      std::sort(c.additive.begin(), c.additive.end(),
                [&](auto const& a, auto const& b) { return add_key(a) < add_key(b); });
      c.additive.erase(std::unique(c.additive.begin(), c.additive.end(),
                                   [&](auto const& a, auto const& b) {
                                     return add_key(a) == add_key(b);
                                   }),
                       c.additive.end());
      auto abs_key = [](auto const& a) { return std::pair(a.target, a.source); };
      std::sort(c.absorb.begin(), c.absorb.end(),
                [&](auto const& a, auto const& b) { return abs_key(a) < abs_key(b); });
      c.absorb.erase(std::unique(c.absorb.begin(), c.absorb.end(),
                                 [&](auto const& a, auto const& b) {
                                   return abs_key(a) == abs_key(b);
                                 }),
                     c.absorb.end());
      // target >= source is vacuous when they coincide
      std::erase_if(c.absorb, [](auto const& a) { return a.target == a.source; });
    }
  }  // namespace

  IdealConstraints ideal_constraints(GammaSemiring const& g, IdealKind kind) {
    IdealConstraints c;
    c.carrier_size = g.s_size();
    for (Index x = 0; x < g.s_size(); ++x) {
      for (Index y = x; y < g.s_size(); ++y) {
        c.additive.push_back({x, y, g.add(x, y)});
      }
      for (Index gamma = 0; gamma < g.g_size(); ++gamma) {
        for (Index y = 0; y < g.s_size(); ++y) {
          Index const p = g.product(x, gamma, y);
          if (kind != IdealKind::right) {
            c.absorb.push_back({p, y});
          }
          if (kind != IdealKind::left) {
            c.absorb.push_back({p, x});
          }
        }
      }
    }
    dedupe(c);
    return c;
  }

  IdealConstraints ideal_constraints(Semiring const& r, IdealKind kind) {
    IdealConstraints c;
    c.carrier_size = r.size();
    for (Index x = 0; x < r.size(); ++x) {
      for (Index y = 0; y < r.size(); ++y) {
        if (y >= x) {
          c.additive.push_back({x, y, r.add(x, y)});
        }
        Index const p = r.mul(x, y);
        if (kind != IdealKind::right) {
          c.absorb.push_back({p, y});
        }
        if (kind != IdealKind::left) {
          c.absorb.push_back({p, x});
        }
      }
    }
    dedupe(c);
    return c;
  }

  std::uint64_t candidate_count(std::size_t chain_size, std::size_t carrier_size) {
    std::uint64_t total = 1;
    for (std::size_t i = 1; i < carrier_size; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / chain_size) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= chain_size;
    }
    return total;
  }

  namespace {

    // Depth-first assignment of chain indices to carrier positions 1..n-1.
    // Each constraint is checked at the position of its largest index, which
    // is the first moment all its grades are known.
    class IdealSearch {
     public:
      IdealSearch(IdealConstraints const& c, GradeChain const& chain)
          : chain_(chain), n_(c.carrier_size), additive_at_(n_), absorb_at_(n_) {
        for (auto const& a : c.additive) {
          additive_at_[std::max({a.lhs, a.rhs, a.sum})].push_back(a);
        }
        for (auto const& a : c.absorb) {
          absorb_at_[std::max(a.target, a.source)].push_back(a);
        }
      }

      // Runs the search with position 1 fixed to `first` (or free when
      // `first` is npos) and appends solutions to `out`.
      void run(std::size_t first, std::vector<FuzzySubset>& out) {
        std::vector<std::size_t> level(n_, 0);
        level[0] = chain_.size() - 1;
        if (!consistent(level, 0)) {
          return;
        }
        if (n_ == 1) {
          emit(level, out);
          return;
        }
        descend(level, 1, first, out);
      }

     private:
      bool consistent(std::vector<std::size_t> const& level, std::size_t pos) const {
        for (auto const& a : additive_at_[pos]) {
          if (level[a.sum] < std::min(level[a.lhs], level[a.rhs])) {
            return false;
          }
        }
        for (auto const& a : absorb_at_[pos]) {
          if (level[a.target] < level[a.source]) {
            return false;
          }
        }
        return true;
      }

      void descend(std::vector<std::size_t>& level,
                   std::size_t               pos,
                   std::size_t               fixed,
                   std::vector<FuzzySubset>& out) const {
        std::size_t lo = 0, hi = chain_.size();
        if (pos == 1 && fixed != npos) {
          lo = fixed;
          hi = fixed + 1;
        }
        for (std::size_t v = lo; v < hi; ++v) {
          level[pos] = v;
          if (!consistent(level, pos)) {
            continue;
          }
          if (pos + 1 == n_) {
            emit(level, out);
          } else {
            descend(level, pos + 1, fixed, out);
          }
        }
      }

      void emit(std::vector<std::size_t> const& level,
                std::vector<FuzzySubset>&       out) const {
        FuzzySubset mu(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          mu[i] = chain_[level[i]];
        }
        out.push_back(std::move(mu));
      }

     public:
      static constexpr std::size_t npos = static_cast<std::size_t>(-1);

     private:
      GradeChain const&                                  chain_;
      std::size_t                                        n_;
      std::vector<std::vector<IdealConstraints::Additive>> additive_at_;
      std::vector<std::vector<IdealConstraints::Absorb>>   absorb_at_;
    };

  }  // namespace

  std::vector<FuzzySubset> enumerate_fuzzy_ideals(IdealConstraints const&  constraints,
                                                  GradeChain const&        chain,
                                                  EnumerationLimits const& limits) {
    std::uint64_t const candidates = candidate_count(chain.size(), constraints.carrier_size);
    if (candidates > limits.cap) {
      throw ResourceError("fuzzy ideal enumeration needs " + std::to_string(candidates)
                          + " candidates, cap is " + std::to_string(limits.cap));
    }
    IdealSearch              search(constraints, chain);
    std::vector<FuzzySubset> out;
    if (limits.workers <= 1 || constraints.carrier_size < 2) {
      search.run(IdealSearch::npos, out);
      return out;
    }
    // Partition on the grade of element 1; concatenating partitions in grade
    // order preserves the lexicographic output order.
    std::vector<std::future<std::vector<FuzzySubset>>> parts;
    for (std::size_t v = 0; v < chain.size(); ++v) {
      parts.push_back(std::async(std::launch::async, [&search, v] {
        std::vector<FuzzySubset> part;
        search.run(v, part);
        return part;
      }));
    }
    for (auto& part : parts) {
      auto chunk = part.get();
      out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    }
    return out;
  }

  std::vector<FuzzySubset> enumerate_fuzzy_ideals(GammaSemiring const&     g,
                                                  GradeChain const&        chain,
                                                  IdealKind                kind,
                                                  EnumerationLimits const& limits) {
    return enumerate_fuzzy_ideals(ideal_constraints(g, kind), chain, limits);
  }

  std::vector<FuzzySubset> enumerate_fuzzy_ideals(Semiring const&          r,
                                                  GradeChain const&        chain,
                                                  IdealKind                kind,
                                                  EnumerationLimits const& limits) {
    return enumerate_fuzzy_ideals(ideal_constraints(r, kind), chain, limits);
  }

  namespace {
    template <typename Structure>
    std::vector<CrispSubset> crisp_ideals(Structure const& s,
                                          std::size_t      n,
                                          IdealKind        kind,
                                          std::uint64_t    cap) {
      if (n > 64 || candidate_count(2, n) > cap) {
        throw ResourceError("crisp ideal enumeration over " + std::to_string(n)
                            + " elements exceeds cap " + std::to_string(cap));
      }
      std::vector<CrispSubset> out;
      std::uint64_t const      total = candidate_count(2, n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        CrispSubset subset(n);
        subset.insert(0);
        for (std::size_t i = 1; i < n; ++i) {
          if ((mask >> (i - 1)) & 1U) {
            subset.insert(static_cast<Index>(i));
          }
        }
        if (is_crisp_ideal(s, subset, kind)) {
          out.push_back(std::move(subset));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::vector<CrispSubset> enumerate_crisp_ideals(GammaSemiring const& g,
                                                  IdealKind            kind,
                                                  std::uint64_t        cap) {
    return crisp_ideals(g, g.s_size(), kind, cap);
  }

  std::vector<CrispSubset> enumerate_crisp_ideals(Semiring const& r,
                                                  IdealKind       kind,
                                                  std::uint64_t   cap) {
    return crisp_ideals(r, r.size(), kind, cap);
  }

}  // namespace gammasr
