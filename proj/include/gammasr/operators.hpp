// Left and right operator semirings of a finite Gamma-semiring.
//
// A congruence class of formal sums sum [x_i, alpha_i] is determined by its
// action a -> sum x_i alpha_i a on S, so the left operator semiring is
// realized as the additive closure of the single-pair actions, multiplied by
// composition. The right side uses a -> sum a gamma_j x_j and composition in
// diagram order. Each element keeps one shortest generating sum as
// provenance.

#ifndef GAMMASR_OPERATORS_HPP_
#define GAMMASR_OPERATORS_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gammasr/core.hpp"
#include "gammasr/fuzzy.hpp"

namespace gammasr {

  enum class Side { left, right };

  [[nodiscard]] char const* to_string(Side side) noexcept;
  [[nodiscard]] Side        parse_side(std::string_view text);

  // Image of every element of S, position a holding the image of a.
  using ActionMap = std::vector<Index>;

  // A formal generator. On the left side it is [x, alpha] with
  // first = x in S and second = alpha in Gamma; on the right side it is
  // [gamma, x] with first = gamma and second = x.
  struct Term {
    Index first  = 0;
    Index second = 0;

    friend auto operator<=>(Term const&, Term const&) = default;
  };

  // a -> x alpha a (left, term [x, alpha]) or a -> a gamma x (right, term
  // [gamma, x]).
  [[nodiscard]] ActionMap action_of_pair(GammaSemiring const& g, Term term, Side side);

  struct ClosureLimits {
    std::size_t               max_elements = 1'000'000;
    std::chrono::milliseconds time_budget{0};  // 0 means unlimited
  };

  class OperatorSemiring {
   public:
    [[nodiscard]] Side side() const noexcept {
      return side_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    // |S| of the Gamma-semiring the operators act on.
    [[nodiscard]] std::size_t base_size() const noexcept {
      return base_size_;
    }
    [[nodiscard]] ActionMap const& element(Index i) const {
      return elements_[i];
    }
    [[nodiscard]] std::vector<ActionMap> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::vector<Term> const& provenance(Index i) const {
      return provenance_[i];
    }
    [[nodiscard]] std::optional<Index> find(ActionMap const& map) const;

    // The constant-zero map is the lexicographically least action.
    [[nodiscard]] static constexpr Index zero() noexcept {
      return 0;
    }
    [[nodiscard]] Index add(Index f, Index g) const noexcept {
      return semiring_.add(f, g);
    }
    [[nodiscard]] Index mul(Index f, Index g) const noexcept {
      return semiring_.mul(f, g);
    }
    // Carrier ids are "f0", "f1", ... in canonical order.
    [[nodiscard]] Semiring const& semiring() const noexcept {
      return semiring_;
    }

    // Provenance as a formal sum, e.g. "[1,0]+[2,1]", using `g`'s ids.
    [[nodiscard]] std::string describe(Index i, GammaSemiring const& g) const;

    // Throws std::invalid_argument unless this was built from an instance
    // with the same carrier sizes as `g`.
    void require_base(GammaSemiring const& g) const;

   private:
    friend OperatorSemiring build_operator_semiring(GammaSemiring const&,
                                                    Side,
                                                    ClosureLimits const&);
    OperatorSemiring(Side                             side,
                     std::size_t                      base_size,
                     std::size_t                      base_gamma_size,
                     std::vector<ActionMap>           elements,
                     std::vector<std::vector<Term>>   provenance,
                     Semiring                         semiring);

    struct MapHash {
      std::size_t operator()(ActionMap const& m) const noexcept;
    };

    Side                                         side_;
    std::size_t                                  base_size_;
    std::size_t                                  base_gamma_size_;
    std::vector<ActionMap>                       elements_;
    std::vector<std::vector<Term>>               provenance_;
    Semiring                                     semiring_;
    std::unordered_map<ActionMap, Index, MapHash> index_;
  };

  // Worklist saturation of the single-pair actions under pointwise addition.
  // Elements are sorted by value tuple, so index 0 is the zero map and
  // rebuilding gives an identical element list. Throws ResourceError when
  // the closure exceeds `limits`.
  [[nodiscard]] OperatorSemiring build_operator_semiring(GammaSemiring const& g,
                                                         Side                 side,
                                                         ClosureLimits const& limits = {});

  // Index of the identity action if it is in `op` (a left unity on the left
  // side, a right unity on the right side).
  [[nodiscard]] std::optional<Index> find_unity(GammaSemiring const&    g,
                                                OperatorSemiring const& op);

  // P+ = {a in S : [a, Gamma] subset of P} for P inside the left operator
  // semiring; on the right side this is P* = {a : [Gamma, a] subset of P}.
  [[nodiscard]] CrispSubset plus_set(GammaSemiring const&    g,
                                     OperatorSemiring const& op,
                                     CrispSubset const&      p);

  // Q+' = {f : every finite sum of values f(s) lies in Q}; on the right side
  // Q*'. Uses the additive closure of f(S).
  [[nodiscard]] CrispSubset plusprime_set(GammaSemiring const&    g,
                                          OperatorSemiring const& op,
                                          CrispSubset const&      q);

  // {f : f(s) in Q for every s}. Equal to plusprime_set when Q is closed
  // under addition.
  [[nodiscard]] CrispSubset plusprime_set_pointwise(OperatorSemiring const& op,
                                                    CrispSubset const&      q);

  // Right-side spellings.
  [[nodiscard]] CrispSubset star_set(GammaSemiring const&    g,
                                     OperatorSemiring const& right,
                                     CrispSubset const&      p);
  [[nodiscard]] CrispSubset starprime_set(GammaSemiring const&    g,
                                          OperatorSemiring const& right,
                                          CrispSubset const&      q);

}  // namespace gammasr

#endif  // GAMMASR_OPERATORS_HPP_
