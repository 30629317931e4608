#include "gammasr/transfer.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammasr {

  namespace {
    void require_side(OperatorSemiring const& op, Side side) {
      if (op.side() != side) {
        throw std::invalid_argument(std::string("expected the ") + to_string(side)
                                    + " operator semiring");
      }
    }
  }  // namespace

  FuzzySubset restrict_to_base(GammaSemiring const&    g,
                               OperatorSemiring const& op,
                               FuzzySubset const&      mu) {
    op.require_base(g);
    if (mu.size() != op.size()) {
      throw std::invalid_argument("fuzzy subset does not live on the operator semiring");
    }
    FuzzySubset out(g.s_size());
    for (Index x = 0; x < g.s_size(); ++x) {
      Grade lowest = Grade::one();
      for (Index gamma = 0; gamma < g.g_size(); ++gamma) {
        Term const t  = op.side() == Side::left ? Term{x, gamma} : Term{gamma, x};
        auto const ix = op.find(action_of_pair(g, t, op.side()));
        if (!ix) {
          throw std::logic_error("single-pair action missing from operator semiring");
        }
        lowest = std::min(lowest, mu[*ix]);
      }
      out[x] = lowest;
    }
    return out;
  }

  FuzzySubset lift_to_operators(OperatorSemiring const& op, FuzzySubset const& sigma) {
    if (sigma.size() != op.base_size()) {
      throw std::invalid_argument("fuzzy subset does not live on S");
    }
    // Congruent sums share their action, so the value depends only on f.
    FuzzySubset out(op.size());
    for (Index f = 0; f < op.size(); ++f) {
      Grade lowest = Grade::one();
      for (auto v : op.element(f)) {
        lowest = std::min(lowest, sigma[v]);
      }
      out[f] = lowest;
    }
    return out;
  }

  FuzzySubset restrict_plus(GammaSemiring const& g, OperatorSemiring const& left, FuzzySubset const& mu) {
    require_side(left, Side::left);
    return restrict_to_base(g, left, mu);
  }

  FuzzySubset lift_plusprime(OperatorSemiring const& left, FuzzySubset const& sigma) {
    require_side(left, Side::left);
    return lift_to_operators(left, sigma);
  }

  FuzzySubset restrict_star(GammaSemiring const& g, OperatorSemiring const& right, FuzzySubset const& mu) {
    require_side(right, Side::right);
    return restrict_to_base(g, right, mu);
  }

  FuzzySubset lift_starprime(OperatorSemiring const& right, FuzzySubset const& sigma) {
    require_side(right, Side::right);
    return lift_to_operators(right, sigma);
  }

}  // namespace gammasr
