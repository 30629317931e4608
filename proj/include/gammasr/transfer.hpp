// Transfer maps between fuzzy subsets of S and of its operator semirings.
//
//   restrict_plus:  mu over L  ->  mu+(x)  = min_gamma mu([x, gamma])
//   lift_plusprime: sigma over S -> sigma+'(f) = min_s sigma(f(s))
//
// and the right-operator duals restrict_star / lift_starprime. All four are
// defined on arbitrary fuzzy subsets; inf and sup are min and max over the
// finite carriers.

#ifndef GAMMASR_TRANSFER_HPP_
#define GAMMASR_TRANSFER_HPP_

#include "gammasr/core.hpp"
#include "gammasr/fuzzy.hpp"
#include "gammasr/operators.hpp"

namespace gammasr {

  // Side-generic forms; the side is taken from `op`.
  [[nodiscard]] FuzzySubset restrict_to_base(GammaSemiring const&    g,
                                             OperatorSemiring const& op,
                                             FuzzySubset const&      mu);
  [[nodiscard]] FuzzySubset lift_to_operators(OperatorSemiring const& op,
                                              FuzzySubset const&      sigma);

  [[nodiscard]] FuzzySubset restrict_plus(GammaSemiring const&    g,
                                          OperatorSemiring const& left,
                                          FuzzySubset const&      mu);
  [[nodiscard]] FuzzySubset lift_plusprime(OperatorSemiring const& left,
                                           FuzzySubset const&      sigma);
  [[nodiscard]] FuzzySubset restrict_star(GammaSemiring const&    g,
                                          OperatorSemiring const& right,
                                          FuzzySubset const&      mu);
  [[nodiscard]] FuzzySubset lift_starprime(OperatorSemiring const& right,
                                           FuzzySubset const&      sigma);

}  // namespace gammasr

#endif  // GAMMASR_TRANSFER_HPP_
