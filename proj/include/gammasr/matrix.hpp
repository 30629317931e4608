// Matrix Gamma_n-semirings S_n over a finite Gamma-semiring, matrix
// semirings over a finite semiring, the operator/matrix isomorphism check
// and the entrywise-min lift mu -> mu_n.
//
// Matrices are encoded as carrier indices by reading their entries row-major
// as base-|carrier| digits, most significant first. Index 0 is the zero
// matrix and the encoding order is the lexicographic order of entry tuples.

#ifndef GAMMASR_MATRIX_HPP_
#define GAMMASR_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gammasr/core.hpp"
#include "gammasr/fuzzy.hpp"
#include "gammasr/operators.hpp"
#include "gammasr/report.hpp"
#include "gammasr/verify.hpp"

namespace gammasr {

  class MatrixCodec {
   public:
    // Throws ResourceError when base^(n*n) exceeds `cap`.
    MatrixCodec(std::size_t base, std::size_t n, std::size_t cap);

    [[nodiscard]] std::size_t n() const noexcept {
      return n_;
    }
    [[nodiscard]] std::size_t count() const noexcept {
      return count_;
    }
    [[nodiscard]] std::vector<Index> decode(Index k) const;
    [[nodiscard]] Index              encode(std::span<Index const> entries) const;

   private:
    std::size_t base_;
    std::size_t n_;
    std::size_t count_;
  };

  struct MatrixGammaSemiring {
    GammaSemiring base;
    std::size_t   n;
    MatrixCodec   s_codec;
    MatrixCodec   g_codec;
    // Carrier ids "m0", "m1", ... on both S_n and Gamma_n.
    GammaSemiring ring;
  };

  // Entrywise addition; (A D B)_ij = sum_{k,l} a_ik d_kl b_lj.
  [[nodiscard]] MatrixGammaSemiring build_matrix_gamma(GammaSemiring const& base,
                                                       std::size_t          n,
                                                       std::size_t          cap = 256);

  // n x n matrices over r with the usual sum and product.
  [[nodiscard]] Semiring build_matrix_semiring(Semiring const& r,
                                               std::size_t     n,
                                               std::size_t     cap = 256);

  // mu_n(A) = min over the entries a_ij of mu(a_ij).
  [[nodiscard]] FuzzySubset lift_fuzzy_to_matrix(MatrixGammaSemiring const& m,
                                                 FuzzySubset const&         mu);

  // Materializes S_n and checks its axioms within cfg.validation_budget.
  // Suite id "matrix".
  [[nodiscard]] VerificationReport verify_matrix_instance(GammaSemiring const& base,
                                                          VerifyConfig const&  cfg);

  // Builds the operator semiring of S_n on `side`, the matrix semiring over
  // the base operator semiring, and checks that the generator mapping
  //   left:  [[x_uv],[g_jk]] -> (sum_t [x_ut, g_tk])_{u,k}
  //   right: [[g_jk],[x_uv]] -> (sum_t [g_jt, x_tv])_{j,v}
  // extends to a semiring isomorphism whose images act on S_n exactly like
  // the operators they come from.
  [[nodiscard]] VerificationReport check_operator_matrix_iso(GammaSemiring const& base,
                                                             std::size_t          n,
                                                             Side                 side,
                                                             VerifyConfig const&  cfg);

  // mu -> mu_n maps FI(S) injectively and inclusion-preservingly into
  // FI(S_n); surjectivity is checked by enumerating FI(S_n) when the
  // candidate space fits cfg.enumeration.cap and reported as skipped
  // otherwise.
  [[nodiscard]] VerificationReport verify_matrix_fuzzy_bijection(GammaSemiring const& base,
                                                                 std::size_t          n,
                                                                 GradeChain const&    chain,
                                                                 VerifyConfig const&  cfg);

}  // namespace gammasr

#endif  // GAMMASR_MATRIX_HPP_
