// Finite Gamma-semirings and semirings given by dense operation tables,
// axiom validation with deterministic witnesses, and structural predicates.
//
// Elements are identified by their index in the carrier; index 0 of every
// carrier is its additive zero.

#ifndef GAMMASR_CORE_HPP_
#define GAMMASR_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammasr {

  using Index = std::uint32_t;

  // Thrown for malformed tables: wrong dimensions, out-of-range entries,
  // duplicate ids. Distinct from an axiom violation.
  class StructuralError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Thrown when an enumeration or closure would exceed its configured cap.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // S x Gamma x S -> S together with the additive tables of S and Gamma.
  // Immutable after construction.
  class GammaSemiring {
   public:
    // `add_s` is |S|x|S| row-major, `add_g` is |G|x|G|, and `product` is
    // indexed [a][gamma][b] as (a * |G| + gamma) * |S| + b.
    GammaSemiring(std::string              name,
                  std::vector<std::string> s_ids,
                  std::vector<std::string> g_ids,
                  std::vector<Index>       add_s,
                  std::vector<Index>       add_g,
                  std::vector<Index>       product);

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    [[nodiscard]] std::size_t s_size() const noexcept {
      return s_ids_.size();
    }
    [[nodiscard]] std::size_t g_size() const noexcept {
      return g_ids_.size();
    }
    [[nodiscard]] std::vector<std::string> const& s_ids() const noexcept {
      return s_ids_;
    }
    [[nodiscard]] std::vector<std::string> const& g_ids() const noexcept {
      return g_ids_;
    }

    [[nodiscard]] Index add(Index a, Index b) const noexcept {
      return add_s_[a * s_size() + b];
    }
    [[nodiscard]] Index add_gamma(Index alpha, Index beta) const noexcept {
      return add_g_[alpha * g_size() + beta];
    }
    [[nodiscard]] Index product(Index a, Index gamma, Index b) const noexcept {
      return product_[(a * g_size() + gamma) * s_size() + b];
    }

    [[nodiscard]] std::vector<Index> const& add_table() const noexcept {
      return add_s_;
    }
    [[nodiscard]] std::vector<Index> const& add_gamma_table() const noexcept {
      return add_g_;
    }
    [[nodiscard]] std::vector<Index> const& product_table() const noexcept {
      return product_;
    }

    // Copy with a different name or a single product cell replaced.
    [[nodiscard]] GammaSemiring renamed(std::string name) const;
    [[nodiscard]] GammaSemiring with_product(Index a, Index gamma, Index b,
                                             Index value) const;

    friend bool operator==(GammaSemiring const&, GammaSemiring const&) = default;

   private:
    std::string              name_;
    std::vector<std::string> s_ids_;
    std::vector<std::string> g_ids_;
    std::vector<Index>       add_s_;
    std::vector<Index>       add_g_;
    std::vector<Index>       product_;
  };

  // A plain finite semiring (carrier, +, *).
  class Semiring {
   public:
    Semiring(std::string              name,
             std::vector<std::string> ids,
             std::vector<Index>       add,
             std::vector<Index>       mul);

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return ids_.size();
    }
    [[nodiscard]] std::vector<std::string> const& ids() const noexcept {
      return ids_;
    }
    [[nodiscard]] Index add(Index a, Index b) const noexcept {
      return add_[a * size() + b];
    }
    [[nodiscard]] Index mul(Index a, Index b) const noexcept {
      return mul_[a * size() + b];
    }
    [[nodiscard]] std::vector<Index> const& add_table() const noexcept {
      return add_;
    }
    [[nodiscard]] std::vector<Index> const& mul_table() const noexcept {
      return mul_;
    }

    [[nodiscard]] Semiring renamed(std::string name) const;
    [[nodiscard]] Semiring with_mul(Index a, Index b, Index value) const;

    friend bool operator==(Semiring const&, Semiring const&) = default;

   private:
    std::string              name_;
    std::vector<std::string> ids_;
    std::vector<Index>       add_;
    std::vector<Index>       mul_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  // One violated axiom with the lexicographically first witness tuple.
  // Witness components follow the order the variables appear in the law,
  // e.g. "distributive.gamma" is a (alpha + beta) b with witness
  // (a, alpha, beta, b).
  struct AxiomViolation {
    std::string        axiom;
    std::vector<Index> witness;

    friend bool operator==(AxiomViolation const&, AxiomViolation const&)
        = default;
  };

  struct ValidationOutcome {
    std::vector<AxiomViolation> violations;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Axiom names, in the order they are checked:
  //   S.add.commutative (a,b)        S.add.associative (a,b,c)
  //   S.add.identity (a)             G.add.commutative (alpha,beta)
  //   G.add.associative (alpha,beta,delta)   G.add.identity (alpha)
  //   distributive.left   (a+b) alpha c    witness (a,b,alpha,c)
  //   distributive.right  a alpha (b+c)    witness (a,alpha,b,c)
  //   distributive.gamma  a (alpha+beta) b witness (a,alpha,beta,b)
  //   associative         a alpha (b beta c) witness (a,alpha,b,beta,c)
  //   zero.left   0 alpha x = 0   witness (alpha,x)
  //   zero.right  x alpha 0 = 0   witness (x,alpha)
  //   zero.gamma  x 0 y = 0       witness (x,y)
  [[nodiscard]] ValidationOutcome validate_gamma_semiring(GammaSemiring const& g);

  // add.commutative (a,b), add.associative (a,b,c), add.identity (a),
  // mul.associative (a,b,c), distributive.left a(b+c) (a,b,c),
  // distributive.right (a+b)c (a,b,c), zero.absorbing (x).
  [[nodiscard]] ValidationOutcome validate_semiring(Semiring const& r);

  // Number of tuple evaluations the full Gamma-semiring axiom scan needs.
  [[nodiscard]] std::uint64_t validation_cost(GammaSemiring const& g);

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  enum class Verdict { yes, no, precondition_unmet };

  // Outcome of a structural predicate. For `no` the witness is the
  // lexicographically first counterexample; for `precondition_unmet` the
  // note says which precondition failed.
  struct Check {
    Verdict            verdict = Verdict::yes;
    std::vector<Index> witness;
    std::string        note;

    [[nodiscard]] bool holds() const noexcept {
      return verdict == Verdict::yes;
    }
    explicit operator bool() const noexcept {
      return holds();
    }
  };

  // a alpha b == b alpha a for all a, alpha, b; witness (a, alpha, b).
  [[nodiscard]] Check is_commutative(GammaSemiring const& g);

  // a alpha b == 0 implies a == 0, alpha == 0 or b == 0; witness (a, alpha, b).
  [[nodiscard]] Check is_zdf(GammaSemiring const& g);

  // Commutative instance where every nonzero a, alpha admit b, beta with
  // a alpha b beta d == d for all d. Witness (a, alpha). Instances with a
  // one-element S or Gamma are classified as not Gamma-semifields.
  [[nodiscard]] Check is_gamma_semifield(GammaSemiring const& g);

  // Multiplicatively commutative semiring without nonzero proper ideals.
  // Witness: the members of the offending ideal (the ideal generated by the
  // first nonzero element that does not generate everything). A
  // one-element semiring is not a semifield.
  [[nodiscard]] Check is_semifield(Semiring const& r);

  // Cross-check form: a multiplicative identity exists and every nonzero
  // element has an inverse. precondition_unmet when there is no identity.
  [[nodiscard]] Check is_semifield_by_inverses(Semiring const& r);

  [[nodiscard]] bool is_mul_commutative(Semiring const& r);

  // Ideal of r generated by `x` (smallest set containing x and 0 that is
  // closed under + and two-sided multiplication by r).
  [[nodiscard]] std::vector<bool> generated_ideal(Semiring const& r, Index x);

  ////////////////////////////////////////////////////////////////////////
  // Instances
  ////////////////////////////////////////////////////////////////////////

  // S = Gamma = {0,1}, both additions max, product min of the arguments.
  [[nodiscard]] GammaSemiring boolean_gamma_semiring();

  // S = Gamma = Z_n, addition mod n, x alpha y = x * alpha * y mod n.
  [[nodiscard]] GammaSemiring zn_gamma_semiring(std::size_t n);

  // Gamma = S, a alpha b = (a * alpha) * b.
  [[nodiscard]] GammaSemiring gamma_semiring_from(Semiring const& r);

  // ({0,1}, max, min).
  [[nodiscard]] Semiring boolean_semiring();

  // (Z_n, + mod n, * mod n).
  [[nodiscard]] Semiring zn_semiring(std::size_t n);

}  // namespace gammasr

#endif  // GAMMASR_CORE_HPP_
