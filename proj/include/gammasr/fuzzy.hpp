// Fuzzy and crisp subsets of finite carriers, the fuzzy ideal predicates,
// the lattice operations (+) and intersection, and exhaustive enumeration of
// fuzzy ideals whose grades lie in a finite chain.

#ifndef GAMMASR_FUZZY_HPP_
#define GAMMASR_FUZZY_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gammasr/core.hpp"
#include "gammasr/grade.hpp"

namespace gammasr {

  enum class IdealKind { left, right, two_sided };

  [[nodiscard]] char const* to_string(IdealKind kind) noexcept;
  // "left", "right", "two" (or "two-sided").
  [[nodiscard]] IdealKind parse_ideal_kind(std::string_view text);

  // A membership function on a carrier of size `size()`, indexed like the
  // carrier.
  class FuzzySubset {
   public:
    FuzzySubset() = default;
    // All grades 0.
    explicit FuzzySubset(std::size_t n) : grades_(n) {}
    explicit FuzzySubset(std::vector<Grade> grades) : grades_(std::move(grades)) {}
    FuzzySubset(std::initializer_list<Grade> grades) : grades_(grades) {}

    static FuzzySubset constant(std::size_t n, Grade g) {
      return FuzzySubset(std::vector<Grade>(n, g));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return grades_.size();
    }
    [[nodiscard]] Grade const& operator[](std::size_t i) const {
      return grades_[i];
    }
    Grade& operator[](std::size_t i) {
      return grades_[i];
    }
    [[nodiscard]] std::vector<Grade> const& grades() const noexcept {
      return grades_;
    }

    // All grades equal.
    [[nodiscard]] bool is_constant() const;
    // Some grade is nonzero.
    [[nodiscard]] bool is_nonempty() const;

    // "(1/1, 1/2)"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(FuzzySubset const&, FuzzySubset const&) = default;
    // Lexicographic on the grade tuple.
    friend auto operator<=>(FuzzySubset const& x, FuzzySubset const& y) {
      return x.grades_ <=> y.grades_;
    }

   private:
    std::vector<Grade> grades_;
  };

  // Pointwise x <= y. Throws std::invalid_argument on size mismatch.
  [[nodiscard]] bool included_in(FuzzySubset const& x, FuzzySubset const& y);

  class CrispSubset {
   public:
    CrispSubset() = default;
    explicit CrispSubset(std::size_t n) : members_(n, false) {}
    explicit CrispSubset(std::vector<bool> members) : members_(std::move(members)) {}
    static CrispSubset of(std::size_t n, std::initializer_list<Index> members);
    static CrispSubset full(std::size_t n) {
      return CrispSubset(std::vector<bool>(n, true));
    }

    [[nodiscard]] std::size_t carrier_size() const noexcept {
      return members_.size();
    }
    [[nodiscard]] bool contains(Index i) const {
      return members_[i];
    }
    void insert(Index i) {
      members_[i] = true;
    }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] std::vector<Index> members() const;
    [[nodiscard]] bool subset_of(CrispSubset const& other) const;

    // "{0,2}" using the given ids.
    [[nodiscard]] std::string to_string(std::vector<std::string> const& ids) const;

    friend bool operator==(CrispSubset const&, CrispSubset const&) = default;
    friend auto operator<=>(CrispSubset const& x, CrispSubset const& y) {
      return x.members_ <=> y.members_;
    }

   private:
    std::vector<bool> members_;
  };

  // lambda_I: grade 1 on I, 0 elsewhere.
  [[nodiscard]] FuzzySubset characteristic(CrispSubset const& subset);

  // Pointwise min of a non-empty family of equally sized subsets.
  [[nodiscard]] FuzzySubset fuzzy_intersection(std::span<FuzzySubset const> family);
  [[nodiscard]] FuzzySubset fuzzy_intersection(FuzzySubset const& x,
                                               FuzzySubset const& y);

  // (x (+) y)(z) = max over u + v = z of min(x(u), y(v)).
  [[nodiscard]] FuzzySubset fuzzy_sum(GammaSemiring const& g,
                                      FuzzySubset const&   x,
                                      FuzzySubset const&   y);
  [[nodiscard]] FuzzySubset fuzzy_sum(Semiring const&    r,
                                      FuzzySubset const& x,
                                      FuzzySubset const& y);

  // Fuzzy left/right/two-sided ideal: nonempty, mu(x+y) >= min(mu x, mu y),
  // and mu(x g y) >= mu(y) (left) / >= mu(x) (right). The mu(0) = 1
  // convention is not part of the predicate.
  [[nodiscard]] bool is_fuzzy_ideal(GammaSemiring const& g,
                                    FuzzySubset const&   mu,
                                    IdealKind            kind);
  [[nodiscard]] bool is_fuzzy_ideal(Semiring const&    r,
                                    FuzzySubset const& mu,
                                    IdealKind          kind);

  // Contains 0, closed under +, absorbing per kind.
  [[nodiscard]] bool is_crisp_ideal(GammaSemiring const& g,
                                    CrispSubset const&   subset,
                                    IdealKind            kind);
  [[nodiscard]] bool is_crisp_ideal(Semiring const&    r,
                                    CrispSubset const& subset,
                                    IdealKind          kind);

  // The ideal conditions as a flat constraint system over carrier indices:
  // grade[sum] >= min(grade[lhs], grade[rhs]) for every additive triple and
  // grade[target] >= grade[source] for every absorption pair. Duplicates are
  // removed.
  struct IdealConstraints {
    struct Additive {
      Index lhs, rhs, sum;
    };
    struct Absorb {
      Index target, source;
    };
    std::size_t           carrier_size = 0;
    std::vector<Additive> additive;
    std::vector<Absorb>   absorb;
  };

  [[nodiscard]] IdealConstraints ideal_constraints(GammaSemiring const& g,
                                                   IdealKind            kind);
  [[nodiscard]] IdealConstraints ideal_constraints(Semiring const& r,
                                                   IdealKind       kind);

  struct EnumerationLimits {
    std::uint64_t cap     = 100'000'000;
    unsigned      workers = 1;
  };

  // chain_size^(carrier_size - 1), saturating at UINT64_MAX.
  [[nodiscard]] std::uint64_t candidate_count(std::size_t chain_size,
                                              std::size_t carrier_size);

  // All fuzzy ideals with mu(0) = 1 and grades in `chain`, in lexicographic
  // order of grade tuples. Throws ResourceError when the candidate space
  // exceeds `limits.cap`.
  [[nodiscard]] std::vector<FuzzySubset>
  enumerate_fuzzy_ideals(IdealConstraints const& constraints,
                         GradeChain const&       chain,
                         EnumerationLimits const& limits = {});
  [[nodiscard]] std::vector<FuzzySubset>
  enumerate_fuzzy_ideals(GammaSemiring const&     g,
                         GradeChain const&        chain,
                         IdealKind                kind,
                         EnumerationLimits const& limits = {});
  [[nodiscard]] std::vector<FuzzySubset>
  enumerate_fuzzy_ideals(Semiring const&          r,
                         GradeChain const&        chain,
                         IdealKind                kind,
                         EnumerationLimits const& limits = {});

  // All crisp ideals, ordered by their membership vectors. Throws
  // ResourceError when 2^(carrier - 1) exceeds `cap`.
  [[nodiscard]] std::vector<CrispSubset>
  enumerate_crisp_ideals(GammaSemiring const& g,
                         IdealKind            kind,
                         std::uint64_t        cap = 100'000'000);
  [[nodiscard]] std::vector<CrispSubset>
  enumerate_crisp_ideals(Semiring const& r,
                         IdealKind       kind,
                         std::uint64_t   cap = 100'000'000);

}  // namespace gammasr

#endif  // GAMMASR_FUZZY_HPP_
