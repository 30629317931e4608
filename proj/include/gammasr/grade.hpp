// Exact rational membership grades in [0, 1] and finite grade chains.

#ifndef GAMMASR_GRADE_HPP_
#define GAMMASR_GRADE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gammasr {

  // A normalized fraction num/den with 0 <= num <= den, den > 0.
  class Grade {
   public:
    constexpr Grade() noexcept = default;
    Grade(std::int64_t num, std::int64_t den);

    static Grade zero() noexcept {
      return Grade();
    }
    static Grade one() noexcept {
      Grade g;
      g.num_ = 1;
      return g;
    }

    // Accepts "p/q", or a bare integer "0" / "1".
    static Grade parse(std::string_view text);

    [[nodiscard]] std::int64_t num() const noexcept {
      return num_;
    }
    [[nodiscard]] std::int64_t den() const noexcept {
      return den_;
    }

    // Always "p/q", including "0/1" and "1/1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Grade const& x, Grade const& y) noexcept {
      return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(Grade const& x,
                                            Grade const& y) noexcept {
      // Cross-multiplication in 128 bits cannot overflow for 64-bit terms.
      __int128 lhs = static_cast<__int128>(x.num_) * y.den_;
      __int128 rhs = static_cast<__int128>(y.num_) * x.den_;
      return lhs <=> rhs;
    }

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
  };

  // Sorted, duplicate-free set of grades that contains 0 and 1. A chain is
  // trivially closed under min and max.
  class GradeChain {
   public:
    // Sorts and deduplicates; throws std::invalid_argument without 0 or 1.
    explicit GradeChain(std::vector<Grade> grades);

    // Default chain {0, 1/2, 1}.
    GradeChain();

    // Comma-separated, e.g. "0,1/2,1".
    static GradeChain parse(std::string_view text);
    static GradeChain binary() {
      return GradeChain({Grade::zero(), Grade::one()});
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return grades_.size();
    }
    [[nodiscard]] Grade const& operator[](std::size_t i) const {
      return grades_[i];
    }
    [[nodiscard]] std::vector<Grade> const& grades() const noexcept {
      return grades_;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(Grade g) const;
    [[nodiscard]] bool contains(Grade g) const {
      return index_of(g).has_value();
    }

    // "0/1,1/2,1/1"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(GradeChain const&, GradeChain const&) = default;

   private:
    std::vector<Grade> grades_;
  };

}  // namespace gammasr

#endif  // GAMMASR_GRADE_HPP_
