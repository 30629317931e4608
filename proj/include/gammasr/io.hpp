// Text formats: `.gsr` instance files and `.fz` fuzzy subset files.
//
// A Gamma-semiring file:
//
//   # comment
//   [gamma_semiring]
//   name = GB
//   S = 0 1
//   G = 0 1
//   [add_S]
//   0 1
//   1 1
//   [add_G]
//   0 1
//   1 1
//   [product]
//   gamma = 0
//   0 0
//   0 0
//   gamma = 1
//   0 0
//   0 1
//
// A semiring file uses `[semiring]` with `name =` and `carrier =`, then
// `[add]` and `[mul]` blocks of |carrier| rows.

#ifndef GAMMASR_IO_HPP_
#define GAMMASR_IO_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gammasr/core.hpp"
#include "gammasr/fuzzy.hpp"

namespace gammasr {

  enum class GsrErrorCode { io, syntax, duplicate_id, ragged_row, missing_zero, axiom };

  [[nodiscard]] char const* to_string(GsrErrorCode code) noexcept;

  class GsrError : public std::runtime_error {
   public:
    GsrError(GsrErrorCode code, std::size_t line, std::string const& what);

    [[nodiscard]] GsrErrorCode code() const noexcept {
      return code_;
    }
    // 1-based; 0 when the error is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }

   private:
    GsrErrorCode code_;
    std::size_t  line_;
  };

  using Instance = std::variant<GammaSemiring, Semiring>;

  // Parses without axiom validation. Throws GsrError.
  [[nodiscard]] Instance parse_gsr(std::istream& in);

  // Reads, parses and validates; axiom failures raise GsrError with code
  // `axiom` naming the first violated law and its witness.
  [[nodiscard]] Instance load_gsr(std::string const& path);

  void write_gsr(std::ostream& out, GammaSemiring const& g);
  void write_gsr(std::ostream& out, Semiring const& r);

  // One line per element "id : p/q"; elements missing from the input are 0.
  [[nodiscard]] FuzzySubset parse_fz(std::istream&                   in,
                                     std::vector<std::string> const& ids);
  [[nodiscard]] FuzzySubset load_fz(std::string const&              path,
                                    std::vector<std::string> const& ids);
  void write_fz(std::ostream&                   out,
                FuzzySubset const&              mu,
                std::vector<std::string> const& ids);

  // Human-readable rendering of a validation failure, with ids.
  [[nodiscard]] std::string describe(AxiomViolation const& v,
                                     GammaSemiring const&  g);
  [[nodiscard]] std::string describe(AxiomViolation const& v, Semiring const& r);

}  // namespace gammasr

#endif  // GAMMASR_IO_HPP_
