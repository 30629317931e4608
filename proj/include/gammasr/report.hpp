// Verification reports and their text / JSON renderings.

#ifndef GAMMASR_REPORT_HPP_
#define GAMMASR_REPORT_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammasr/grade.hpp"

namespace gammasr {

  enum class Status { pass, fail, precondition_unmet };

  [[nodiscard]] char const* to_string(Status status) noexcept;

  struct VerificationReport {
    std::string               suite;
    std::string               instance;
    std::optional<GradeChain> chain;
    Status                    status = Status::pass;
    // null unless status == fail; element ids as strings, grades as "p/q".
    nlohmann::ordered_json                           counterexample;
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::string>                         notes;
    std::chrono::nanoseconds                         elapsed{0};

    void add_count(std::string key, std::uint64_t value) {
      counts.emplace_back(std::move(key), value);
    }
    void note(std::string text) {
      notes.push_back(std::move(text));
    }
    // Records a failure; the first counterexample is kept.
    void fail(nlohmann::ordered_json witness);
    // Downgrades a passing report; never overrides a failure.
    void unmet(std::string why);
  };

  // Report body without timing.
  [[nodiscard]] nlohmann::ordered_json to_json(VerificationReport const& report);

  // {"config": ..., "reports": [...], "timing": [{"suite", "elapsed_ms"}]}
  [[nodiscard]] std::string render_json(std::vector<VerificationReport> const& reports,
                                        nlohmann::ordered_json const&          config);

  // Human-readable blocks, one per report, followed by a "-- timing --"
  // footer. Everything above the footer is deterministic.
  [[nodiscard]] std::string render_text(std::vector<VerificationReport> const& reports,
                                        nlohmann::ordered_json const&          config);

  // Grades as "p/q" strings.
  template <typename Subset>
  nlohmann::ordered_json grades_json(Subset const& mu) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (auto const& g : mu.grades()) {
      out.push_back(g.to_string());
    }
    return out;
  }

}  // namespace gammasr

#endif  // GAMMASR_REPORT_HPP_
