#include "gammasr/grade.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gammasr {

  namespace {
    std::int64_t parse_int(std::string_view text, std::string_view whole) {
      while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
      }
      while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
      }
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed grade '" + std::string(whole) + "'");
      }
      return value;
    }
  }  // namespace

  Grade::Grade(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0 || num > den) {
      throw std::invalid_argument("grade " + std::to_string(num) + "/"
                                  + std::to_string(den) + " is not in [0,1]");
    }
    std::int64_t g = std::gcd(num, den);
    num_           = num / g;
    den_           = den / g;
  }

  Grade Grade::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Grade(parse_int(text, text), 1);
    }
    return Grade(parse_int(text.substr(0, slash), text),
                 parse_int(text.substr(slash + 1), text));
  }

  std::string Grade::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  GradeChain::GradeChain(std::vector<Grade> grades) : grades_(std::move(grades)) {
    std::sort(grades_.begin(), grades_.end());
    grades_.erase(std::unique(grades_.begin(), grades_.end()), grades_.end());
    if (grades_.empty() || grades_.front() != Grade::zero()
        || grades_.back() != Grade::one()) {
      throw std::invalid_argument("grade chain must contain 0 and 1");
    }
  }

  GradeChain::GradeChain()
      : GradeChain({Grade::zero(), Grade(1, 2), Grade::one()}) {}

  GradeChain GradeChain::parse(std::string_view text) {
    std::vector<Grade> grades;
    std::size_t        start = 0;
    while (start <= text.size()) {
      auto comma = text.find(',', start);
      if (comma == std::string_view::npos) {
        comma = text.size();
      }
      grades.push_back(Grade::parse(text.substr(start, comma - start)));
      start = comma + 1;
    }
    return GradeChain(std::move(grades));
  }

  std::optional<std::size_t> GradeChain::index_of(Grade g) const {
    auto it = std::lower_bound(grades_.begin(), grades_.end(), g);
    if (it == grades_.end() || *it != g) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - grades_.begin());
  }

  std::string GradeChain::to_string() const {
    std::string out;
    for (auto const& g : grades_) {
      if (!out.empty()) {
        out += ',';
      }
      out += g.to_string();
    }
    return out;
  }

}  // namespace gammasr
