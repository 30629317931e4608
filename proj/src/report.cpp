#include "gammasr/report.hpp"

#include <sstream>

namespace gammasr {

  char const* to_string(Status status) noexcept {
    switch (status) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::precondition_unmet:
        return "precondition-unmet";
    }
    return "?";
  }

  void VerificationReport::fail(nlohmann::ordered_json witness) {
    if (status != Status::fail) {
      status         = Status::fail;
      counterexample = std::move(witness);
    }
  }

  void VerificationReport::unmet(std::string why) {
    if (status == Status::pass) {
      status = Status::precondition_unmet;
    }
    notes.push_back(std::move(why));
  }

  nlohmann::ordered_json to_json(VerificationReport const& report) {
    nlohmann::ordered_json out;
    out["suite"]    = report.suite;
    out["instance"] = report.instance;
    if (report.chain) {
      out["chain"] = grades_json(*report.chain);
    } else {
      out["chain"] = nullptr;
    }
    out["status"]         = to_string(report.status);
    out["counterexample"] = report.counterexample;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto const& [key, value] : report.counts) {
      counts[key] = value;
    }
    out["counts"] = counts;
    out["notes"]  = report.notes;
    return out;
  }

  namespace {
    double millis(std::chrono::nanoseconds d) {
      return static_cast<double>(d.count()) / 1e6;
    }
  }  // namespace

  std::string render_json(std::vector<VerificationReport> const& reports,
                          nlohmann::ordered_json const&          config) {
    nlohmann::ordered_json doc;
    doc["config"]  = config;
    doc["reports"] = nlohmann::ordered_json::array();
    doc["timing"]  = nlohmann::ordered_json::array();
    for (auto const& r : reports) {
      doc["reports"].push_back(to_json(r));
      doc["timing"].push_back({{"suite", r.suite}, {"elapsed_ms", millis(r.elapsed)}});
    }
    return doc.dump(2) + "\n";
  }

  std::string render_text(std::vector<VerificationReport> const& reports,
                          nlohmann::ordered_json const&          config) {
    std::ostringstream out;
    out << "config: " << config.dump() << "\n";
    for (auto const& r : reports) {
      out << "\n== " << r.suite << " [" << r.instance << "] ==\n";
      if (r.chain) {
        out << "chain:  {" << r.chain->to_string()
            << "}  (fuzzy grades restricted to this chain)\n";
      }
      out << "status: " << to_string(r.status) << "\n";
      if (!r.counts.empty()) {
        out << "counts:";
        for (auto const& [key, value] : r.counts) {
          out << " " << key << "=" << value;
        }
        out << "\n";
      }
      for (auto const& n : r.notes) {
        out << "  - " << n << "\n";
      }
      if (!r.counterexample.is_null()) {
        out << "counterexample: " << r.counterexample.dump() << "\n";
      }
    }
    out << "\n-- timing --\n";
    for (auto const& r : reports) {
      out << r.suite << ": " << millis(r.elapsed) << " ms\n";
    }
    return out.str();
  }

}  // namespace gammasr
