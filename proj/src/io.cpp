#include "gammasr/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gammasr {

  char const* to_string(GsrErrorCode code) noexcept {
    switch (code) {
      case GsrErrorCode::io:
        return "io";
      case GsrErrorCode::syntax:
        return "syntax";
      case GsrErrorCode::duplicate_id:
        return "duplicate-id";
      case GsrErrorCode::ragged_row:
        return "ragged-row";
      case GsrErrorCode::missing_zero:
        return "missing-zero";
      case GsrErrorCode::axiom:
        return "axiom";
    }
    return "?";
  }

  namespace {
    std::string located(std::size_t line, std::string const& what) {
      return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
    }
  }  // namespace

  GsrError::GsrError(GsrErrorCode code, std::size_t line, std::string const& what)
      : std::runtime_error(located(line, what)), code_(code), line_(line) {}

  namespace {

    struct Line {
      std::size_t number;
      std::string text;
    };

    std::string trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    std::vector<std::string> words(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      for (std::string w; in >> w;) {
        out.push_back(w);
      }
      return out;
    }

    // Comment-stripped, non-blank lines.
    std::vector<Line> read_lines(std::istream& in) {
      std::vector<Line> lines;
      std::string       raw;
      for (std::size_t n = 1; std::getline(in, raw); ++n) {
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.resize(hash);
        }
        auto text = trim(raw);
        if (!text.empty()) {
          lines.push_back({n, std::move(text)});
        }
      }
      return lines;
    }

    std::optional<std::pair<std::string, std::string>> key_value(std::string const& text) {
      auto const eq = text.find('=');
      if (eq == std::string::npos) {
        return std::nullopt;
      }
      return std::pair{trim(std::string_view(text).substr(0, eq)),
                       trim(std::string_view(text).substr(eq + 1))};
    }

    struct Section {
      std::size_t       line = 0;
      std::vector<Line> body;
    };

    // Splits into "[name]" sections; content before the first header is an
    // error.
    std::map<std::string, Section> split_sections(std::vector<Line> const& lines,
                                                  std::string&             first) {
      std::map<std::string, Section> sections;
      Section*                       current = nullptr;
      for (auto const& l : lines) {
        if (l.text.front() == '[') {
          if (l.text.back() != ']') {
            throw GsrError(GsrErrorCode::syntax, l.number, "malformed section header '" + l.text + "'");
          }
          auto name = trim(std::string_view(l.text).substr(1, l.text.size() - 2));
          if (sections.contains(name)) {
            throw GsrError(GsrErrorCode::syntax, l.number, "section [" + name + "] repeated");
          }
          if (first.empty()) {
            first = name;
          }
          current       = &sections[name];
          current->line = l.number;
          continue;
        }
        if (current == nullptr) {
          throw GsrError(GsrErrorCode::syntax, l.number, "content before the first section");
        }
        current->body.push_back(l);
      }
      return sections;
    }

    Section const& require(std::map<std::string, Section> const& sections, std::string const& name) {
      auto it = sections.find(name);
      if (it == sections.end()) {
        throw GsrError(GsrErrorCode::syntax, 0, "missing section [" + name + "]");
      }
      return it->second;
    }

    class Carrier {
     public:
      Carrier(std::vector<std::string> ids, std::size_t line, std::string what)
          : ids_(std::move(ids)), what_(std::move(what)) {
        if (ids_.empty()) {
          throw GsrError(GsrErrorCode::syntax, line, what_ + " carrier is empty");
        }
        for (std::size_t i = 0; i < ids_.size(); ++i) {
          if (!index_.emplace(ids_[i], static_cast<Index>(i)).second) {
            throw GsrError(GsrErrorCode::duplicate_id, line,
                           "duplicate id '" + ids_[i] + "' in " + what_);
          }
        }
      }
      [[nodiscard]] Index lookup(std::string const& id, std::size_t line) const {
        auto it = index_.find(id);
        if (it == index_.end()) {
          throw GsrError(GsrErrorCode::syntax, line, "unknown " + what_ + " id '" + id + "'");
        }
        return it->second;
      }
      [[nodiscard]] std::vector<std::string> const& ids() const {
        return ids_;
      }
      [[nodiscard]] std::size_t size() const {
        return ids_.size();
      }

     private:
      std::vector<std::string>               ids_;
      std::unordered_map<std::string, Index> index_;
      std::string                            what_;
    };

    // `rows` lines of `cols` ids each, looked up in `values`.
    std::vector<Index> read_table(std::vector<Line> const& body,
                                  std::size_t              from,
                                  std::size_t              rows,
                                  std::size_t              cols,
                                  Carrier const&           values,
                                  std::string const&       what,
                                  std::size_t              header_line) {
      if (body.size() < from + rows) {
        throw GsrError(GsrErrorCode::syntax, header_line,
                       what + " needs " + std::to_string(rows) + " rows");
      }
      std::vector<Index> table;
      table.reserve(rows * cols);
      for (std::size_t r = 0; r < rows; ++r) {
        auto const& l = body[from + r];
        auto const  w = words(l.text);
        if (w.size() != cols) {
          throw GsrError(GsrErrorCode::ragged_row, l.number,
                         what + " row has " + std::to_string(w.size()) + " entries, expected "
                             + std::to_string(cols));
        }
        for (auto const& id : w) {
          table.push_back(values.lookup(id, l.number));
        }
      }
      return table;
    }

    std::vector<Index> read_square(Section const& s, Carrier const& c, std::string const& what) {
      auto table = read_table(s.body, 0, c.size(), c.size(), c, what, s.line);
      if (s.body.size() != c.size()) {
        throw GsrError(GsrErrorCode::ragged_row, s.body[c.size()].number,
                       "extra row in " + what);
      }
      return table;
    }

    void require_zero(std::vector<Index> const& add, Carrier const& c, std::string const& what,
                      std::size_t line) {
      std::size_t const n = c.size();
      for (Index x = 0; x < n; ++x) {
        if (add[x] != x || add[x * n] != x) {
          throw GsrError(GsrErrorCode::missing_zero, line,
                         "'" + c.ids()[0] + "' at index 0 of " + what
                             + " is not an additive identity (fails at '" + c.ids()[x] + "')");
        }
      }
    }

    std::map<std::string, Line> header_fields(Section const& s) {
      std::map<std::string, Line> fields;
      for (auto const& l : s.body) {
        auto kv = key_value(l.text);
        if (!kv) {
          throw GsrError(GsrErrorCode::syntax, l.number, "expected 'key = value'");
        }
        if (!fields.emplace(kv->first, Line{l.number, kv->second}).second) {
          throw GsrError(GsrErrorCode::syntax, l.number, "field '" + kv->first + "' repeated");
        }
      }
      return fields;
    }

    Line const& field(std::map<std::string, Line> const& fields,
                      std::string const&                 key,
                      Section const&                     s,
                      std::string const&                 section) {
      auto it = fields.find(key);
      if (it == fields.end()) {
        throw GsrError(GsrErrorCode::syntax, s.line, "[" + section + "] lacks '" + key + " ='");
      }
      return it->second;
    }

    void reject_unknown(std::map<std::string, Section> const& sections,
                        std::vector<std::string> const&       known) {
      for (auto const& [name, s] : sections) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          throw GsrError(GsrErrorCode::syntax, s.line, "unknown section [" + name + "]");
        }
      }
    }

    GammaSemiring parse_gamma(std::map<std::string, Section> const& sections) {
      reject_unknown(sections, {"gamma_semiring", "add_S", "add_G", "product"});
      auto const& head   = require(sections, "gamma_semiring");
      auto const  fields = header_fields(head);
      auto const& name   = field(fields, "name", head, "gamma_semiring");
      auto const& s_line = field(fields, "S", head, "gamma_semiring");
      auto const& g_line = field(fields, "G", head, "gamma_semiring");
      Carrier const S(words(s_line.text), s_line.number, "S");
      Carrier const G(words(g_line.text), g_line.number, "Gamma");

      auto const& add_s_sec = require(sections, "add_S");
      auto const& add_g_sec = require(sections, "add_G");
      auto const& prod_sec  = require(sections, "product");
      auto        add_s     = read_square(add_s_sec, S, "[add_S]");
      auto        add_g     = read_square(add_g_sec, G, "[add_G]");
      require_zero(add_s, S, "S", add_s_sec.line);
      require_zero(add_g, G, "Gamma", add_g_sec.line);

      std::size_t const  ns = S.size();
      std::size_t const  ng = G.size();
      std::vector<Index> product(ns * ng * ns);
      std::vector<bool>  seen(ng, false);
      auto const&        body = prod_sec.body;
      std::size_t        pos  = 0;
      while (pos < body.size()) {
        auto kv = key_value(body[pos].text);
        if (!kv || kv->first != "gamma") {
          throw GsrError(GsrErrorCode::syntax, body[pos].number, "expected 'gamma = <id>'");
        }
        Index const gamma = G.lookup(kv->second, body[pos].number);
        if (seen[gamma]) {
          throw GsrError(GsrErrorCode::syntax, body[pos].number,
                         "block for gamma '" + kv->second + "' repeated");
        }
        seen[gamma] = true;
        std::size_t rows = 0;
        while (pos + 1 + rows < body.size() && !key_value(body[pos + 1 + rows].text)) {
          ++rows;
        }
        if (rows != ns) {
          throw GsrError(GsrErrorCode::ragged_row, body[pos].number,
                         "block for gamma '" + kv->second + "' has " + std::to_string(rows)
                             + " rows, expected " + std::to_string(ns));
        }
        auto const block = read_table(body, pos + 1, ns, ns, S, "[product]", body[pos].number);
        for (std::size_t a = 0; a < ns; ++a) {
          for (std::size_t b = 0; b < ns; ++b) {
            product[(a * ng + gamma) * ns + b] = block[a * ns + b];
          }
        }
        pos += 1 + ns;
      }
      for (std::size_t k = 0; k < ng; ++k) {
        if (!seen[k]) {
          throw GsrError(GsrErrorCode::syntax, prod_sec.line,
                         "[product] lacks the block for gamma '" + G.ids()[k] + "'");
        }
      }
      return GammaSemiring(name.text, S.ids(), G.ids(), std::move(add_s), std::move(add_g),
                           std::move(product));
    }

    Semiring parse_plain(std::map<std::string, Section> const& sections) {
      reject_unknown(sections, {"semiring", "add", "mul"});
      auto const&   head   = require(sections, "semiring");
      auto const    fields = header_fields(head);
      auto const&   name   = field(fields, "name", head, "semiring");
      auto const&   c_line = field(fields, "carrier", head, "semiring");
      Carrier const C(words(c_line.text), c_line.number, "carrier");
      auto const&   add_sec = require(sections, "add");
      auto          add     = read_square(add_sec, C, "[add]");
      require_zero(add, C, "carrier", add_sec.line);
      auto mul = read_square(require(sections, "mul"), C, "[mul]");
      return Semiring(name.text, C.ids(), std::move(add), std::move(mul));
    }

    void write_rows(std::ostream& out, std::vector<Index> const& table, std::size_t cols,
                    std::vector<std::string> const& ids) {
      for (std::size_t r = 0; r < table.size() / cols; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          out << (c ? " " : "") << ids[table[r * cols + c]];
        }
        out << "\n";
      }
    }

    std::string join(std::vector<std::string> const& ids) {
      std::string out;
      for (auto const& id : ids) {
        out += (out.empty() ? "" : " ") + id;
      }
      return out;
    }

  }  // namespace

  Instance parse_gsr(std::istream& in) {
    auto const  lines = read_lines(in);
    std::string first;
    auto const  sections = split_sections(lines, first);
    if (first == "gamma_semiring") {
      return parse_gamma(sections);
    }
    if (first == "semiring") {
      return parse_plain(sections);
    }
    throw GsrError(GsrErrorCode::syntax, lines.empty() ? 0 : lines.front().number,
                   "expected [gamma_semiring] or [semiring] as the first section");
  }

  Instance load_gsr(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw GsrError(GsrErrorCode::io, 0, "cannot open '" + path + "'");
    }
    auto instance = parse_gsr(in);
    std::visit(
        [](auto const& x) {
          ValidationOutcome outcome;
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GammaSemiring>) {
            outcome = validate_gamma_semiring(x);
          } else {
            outcome = validate_semiring(x);
          }
          if (!outcome.ok()) {
            throw GsrError(GsrErrorCode::axiom, 0, describe(outcome.violations.front(), x));
          }
        },
        instance);
    return instance;
  }

  void write_gsr(std::ostream& out, GammaSemiring const& g) {
    out << "[gamma_semiring]\n"
        << "name = " << g.name() << "\n"
        << "S = " << join(g.s_ids()) << "\n"
        << "G = " << join(g.g_ids()) << "\n"
        << "[add_S]\n";
    write_rows(out, g.add_table(), g.s_size(), g.s_ids());
    out << "[add_G]\n";
    write_rows(out, g.add_gamma_table(), g.g_size(), g.g_ids());
    out << "[product]\n";
    for (Index gamma = 0; gamma < g.g_size(); ++gamma) {
      out << "gamma = " << g.g_ids()[gamma] << "\n";
      for (Index a = 0; a < g.s_size(); ++a) {
        for (Index b = 0; b < g.s_size(); ++b) {
          out << (b ? " " : "") << g.s_ids()[g.product(a, gamma, b)];
        }
        out << "\n";
      }
    }
  }

  void write_gsr(std::ostream& out, Semiring const& r) {
    out << "[semiring]\n"
        << "name = " << r.name() << "\n"
        << "carrier = " << join(r.ids()) << "\n"
        << "[add]\n";
    write_rows(out, r.add_table(), r.size(), r.ids());
    out << "[mul]\n";
    write_rows(out, r.mul_table(), r.size(), r.ids());
  }

  FuzzySubset parse_fz(std::istream& in, std::vector<std::string> const& ids) {
    Carrier const     carrier(ids, 0, "element");
    FuzzySubset       mu(ids.size());
    std::vector<bool> seen(ids.size(), false);
    for (auto const& l : read_lines(in)) {
      auto const colon = l.text.find(':');
      if (colon == std::string::npos) {
        throw GsrError(GsrErrorCode::syntax, l.number, "expected 'id : p/q'");
      }
      auto const  id = trim(std::string_view(l.text).substr(0, colon));
      Index const x  = carrier.lookup(id, l.number);
      if (seen[x]) {
        throw GsrError(GsrErrorCode::duplicate_id, l.number, "grade for '" + id + "' repeated");
      }
      seen[x] = true;
      try {
        mu[x] = Grade::parse(trim(std::string_view(l.text).substr(colon + 1)));
      } catch (std::invalid_argument const& e) {
        throw GsrError(GsrErrorCode::syntax, l.number, e.what());
      }
    }
    return mu;
  }

  FuzzySubset load_fz(std::string const& path, std::vector<std::string> const& ids) {
    std::ifstream in(path);
    if (!in) {
      throw GsrError(GsrErrorCode::io, 0, "cannot open '" + path + "'");
    }
    return parse_fz(in, ids);
  }

  void write_fz(std::ostream& out, FuzzySubset const& mu, std::vector<std::string> const& ids) {
    for (std::size_t x = 0; x < mu.size(); ++x) {
      out << ids.at(x) << " : " << mu[x].to_string() << "\n";
    }
  }

  namespace {
    // Carrier of each witness component: 'S' or 'G'.
    std::string witness_layout(std::string const& axiom) {
      static std::map<std::string, std::string> const layout = {
          {"S.add.commutative", "SS"},    {"S.add.associative", "SSS"}, {"S.add.identity", "S"},
          {"G.add.commutative", "GG"},    {"G.add.associative", "GGG"}, {"G.add.identity", "G"},
          {"distributive.left", "SSGS"},  {"distributive.right", "SGSS"},
          {"distributive.gamma", "SGGS"}, {"associative", "SGSGS"},
          {"zero.left", "GS"},            {"zero.right", "SG"},         {"zero.gamma", "SS"}};
      auto it = layout.find(axiom);
      return it == layout.end() ? std::string() : it->second;
    }
  }  // namespace

  std::string describe(AxiomViolation const& v, GammaSemiring const& g) {
    auto const  layout = witness_layout(v.axiom);
    std::string out    = "axiom " + v.axiom + " violated at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      bool const gamma = i < layout.size() && layout[i] == 'G';
      out += (i ? ", " : "") + (gamma ? g.g_ids() : g.s_ids()).at(v.witness[i]);
    }
    return out + ")";
  }

  std::string describe(AxiomViolation const& v, Semiring const& r) {
    std::string out = "axiom " + v.axiom + " violated at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      out += (i ? ", " : "") + r.ids().at(v.witness[i]);
    }
    return out + ")";
  }

}  // namespace gammasr
