#ifndef SUPERCOH_IO_HPP
#define SUPERCOH_IO_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/errors.hpp>
#include <supercoh/rational.hpp>
#include <supercoh/report.hpp>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supercoh {

// Algebra files are YAML (JSON is accepted as well):
//
//   name: h_1
//   generators:
//     - {name: x1, parity: 0}
//     - {name: y1, parity: 1}
//     - {name: z, parity: 1}
//   brackets:
//     - {left: x1, right: y1, result: {z: "1"}}
//
// Each unordered pair appears at most once; unlisted brackets are zero.

namespace detail {

inline std::size_t line_of(const YAML::Node& node) {
  const auto mark = node.Mark();
  return mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
}

inline void expect_keys(const YAML::Node& map, std::initializer_list<std::string_view> allowed,
                        std::string_view what) {
  if (!map.IsMap()) throw ParseError(std::string(what) + " must be a mapping", line_of(map));
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown key '" + key + "' in " + std::string(what), line_of(kv.first));
  }
}

inline std::string scalar(const YAML::Node& parent, const char* key, std::string_view what) {
  const YAML::Node node = parent[key];
  if (!node) throw ParseError(std::string(what) + " is missing '" + key + "'", line_of(parent));
  if (!node.IsScalar()) throw ParseError(std::string("'") + key + "' must be a scalar", line_of(node));
  return node.Scalar();
}

} // namespace detail

/// Parses and validates an algebra document. Throws ParseError (with the
/// line) for malformed input, ValidationError for axiom violations.
inline LieSuperalgebra parse_algebra(std::string_view text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line >= 0 ? static_cast<std::size_t>(e.mark.line) + 1 : 0);
  }
  if (!doc || doc.IsNull()) throw ParseError("empty document");
  detail::expect_keys(doc, {"name", "generators", "brackets"}, "algebra");

  const std::string name = detail::scalar(doc, "name", "algebra");
  const YAML::Node gens = doc["generators"];
  if (!gens || !gens.IsSequence()) throw ParseError("'generators' must be a list", detail::line_of(doc));

  std::vector<std::pair<std::string, Parity>> generators;
  std::map<std::string, std::size_t> index;
  for (const auto& g : gens) {
    detail::expect_keys(g, {"name", "parity"}, "generator");
    auto gen_name = detail::scalar(g, "name", "generator");
    const auto parity = detail::scalar(g, "parity", "generator");
    if (parity != "0" && parity != "1")
      throw ParseError("parity of '" + gen_name + "' must be 0 or 1", detail::line_of(g["parity"]));
    if (!index.emplace(gen_name, generators.size()).second)
      throw ParseError("duplicate generator '" + gen_name + "'", detail::line_of(g));
    generators.emplace_back(std::move(gen_name), parity == "1" ? Parity::odd : Parity::even);
  }

  std::vector<StructureConstant> constants;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  if (const YAML::Node brackets = doc["brackets"]; brackets && !brackets.IsNull()) {
    if (!brackets.IsSequence()) throw ParseError("'brackets' must be a list", detail::line_of(brackets));
    auto lookup = [&](const YAML::Node& b, const char* key) {
      const auto symbol = detail::scalar(b, key, "bracket");
      auto it = index.find(symbol);
      if (it == index.end()) throw ParseError("unknown generator '" + symbol + "'", detail::line_of(b[key]));
      return it->second;
    };
    for (const auto& b : brackets) {
      detail::expect_keys(b, {"left", "right", "result"}, "bracket");
      const auto i = lookup(b, "left");
      const auto j = lookup(b, "right");
      if (!pairs.insert(std::minmax(i, j)).second)
        throw ParseError("bracket of '" + generators[i].first + "' and '" + generators[j].first +
                             "' listed twice",
                         detail::line_of(b));
      const YAML::Node result = b["result"];
      if (!result || !(result.IsMap() || result.IsNull()))
        throw ParseError("'result' must be a mapping", detail::line_of(b));
      for (const auto& kv : result) {
        const auto symbol = kv.first.as<std::string>();
        auto it = index.find(symbol);
        if (it == index.end()) throw ParseError("unknown generator '" + symbol + "'", detail::line_of(kv.first));
        if (!kv.second.IsScalar()) throw ParseError("coefficient must be a scalar", detail::line_of(kv.second));
        auto value = parse_rational(kv.second.Scalar());
        if (!value)
          throw ParseError("malformed rational '" + kv.second.Scalar() + "'", detail::line_of(kv.second));
        constants.push_back({i, j, it->second, *value});
      }
    }
  }

  try {
    LieSuperalgebra g(name, generators, constants);
    auto report = validate(g);
    if (!report.ok()) {
      std::string message = name + " is not a Lie superalgebra:";
      for (const auto& v : report.violations) message += "\n  " + v.message;
      throw ValidationError(message);
    }
    return g;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Algebra document in the format parse_algebra reads. Deterministic.
inline std::string emit_algebra(const LieSuperalgebra& g) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << g.name();
  out << YAML::Key << "generators" << YAML::Value << YAML::BeginSeq;
  for (const auto& gen : g.generators())
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "name" << YAML::Value << gen.name << YAML::Key
        << "parity" << YAML::Value << bit(gen.parity) << YAML::EndMap;
  out << YAML::EndSeq;
  out << YAML::Key << "brackets" << YAML::Value << YAML::BeginSeq;
  const auto gens = g.generators();
  for (const auto& [key, image] : g.stored_brackets()) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "left" << YAML::Value << gens[key.first].name;
    out << YAML::Key << "right" << YAML::Value << gens[key.second].name;
    out << YAML::Key << "result" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, c] : image)
      out << YAML::Key << gens[k].name << YAML::Value << YAML::DoubleQuoted << to_string(c);
    out << YAML::EndMap << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

enum class Format { json, csv, text };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  return std::nullopt;
}

inline constexpr std::string_view kReportCsvHeader =
    "algebra,q,dim_cochain,dim_cocycles,dim_coboundaries,dim_cohomology,method";

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// Splits one CSV record (RFC 4180 quoting, no embedded newlines).
inline std::vector<std::string> csv_split(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote", line_no);
  return fields;
}

inline std::uint64_t parse_count(const std::string& s, std::size_t line_no) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a nonnegative integer, got '" + s + "'", line_no);
  return std::stoull(s);
}

inline int parse_int(const std::string& s, std::size_t line_no) {
  const bool negative = s.starts_with('-');
  const auto magnitude = static_cast<int>(parse_count(negative ? s.substr(1) : s, line_no));
  return negative ? -magnitude : magnitude;
}

} // namespace detail

inline std::string emit_report(const std::vector<CohomologyReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      auto array = nlohmann::ordered_json::array();
      for (const auto& r : reports)
        array.push_back({{"algebra_name", r.algebra_name},
                         {"q", r.q},
                         {"dim_cochain", r.dim_cochain},
                         {"dim_cocycles", r.dim_cocycles},
                         {"dim_coboundaries", r.dim_coboundaries},
                         {"dim_cohomology", r.dim_cohomology},
                         {"method", std::string(to_string(r.method))}});
      os << array.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << kReportCsvHeader << '\n';
      for (const auto& r : reports)
        os << detail::csv_field(r.algebra_name) << ',' << r.q << ',' << r.dim_cochain << ','
           << r.dim_cocycles << ',' << r.dim_coboundaries << ',' << r.dim_cohomology << ','
           << to_string(r.method) << '\n';
      break;
    case Format::text: {
      std::size_t name_width = 7;
      for (const auto& r : reports) name_width = std::max(name_width, r.algebra_name.size());
      auto row = [&](auto&& name, auto&& q, auto&& c, auto&& z, auto&& b, auto&& h, auto&& method) {
        os << std::left << std::setw(static_cast<int>(name_width)) << name << std::right << std::setw(4) << q
           << std::setw(10) << c << std::setw(10) << z << std::setw(10) << b << std::setw(8) << h << "  "
           << method << '\n';
      };
      row("algebra", "q", "dim C", "dim Z", "dim B", "dim H", "method");
      for (const auto& r : reports)
        row(r.algebra_name, r.q, r.dim_cochain, r.dim_cocycles, r.dim_coboundaries, r.dim_cohomology,
            to_string(r.method));
      break;
    }
  }
  return os.str();
}

/// Reads back json or csv written by emit_report.
inline std::vector<CohomologyReport> parse_reports(std::string_view text, Format format) {
  std::vector<CohomologyReport> out;
  auto method_of = [](const std::string& s, std::size_t line_no) {
    auto m = parse_method(s);
    if (!m) throw ParseError("unknown method '" + s + "'", line_no);
    return *m;
  };
  if (format == Format::json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& r : doc) {
        out.push_back({r.at("algebra_name").get<std::string>(), r.at("q").get<int>(),
                       r.at("dim_cochain").get<std::uint64_t>(), r.at("dim_cocycles").get<std::uint64_t>(),
                       r.at("dim_coboundaries").get<std::uint64_t>(),
                       r.at("dim_cohomology").get<std::uint64_t>(),
                       method_of(r.at("method").get<std::string>(), 0)});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    return out;
  }
  if (format != Format::csv) throw ParseError("text reports cannot be parsed");
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kReportCsvHeader) throw ParseError("unexpected csv header", 1);
      continue;
    }
    if (line.empty()) continue;
    auto f = detail::csv_split(line, line_no);
    if (f.size() != 7) throw ParseError("expected 7 fields", line_no);
    out.push_back({f[0], detail::parse_int(f[1], line_no), detail::parse_count(f[2], line_no),
                   detail::parse_count(f[3], line_no), detail::parse_count(f[4], line_no),
                   detail::parse_count(f[5], line_no), method_of(f[6], line_no)});
  }
  if (line_no == 0) throw ParseError("missing csv header");
  return out;
}

} // namespace supercoh

#endif
