#pragma once

// Exact tables of a family over an (n, k) box, with CSV / JSON / LaTeX
// encodings and their parsers, plus JSON for identity reports.
// Rows are orders n ascending, columns weights k ascending.

#include <polyseq/identities.hpp>

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace polyseq {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::int64_t kMaxTableOrder = 64;
inline constexpr std::int64_t kMaxTableWeight = 32;

struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

/// "a..b" or a single integer "a".
inline IndexRange parse_range(std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    auto v = parse_int(s);
    return {v, v};
  }
  IndexRange r{parse_int(s.substr(0, dots)), parse_int(s.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(s) + "'");
  return r;
}

struct OutputTable {
  Family family;
  IndexRange n;
  IndexRange k;
  std::vector<std::vector<Rational>> cells;  // cells[n - n.lo][k - k.lo]

  friend bool operator==(const OutputTable&, const OutputTable&) = default;
};

inline OutputTable make_table(Family family, IndexRange n, IndexRange k) {
  if (n.lo < 0 || n.hi > kMaxTableOrder)
    throw UsageError("order range must lie in 0.." + std::to_string(kMaxTableOrder));
  if (k.lo < -kMaxTableWeight || k.hi > kMaxTableWeight)
    throw UsageError("weight range must lie in -" + std::to_string(kMaxTableWeight) + ".." +
                     std::to_string(kMaxTableWeight));
  if (family == Family::TildeD && k.hi > 0)
    throw UsageError("TildeD is defined here for non-positive weights only");
  OutputTable t{family, n, k, {}};
  for (auto i = n.lo; i <= n.hi; ++i) {
    auto& row = t.cells.emplace_back();
    for (auto j = k.lo; j <= k.hi; ++j) row.push_back(value({family, i, j}));
  }
  return t;
}

inline std::string to_csv(const OutputTable& t) {
  std::ostringstream out;
  out << "n";
  for (auto j = t.k.lo; j <= t.k.hi; ++j) out << ",k=" << j;
  out << '\n';
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    out << t.n.lo + static_cast<std::int64_t>(r);
    for (const auto& c : t.cells[r]) out << ',' << to_string(c);
    out << '\n';
  }
  return out.str();
}

inline std::string to_json(const OutputTable& t) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(t.family));
  j["n"] = {t.n.lo, t.n.hi};
  j["k"] = {t.k.lo, t.k.hi};
  j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    nlohmann::ordered_json row;
    row["n"] = t.n.lo + static_cast<std::int64_t>(r);
    row["values"] = nlohmann::ordered_json::array();
    for (const auto& c : t.cells[r]) row["values"].push_back(to_string(c));
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

inline std::string latex_cell(const Rational& q) {
  if (is_integer(q)) return to_string(q);
  std::string sign = q < 0 ? "-" : "";
  Integer num = abs(q.get_num());
  return sign + "\\frac{" + to_string(num) + "}{" + to_string(Integer(q.get_den())) + "}";
}

inline std::string to_latex(const OutputTable& t) {
  std::ostringstream out;
  out << "% " << family_name(t.family) << '\n';
  out << "\\begin{tabular}{r|" << std::string(t.k.size(), 'r') << "}\n";
  out << "$n \\backslash k$";
  for (auto j = t.k.lo; j <= t.k.hi; ++j) out << " & $" << j << "$";
  out << " \\\\\n\\hline\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    out << t.n.lo + static_cast<std::int64_t>(r);
    for (const auto& c : t.cells[r]) out << " & $" << latex_cell(c) << "$";
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

enum class TableFormat { csv, json, latex };

inline TableFormat parse_format(std::string_view s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  if (s == "latex") return TableFormat::latex;
  throw UsageError("unknown format '" + std::string(s) + "'");
}

inline std::string render(const OutputTable& t, TableFormat f) {
  switch (f) {
    case TableFormat::csv: return to_csv(t);
    case TableFormat::json: return to_json(t);
    case TableFormat::latex: return to_latex(t);
  }
  return {};
}

// -- Parsers (inverse of the encoders above) ---------------------------------

namespace detail::table {

inline std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + sep.size();
  }
  return out;
}

inline std::vector<std::string> lines(std::string_view s) {
  auto out = split(s, "\n");
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t$");
  auto e = s.find_last_not_of(" \t$");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline Rational parse_latex_cell(std::string s) {
  s = trim(std::move(s));
  auto frac = s.find("\\frac{");
  if (frac == std::string::npos) return parse_rational(s);
  bool negative = frac > 0 && s[0] == '-';
  auto close = s.find("}{", frac);
  auto end = s.find('}', close + 2);
  Rational q = make_rational(Integer(s.substr(frac + 6, close - frac - 6)),
                             Integer(s.substr(close + 2, end - close - 2)));
  return negative ? Rational(-q) : q;
}

}  // namespace detail::table

inline OutputTable parse_csv(Family family, std::string_view text) {
  auto rows = detail::table::lines(text);
  if (rows.size() < 2) throw UsageError("csv: no rows");
  auto header = detail::table::split(rows[0], ",");
  OutputTable t{family, {}, {}, {}};
  t.k = {parse_int(std::string_view(header[1]).substr(2)),
         parse_int(std::string_view(header.back()).substr(2))};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    auto fields = detail::table::split(rows[r], ",");
    auto n = parse_int(fields[0]);
    if (r == 1) t.n.lo = n;
    t.n.hi = n;
    auto& row = t.cells.emplace_back();
    for (std::size_t c = 1; c < fields.size(); ++c) row.push_back(parse_rational(fields[c]));
  }
  return t;
}

inline OutputTable parse_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw UsageError("json: unknown family");
  OutputTable t{*family,
                {j.at("n")[0].get<std::int64_t>(), j.at("n")[1].get<std::int64_t>()},
                {j.at("k")[0].get<std::int64_t>(), j.at("k")[1].get<std::int64_t>()},
                {}};
  for (const auto& row : j.at("rows")) {
    auto& cells = t.cells.emplace_back();
    for (const auto& v : row.at("values")) cells.push_back(parse_rational(v.get<std::string>()));
  }
  return t;
}

inline OutputTable parse_latex(std::string_view text) {
  auto rows = detail::table::lines(text);
  if (rows.size() < 5) throw UsageError("latex: truncated table");
  auto family = parse_family(std::string_view(rows[0]).substr(2));
  if (!family) throw UsageError("latex: unknown family");
  OutputTable t{*family, {}, {}, {}};
  auto header = detail::table::split(rows[2], " & ");
  t.k = {parse_int(detail::table::trim(header[1])),
         parse_int(detail::table::trim(detail::table::split(header.back(), " \\\\")[0]))};
  for (std::size_t r = 4; r + 1 < rows.size(); ++r) {
    std::string body = rows[r].substr(0, rows[r].rfind(" \\\\"));
    auto fields = detail::table::split(body, " & ");
    auto n = parse_int(fields[0]);
    if (r == 4) t.n.lo = n;
    t.n.hi = n;
    auto& row = t.cells.emplace_back();
    for (std::size_t c = 1; c < fields.size(); ++c)
      row.push_back(detail::table::parse_latex_cell(fields[c]));
  }
  return t;
}

// -- Reports -----------------------------------------------------------------

inline nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json e;
    e["instance"] = w.instance;
    e["lhs"] = w.lhs;
    e["rhs"] = w.rhs;
    if (w.modulus) e["modulus"] = *w.modulus;
    if (!w.branch.empty()) e["branch"] = w.branch;
    e["holds"] = w.holds;
    j["witnesses"].push_back(std::move(e));
  }
  return j;
}

}  // namespace polyseq
