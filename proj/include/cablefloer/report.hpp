#pragma once

// Text renderings of a computed rank table. Entries are always listed by
// descending Alexander grading, then descending Maslov grading.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cablefloer/pipeline.hpp"
#include "json.hpp"

namespace cablefloer {

struct RankEntry {
  std::int64_t alexander = 0;
  std::int64_t maslov = 0;
  std::int64_t rank = 0;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

inline std::vector<RankEntry> ordered_entries(const RankTable& table) {
  std::vector<RankEntry> out;
  for (auto it = table.ranks.rbegin(); it != table.ranks.rend(); ++it)
    out.push_back({it->first.first, it->first.second, it->second});
  return out;
}

inline std::vector<std::int64_t> centered_coefficients(const LaurentPolynomial& delta) {
  const auto g = std::max(delta.max_degree(), -delta.min_degree());
  std::vector<std::int64_t> out;
  for (auto d = -g; d <= g; ++d) out.push_back(delta.coeff(d));
  return out;
}

inline nlohmann::json to_json(const HfkResult& r) {
  using nlohmann::json;
  json ranks = json::array();
  for (const auto& e : ordered_entries(r.ranks)) ranks.push_back({{"a", e.alexander}, {"m", e.maslov}, {"rank", e.rank}});
  json dropped = json::array();
  for (const auto& d : r.filter.dropped)
    dropped.push_back({{"source", d.source},
                       {"target", d.target},
                       {"delta_alexander", d.delta_alexander},
                       {"delta_maslov", d.delta_maslov}});
  return json{
      {"input",
       {{"delta", centered_coefficients(r.input.delta)}, {"tau", r.input.tau}, {"p", r.input.p}, {"n", r.input.n}}},
      {"tau", r.tau.value},
      {"total_rank", r.ranks.total()},
      {"ranks", ranks},
      {"checks",
       {{"symmetry", r.checks.symmetry},
        {"euler", r.checks.euler},
        {"table", {{"value", r.checks.table.value}, {"advisory", r.checks.table.advisory}, {"match", r.checks.table_match}}}}},
      {"dropped_arrows", dropped},
  };
}

inline std::string to_tsv(const RankTable& table) {
  std::ostringstream os;
  for (const auto& e : ordered_entries(table)) os << e.alexander << '\t' << e.maslov << '\t' << e.rank << '\n';
  return os.str();
}

namespace detail {

inline std::string power(char var, std::int64_t e) {
  if (e == 0) return {};
  std::string s(1, var);
  if (e == 1) return s;
  const auto digits = std::to_string(e);
  return s + "^" + (digits.size() == 1 ? digits : "{" + digits + "}");
}

}  // namespace detail

/// Two-variable polynomial: rank * x^alexander * y^maslov terms, e.g.
/// "2x^{40}y^2 + 2x^{39}y + ... + 3y^{-18}".
inline std::string to_poly(const RankTable& table) {
  if (table.ranks.empty()) return "0";
  std::string out;
  for (const auto& e : ordered_entries(table)) {
    if (!out.empty()) out += " + ";
    const auto mono = detail::power('x', e.alexander) + detail::power('y', e.maslov);
    if (e.rank != 1 || mono.empty()) out += std::to_string(e.rank);
    out += mono;
  }
  return out;
}

/// Scatter plot on the (Alexander, Maslov) lattice as an SVG 1.1 document.
inline std::string to_svg(const RankTable& table) {
  if (table.ranks.empty()) throw InputError("cannot plot an empty rank table");
  std::int64_t amin = 0, amax = 0, mmin = 0, mmax = 0;
  bool first = true;
  for (const auto& [k, r] : table.ranks) {
    if (first) {
      amin = amax = k.first;
      mmin = mmax = k.second;
      first = false;
    }
    amin = std::min(amin, k.first);
    amax = std::max(amax, k.first);
    mmin = std::min(mmin, k.second);
    mmax = std::max(mmax, k.second);
  }
  constexpr int cell = 12;
  constexpr int margin = 40;
  const auto w = static_cast<int>(amax - amin) * cell + 2 * margin;
  const auto h = static_cast<int>(mmax - mmin) * cell + 2 * margin;
  auto px = [&](std::int64_t a) { return margin + static_cast<int>(a - amin) * cell; };
  auto py = [&](std::int64_t m) { return margin + static_cast<int>(mmax - m) * cell; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  if (amin <= 0 && 0 <= amax)
    os << "<line x1=\"" << px(0) << "\" y1=\"" << margin / 2 << "\" x2=\"" << px(0) << "\" y2=\"" << h - margin / 2
       << "\" stroke=\"#bbbbbb\"/>\n";
  if (mmin <= 0 && 0 <= mmax)
    os << "<line x1=\"" << margin / 2 << "\" y1=\"" << py(0) << "\" x2=\"" << w - margin / 2 << "\" y2=\"" << py(0)
       << "\" stroke=\"#bbbbbb\"/>\n";
  os << "<text x=\"" << w - margin / 2 << "\" y=\"" << h - 6 << "\" font-size=\"10\" text-anchor=\"end\">A</text>\n"
     << "<text x=\"6\" y=\"" << margin / 2 << "\" font-size=\"10\">M</text>\n";
  for (const auto& e : ordered_entries(table)) {
    os << "<circle cx=\"" << px(e.alexander) << "\" cy=\"" << py(e.maslov) << "\" r=\"3\" fill=\"black\">"
       << "<title>A=" << e.alexander << " M=" << e.maslov << " rank=" << e.rank << "</title></circle>\n";
    os << "<text x=\"" << px(e.alexander) + 4 << "\" y=\"" << py(e.maslov) - 4 << "\" font-size=\"8\">" << e.rank
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// Character grid: one column per Alexander grading, one row per Maslov
/// grading (highest on top). Ranks above 9 print as '*'.
inline std::string to_ascii(const RankTable& table) {
  if (table.ranks.empty()) throw InputError("cannot plot an empty rank table");
  std::int64_t amin = table.ranks.begin()->first.first, amax = table.ranks.rbegin()->first.first;
  std::int64_t mmin = table.ranks.begin()->first.second, mmax = mmin;
  for (const auto& [k, r] : table.ranks) {
    mmin = std::min(mmin, k.second);
    mmax = std::max(mmax, k.second);
  }
  const auto label_width = std::max(std::to_string(mmin).size(), std::to_string(mmax).size());
  std::ostringstream os;
  for (auto m = mmax; m >= mmin; --m) {
    auto label = std::to_string(m);
    os << std::string(label_width - label.size(), ' ') << label << " |";
    for (auto a = amin; a <= amax; ++a) {
      const auto r = table.rank(a, m);
      os << (r == 0 ? '.' : r > 9 ? '*' : static_cast<char>('0' + r));
    }
    os << '\n';
  }
  os << std::string(label_width, ' ') << " +" << std::string(static_cast<std::size_t>(amax - amin + 1), '-') << '\n';
  os << std::string(label_width, ' ') << "  A from " << amin << " to " << amax << '\n';
  return os.str();
}

}  // namespace cablefloer
