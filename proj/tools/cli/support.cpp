#include "support.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>

namespace frobkit::cli {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    auto piece = s.substr(pos, next == std::string_view::npos ? s.npos : next - pos);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (!piece.empty()) out.emplace_back(piece);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> infer_vars(const std::vector<std::string>& exprs,
                                    const std::vector<std::string>& leading) {
  std::set<std::string> found;
  for (const auto& e : exprs) {
    for (std::size_t i = 0; i < e.size();) {
      const auto c = static_cast<unsigned char>(e[i]);
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < e.size() &&
               (std::isalnum(static_cast<unsigned char>(e[j])) || e[j] == '_')) {
          ++j;
        }
        found.insert(e.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
  }
  std::vector<std::string> out = leading;
  for (const auto& v : found) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::pair<std::string, Rational> parse_pair(std::string_view spec) {
  auto colon = spec.rfind(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("pair must look like EXPR:NUM/DEN, got '" + std::string(spec) + "'");
  }
  return {std::string(spec.substr(0, colon)), parse_rational(spec.substr(colon + 1))};
}

json basis_json(const Ideal& ideal) {
  json arr = json::array();
  for (const auto& g : ideal.basis()) arr.push_back(g.to_string());
  return arr;
}

std::string basis_text(const Ideal& ideal) { return ideal.to_string(); }

}  // namespace frobkit::cli
