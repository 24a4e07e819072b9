#include "pretty.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "srt/numbers.hpp"

namespace srt::tools {

namespace {

using nlohmann::json;

bool is_cyc(const json& j) { return j.is_object() && j.size() == 2 && j.contains("N") && j.contains("coeffs"); }

bool is_scalar(const json& j) {
  if (is_cyc(j)) return true;
  if (j.is_primitive()) return true;
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive() || is_cyc(x); });
}

std::string scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_cyc(j)) {
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CycNumber::from_poly(j["N"].get<int>(), coeffs).to_string();
  }
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
    return out + ")";
  }
  return j.dump();
}

// Rows of a table: a list of objects whose values are all scalars and that
// share one key set.
bool is_table(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_object() || is_cyc(j[0])) return false;
  for (const auto& row : j) {
    if (!row.is_object() || row.size() != j[0].size()) return false;
    for (const auto& [k, v] : row.items()) {
      if (!j[0].contains(k) || !is_scalar(v)) return false;
    }
  }
  return true;
}

bool is_matrix(const json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const json& r) { return r.is_array() && !r.empty() && is_scalar(r); });
}

void grid(std::ostream& os, const std::vector<std::vector<std::string>>& cells, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

void render(std::ostream& os, const json& j, const std::string& indent) {
  if (is_table(j)) {
    std::vector<std::vector<std::string>> cells(1);
    for (const auto& [k, v] : j[0].items()) cells[0].push_back(k);
    for (const auto& row : j) {
      cells.emplace_back();
      for (const auto& [k, v] : row.items()) cells.back().push_back(scalar(v));
    }
    grid(os, cells, indent);
    return;
  }
  if (is_matrix(j)) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : j) {
      cells.emplace_back();
      for (const auto& x : row) cells.back().push_back(scalar(x));
    }
    grid(os, cells, indent);
    return;
  }
  if (j.is_object() && !is_cyc(j)) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        os << indent << k << ": " << scalar(v) << "\n";
      } else {
        os << indent << k << ":\n";
        render(os, v, indent + "  ");
      }
    }
    return;
  }
  if (j.is_array() && !is_scalar(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (is_scalar(j[i])) {
        os << indent << "[" << i << "] " << scalar(j[i]) << "\n";
      } else {
        os << indent << "[" << i << "]\n";
        render(os, j[i], indent + "  ");
      }
    }
    return;
  }
  os << indent << scalar(j) << "\n";
}

}  // namespace

std::string pretty(const json& j) {
  std::ostringstream os;
  render(os, j, "");
  return os.str();
}

}  // namespace srt::tools
