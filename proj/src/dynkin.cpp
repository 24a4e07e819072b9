#include "srt/dynkin.hpp"

#include "srt/error.hpp"

namespace srt {

std::string_view star_name(StarType t) {
  switch (t) {
    case StarType::D4: return "d4";
    case StarType::E6: return "e6";
    case StarType::E7: return "e7";
    case StarType::E8: return "e8";
  }
  return "?";
}

StarType parse_star_type(std::string_view s) {
  for (StarType t : kAllStarTypes) {
    if (s == star_name(t)) return t;
  }
  throw InputError("unknown group type \"" + std::string(s) + "\" (expected d4, e6, e7 or e8)");
}

std::vector<int> star_legs(StarType t) {
  switch (t) {
    case StarType::D4: return {2, 2, 2, 2};
    case StarType::E6: return {3, 3, 3};
    case StarType::E7: return {2, 4, 4};
    case StarType::E8: return {2, 3, 6};
  }
  return {};
}

DynkinStar::DynkinStar(StarType type) : type_(type), legs_(star_legs(type)) {
  vertices_.push_back({0, 0});
  for (int j = 1; j <= num_legs(); ++j) {
    for (int i = 1; i < legs_[static_cast<std::size_t>(j - 1)]; ++i) vertices_.push_back({j, i});
  }
  for (int j = 1; j <= num_legs(); ++j) {
    const int d = leg_length(j);
    for (int i = 1; i + 1 < d; ++i) edges_.emplace_back(index_of(j, i), index_of(j, i + 1));
    edges_.emplace_back(index_of(j, d - 1), node());
  }
}

int DynkinStar::index_of(int leg, int pos) const {
  if (leg == 0 && pos == 0) return 0;
  if (leg < 1 || leg > num_legs() || pos < 1 || pos >= leg_length(leg)) {
    throw InputError("vertex (" + std::to_string(leg) + "," + std::to_string(pos) +
                     ") is not on the star");
  }
  int index = 1;
  for (int j = 1; j < leg; ++j) index += leg_length(j) - 1;
  return index + pos - 1;
}

std::vector<std::vector<int>> DynkinStar::adjacency() const {
  std::vector<std::vector<int>> adj(vertices_.size());
  for (auto [a, b] : edges_) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

std::string DynkinStar::label(int index) const {
  const StarVertex& v = vertex(index);
  if (v.leg == 0) return "n";
  return "(" + std::to_string(v.leg) + "," + std::to_string(v.pos) + ")";
}

}  // namespace srt
