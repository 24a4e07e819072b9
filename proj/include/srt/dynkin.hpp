#pragma once

// Star-shaped affine Dynkin diagrams D4, E6, E7, E8.
//
// Vertex indexing: index 0 is the node n; the remaining vertices are (j, i)
// with leg j = 1..m and 1 <= i < d_j counted from the outer end, so that
// (j, d_j - 1) is adjacent to the node. Legs are sorted d_1 <= ... <= d_m and
// the affinizing vertex o is (m, 1).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srt {

enum class StarType { D4, E6, E7, E8 };

inline constexpr StarType kAllStarTypes[] = {StarType::D4, StarType::E6, StarType::E7,
                                             StarType::E8};

std::string_view star_name(StarType t);     // "d4", "e6", ...
StarType parse_star_type(std::string_view s);  // throws InputError

/// Leg data (d_1, ..., d_m).
std::vector<int> star_legs(StarType t);

struct StarVertex {
  int leg = 0;  // 0 for the node
  int pos = 0;  // 1..d_leg-1, 0 for the node
  friend bool operator==(const StarVertex&, const StarVertex&) = default;
};

class DynkinStar {
 public:
  explicit DynkinStar(StarType type);

  StarType type() const { return type_; }
  int num_legs() const { return static_cast<int>(legs_.size()); }
  const std::vector<int>& legs() const { return legs_; }
  int leg_length(int j) const { return legs_.at(static_cast<std::size_t>(j - 1)); }
  int ell() const { return legs_.back(); }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const StarVertex& vertex(int index) const { return vertices_.at(static_cast<std::size_t>(index)); }
  int index_of(int leg, int pos) const;
  int node() const { return 0; }
  int affinizing() const { return index_of(num_legs(), 1); }

  /// Undirected edges as index pairs (outer vertex first, node last).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;

  std::string label(int index) const;  // "n" or "(j,i)"

 private:
  StarType type_;
  std::vector<int> legs_;
  std::vector<StarVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace srt
