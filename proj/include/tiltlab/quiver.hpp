#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tiltlab {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// Arrows are stored sorted by name, so comparing arrow indices compares names.
class Quiver {
 public:
  Quiver() = default;
  // Throws ValidationError on duplicate names, loops, or bad endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  std::optional<int> vertex_index(const std::string& label) const;
  std::optional<int> arrow_index(const std::string& name) const;

  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_to(int v) const { return in_[v]; }
  bool is_sink(int v) const { return out_[v].empty(); }
  bool is_source(int v) const { return in_[v].empty(); }

  bool acyclic() const;
  bool connected() const;
  Quiver opposite() const;  // same names, reversed arrows

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// A path in diagram order: arrows[0] is traversed first. The empty path at v
// is the idempotent e_v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path& o) const {
    return source == o.source && target == o.target && arrows == o.arrows;
  }
};

// Length first, then lexicographic by arrow name; empty paths by vertex.
bool operator<(const Path& a, const Path& b);

Path concatenate(const Path& p, const Path& q);
Path trivial_path(int v);

// Every path of an acyclic quiver from `from` to `to`, sorted.
std::vector<Path> all_paths(const Quiver& q, int from, int to);

// Def. of admissible: i_j is a sink once i_1..i_{j-1} are removed.
bool is_admissible_ordering(const Quiver& q, const std::vector<int>& order);
// Identity when admissible, otherwise least-index sink first.
std::vector<int> admissible_ordering(const Quiver& q);

}  // namespace tiltlab
