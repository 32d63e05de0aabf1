#include "tiltlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tiltlab/error.hpp"

namespace tiltlab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : labels_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen_labels(labels_.begin(), labels_.end());
  if (seen_labels.size() != labels_.size()) throw ValidationError("duplicate vertex label");
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
  const int l = static_cast<int>(labels_.size());
  out_.assign(l, {});
  in_.assign(l, {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (i > 0 && arrows_[i - 1].name == a.name) throw ValidationError("duplicate arrow name \"" + a.name + "\"");
    if (a.name.empty()) throw ValidationError("empty arrow name");
    if (a.source < 0 || a.source >= l || a.target < 0 || a.target >= l)
      throw ValidationError("arrow \"" + a.name + "\" has an endpoint outside the vertex set");
    if (a.source == a.target) throw ValidationError("arrow \"" + a.name + "\" is a loop");
    out_[a.source].push_back(static_cast<int>(i));
    in_[a.target].push_back(static_cast<int>(i));
  }
}

std::optional<int> Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                             [](const Arrow& a, const std::string& n) { return a.name < n; });
  if (it == arrows_.end() || it->name != name) return std::nullopt;
  return static_cast<int>(it - arrows_.begin());
}

bool Quiver::acyclic() const {
  // Kahn's algorithm.
  const std::size_t l = labels_.size();
  std::vector<std::size_t> indeg(l, 0);
  for (const Arrow& a : arrows_) ++indeg[a.target];
  std::vector<int> stack;
  for (std::size_t v = 0; v < l; ++v)
    if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int a : out_[v])
      if (--indeg[arrows_[a].target] == 0) stack.push_back(arrows_[a].target);
  }
  return seen == l;
}

bool Quiver::connected() const {
  const std::size_t l = labels_.size();
  if (l == 0) return false;
  std::vector<bool> seen(l, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    };
    for (int a : out_[v]) visit(arrows_[a].target);
    for (int a : in_[v]) visit(arrows_[a].source);
  }
  return count == l;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const Arrow& a : arrows_) rev.push_back({a.name, a.target, a.source});
  return Quiver(labels_, rev);
}

bool operator<(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  if (a.source != b.source) return a.source < b.source;
  return a.target < b.target;
}

Path concatenate(const Path& p, const Path& q) {
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path trivial_path(int v) { return Path{v, v, {}}; }

std::vector<Path> all_paths(const Quiver& q, int from, int to) {
  std::vector<Path> out;
  Path cur = trivial_path(from);
  std::function<void(int)> dfs = [&](int v) {
    if (v == to) {
      cur.target = to;
      out.push_back(cur);
    }
    for (int a : q.arrows_from(v)) {
      cur.arrows.push_back(a);
      dfs(q.arrow(a).target);
      cur.arrows.pop_back();
    }
  };
  dfs(from);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible_ordering(const Quiver& q, const std::vector<int>& order) {
  const std::size_t l = q.vertex_count();
  if (order.size() != l) return false;
  std::vector<bool> removed(l, false);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= l || removed[v]) return false;
    for (int a : q.arrows_from(v))
      if (!removed[q.arrow(a).target]) return false;
    removed[v] = true;
  }
  return true;
}

std::vector<int> admissible_ordering(const Quiver& q) {
  const std::size_t l = q.vertex_count();
  std::vector<int> identity(l);
  for (std::size_t i = 0; i < l; ++i) identity[i] = static_cast<int>(i);
  if (is_admissible_ordering(q, identity)) return identity;
  std::vector<bool> removed(l, false);
  std::vector<int> order;
  while (order.size() < l) {
    bool found = false;
    for (std::size_t v = 0; v < l && !found; ++v) {
      if (removed[v]) continue;
      bool sink = true;
      for (int a : q.arrows_from(static_cast<int>(v)))
        if (!removed[q.arrow(a).target]) sink = false;
      if (sink) {
        removed[v] = true;
        order.push_back(static_cast<int>(v));
        found = true;
      }
    }
    if (!found) throw ValidationError("quiver has a directed cycle");
  }
  return order;
}

}  // namespace tiltlab
