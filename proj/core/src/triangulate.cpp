#include <algorithm>
#include <set>
#include <stdexcept>

#include "jetres/fan.hpp"

namespace jetres::fan {

using lattice::cross;
using lattice::det;
using lattice::dot;

namespace {

using Edge = std::pair<int, int>;

bool on_segment(const Vec3& p, const Vec3& q, const Vec3& r) {
  if (det(p, q, r) != 0) return false;
  Vec3 n = cross(p, q);
  return dot(cross(p, r), n) >= 0 && dot(cross(r, q), n) >= 0;
}

class FrontSearch {
 public:
  FrontSearch(std::vector<Vec3> points, const Admissible* admissible, std::size_t limit)
      : pts_(std::move(points)), admissible_(admissible), limit_(limit) {}

  // boundary of a convex polygon, subdivided by the points lying on it
  void add_boundary(const std::vector<Vec3>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vec3& p = order[i];
      const Vec3& q = order[(i + 1) % order.size()];
      std::vector<int> on;
      for (int k = 0; k < static_cast<int>(pts_.size()); ++k)
        if (on_segment(p, q, pts_[k])) on.push_back(k);
      Vec3 n = cross(p, q);
      std::sort(on.begin(), on.end(), [&](int a, int b) {
        return a != b && dot(cross(pts_[a], pts_[b]), n) > 0;
      });
      for (std::size_t k = 0; k + 1 < on.size(); ++k) front_.insert({on[k], on[k + 1]});
    }
  }

  void place(const Triangle& t) {
    std::array<int, 3> idx{};
    for (int k = 0; k < 3; ++k) idx[k] = index_of(t[k]);
    if (det(pts_[idx[0]], pts_[idx[1]], pts_[idx[2]]) < 0) std::swap(idx[1], idx[2]);
    tris_.push_back(idx);
    for (int k = 0; k < 3; ++k) {
      Edge e{idx[k], idx[(k + 1) % 3]};
      if (front_.erase(e) == 0) front_.insert({e.second, e.first});
    }
  }

  SearchResult run() {
    SearchResult r;
    try {
      r.ok = recurse();
    } catch (const LimitReached&) {
      r.ok = false;
      r.limit_hit = true;
    }
    r.nodes = nodes_;
    if (r.ok)
      for (const auto& t : tris_) r.triangles.push_back({pts_[t[0]], pts_[t[1]], pts_[t[2]]});
    return r;
  }

 private:
  struct LimitReached {};

  std::vector<Vec3> pts_;
  const Admissible* admissible_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::set<Edge> front_;
  std::vector<std::array<int, 3>> tris_;

  int index_of(const Vec3& v) {
    auto it = std::find(pts_.begin(), pts_.end(), v);
    if (it == pts_.end()) throw std::invalid_argument("placed triangle uses an unknown ray");
    return static_cast<int>(it - pts_.begin());
  }

  bool overlaps(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
    for (int pass = 0; pass < 2; ++pass) {
      const auto& T = pass ? b : a;
      const auto& U = pass ? a : b;
      for (int i = 0; i < 3; ++i) {
        const Vec3& p = pts_[T[i]];
        const Vec3& q = pts_[T[(i + 1) % 3]];
        if (det(p, q, pts_[U[0]]) <= 0 && det(p, q, pts_[U[1]]) <= 0 &&
            det(p, q, pts_[U[2]]) <= 0)
          return false;
      }
    }
    return true;
  }

  std::vector<int> candidates(const Edge& e) const {
    auto [u, v] = e;
    std::vector<int> out;
    for (int w = 0; w < static_cast<int>(pts_.size()); ++w) {
      if (w == u || w == v) continue;
      if (det(pts_[u], pts_[v], pts_[w]) != 1) continue;
      if (admissible_ && !(*admissible_)(pts_[u], pts_[v], pts_[w])) continue;
      bool empty = true;
      for (int r = 0; r < static_cast<int>(pts_.size()) && empty; ++r) {
        if (r == u || r == v || r == w) continue;
        const Vec3& p = pts_[r];
        if (det(pts_[u], pts_[v], p) >= 0 && det(pts_[v], pts_[w], p) >= 0 &&
            det(pts_[w], pts_[u], p) >= 0)
          empty = false;
      }
      if (!empty) continue;
      std::array<int, 3> t{u, v, w};
      if (std::any_of(tris_.begin(), tris_.end(),
                      [&](const std::array<int, 3>& s) { return overlaps(t, s); }))
        continue;
      out.push_back(w);
    }
    return out;
  }

  bool recurse() {
    if (++nodes_ > limit_) throw LimitReached{};
    if (front_.empty()) return true;
    Edge best_edge{};
    std::vector<int> best;
    bool have = false;
    for (const auto& e : front_) {
      auto c = candidates(e);
      if (c.empty()) return false;
      if (!have || c.size() < best.size()) {
        best_edge = e;
        best = std::move(c);
        have = true;
      }
    }
    auto [u, v] = best_edge;
    for (int w : best) {
      std::vector<Edge> added, removed{best_edge};
      front_.erase(best_edge);
      for (Edge ne : {Edge{u, w}, Edge{w, v}}) {
        Edge rev{ne.second, ne.first};
        if (front_.erase(rev)) {
          removed.push_back(rev);
        } else {
          front_.insert(ne);
          added.push_back(ne);
        }
      }
      tris_.push_back({u, v, w});
      if (recurse()) return true;
      tris_.pop_back();
      for (const auto& a : added) front_.erase(a);
      for (const auto& r : removed) front_.insert(r);
    }
    return false;
  }
};

std::vector<Vec3> sorted_unique(std::vector<Vec3> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SearchResult unimodular_triangulation(const Cone& polygon, const std::vector<Vec3>& rays,
                                      std::size_t limit) {
  auto order = cyclic_order(polygon);
  std::vector<Vec3> pts;
  for (const auto& r : rays)
    if (cone_contains(polygon, r)) pts.push_back(r);
  pts.insert(pts.end(), order.begin(), order.end());
  FrontSearch search(sorted_unique(std::move(pts)), nullptr, limit);
  search.add_boundary(order);
  return search.run();
}

SearchResult complete_octant(const std::vector<Vec3>& rays, const std::vector<Triangle>& placed,
                             const Admissible& admissible, std::size_t limit) {
  std::vector<Vec3> pts = rays;
  pts.insert(pts.end(), {lattice::e1, lattice::e2, lattice::e3});
  for (const auto& t : placed) pts.insert(pts.end(), t.begin(), t.end());
  FrontSearch search(sorted_unique(std::move(pts)), admissible ? &admissible : nullptr, limit);
  search.add_boundary({lattice::e1, lattice::e2, lattice::e3});
  for (const auto& t : placed) search.place(t);
  SearchResult r = search.run();
  if (r.ok) {
    // report only the triangles found by the search
    r.triangles.erase(r.triangles.begin(),
                      r.triangles.begin() + static_cast<std::ptrdiff_t>(placed.size()));
  }
  return r;
}

}  // namespace jetres::fan
