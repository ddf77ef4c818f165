// Copyright 2026 The Kakeya Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kakeya/polytope3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

struct Face {
  int v[3];
  Vec3 n;      // outward unit normal
  double off;  // dot(n, vertex)
  bool alive = true;
};

Face make_face(const std::vector<Vec3>& pts, int a, int b, int c) {
  Face f;
  f.v[0] = a;
  f.v[1] = b;
  f.v[2] = c;
  Vec3 raw = cross(pts[static_cast<std::size_t>(b)] - pts[static_cast<std::size_t>(a)],
                   pts[static_cast<std::size_t>(c)] - pts[static_cast<std::size_t>(a)]);
  double len = norm(raw);
  if (len == 0.0) throw NumericalFailure("hull produced a zero-area facet");
  f.n = raw * (1.0 / len);
  f.off = dot(f.n, pts[static_cast<std::size_t>(a)]);
  return f;
}

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

// Directed-edge map over the alive faces: (u, v) -> face index.  In a closed
// triangulated surface every directed edge occurs exactly once.
std::unordered_map<std::uint64_t, int> build_edge_map(
    const std::vector<Face>& faces) {
  std::unordered_map<std::uint64_t, int> map;
  map.reserve(faces.size() * 3);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    if (!faces[fi].alive) continue;
    const Face& f = faces[fi];
    for (int e = 0; e < 3; ++e) {
      auto [it, inserted] =
          map.emplace(edge_key(f.v[e], f.v[(e + 1) % 3]), static_cast<int>(fi));
      if (!inserted)
        throw NumericalFailure("hull surface lost manifoldness");
    }
  }
  return map;
}

}  // namespace

VPolytope3 VPolytope3::hull(const std::vector<Vec3>& points) {
  // Exact dedupe; near-duplicates fall inside the visibility epsilon and are
  // skipped during insertion.
  std::vector<Vec3> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.z < b.z)));
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4)
    throw DegenerateShape("hull needs at least 4 distinct points");
  for (const Vec3& p : pts)
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
      throw InvalidParameter("hull input must be finite");

  Vec3 lo = pts.front(), hi = pts.front();
  for (const Vec3& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const double scale = std::max(1e-300, norm(hi - lo));
  const double eps = 1e-10 * scale;

  // Initial simplex: spread-out quadruple (farthest point, then farthest
  // from the line, then farthest from the plane).
  std::size_t i0 = 0, i1 = 0;
  double best = -1.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    double d = norm_sq(pts[i] - pts[i0]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  std::size_t i2 = 0;
  best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double d = norm_sq(cross(pts[i1] - pts[i0], pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (std::sqrt(best) <= eps * norm(pts[i1] - pts[i0]))
    throw DegenerateShape("hull input is collinear");
  Vec3 plane_n = normalized(cross(pts[i1] - pts[i0], pts[i2] - pts[i0]));
  std::size_t i3 = 0;
  best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double d = std::abs(dot(plane_n, pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (best <= eps) throw DegenerateShape("hull input is coplanar");

  int a = static_cast<int>(i0), b = static_cast<int>(i1),
      c = static_cast<int>(i2), d = static_cast<int>(i3);
  if (dot(plane_n, pts[i3] - pts[i0]) > 0.0) std::swap(b, c);
  // Now d lies below plane (a, b, c); the four faces wind outward.
  std::vector<Face> faces{make_face(pts, a, b, c), make_face(pts, a, c, d),
                          make_face(pts, c, b, d), make_face(pts, b, a, d)};

  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    if (pi == i0 || pi == i1 || pi == i2 || pi == i3) continue;
    const Vec3 p = pts[pi];

    std::vector<int> region;
    std::vector<char> in_region(faces.size(), 0);
    std::vector<double> dist(faces.size(), 0.0);
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      if (!faces[fi].alive) continue;
      dist[fi] = dot(faces[fi].n, p) - faces[fi].off;
      if (dist[fi] > eps) {
        region.push_back(static_cast<int>(fi));
        in_region[fi] = 1;
      }
    }
    if (region.empty()) continue;  // inside or on the current hull

    auto edges = build_edge_map(faces);

    // Swallow coplanar faces adjacent to the strictly visible region so that
    // every horizon edge borders a face the point is strictly below; this is
    // what keeps the new cone facets non-degenerate.
    for (std::size_t qi = 0; qi < region.size(); ++qi) {
      const Face& f = faces[static_cast<std::size_t>(region[qi])];
      for (int e = 0; e < 3; ++e) {
        auto it = edges.find(edge_key(f.v[(e + 1) % 3], f.v[e]));
        if (it == edges.end())
          throw NumericalFailure("hull surface lost an edge twin");
        int nb = it->second;
        if (!in_region[static_cast<std::size_t>(nb)] &&
            dist[static_cast<std::size_t>(nb)] > -eps) {
          in_region[static_cast<std::size_t>(nb)] = 1;
          region.push_back(nb);
        }
      }
    }

    // Horizon: directed edges of region faces whose twin face is kept.
    std::vector<std::pair<int, int>> horizon;
    for (int fi : region) {
      const Face& f = faces[static_cast<std::size_t>(fi)];
      for (int e = 0; e < 3; ++e) {
        int u = f.v[e], v = f.v[(e + 1) % 3];
        int nb = edges.at(edge_key(v, u));
        if (!in_region[static_cast<std::size_t>(nb)]) horizon.emplace_back(u, v);
      }
    }
    if (horizon.empty())
      throw NumericalFailure("hull visibility region swallowed the surface");

    for (int fi : region) faces[static_cast<std::size_t>(fi)].alive = false;
    for (auto [u, v] : horizon)
      faces.push_back(make_face(pts, u, v, static_cast<int>(pi)));
  }

  // Compact: keep the vertices referenced by alive faces.
  std::vector<int> remap(pts.size(), -1);
  VPolytope3 out;
  for (const Face& f : faces) {
    if (!f.alive) continue;
    for (int e = 0; e < 3; ++e) {
      int vi = f.v[e];
      if (remap[static_cast<std::size_t>(vi)] < 0) {
        remap[static_cast<std::size_t>(vi)] = static_cast<int>(out.verts_.size());
        out.verts_.push_back(pts[static_cast<std::size_t>(vi)]);
      }
    }
    out.facets_.push_back(Facet{remap[static_cast<std::size_t>(f.v[0])],
                                remap[static_cast<std::size_t>(f.v[1])],
                                remap[static_cast<std::size_t>(f.v[2])], f.n});
  }

  // Closed-manifold sanity: every directed edge once, Euler characteristic 2.
  std::unordered_map<std::uint64_t, int> check;
  check.reserve(out.facets_.size() * 3);
  for (const Facet& f : out.facets_) {
    const int vv[3] = {f.a, f.b, f.c};
    for (int e = 0; e < 3; ++e)
      if (!check.emplace(edge_key(vv[e], vv[(e + 1) % 3]), 1).second)
        throw NumericalFailure("hull output is not a closed surface");
  }
  std::ptrdiff_t V = static_cast<std::ptrdiff_t>(out.verts_.size());
  std::ptrdiff_t E = static_cast<std::ptrdiff_t>(check.size()) / 2;
  std::ptrdiff_t F = static_cast<std::ptrdiff_t>(out.facets_.size());
  if (V - E + F != 2)
    throw NumericalFailure("hull output violates the Euler relation");

  // Outward-orientation sanity against the vertex centroid.
  Vec3 centroid{0, 0, 0};
  for (const Vec3& v : out.verts_) centroid = centroid + v;
  centroid = centroid * (1.0 / static_cast<double>(out.verts_.size()));
  for (const Facet& f : out.facets_) {
    if (dot(f.normal, out.verts_[static_cast<std::size_t>(f.a)] - centroid) < 0.0)
      throw NumericalFailure("hull facet normal points inward");
  }
  return out;
}

double volume(const VPolytope3& k) {
  double six_v = 0.0;
  for (const auto& f : k.facets()) {
    const Vec3& a = k.vertices()[static_cast<std::size_t>(f.a)];
    const Vec3& b = k.vertices()[static_cast<std::size_t>(f.b)];
    const Vec3& c = k.vertices()[static_cast<std::size_t>(f.c)];
    six_v += dot(a, cross(b, c));
  }
  return six_v / 6.0;
}

double surface_area(const VPolytope3& k) {
  double s = 0.0;
  for (const auto& f : k.facets()) {
    const Vec3& a = k.vertices()[static_cast<std::size_t>(f.a)];
    const Vec3& b = k.vertices()[static_cast<std::size_t>(f.b)];
    const Vec3& c = k.vertices()[static_cast<std::size_t>(f.c)];
    s += 0.5 * norm(cross(b - a, c - a));
  }
  return s;
}

double support(const VPolytope3& k, Vec3 u) {
  if (u == Vec3{0, 0, 0})
    throw InvalidDirection("support direction must be nonzero");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec3& v : k.vertices()) best = std::max(best, dot(v, u));
  return best;
}

VPolytope3 rotated(const VPolytope3& k, const Rotation& rho) {
  if (rho.dim() != 3)
    throw DimensionMismatch("3D polytope under a non-3D rotation");
  VPolytope3 out;
  out.verts_.reserve(k.verts_.size());
  for (const Vec3& v : k.verts_) out.verts_.push_back(rho.apply(v));
  out.facets_ = k.facets_;
  for (auto& f : out.facets_) f.normal = rho.apply(f.normal);
  return out;
}

VPolytope3 translated(const VPolytope3& k, const Vector& t) {
  Vec3 tv = to_vec3(t);
  VPolytope3 out;
  out.verts_.reserve(k.verts_.size());
  for (const Vec3& v : k.verts_) out.verts_.push_back(v + tv);
  out.facets_ = k.facets_;
  return out;
}

VPolytope3 scaled(const VPolytope3& k, double factor) {
  if (!(factor > 0.0)) throw InvalidParameter("scale factor must be positive");
  VPolytope3 out;
  out.verts_.reserve(k.verts_.size());
  for (const Vec3& v : k.verts_) out.verts_.push_back(v * factor);
  out.facets_ = k.facets_;
  return out;
}

HPolytope to_hpolytope(const VPolytope3& k) {
  double scale = 0.0;
  for (const Vec3& v : k.vertices()) scale = std::max(scale, norm(v));
  scale = std::max(scale, 1e-300);

  std::vector<Vector> normals;
  Vector offsets;
  for (const auto& f : k.facets()) {
    double off = dot(f.normal, k.vertices()[static_cast<std::size_t>(f.a)]);
    bool dup = false;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      Vec3 n_prev{normals[i][0], normals[i][1], normals[i][2]};
      if (dot(n_prev, f.normal) > 1.0 - 1e-12 &&
          std::abs(offsets[i] - off) <= 1e-9 * scale) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      normals.push_back(to_vector(f.normal));
      offsets.push_back(off);
    }
  }
  return HPolytope::unchecked(std::move(normals), std::move(offsets));
}

}  // namespace kakeya
