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

#include "kakeya/shape_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

std::vector<Vec2> vertices2(const json& j) {
  std::vector<Vec2> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2)
      throw InvalidParameter("expected [x, y] vertex rows");
    out.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  return out;
}

std::vector<Vec3> vertices3(const json& j) {
  std::vector<Vec3> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3)
      throw InvalidParameter("expected [x, y, z] vertex rows");
    out.push_back({row[0].get<double>(), row[1].get<double>(),
                   row[2].get<double>()});
  }
  return out;
}

json shape_json(const Shape& s) {
  json j;
  if (const auto* p = std::get_if<ConvexPolygon>(&s)) {
    j["type"] = "polygon";
    json verts = json::array();
    for (const Vec2& v : p->vertices()) verts.push_back({v.x, v.y});
    j["vertices"] = std::move(verts);
  } else if (const auto* b = std::get_if<Ball>(&s)) {
    j["type"] = "ball";
    j["center"] = b->center;
    j["radius"] = b->radius;
  } else if (const auto* h = std::get_if<HPolytope>(&s)) {
    j["type"] = "hpolytope";
    j["normals"] = h->normals();
    j["offsets"] = h->offsets();
  } else {
    const auto& k = std::get<VPolytope3>(s);
    j["type"] = "vpolytope3";
    json verts = json::array();
    for (const Vec3& v : k.vertices()) verts.push_back({v.x, v.y, v.z});
    j["vertices"] = std::move(verts);
  }
  return j;
}

}  // namespace

Shape parse_shape(const std::string& text) {
  json j = parse_document(text);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InvalidParameter("shape document needs a \"type\" field");
  const std::string type = j["type"].get<std::string>();

  if (type == "polygon") {
    if (!j.contains("vertices"))
      throw InvalidParameter("polygon needs \"vertices\"");
    return Shape{ConvexPolygon(vertices2(j["vertices"]))};
  }
  if (type == "ball") {
    if (!j.contains("center") || !j.contains("radius"))
      throw InvalidParameter("ball needs \"center\" and \"radius\"");
    return Shape{Ball(j["center"].get<Vector>(), j["radius"].get<double>())};
  }
  if (type == "hpolytope") {
    if (!j.contains("normals") || !j.contains("offsets"))
      throw InvalidParameter("hpolytope needs \"normals\" and \"offsets\"");
    return Shape{HPolytope(j["normals"].get<std::vector<Vector>>(),
                           j["offsets"].get<Vector>())};
  }
  if (type == "vpolytope3") {
    if (!j.contains("vertices"))
      throw InvalidParameter("vpolytope3 needs \"vertices\"");
    return Shape{VPolytope3::hull(vertices3(j["vertices"]))};
  }
  if (type == "mu_polygon") {
    return Shape{polygon_from_phi(parse_mu_vector(text))};
  }
  throw InvalidParameter("unknown shape type: " + type);
}

MuVector parse_mu_vector(const std::string& text) {
  json j = parse_document(text);
  if (!j.is_object() || j.value("type", "") != "mu_polygon")
    throw InvalidParameter("expected a \"mu_polygon\" document");
  if (!j.contains("mu") || !j.contains("lengths"))
    throw InvalidParameter("mu_polygon needs \"mu\" and \"lengths\"");
  return MuVector(j["mu"].get<int>(), j["lengths"].get<std::vector<double>>());
}

std::string to_json(const Shape& s) { return shape_json(s).dump(); }

std::string to_json(const MuVector& v) {
  json j;
  j["type"] = "mu_polygon";
  j["mu"] = v.mu;
  j["lengths"] = v.lengths;
  return j.dump();
}

std::string to_json(const ExperimentReport& report) {
  json j;
  j["name"] = report.name;
  j["trials"] = report.trials;
  j["failures"] = report.failures;
  j["worst_violation"] = report.worst_violation;
  json details = json::array();
  for (const TrialRecord& rec : report.details) {
    json r;
    r["trial"] = rec.trial;
    r["digest"] = rec.digest;
    r["failed"] = rec.failed;
    json q = json::object();
    for (const auto& [key, value] : rec.quantities) q[key] = value;
    r["quantities"] = std::move(q);
    details.push_back(std::move(r));
  }
  j["details"] = std::move(details);
  return j.dump();
}

std::string to_csv(const ExperimentReport& report) {
  // Column set = union of quantity names, in first-seen order.
  std::vector<std::string> cols;
  for (const TrialRecord& rec : report.details) {
    for (const auto& [key, value] : rec.quantities) {
      (void)value;
      if (std::find(cols.begin(), cols.end(), key) == cols.end())
        cols.push_back(key);
    }
  }
  std::ostringstream os;
  os << "trial,digest,failed";
  for (const std::string& c : cols) os << ',' << c;
  os << '\n';
  for (const TrialRecord& rec : report.details) {
    os << rec.trial << ',' << rec.digest << ',' << (rec.failed ? 1 : 0);
    for (const std::string& c : cols) {
      os << ',';
      for (const auto& [key, value] : rec.quantities) {
        if (key == c) {
          os << json(value).dump();
          break;
        }
      }
    }
    os << '\n';
  }
  return os.str();
}

Shape load_shape(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_shape(buf.str());
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidParameter("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace kakeya
