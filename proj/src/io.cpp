// Copyright 2026 The mvbb Authors
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

#include "mvbb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mvbb {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseReal(std::string_view token, int line) {
  token = Trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      end != token.data() + token.size()) {
    throw InputError("expected a real number, got '" + std::string(token) +
                         "'",
                     line);
  }
  if (!std::isfinite(value)) throw InputError("non-finite coordinate", line);
  return value;
}

PointSet ToMatrix(const std::vector<Vector3d>& pts) {
  if (pts.empty()) throw InputError("empty point set", 0);
  PointSet out(3, static_cast<Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.col(static_cast<Index>(i)) = pts[i];
  }
  return out;
}

}  // namespace

PointSet ReadXyz(std::istream& in) {
  std::vector<Vector3d> pts;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) {
      s = s.substr(0, hash);
    }
    std::istringstream tokens{std::string(Trim(s))};
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty()) continue;
    if (fields.size() != 3) {
      throw InputError("expected 3 coordinates, got " +
                           std::to_string(fields.size()),
                       line);
    }
    pts.emplace_back(ParseReal(fields[0], line), ParseReal(fields[1], line),
                     ParseReal(fields[2], line));
  }
  return ToMatrix(pts);
}

PointSet ReadCsv(std::istream& in) {
  std::vector<Vector3d> pts;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = Trim(raw);
    if (s.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = s.find(',', start);
      fields.push_back(s.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first) {
      first = false;
      std::string header;
      for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          header.push_back(static_cast<char>(
              std::tolower(static_cast<unsigned char>(ch))));
        }
      }
      if (header == "x,y,z") continue;
    }
    if (fields.size() != 3) {
      throw InputError("expected 3 comma-separated coordinates, got " +
                           std::to_string(fields.size()),
                       line);
    }
    pts.emplace_back(ParseReal(fields[0], line), ParseReal(fields[1], line),
                     ParseReal(fields[2], line));
  }
  return ToMatrix(pts);
}

PointSet ReadPoints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'", 0);
  std::string ext = path.size() >= 4 ? path.substr(path.size() - 4) : "";
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" ? ReadCsv(in) : ReadXyz(in);
}

void WriteXyz(std::ostream& out, const PointSet& points) {
  char buf[96];
  for (Index i = 0; i < points.cols(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", points(0, i),
                  points(1, i), points(2, i));
    out << buf;
  }
}

nlohmann::json BoxToJson(const OrientedBoxd& box, const std::string& method) {
  auto vec = [](const Vector3d& v) {
    return nlohmann::json::array({v.x(), v.y(), v.z()});
  };
  nlohmann::json axes = nlohmann::json::array();
  for (int a = 0; a < 3; ++a) axes.push_back(vec(box.frame.axis(a)));
  return {{"center", vec(box.center)},
          {"axes", axes},
          {"half_extents", vec(box.half_extents)},
          {"volume", box.Volume()},
          {"method", method}};
}

OrientedBoxd BoxFromJson(const nlohmann::json& j) {
  auto vec = [](const nlohmann::json& a) {
    return Vector3d(a.at(0).get<double>(), a.at(1).get<double>(),
                    a.at(2).get<double>());
  };
  OrientedBoxd box;
  box.center = vec(j.at("center"));
  box.half_extents = vec(j.at("half_extents"));
  box.frame =
      Frame3d::FromTwoAxes(vec(j.at("axes").at(0)), vec(j.at("axes").at(1)));
  return box;
}

void WriteOff(std::ostream& out, const OrientedBoxd& box) {
  const PointSet corners = box.Corners();
  out << "OFF\n8 6 12\n";
  char buf[96];
  for (Index c = 0; c < 8; ++c) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", corners(0, c),
                  corners(1, c), corners(2, c));
    out << buf;
  }
  // Corner c has bit a set when it sits on the + side of axis a; faces are
  // wound counter-clockwise seen from outside.
  out << "4 0 2 3 1\n"   // -z
      << "4 4 5 7 6\n"   // +z
      << "4 0 1 5 4\n"   // -y
      << "4 2 6 7 3\n"   // +y
      << "4 0 4 6 2\n"   // -x
      << "4 1 3 7 5\n";  // +x
}

}  // namespace mvbb
