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

#ifndef MVBB_IO_HPP
#define MVBB_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mvbb/geom_core.hpp"

namespace mvbb {

/// Unreadable or malformed input. `line` is 1-based, or 0 when the error is
/// not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One point per line: three whitespace-separated reals. '#' starts a
/// comment; blank lines are skipped.
PointSet ReadXyz(std::istream& in);

/// Three comma-separated reals per line, with an optional "x,y,z" header.
PointSet ReadCsv(std::istream& in);

/// Dispatches on the extension: ".csv" is CSV, anything else is XYZ.
/// Throws InputError for unreadable files, malformed lines, non-finite
/// coordinates, and empty point sets.
PointSet ReadPoints(const std::string& path);

/// XYZ with 17 significant digits, so reading it back is lossless.
void WriteXyz(std::ostream& out, const PointSet& points);

/// {"center", "axes" (rows are the box axes), "half_extents", "volume",
/// "method"}.
nlohmann::json BoxToJson(const OrientedBoxd& box, const std::string& method);
OrientedBoxd BoxFromJson(const nlohmann::json& j);

/// The box as an OFF mesh: 8 vertices, 6 quadrilateral faces.
void WriteOff(std::ostream& out, const OrientedBoxd& box);

}  // namespace mvbb

#endif  // MVBB_IO_HPP
