// Copyright 2026 The Zenolie Authors
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

#include "zenolie/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include "json.hpp"

#include "zenolie/errors.hpp"

namespace zenolie {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Record& Record::set(std::string key, Value v) {
  for (auto& [k, old] : fields_)
    if (k == key) {
      old = std::move(v);
      return *this;
    }
  fields_.emplace_back(std::move(key), std::move(v));
  return *this;
}

std::string render_value(const Record::Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) return format_number(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return x;
        else return std::to_string(x);
      },
      v);
}

namespace {

nlohmann::ordered_json to_json_value(const Record::Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          // Same digits as the text rendering; non-finite values become strings.
          if (!std::isfinite(x)) return format_number(x);
          return std::stod(format_number(x));
        } else {
          return x;
        }
      },
      v);
}

nlohmann::ordered_json to_json_object(const Record& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields()) j[k] = to_json_value(v);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Record::to_text() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + ": " + render_value(v) + "\n";
  return out;
}

std::string Record::to_json() const { return to_json_object(*this).dump(2) + "\n"; }

std::string to_csv(const std::vector<Record>& rows) {
  if (rows.empty()) return {};
  std::string out;
  bool first = true;
  for (const auto& [k, v] : rows.front().fields()) {
    out += (first ? "" : ",") + csv_escape(k);
    first = false;
  }
  out += "\n";
  for (const auto& r : rows) {
    first = true;
    for (const auto& [k, v] : r.fields()) {
      out += (first ? "" : ",") + csv_escape(render_value(v));
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string to_json_array(const std::vector<Record>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(to_json_object(r));
  return arr.dump(2) + "\n";
}

Record to_record(const ClosureReport& r) {
  Record rec;
  rec.set("dimension", r.dimension)
      .set("traceless_dimension", r.traceless_dimension)
      .set("is_full_u", Record::Value(r.is_full_u))
      .set("is_full_su", Record::Value(r.is_full_su))
      .set("rounds", r.rounds)
      .set("discarded", r.discarded)
      .set("tol", Record::Value(r.tol))
      .set("smallest_singular_value", Record::Value(r.smallest_singular_value))
      .set("min_accepted_residual", Record::Value(r.min_accepted_residual));
  return rec;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace zenolie
