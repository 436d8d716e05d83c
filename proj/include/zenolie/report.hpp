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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zenolie/lie.hpp"

namespace zenolie {

/// Every floating-point value printed by the tools goes through this:
/// 12 significant digits, printf %g style.
std::string format_number(double v);

/// An ordered flat key-value record, rendered identically as text, JSON or
/// CSV apart from syntax.
class Record {
 public:
  using Value = std::variant<std::int64_t, double, bool, std::string>;

  Record& set(std::string key, Value v);
  Record& set(std::string key, std::size_t v) {
    return set(std::move(key), Value(static_cast<std::int64_t>(v)));
  }
  Record& set(std::string key, int v) {
    return set(std::move(key), Value(static_cast<std::int64_t>(v)));
  }
  Record& set(std::string key, const char* v) { return set(std::move(key), Value(std::string(v))); }

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }

  /// `key: value` lines.
  std::string to_text() const;
  /// A single JSON object.
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

std::string render_value(const Record::Value& v);

/// Header row from the first record's keys, one row per record.
std::string to_csv(const std::vector<Record>& rows);
/// JSON array of objects.
std::string to_json_array(const std::vector<Record>& rows);

Record to_record(const ClosureReport& r);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace zenolie
