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

#include "zenolie/pauli_io.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "zenolie/errors.hpp"

namespace zenolie {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

double parse_coefficient(std::string_view tok, std::size_t line) {
  if (tok.find_first_of("ijIJ(,") != std::string_view::npos)
    throw ParseError("non-real coefficient '" + std::string(tok) + "'", line);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw ParseError("malformed coefficient '" + std::string(tok) + "'", line);
  return v;
}

}  // namespace

PauliSum parse_pauli_text(std::string_view text) {
  std::optional<PauliSum> sum;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!sum) {
      if (!line.starts_with("qubits:"))
        throw ParseError("expected 'qubits: <n>' header", line_no);
      const std::string_view num = trim(line.substr(7));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc{} || ptr != num.data() + num.size() || n == 0 ||
          n > kMaxPauliQubits)
        throw ParseError("invalid qubit count '" + std::string(num) + "'", line_no);
      sum.emplace(n);
      continue;
    }

    const auto toks = split_ws(line);
    if (toks.size() != 2)
      throw ParseError("expected '<coefficient> <letters>', got '" + std::string(line) + "'",
                       line_no);
    const double c = parse_coefficient(toks[0], line_no);
    const std::string_view letters = toks[1];
    if (letters.size() != sum->n_qubits())
      throw ParseError("letter string '" + std::string(letters) + "' has " +
                           std::to_string(letters.size()) + " letters, header declares " +
                           std::to_string(sum->n_qubits()),
                       line_no);
    if (letters.find_first_not_of("IXYZ") != std::string_view::npos)
      throw ParseError("letters must be I, X, Y or Z: '" + std::string(letters) + "'",
                       line_no);
    sum->add(letters, c);
  }
  if (!sum) throw ParseError("missing 'qubits: <n>' header", line_no);
  return std::move(*sum);
}

PauliSum parse_pauli_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_pauli_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.detail(), e.line());
  }
}

std::string write_pauli_text(const PauliSum& op) {
  if (!op.is_hermitian()) throw ContractViolation("write_pauli_text: coefficients must be real");
  std::vector<std::pair<std::string, double>> rows;
  rows.reserve(op.size());
  for (const auto& [s, c] : op.terms()) rows.emplace_back(s.letters(), c.real());
  std::sort(rows.begin(), rows.end());

  std::string out = "qubits: " + std::to_string(op.n_qubits()) + "\n";
  char buf[64];
  for (const auto& [letters, c] : rows) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
    out.append(buf, ptr);
    out += ' ';
    out += letters;
    out += '\n';
  }
  return out;
}

}  // namespace zenolie
