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

#include <filesystem>
#include <string>
#include <string_view>

#include "zenolie/pauli.hpp"

namespace zenolie {

/// Reads the line-oriented Pauli-sum format:
///
///   # comment
///   qubits: 2
///   1.0 XX
///   -0.5 ZI
///
/// Coefficients are real decimals. Throws ParseError with the offending
/// line number.
PauliSum parse_pauli_text(std::string_view text);
PauliSum parse_pauli_file(const std::filesystem::path& path);

/// Inverse of parse_pauli_text. Coefficients use the shortest decimal that
/// round-trips, terms sorted by letter string. Throws ContractViolation for
/// a non-Hermitian sum.
std::string write_pauli_text(const PauliSum& op);

}  // namespace zenolie
