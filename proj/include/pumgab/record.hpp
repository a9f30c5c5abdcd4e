// Copyright 2026 The pumgab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pumgab/matrix.hpp"
#include "pumgab/pum.hpp"

namespace pumgab {

// Text records: JSON objects with a "format" tag and a "version" number.
// Elements are written as their integer encodings, matrices as arrays of rows.

inline constexpr int kRecordVersion = 1;
inline constexpr std::string_view kCodeFormat = "pumgab/code";
inline constexpr std::string_view kBlocksFormat = "pumgab/blocks";

// Unparseable input, wrong format tag or version, or malformed contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string write_code_record(const PumCode& code);
// Loads the record as stored; the structural invariants are not re-checked
// here (see verify_gabidulin_chain and verify_generator). Throws FormatError.
PumCode read_code_record(std::string_view text);

struct BlockFile {
    FieldPtr field;
    BlockSeq blocks{0};
};

std::string write_blocks(const ExtField& field, const BlockSeq& blocks);
BlockFile read_blocks(std::string_view text);

}  // namespace pumgab
