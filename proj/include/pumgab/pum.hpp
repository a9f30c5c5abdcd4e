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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pumgab/field.hpp"
#include "pumgab/matrix.hpp"

namespace pumgab {

// A construction step produced an object that fails one of its defining
// relations, or no admissible generator exists.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// (n, k | k1) with dual memory mH over a given field. Unit memory codes have
// k1 == k.
struct PumParams {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t k1 = 0;
    std::size_t mH = 1;
};

// Smallest extension degree s for which the normal-basis construction keeps
// all (mH+1) n parity-check elements independent:
// (mH + 1) * ceil(n / (n - k)) * (n - k).
std::size_t min_field_size(std::size_t n, std::size_t k, std::size_t mH);

enum class CodeClass { unit_memory, partial_unit_memory, invalid };

struct RateCheck {
    CodeClass kind = CodeClass::invalid;
    std::string explanation;
    bool ok() const { return kind != CodeClass::invalid; }
};

// Unit memory iff k == mH (n-k) and k1 == k; partial unit memory iff
// mH (n-k) == k1 < k, which is the same as k/n > mH/(mH+1).
RateCheck rate_check(std::size_t n, std::size_t k, std::size_t k1, std::size_t mH);
std::string to_string(CodeClass kind);

// Frobenius exponents e_1..e_n such that h0_j = b^[e_j]: runs of n-k
// consecutive exponents starting at multiples of (mH+1)(n-k); the last run
// is cut short when (n-k) does not divide n.
std::vector<std::size_t> h0_exponents(std::size_t n, std::size_t k, std::size_t mH);

// Throws std::invalid_argument if the field is smaller than min_field_size()
// unless allow_small_field is set.
Vec build_h0(const ExtField& field, const NormalElement& b, std::size_t n, std::size_t k, std::size_t mH,
             bool allow_small_field = false);

// The banded parity-check description H_0, ..., H_mH with its defining vector.
struct ParityChain {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t mH = 1;
    Vec h0;
    std::vector<MatExt> blocks;  // H_0 .. H_mH, each (n-k) x n
};

// H^(c) = V_{(mH+1)(n-k)}(h0) sliced into mH+1 blocks of n-k rows.
ParityChain build_parity_chain(const PumParams& params, const NormalElement& b, bool allow_small_field = false);

struct ChainCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    // Coefficients over F_q of a vanishing combination of the defining
    // elements, present when the failure is a linear dependency.
    std::vector<std::uint32_t> dependency;
};

struct ChainReport {
    std::vector<ChainCheck> checks;
    std::size_t column_n = 0;  // n^(c)
    long column_k = 0;         // k^(c) = n - (mH+1)(n-k); may be <= 0
    std::vector<std::pair<std::size_t, std::size_t>> row_codes;  // (n^(r_i), k^(r_i)), i = 1..mH
    bool all_pass() const;
};

// Checks that every H_i, the column stack (H_0; ...; H_mH), and every row
// concatenation (H_i ... H_0) is a Frobenius matrix on a defining vector of
// full rank norm, i.e. each defines a Gabidulin code.
ChainReport verify_gabidulin_chain(const ParityChain& chain);

struct UnitMemoryEncoder {
    MatExt g0;
    MatExt g1;
};

struct SolveOptions {
    // Reject k1 < ceil(k/2), where the free-entry count of the generator
    // equations is not guaranteed positive.
    bool require_existence_condition = true;
};

// Solves G0 H_0^T = 0, G0 H_i^T + G1 H_{i-1}^T = 0 (i = 1..mH), G1 H_mH^T = 0
// for a pair with rank(G0) = k, rank(G1) = k1 and the last k - k1 rows of G1
// zero. Throws std::invalid_argument on violated preconditions and
// ConstructionError if the kernel admits no full-rank selection.
UnitMemoryEncoder solve_generator(std::span<const MatExt> blocks,
                                  std::size_t k,
                                  std::size_t k1,
                                  const SolveOptions& options = {});

struct PumCode {
    PumParams params;
    Felt normal_element;
    ParityChain chain;
    UnitMemoryEncoder encoder;
};

struct BuildOptions {
    bool allow_small_field = false;
    bool require_existence_condition = true;
};

// Full construction: normal element, h0, parity chain, generator pair. Every
// structural invariant is verified before returning; a failure throws
// ConstructionError naming the violated relation.
PumCode build_code(const PumParams& params, const BuildOptions& options = {});

struct GeneratorReport {
    std::vector<ChainCheck> checks;
    bool all_pass() const;
};

// Shapes, the orthogonality relations, rank(G0) = k, rank(G1) = k1 and the
// zero tail of G1.
GeneratorReport verify_generator(const PumCode& code);

struct CodewordSeq {
    BlockSeq info;
    BlockSeq code;
};

// c_j = u_j G0 + u_{j-1} G1 for j = 0..N, with u_{-1} = u_N = 0; the final
// block is the memory flush.
CodewordSeq encode_sequence(const UnitMemoryEncoder& encoder, const BlockSeq& info);

// True iff sum_i H_i c_{j-i}^T = 0 for every j, blocks outside the sequence
// being zero.
bool syndrome_sequence(std::span<const MatExt> blocks, const BlockSeq& code);

struct MinimalBasicReport {
    // Degree of the determinant of each window of n-k contiguous columns of
    // H(D) = H_0 + H_1 D + ... + H_mH D^mH; -1 for a zero determinant.
    std::vector<long> window_degrees;
    long max_degree = -1;       // mu
    std::size_t constraint = 0;  // nu = mH (n-k)
    bool pass = false;
};

MinimalBasicReport check_minimal_basic(std::span<const MatExt> blocks);

}  // namespace pumgab
