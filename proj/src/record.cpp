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

#include "pumgab/record.hpp"

#include <json.hpp>

namespace pumgab {

namespace {

using json = nlohmann::ordered_json;

json field_json(const ExtField& f) {
    return json{{"q", f.q()}, {"s", f.s()}, {"modulus", f.modulus()}};
}

json vec_json(std::span<const Felt> v) {
    json out = json::array();
    for (Felt x : v)
        out.push_back(x.value);
    return out;
}

json mat_json(const MatExt& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(vec_json(m.row(r)));
    return out;
}

void check_header(const json& j, std::string_view format) {
    if (!j.is_object())
        throw FormatError("record is not a JSON object");
    if (!j.contains("format") || j.at("format").get<std::string>() != format)
        throw FormatError("expected a '" + std::string(format) + "' record");
    if (!j.contains("version") || j.at("version").get<int>() != kRecordVersion)
        throw FormatError("unsupported record version (expected " + std::to_string(kRecordVersion) + ")");
}

FieldPtr field_from(const json& j) {
    try {
        return ExtField::make(j.at("q").get<std::uint32_t>(), j.at("s").get<unsigned>(),
                              j.at("modulus").get<std::vector<std::uint32_t>>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid field description: ") + e.what());
    }
}

Vec vec_from(const ExtField& f, const json& j) {
    Vec out;
    for (const auto& x : j) {
        const auto v = x.get<std::uint64_t>();
        if (v >= f.order())
            throw FormatError("element " + std::to_string(v) + " out of range for the field");
        out.push_back(Felt{static_cast<std::uint32_t>(v)});
    }
    return out;
}

MatExt mat_from(const FieldPtr& f, const json& j) {
    if (!j.is_array())
        throw FormatError("matrix must be an array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j)
        rows.push_back(vec_from(*f, r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw FormatError("ragged matrix rows");
    return MatExt::from_rows(f, rows, cols);
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("unparseable record: ") + e.what());
    }
}

}  // namespace

std::string write_code_record(const PumCode& code) {
    const auto& p = code.params;
    json params = field_json(*p.field);
    params["n"] = p.n;
    params["k"] = p.k;
    params["k1"] = p.k1;
    params["mH"] = p.mH;
    json blocks = json::array();
    for (const auto& h : code.chain.blocks)
        blocks.push_back(mat_json(h));
    json j{{"format", kCodeFormat},
           {"version", kRecordVersion},
           {"params", params},
           {"normal_element", code.normal_element.value},
           {"h0", vec_json(code.chain.h0)},
           {"H_blocks", blocks},
           {"G0", mat_json(code.encoder.g0)},
           {"G1", mat_json(code.encoder.g1)}};
    return j.dump(2) + "\n";
}

PumCode read_code_record(std::string_view text) {
    const json j = parse(text);
    try {
        check_header(j, kCodeFormat);
        const auto& params = j.at("params");
        PumCode code;
        code.params.field = field_from(params);
        code.params.n = params.at("n").get<std::size_t>();
        code.params.k = params.at("k").get<std::size_t>();
        code.params.k1 = params.at("k1").get<std::size_t>();
        code.params.mH = params.at("mH").get<std::size_t>();
        const auto& f = code.params.field;
        const auto nb = j.at("normal_element").get<std::uint64_t>();
        if (nb >= f->order())
            throw FormatError("normal element out of range for the field");
        code.normal_element = Felt{static_cast<std::uint32_t>(nb)};
        code.chain.field = f;
        code.chain.n = code.params.n;
        code.chain.k = code.params.k;
        code.chain.mH = code.params.mH;
        code.chain.h0 = vec_from(*f, j.at("h0"));
        for (const auto& h : j.at("H_blocks"))
            code.chain.blocks.push_back(mat_from(f, h));
        code.encoder.g0 = mat_from(f, j.at("G0"));
        code.encoder.g1 = mat_from(f, j.at("G1"));
        return code;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed code record: ") + e.what());
    }
}

std::string write_blocks(const ExtField& field, const BlockSeq& blocks) {
    json rows = json::array();
    for (const auto& b : blocks.blocks())
        rows.push_back(vec_json(b));
    json j{{"format", kBlocksFormat},
           {"version", kRecordVersion},
           {"field", field_json(field)},
           {"n", blocks.n()},
           {"blocks", rows}};
    return j.dump(2) + "\n";
}

BlockFile read_blocks(std::string_view text) {
    const json j = parse(text);
    try {
        check_header(j, kBlocksFormat);
        BlockFile out;
        out.field = field_from(j.at("field"));
        const auto n = j.at("n").get<std::size_t>();
        out.blocks = BlockSeq(n);
        for (const auto& b : j.at("blocks")) {
            auto v = vec_from(*out.field, b);
            if (v.size() != n)
                throw FormatError("block of length " + std::to_string(v.size()) + " in a sequence with n = " +
                                  std::to_string(n));
            out.blocks.push_back(std::move(v));
        }
        return out;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed block file: ") + e.what());
    }
}

}  // namespace pumgab
