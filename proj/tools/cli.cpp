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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pumgab/distance.hpp"
#include "pumgab/pum.hpp"
#include "pumgab/record.hpp"

namespace pumgab::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path);
    out << text;
    if (!out)
        throw IoError("write failed for " + path);
}

json params_json(const PumParams& p) {
    return json{{"q", p.field->q()}, {"s", p.field->s()}, {"modulus", p.field->modulus()},
                {"n", p.n},          {"k", p.k},          {"k1", p.k1},
                {"mH", p.mH}};
}

json check_json(const ChainCheck& c) {
    json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.dependency.empty())
        j["dependency"] = c.dependency;
    return j;
}

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
    std::size_t n = 0, k = 0, k1 = 0, mH = 1;
    std::uint32_t q = 2;
    std::optional<unsigned> s;
    std::vector<std::uint32_t> modulus;
    bool relax_existence = false;
    std::string out_path;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    const auto rc = rate_check(a.n, a.k, a.k1, a.mH);
    if (!rc.ok())
        throw ValidationFailure(rc.explanation);
    const auto needed = min_field_size(a.n, a.k, a.mH);
    const unsigned s = a.s.value_or(static_cast<unsigned>(needed));
    if (s < needed)
        throw ValidationFailure("field-size constraint violated: s = " + std::to_string(s) +
                                " < (mH+1)*ceil(n/(n-k))*(n-k) = " + std::to_string(needed));
    FieldPtr field;
    try {
        field = ExtField::make(a.q, s, a.modulus.empty() ? std::nullopt : std::optional(a.modulus));
    } catch (const std::invalid_argument& e) {
        throw ValidationFailure(e.what());
    }
    BuildOptions opts;
    opts.require_existence_condition = !a.relax_existence;
    PumCode code;
    try {
        code = build_code({field, a.n, a.k, a.k1, a.mH}, opts);
    } catch (const std::invalid_argument& e) {
        throw ValidationFailure(e.what());
    } catch (const ConstructionError& e) {
        throw ValidationFailure(e.what());
    }
    write_file(a.out_path, write_code_record(code));
    out << "constructed " << to_string(rc.kind) << " code (" << a.n << "," << a.k << "|" << a.k1 << ") mH=" << a.mH
        << " over F_" << a.q << "^" << s << "\n"
        << "normal element: " << code.normal_element.value << "\n"
        << "h0:";
    for (Felt x : code.chain.h0)
        out << ' ' << x.value;
    out << "\nwritten: " << a.out_path << "\n";
    return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string code_path;
    std::string out_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const PumCode code = read_code_record(read_file(a.code_path));
    const auto& p = code.params;
    json checks = json::array();
    bool all = true;
    auto add = [&](const ChainCheck& c) {
        checks.push_back(check_json(c));
        all = all && c.pass;
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    };

    const auto rc = rate_check(p.n, p.k, p.k1, p.mH);
    add({"rate restriction", rc.ok(), rc.explanation, {}});

    json derived;
    try {
        const auto chain = verify_gabidulin_chain(code.chain);
        for (const auto& c : chain.checks)
            add(c);
        json rows = json::array();
        for (auto [nr, kr] : chain.row_codes)
            rows.push_back(json{{"n", nr}, {"k", kr}});
        derived = json{{"column_code", json{{"n", chain.column_n}, {"k", chain.column_k}}}, {"row_codes", rows}};
    } catch (const std::exception& e) {
        add({"parity chain", false, e.what(), {}});
    }

    try {
        const auto gen = verify_generator(code);
        for (const auto& c : gen.checks)
            add(c);
    } catch (const std::exception& e) {
        add({"orthogonality", false, e.what(), {}});
    }

    try {
        const auto mb = check_minimal_basic(code.chain.blocks);
        add({"minimal basic form", mb.pass,
             "max subdeterminant degree " + std::to_string(mb.max_degree) + ", constraint length " +
                 std::to_string(mb.constraint),
             {}});
    } catch (const std::exception& e) {
        add({"minimal basic form", false, e.what(), {}});
    }

    json report{{"format", "pumgab/verify-report"},
                {"version", kRecordVersion},
                {"params", params_json(p)},
                {"checks", checks},
                {"derived", derived},
                {"pass", all}};
    if (!a.out_path.empty())
        write_file(a.out_path, report.dump(2) + "\n");
    out << (all ? "all checks passed" : "verification FAILED") << "\n";
    return all ? kExitOk : kExitValidation;
}

// --- distance ----------------------------------------------------------------

struct DistanceArgs {
    std::string code_path;
    std::size_t L = 8;
    std::string metric = "sum_rank";
    std::uint64_t budget = DistanceBudget{}.max_states;
    std::uint64_t max_transitions = DistanceBudget{}.max_transitions;
    std::size_t window_from = 0;
    std::size_t window_to = 0;
    std::string out_path;
};

int cmd_distance(const DistanceArgs& a, std::ostream& out) {
    const PumCode code = read_code_record(read_file(a.code_path));
    const auto& p = code.params;
    const Metric metric = a.metric == "hamming" ? Metric::hamming : Metric::sum_rank;
    DistanceBudget budget{a.budget, a.max_transitions};
    const auto profile = row_distance_profile(code.encoder, a.L, metric, budget);

    json d_row = json::array();
    for (const auto& d : profile.d_row)
        d_row.push_back(d ? json(*d) : json("empty"));

    std::size_t from = a.window_from, to = a.window_to;
    if (from == 0 && to == 0) {
        from = a.L >= 3 ? 2 : 1;
        to = a.L;
    }
    json slope = nullptr, window = nullptr, intercept = nullptr;
    std::optional<Rational> slope_value;
    if (to > from && to <= a.L && from >= 1 && profile.at(from) && profile.at(to)) {
        slope_value = slope_estimate(profile, from, to);
        slope = slope_value->str();
        window = json::array({from, to});
        intercept = intercept_estimate(profile, *slope_value).str();
    }

    json bounds = nullptr, bound_checks = nullptr;
    const auto rc = rate_check(p.n, p.k, p.k1, p.mH);
    if (rc.ok()) {
        const auto ub = upper_bounds(p.n, p.k, p.k1, p.mH);
        bounds = json{{"free_distance", ub.d_free_bound}, {"slope", ub.slope_bound}};
        bound_checks = json{{"d_free_within_bound", !profile.d_free || *profile.d_free <= ub.d_free_bound},
                            {"slope_within_bound",
                             !slope_value || *slope_value <= Rational::of(static_cast<long long>(ub.slope_bound), 1)}};
    }

    json construction = json{{"applies", construction_bound_applies(p.n, p.k, p.k1, p.mH)}};
    json per_order = json::array();
    for (std::size_t ell = 1; ell <= a.L; ++ell) {
        const auto bound = construction_lower_bound(ell, p.n, p.k);
        const auto d = profile.at(ell);
        json entry{{"order", ell}, {"bound", bound}};
        entry["holds"] = d ? json(*d >= bound && (ell != 1 || *d == bound)) : json(nullptr);
        per_order.push_back(entry);
    }
    construction["per_order"] = per_order;

    json report{{"format", "pumgab/distance-report"},
                {"version", kRecordVersion},
                {"params", params_json(p)},
                {"metric", to_string(metric)},
                {"L", a.L},
                {"d_row", d_row},
                {"d_free", profile.d_free ? json(*profile.d_free) : json(nullptr)},
                {"status", to_string(profile.status)},
                {"certified_at", profile.certified_at ? json(*profile.certified_at) : json(nullptr)},
                {"d_free_lower_bound",
                 profile.d_free_lower_bound ? json(*profile.d_free_lower_bound) : json(nullptr)},
                {"zero_weight_cycle", profile.zero_weight_cycle},
                {"zero_block_in_minimizer", profile.zero_block_in_minimizer},
                {"state_classes", profile.state_classes},
                {"slope_estimate", slope},
                {"window", window},
                {"intercept_estimate", intercept},
                {"bounds", bounds},
                {"bound_checks", bound_checks},
                {"construction_bound", construction}};
    write_file(a.out_path, report.dump(2) + "\n");

    out << "metric: " << to_string(metric) << "\nd_row:";
    for (const auto& d : profile.d_row)
        out << ' ' << (d ? std::to_string(*d) : std::string("empty"));
    out << "\nd_free: " << (profile.d_free ? std::to_string(*profile.d_free) : std::string("none")) << " ("
        << to_string(profile.status) << ")\n";
    if (slope_value)
        out << "slope estimate on [" << from << "," << to << "]: " << slope_value->str() << "\n";
    out << "written: " << a.out_path << "\n";
    if (!profile.d_free)
        throw ValidationFailure("extended row set is empty for every order up to L = " + std::to_string(a.L));
    return kExitOk;
}

// --- encode / weight ---------------------------------------------------------

struct EncodeArgs {
    std::string code_path;
    std::string info_path;
    std::string out_path;
};

int cmd_encode(const EncodeArgs& a, std::ostream& out) {
    const PumCode code = read_code_record(read_file(a.code_path));
    const BlockFile info = read_blocks(read_file(a.info_path));
    if (!same_field(*info.field, *code.params.field))
        throw ValidationFailure("information file uses a different field context than the code");
    if (info.blocks.n() != code.params.k)
        throw ValidationFailure("information blocks have length " + std::to_string(info.blocks.n()) +
                                ", code expects k = " + std::to_string(code.params.k));
    const auto seq = encode_sequence(code.encoder, info.blocks);
    write_file(a.out_path, write_blocks(*code.params.field, seq.code));
    out << "encoded " << info.blocks.size() << " information blocks into " << seq.code.size()
        << " codeword blocks\nwritten: " << a.out_path << "\n";
    return kExitOk;
}

struct WeightArgs {
    std::string seq_path;
    std::string out_path;
};

int cmd_weight(const WeightArgs& a, std::ostream& out) {
    const BlockFile file = read_blocks(read_file(a.seq_path));
    const auto rank = sum_rank_weight(*file.field, file.blocks);
    const auto hamming = hamming_weight(file.blocks);
    out << "sum_rank_weight: " << rank << "\nhamming_weight: " << hamming << "\n";
    if (!a.out_path.empty()) {
        json j{{"format", "pumgab/weight-report"},
               {"version", kRecordVersion},
               {"blocks", file.blocks.size()},
               {"sum_rank_weight", rank},
               {"hamming_weight", hamming}};
        write_file(a.out_path, j.dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct (partial) unit memory codes from Gabidulin codes and measure their sum rank distances"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build and verify a code, write its record");
    construct->add_option("--n", ca.n, "block length")->required();
    construct->add_option("--k", ca.k, "dimension")->required();
    construct->add_option("--k1", ca.k1, "rank of G1 (k for unit memory)")->required();
    construct->add_option("--mH", ca.mH, "dual memory")->capture_default_str();
    construct->add_option("--q", ca.q, "base field order (prime)")->capture_default_str();
    construct->add_option("--s", ca.s, "extension degree (default: smallest admissible)");
    construct->add_option("--modulus", ca.modulus, "modulus coefficients, constant term first");
    construct->add_flag("--relax-existence", ca.relax_existence, "allow k1 < ceil(k/2) in the generator solver");
    construct->add_option("--out,-o", ca.out_path, "code record path")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "re-check every structural property of a code record");
    verify->add_option("code", va.code_path, "code record")->required();
    verify->add_option("--out,-o", va.out_path, "report path");

    DistanceArgs da;
    auto* distance = app.add_subcommand("distance", "extended row distance profile by trellis search");
    distance->add_option("code", da.code_path, "code record")->required();
    distance->add_option("--L", da.L, "largest order")->capture_default_str()->check(CLI::PositiveNumber);
    distance->add_option("--metric", da.metric, "sum_rank or hamming")
        ->capture_default_str()
        ->check(CLI::IsMember({"sum_rank", "hamming"}));
    distance->add_option("--budget", da.budget, "maximum trellis state classes")->capture_default_str();
    distance->add_option("--max-transitions", da.max_transitions, "maximum branch table size")->capture_default_str();
    distance->add_option("--window-from", da.window_from, "slope window start");
    distance->add_option("--window-to", da.window_to, "slope window end");
    distance->add_option("--out,-o", da.out_path, "report path")->required();

    EncodeArgs ea;
    auto* encode = app.add_subcommand("encode", "encode an information block file");
    encode->add_option("code", ea.code_path, "code record")->required();
    encode->add_option("info", ea.info_path, "information block file")->required();
    encode->add_option("--out,-o", ea.out_path, "codeword block file")->required();

    WeightArgs wa;
    auto* weight = app.add_subcommand("weight", "sum rank and Hamming weight of a block file");
    weight->add_option("seq", wa.seq_path, "block file")->required();
    weight->add_option("--out,-o", wa.out_path, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct)
            return cmd_construct(ca, out);
        if (*verify)
            return cmd_verify(va, out);
        if (*distance)
            return cmd_distance(da, out);
        if (*encode)
            return cmd_encode(ea, out);
        if (*weight)
            return cmd_weight(wa, out);
    } catch (const ValidationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BudgetExceeded& e) {
        err << "error: budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace pumgab::cli
