#pragma once

// uhopf command-line surface. run() is the whole program minus process
// plumbing, so tests drive it with string streams.
//
// Exit codes: 0 success / effective, 1 not effective (check only),
// 2 invalid input, 3 verification failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uhopf/oracle.hpp"
#include "uhopf/serialize.hpp"

namespace uhopf::cli {

enum ExitCode : int {
    kOk = 0,
    kNotEffective = 1,
    kInvalidInput = 2,
    kVerificationFailed = 3,
};

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(const std::string& text);

struct Ranges {
    std::int64_t p_min = 0, p_max = 0;
    std::int64_t q_min = 0, q_max = 0;
    std::int64_t r_min = 1, r_max = 1;
    std::vector<int> n_list;
    std::vector<int> m_list;
    std::vector<ActionKind> kinds;
};

struct CliConfig {
    json raw;  // the document as read, for spec_from_json
    std::optional<Ranges> ranges;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::int64_t trials = 200;
    OutputFormat format = OutputFormat::Json;
};

/// Parses the config document; throws std::invalid_argument on schema
/// violations (including ranges that contain only r == 0, n < 2, m < 1).
CliConfig parse_config(const json& doc);

/// Grid tuples in lexicographic (n, m, kind, p, q, r) order; r == 0 is
/// skipped.
std::vector<EffectivenessParams> expand_ranges(const Ranges& ranges);

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const OracleHooks& hooks = {});

}  // namespace uhopf::cli
