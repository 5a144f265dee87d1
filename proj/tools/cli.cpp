#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>

#include "uhopf/effectiveness.hpp"

namespace uhopf::cli {

namespace {

constexpr double kActUnitaryTol = 1e-8;

struct Flags {
    std::string spec = "-";
    std::string out;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::int64_t> trials;
    std::string matrix;
    std::string point;
};

std::int64_t int_field(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("ranges.") + key + ": expected an integer");
    return v.get<std::int64_t>();
}

std::vector<int> int_list(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_array()) throw std::invalid_argument(std::string("ranges.") + key + ": expected an array");
    std::vector<int> out;
    for (const json& e : v) {
        if (!e.is_number_integer()) throw std::invalid_argument(std::string("ranges.") + key + ": expected integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// Range bound from ranges.<key>, falling back to the top-level single value.
std::int64_t bound(const json& ranges, const json& doc, const char* key, const char* fallback)
{
    if (ranges.contains(key)) return int_field(ranges, key);
    if (doc.contains(fallback)) return int_field(doc, fallback);
    throw std::invalid_argument(std::string("ranges.") + key + ": missing");
}

json read_document(const std::string& source, std::istream& in)
{
    try {
        if (source == "-") return json::parse(in);
        std::ifstream file(source);
        if (!file) throw std::invalid_argument("cannot open config file '" + source + "'");
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
}

// Inline JSON when the text starts with '[', otherwise a file path.
json read_inline_or_file(const std::string& text, const char* what)
{
    try {
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '[') return json::parse(text);
        std::ifstream file(text);
        if (!file) throw std::invalid_argument(std::string(what) + ": cannot open '" + text + "'");
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": invalid JSON: " + e.what());
    }
}

std::string format_double(double v)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

CliConfig load(const Flags& flags, std::istream& in)
{
    CliConfig cfg = parse_config(read_document(flags.spec, in));
    if (!flags.format.empty()) cfg.format = parse_output_format(flags.format);
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.tol) {
        if (!(*flags.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
        cfg.tol = *flags.tol;
    }
    if (flags.trials) {
        if (*flags.trials < 1) throw std::invalid_argument("--trials must be >= 1");
        cfg.trials = *flags.trials;
    }
    return cfg;
}

constexpr const char* kCsvEol = "\r\n";

void write_enumerate_header(std::ostream& os, OutputFormat format)
{
    if (format == OutputFormat::Csv) os << "n,m,kind,p,q,r,effective,witness_ell,witness_K" << kCsvEol;
    if (format == OutputFormat::Text)
        os << std::left << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(7) << "kind" << std::setw(6) << "p"
           << std::setw(6) << "q" << std::setw(6) << "r" << std::setw(11) << "effective" << "witness\n";
}

void write_enumerate_row(std::ostream& os, OutputFormat format, const EffectivenessParams& ep,
                         const EffectivenessVerdict& v)
{
    if (format == OutputFormat::Csv) {
        os << ep.n << ',' << ep.m << ',' << to_string(ep.kind) << ',' << ep.p << ',' << ep.q << ',' << ep.r << ','
           << (v.effective ? "true" : "false") << ',';
        if (v.witness) os << v.witness->ell << ',' << v.witness->K;
        else os << ',';
        os << kCsvEol;
    } else {
        os << std::left << std::setw(4) << ep.n << std::setw(4) << ep.m << std::setw(7) << to_string(ep.kind)
           << std::setw(6) << ep.p << std::setw(6) << ep.q << std::setw(6) << ep.r << std::setw(11)
           << (v.effective ? "yes" : "no");
        if (v.witness) os << "(" << v.witness->ell << ", " << v.witness->K << ")";
        os << '\n';
    }
}

json enumerate_row_json(const EffectivenessParams& ep, const EffectivenessVerdict& v)
{
    json row = verdict_to_json(v);
    row["n"] = ep.n;
    row["m"] = ep.m;
    row["kind"] = std::string(to_string(ep.kind));
    row["p"] = ep.p;
    row["q"] = ep.q;
    row["r"] = ep.r;
    return row;
}

int cmd_check(const CliConfig& cfg, std::ostream& os)
{
    const ActionSpec spec = spec_from_json(cfg.raw);
    const EffectivenessVerdict v = is_effective(spec);
    switch (cfg.format) {
    case OutputFormat::Json:
        os << verdict_to_json(v).dump(2) << '\n';
        break;
    case OutputFormat::Csv:
    case OutputFormat::Text:
        write_enumerate_header(os, cfg.format);
        write_enumerate_row(os, cfg.format, EffectivenessParams::from_spec(spec), v);
        break;
    }
    return v.effective ? kOk : kNotEffective;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& os)
{
    if (!cfg.ranges) throw std::invalid_argument("enumerate: config needs a \"ranges\" object");
    const auto grid = expand_ranges(*cfg.ranges);
    if (grid.empty()) throw std::invalid_argument("enumerate: ranges are empty");
    if (cfg.format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& ep : grid) rows.push_back(enumerate_row_json(ep, is_effective(ep)));
        os << rows.dump(2) << '\n';
        return kOk;
    }
    write_enumerate_header(os, cfg.format);
    for (const auto& ep : grid) write_enumerate_row(os, cfg.format, ep, is_effective(ep));
    return kOk;
}

int cmd_act(const CliConfig& cfg, const Flags& flags, std::ostream& os)
{
    const ActionSpec spec = spec_from_json(cfg.raw);
    json matrix_doc, point_doc;
    if (!flags.matrix.empty()) matrix_doc = read_inline_or_file(flags.matrix, "--matrix");
    else if (cfg.raw.contains("A")) matrix_doc = cfg.raw.at("A");
    else throw std::invalid_argument("act: supply --matrix or an \"A\" field");
    if (!flags.point.empty()) point_doc = read_inline_or_file(flags.point, "--point");
    else if (cfg.raw.contains("z")) point_doc = cfg.raw.at("z");
    else throw std::invalid_argument("act: supply --point or a \"z\" field");

    CMatrix A = matrix_from_json(matrix_doc, spec.n(), "A");
    if (!(unitarity_residual(A) <= kActUnitaryTol)) throw std::invalid_argument("act: A is not unitary to 1e-8");
    A = project_to_unitary(A);
    const OrbitPoint z(spec.params(), vector_from_json(point_doc, spec.n(), "z"));
    const OrbitPoint raw = act(spec, A, z);
    const OrbitPoint canonical = canonicalize(raw);

    if (cfg.format == OutputFormat::Json) {
        os << json{{"raw", vector_to_json(raw.rep())}, {"canonical", vector_to_json(canonical.rep())}}.dump(2) << '\n';
    } else {
        const char* sep = cfg.format == OutputFormat::Csv ? "," : " ";
        const auto line = [&](const char* label, const CVector& v) {
            os << label;
            for (Eigen::Index i = 0; i < v.size(); ++i)
                os << sep << format_double(v(i).real()) << sep << format_double(v(i).imag());
            os << (cfg.format == OutputFormat::Csv ? kCsvEol : "\n");
        };
        if (cfg.format == OutputFormat::Csv) {
            os << "form";
            for (int i = 0; i < spec.n(); ++i) os << ",re" << i << ",im" << i;
            os << kCsvEol;
        }
        line("raw", raw.rep());
        line("canonical", canonical.rep());
    }
    return kOk;
}

std::vector<ActionSpec> verify_targets(const CliConfig& cfg)
{
    if (!cfg.ranges) return {spec_from_json(cfg.raw)};
    if (!cfg.raw.contains("d")) throw std::invalid_argument("verify: grid config needs \"d\"");
    const Complex d = complex_from_json(cfg.raw.at("d"), "d");
    std::optional<CMatrix> C;
    if (cfg.raw.contains("C") && !cfg.raw.at("C").is_null()) C = matrix_from_json(cfg.raw.at("C"), -1, "C");
    std::vector<ActionSpec> specs;
    for (const auto& ep : expand_ranges(*cfg.ranges)) {
        const HopfParams params = HopfParams::make(d, static_cast<int>(ep.n), static_cast<int>(ep.m));
        const bool use_c = C && C->rows() == ep.n;
        specs.push_back(ActionSpec::make(ep.kind, ep.p, ep.q, ep.r, params, use_c ? C : std::nullopt));
    }
    if (specs.empty()) throw std::invalid_argument("verify: ranges are empty");
    return specs;
}

int cmd_verify(const CliConfig& cfg, std::ostream& os, const OracleHooks& hooks)
{
    Tolerances tol;
    tol.decomposition = cfg.tol;
    const auto specs = verify_targets(cfg);
    std::vector<VerificationReport> reports;
    reports.reserve(specs.size());
    for (const auto& spec : specs) reports.push_back(verify_all(spec, cfg.trials, cfg.seed, tol, hooks));
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass(); });

    switch (cfg.format) {
    case OutputFormat::Json:
        if (!cfg.ranges) {
            os << report_to_json(reports.front()).dump(2) << '\n';
        } else {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            os << json{{"reports", std::move(arr)}, {"pass", all_pass}}.dump(2) << '\n';
        }
        break;
    case OutputFormat::Csv:
        os << "n,m,kind,p,q,r,check,trials,max_residual,tol,pass" << kCsvEol;
        for (const auto& r : reports)
            for (const auto& c : r.checks)
                os << r.spec.n() << ',' << r.spec.m() << ',' << to_string(r.spec.kind()) << ',' << r.spec.p() << ','
                   << r.spec.q() << ',' << r.spec.r() << ',' << c.name << ',' << c.trials << ','
                   << format_double(c.max_residual) << ',' << format_double(c.tol) << ','
                   << (c.pass ? "true" : "false") << kCsvEol;
        break;
    case OutputFormat::Text:
        for (const auto& r : reports) {
            os << "spec " << spec_to_json(r.spec).dump() << '\n';
            for (const auto& c : r.checks)
                os << "  " << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name
                   << " trials=" << c.trials << " max_residual=" << format_double(c.max_residual)
                   << " tol=" << format_double(c.tol) << '\n';
        }
        os << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
        break;
    }
    return all_pass ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, Flags& flags)
{
    sub->add_option("--spec", flags.spec, "JSON config path, or - for standard input")->capture_default_str();
    sub->add_option("--out", flags.out, "Write output here instead of standard output");
    sub->add_option("--format", flags.format, "json, csv or text");
    sub->add_option("--seed", flags.seed, "Seed for randomized checks");
    sub->add_option("--tol", flags.tol, "Tolerance for decomposition-dependent checks");
    sub->add_option("--trials", flags.trials, "Trials per randomized check");
}

}  // namespace

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "text") return OutputFormat::Text;
    throw std::invalid_argument("unknown output format '" + text + "' (expected json, csv or text)");
}

CliConfig parse_config(const json& doc)
{
    if (!doc.is_object()) throw std::invalid_argument("config: expected a JSON object");
    CliConfig cfg;
    cfg.raw = doc;
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) throw std::invalid_argument("seed: expected a nonnegative integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("tol")) {
        if (!doc.at("tol").is_number() || !(doc.at("tol").get<double>() > 0.0))
            throw std::invalid_argument("tol: expected a positive number");
        cfg.tol = doc.at("tol").get<double>();
    }
    if (doc.contains("trials")) {
        if (!doc.at("trials").is_number_integer() || doc.at("trials").get<std::int64_t>() < 1)
            throw std::invalid_argument("trials: expected a positive integer");
        cfg.trials = doc.at("trials").get<std::int64_t>();
    }
    if (doc.contains("output_format")) {
        if (!doc.at("output_format").is_string()) throw std::invalid_argument("output_format: expected a string");
        cfg.format = parse_output_format(doc.at("output_format").get<std::string>());
    }
    if (doc.contains("ranges")) {
        const json& rj = doc.at("ranges");
        if (!rj.is_object()) throw std::invalid_argument("ranges: expected an object");
        Ranges r;
        r.p_min = bound(rj, doc, "p_min", "p");
        r.p_max = bound(rj, doc, "p_max", "p");
        r.q_min = bound(rj, doc, "q_min", "q");
        r.q_max = bound(rj, doc, "q_max", "q");
        r.r_min = bound(rj, doc, "r_min", "r");
        r.r_max = bound(rj, doc, "r_max", "r");
        if (rj.contains("n_list")) r.n_list = int_list(rj, "n_list");
        else if (doc.contains("n")) r.n_list = {static_cast<int>(int_field(doc, "n"))};
        if (rj.contains("m_list")) r.m_list = int_list(rj, "m_list");
        else if (doc.contains("m")) r.m_list = {static_cast<int>(int_field(doc, "m"))};
        const json* kinds = rj.contains("kinds") ? &rj.at("kinds") : (doc.contains("kind") ? &doc.at("kind") : nullptr);
        if (kinds == nullptr) {
            r.kinds = {ActionKind::Type1, ActionKind::Type2};
        } else if (kinds->is_string()) {
            r.kinds = {parse_action_kind(kinds->get<std::string>())};
        } else if (kinds->is_array()) {
            for (const json& k : *kinds) {
                if (!k.is_string()) throw std::invalid_argument("ranges.kinds: expected strings");
                r.kinds.push_back(parse_action_kind(k.get<std::string>()));
            }
        } else {
            throw std::invalid_argument("kind: expected a string or array of strings");
        }
        for (int n : r.n_list)
            if (n < 2) throw std::invalid_argument("ranges.n_list: entries must be >= 2");
        for (int m : r.m_list)
            if (m < 1) throw std::invalid_argument("ranges.m_list: entries must be >= 1");
        if (r.r_min == 0 && r.r_max == 0) throw std::invalid_argument("ranges: r range contains only 0");
        cfg.ranges = std::move(r);
    }
    return cfg;
}

std::vector<EffectivenessParams> expand_ranges(const Ranges& ranges)
{
    std::vector<int> ns = ranges.n_list, ms = ranges.m_list;
    std::vector<ActionKind> kinds = ranges.kinds;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    std::vector<EffectivenessParams> out;
    for (int n : ns)
        for (int m : ms)
            for (ActionKind kind : kinds)
                for (std::int64_t p = ranges.p_min; p <= ranges.p_max; ++p)
                    for (std::int64_t q = ranges.q_min; q <= ranges.q_max; ++q)
                        for (std::int64_t r = ranges.r_min; r <= ranges.r_max; ++r)
                            if (r != 0) out.push_back({kind, n, m, p, q, r});
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const OracleHooks& hooks)
{
    CLI::App app{"Effective transitive U_n actions on quotients of Hopf manifolds", "uhopf"};
    app.require_subcommand(1);
    Flags flags;
    CLI::App* check = app.add_subcommand("check", "Decide effectiveness of one action");
    CLI::App* enumerate = app.add_subcommand("enumerate", "Tabulate effectiveness over parameter ranges");
    CLI::App* act_cmd = app.add_subcommand("act", "Apply a unitary matrix to a point");
    CLI::App* verify = app.add_subcommand("verify", "Run the numerical verification suite");
    for (CLI::App* sub : {check, enumerate, act_cmd, verify}) add_common(sub, flags);
    act_cmd->add_option("--matrix", flags.matrix, "Unitary matrix: inline JSON or a file path");
    act_cmd->add_option("--point", flags.point, "Point: inline JSON or a file path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "uhopf: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        const CliConfig cfg = load(flags, in);
        Output sink(flags.out, out);
        std::ostream& os = sink.stream();
        if (check->parsed()) return cmd_check(cfg, os);
        if (enumerate->parsed()) {
            if (flags.format.empty() && !cfg.raw.contains("output_format")) {
                CliConfig csv = cfg;
                csv.format = OutputFormat::Csv;
                return cmd_enumerate(csv, os);
            }
            return cmd_enumerate(cfg, os);
        }
        if (act_cmd->parsed()) return cmd_act(cfg, flags, os);
        return cmd_verify(cfg, os, hooks);
    } catch (const std::exception& e) {
        err << "uhopf: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace uhopf::cli
