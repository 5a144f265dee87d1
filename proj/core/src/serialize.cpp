#include "uhopf/serialize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace uhopf {

namespace {

[[noreturn]] void fail(const char* field, const std::string& what)
{
    throw std::invalid_argument(std::string(field) + ": " + what);
}

double finite_number(const json& j, const char* field)
{
    if (!j.is_number()) fail(field, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(field, "non-finite number");
    return v;
}

std::int64_t integer_field(const json& j, const char* field)
{
    if (!j.contains(field)) fail(field, "missing field");
    const json& v = j.at(field);
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::isfinite(d) && std::floor(d) == d && std::abs(d) < 9.0e15) return static_cast<std::int64_t>(d);
    }
    fail(field, "expected an integer");
}

int small_int_field(const json& j, const char* field)
{
    const std::int64_t v = integer_field(j, field);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(field, "out of range");
    return static_cast<int>(v);
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* field)
{
    if (j.is_number()) return {finite_number(j, field), 0.0};
    if (!j.is_array() || j.size() != 2) fail(field, "expected [re, im]");
    return {finite_number(j[0], field), finite_number(j[1], field)};
}

json vector_to_json(const CVector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

CVector vector_from_json(const json& j, Eigen::Index expected_size, const char* field)
{
    if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of [re, im]");
    if (expected_size >= 0 && static_cast<Eigen::Index>(j.size()) != expected_size)
        fail(field, "expected length " + std::to_string(expected_size));
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], field);
    return v;
}

json matrix_to_json(const CMatrix& m)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

CMatrix matrix_from_json(const json& j, Eigen::Index expected_n, const char* field)
{
    if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    if (expected_n >= 0 && n != expected_n) fail(field, "expected " + std::to_string(expected_n) + " rows");
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) fail(field, "matrix must be square");
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], field);
    }
    return m;
}

ActionSpec spec_from_json(const json& j)
{
    if (!j.is_object()) throw std::invalid_argument("spec: expected a JSON object");
    const int n = small_int_field(j, "n");
    const int m = small_int_field(j, "m");
    if (!j.contains("d")) fail("d", "missing field");
    const Complex d = complex_from_json(j.at("d"), "d");
    if (!j.contains("kind") || !j.at("kind").is_string()) fail("kind", "expected \"type1\" or \"type2\"");
    const ActionKind kind = parse_action_kind(j.at("kind").get<std::string>());
    const std::int64_t p = integer_field(j, "p");
    const std::int64_t q = integer_field(j, "q");
    const std::int64_t r = integer_field(j, "r");
    std::optional<CMatrix> C;
    if (j.contains("C") && !j.at("C").is_null()) C = matrix_from_json(j.at("C"), n, "C");
    return ActionSpec::make(kind, p, q, r, HopfParams::make(d, n, m), C);
}

json spec_to_json(const ActionSpec& spec)
{
    json out{
        {"n", spec.n()},
        {"m", spec.m()},
        {"d", complex_to_json(spec.params().d)},
        {"kind", std::string(to_string(spec.kind()))},
        {"p", spec.p()},
        {"q", spec.q()},
        {"r", spec.r()},
    };
    if (!spec.C_is_identity()) out["C"] = matrix_to_json(spec.C());
    return out;
}

json verdict_to_json(const EffectivenessVerdict& v)
{
    json out{{"effective", v.effective}, {"witness", nullptr}, {"kernel_element", nullptr}};
    if (v.witness) out["witness"] = {{"ell", v.witness->ell}, {"K", v.witness->K}};
    if (v.kernel_element)
        out["kernel_element"] = {{"t", v.kernel_element->t},
                                 {"k", v.kernel_element->k},
                                 {"scalar", complex_to_json(v.kernel_element->scalar)}};
    return out;
}

json check_to_json(const CheckResult& c)
{
    return {{"name", c.name}, {"trials", c.trials}, {"max_residual", c.max_residual}, {"tol", c.tol}, {"pass", c.pass}};
}

json report_to_json(const VerificationReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(check_to_json(c));
    return {
        {"spec", spec_to_json(report.spec)},
        {"checks", std::move(checks)},
        {"seed", report.seed},
        {"tol", report.tol.decomposition},
        {"pass", report.pass()},
    };
}

json kernel_scan_to_json(const std::vector<KernelScanEntry>& scan)
{
    json out = json::array();
    for (const auto& e : scan)
        out.push_back({{"ell", e.ell}, {"k", e.k}, {"residual", e.residual}, {"is_identity", e.is_identity}});
    return out;
}

}  // namespace uhopf
