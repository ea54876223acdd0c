// Command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeck/zeck.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
    int exit_code;
    std::string message;
};

// Usage-type errors (bad input, unknown claim) exit 2; defects exit 1.
void check(zk_status status)
{
    if (status == ZK_OK)
        return;
    std::string message = std::string(zk_status_name(status)) + ": " + zk_last_error_message();
    switch (status) {
    case ZK_ERR_INVALID_ARGUMENT:
    case ZK_ERR_PARSE:
    case ZK_ERR_OUT_OF_RANGE:
    case ZK_ERR_UNKNOWN_CLAIM:
    case ZK_ERR_BELOW_THRESHOLD:
    case ZK_ERR_INTERFERING:
    case ZK_ERR_NULL_ARGUMENT:
        throw Failure{kExitUsage, message};
    default:
        throw Failure{kExitClaimFailed, message};
    }
}

struct StringDeleter {
    void operator()(char* s) const { zk_string_free(s); }
};
struct NaturalDeleter {
    void operator()(zk_natural* n) const { zk_natural_free(n); }
};
struct FormDeleter {
    void operator()(zk_form* f) const { zk_form_free(f); }
};
struct MemberDeleter {
    void operator()(zk_member* m) const { zk_member_free(m); }
};
struct ReportDeleter {
    void operator()(zk_report_set* r) const { zk_report_set_free(r); }
};

using NaturalPtr = std::unique_ptr<zk_natural, NaturalDeleter>;
using FormPtr = std::unique_ptr<zk_form, FormDeleter>;

std::string take(char* s)
{
    std::unique_ptr<char, StringDeleter> owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

NaturalPtr natural(const std::string& text)
{
    zk_natural* n = nullptr;
    check(zk_natural_parse(text.c_str(), &n));
    return NaturalPtr(n);
}

std::string to_string(const zk_natural* n)
{
    char* s = nullptr;
    check(zk_natural_to_string(n, &s));
    return take(s);
}

std::uint64_t sf(const zk_natural* n)
{
    std::uint64_t v = 0;
    check(zk_sf(n, &v));
    return v;
}

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

struct Output {
    bool json = false;
    bool csv = false;
    std::string path;

    zk_format format() const { return json ? ZK_FORMAT_JSON : csv ? ZK_FORMAT_CSV : ZK_FORMAT_TEXT; }

    void emit(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw Failure{kExitUsage, "cannot open " + path + " for writing"};
        file << text;
    }
};

void add_output_flags(CLI::App* cmd, Output& out)
{
    auto* json = cmd->add_flag("--json", out.json, "Machine-readable JSON output");
    auto* csv = cmd->add_flag("--csv", out.csv, "CSV output");
    json->excludes(csv);
    cmd->add_option("--out", out.path, "Write output to FILE instead of stdout");
}

// --- subcommands ------------------------------------------------------------

std::string cmd_encode(const std::string& x, const Output& out)
{
    NaturalPtr n = natural(x);
    std::size_t count = 0;
    zk_status st = zk_encode(n.get(), nullptr, 0, &count);
    if (st != ZK_ERR_BUFFER_TOO_SMALL)
        check(st);
    std::vector<int> indices(count);
    check(zk_encode(n.get(), indices.data(), indices.size(), &count));
    char* digits = nullptr;
    check(zk_encode_digits(n.get(), &digits));
    const std::string d = take(digits);

    std::string list;
    for (std::size_t i = 0; i < indices.size(); ++i)
        list += (i ? "," : "") + std::to_string(indices[i]);
    if (out.json)
        return "{\"x\":\"" + x + "\",\"digits\":\"" + d + "\",\"indices\":[" + list + "],\"terms\":" +
               std::to_string(count) + "}\n";
    if (out.csv)
        return "x,digits,indices,terms\n" + x + "," + d + ",\"" + list + "\"," + std::to_string(count) + "\n";
    return d + "\n{" + list + "}\n" + std::to_string(count) + (count == 1 ? " term\n" : " terms\n");
}

std::string cmd_sf(const std::string& x, bool digits, std::optional<unsigned> h, const Output& out)
{
    NaturalPtr n;
    if (digits) {
        zk_natural* raw = nullptr;
        check(zk_decode_digits(x.c_str(), &raw));
        n.reset(raw);
    } else {
        n = natural(x);
    }
    NaturalPtr target;
    if (h) {
        zk_natural* raw = nullptr;
        check(zk_natural_pow(n.get(), *h, &raw));
        target.reset(raw);
    }
    const std::uint64_t value = sf(target ? target.get() : n.get());
    const std::string shown = to_string(n.get());
    const std::string hs = h ? std::to_string(*h) : "1";
    if (out.json)
        return "{\"n\":\"" + shown + "\",\"h\":" + hs + ",\"sF\":" + std::to_string(value) + "}\n";
    if (out.csv)
        return "n,h,sF\n" + shown + "," + hs + "," + std::to_string(value) + "\n";
    return std::to_string(value) + "\n";
}

std::string cmd_lucas(int k, std::optional<unsigned> h, const std::optional<std::string>& m, const Output& out)
{
    if (m) {
        NaturalPtr mult = natural(*m);
        char* blocks = nullptr;
        check(zk_multiple_to_blocks(mult.get(), k, &blocks));
        const std::string b = take(blocks);
        if (out.json)
            return "{\"m\":\"" + *m + "\",\"k\":" + std::to_string(k) + ",\"blocks\":\"" + b + "\"}\n";
        return b + "\n";
    }
    FormPtr form;
    zk_form* raw = nullptr;
    if (h)
        check(zk_form_power_direct(k, *h, &raw));
    else
        check(zk_form_lucas(k, &raw));
    form.reset(raw);
    char* text = nullptr;
    check(zk_form_to_string(form.get(), &text));
    const std::string f = take(text);
    zk_natural* value = nullptr;
    check(zk_form_value(form.get(), &value));
    NaturalPtr v(value);
    const std::string shown = to_string(v.get());
    const std::uint64_t digits = sf(v.get());
    if (out.json)
        return "{\"k\":" + std::to_string(k) + ",\"h\":" + std::to_string(h.value_or(1)) + ",\"form\":\"" +
               json_escape(f) + "\",\"value\":\"" + shown + "\",\"sF\":" + std::to_string(digits) + "}\n";
    if (out.csv)
        return "k,h,form,value,sF\n" + std::to_string(k) + "," + std::to_string(h.value_or(1)) + "," + f + "," + shown +
               "," + std::to_string(digits) + "\n";
    return f + "\n" + shown + "\nsF = " + std::to_string(digits) + "\n";
}

std::string cmd_construct(const std::string& family_name, std::optional<int> k, std::optional<int> k_min,
                          std::optional<int> k_max, const std::optional<std::string>& m, unsigned h_max,
                          const Output& out)
{
    zk_family family{};
    check(zk_family_parse(family_name.c_str(), &family));
    const int lo = k ? *k : k_min.value_or(1);
    const int hi = k ? *k : k_max.value_or(lo);
    NaturalPtr mult;
    if (m)
        mult = natural(*m);
    else if (family == ZK_FAMILY_THM4 || family == ZK_FAMILY_THM5)
        mult = natural("1");
    char* text = nullptr;
    check(zk_family_table(family, mult.get(), lo, hi, h_max, out.format(), &text));
    return take(text);
}

std::string cmd_verify(const std::string& target, const zk_params& params, const Output& out, bool& failed)
{
    zk_report_set* raw = nullptr;
    check(zk_verify(target.c_str(), &params, &raw));
    std::unique_ptr<zk_report_set, ReportDeleter> set(raw);
    failed = zk_report_set_failed(set.get()) > 0;
    char* text = nullptr;
    check(zk_report_set_render(set.get(), out.format(), &text));
    return take(text);
}

std::string cmd_scan(std::uint64_t n_min, std::uint64_t n_max, unsigned h, unsigned jobs, const Output& out)
{
    char* text = nullptr;
    check(zk_scan(n_min, n_max, h, jobs, out.format(), &text));
    return take(text);
}

std::string target_help()
{
    std::string s = "Claim targets: all";
    std::string names = zk_verify_targets();
    for (char& c : names) {
        if (c == ',')
            c = ' ';
    }
    return s + " " + names;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zeckendorf digit sums of powers: encoding, constructions and claim verification"};
    app.require_subcommand(1);
    // "--h" is the exponent flag, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string(zk_version()));
    app.footer(target_help());

    Output out;

    std::string x;
    auto* encode = app.add_subcommand("encode", "Zeckendorf representation of a natural number");
    encode->add_option("x", x, "Decimal natural")->required();
    add_output_flags(encode, out);

    bool as_digits = false;
    std::optional<unsigned> h;
    auto* sfc = app.add_subcommand("sf", "Number of Zeckendorf digits of x (or of x^h)");
    sfc->add_option("x", x, "Decimal natural, or a digit string with --digits")->required();
    sfc->add_flag("--digits", as_digits, "Read x as a Zeckendorf digit string");
    sfc->add_option("--h", h, "Exponent")->check(CLI::Range(1u, 1000u));
    add_output_flags(sfc, out);

    int k = 0;
    std::optional<std::string> m;
    auto* lucas = app.add_subcommand("lucas", "Lucas number L_k as a form, L_k^h expanded, or m*L_k as blocks");
    lucas->add_option("--k", k, "Lucas index")->required();
    lucas->add_option("--h", h, "Expand L_k^h")->check(CLI::Range(1u, 1000u));
    lucas->add_option("--m", m, "Expand m*L_k as a Fibonacci block");
    add_output_flags(lucas, out);

    std::string family;
    std::optional<int> k_single, k_min, k_max;
    unsigned h_max = 3;
    auto* construct = app.add_subcommand("construct", "Members of the extremal families with their digit sums");
    construct->add_option("--family", family, "upper, lower, thm4 or thm5")->required();
    construct->add_option("--k", k_single, "Single family index");
    construct->add_option("--k-min", k_min, "First family index");
    construct->add_option("--k-max", k_max, "Last family index");
    construct->add_option("--m", m, "Multiplier for thm4/thm5");
    construct->add_option("--h", h_max, "Report s_F(n^h) for 2 <= h <= this")->check(CLI::Range(2u, 64u));
    add_output_flags(construct, out);

    std::string target;
    std::optional<std::uint64_t> n_max;
    std::optional<std::string> eps, delta;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    auto* verify = app.add_subcommand("verify", "Check one claim target (or all) and report");
    verify->add_option("target", target, "Claim target")->required();
    verify->add_option("--k-min", k_min, "Lower index bound (N for fibcoro)");
    verify->add_option("--k-max", k_max, "Upper index bound (N for fibcoro)");
    verify->add_option("--h", h, "Exponent")->check(CLI::Range(1u, 1000u));
    verify->add_option("--m", m, "Largest multiplier (lucasmulti)");
    verify->add_option("--n-max", n_max, "Scan limit");
    verify->add_option("--eps", eps, "Small-ratio threshold, e.g. 1/2");
    verify->add_option("--delta", delta, "Large-ratio threshold, e.g. 4");
    verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    auto* seed_opt = verify->add_option("--seed", seed, "Random seed for property checks");
    add_output_flags(verify, out);

    std::uint64_t n_min = 2;
    std::uint64_t scan_max = 1000;
    unsigned scan_h = 2;
    auto* scan = app.add_subcommand("scan", "Ratio table s_F(n^h)/s_F(n) for a range of n");
    scan->add_option("--n-min", n_min, "First n (>= 2)");
    scan->add_option("--n-max", scan_max, "Last n");
    scan->add_option("--h", scan_h, "Exponent")->check(CLI::Range(1u, 1000u));
    scan->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
    add_output_flags(scan, out);

    std::vector<std::string> report_targets;
    bool report_csv = false;
    std::string report_path;
    auto* report = app.add_subcommand("report", "Run claim targets (default all) and write a JSON or CSV report");
    report->add_option("targets", report_targets, "Claim targets");
    report->add_flag("--csv", report_csv, "CSV instead of JSON");
    report->add_option("--out", report_path, "Write output to FILE instead of stdout");
    report->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    seed_given = seed_opt->count() > 0;

    try {
        if (*encode) {
            out.emit(cmd_encode(x, out));
        } else if (*sfc) {
            out.emit(cmd_sf(x, as_digits, h, out));
        } else if (*lucas) {
            out.emit(cmd_lucas(k, h, m, out));
        } else if (*construct) {
            if (k_single && (k_min || k_max))
                throw Failure{kExitUsage, "--k cannot be combined with --k-min/--k-max"};
            if (!k_single && !k_min && !k_max)
                throw Failure{kExitUsage, "construct needs --k or --k-min/--k-max"};
            out.emit(cmd_construct(family, k_single, k_min, k_max, m, h_max, out));
        } else if (*verify) {
            zk_params params;
            zk_params_init(&params);
            if (k_min)
                params.k_min = *k_min;
            if (k_max)
                params.k_max = *k_max;
            if (h)
                params.h = static_cast<std::int32_t>(*h);
            if (n_max)
                params.n_max = *n_max;
            params.m = m ? m->c_str() : nullptr;
            params.eps = eps ? eps->c_str() : nullptr;
            params.delta = delta ? delta->c_str() : nullptr;
            if (seed_given)
                params.seed = seed;
            params.jobs = jobs;
            bool failed = false;
            out.emit(cmd_verify(target, params, out, failed));
            return failed ? kExitClaimFailed : kExitOk;
        } else if (*scan) {
            out.emit(cmd_scan(n_min, scan_max, scan_h, jobs, out));
        } else if (*report) {
            Output rep;
            rep.json = !report_csv;
            rep.csv = report_csv;
            rep.path = report_path;
            zk_params params;
            zk_params_init(&params);
            params.jobs = jobs;
            if (report_targets.empty())
                report_targets.push_back("all");
            bool any_failed = false;
            std::string text;
            // One combined document: merge JSON arrays, keep a single CSV header.
            for (std::size_t i = 0; i < report_targets.size(); ++i) {
                bool failed = false;
                std::string part = cmd_verify(report_targets[i], params, rep, failed);
                any_failed = any_failed || failed;
                if (i > 0 && rep.json) {
                    text.erase(text.find_last_of(']'));
                    while (!text.empty() && (text.back() == '\n' || text.back() == ' '))
                        text.pop_back();
                    part = ",\n" + part.substr(part.find('[') + 2);
                } else if (i > 0) {
                    part = part.substr(part.find('\n') + 1);
                }
                text += part;
            }
            rep.emit(text);
            return any_failed ? kExitClaimFailed : kExitOk;
        }
    } catch (const Failure& f) {
        std::cerr << "zeck: " << f.message << "\n";
        return f.exit_code;
    }
    return kExitOk;
}
