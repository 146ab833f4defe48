#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccseq/ccseq.hpp"
#include "ccseq/io.hpp"

namespace ccseq::cli {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_bad_params = 2, exit_io = 3 };

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string command;
    std::string profile;
    std::optional<int> lambda;
    int m = 2;
    std::optional<std::uint64_t> seed;
    // Overrides; permutations are 1-based on the command line.
    std::string igc_perms; // "2,1,3;1"
    std::string igc_lin;   // "0,1;2"
    std::string igc_consts;
    std::string gcp_perm;
    std::string gcp_g;
    std::optional<int> gcp_e;
    std::optional<int> gcp_e2;
    std::string quad; // "s1;s2;t1;t2"
    std::string strategy = "greedy";
    std::string out = "-";
    std::string report;
    std::string in;
    std::string format;
    bool no_verify = false;
    std::size_t grid_a = 0;
    std::size_t grid_b = 0;
};

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw parameter_error(what + ": '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw parameter_error(what + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

inline std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

// "p^m[,p^m...]"
inline std::vector<PrimePower> parse_profile(const std::string& text)
{
    if (text.empty())
        throw parameter_error("--profile is required");
    std::vector<PrimePower> out;
    for (const auto& item : split(text, ',')) {
        const auto caret = item.find('^');
        if (caret == std::string::npos)
            throw parameter_error("profile entry '" + item + "' must look like p^m");
        const auto p = parse_int_list(item.substr(0, caret), "profile prime");
        const auto m = parse_int_list(item.substr(caret + 1), "profile exponent");
        if (p.size() != 1 || m.size() != 1)
            throw parameter_error("profile entry '" + item + "' must look like p^m");
        out.push_back({p[0], m[0]});
    }
    return out;
}

inline std::vector<int> to_zero_based(std::vector<int> perm)
{
    for (int& v : perm)
        --v;
    return perm;
}

inline IgcParams make_igc_params(const JobSpec& job, const RadixProfile& profile, std::mt19937_64* rng)
{
    IgcParams params = rng ? IgcParams::random(profile, *rng) : IgcParams::defaults(profile);
    if (!job.igc_perms.empty()) {
        const auto parts = split(job.igc_perms, ';');
        if (parts.size() != profile.k())
            throw parameter_error("--igc-perms needs one permutation per prime factor");
        for (std::size_t a = 0; a < parts.size(); ++a)
            params.perms[a] = to_zero_based(parse_int_list(parts[a], "--igc-perms"));
    }
    if (!job.igc_lin.empty()) {
        const auto parts = split(job.igc_lin, ';');
        if (parts.size() != profile.k())
            throw parameter_error("--igc-lin needs one list per prime factor");
        for (std::size_t a = 0; a < parts.size(); ++a)
            params.lin_coeffs[a] = parse_int_list(parts[a], "--igc-lin");
    }
    if (!job.igc_consts.empty())
        params.consts = parse_int_list(job.igc_consts, "--igc-consts");
    params.validate();
    return params;
}

inline GcpParams make_gcp_params(const JobSpec& job, int lambda, std::mt19937_64* rng)
{
    GcpParams gp = rng ? GcpParams::random(job.m, lambda, *rng) : GcpParams::defaults(job.m, lambda);
    if (!job.gcp_perm.empty())
        gp.pi = to_zero_based(parse_int_list(job.gcp_perm, "--gcp-perm"));
    if (!job.gcp_g.empty())
        gp.g = parse_int_list(job.gcp_g, "--gcp-g");
    if (job.gcp_e)
        gp.e = *job.gcp_e;
    if (job.gcp_e2)
        gp.e2 = *job.gcp_e2;
    gp.validate();
    return gp;
}

inline LambdaStrategy parse_strategy(const std::string& s)
{
    if (s == "greedy")
        return LambdaStrategy::greedy;
    if (s == "random")
        return LambdaStrategy::random;
    throw parameter_error("unknown strategy '" + s + "' (expected greedy or random)");
}

inline ZetaQuad parse_quad(const std::string& text)
{
    const auto parts = split(text, ';');
    if (parts.size() != 4)
        throw parameter_error("--quad must look like s1;s2;t1;t2 with comma-separated components");
    return {parse_int_list(parts[0], "--quad"), parse_int_list(parts[1], "--quad"),
            parse_int_list(parts[2], "--quad"), parse_int_list(parts[3], "--quad")};
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw io_error("cannot open '" + path + "' for writing");
    f << text;
    if (!f)
        throw io_error("failed writing '" + path + "'");
}

// Verifies every claim a decoded document carries.
inline VerificationReport verify_document(const CodesetDocument& doc)
{
    switch (doc.kind) {
    case CodesetKind::gcp:
        if (doc.codes.size() != 1 || doc.codes.front().rows.size() != 2)
            throw format_error("a gcp document holds one code of two rows");
        return verify_gcp(doc.codes.front().rows[0], doc.codes.front().rows[1]);
    case CodesetKind::igc: {
        const RadixProfile profile(doc.profile, doc.lambda);
        auto report = verify_igc(doc.codes, static_cast<std::int64_t>(profile.Z()));
        if (!doc.codes.empty()) {
            const auto bound = verify_zccs_bound(static_cast<std::int64_t>(doc.codes.size()),
                                                 report.params.at("M"), report.params.at("L"),
                                                 report.params.at("Z"));
            report.params["optimal"] = bound.optimal ? 1 : 0;
        }
        return report;
    }
    case CodesetKind::zcac:
    case CodesetKind::zcacs: {
        const RadixProfile profile(doc.profile, doc.lambda);
        if (!doc.boolean_m)
            throw format_error("2-D documents need boolean_m");
        const auto z1 = static_cast<std::int64_t>(ipow(2, *doc.boolean_m));
        const auto z2 = static_cast<std::int64_t>(profile.Z());
        if (doc.kind == CodesetKind::zcac) {
            if (doc.array_sets.size() != 1)
                throw format_error("a zcac document holds exactly one array set");
            return verify_zcac(doc.array_sets.front(), z1, z2);
        }
        return verify_zcacs(doc.array_sets, z1, z2);
    }
    }
    throw format_error("unsupported document kind");
}

inline std::string summary(const VerificationReport& r)
{
    std::ostringstream s;
    s << claim_name(r.claim) << ": " << (r.passed ? "passed" : "FAILED");
    for (const auto& [k, v] : r.params)
        s << ' ' << k << '=' << v;
    s << " peak=" << r.peak << " violations=" << r.violation_count << '\n';
    return s.str();
}

inline CodesetDocument generate(const JobSpec& job)
{
    std::optional<std::mt19937_64> rng;
    if (job.seed)
        rng.emplace(*job.seed);
    CodesetDocument doc;
    if (job.command == "gen-gcp") {
        doc.kind = CodesetKind::gcp;
        doc.lambda = job.lambda.value_or(2);
        const auto gp = make_gcp_params(job, doc.lambda, rng ? &*rng : nullptr);
        doc.boolean_m = job.m;
        auto [a, b] = paterson_pair(gp);
        doc.codes.push_back({doc.lambda, {std::move(a), std::move(b)}, {}});
        return doc;
    }
    const auto factors = parse_profile(job.profile);
    const bool two_d = job.command == "gen-zcac" || job.command == "gen-zcacs";
    doc.lambda = job.lambda.value_or(default_lambda(factors, two_d));
    const RadixProfile profile(factors, doc.lambda);
    doc.profile = factors;
    const auto params = make_igc_params(job, profile, rng ? &*rng : nullptr);
    if (job.command == "gen-igc") {
        doc.kind = CodesetKind::igc;
        doc.codes = build_igc_codeset(params);
        return doc;
    }
    const auto gp = make_gcp_params(job, doc.lambda, rng ? &*rng : nullptr);
    doc.boolean_m = job.m;
    const auto strategy = parse_strategy(job.strategy);
    const auto lambda_set = enumerate_lambda_set(profile, strategy, job.seed.value_or(0));
    if (job.command == "gen-zcac") {
        doc.kind = CodesetKind::zcac;
        const ZetaQuad quad = job.quad.empty() ? lambda_set.front() : parse_quad(job.quad);
        doc.quads = {quad};
        doc.array_sets = {build_zcac(params, gp, quad)};
        return doc;
    }
    doc.kind = CodesetKind::zcacs;
    doc.quads = lambda_set;
    doc.array_sets = build_zcacs(params, gp, lambda_set);
    return doc;
}

struct GridPoint {
    std::int64_t tau1;
    std::int64_t tau2;
    std::complex<double> value;
};

// Full rectangle |tau1| < L1, |tau2| < L2 (1-D documents use tau2 = 0).
inline std::vector<GridPoint> correlation_grid(const CodesetDocument& doc, std::size_t a, std::size_t b)
{
    std::vector<GridPoint> grid;
    switch (doc.kind) {
    case CodesetKind::gcp: {
        if (doc.codes.size() != 1 || doc.codes.front().rows.size() != 2)
            throw format_error("a gcp document holds one code of two rows");
        const auto& rows = doc.codes.front().rows;
        const auto L = static_cast<std::int64_t>(rows[0].size());
        for (std::int64_t tau = -(L - 1); tau < L; ++tau)
            grid.push_back({tau, 0, (aacf(rows[0], tau) + aacf(rows[1], tau)).complex()});
        break;
    }
    case CodesetKind::igc: {
        if (a >= doc.codes.size() || b >= doc.codes.size())
            throw parameter_error("code index out of range");
        const auto L = static_cast<std::int64_t>(doc.codes[a].length());
        for (std::int64_t tau = -(L - 1); tau < L; ++tau)
            grid.push_back({tau, 0, code_accf(doc.codes[a], doc.codes[b], tau).complex()});
        break;
    }
    case CodesetKind::zcac:
    case CodesetKind::zcacs: {
        if (a >= doc.array_sets.size() || b >= doc.array_sets.size())
            throw parameter_error("array-set index out of range");
        const auto& u = doc.array_sets[a];
        const auto& v = doc.array_sets[b];
        if (u.empty() || u.size() != v.size())
            throw format_error("array sets differ in size");
        const auto L1 = static_cast<std::int64_t>(u.front().rows), L2 = static_cast<std::int64_t>(u.front().cols);
        for (std::int64_t t1 = -(L1 - 1); t1 < L1; ++t1)
            for (std::int64_t t2 = -(L2 - 1); t2 < L2; ++t2) {
                CorrelationValue sum(doc.lambda);
                for (std::size_t i = 0; i < u.size(); ++i)
                    sum += accf_2d(u[i], v[i], t1, t2);
                grid.push_back({t1, t2, sum.complex()});
            }
        break;
    }
    }
    return grid;
}

inline std::string format_grid(const std::vector<GridPoint>& grid, const std::string& format)
{
    std::ostringstream s;
    s.precision(17);
    if (format == "json") {
        auto j = nlohmann::json::array();
        for (const auto& g : grid)
            j.push_back({{"tau1", g.tau1}, {"tau2", g.tau2}, {"re", g.value.real()}, {"im", g.value.imag()},
                         {"abs", std::abs(g.value)}});
        s << j.dump() << '\n';
        return s.str();
    }
    s << "tau1,tau2,re,im,abs\r\n";
    for (const auto& g : grid)
        s << g.tau1 << ',' << g.tau2 << ',' << g.value.real() << ',' << g.value.imag() << ','
          << std::abs(g.value) << "\r\n";
    return s.str();
}

// Executes one job. Artifacts are written only after every parameter has
// been validated, so a job rejected with exit 2 leaves nothing behind.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    try {
        if (job.command.rfind("gen-", 0) == 0) {
            if (!job.format.empty() && job.format != "json")
                throw parameter_error("codeset files are written as JSON");
            const auto doc = generate(job);
            std::optional<VerificationReport> report;
            if (!job.no_verify)
                report = verify_document(doc);
            write_text(job.out, encode_codeset(doc), out);
            if (report) {
                if (!job.report.empty())
                    write_text(job.report, report_to_json(*report).dump(2) + "\n", out);
                err << summary(*report);
                return report->passed ? exit_ok : exit_verify_failed;
            }
            return exit_ok;
        }
        if (job.command == "verify") {
            if (job.in.empty())
                throw parameter_error("verify needs --in");
            const auto doc = decode_codeset(read_file(job.in));
            const auto report = verify_document(doc);
            write_text(job.report.empty() ? "-" : job.report, report_to_json(report).dump(2) + "\n", out);
            err << summary(report);
            return report.passed ? exit_ok : exit_verify_failed;
        }
        if (job.command == "export-grid") {
            if (job.in.empty())
                throw parameter_error("export-grid needs --in");
            const std::string format = job.format.empty() ? "csv" : job.format;
            if (format != "csv" && format != "json")
                throw parameter_error("--format must be csv or json");
            const auto doc = decode_codeset(read_file(job.in));
            write_text(job.out, format_grid(correlation_grid(doc, job.grid_a, job.grid_b), format), out);
            return exit_ok;
        }
        throw parameter_error("unknown command '" + job.command + "'");
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const format_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_params;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_params;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_bad_params;
    }
}

inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constructs and verifies IGC code sets and 2-D Z-complementary array code sets", "ccseq"};
    app.require_subcommand(1);
    JobSpec job;

    auto add_igc_opts = [&job](CLI::App* c) {
        c->add_option("--profile", job.profile, "prime powers, e.g. 2^2,3^2")->required();
        c->add_option("--lambda", job.lambda, "phase modulus (default: least admissible)");
        c->add_option("--igc-perms", job.igc_perms, "1-based permutation per factor, ';'-separated");
        c->add_option("--igc-lin", job.igc_lin, "linear coefficients per factor, ';'-separated");
        c->add_option("--igc-consts", job.igc_consts, "constant term per factor");
    };
    auto add_gcp_opts = [&job](CLI::App* c) {
        c->add_option("--m", job.m, "Boolean dimension");
        c->add_option("--gcp-perm", job.gcp_perm, "1-based permutation of the Boolean variables");
        c->add_option("--gcp-g", job.gcp_g, "linear coefficients g");
        c->add_option("--gcp-e", job.gcp_e, "offset of a");
        c->add_option("--gcp-e2", job.gcp_e2, "offset of b");
    };
    auto add_gen_opts = [&job](CLI::App* c) {
        c->add_option("--seed", job.seed, "draw unspecified parameters at random from this seed");
        c->add_option("--out", job.out, "codeset file ('-' for stdout)");
        c->add_option("--report", job.report, "verification report file");
        c->add_option("--format", job.format, "output format (json)");
        c->add_flag("--no-verify", job.no_verify, "skip verification");
    };

    auto* gcp = app.add_subcommand("gen-gcp", "Golay complementary pair over Z_2^m");
    gcp->add_option("--lambda", job.lambda, "even phase modulus (default 2)");
    add_gcp_opts(gcp);
    add_gen_opts(gcp);

    auto* igc = app.add_subcommand("gen-igc", "inter-group complementary code set");
    add_igc_opts(igc);
    add_gen_opts(igc);

    auto* zcac = app.add_subcommand("gen-zcac", "2-D Z-complementary array code");
    add_igc_opts(zcac);
    add_gcp_opts(zcac);
    add_gen_opts(zcac);
    zcac->add_option("--quad", job.quad, "s1;s2;t1;t2 label vectors");
    zcac->add_option("--strategy", job.strategy, "quadruple selection: greedy or random");

    auto* zcacs = app.add_subcommand("gen-zcacs", "2-D Z-complementary array code set");
    add_igc_opts(zcacs);
    add_gcp_opts(zcacs);
    add_gen_opts(zcacs);
    zcacs->add_option("--strategy", job.strategy, "quadruple selection: greedy or random");

    auto* verify = app.add_subcommand("verify", "re-verify a codeset file");
    verify->add_option("--in", job.in, "codeset file")->required();
    verify->add_option("--report", job.report, "report file (default stdout)");

    auto* grid = app.add_subcommand("export-grid", "full correlation grid for plotting");
    grid->add_option("--in", job.in, "codeset file")->required();
    grid->add_option("--out", job.out, "output file ('-' for stdout)");
    grid->add_option("--format", job.format, "csv or json");
    grid->add_option("--a", job.grid_a, "first code / array-set index");
    grid->add_option("--b", job.grid_b, "second code / array-set index");

    std::vector<const char*> argv{"ccseq"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_params;
    }
    for (auto* sub : app.get_subcommands())
        job.command = sub->get_name();
    return run(job, out, err);
}

} // namespace ccseq::cli
