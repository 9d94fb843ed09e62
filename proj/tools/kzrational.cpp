// kzrational: build, verify and gate exact rational solutions of
// Knizhnik-Zamolodchikov systems for the natural S_n representation.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kz/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct Options {
    int n = 0;
    std::string points;
    int rho = 0;
    long long m1 = 0, m2 = 0;
    std::string input_path;
    std::string output_path;
    std::string format = "json";
};

std::vector<kz::Rational> parse_points(const std::string& csv) {
    std::vector<kz::Rational> pts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) pts.push_back(kz::Rational::parse(tok));
    return pts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kz::input_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) throw kz::input_error("cannot open output file: " + opt.output_path);
    out << payload;
}

kz::KZSystem system_from_options(const Options& opt) {
    if (!opt.input_path.empty())
        return kz::system_from_json(nlohmann::json::parse(read_file(opt.input_path)));
    if (opt.n == 0 || opt.points.empty() || opt.rho == 0)
        throw kz::input_error("build needs --n, --points and --rho (or --input with a system document)");
    return kz::KZSystem(opt.n, parse_points(opt.points), opt.rho);
}

int cmd_build(const Options& opt) {
    const kz::KZSystem sys = system_from_options(opt);

    kz::SolutionDocument doc;
    kz::MatrixF w;
    if (sys.rho == -1) {
        const kz::FundamentalSolution fund = kz::build_fundamental(sys);
        w = kz::to_matrix(fund);
        doc = kz::make_document(fund, sys);
    } else {
        w = kz::rho_plus_fundamental(sys);
        doc = kz::make_document(w, sys);
    }

    // Never emit an unverified artifact.
    const kz::VerificationReport rep = kz::verify_ode(sys, w);
    if (!rep.all_ok()) {
        std::cerr << "internal verification failed:\n" << kz::to_text(rep);
        return kExitInternal;
    }

    emit(opt, opt.format == "text" ? kz::to_text(w) : kz::dump(kz::to_json(doc)));
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    if (opt.input_path.empty()) throw kz::input_error("verify needs --input");
    const kz::SolutionDocument doc =
        kz::solution_from_json(nlohmann::json::parse(read_file(opt.input_path)));
    const kz::KZSystem sys = doc.system();
    const kz::VerificationReport rep = kz::verify_ode(sys, doc.matrix());
    emit(opt, opt.format == "text" ? kz::to_text(rep) : kz::dump(kz::to_json(rep)));
    return rep.all_ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_gate(const Options& opt) {
    const kz::GateVerdict verdict = kz::rationality_gate(opt.m1, opt.m2);
    emit(opt, opt.format == "text" ? kz::to_text(verdict) : kz::dump(kz::to_json(verdict)));
    return kExitOk;
}

int cmd_consistency(const Options& opt) {
    if (opt.n < 3) throw kz::input_error("consistency needs --n with n >= 3");
    const kz::ConsistencyResult r = kz::consistency_relations(opt.n);
    std::ostringstream os;
    os << "checked " << r.pairs << " pairs, " << r.triples << " triples, " << r.quadruples
       << " quadruples: " << (r.ok ? "all commutation relations hold" : "FAILED") << "\n";
    emit(opt, os.str());
    return r.ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational fundamental solutions of Knizhnik-Zamolodchikov systems"};
    app.require_subcommand(1);

    Options opt;
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input_path, "input JSON document");
        cmd->add_option("--output", opt.output_path, "output path (default: stdout)");
        cmd->add_option("--format", opt.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* build = app.add_subcommand("build", "construct and verify a fundamental solution");
    build->add_option("--n", opt.n, "dimension n >= 3");
    build->add_option("--points", opt.points, "comma-separated pole points, p/q form");
    build->add_option("--rho", opt.rho, "+1 or -1");
    add_io(build);

    CLI::App* verify = app.add_subcommand("verify", "verify a solution document");
    add_io(verify);

    CLI::App* gate = app.add_subcommand("gate", "integrality gate for weighted 3x3 variants");
    gate->add_option("--m1", opt.m1, "integer weight of the first pole")->required();
    gate->add_option("--m2", opt.m2, "integer weight of the second pole")->required();
    add_io(gate);

    CLI::App* consistency = app.add_subcommand("consistency", "check the commutation relations");
    consistency->add_option("--n", opt.n, "dimension n >= 3")->required();
    add_io(consistency);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (gate->parsed()) return cmd_gate(opt);
        return cmd_consistency(opt);
    } catch (const kz::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
