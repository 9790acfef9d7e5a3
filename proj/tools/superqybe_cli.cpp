// Command-line front end: R-matrix construction, verification suites,
// Hamiltonians, spectra and limit checks with machine-readable output.
//
// Exit codes: 0 all checks pass / computation succeeded, 1 a check failed,
// 2 invalid parameters (message on stderr names the violated domain rule,
// nothing is written to stdout).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superqybe/superqybe.hpp"
#include "superqybe/verify.hpp"

namespace sq = superqybe;

namespace {

double default_tolerance() {
    if (const char* env = std::getenv("SUPERQYBE_TOLERANCE")) {
        try {
            const double t = std::stod(env);
            if (t > 0.0) return t;
        } catch (...) {
        }
        throw sq::DomainError("SUPERQYBE_TOLERANCE must be a positive real number");
    }
    return 1e-10;
}

struct Options {
    double q = 1.3;
    double alpha = 0.7;
    double beta = 1.9;
    double gamma = 0.4;
    int sites = 2;
    std::uint64_t seed = 1;
    int draws = 100;
    double tolerance = 1e-10;
    std::string format = "json";
    std::string window = "both";
    std::string construction = "closed";
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--q", opt.q, "deformation parameter q (> 0, != 1)");
    cmd->add_option("--alpha", opt.alpha, "representation label alpha");
    cmd->add_option("--beta", opt.beta, "representation label beta");
    cmd->add_option("--gamma", opt.gamma, "representation label gamma");
    cmd->add_option("--sites", opt.sites, "chain length L");
    cmd->add_option("--seed", opt.seed, "seed for the randomized sweeps");
    cmd->add_option("--draws", opt.draws,
                    "random draws per unitarity window (0 = fixed checks only)");
    cmd->add_option("--tolerance", opt.tolerance, "pass/fail tolerance for checks");
    cmd->add_option("--format", opt.format, "output format: json, csv or pretty");
    cmd->add_option("--window", opt.window, "unitarity window: type1, type2 or both");
    cmd->add_option("--construction", opt.construction,
                    "R-matrix construction: closed, projector or both");
}

int run_rmatrix(const Options& opt, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    const sq::SpectralPair pair(sq::ReprLabel(opt.alpha), sq::ReprLabel(opt.beta),
                                sq::QParams(opt.q));
    sq::Matrix R;
    std::string kind;
    if (opt.construction == "projector") {
        R = sq::r_projector_sum(pair).op.mat;
        kind = "rmatrix_projector_sum";
    } else if (opt.construction == "closed" || opt.construction == "both") {
        R = sq::r_closed_form(pair).op.mat;
        kind = "rmatrix_closed_form";
    } else {
        throw sq::DomainError("unknown construction '" + opt.construction +
                              "' (expected closed, projector or both)");
    }
    out = sq::emit_matrix(R, fmt, kind,
                          {{"q", opt.q}, {"alpha", opt.alpha}, {"beta", opt.beta}});
    return 0;
}

int run_verify(const Options& opt, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    sq::VerificationReport rep;
    rep.seed = opt.seed;
    sq::run_fixed_checks(rep, opt.q, opt.alpha, opt.beta, opt.gamma, opt.tolerance);
    if (opt.draws > 0) {
        sq::SweepConfig cfg;
        cfg.seed = opt.seed;
        cfg.draws = opt.draws;
        cfg.tolerance = opt.tolerance;
        cfg.window = sq::window_from_string(opt.window);
        sq::run_random_sweeps(rep, cfg);
    }
    rep.sort();
    out = sq::emit_report(rep, fmt);
    return rep.all_pass() ? 0 : 1;
}

int run_hamiltonian(const Options& opt, bool global, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    const sq::QParams params(opt.q);
    if (global) {
        const sq::Matrix H = sq::global_hamiltonian(opt.alpha, params, opt.sites);
        out = sq::emit_matrix(H, fmt, "global_hamiltonian",
                              {{"q", opt.q}, {"alpha", opt.alpha},
                               {"sites", double(opt.sites)}});
    } else {
        const sq::Matrix H = sq::local_hamiltonian_closed(opt.alpha, params).mat;
        out = sq::emit_matrix(H, fmt, "local_hamiltonian",
                              {{"q", opt.q}, {"alpha", opt.alpha}});
    }
    return 0;
}

int run_spectrum(const Options& opt, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    const sq::Matrix H = sq::global_hamiltonian(opt.alpha, sq::QParams(opt.q), opt.sites);
    out = sq::emit_spectrum(sq::real_spectrum(H), fmt,
                            {{"q", opt.q}, {"alpha", opt.alpha}, {"sites", double(opt.sites)}});
    return 0;
}

int run_transfer(const Options& opt, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    const sq::Matrix t =
        sq::transfer_matrix(opt.beta, opt.alpha, sq::QParams(opt.q), opt.sites);
    out = sq::emit_matrix(t, fmt, "transfer_matrix",
                          {{"q", opt.q}, {"alpha", opt.alpha}, {"beta", opt.beta},
                           {"sites", double(opt.sites)}});
    return 0;
}

int run_limits(const Options& opt, std::string& out) {
    const sq::OutputFormat fmt = sq::output_format_from_string(opt.format);
    sq::VerificationReport rep;
    rep.seed = opt.seed;
    sq::run_limit_checks(rep, opt.alpha, opt.beta, opt.sites);
    rep.sort();
    out = sq::emit_report(rep, fmt);
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-additive spectral parameter R-matrix toolkit for U_q(gl(2|1))"};
    app.require_subcommand(1);

    Options opt;
    auto* cmd_rmatrix = app.add_subcommand("rmatrix", "dump the 16x16 R-matrix");
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    auto* cmd_hamiltonian = app.add_subcommand("hamiltonian", "dump the local or global Hamiltonian");
    auto* cmd_spectrum = app.add_subcommand("spectrum", "sorted eigenvalues of the global Hamiltonian");
    auto* cmd_transfer = app.add_subcommand("transfer", "dump the transfer matrix t(beta)");
    auto* cmd_limits = app.add_subcommand("limits", "rational and Bariev limit checks");
    for (auto* c : {cmd_rmatrix, cmd_verify, cmd_hamiltonian, cmd_spectrum, cmd_transfer,
                    cmd_limits})
        add_common_flags(c, opt);

    try {
        opt.tolerance = default_tolerance();
    } catch (const sq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const bool explicit_sites = cmd_hamiltonian->count("--sites") > 0;

    std::string out;
    int code = 0;
    try {
        if (app.got_subcommand(cmd_rmatrix)) code = run_rmatrix(opt, out);
        else if (app.got_subcommand(cmd_verify)) code = run_verify(opt, out);
        else if (app.got_subcommand(cmd_hamiltonian)) code = run_hamiltonian(opt, explicit_sites, out);
        else if (app.got_subcommand(cmd_spectrum)) code = run_spectrum(opt, out);
        else if (app.got_subcommand(cmd_transfer)) code = run_transfer(opt, out);
        else if (app.got_subcommand(cmd_limits)) code = run_limits(opt, out);
    } catch (const sq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << out;
    return code;
}
