// opnlink: command-line front end for the lemma verifiers, the classifier and
// the bound LP.
//
// Exit codes: 0 pass, 1 counterexample or invalid certificate, 2 usage error,
// 3 budget exceeded.

#include "opn/errors.hpp"
#include "opn/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace opn;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t parse_count(const std::string& text, const char* what) {
    const BigInt v = parse_bigint(text);
    if (v < 1) {
        throw InvalidInput(std::string(what) + " must be positive");
    }
    return to_u64(v);
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << render(j);
        return;
    }
    if (out == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) {
        throw InvalidInput("cannot write " + out);
    }
    f << j.dump(2) << '\n';
    std::cerr << "wrote " << out << '\n';
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw InvalidInput("cannot read " + path);
    }
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

struct Args {
    std::string variant = "standard";
    std::string out;
    std::string file;
    std::string lemma;
    std::string bound = "10000";
    std::string jobs = "1";
    std::string budget = "100000000";
    std::string witnesses = "100";
    std::string prime;
    std::string min_share = "2";
    std::string cls = "S32";
    std::string t, r, d;
};

SweepOptions sweep_options(const Args& a) {
    SweepOptions o;
    o.jobs = static_cast<unsigned>(parse_count(a.jobs, "--jobs"));
    o.witness_cap = parse_bigint(a.witnesses).get_ui();
    o.factor.budget = parse_count(a.budget, "--budget");
    return o;
}

FactorOptions factor_options(const Args& a) {
    FactorOptions o;
    o.budget = parse_count(a.budget, "--budget");
    return o;
}

int run(int argc, char** argv) {
    CLI::App app{"Bounded lemma verification, prime classification and bound certificates"};
    app.require_subcommand(1);
    Args a;

    auto* lp = app.add_subcommand("lp", "Bound LP: solve, check a certificate, or dump the system");
    lp->require_subcommand(1);
    auto* solve = lp->add_subcommand("solve", "Optimize a, then b, in a*omega + b <= Omega");
    solve->add_option("--variant", a.variant, "standard or no3")->capture_default_str();
    solve->add_option("--out", a.out, "Write JSON here ('-' for stdout)");
    auto* check = lp->add_subcommand("check", "Validate a certificate JSON file");
    check->add_option("file", a.file, "Certificate JSON")->required();
    check->add_option("--out", a.out, "Write JSON here ('-' for stdout)");
    auto* system = lp->add_subcommand("system", "Print the relation system");
    system->add_option("--variant", a.variant, "standard or no3")->capture_default_str();
    system->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* verify = app.add_subcommand("verify", "Exhaustively check one lemma up to a bound");
    verify->add_option("--lemma", a.lemma, "Lemma id")->required();
    verify->add_option("--bound", a.bound, "Bound on the squared-side variables")->capture_default_str();
    verify->add_option("--jobs", a.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--budget", a.budget, "Factoring step budget")->capture_default_str();
    verify->add_option("--witnesses", a.witnesses, "Witness cap")->capture_default_str();
    verify->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* classify = app.add_subcommand("classify", "Factor p^2 + p + 1 and classify p");
    classify->add_option("p", a.prime, "Odd prime other than 3")->required();
    classify->add_option("--budget", a.budget, "Factoring step budget")->capture_default_str();
    classify->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* link = app.add_subcommand("link", "Linked prime of p");
    link->add_option("p", a.prime, "Prime in S1, S21, S22 or S31")->required();
    link->add_option("--budget", a.budget, "Factoring step budget")->capture_default_str();
    link->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* collide = app.add_subcommand("collide", "Primes of one class sharing their largest contributed prime");
    collide->add_option("--bound", a.bound, "Largest p")->capture_default_str();
    collide->add_option("--min-share", a.min_share, "Smallest fiber reported")->capture_default_str();
    collide->add_option("--class", a.cls, "Class tag")->capture_default_str();
    collide->add_option("--jobs", a.jobs, "Worker threads")->capture_default_str();
    collide->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* cyclo = app.add_subcommand("cyclo", "Does Phi_2t divide Phi_t(Psi_r)?");
    cyclo->add_option("--t", a.t, "Odd prime")->required();
    cyclo->add_option("--r", a.r, "Odd positive integer")->required();
    cyclo->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    auto* reconstruct = app.add_subcommand("reconstruct", "Primes a, b, c from d");
    reconstruct->add_option("--d", a.d, "Odd prime above 3")->required();
    reconstruct->add_option("--out", a.out, "Write JSON here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (solve->parsed()) {
        const Optimum opt = optimize(build_system(parse_variant(a.variant)));
        emit(solve_json(opt), a.out);
        return 0;
    }
    if (check->parsed()) {
        const Certificate cert = certificate_from_json(read_json(a.file));
        Json j{{"kind", "lp-check"}, {"variant", std::string(to_string(cert.variant))}};
        int code = 0;
        try {
            j["result"] = to_json(check_certificate(build_system(cert.variant), cert));
            j["valid"] = true;
        } catch (const InvalidCertificate& e) {
            j["valid"] = false;
            j["error"] = e.what();
            code = kExitFail;
        } catch (const UnknownRelation& e) {
            j["valid"] = false;
            j["error"] = e.what();
            code = kExitFail;
        }
        emit(j, a.out);
        return code;
    }
    if (system->parsed()) {
        emit(to_json(build_system(parse_variant(a.variant))), a.out);
        return 0;
    }
    if (verify->parsed()) {
        const SearchReport report = opn::verify(parse_lemma(a.lemma), parse_count(a.bound, "--bound"), sweep_options(a));
        emit(to_json(report), a.out);
        return report.passed() ? 0 : kExitFail;
    }
    if (classify->parsed()) {
        emit(to_json(opn::classify(parse_bigint(a.prime), factor_options(a))), a.out);
        return 0;
    }
    if (link->parsed()) {
        const ContributionProfile p = opn::classify(parse_bigint(a.prime), factor_options(a));
        emit(link_json(p, linked_prime(p)), a.out);
        return 0;
    }
    if (collide->parsed()) {
        const ClassTag cls = parse_class_tag(a.cls);
        const auto bound = parse_count(a.bound, "--bound");
        const auto share = parse_count(a.min_share, "--min-share");
        emit(collisions_json(cls, share, bound, find_shared_largest(cls, share, bound, sweep_options(a))), a.out);
        return 0;
    }
    if (cyclo->parsed()) {
        const auto t = parse_count(a.t, "--t");
        const auto r = parse_count(a.r, "--r");
        if (t > UINT32_MAX || r > UINT32_MAX) {
            throw InvalidInput("t and r must fit in 32 bits");
        }
        emit(to_json(check_proposition_report(static_cast<unsigned>(t), static_cast<unsigned>(r))), a.out);
        return 0;
    }
    if (reconstruct->parsed()) {
        const BigInt d = parse_bigint(a.d);
        emit(reconstruct_json(d, reconstruct_from_d(d)), a.out);
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InvalidCertificate& e) {
        std::cerr << "invalid certificate: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
