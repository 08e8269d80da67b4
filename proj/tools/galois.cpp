#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "galois/correspondence.hpp"
#include "galois/counters.hpp"
#include "galois/errors.hpp"
#include "galois/finite_field.hpp"
#include "galois/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitUndecided = 3;

constexpr int kFqCap = 4096;

// The environment variable wins over the command-line flag.
long effective_precision_cap(long flag_value) {
    const char* env = std::getenv("GALOIS_PRECISION_CAP");
    if (env == nullptr || *env == '\0') return flag_value;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0) return flag_value;
    return v;
}

int run_analyze(const std::string& poly_text, const std::string& format, int max_degree,
                long precision_cap) {
    auto t0 = std::chrono::steady_clock::now();

    galois::QPoly input;
    try {
        input = galois::parse_poly(poly_text);
    } catch (const galois::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (input.is_zero() || input.degree() < 1) {
        std::cerr << "error: polynomial must be nonconstant\n";
        return kExitUsage;
    }
    if (input.degree() > max_degree) {
        std::cerr << "error: degree " << input.degree() << " exceeds --max-degree "
                  << max_degree << "\n";
        return kExitUsage;
    }

    galois::reset_work_counters();
    galois::PrecisionPolicy policy;
    policy.cap_bits = precision_cap;
    if (policy.start_bits > policy.cap_bits) policy.start_bits = policy.cap_bits;

    galois::AnalysisResult result;
    result.input_text = poly_text;
    result.input_poly = input;
    result.analyzed = galois::squarefree_part(input);

    try {
        galois::SplitField sf = galois::splitting_field(result.analyzed, policy);
        result.report = galois::verify_fundamental_theorem(sf, policy);
    } catch (const galois::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const galois::UndecidedError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return kExitUndecided;
    }
    result.counters = galois::work_counters();

    if (format == "json")
        std::cout << galois::render_json(result);
    else if (format == "dot")
        std::cout << galois::render_dot(result);
    else
        std::cout << galois::render_text(result);

    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return result.report.all_pass ? kExitPass : kExitVerificationFailed;
}

int run_verify_lemmas(int pmax, int qmax, const std::string& format) {
    auto t0 = std::chrono::steady_clock::now();

    if (pmax > kFqCap || qmax * qmax > kFqCap) {
        std::cerr << "error: sweep bound exceeds field size cap " << kFqCap << "\n";
        return kExitUsage;
    }

    galois::SweepReport sweep;
    sweep.pmax = pmax;
    sweep.qmax = qmax;
    sweep.all_pass = true;

    try {
        for (int m = 2; m <= pmax; ++m) {
            int p = 0;
            int n = 0;
            if (!galois::is_prime_power(m, p, n)) continue;
            galois::Fq f = galois::build_fq(p, n, kFqCap);

            galois::SweepFieldItem item;
            item.q = m;
            item.p = p;
            item.n = n;
            item.union_proper = galois::union_check_subfields(f, &item.union_size);
            galois::FqCorrespondenceReport rep = galois::verify_correspondence_fq(f);
            item.correspondence = rep.pass;
            item.subgroup_count = rep.subgroup_count;
            item.detail = rep.detail;
            sweep.all_pass = sweep.all_pass && item.union_proper && item.correspondence;
            sweep.fields.push_back(std::move(item));
        }

        for (int q = 2; q <= qmax; ++q) {
            int p = 0;
            int n = 0;
            if (!galois::is_prime_power(q, p, n)) continue;
            galois::SweepSubspaceItem item;
            item.q = q;
            item.min_cover = galois::union_check_subspaces(q, 2, kFqCap);
            item.expected = q + 1;
            item.ok = item.min_cover.has_value() && *item.min_cover == item.expected;
            sweep.all_pass = sweep.all_pass && item.ok;
            sweep.subspaces.push_back(item);
        }
    } catch (const galois::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (format == "json")
        std::cout << galois::render_sweep_json(sweep);
    else
        std::cout << galois::render_sweep_text(sweep);

    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return sweep.all_pass ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational Galois theory engine"};
    app.require_subcommand(1);

    std::string poly_text;
    std::string analyze_format = "text";
    int max_degree = 8;
    long precision_cap = 8192;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "construct the splitting field of a rational polynomial, enumerate its "
                   "automorphism group, and verify the subgroup/subfield correspondence");
    analyze->add_option("poly", poly_text, "polynomial in x with rational coefficients")
        ->required();
    analyze->add_option("--format", analyze_format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    analyze->add_option("--max-degree", max_degree, "largest accepted input degree")
        ->check(CLI::Range(1, 8));
    analyze->add_option("--precision-cap", precision_cap,
                        "largest floating point precision tried before giving up, in bits");

    int pmax = 1024;
    int qmax = 5;
    std::string lemmas_format = "text";
    CLI::App* lemmas = app.add_subcommand(
        "verify-lemmas", "exhaustively check the finite-field union and correspondence "
                         "properties up to the given bounds");
    lemmas->add_option("--pmax", pmax, "check every finite field of size up to this bound");
    lemmas->add_option("--qmax", qmax, "check subspace covers of F_q^2 for q up to this bound");
    lemmas->add_option("--format", lemmas_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (analyze->parsed())
            return run_analyze(poly_text, analyze_format, max_degree,
                               effective_precision_cap(precision_cap));
        return run_verify_lemmas(pmax, qmax, lemmas_format);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}
