// hilbchern: exact Chern classes and Chern characters of the tangent and
// tautological bundles on Hilbert schemes of points in the affine plane,
// written in the power-sum basis of the ring of symmetric functions.

#include <hilb/character.hpp>
#include <hilb/hilbert.hpp>
#include <hilb/identities.hpp>
#include <hilb/jsonio.hpp>
#include <hilb/partition.hpp>
#include <hilb/symfunc.hpp>
#include <hilb/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

// exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeOptions {
    std::string quantity;  // chern | ch
    std::string bundle;    // tangent | taut
    int n = 0;
    std::optional<int> k;
    std::string method;  // equivariant | series | direct
    std::string weights_file;
    std::string format = "text";
    std::optional<int> max_weight;
    int threads = 0;
};

struct VerifyOptions {
    std::string suite = "all";
    std::optional<int> max_n;
    std::optional<int> max_k;
    std::string format = "text";
    int threads = 0;
};

struct CharOptions {
    std::string lambda;
    std::optional<std::string> mu;
    std::string format = "text";
};

void print_symfunc(const hilb::SymFunc& f, const std::string& format) {
    if (format == "json")
        std::cout << hilb::symfunc_to_json(f).dump() << "\n";
    else
        std::cout << hilb::render_text(f) << "\n";
}

hilb::SymFunc compute_series(const ComputeOptions& opt) {
    int trunc = std::max(opt.n, opt.max_weight.value_or(opt.n));
    hilb::Truncation t{trunc};
    hilb::SymFunc series;
    if (opt.bundle == "tangent")
        series = opt.quantity == "chern" ? hilb::series_c_tangent(t) : hilb::series_ch_tangent(t);
    else
        series = opt.quantity == "chern" ? hilb::series_c_taut(t) : hilb::series_ch_taut(t);
    return weight_component(series, opt.n);
}

hilb::SymFunc compute_equivariant(const ComputeOptions& opt) {
    std::optional<hilb::WeightAssignment> weights;
    if (opt.bundle == "tangent") {
        if (!opt.weights_file.empty())
            throw UsageError("the tangent bundle has builtin weights; --weights is not accepted");
        weights = hilb::WeightAssignment::tangent(opt.n);
    } else {
        if (opt.weights_file.empty())
            throw UsageError(
                "method 'equivariant' for the tautological bundle requires --weights FILE");
        std::ifstream in(opt.weights_file);
        if (!in) throw UsageError("cannot open weights file: " + opt.weights_file);
        weights = hilb::load_weight_assignment(in, opt.n);
    }
    if (opt.k) {
        return opt.quantity == "chern"
                   ? hilb::equivariant_chern_class(opt.n, *opt.k, *weights, opt.threads)
                   : hilb::equivariant_chern_char(opt.n, *opt.k, *weights, opt.threads);
    }
    return opt.quantity == "chern" ? hilb::equivariant_total_chern(opt.n, *weights, opt.threads)
                                   : hilb::equivariant_total_ch(opt.n, *weights, opt.threads);
}

int run_compute(const ComputeOptions& opt) {
    hilb::SymFunc result;
    if (opt.method == "series") {
        if (!opt.weights_file.empty())
            throw UsageError("--weights is only meaningful with --method equivariant");
        result = compute_series(opt);
        if (opt.k) result = degree_component(result, *opt.k);
    } else if (opt.method == "direct") {
        if (opt.bundle != "taut" || opt.quantity != "ch")
            throw UsageError("method 'direct' supports only: compute ch taut");
        result = hilb::ch_taut_direct(opt.n);
        if (opt.k) result = degree_component(result, *opt.k);
    } else {  // equivariant
        result = compute_equivariant(opt);
    }
    print_symfunc(result, opt.format);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    std::vector<hilb::CheckResult> results;
    if (opt.suite == "identities")
        results = hilb::suite_identities(opt.max_k, opt.max_n);
    else if (opt.suite == "crosscheck")
        results = hilb::suite_crosscheck(opt.max_n, opt.threads);
    else if (opt.suite == "decomposition")
        results = hilb::suite_decomposition(opt.max_n);
    else
        results = hilb::suite_all(opt.max_n, opt.max_k, opt.threads);

    bool ok = hilb::all_pass(results);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["suite"] = opt.suite;
        doc["results"] = nlohmann::json::array();
        for (const auto& r : results)
            doc["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << doc.dump() << "\n";
    } else {
        int passed = 0;
        for (const auto& r : results) {
            if (r.pass) ++passed;
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        }
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_char(const CharOptions& opt) {
    hilb::Partition lambda = hilb::parse_partition(opt.lambda);
    if (opt.mu) {
        hilb::Partition mu = hilb::parse_partition(*opt.mu);
        if (mu.weight() != lambda.weight())
            throw UsageError("lambda and mu must have equal weights");
        hilb::Int value = hilb::mn_character(lambda, mu);
        if (opt.format == "json") {
            nlohmann::json doc = {{"lambda", hilb::partition_to_json(lambda)},
                                  {"mu", hilb::partition_to_json(mu)},
                                  {"value", value.str()}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << value.str() << "\n";
        }
        return kExitOk;
    }
    auto classes = hilb::partitions_of(lambda.weight());
    if (opt.format == "json") {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& mu : classes)
            row.push_back({{"mu", hilb::partition_to_json(mu)},
                           {"value", hilb::mn_character(lambda, mu).str()}});
        nlohmann::json doc = {{"lambda", hilb::partition_to_json(lambda)}, {"row", row}};
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& mu : classes)
            std::cout << hilb::to_string(mu) << ": " << hilb::mn_character(lambda, mu).str()
                      << "\n";
    }
    return kExitOk;
}

int run_schur(const CharOptions& opt) {
    hilb::Partition lambda = hilb::parse_partition(opt.lambda);
    print_symfunc(hilb::schur_in_p(lambda), opt.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chern classes of bundles on Hilbert schemes of points in the affine plane"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute a Chern class or character as a symmetric function");
    compute->add_option("quantity", copt.quantity, "chern or ch")
        ->required()
        ->check(CLI::IsMember({"chern", "ch"}));
    compute->add_option("bundle", copt.bundle, "tangent or taut")
        ->required()
        ->check(CLI::IsMember({"tangent", "taut"}));
    compute->add_option("-n,--n", copt.n, "number of points")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("-k,--k", copt.k, "cohomological degree (omit for the total class)")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--method", copt.method, "equivariant, series or direct")
        ->required()
        ->check(CLI::IsMember({"equivariant", "series", "direct"}));
    compute->add_option("--weights", copt.weights_file,
                        "JSON weight table for a custom linearized bundle");
    compute->add_option("--format", copt.format)->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--max-weight", copt.max_weight, "series truncation (default: n)")
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--threads", copt.threads, "thread cap (default: all cores)");

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "Run exact verification suites");
    verify->add_option("suite", vopt.suite, "identities, crosscheck, decomposition or all")
        ->check(CLI::IsMember({"identities", "crosscheck", "decomposition", "all"}));
    verify->add_option("--max-n", vopt.max_n, "override the per-check n bounds")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-k", vopt.max_k, "override the per-check k bounds")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", vopt.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--threads", vopt.threads, "thread cap (default: all cores)");

    CharOptions chopt;
    CLI::App* charcmd = app.add_subcommand("char", "Symmetric group character chi^lambda_mu");
    charcmd->add_option("--lambda", chopt.lambda, "partition, e.g. 2,1")->required();
    charcmd->add_option("--mu", chopt.mu, "conjugacy class (omit for the full row)");
    charcmd->add_option("--format", chopt.format)->check(CLI::IsMember({"text", "json"}));

    CharOptions sopt;
    CLI::App* schur = app.add_subcommand("schur", "Schur function in the power-sum basis");
    schur->add_option("--lambda", sopt.lambda, "partition, e.g. 2,1")->required();
    schur->add_option("--format", sopt.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(copt);
        if (verify->parsed()) return run_verify(vopt);
        if (charcmd->parsed()) return run_char(chopt);
        if (schur->parsed()) return run_schur(sopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
