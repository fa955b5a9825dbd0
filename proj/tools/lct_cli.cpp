#include "lct/corpus.hpp"
#include "lct/dualgraph.hpp"
#include "lct/error.hpp"
#include "lct/polynomial.hpp"
#include "lct/report.hpp"
#include "lct/threshold.hpp"
#include "lct/weight.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

namespace {

constexpr int kOk = 0;
constexpr int kComputationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : lct::Error {
    using lct::Error::Error;
};

long default_bound()
{
    const char* env = std::getenv("LCT_MAX_WEIGHT");
    if (env == nullptr || *env == '\0')
        return lct::kDefaultSearchBound;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1)
        throw UsageError(std::string("LCT_MAX_WEIGHT must be a positive integer, got '") + env + "'");
    return v;
}

void emit(bool json, const lct::Json& j, const std::string& text)
{
    if (json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

/// Inputs are parsed inside `prepare` (errors exit 2); `run` does the
/// computation (errors exit 1) and returns the exit code.
int guarded(const std::function<void()>& prepare, const std::function<int()>& run)
{
    try {
        prepare();
    } catch (const lct::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    try {
        return run();
    } catch (const lct::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kComputationFailure;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Log canonical thresholds, log Enriques boundaries and K3 covers of hypersurface singularities"};
    app.require_subcommand(1);

    std::string poly, vars = "xyz", weight_text, file, op;
    std::optional<long> max_weight;
    bool json = false;

    auto* eval = app.add_subcommand("eval", "Threshold, boundary record and K3 cover for one weight");
    eval->add_option("--poly", poly, "Polynomial, e.g. \"x^7+y^3+z^2\"")->required();
    eval->add_option("--vars", vars, "Variable letters")->capture_default_str();
    eval->add_option("--weight", weight_text, "Weight, e.g. 6,14,21")->required();
    eval->add_flag("--json", json, "JSON output");

    auto* search = app.add_subcommand("search", "Minimize the threshold candidate over weights");
    search->add_option("--poly", poly, "Polynomial")->required();
    search->add_option("--vars", vars, "Variable letters")->capture_default_str();
    search->add_option("--max-weight", max_weight, "Largest weight entry (default 30 or LCT_MAX_WEIGHT)")
        ->check(CLI::PositiveNumber);
    search->add_flag("--json", json, "JSON output");

    auto* verdict = app.add_subcommand("verdict", "Exceptionality verdict");
    verdict->add_option("--poly", poly, "Polynomial in x, y, z")->required();
    verdict->add_option("--vars", vars, "Variable letters")->capture_default_str();
    verdict->add_option("--max-weight", max_weight, "Largest weight entry for the search")
        ->check(CLI::PositiveNumber);
    verdict->add_flag("--json", json, "JSON output");

    auto* graph = app.add_subcommand("graph", "Dual graph computations");
    graph->add_option("--file", file, "Graph JSON file")->required();
    graph->add_option("--op", op, "Operation")
        ->required()
        ->check(CLI::IsMember({"fundamental-cycle", "invariants", "discrepancy", "klt"}));
    graph->add_flag("--json", json, "JSON output");

    auto* corpus = app.add_subcommand("corpus", "Table corpus tools");
    corpus->require_subcommand(1);
    auto* verify = corpus->add_subcommand("verify", "Recompute every row of a corpus file");
    verify->add_option("--file", file, "Corpus JSON file")->required();
    verify->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    std::optional<lct::Polynomial> f;
    std::optional<lct::Weight> w;
    std::optional<lct::DualGraph> g;
    long bound = 0;

    if (eval->parsed()) {
        return guarded(
            [&] {
                f = lct::parse_polynomial(poly, vars);
                w = lct::parse_weight(weight_text);
            },
            [&] {
                lct::EvalReport r = lct::evaluate(*f, *w);
                emit(json, lct::to_json(r), lct::to_text(r));
                return r.record && !r.record->klt_coefficients() ? kComputationFailure : kOk;
            });
    }
    if (search->parsed() || verdict->parsed()) {
        return guarded(
            [&] {
                f = lct::parse_polynomial(poly, vars);
                bound = max_weight ? *max_weight : default_bound();
            },
            [&] {
                if (search->parsed()) {
                    lct::SearchResult r = lct::weight_search(*f, bound);
                    emit(json, lct::to_json(r), lct::to_text(r));
                } else {
                    lct::Verdict v = lct::exceptionality_verdict(*f, bound);
                    emit(json, lct::to_json(v), lct::to_text(v));
                }
                return kOk;
            });
    }
    if (graph->parsed()) {
        return guarded([&] { g = lct::DualGraph::load(file); },
                       [&] {
                           if (op == "fundamental-cycle") {
                               lct::Cycle z = lct::fundamental_cycle(*g);
                               emit(json, lct::cycle_json(*g, z), lct::cycle_text(*g, z));
                           } else if (op == "invariants") {
                               lct::EllipticInvariants inv = lct::elliptic_invariants(*g);
                               emit(json, lct::to_json(inv), lct::to_text(inv));
                           } else {
                               lct::DiscrepancySolution sol = lct::discrepancy_system(*g);
                               if (op == "discrepancy")
                                   emit(json, lct::to_json(sol), lct::to_text(sol));
                               else
                                   emit(json, lct::klt_json(sol), lct::klt_text(sol));
                           }
                           return kOk;
                       });
    }
    std::vector<lct::TableRow> rows;
    return guarded([&] { rows = lct::load_corpus(file); },
                   [&] {
                       lct::CorpusSummary s = lct::verify_all(rows);
                       emit(json, lct::to_json(s), lct::to_text(s));
                       return s.failed == 0 ? kOk : kComputationFailure;
                   });
}
