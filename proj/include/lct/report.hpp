#pragma once

#include "lct/boundary.hpp"
#include "lct/corpus.hpp"
#include "lct/dualgraph.hpp"
#include "lct/k3cover.hpp"
#include "lct/threshold.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace lct {

using Json = nlohmann::ordered_json;

/// Everything `lct eval` prints for one (f, w).
struct EvalReport {
    ThresholdReport threshold;
    bool upper_bound_only;                  ///< candidate >= 1
    std::optional<LogEnriquesRecord> record; ///< three variables and candidate < 1
    std::optional<K3CoverRecord> k3;
    std::string note; ///< why record or k3 is absent
};

EvalReport evaluate(const Polynomial& f, const Weight& w);

/// "threshold candidate (upper bound)" or the >= 1 label.
std::string candidate_label(const Rational& candidate);

Json to_json(const Weight& w);
Json to_json(const ThresholdReport& r);
Json to_json(const LogEnriquesRecord& r);
Json to_json(const K3CoverRecord& r);
Json to_json(const EvalReport& r);
Json to_json(const SearchResult& r);
Json to_json(const Verdict& v);
Json cycle_json(const DualGraph& g, const Cycle& z);
Json to_json(const EllipticInvariants& inv);
Json to_json(const DiscrepancySolution& sol);
Json klt_json(const DiscrepancySolution& sol);
Json to_json(const CheckResult& c);
Json to_json(const RowReport& r);
Json to_json(const CorpusSummary& s);

std::string to_text(const EvalReport& r);
std::string to_text(const SearchResult& r);
std::string to_text(const Verdict& v);
std::string cycle_text(const DualGraph& g, const Cycle& z);
std::string to_text(const EllipticInvariants& inv);
std::string to_text(const DiscrepancySolution& sol);
std::string klt_text(const DiscrepancySolution& sol);
std::string to_text(const CorpusSummary& s);

} // namespace lct
