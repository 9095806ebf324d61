#pragma once

#include <nlohmann/json.hpp>

#include "cycloseq/analysis.hpp"
#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/extfield.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

using Json = nlohmann::ordered_json;

// Stable report keys; the CLI prints these and the CSV projection reuses them.
Json to_json(const LinearComplexityReport& r);
Json to_json(const DegenerateReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const CharSumReport& r);
Json to_json(const CaseTableReport& r);
Json to_json(const BalanceProfile& r);
Json constants_json(const SystemConstants& sc);
/// Sidecar written next to a sequence file.
Json sequence_metadata(const QuaternarySequence& seq);
/// Sorted class sets for every ClassId, plus the four bucket unions.
Json classes_json(const CyclotomicSystem& system);

}  // namespace cycloseq
