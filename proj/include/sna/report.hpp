#pragma once

#include <string>

#include "sna/cleaner.hpp"
#include "sna/metrics.hpp"

namespace sna {

// Flat JSON object with the three cleaning counters.
std::string cleaning_stats_json(const CleaningStats& stats);

// The metrics report: an "overall" object with the headline fields and a
// "summaries" object with min/max/average/median per metric. Key order is
// fixed, so output is deterministic.
std::string metrics_report_json(const AnalysisResult& result);

}  // namespace sna
