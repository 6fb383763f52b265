#pragma once

#include <string>

#include <json.hpp>

#include "ebcle/arch.hpp"
#include "ebcle/entropy.hpp"
#include "ebcle/planner.hpp"
#include "ebcle/stats.hpp"
#include "ebcle/trainer.hpp"

namespace ebcle {

// All documents carry "schema_version": 1.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const EntropyReport& report);
EntropyReport entropy_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EbcleEstimate& estimate);
nlohmann::json to_json(const ArchPlan& plan);
nlohmann::json to_json(const ArchGraph& graph);

nlohmann::json to_json(const RunRecord& record);
RunRecord run_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TTestResult& result, TailDirection direction);
nlohmann::json to_json(const Table3Row& row);

// Parses {"classes":[{"probs":[[intensity,p],...]},...],"height":..,...}.
SynthSpec synth_spec_from_json(const nlohmann::json& j);

} // namespace ebcle
