#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cycorder/bounds.hpp"
#include "cycorder/spectrum.hpp"
#include "cycorder/structure.hpp"
#include "cycorder/sumset.hpp"

namespace cycorder {

/// Bumped whenever a JSON or CSV layout changes. Printed by `--version`.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// JSON conventions: sets are literals "0,1,3" next to their modulus, orders
// are integers or null for infinite, rationals are "p/q" strings.

Json toJson(const OrderValue& value);
OrderValue orderFromJson(const Json& j);

Json toJson(const EnumerationMode& mode);
EnumerationMode modeFromJson(const Json& j);

Json toJson(const SumsetTrajectory& t);
SumsetTrajectory trajectoryFromJson(const Json& j);

Json toJson(const SpectrumReport& report);
SpectrumReport spectrumFromJson(const Json& j);

Json toJson(const ConjectureReport& report);
ConjectureReport conjectureFromJson(const Json& j);

Json toJson(const ConjectureSweep& sweep);
ConjectureSweep sweepFromJson(const Json& j);

Json toJson(const KlBoundBreakdown& breakdown);
KlBoundBreakdown klBoundFromJson(const Json& j);

Json toJson(const GrowthCheck& check);
GrowthCheck growthCheckFromJson(const Json& j);

Json toJson(const StructureReport& report);
StructureReport structureReportFromJson(const Json& j);

Json toJson(const StructureAnalysis& analysis);
StructureAnalysis structureAnalysisFromJson(const Json& j);

Json toJson(const PipelineTrace& trace);
PipelineTrace pipelineTraceFromJson(const Json& j);

Json toJson(const std::vector<FamilyRecord>& records, const FamilySummary& summary);
std::vector<FamilyRecord> familyRecordsFromJson(const Json& j);
FamilySummary familySummaryFromJson(const Json& j);

/// Pretty-printed with a trailing newline; key order is fixed.
std::string dump(const Json& j);

// CSV: no quoting. Set literals inside a field use ';' between members.

/// "n,order,witness" rows, then "n,gap_start,gap_end" rows, each block with
/// its header line.
std::string spectrumCsv(const SpectrumReport& report);
/// "n,k,max_min_gap,running_max,exceeders,witness,witness_order,caveat".
std::string sweepCsv(const ConjectureSweep& sweep);
/// "k,n,rho,nearest_l,min_gap".
std::string familyCsv(const std::vector<FamilyRecord>& records);

}  // namespace cycorder
