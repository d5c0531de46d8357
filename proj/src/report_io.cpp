#include "cycorder/report_io.hpp"

#include <sstream>

#include "cycorder/errors.hpp"

namespace cycorder {

namespace {

Json frac(const Rational& r) { return toFractionString(r); }

Json frac(const std::optional<Rational>& r) { return r ? Json(toFractionString(*r)) : Json(nullptr); }

Rational fracFrom(const Json& j) { return parseFraction(j.get<std::string>()); }

std::optional<Rational> optFracFrom(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return fracFrom(j);
}

Json literal(const ZnSet& set) { return formatMembers(set); }

ZnSet setFrom(std::uint64_t n, const Json& j) { return parseZnSet(n, j.get<std::string>()); }

template <typename T>
Json optional(const std::optional<T>& value) {
    return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optionalFrom(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

Json header(const char* kind) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

void expectKind(const Json& j, const char* kind) {
    if (!j.contains("kind") || j.at("kind") != kind) {
        throw UsageError(std::string("expected a \"") + kind + "\" report");
    }
}

Json basisJson(const BasisRecord& r) { return Json{{"basis", literal(r.set)}, {"order", r.order}}; }

BasisRecord basisFrom(std::uint64_t n, const Json& j) {
    return {setFrom(n, j.at("basis")), j.at("order").get<std::uint64_t>()};
}

StructureCase caseFrom(const std::string& s) {
    if (s == "CaseI") return StructureCase::CaseI;
    if (s == "CaseII") return StructureCase::CaseII;
    if (s == "CaseIII") return StructureCase::CaseIII;
    throw UsageError("unknown structure case \"" + s + "\"");
}

PipelineBranch branchFrom(const std::string& s) {
    if (s == "Case1") return PipelineBranch::Case1;
    if (s == "Case2") return PipelineBranch::Case2;
    if (s == "Unavailable") return PipelineBranch::Unavailable;
    throw UsageError("unknown pipeline branch \"" + s + "\"");
}

}  // namespace

Json toJson(const OrderValue& value) { return value.isFinite() ? Json(value.value()) : Json(nullptr); }

OrderValue orderFromJson(const Json& j) {
    return j.is_null() ? OrderValue::infinite() : OrderValue::finite(j.get<std::uint64_t>());
}

Json toJson(const EnumerationMode& mode) {
    if (mode.kind == EnumerationMode::Kind::Exhaustive) return Json{{"kind", "exhaustive"}};
    return Json{{"kind", "card_capped"}, {"max_card", mode.maxCard}};
}

EnumerationMode modeFromJson(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "exhaustive") return EnumerationMode::exhaustive();
    if (kind == "card_capped") return EnumerationMode::cardCapped(j.at("max_card").get<std::uint64_t>());
    throw UsageError("unknown enumeration mode \"" + kind + "\"");
}

Json toJson(const SumsetTrajectory& t) {
    Json j = header("trajectory");
    j["n"] = t.base.modulus();
    j["base"] = literal(t.base);
    j["sizes"] = t.sizes;
    Json levels = Json::array();
    for (const ZnSet& level : t.levels) levels.push_back(literal(level));
    j["levels"] = std::move(levels);
    j["order"] = toJson(t.order);
    j["stabilized"] = t.stabilized ? literal(*t.stabilized) : Json(nullptr);
    return j;
}

SumsetTrajectory trajectoryFromJson(const Json& j) {
    expectKind(j, "trajectory");
    const auto n = j.at("n").get<std::uint64_t>();
    SumsetTrajectory t{setFrom(n, j.at("base")), {}, j.at("sizes").get<std::vector<std::uint64_t>>(),
                       orderFromJson(j.at("order")), std::nullopt};
    for (const Json& level : j.at("levels")) t.levels.push_back(setFrom(n, level));
    if (!j.at("stabilized").is_null()) t.stabilized = setFrom(n, j.at("stabilized"));
    return t;
}

Json toJson(const SpectrumReport& report) {
    Json j = header("spectrum");
    j["n"] = report.modulus;
    j["mode"] = toJson(report.mode);
    j["orbit_count"] = report.orbitCount;
    j["achieved_orders"] = report.achievedOrders;
    Json gaps = Json::array();
    for (const GapRun& g : report.gaps) gaps.push_back(Json{{"start", g.start}, {"end", g.end}});
    j["gaps"] = std::move(gaps);
    Json witnesses = Json::array();
    for (const auto& [rho, set] : report.witnesses) witnesses.push_back(Json{{"order", rho}, {"basis", literal(set)}});
    j["witnesses"] = std::move(witnesses);
    return j;
}

SpectrumReport spectrumFromJson(const Json& j) {
    expectKind(j, "spectrum");
    SpectrumReport report;
    report.modulus = j.at("n").get<std::uint64_t>();
    report.mode = modeFromJson(j.at("mode"));
    report.orbitCount = j.at("orbit_count").get<std::uint64_t>();
    report.achievedOrders = j.at("achieved_orders").get<std::vector<std::uint64_t>>();
    for (const Json& g : j.at("gaps")) report.gaps.push_back({g.at("start").get<std::uint64_t>(), g.at("end").get<std::uint64_t>()});
    for (const Json& w : j.at("witnesses")) {
        report.witnesses.emplace_back(w.at("order").get<std::uint64_t>(), setFrom(report.modulus, w.at("basis")));
    }
    return report;
}

Json toJson(const ConjectureReport& report) {
    Json j = header("conjecture");
    j["n"] = report.modulus;
    j["k"] = report.k;
    j["mode"] = toJson(report.mode);
    Json exceeders = Json::array();
    for (const BasisRecord& r : report.exceeders) exceeders.push_back(basisJson(r));
    j["exceeders"] = std::move(exceeders);
    j["max_min_gap"] = frac(report.maxMinGap);
    j["argmax_witness"] = report.argmaxWitness ? basisJson(*report.argmaxWitness) : Json(nullptr);
    j["completeness_caveat"] = report.completenessCaveat;
    return j;
}

ConjectureReport conjectureFromJson(const Json& j) {
    expectKind(j, "conjecture");
    ConjectureReport report;
    report.modulus = j.at("n").get<std::uint64_t>();
    report.k = j.at("k").get<std::uint64_t>();
    report.mode = modeFromJson(j.at("mode"));
    for (const Json& e : j.at("exceeders")) report.exceeders.push_back(basisFrom(report.modulus, e));
    report.maxMinGap = fracFrom(j.at("max_min_gap"));
    if (!j.at("argmax_witness").is_null()) report.argmaxWitness = basisFrom(report.modulus, j.at("argmax_witness"));
    report.completenessCaveat = j.at("completeness_caveat").get<bool>();
    return report;
}

Json toJson(const ConjectureSweep& sweep) {
    Json j = header("conjecture_sweep");
    j["k"] = sweep.k;
    Json reports = Json::array();
    for (const ConjectureReport& r : sweep.reports) reports.push_back(toJson(r));
    j["reports"] = std::move(reports);
    Json running = Json::array();
    for (const Rational& r : sweep.runningMax) running.push_back(frac(r));
    j["running_max"] = std::move(running);
    return j;
}

ConjectureSweep sweepFromJson(const Json& j) {
    expectKind(j, "conjecture_sweep");
    ConjectureSweep sweep;
    sweep.k = j.at("k").get<std::uint64_t>();
    for (const Json& r : j.at("reports")) sweep.reports.push_back(conjectureFromJson(r));
    for (const Json& r : j.at("running_max")) sweep.runningMax.push_back(fracFrom(r));
    return sweep;
}

Json toJson(const KlBoundBreakdown& breakdown) {
    Json j = header("kl_bound");
    j["n"] = breakdown.modulus;
    j["rho"] = breakdown.rho;
    Json terms = Json::array();
    for (const KlTerm& t : breakdown.terms) terms.push_back(Json{{"d", t.divisor}, {"value", t.value}});
    j["terms"] = std::move(terms);
    j["bound"] = breakdown.bound;
    return j;
}

KlBoundBreakdown klBoundFromJson(const Json& j) {
    expectKind(j, "kl_bound");
    KlBoundBreakdown b{j.at("n").get<std::uint64_t>(), j.at("rho").get<std::uint64_t>(), {}, j.at("bound").get<std::uint64_t>()};
    for (const Json& t : j.at("terms")) b.terms.push_back({t.at("d").get<std::uint64_t>(), t.at("value").get<std::uint64_t>()});
    return b;
}

Json toJson(const GrowthCheck& check) {
    Json j = header("fl_check");
    j["set_size"] = check.setSize;
    j["span"] = check.span;
    j["hypothesis_failed"] = check.hypothesisFailed;
    Json records = Json::array();
    for (const GrowthRecord& r : check.records) {
        records.push_back(Json{{"h", r.h}, {"size", r.size}, {"lower_bound", r.lowerBound}, {"holds", r.holds}});
    }
    j["records"] = std::move(records);
    j["violated"] = check.violated();
    return j;
}

GrowthCheck growthCheckFromJson(const Json& j) {
    expectKind(j, "fl_check");
    GrowthCheck check{j.at("set_size").get<std::uint64_t>(), j.at("span").get<std::uint64_t>(),
                      j.at("hypothesis_failed").get<bool>(), {}};
    for (const Json& r : j.at("records")) {
        check.records.push_back({r.at("h").get<std::uint64_t>(), r.at("size").get<std::uint64_t>(),
                                 r.at("lower_bound").get<std::uint64_t>(), r.at("holds").get<bool>()});
    }
    return check;
}

Json toJson(const StructureReport& report) {
    return Json{{"m", report.subgroupSize},
                {"q", report.quotientSize},
                {"s", report.cosetsMet},
                {"max_coset_fraction", frac(report.maxCosetFraction)},
                {"ap_cover",
                 Json{{"start", report.cover.start}, {"difference", report.cover.difference}, {"length", report.cover.length}}},
                {"case", toString(report.caseTag)},
                {"inequality_holds", report.inequalityHolds},
                {"case_condition_holds", report.caseConditionHolds},
                {"two_thirds_holds", report.twoThirdsHolds}};
}

StructureReport structureReportFromJson(const Json& j) {
    StructureReport r;
    r.subgroupSize = j.at("m").get<std::uint64_t>();
    r.quotientSize = j.at("q").get<std::uint64_t>();
    r.cosetsMet = j.at("s").get<std::uint64_t>();
    r.maxCosetFraction = fracFrom(j.at("max_coset_fraction"));
    const Json& cover = j.at("ap_cover");
    r.cover = {cover.at("start").get<std::uint64_t>(), cover.at("difference").get<std::uint64_t>(),
               cover.at("length").get<std::uint64_t>()};
    r.caseTag = caseFrom(j.at("case").get<std::string>());
    r.inequalityHolds = j.at("inequality_holds").get<bool>();
    r.caseConditionHolds = j.at("case_condition_holds").get<bool>();
    r.twoThirdsHolds = j.at("two_thirds_holds").get<bool>();
    return r;
}

Json toJson(const StructureAnalysis& analysis) {
    Json j = header("df_analyze");
    j["n"] = analysis.modulus;
    j["set_size"] = analysis.setSize;
    j["doubled_size"] = analysis.doubledSize;
    j["doubling_ratio"] = frac(analysis.doublingRatio);
    j["small_doubling"] = analysis.smallDoubling;
    j["sparse"] = analysis.sparse;
    Json reports = Json::array();
    for (const StructureReport& r : analysis.reports) reports.push_back(toJson(r));
    j["reports"] = std::move(reports);
    j["best"] = optional(analysis.best);
    return j;
}

StructureAnalysis structureAnalysisFromJson(const Json& j) {
    expectKind(j, "df_analyze");
    StructureAnalysis a;
    a.modulus = j.at("n").get<std::uint64_t>();
    a.setSize = j.at("set_size").get<std::uint64_t>();
    a.doubledSize = j.at("doubled_size").get<std::uint64_t>();
    a.doublingRatio = fracFrom(j.at("doubling_ratio"));
    a.smallDoubling = j.at("small_doubling").get<bool>();
    a.sparse = j.at("sparse").get<bool>();
    for (const Json& r : j.at("reports")) a.reports.push_back(structureReportFromJson(r));
    a.best = optionalFrom<std::size_t>(j.at("best"));
    return a;
}

Json toJson(const PipelineTrace& t) {
    Json j = header("pipeline");
    j["n"] = t.input.modulus();
    j["input"] = literal(t.input);
    j["k"] = t.k;
    j["sigma"] = frac(t.sigma);
    j["order"] = toJson(t.order);
    j["doubling_sizes"] = t.doublingSizes;
    j["j"] = optional(t.j);
    j["h"] = t.h;
    j["doubled"] = t.doubled ? literal(*t.doubled) : Json(nullptr);
    j["structure"] = t.structure ? toJson(*t.structure) : Json(nullptr);
    j["m"] = t.m;
    j["q"] = t.q;
    j["s"] = t.s;
    j["s_prime"] = t.sPrime;
    j["l"] = t.l;
    j["projected_order_a"] = toJson(t.projectedOrderA);
    j["projected_order_b"] = toJson(t.projectedOrderB);
    j["branch"] = toString(t.branch);
    j["slacks"] = Json{{"subgroup_bound", frac(t.subgroupBoundSlack)},
                       {"projection_lower", frac(t.projectionLowerSlack)},
                       {"projection_upper", frac(t.projectionUpperSlack)},
                       {"scaled_order_gap", frac(t.scaledOrderGap)},
                       {"multiple_gap", frac(t.multipleGap)},
                       {"multiple_argmin", t.multipleArgmin},
                       {"ap_length_gap", frac(t.apLengthGap)},
                       {"growth_hypothesis_holds", optional(t.growthHypothesisHolds)}};
    return j;
}

PipelineTrace pipelineTraceFromJson(const Json& j) {
    expectKind(j, "pipeline");
    const auto n = j.at("n").get<std::uint64_t>();
    PipelineTrace t;
    t.input = setFrom(n, j.at("input"));
    t.k = j.at("k").get<std::uint64_t>();
    t.sigma = fracFrom(j.at("sigma"));
    t.order = orderFromJson(j.at("order"));
    t.doublingSizes = j.at("doubling_sizes").get<std::vector<std::uint64_t>>();
    t.j = optionalFrom<std::uint64_t>(j.at("j"));
    t.h = j.at("h").get<std::uint64_t>();
    if (!j.at("doubled").is_null()) t.doubled = setFrom(n, j.at("doubled"));
    if (!j.at("structure").is_null()) t.structure = structureReportFromJson(j.at("structure"));
    t.m = j.at("m").get<std::uint64_t>();
    t.q = j.at("q").get<std::uint64_t>();
    t.s = j.at("s").get<std::uint64_t>();
    t.sPrime = j.at("s_prime").get<std::uint64_t>();
    t.l = j.at("l").get<std::uint64_t>();
    t.projectedOrderA = orderFromJson(j.at("projected_order_a"));
    t.projectedOrderB = orderFromJson(j.at("projected_order_b"));
    t.branch = branchFrom(j.at("branch").get<std::string>());
    const Json& s = j.at("slacks");
    t.subgroupBoundSlack = optFracFrom(s.at("subgroup_bound"));
    t.projectionLowerSlack = optFracFrom(s.at("projection_lower"));
    t.projectionUpperSlack = optFracFrom(s.at("projection_upper"));
    t.scaledOrderGap = optFracFrom(s.at("scaled_order_gap"));
    t.multipleGap = optFracFrom(s.at("multiple_gap"));
    t.multipleArgmin = s.at("multiple_argmin").get<std::uint64_t>();
    t.apLengthGap = optFracFrom(s.at("ap_length_gap"));
    t.growthHypothesisHolds = optionalFrom<bool>(s.at("growth_hypothesis_holds"));
    return t;
}

Json toJson(const std::vector<FamilyRecord>& records, const FamilySummary& summary) {
    Json j = header("family");
    j["k"] = summary.k;
    j["claimed_form"] = frac(familyClaimedForm(summary.k));
    j["derived_form"] = frac(familyDerivedForm(summary.k));
    Json rows = Json::array();
    for (const FamilyRecord& r : records) {
        rows.push_back(Json{{"k", r.k},
                            {"n", r.n},
                            {"rho", r.rho},
                            {"nearest_l", r.nearestL},
                            {"min_gap", frac(r.minGap)},
                            {"matches_claimed_form", r.matchesClaimedForm},
                            {"matches_derived_form", r.matchesDerivedForm}});
    }
    j["records"] = std::move(rows);
    j["summary"] = Json{{"tail_gap", frac(summary.tailGap)},
                        {"tail_start", summary.tailStart},
                        {"tail_length", summary.tailLength},
                        {"matches_claimed_form", summary.matchesClaimedForm},
                        {"matches_derived_form", summary.matchesDerivedForm}};
    return j;
}

std::vector<FamilyRecord> familyRecordsFromJson(const Json& j) {
    expectKind(j, "family");
    std::vector<FamilyRecord> out;
    for (const Json& r : j.at("records")) {
        out.push_back({r.at("k").get<std::uint64_t>(), r.at("n").get<std::uint64_t>(), r.at("rho").get<std::uint64_t>(),
                       r.at("nearest_l").get<std::uint64_t>(), fracFrom(r.at("min_gap")),
                       r.at("matches_claimed_form").get<bool>(), r.at("matches_derived_form").get<bool>()});
    }
    return out;
}

FamilySummary familySummaryFromJson(const Json& j) {
    expectKind(j, "family");
    const Json& s = j.at("summary");
    FamilySummary summary{j.at("k").get<std::uint64_t>(), optFracFrom(s.at("tail_gap"))};
    summary.tailStart = s.at("tail_start").get<std::uint64_t>();
    summary.tailLength = s.at("tail_length").get<std::uint64_t>();
    summary.matchesClaimedForm = s.at("matches_claimed_form").get<bool>();
    summary.matchesDerivedForm = s.at("matches_derived_form").get<bool>();
    return summary;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string spectrumCsv(const SpectrumReport& report) {
    std::ostringstream out;
    out << "n,order,witness\n";
    for (const auto& [rho, set] : report.witnesses) out << report.modulus << ',' << rho << ',' << formatMembers(set, ';') << '\n';
    out << "n,gap_start,gap_end\n";
    for (const GapRun& g : report.gaps) out << report.modulus << ',' << g.start << ',' << g.end << '\n';
    return out.str();
}

std::string sweepCsv(const ConjectureSweep& sweep) {
    std::ostringstream out;
    out << "n,k,max_min_gap,running_max,exceeders,witness,witness_order,caveat\n";
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        const ConjectureReport& r = sweep.reports[i];
        out << r.modulus << ',' << r.k << ',' << toFractionString(r.maxMinGap) << ','
            << toFractionString(sweep.runningMax[i]) << ',' << r.exceeders.size() << ',';
        if (r.argmaxWitness) {
            out << formatMembers(r.argmaxWitness->set, ';') << ',' << r.argmaxWitness->order;
        } else {
            out << ',';
        }
        out << ',' << (r.completenessCaveat ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string familyCsv(const std::vector<FamilyRecord>& records) {
    std::ostringstream out;
    out << "k,n,rho,nearest_l,min_gap\n";
    for (const FamilyRecord& r : records) {
        out << r.k << ',' << r.n << ',' << r.rho << ',' << r.nearestL << ',' << toFractionString(r.minGap) << '\n';
    }
    return out.str();
}

}  // namespace cycorder
