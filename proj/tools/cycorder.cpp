// Command-line front end. Every subcommand prints a table (default), JSON or
// CSV on stdout and exits 0, 1 (a checked bound was violated) or 2 (usage).

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycorder/affine.hpp"
#include "cycorder/bounds.hpp"
#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/report_io.hpp"
#include "cycorder/spectrum.hpp"
#include "cycorder/structure.hpp"
#include "cycorder/sumset.hpp"

namespace {

using namespace cycorder;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

enum class Format { Table, Json, Csv };

struct RunConfig {
    Format format = Format::Table;
    int shards = 1;
    std::uint64_t exhaustiveLimit = kDefaultExhaustiveLimit;
    bool exhaustive = false;
    std::optional<std::uint64_t> maxCard;
    std::optional<std::uint64_t> n;
    std::string nRange;
    std::string set;
    std::uint64_t k = 0;
    std::uint64_t rho = 0;
    std::uint64_t hMax = 0;
    std::string sigma;
    std::string density;
    bool coprimeDiff = false;
    std::optional<std::uint64_t> jMax;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t t = 0;
};

struct Range {
    std::uint64_t first;
    std::uint64_t last;
};

Range parseRange(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("range \"" + text + "\" is not of the form A..B");
    auto number = [&](std::string_view part) {
        std::uint64_t v = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || end != part.data() + part.size()) {
            throw UsageError("range \"" + text + "\" has a bad endpoint");
        }
        return v;
    };
    const std::string_view view(text);
    Range r{number(view.substr(0, dots)), number(view.substr(dots + 2))};
    if (r.first > r.last) throw UsageError("range \"" + text + "\" is empty");
    return r;
}

EnumerationMode modeOf(const RunConfig& cfg) {
    if (cfg.maxCard) return EnumerationMode::cardCapped(*cfg.maxCard);
    return EnumerationMode::exhaustive();
}

EnumerationOptions optionsOf(const RunConfig& cfg) {
    EnumerationOptions options;
    options.shards = cfg.shards;
    options.exhaustiveLimit = cfg.exhaustiveLimit;
    return options;
}

StructureOptions structureOptionsOf(const RunConfig& cfg) {
    StructureOptions options;
    if (!cfg.sigma.empty()) options.sigma = parseFraction(cfg.sigma);
    if (!cfg.density.empty()) options.density = parseFraction(cfg.density);
    if (options.sigma <= 0) throw UsageError("--sigma must be positive");
    if (options.density <= 0) throw UsageError("--density must be positive");
    options.coprimeDifferences = cfg.coprimeDiff;
    return options;
}

std::string braces(const ZnSet& set) { return "{" + formatMembers(set) + "}"; }

std::string modeText(const EnumerationMode& mode) {
    if (mode.kind == EnumerationMode::Kind::Exhaustive) return "exhaustive";
    return "max-card " + std::to_string(mode.maxCard);
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string orDash(const std::optional<T>& value) {
    if (!value) return "-";
    if constexpr (std::is_same_v<T, Rational>) {
        return toFractionString(*value);
    } else if constexpr (std::is_same_v<T, bool>) {
        return yesNo(*value);
    } else {
        return std::to_string(*value);
    }
}

// ---------------------------------------------------------------------------

int runOrder(const RunConfig& cfg, std::ostream& out) {
    const ZnSet set = parseZnSet(*cfg.n, cfg.set);
    const OrderValue rho = order(set);
    switch (cfg.format) {
    case Format::Table:
        out << rho.toString() << '\n';
        break;
    case Format::Json: {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = "order";
        j["n"] = *cfg.n;
        j["set"] = formatMembers(set);
        j["order"] = toJson(rho);
        out << dump(j);
        break;
    }
    case Format::Csv:
        out << "n,set,order\n" << *cfg.n << ',' << formatMembers(set, ';') << ',' << rho.toString() << '\n';
        break;
    }
    return kExitOk;
}

int runTrajectory(const RunConfig& cfg, std::ostream& out) {
    const SumsetTrajectory t = trajectory(parseZnSet(*cfg.n, cfg.set));
    switch (cfg.format) {
    case Format::Table:
        out << "base " << braces(t.base) << " in Z_" << *cfg.n << '\n';
        for (std::size_t h = 0; h < t.sizes.size(); ++h) out << "  |" << h + 1 << "A| = " << t.sizes[h] << '\n';
        out << "order " << t.order.toString() << '\n';
        if (t.stabilized) out << "stabilized at " << braces(*t.stabilized) << '\n';
        break;
    case Format::Json:
        out << dump(toJson(t));
        break;
    case Format::Csv:
        out << "h,size\n";
        for (std::size_t h = 0; h < t.sizes.size(); ++h) out << h + 1 << ',' << t.sizes[h] << '\n';
        break;
    }
    return kExitOk;
}

int runCanonical(const RunConfig& cfg, std::ostream& out) {
    const ZnSet set = parseZnSet(*cfg.n, cfg.set);
    if (set.empty()) throw UsageError("--set must be nonempty");
    const ZnSet canon = canonicalForm(set);
    const std::size_t orbitSize = orbit(set).size();
    switch (cfg.format) {
    case Format::Table:
        out << "canonical " << braces(canon) << "\norbit size " << orbitSize << '\n';
        break;
    case Format::Json: {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = "canonical";
        j["n"] = *cfg.n;
        j["set"] = formatMembers(set);
        j["canonical"] = formatMembers(canon);
        j["orbit_size"] = orbitSize;
        out << dump(j);
        break;
    }
    case Format::Csv:
        out << "n,set,canonical,orbit_size\n"
            << *cfg.n << ',' << formatMembers(set, ';') << ',' << formatMembers(canon, ';') << ',' << orbitSize << '\n';
        break;
    }
    return kExitOk;
}

int runSpectrum(const RunConfig& cfg, std::ostream& out) {
    const SpectrumReport r = spectrum(*cfg.n, modeOf(cfg), optionsOf(cfg));
    switch (cfg.format) {
    case Format::Table:
        out << "Z_" << r.modulus << ", " << modeText(r.mode) << ", " << r.orbitCount << " basis orbits\n";
        out << "orders:";
        for (auto rho : r.achievedOrders) out << ' ' << rho;
        out << "\ngaps:";
        if (r.gaps.empty()) out << " none";
        for (const GapRun& g : r.gaps) out << ' ' << g.start << ".." << g.end;
        out << '\n';
        for (const auto& [rho, set] : r.witnesses) out << "  " << rho << "  " << braces(set) << '\n';
        break;
    case Format::Json:
        out << dump(toJson(r));
        break;
    case Format::Csv:
        out << spectrumCsv(r);
        break;
    }
    return kExitOk;
}

void printConjectureTable(const ConjectureReport& r, std::ostream& out) {
    out << "Z_" << r.modulus << ", k = " << r.k << ", " << modeText(r.mode) << ": " << r.exceeders.size()
        << " orbits with order > n/k, max min-gap " << toFractionString(r.maxMinGap);
    if (r.argmaxWitness) out << " at " << braces(r.argmaxWitness->set) << " (order " << r.argmaxWitness->order << ")";
    if (r.completenessCaveat) out << " [capped]";
    out << '\n';
}

int runConjecture(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 1) throw UsageError("--k must be at least 1");
    if (!cfg.n && cfg.nRange.empty()) throw UsageError("conjecture needs --n or --n-range");
    ConjectureSweep sweep;
    sweep.k = cfg.k;
    if (cfg.n) {
        sweep.reports.push_back(verifyConjecture(*cfg.n, cfg.k, modeOf(cfg), optionsOf(cfg)));
        sweep.runningMax.push_back(sweep.reports.back().maxMinGap);
    } else {
        const Range range = parseRange(cfg.nRange);
        sweep = conjectureSweep(cfg.k, range.first, range.last, modeOf(cfg), optionsOf(cfg));
    }
    switch (cfg.format) {
    case Format::Table:
        for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
            printConjectureTable(sweep.reports[i], out);
        }
        if (cfg.n == std::nullopt && !sweep.runningMax.empty()) {
            out << "running max " << toFractionString(sweep.runningMax.back()) << '\n';
        }
        if (std::any_of(sweep.reports.begin(), sweep.reports.end(), [](const auto& r) { return r.completenessCaveat; })) {
            out << "note: a cardinality cap was applied; orbits above the cap were not searched\n";
        }
        break;
    case Format::Json:
        out << dump(cfg.n ? toJson(sweep.reports.front()) : toJson(sweep));
        break;
    case Format::Csv:
        out << sweepCsv(sweep);
        break;
    }
    return kExitOk;
}

int runKlBound(const RunConfig& cfg, std::ostream& out) {
    const KlBoundBreakdown b = klBound(*cfg.n, cfg.rho);
    std::optional<ZnSet> set;
    OrderValue rho = OrderValue::infinite();
    bool violated = false;
    if (!cfg.set.empty()) {
        set = parseZnSet(*cfg.n, cfg.set);
        rho = order(*set);
        violated = rho.isFinite() && rho.value() >= cfg.rho && set->size() > b.bound;
    }
    switch (cfg.format) {
    case Format::Table:
        out << "n = " << b.modulus << ", rho = " << b.rho << '\n';
        for (const KlTerm& t : b.terms) out << "  d = " << t.divisor << ": " << t.value << '\n';
        out << "bound " << b.bound << '\n';
        if (set) {
            out << braces(*set) << ": |A| = " << set->size() << ", order " << rho.toString() << ", "
                << (violated ? "VIOLATED" : "ok") << '\n';
        }
        break;
    case Format::Json: {
        Json j = toJson(b);
        if (set) {
            j["check"] = Json{{"set", formatMembers(*set)}, {"size", set->size()}, {"order", toJson(rho)}, {"violated", violated}};
        }
        out << dump(j);
        break;
    }
    case Format::Csv:
        out << "n,rho,d,value\n";
        for (const KlTerm& t : b.terms) out << b.modulus << ',' << b.rho << ',' << t.divisor << ',' << t.value << '\n';
        break;
    }
    return violated ? kExitViolated : kExitOk;
}

int runFlCheck(const RunConfig& cfg, std::ostream& out) {
    if (cfg.hMax < 1) throw UsageError("--h-max must be at least 1");
    const GrowthCheck c = flGrowthCheck(parseIntSet(cfg.set), cfg.hMax);
    switch (cfg.format) {
    case Format::Table:
        out << "|A| = " << c.setSize << ", l = " << c.span;
        if (c.hypothesisFailed) out << " (2|A| - 3 < l: no claim)";
        out << '\n';
        for (const GrowthRecord& r : c.records) {
            out << "  h = " << r.h << ": |hA| = " << r.size << " >= " << r.lowerBound << (r.holds ? "" : "  FAILS") << '\n';
        }
        break;
    case Format::Json:
        out << dump(toJson(c));
        break;
    case Format::Csv:
        out << "h,size,lower_bound,holds\n";
        for (const GrowthRecord& r : c.records) out << r.h << ',' << r.size << ',' << r.lowerBound << ',' << (r.holds ? 1 : 0) << '\n';
        break;
    }
    return c.violated() ? kExitViolated : kExitOk;
}

int runDfAnalyze(const RunConfig& cfg, std::ostream& out) {
    const StructureAnalysis a = dfAnalyze(parseZnSet(*cfg.n, cfg.set), structureOptionsOf(cfg));
    switch (cfg.format) {
    case Format::Table:
        out << "|A| = " << a.setSize << ", |2A| = " << a.doubledSize << ", ratio " << toFractionString(a.doublingRatio)
            << ", small doubling " << yesNo(a.smallDoubling) << ", sparse " << yesNo(a.sparse) << '\n';
        out << "     m    q    s  l  case     ineq  cond  2/3\n";
        for (std::size_t i = 0; i < a.reports.size(); ++i) {
            const StructureReport& r = a.reports[i];
            out << (a.best == i ? "* " : "  ");
            out.width(4);
            out << r.subgroupSize << ' ';
            out.width(4);
            out << r.quotientSize << ' ';
            out.width(4);
            out << r.cosetsMet << ' ' << r.cover.length << "  ";
            std::string tag = toString(r.caseTag);
            tag.resize(8, ' ');
            out << tag << ' ' << (r.inequalityHolds ? "yes " : "no  ") << "  " << (r.caseConditionHolds ? "yes " : "no  ")
                << "  " << yesNo(r.twoThirdsHolds) << '\n';
        }
        if (!a.best) out << "no subgroup satisfies its case condition\n";
        break;
    case Format::Json:
        out << dump(toJson(a));
        break;
    case Format::Csv:
        out << "m,q,s,l,case,inequality,case_condition,two_thirds,best\n";
        for (std::size_t i = 0; i < a.reports.size(); ++i) {
            const StructureReport& r = a.reports[i];
            out << r.subgroupSize << ',' << r.quotientSize << ',' << r.cosetsMet << ',' << r.cover.length << ','
                << toString(r.caseTag) << ',' << r.inequalityHolds << ',' << r.caseConditionHolds << ','
                << r.twoThirdsHolds << ',' << (a.best == i) << '\n';
        }
        break;
    }
    return kExitOk;
}

int runPipeline(const RunConfig& cfg, std::ostream& out) {
    const PipelineTrace t = pipelineTrace(parseZnSet(*cfg.n, cfg.set), cfg.k, structureOptionsOf(cfg), cfg.jMax);
    switch (cfg.format) {
    case Format::Table:
        out << "A = " << braces(t.input) << ", order " << t.order.toString() << ", k = " << t.k << '\n';
        out << "doubling sizes:";
        for (auto s : t.doublingSizes) out << ' ' << s;
        out << "\nj = " << orDash(t.j) << ", h = " << t.h << '\n';
        if (t.structure) {
            out << "m = " << t.m << ", q = " << t.q << ", s = " << t.s << ", s' = " << t.sPrime << ", l = " << t.l << '\n';
            out << "projected orders: A " << t.projectedOrderA.toString() << ", B " << t.projectedOrderB.toString() << '\n';
        }
        out << "branch " << toString(t.branch) << '\n';
        out << "slacks: subgroup " << orDash(t.subgroupBoundSlack) << ", projection lower " << orDash(t.projectionLowerSlack)
            << ", projection upper " << orDash(t.projectionUpperSlack) << ", scaled order " << orDash(t.scaledOrderGap)
            << ", multiple " << orDash(t.multipleGap) << " (q' = " << t.multipleArgmin << "), ap length "
            << orDash(t.apLengthGap) << ", growth hypothesis " << orDash(t.growthHypothesisHolds) << '\n';
        break;
    case Format::Json:
        out << dump(toJson(t));
        break;
    case Format::Csv:
        out << "n,set,order,j,h,m,q,s,s_prime,l,branch\n"
            << t.input.modulus() << ',' << formatMembers(t.input, ';') << ',' << t.order.toString() << ',' << orDash(t.j)
            << ',' << t.h << ',' << t.m << ',' << t.q << ',' << t.s << ',' << t.sPrime << ',' << t.l << ','
            << toString(t.branch) << '\n';
        break;
    }
    return kExitOk;
}

int runFamily(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k < 2) throw UsageError("--k must be at least 2");
    const Range range = parseRange(cfg.nRange);
    const auto records = lowerBoundFamily(cfg.k, range.first, range.last, cfg.shards);
    const FamilySummary s = summarizeFamily(cfg.k, records);
    switch (cfg.format) {
    case Format::Table:
        out << "{0,1," << cfg.k << "}, n = -1 mod " << cfg.k << ", " << records.size() << " moduli\n";
        for (const FamilyRecord& r : records) {
            out << "  n = " << r.n << ": order " << r.rho << ", nearest l " << r.nearestL << ", min gap "
                << toFractionString(r.minGap) << '\n';
        }
        out << "tail gap " << orDash(s.tailGap) << " from n = " << s.tailStart << " (" << s.tailLength << " moduli)\n";
        out << "(k-2)+1/k = " << toFractionString(familyClaimedForm(cfg.k)) << ": " << yesNo(s.matchesClaimedForm) << '\n';
        out << "(k-3)+1/k = " << toFractionString(familyDerivedForm(cfg.k)) << ": " << yesNo(s.matchesDerivedForm) << '\n';
        break;
    case Format::Json:
        out << dump(toJson(records, s));
        break;
    case Format::Csv:
        out << familyCsv(records);
        break;
    }
    return kExitOk;
}

int runCaseTwo(const RunConfig& cfg, std::ostream& out) {
    const CaseTwoBounds b = caseTwoBounds(*cfg.n, cfg.a, cfg.b);
    switch (cfg.format) {
    case Format::Table:
        out << b.lower << " <= order({0," << cfg.a << ',' << cfg.b << "}) = " << b.actual.toString() << " <= " << b.upper
            << (b.sandwichHolds ? "" : "  FAILS") << '\n';
        break;
    case Format::Json: {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = "case_two";
        j["n"] = *cfg.n;
        j["a"] = cfg.a;
        j["b"] = cfg.b;
        j["lower"] = b.lower;
        j["upper"] = b.upper;
        j["order"] = toJson(b.actual);
        j["holds"] = b.sandwichHolds;
        out << dump(j);
        break;
    }
    case Format::Csv:
        out << "n,a,b,lower,order,upper,holds\n"
            << *cfg.n << ',' << cfg.a << ',' << cfg.b << ',' << b.lower << ',' << b.actual.toString() << ',' << b.upper
            << ',' << b.sandwichHolds << '\n';
        break;
    }
    return b.sandwichHolds ? kExitOk : kExitViolated;
}

int runPigeonhole(const RunConfig& cfg, std::ostream& out) {
    const PigeonholeWitness w = pigeonholeWitness(*cfg.n, cfg.k, cfg.t);
    const OrderUpperViaS u = orderUpperViaS(w);
    const RepDecomposition rep = repDecompose(*cfg.n, cfg.k, cfg.t, w.c);
    switch (cfg.format) {
    case Format::Table:
        out << "c = " << w.c << ", r = " << w.r.value << ", s = " << w.s << '\n';
        out << "order({0,1," << cfg.t << "}) = " << u.actual.toString() << " <= " << orDash(u.bound)
            << (u.holds ? "" : "  FAILS") << '\n';
        out << "ct = dn + e with c = " << rep.c << ", d = " << rep.d << ", e = " << rep.e << "; applicable "
            << yesNo(rep.applicable) << ", 0 <= d < c " << yesNo(rep.dInRange) << ", gcd(d, c) = 1 " << yesNo(rep.coprime)
            << '\n';
        break;
    case Format::Json: {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["kind"] = "pigeonhole";
        j["n"] = w.modulus;
        j["k"] = w.k;
        j["t"] = w.t;
        j["c"] = w.c;
        j["r"] = w.r.value;
        j["s"] = w.s;
        j["order"] = toJson(u.actual);
        j["bound"] = u.bound ? Json(toFractionString(*u.bound)) : Json(nullptr);
        j["holds"] = u.holds;
        j["decomposition"] = Json{{"c", rep.c},
                                  {"d", rep.d},
                                  {"e", rep.e},
                                  {"applicable", rep.applicable},
                                  {"d_in_range", rep.dInRange},
                                  {"coprime", rep.coprime}};
        out << dump(j);
        break;
    }
    case Format::Csv:
        out << "n,k,t,c,r,s,order,bound,holds\n"
            << w.modulus << ',' << w.k << ',' << w.t << ',' << w.c << ',' << w.r.value << ',' << w.s << ','
            << u.actual.toString() << ',' << orDash(u.bound) << ',' << u.holds << '\n';
        break;
    }
    return u.holds ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orders of additive bases of Z_n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "schema_version " + std::to_string(kSchemaVersion));

    RunConfig cfg;
    const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", cfg.format, "table | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("table");
    app.add_option("--shards", cfg.shards, "Parallel shards for enumeration and family runs")
        ->check(CLI::Range(1, 1024));

    std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> commands;
    auto add = [&](const char* name, const char* help, int (*run)(const RunConfig&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        commands.emplace_back(sub, run);
        return sub;
    };
    auto needN = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Modulus")->required()->check(CLI::Range(std::uint64_t{1}, kMaxModulus)); };
    auto needSet = [&](CLI::App* sub) { sub->add_option("--set", cfg.set, "Comma-separated members")->required(); };
    auto modeFlags = [&](CLI::App* sub) {
        auto* ex = sub->add_flag("--exhaustive", cfg.exhaustive, "Search every cardinality (default)");
        sub->add_option("--max-card", cfg.maxCard, "Only search sets of at most C elements")->excludes(ex);
        sub->add_option("--exhaustive-limit", cfg.exhaustiveLimit, "Largest n accepted for exhaustive search");
    };
    auto structureFlags = [&](CLI::App* sub) {
        sub->add_option("--sigma", cfg.sigma, "Doubling threshold, p/q or integer (default 51/25)");
        sub->add_option("--density", cfg.density, "Density threshold, p/q (default 1/1000000000)");
        sub->add_flag("--coprime-diff", cfg.coprimeDiff, "Restrict AP differences to units of the quotient");
    };

    auto* orderCmd = add("order", "Order of a set", runOrder);
    needN(orderCmd);
    needSet(orderCmd);

    auto* trajCmd = add("trajectory", "Sizes of hA level by level", runTrajectory);
    needN(trajCmd);
    needSet(trajCmd);

    auto* canonCmd = add("canonical", "Canonical affine representative and orbit size", runCanonical);
    needN(canonCmd);
    needSet(canonCmd);

    auto* specCmd = add("spectrum", "Achieved orders and gaps", runSpectrum);
    needN(specCmd);
    modeFlags(specCmd);

    auto* conjCmd = add("conjecture", "Distance of large orders from n/l", runConjecture);
    conjCmd->add_option("--k", cfg.k, "Threshold n/k")->required();
    auto* conjN = conjCmd->add_option("--n", cfg.n, "Single modulus")->check(CLI::Range(std::uint64_t{1}, kMaxModulus));
    auto* conjRange = conjCmd->add_option("--n-range", cfg.nRange, "Moduli A..B");
    conjN->excludes(conjRange);
    modeFlags(conjCmd);

    auto* klCmd = add("kl-bound", "Cardinality bound for bases of order >= rho", runKlBound);
    needN(klCmd);
    klCmd->add_option("--rho", cfg.rho, "Order threshold")->required();
    klCmd->add_option("--set", cfg.set, "Check this set against the bound");

    auto* flCmd = add("fl-check", "Growth of integer sumsets", runFlCheck);
    needSet(flCmd);
    flCmd->add_option("--h-max", cfg.hMax, "Largest h")->required();

    auto* dfCmd = add("df-analyze", "Subgroup and progression structure", runDfAnalyze);
    needN(dfCmd);
    needSet(dfCmd);
    structureFlags(dfCmd);

    auto* pipeCmd = add("pipeline", "Doubling, structure and projection trace", runPipeline);
    needN(pipeCmd);
    needSet(pipeCmd);
    pipeCmd->add_option("--k", cfg.k, "Threshold n/k")->required();
    pipeCmd->add_option("--j-max", cfg.jMax, "Largest doubling step searched");
    structureFlags(pipeCmd);

    auto* famCmd = add("family", "The {0,1,k} family with n = -1 mod k", runFamily);
    famCmd->add_option("--k", cfg.k, "k")->required();
    famCmd->add_option("--n-range", cfg.nRange, "Moduli A..B")->required();

    auto* caseCmd = add("case-two", "Order sandwich for {0,a,b} with a | n", runCaseTwo);
    needN(caseCmd);
    caseCmd->add_option("--a", cfg.a, "Divisor a")->required();
    caseCmd->add_option("--b", cfg.b, "Third element b")->required();

    auto* pigCmd = add("pigeonhole", "Multiplier c with small |ct mod n| and the order bound it gives", runPigeonhole);
    needN(pigCmd);
    pigCmd->add_option("--k", cfg.k, "k")->required();
    pigCmd->add_option("--t", cfg.t, "Third element t")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream out;
    try {
        for (const auto& [sub, run] : commands) {
            if (sub->parsed()) {
                const int code = run(cfg, out);
                std::cout << out.str();
                return code;
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
