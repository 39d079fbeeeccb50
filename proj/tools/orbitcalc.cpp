// orbitcalc: birational-geometry profiles of nilpotent orbit closures in the
// classical Lie algebras. See README.md for the command reference.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitcalc/orbitcalc.hpp"

using json = nlohmann::ordered_json;
using namespace orbitcalc;

namespace {

int maxMCap() {
    if (const char* env = std::getenv("ORBITCALC_MAX_M")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring unparsable ORBITCALC_MAX_M\n";
    }
    return 16;
}

void requireWithinCap(int m) {
    const int cap = maxMCap();
    if (m > cap)
        throw std::invalid_argument("natural dimension " + std::to_string(m) +
                                    " exceeds the enumeration cap " + std::to_string(cap) +
                                    " (raise ORBITCALC_MAX_M to override)");
}

json jsonAlgebra(const Algebra& a) {
    return {{"name", a.name()},
            {"family", std::string(1, letter(a.family()))},
            {"rank", a.rank()},
            {"m", a.naturalDim()},
            {"dim", a.dim()}};
}

json jsonPartition(const Partition& p) {
    return {{"text", p.str()}, {"parts", p.parts()}};
}

json jsonOrbit(const NilpotentOrbit& o) {
    json j = {{"algebra", o.algebra().name()},
              {"partition", o.jordanType().str()},
              {"parts", o.jordanType().parts()},
              {"label", nullptr},
              {"dim", orbitDimension(o)}};
    if (o.veryEvenLabel()) j["label"] = str(*o.veryEvenLabel());
    return j;
}

std::string orbitDisplay(const NilpotentOrbit& o) {
    std::string s = "[" + o.jordanType().str() + "]";
    if (o.veryEvenLabel()) s += std::string("/") + str(*o.veryEvenLabel());
    return s;
}

NilpotentOrbit orbitFromText(const Algebra& a, const std::string& text) {
    const Partition d = parsePartition(text, &std::cerr);
    return orbitsOf(a, d)[0];
}

struct Report {
    std::string commandEcho;
    json algebra;
    json inputs;
    json result;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit() const {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        json out = {{"command", commandEcho}, {"algebra", algebra},   {"inputs", inputs},
                    {"result", result},       {"engine", std::string(kEngineName) + " " +
                                                             kEngineVersion},
                    {"elapsed_ms", elapsed}};
        std::cout << out.dump(2) << "\n";
    }
};

std::string yesNo(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- orbits ----

void runOrbits(Report& rep, const Algebra& a, bool asJson) {
    requireWithinCap(a.naturalDim());
    const auto orbits = enumerateOrbits(a);
    if (asJson) {
        json list = json::array();
        for (const auto& o : orbits) {
            json j = jsonOrbit(o);
            j["full_members"] = hasFullMembers(o.jordanType());
            j["rigid"] = isRigid(o);
            j["qfactorial_terminal"] = isQFactorialTerminal(o);
            list.push_back(std::move(j));
        }
        rep.result = {{"count", orbits.size()}, {"orbits", std::move(list)}};
        rep.emit();
        return;
    }
    std::cout << "algebra " << a.name() << " (" << a.matrixName() << "), dim " << a.dim()
              << ", " << orbits.size() << " nilpotent orbits\n";
    std::cout << std::left << std::setw(18) << "partition" << std::right << std::setw(5)
              << "dim" << std::setw(7) << "full" << std::setw(7) << "rigid" << std::setw(9)
              << "qf-term" << "\n";
    for (const auto& o : orbits) {
        std::cout << std::left << std::setw(18) << orbitDisplay(o) << std::right
                  << std::setw(5) << orbitDimension(o) << std::setw(7)
                  << yesNo(hasFullMembers(o.jordanType())) << std::setw(7)
                  << yesNo(isRigid(o)) << std::setw(9) << yesNo(isQFactorialTerminal(o))
                  << "\n";
    }
}

// ----------------------------------------------------------------- poset ----

void runPoset(Report& rep, const Algebra& a, bool asJson, bool asDot) {
    requireWithinCap(a.naturalDim());
    const ClosurePoset poset = closurePoset(a);
    if (asDot) {
        std::cout << posetToDot(poset);
        return;
    }
    const bool classical = a.family() != Family::A;
    auto edgeInfo = [&](int u, int l) {
        const Partition& du = poset.nodes[static_cast<size_t>(u)].jordanType();
        const Partition& dl = poset.nodes[static_cast<size_t>(l)].jordanType();
        const int codim = degenerationCodim(du, dl, a);
        std::optional<IrreducibleClass> cls;
        if (classical) {
            const KPTrace t = kpReduce(du, dl, *a.epsilon());
            cls = classifyIrreducible(t.dIrr, t.fIrr, t.epsIrr);
        }
        return std::pair(codim, cls);
    };
    if (asJson) {
        json nodes = json::array();
        for (const auto& o : poset.nodes) nodes.push_back(jsonOrbit(o));
        json edges = json::array();
        for (auto [u, l] : poset.coverEdges) {
            const auto [codim, cls] = edgeInfo(u, l);
            json e = {{"upper", u}, {"lower", l}, {"codim", codim}, {"class", nullptr}};
            if (cls) e["class"] = {{"letter", std::string(1, cls->letter)}, {"n", cls->n}};
            edges.push_back(std::move(e));
        }
        rep.result = {{"nodes", std::move(nodes)}, {"covers", std::move(edges)}};
        rep.emit();
        return;
    }
    std::cout << "closure poset of " << a.name() << " (" << a.matrixName() << "): "
              << poset.nodes.size() << " orbits, " << poset.coverEdges.size()
              << " cover edges\n";
    for (auto [u, l] : poset.coverEdges) {
        const auto [codim, cls] = edgeInfo(u, l);
        std::cout << "  " << orbitDisplay(poset.nodes[static_cast<size_t>(u)]) << " > "
                  << orbitDisplay(poset.nodes[static_cast<size_t>(l)]);
        if (cls) std::cout << "   class " << cls->letter << " (n=" << cls->n << ")";
        std::cout << "   codim " << codim << "\n";
    }
}

// ---------------------------------------------------------------- dynkin ----

void runDynkin(Report& rep, const Algebra& a, const std::string& partText, bool asJson) {
    requireWithinCap(a.naturalDim());
    const NilpotentOrbit o = orbitFromText(a, partText);
    const WeightedDynkinDiagram wd = weightedDynkin(o);
    const FlagType flag = jmFlagType(o);
    std::optional<int> b2;
    if (a.family() != Family::A && hasFullMembers(o.jordanType())) b2 = jmPicardNumber(o);
    if (asJson) {
        rep.result = {{"partition", jsonPartition(o.jordanType())},
                      {"dim", orbitDimension(o)},
                      {"labels", wd.labels},
                      {"flag", flag.blocks},
                      {"b2", b2 ? json(*b2) : json(nullptr)}};
        rep.emit();
        return;
    }
    std::cout << "algebra " << a.name() << " (" << a.matrixName() << "), orbit "
              << orbitDisplay(o) << ", dim " << orbitDimension(o) << "\n";
    std::cout << "weighted Dynkin labels: (";
    for (size_t i = 0; i < wd.labels.size(); ++i)
        std::cout << (i ? "," : "") << wd.labels[i];
    std::cout << ")\n";
    std::cout << "JM flag type: " << flag.str() << "\n";
    if (b2) std::cout << "b2(G/P): " << *b2 << "\n";
}

// ---------------------------------------------------------- degeneration ----

json jsonTrace(const KPTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"kind", s.kind == ErasureStep::Kind::RowBlock ? "rows" : "columns"},
                         {"count", s.count},
                         {"erased", jsonPartition(s.erased)},
                         {"eps_before", sign(s.before)},
                         {"eps_after", sign(s.after)}});
    }
    return {{"steps", std::move(steps)},
            {"d_irr", jsonPartition(t.dIrr)},
            {"f_irr", jsonPartition(t.fIrr)},
            {"eps_irr", sign(t.epsIrr)}};
}

void runDegeneration(Report& rep, const Algebra& a, const std::string& dText,
                     const std::string& fText, bool asJson) {
    requireWithinCap(a.naturalDim());
    const bool classical = a.family() != Family::A;
    const Partition d = parsePartition(dText, &std::cerr);
    const Partition f = parsePartition(fText, &std::cerr);
    if (classical) {
        const Epsilon eps = *a.epsilon();
        if (!isAdmissible(d, eps) || !isAdmissible(f, eps))
            throw std::invalid_argument("degeneration: both partitions must be admissible in " +
                                        a.matrixName());
    }
    if (d.total() != a.naturalDim() || f.total() != a.naturalDim())
        throw std::invalid_argument("degeneration: partitions must fit " + a.matrixName());
    if (d == f || !dominates(d, f))
        throw std::invalid_argument("degeneration: [" + d.str() + "] must strictly dominate [" +
                                    f.str() + "]");
    const int codim = degenerationCodim(d, f, a);
    bool minimal;
    if (classical) {
        const auto below = coversBelow(d, *a.epsilon());
        minimal = std::find(below.begin(), below.end(), f) != below.end();
    } else {
        const auto all = enumeratePartitions(a.naturalDim());
        minimal = true;
        for (const Partition& between : all) {
            if (between != d && between != f && dominates(d, between) &&
                dominates(between, f))
                minimal = false;
        }
    }
    std::optional<KPTrace> trace;
    std::optional<IrreducibleClass> cls;
    if (minimal && classical) {
        trace = kpReduce(d, f, *a.epsilon());
        cls = classifyIrreducible(trace->dIrr, trace->fIrr, trace->epsIrr);
    }
    if (asJson) {
        rep.result = {{"d", jsonPartition(d)},
                      {"f", jsonPartition(f)},
                      {"minimal", minimal},
                      {"codim", codim},
                      {"class", nullptr},
                      {"trace", nullptr}};
        if (cls) rep.result["class"] = {{"letter", std::string(1, cls->letter)},
                                        {"n", cls->n},
                                        {"codim", cls->codim}};
        if (trace) rep.result["trace"] = jsonTrace(*trace);
        rep.emit();
        return;
    }
    std::cout << "degeneration [" << d.str() << "] >= [" << f.str() << "] in " << a.name()
              << " (" << a.matrixName() << ")\n";
    std::cout << "minimal: " << yesNo(minimal) << "   codim: " << codim << "\n";
    if (!classical) return;
    if (!minimal) {
        std::cout << "(Kraft-Procesi reduction applies to minimal degenerations only)\n";
        return;
    }
    std::cout << "KP trace:\n";
    for (const auto& s : trace->steps) {
        if (s.kind == ErasureStep::Kind::ColumnBlock) {
            std::cout << "  erase " << s.count << " column(s) of heights [" << s.erased.str()
                      << "], eps " << sign(s.before) << " -> " << sign(s.after) << "\n";
        } else {
            std::cout << "  erase " << s.count << " row(s) [" << s.erased.str() << "]\n";
        }
    }
    if (trace->steps.empty()) std::cout << "  (already irreducible)\n";
    std::cout << "irreducible pair: [" << trace->dIrr.str() << "] >= [" << trace->fIrr.str()
              << "]  (eps " << sign(trace->epsIrr) << ")\n";
    std::cout << "class: " << cls->letter << " (n=" << cls->n << "), codim " << cls->codim
              << "\n";
}

// ----------------------------------------------------------- terminalize ----

json jsonChain(const TerminalizationChain& c) {
    json peels = json::array();
    for (const auto& s : c.peels) peels.push_back({{"p", s.p}, {"r", s.r}});
    json inter = json::array();
    for (const auto& o : c.intermediates) inter.push_back(jsonOrbit(o));
    return {{"radii", c.radii()},
            {"peels", std::move(peels)},
            {"intermediates", std::move(inter)},
            {"residual", jsonOrbit(c.residual)},
            {"spinor", c.spinor ? json(str(*c.spinor)) : json(nullptr)},
            {"flag", composedFlagType(c).blocks},
            {"picard", c.picard()}};
}

json jsonEdges(const std::vector<FlopEdge>& edges) {
    json out = json::array();
    for (const auto& e : edges) {
        out.push_back({{"a", e.a},
                       {"b", e.b},
                       {"kind", std::string(1, e.kind)},
                       {"param", e.kind == 'A' ? json(e.param) : json(nullptr)}});
    }
    return out;
}

void printChain(const TerminalizationChain& c, int index) {
    std::cout << "chain " << index << ": radii (";
    const auto radii = c.radii();
    for (size_t i = 0; i < radii.size(); ++i) std::cout << (i ? "," : "") << radii[i];
    std::cout << ")";
    if (c.spinor) std::cout << " + spinor " << str(*c.spinor);
    std::cout << "  flag " << composedFlagType(c).str() << "  picard " << c.picard() << "\n";
    std::cout << "  " << c.top.str();
    for (size_t i = 0; i < c.peels.size(); ++i)
        std::cout << "  --r=" << c.peels[i].r << "-->  " << c.intermediates[i].str();
    if (c.spinor)
        std::cout << "  --spinor " << str(*c.spinor) << " (r="
                  << c.residual.algebra().naturalDim() / 2 << ")-->  0";
    std::cout << "\n";
    std::cout << "  residual: " << c.residual.str();
    if (c.spinor) {
        std::cout << "  (exceptional, resolved by the spinor step)";
    } else {
        std::cout << "  (Q-factorial terminal, dim " << orbitDimension(c.residual) << ")";
    }
    std::cout << "\n";
}

void runTerminalize(Report& rep, const Algebra& a, const std::string& partText, bool all,
                    const std::string& strategy, bool asJson) {
    requireWithinCap(a.naturalDim());
    const NilpotentOrbit o = orbitFromText(a, partText);
    if (a.family() == Family::A) {
        const FlopGraph g = terminalizeTypeA(o);
        if (asJson) {
            json nodes = json::array();
            for (const auto& n : g.nodes) nodes.push_back({{"flag", n.flag.blocks}});
            rep.result = {{"partition", jsonPartition(o.jordanType())},
                          {"dim", orbitDimension(o)},
                          {"springer_resolutions", std::move(nodes)},
                          {"flops", jsonEdges(g.edges)}};
            rep.emit();
            return;
        }
        std::cout << "algebra " << a.name() << " (" << a.matrixName() << "), orbit "
                  << orbitDisplay(o) << ", dim " << orbitDimension(o) << "\n";
        std::cout << "crepant resolutions (orderings of the transposed partition): "
                  << g.nodes.size() << "\n";
        for (size_t i = 0; i < g.nodes.size(); ++i)
            std::cout << "  " << i + 1 << ": flag " << g.nodes[i].flag.str() << "\n";
        return;
    }
    std::vector<TerminalizationChain> chains;
    if (all) {
        chains = enumerateTerminalizations(o);
    } else {
        chains.push_back(terminalizeOne(o, strategy == "last" ? PeelStrategy::Last
                                                              : PeelStrategy::First));
    }
    std::vector<FlopEdge> edges;
    if (all) edges = flopGraph(o).edges;
    if (asJson) {
        json list = json::array();
        for (const auto& c : chains) list.push_back(jsonChain(c));
        rep.result = {{"partition", jsonPartition(o.jordanType())},
                      {"dim", orbitDimension(o)},
                      {"qfactorial_terminal", isQFactorialTerminal(o)},
                      {"applies_to_both_labels", o.veryEvenLabel().has_value()},
                      {"chains", std::move(list)}};
        if (all) rep.result["flops"] = jsonEdges(edges);
        rep.emit();
        return;
    }
    std::cout << "algebra " << a.name() << " (" << a.matrixName() << "), orbit "
              << orbitDisplay(o) << ", dim " << orbitDimension(o) << "\n";
    if (o.veryEvenLabel())
        std::cout << "(very even Jordan type: the chain set below applies to both labels"
                     " I and II)\n";
    if (isQFactorialTerminal(o))
        std::cout << "the normalized closure already has Q-factorial terminal singularities\n";
    std::cout << "Q-factorial terminalizations: " << chains.size() << " chain(s)"
              << (all ? "" : " (use --all for the full set)") << "\n";
    for (size_t i = 0; i < chains.size(); ++i) printChain(chains[i], static_cast<int>(i) + 1);
    if (all) {
        std::cout << "flop graph: " << chains.size() << " node(s), " << edges.size()
                  << " edge(s)\n";
        for (const auto& e : edges) {
            std::cout << "  chain " << e.a + 1 << " -- chain " << e.b + 1 << " : ";
            if (e.kind == 'A') std::cout << "A" << e.param;
            else std::cout << "D";
            std::cout << "\n";
        }
    }
}

// ----------------------------------------------------------------- flops ----

void runFlops(Report& rep, const Algebra& a, const std::string& partText, bool asDot,
              bool asJson) {
    requireWithinCap(a.naturalDim());
    const NilpotentOrbit o = orbitFromText(a, partText);
    const FlopGraph g = a.family() == Family::A ? terminalizeTypeA(o) : flopGraph(o);
    if (asDot) {
        std::cout << flopGraphToDot(g);
        return;
    }
    if (asJson) {
        json nodes = json::array();
        for (const auto& n : g.nodes) {
            json jn = {{"flag", n.flag.blocks}};
            if (n.chain) {
                jn["radii"] = n.chain->radii();
                jn["residual"] = jsonOrbit(n.chain->residual);
                jn["spinor"] = n.chain->spinor ? json(str(*n.chain->spinor)) : json(nullptr);
            }
            nodes.push_back(std::move(jn));
        }
        rep.result = {{"partition", jsonPartition(o.jordanType())},
                      {"nodes", std::move(nodes)},
                      {"edges", jsonEdges(g.edges)}};
        rep.emit();
        return;
    }
    std::cout << "flop graph of " << orbitDisplay(o) << " in " << a.name() << " ("
              << a.matrixName() << "): " << g.nodes.size() << " node(s), " << g.edges.size()
              << " edge(s)\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        std::cout << "  node " << i + 1 << ": flag " << g.nodes[i].flag.str();
        if (g.nodes[i].chain && g.nodes[i].chain->spinor)
            std::cout << "  spinor " << str(*g.nodes[i].chain->spinor);
        std::cout << "\n";
    }
    for (const auto& e : g.edges) {
        std::cout << "  node " << e.a + 1 << " -- node " << e.b + 1 << " : ";
        if (e.kind == 'A') std::cout << "A" << e.param;
        else std::cout << "D";
        std::cout << "\n";
    }
}

// ----------------------------------------------------------------- check ----

struct SuiteResult {
    std::string name;
    long instances = 0;
};

[[noreturn]] void checkFail(const std::string& invariant, const std::string& witness) {
    throw InternalError("check failed: " + invariant + " violated at " + witness);
}

std::vector<Algebra> algebrasOf(Family fam, int maxM) {
    std::vector<Algebra> out;
    const int minRank = fam == Family::D ? 2 : 1;
    for (int n = minRank;; ++n) {
        const Algebra a(fam, n);
        if (a.naturalDim() > maxM) break;
        out.push_back(a);
    }
    return out;
}

SuiteResult suitePoset(Family fam, int maxM) {
    SuiteResult res{"poset", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        const ClosurePoset poset = closurePoset(a);
        const int n = static_cast<int>(poset.nodes.size());
        std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                             std::vector<bool>(static_cast<size_t>(n), false));
        for (auto [u, l] : poset.coverEdges)
            reach[static_cast<size_t>(u)][static_cast<size_t>(l)] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (reach[static_cast<size_t>(i)][static_cast<size_t>(k)])
                    for (int j = 0; j < n; ++j)
                        if (reach[static_cast<size_t>(k)][static_cast<size_t>(j)])
                            reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto &oi = poset.nodes[static_cast<size_t>(i)],
                           &oj = poset.nodes[static_cast<size_t>(j)];
                bool expected = false;
                if (i != j && oi.jordanType() != oj.jordanType())
                    expected = dominates(oi.jordanType(), oj.jordanType());
                if (reach[static_cast<size_t>(i)][static_cast<size_t>(j)] != expected)
                    checkFail("closure-order = dominance", a.name() + " " + oi.str() + " vs " +
                                                               oj.str());
                ++res.instances;
            }
        }
    }
    return res;
}

SuiteResult suiteCodim(Family fam, int maxM) {
    SuiteResult res{"codim", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        const Epsilon eps = *a.epsilon();
        const auto parts = enumerateAdmissible(a.naturalDim(), eps);
        const auto covers = partitionCovers(parts);
        std::map<Partition, int> minCover;
        for (auto [u, l] : covers) {
            const Partition &d = parts[static_cast<size_t>(u)],
                            &f = parts[static_cast<size_t>(l)];
            const std::string witness = a.name() + " [" + d.str() + "] >= [" + f.str() + "]";
            KPTrace trace;
            try {
                trace = kpReduce(d, f, eps);
            } catch (const std::exception&) {
                checkFail("KP reduction terminates", witness);
            }
            IrreducibleClass cls{};
            try {
                cls = classifyIrreducible(trace.dIrr, trace.fIrr, trace.epsIrr);
            } catch (const InternalError&) {
                checkFail("irreducible pair is one of a-h", witness);
            }
            const int codim = degenerationCodim(d, f, a);
            if (codim != cls.codim) checkFail("class codimension", witness);
            auto it = minCover.find(d);
            if (it == minCover.end() || codim < it->second) minCover[d] = codim;
            ++res.instances;
        }
        for (const Partition& d : parts) {
            if (d.largest() <= 1) continue;
            if ((minCover.at(d) >= 4) != hasFullMembers(d))
                checkFail("full members iff codim >= 4", a.name() + " [" + d.str() + "]");
            singularLocusCodim(orbitsOf(a, d)[0], /*verify=*/true);
            ++res.instances;
        }
    }
    return res;
}

SuiteResult suiteRigidity(Family fam, int maxM) {
    SuiteResult res{"rigidity", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        std::set<Partition> induced;
        for (const auto& o : inducedOrbitSet(a)) induced.insert(o.jordanType());
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), *a.epsilon())) {
            if (isRigid(orbitsOf(a, d)[0]) != (induced.count(d) == 0))
                checkFail("rigid = not induced", a.name() + " [" + d.str() + "]");
            ++res.instances;
        }
    }
    return res;
}

SuiteResult suiteRoundtrip(Family fam, int maxM) {
    SuiteResult res{"roundtrip", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), *a.epsilon())) {
            const NilpotentOrbit o = orbitsOf(a, d)[0];
            for (const PeelOption& opt : availablePeels(o)) {
                const std::string witness =
                    a.name() + " [" + d.str() + "] p=" + std::to_string(opt.p);
                const InductionStep step = peel(o, opt.p);
                if (induce(a, opt.r, step.source.jordanType()).jordanType() != d)
                    checkFail("peel/induce round-trip", witness);
                const int lhs = orbitDimension(a.family(), d);
                const int rhs =
                    orbitDimension(step.source.algebra().family(), step.source.jordanType()) +
                    (a.dim() - leviDim(a, opt.r));
                if (lhs != rhs) checkFail("codimension preservation", witness);
                ++res.instances;
            }
        }
    }
    return res;
}

SuiteResult suiteTerminalization(Family fam, int maxM) {
    SuiteResult res{"terminalization", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), *a.epsilon())) {
            const NilpotentOrbit o = orbitsOf(a, d)[0];
            const std::string witness = a.name() + " [" + d.str() + "]";
            const auto chains = enumerateTerminalizations(o);
            if (chains.empty()) checkFail("terminalization exists", witness);
            std::set<Partition> residuals;
            std::set<std::multiset<int>> radii;
            for (const auto& c : chains) {
                residuals.insert(c.residual.jordanType());
                const auto r = c.radii();
                radii.insert(std::multiset<int>(r.begin(), r.end()));
                if (c.spinor ? !isExceptionalResidual(c.residual)
                             : !isQFactorialTerminal(c.residual))
                    checkFail("residual Q-factorial terminal or exceptional+spinor", witness);
                int total = 0;
                Algebra cur = a;
                for (const PeelStep& s : c.peels) {
                    total += cur.dim() - leviDim(cur, s.r);
                    cur = innerAlgebra(cur, s.r);
                }
                if (c.spinor) total += cur.dim() - leviDim(cur, cur.naturalDim() / 2);
                const int residualDim = c.spinor ? 0 : orbitDimension(c.residual);
                if (orbitDimension(o) != residualDim + total)
                    checkFail("chain dimension bookkeeping", witness);
            }
            if (residuals.size() != 1) checkFail("chain-independent residual", witness);
            if (radii.size() != 1) checkFail("chain-independent radius multiset", witness);
            res.instances += static_cast<long>(chains.size());
        }
    }
    return res;
}

bool graphConnected(size_t n, const std::vector<FlopEdge>& edges) {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[static_cast<size_t>(e.a)].push_back(e.b);
        adj[static_cast<size_t>(e.b)].push_back(e.a);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++count;
        for (int v : adj[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    return count == n;
}

SuiteResult suiteConnectivity(Family fam, int maxM) {
    SuiteResult res{"connectivity", 0};
    for (const Algebra& a : algebrasOf(fam, maxM)) {
        if (fam == Family::A) {
            for (const NilpotentOrbit& o : enumerateOrbits(a)) {
                const FlopGraph g = terminalizeTypeA(o);
                std::vector<int> sorted = transpose(o.jordanType()).parts();
                std::sort(sorted.begin(), sorted.end());
                long orderings = 0;
                do {
                    ++orderings;
                } while (std::next_permutation(sorted.begin(), sorted.end()));
                if (static_cast<long>(g.nodes.size()) != orderings)
                    checkFail("type-A node count = orderings of the transpose",
                              a.name() + " [" + o.jordanType().str() + "]");
                if (!graphConnected(g.nodes.size(), g.edges))
                    checkFail("flop graph connected",
                              a.name() + " [" + o.jordanType().str() + "]");
                ++res.instances;
            }
            continue;
        }
        for (const Partition& d : enumerateAdmissible(a.naturalDim(), *a.epsilon())) {
            const FlopGraph g = flopGraph(orbitsOf(a, d)[0]);
            if (!graphConnected(g.nodes.size(), g.edges))
                checkFail("flop graph connected", a.name() + " [" + d.str() + "]");
            ++res.instances;
        }
    }
    return res;
}

void runCheck(Report& rep, const std::string& familyText, int maxM, bool asJson) {
    if (familyText.size() != 1 || familyText.find_first_of("ABCD") != 0)
        throw std::invalid_argument("check: FAMILY must be one of A, B, C, D");
    const Family fam = static_cast<Family>(familyText[0]);
    requireWithinCap(maxM);
    std::vector<SuiteResult> suites;
    if (fam == Family::A) {
        suites.push_back(suitePoset(fam, maxM));
        suites.push_back(suiteConnectivity(fam, maxM));
    } else {
        suites.push_back(suitePoset(fam, maxM));
        suites.push_back(suiteCodim(fam, maxM));
        suites.push_back(suiteRigidity(fam, maxM));
        suites.push_back(suiteRoundtrip(fam, maxM));
        suites.push_back(suiteTerminalization(fam, maxM));
        suites.push_back(suiteConnectivity(fam, maxM));
    }
    if (asJson) {
        json list = json::array();
        for (const auto& s : suites)
            list.push_back({{"name", s.name}, {"ok", true}, {"instances", s.instances}});
        rep.result = {{"family", familyText}, {"max_m", maxM}, {"ok", true},
                      {"suites", std::move(list)}};
        rep.emit();
        return;
    }
    std::cout << "check family " << familyText << " up to m = " << maxM << "\n";
    for (const auto& s : suites)
        std::cout << "  " << std::left << std::setw(18) << s.name << " ok  ("
                  << s.instances << " instances)\n";
    std::cout << "all checks passed\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"birational-geometry profiles of nilpotent orbit closures "
                 "in the classical Lie algebras"};
    app.require_subcommand(1);

    std::string algText, partText, dText, fText, familyText;
    std::string strategy = "first";
    bool asJson = false, asDot = false, all = false;
    int maxM = 12;

    auto* orbits = app.add_subcommand("orbits", "orbit catalog with invariants");
    orbits->add_option("ALG", algText, "algebra, e.g. C6 or sp12")->required();
    orbits->add_flag("--json", asJson, "emit a JSON report");

    auto* poset = app.add_subcommand("poset", "closure poset with classified cover edges");
    poset->add_option("ALG", algText)->required();
    poset->add_flag("--dot", asDot, "emit DOT");
    poset->add_flag("--json", asJson);

    auto* dynkin = app.add_subcommand("dynkin", "weighted Dynkin labels and JM flag type");
    dynkin->add_option("ALG", algText)->required();
    dynkin->add_option("PARTITION", partText, "Jordan type, e.g. 6,3^2")->required();
    dynkin->add_flag("--json", asJson);

    auto* degeneration =
        app.add_subcommand("degeneration", "KP trace, irreducible class, codimension");
    degeneration->add_option("ALG", algText)->required();
    degeneration->add_option("D", dText, "upper Jordan type")->required();
    degeneration->add_option("F", fText, "lower Jordan type")->required();
    degeneration->add_flag("--json", asJson);

    auto* terminalize =
        app.add_subcommand("terminalize", "Q-factorial terminalization chains");
    terminalize->add_option("ALG", algText)->required();
    terminalize->add_option("PARTITION", partText)->required();
    terminalize->add_flag("--all", all, "enumerate every chain and the flop graph");
    terminalize->add_option("--strategy", strategy, "greedy peel order: first|last")
        ->check(CLI::IsMember({"first", "last"}));
    terminalize->add_flag("--json", asJson);

    auto* flops = app.add_subcommand("flops", "Mukai flop graph");
    flops->add_option("ALG", algText)->required();
    flops->add_option("PARTITION", partText)->required();
    flops->add_flag("--dot", asDot);
    flops->add_flag("--json", asJson);

    auto* check = app.add_subcommand("check", "run the oracle suites");
    check->add_option("FAMILY", familyText, "A, B, C or D")->required();
    check->add_option("--max-m", maxM, "largest natural dimension")->required();
    check->add_flag("--json", asJson);

    std::ostringstream echo;
    for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

    Report rep;
    rep.commandEcho = echo.str();
    rep.algebra = nullptr;
    rep.inputs = json::object();

    try {
        orbits->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            runOrbits(rep, a, asJson);
        });
        poset->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            runPoset(rep, a, asJson, asDot);
        });
        dynkin->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            rep.inputs = {{"partition", partText}};
            runDynkin(rep, a, partText, asJson);
        });
        degeneration->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            rep.inputs = {{"d", dText}, {"f", fText}};
            runDegeneration(rep, a, dText, fText, asJson);
        });
        terminalize->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            rep.inputs = {{"partition", partText}, {"all", all}, {"strategy", strategy}};
            runTerminalize(rep, a, partText, all, strategy, asJson);
        });
        flops->callback([&] {
            const Algebra a = parseAlgebra(algText);
            rep.algebra = jsonAlgebra(a);
            rep.inputs = {{"partition", partText}};
            runFlops(rep, a, partText, asDot, asJson);
        });
        check->callback([&] {
            rep.algebra = {{"family", familyText}};
            rep.inputs = {{"family", familyText}, {"max_m", maxM}};
            runCheck(rep, familyText, maxM, asJson);
        });
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
