#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcalc/induction.hpp"
#include "orbitcalc/orbit.hpp"

namespace orbitcalc {

/// The exceptional family so(4n+2), d = [2^{2n}, 1^2]: full members, yet the
/// orbit closure is not Q-factorial. It is resolved by one extra Richardson
/// step with Levi gl(2n+1), available in two spinor variants.
inline bool isExceptionalResidual(const NilpotentOrbit& o) {
    if (o.algebra().family() != Family::D) return false;
    const auto runs = o.jordanType().runs();
    return runs.size() == 2 && runs[0].value == 2 && runs[1].value == 1 &&
           runs[1].multiplicity == 2 && runs[0].multiplicity % 2 == 0 &&
           runs[0].multiplicity >= 2;
}

/// Whether the normalized orbit closure already has Q-factorial terminal
/// singularities: full members minus the exceptional family (type A: zero only).
inline bool isQFactorialTerminal(const NilpotentOrbit& o) {
    if (o.algebra().family() == Family::A) return o.isZeroOrbit();
    return hasFullMembers(o.jordanType()) && !isExceptionalResidual(o);
}

enum class SpinorChoice { I, II };

inline const char* str(SpinorChoice c) { return c == SpinorChoice::I ? "I" : "II"; }

struct PeelStep {
    int p;  // 1-based distinct-part index at the step's intermediate
    int r;  // gl block size

    auto operator<=>(const PeelStep&) const = default;
};

/// One Q-factorial terminalization: an ordered sequence of birational peels
/// ending at a Q-factorial terminal residual, or at the exceptional residual
/// completed by a spinor-choice Richardson step.
struct TerminalizationChain {
    NilpotentOrbit top;
    std::vector<PeelStep> peels;
    std::vector<NilpotentOrbit> intermediates;  // orbit after each peel
    NilpotentOrbit residual;                    // == intermediates.back() when peels exist
    std::optional<SpinorChoice> spinor;

    std::vector<int> radii() const {
        std::vector<int> out;
        out.reserve(peels.size());
        for (const auto& s : peels) out.push_back(s.r);
        return out;
    }

    /// Number of marked nodes of the composed parabolic.
    int picard() const { return static_cast<int>(peels.size()) + (spinor ? 1 : 0); }
};

/// Composed isotropic flag type (r_1,...,r_j, m-2*sum, r_j,...,r_1); a spinor
/// step contributes the halving block pair with the zero middle collapsed.
inline FlagType composedFlagType(const TerminalizationChain& c) {
    std::vector<int> radii = c.radii();
    int middle = c.top.algebra().naturalDim();
    for (int r : radii) middle -= 2 * r;
    if (c.spinor) {
        radii.push_back(middle / 2);
        middle = -1;  // consumed: collapse the zero middle
    }
    std::vector<int> blocks(radii.begin(), radii.end());
    if (middle >= 0) blocks.push_back(middle);
    blocks.insert(blocks.end(), radii.rbegin(), radii.rend());
    return {std::move(blocks)};
}

namespace detail {

inline TerminalizationChain makeChain(const NilpotentOrbit& top, std::vector<PeelStep> peels,
                                      std::vector<NilpotentOrbit> intermediates,
                                      std::optional<SpinorChoice> spinor) {
    NilpotentOrbit residual = intermediates.empty() ? top : intermediates.back();
    return {top, std::move(peels), std::move(intermediates), std::move(residual), spinor};
}

}  // namespace detail

enum class PeelStrategy { First, Last };

/// One terminalization chain, peeling greedily at the smallest (First) or
/// largest (Last) available index. Empty chain iff the orbit is already
/// Q-factorial terminal; the exceptional residual takes spinor choice I.
inline TerminalizationChain terminalizeOne(const NilpotentOrbit& o, PeelStrategy strategy) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("terminalizeOne: family B, C or D required "
                                    "(use terminalizeTypeA)");
    std::vector<PeelStep> peels;
    std::vector<NilpotentOrbit> intermediates;
    NilpotentOrbit cur = o;
    for (;;) {
        const auto options = availablePeels(cur);
        if (options.empty()) break;
        const PeelOption pick =
            strategy == PeelStrategy::First ? options.front() : options.back();
        const InductionStep step = peel(cur, pick.p);
        peels.push_back({pick.p, pick.r});
        intermediates.push_back(step.source);
        cur = step.source;
    }
    const std::optional<SpinorChoice> spinor =
        isExceptionalResidual(cur) ? std::optional(SpinorChoice::I) : std::nullopt;
    return detail::makeChain(o, std::move(peels), std::move(intermediates), spinor);
}

/// All maximal standard-peel chains (depth-first over every available peel);
/// an exceptional residual branches into the two spinor choices. Chains are
/// sorted by radius sequence, I before II.
inline std::vector<TerminalizationChain> enumerateTerminalizations(const NilpotentOrbit& o) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("enumerateTerminalizations: family B, C or D required "
                                    "(use terminalizeTypeA)");
    std::vector<TerminalizationChain> out;
    std::vector<PeelStep> peels;
    std::vector<NilpotentOrbit> intermediates;
    auto dfs = [&](auto&& self, const NilpotentOrbit& cur) -> void {
        const auto options = availablePeels(cur);
        if (options.empty()) {
            if (isExceptionalResidual(cur)) {
                out.push_back(detail::makeChain(o, peels, intermediates, SpinorChoice::I));
                out.push_back(detail::makeChain(o, peels, intermediates, SpinorChoice::II));
            } else {
                out.push_back(detail::makeChain(o, peels, intermediates, std::nullopt));
            }
            return;
        }
        for (const PeelOption& opt : options) {
            const InductionStep step = peel(cur, opt.p);
            peels.push_back({opt.p, opt.r});
            intermediates.push_back(step.source);
            self(self, step.source);
            peels.pop_back();
            intermediates.pop_back();
        }
    };
    dfs(dfs, o);
    std::sort(out.begin(), out.end(),
              [](const TerminalizationChain& a, const TerminalizationChain& b) {
                  if (auto c = a.radii() <=> b.radii(); c != 0) return c < 0;
                  return a.spinor < b.spinor;
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const TerminalizationChain& a, const TerminalizationChain& b) {
                              return a.radii() == b.radii() && a.spinor == b.spinor;
                          }),
              out.end());
    return out;
}

/// An edge of the Mukai flop graph: type A between chains whose radius
/// sequences differ by one adjacent transposition of unequal radii r_i, r_j
/// (parameter r_i + r_j - 1), type D between the two spinor choices.
struct FlopEdge {
    int a, b;   // node indices
    char kind;  // 'A' or 'D'
    int param;  // k of A_k; 0 for D
};

/// A node of the flop graph: a composed flag type, carrying the chain that
/// produced it in families B/C/D (type A nodes are bare polarizations).
struct FlopNode {
    FlagType flag;
    std::optional<TerminalizationChain> chain;
};

struct FlopGraph {
    NilpotentOrbit top;
    std::vector<FlopNode> nodes;
    std::vector<FlopEdge> edges;
};

namespace detail {

inline bool adjacentTransposition(const std::vector<int>& a, const std::vector<int>& b,
                                  int& outParam) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] != b[i]) {
            if (a[i] == b[i + 1] && a[i + 1] == b[i] && a[i] != a[i + 1] &&
                std::equal(a.begin() + static_cast<long>(i) + 2, a.end(),
                           b.begin() + static_cast<long>(i) + 2)) {
                outParam = a[i] + a[i + 1] - 1;
                return true;
            }
            return false;
        }
    }
    return false;
}

}  // namespace detail

/// The Mukai flop graph of all Q-factorial terminalizations of a B/C/D orbit.
inline FlopGraph flopGraph(const NilpotentOrbit& o) {
    FlopGraph g{o, {}, {}};
    const auto chains = enumerateTerminalizations(o);
    for (const auto& c : chains) g.nodes.push_back({composedFlagType(c), c});
    for (size_t i = 0; i < chains.size(); ++i) {
        for (size_t j = i + 1; j < chains.size(); ++j) {
            const auto &ci = chains[i], &cj = chains[j];
            int param = 0;
            if (ci.spinor == cj.spinor &&
                detail::adjacentTransposition(ci.radii(), cj.radii(), param)) {
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), 'A', param});
            } else if (ci.radii() == cj.radii() && ci.spinor && cj.spinor &&
                       ci.spinor != cj.spinor) {
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), 'D', 0});
            }
        }
    }
    return g;
}

/// Crepant resolutions of a type-A orbit closure: one node per distinct
/// ordering of the transposed partition, edges between orderings that differ
/// by an adjacent transposition of unequal entries.
inline FlopGraph terminalizeTypeA(const NilpotentOrbit& o) {
    if (o.algebra().family() != Family::A)
        throw std::invalid_argument("terminalizeTypeA: family A required");
    std::vector<int> base = transpose(o.jordanType()).parts();
    std::sort(base.begin(), base.end());
    FlopGraph g{o, {}, {}};
    std::vector<std::vector<int>> orderings;
    do {
        orderings.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(orderings.begin(), orderings.end(), std::greater<>());
    for (const auto& ord : orderings) g.nodes.push_back({FlagType{ord}, std::nullopt});
    for (size_t i = 0; i < orderings.size(); ++i) {
        for (size_t j = i + 1; j < orderings.size(); ++j) {
            int param = 0;
            if (detail::adjacentTransposition(orderings[i], orderings[j], param)) {
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), 'A', param});
            }
        }
    }
    return g;
}

/// DOT rendering: node label = composed flag + residual, edge label "A_k" or "D".
inline std::string flopGraphToDot(const FlopGraph& g) {
    std::ostringstream os;
    os << "graph flop_graph {\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const FlopNode& n = g.nodes[i];
        os << "  n" << i << " [label=\"" << n.flag.str();
        if (n.chain) {
            os << " | " << n.chain->residual.str();
            if (n.chain->spinor) os << " spinor " << str(*n.chain->spinor);
        }
        os << "\"];\n";
    }
    for (const FlopEdge& e : g.edges) {
        os << "  n" << e.a << " -- n" << e.b << " [label=\"";
        if (e.kind == 'A') os << "A_" << e.param;
        else os << "D";
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace orbitcalc
