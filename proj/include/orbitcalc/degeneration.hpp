#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcalc/orbit.hpp"

namespace orbitcalc {

/// Cover relations of the dominance order on the admissible partitions of m,
/// by brute-force transitive reduction. Returns pairs of indices (upper, lower)
/// into the given descending-lex list.
inline std::vector<std::pair<int, int>> partitionCovers(const std::vector<Partition>& parts) {
    const int n = static_cast<int>(parts.size());
    std::vector<std::vector<bool>> ge(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) ge[i][j] = dominates(parts[i], parts[j]);
        }
    }
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!ge[i][j]) continue;
            bool strictBetween = false;
            for (int k = 0; k < n && !strictBetween; ++k) {
                if (k != i && k != j && ge[i][k] && ge[k][j]) strictBetween = true;
            }
            if (!strictBetween) covers.emplace_back(i, j);
        }
    }
    return covers;
}

/// The partitions covered by d in the admissible dominance order.
inline std::vector<Partition> coversBelow(const Partition& d, Epsilon eps) {
    const auto all = enumerateAdmissible(d.total(), eps);
    std::vector<Partition> out;
    int self = -1;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        if (all[static_cast<size_t>(i)] == d) self = i;
    }
    if (self < 0) throw std::invalid_argument("coversBelow: [" + d.str() + "] is not admissible");
    for (auto [u, l] : partitionCovers(all)) {
        if (u == self) out.push_back(all[static_cast<size_t>(l)]);
    }
    return out;
}

/// Orbit-level closure poset. Cover edges are the partition-level covers lifted
/// to orbits; in family D each very even partition contributes two labelled
/// orbits which inherit all partition-level covers and are mutually incomparable.
struct ClosurePoset {
    Algebra algebra;
    std::vector<NilpotentOrbit> nodes;
    std::vector<std::pair<int, int>> coverEdges;  // (upper, lower) indices into nodes
};

inline ClosurePoset closurePoset(const Algebra& a) {
    const auto partitions = a.family() == Family::A
                                ? enumeratePartitions(a.naturalDim())
                                : enumerateAdmissible(a.naturalDim(), *a.epsilon());
    ClosurePoset poset{a, {}, {}};
    std::vector<std::vector<int>> nodeOf(partitions.size());
    for (size_t i = 0; i < partitions.size(); ++i) {
        for (auto& o : orbitsOf(a, partitions[i])) {
            nodeOf[i].push_back(static_cast<int>(poset.nodes.size()));
            poset.nodes.push_back(std::move(o));
        }
    }
    for (auto [u, l] : partitionCovers(partitions)) {
        for (int un : nodeOf[static_cast<size_t>(u)]) {
            for (int ln : nodeOf[static_cast<size_t>(l)]) poset.coverEdges.emplace_back(un, ln);
        }
    }
    return poset;
}

/// One Kraft-Procesi erasure. Column erasures flip epsilon once per column;
/// row erasures require the erased rows to be admissible at the current epsilon.
struct ErasureStep {
    enum class Kind { RowBlock, ColumnBlock };
    Kind kind;
    int count;
    Partition erased;  // erased row lengths resp. erased column heights
    Epsilon before;
    Epsilon after;
};

struct KPTrace {
    std::vector<ErasureStep> steps;
    Partition dIrr, fIrr;
    Epsilon epsIrr;
};

/// Reduces a minimal degeneration d >= f to its irreducible core. Fixed policy:
/// strip the maximal common column block first, then the maximal admissible
/// common row block, and repeat.
inline KPTrace kpReduce(Partition d, Partition f, Epsilon eps) {
    if (d.total() != f.total())
        throw std::invalid_argument("kpReduce: partitions of different totals");
    if (!isAdmissible(d, eps) || !isAdmissible(f, eps))
        throw std::invalid_argument("kpReduce: both partitions must be admissible");
    if (d == f || !dominates(d, f))
        throw std::invalid_argument("kpReduce: d must strictly dominate f");
    KPTrace trace;
    for (;;) {
        const Partition td = transpose(d), tf = transpose(f);
        int s = 0;
        while (s < std::min(td.length(), tf.length()) && td.part(s) == tf.part(s)) ++s;
        if (s > 0) {
            std::vector<int> heights(td.parts().begin(), td.parts().begin() + s);
            auto strip = [s](const Partition& p) {
                std::vector<int> q;
                for (int x : p.parts()) {
                    if (x > s) q.push_back(x - s);
                }
                return Partition(std::move(q));
            };
            d = strip(d);
            f = strip(f);
            const Epsilon next = (s % 2 == 0) ? eps : flipped(eps);
            trace.steps.push_back({ErasureStep::Kind::ColumnBlock, s,
                                   Partition(std::move(heights)), eps, next});
            eps = next;
            continue;
        }
        int common = 0;
        while (common < std::min(d.length(), f.length()) && d.part(common) == f.part(common))
            ++common;
        int r = 0;
        for (int i = 1; i <= common; ++i) {
            std::vector<int> prefix(d.parts().begin(), d.parts().begin() + i);
            if (isAdmissible(Partition(prefix), eps)) r = i;
        }
        if (r > 0) {
            std::vector<int> rows(d.parts().begin(), d.parts().begin() + r);
            auto strip = [r](const Partition& p) {
                return Partition(std::vector<int>(p.parts().begin() + r, p.parts().end()));
            };
            d = strip(d);
            f = strip(f);
            trace.steps.push_back({ErasureStep::Kind::RowBlock, r, Partition(std::move(rows)),
                                   eps, eps});
            continue;
        }
        break;
    }
    trace.dIrr = d;
    trace.fIrr = f;
    trace.epsIrr = eps;
    return trace;
}

/// One row of the Kraft-Procesi list of minimal irreducible degenerations.
/// Codimension is 2 for a-e and 4n-4 / 2n / 4n-6 for f / g / h.
struct IrreducibleClass {
    char letter;
    int n;
    int codim;

    auto operator<=>(const IrreducibleClass&) const = default;
};

/// Matches an irreducible minimal pair against the canonical list a-h.
/// Throws InternalError when nothing matches (a bug or a non-minimal input).
inline IrreducibleClass classifyIrreducible(const Partition& d, const Partition& f,
                                            Epsilon eps) {
    const auto rd = d.runs();
    const int m = d.total();
    auto allOnesFrom = [](const Partition& p, int from) {
        for (int i = from; i < p.length(); ++i) {
            if (p.part(i) != 1) return false;
        }
        return true;
    };
    if (eps == Epsilon::symplectic) {
        if (d.parts() == std::vector<int>{2} && f.parts() == std::vector<int>{1, 1})
            return {'a', 1, 2};
        if (d.length() == 1 && d.part(0) % 2 == 0 && d.part(0) >= 4 &&
            f.parts() == std::vector<int>{d.part(0) - 2, 2})
            return {'b', d.part(0) / 2, 2};
        if (d.length() == 2 && d.part(0) == d.part(1) && d.part(0) % 2 == 1 && d.part(0) >= 3 &&
            f.parts() == std::vector<int>{d.part(0) - 1, d.part(0) - 1, 2})
            return {'d', (d.part(0) - 1) / 2, 2};
        if (!rd.empty() && rd[0].value == 2 && rd[0].multiplicity == 1 && m >= 4 &&
            allOnesFrom(d, 1) && allOnesFrom(f, 0)) {
            const int n = m / 2;
            return {'g', n, 2 * n};
        }
    } else {
        if (d.length() == 1 && d.part(0) % 2 == 1 && d.part(0) >= 3 &&
            f.parts() == std::vector<int>{d.part(0) - 2, 1, 1})
            return {'c', (d.part(0) - 1) / 2, 2};
        if (d.length() == 2 && d.part(0) == d.part(1) && d.part(0) % 2 == 0 &&
            f.parts() == std::vector<int>{d.part(0) - 1, d.part(0) - 1, 1, 1})
            return {'e', d.part(0) / 2, 2};
        if (!rd.empty() && rd[0].value == 2 && rd[0].multiplicity == 2 && allOnesFrom(d, 2) &&
            allOnesFrom(f, 0)) {
            if (m % 2 == 1 && m >= 5) {
                const int n = (m - 1) / 2;
                return {'f', n, 4 * n - 4};
            }
            if (m % 2 == 0 && m >= 6) {
                const int n = m / 2;
                return {'h', n, 4 * n - 6};
            }
        }
    }
    throw InternalError("classifyIrreducible: pair [" + d.str() + "] >= [" + f.str() +
                        "] matches none of the canonical items a-h");
}

/// dim O_d - dim O_f for a strict degeneration d > f.
inline int degenerationCodim(const Partition& d, const Partition& f, const Algebra& a) {
    if (d == f) throw std::invalid_argument("degenerationCodim: d and f coincide");
    if (!dominates(d, f))
        throw std::invalid_argument("degenerationCodim: d does not dominate f");
    return orbitDimension(a.family(), d) - orbitDimension(a.family(), f);
}

struct Degeneration {
    NilpotentOrbit upper, lower;
    bool minimal;
    std::optional<KPTrace> trace;
    std::optional<IrreducibleClass> irreducibleClass;
    int codim;
};

/// The minimal degenerations below o: one per orbit-level cover edge, with the
/// KP trace and class letter in families B/C/D (type A covers carry none).
inline std::vector<Degeneration> minimalDegenerations(const NilpotentOrbit& o) {
    const Algebra& a = o.algebra();
    std::vector<Degeneration> out;
    if (a.family() == Family::A) {
        const auto all = enumeratePartitions(a.naturalDim());
        int self = -1;
        for (int i = 0; i < static_cast<int>(all.size()); ++i) {
            if (all[static_cast<size_t>(i)] == o.jordanType()) self = i;
        }
        for (auto [u, l] : partitionCovers(all)) {
            if (u != self) continue;
            const Partition& f = all[static_cast<size_t>(l)];
            out.push_back({o, NilpotentOrbit(a, f), true, std::nullopt, std::nullopt,
                           degenerationCodim(o.jordanType(), f, a)});
        }
        return out;
    }
    const Epsilon eps = *a.epsilon();
    for (const Partition& f : coversBelow(o.jordanType(), eps)) {
        KPTrace trace = kpReduce(o.jordanType(), f, eps);
        IrreducibleClass cls = classifyIrreducible(trace.dIrr, trace.fIrr, trace.epsIrr);
        const int codim = degenerationCodim(o.jordanType(), f, a);
        for (auto& lower : orbitsOf(a, f)) {
            out.push_back({o, std::move(lower), true, trace, cls, codim});
        }
    }
    return out;
}

struct SingularLocusCodim {
    enum class Kind { Smooth, Two, AtLeastFour };
    Kind kind;

    std::string str() const {
        switch (kind) {
            case Kind::Smooth: return "smooth";
            case Kind::Two: return "2";
            case Kind::AtLeastFour: return ">=4";
        }
        return {};
    }

    auto operator<=>(const SingularLocusCodim&) const = default;
};

/// Codimension of the singular locus of the orbit closure: >=4 iff the Jordan
/// type has full members, 2 otherwise, "smooth" for the zero orbit. With
/// verify set, recomputes the answer as the minimum cover codimension and
/// throws InternalError on disagreement.
inline SingularLocusCodim singularLocusCodim(const NilpotentOrbit& o, bool verify = false) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("singularLocusCodim: family B, C or D required");
    if (o.isZeroOrbit()) return {SingularLocusCodim::Kind::Smooth};
    const bool full = hasFullMembers(o.jordanType());
    const SingularLocusCodim answer{full ? SingularLocusCodim::Kind::AtLeastFour
                                         : SingularLocusCodim::Kind::Two};
    if (verify) {
        int minCodim = -1;
        for (const Partition& f : coversBelow(o.jordanType(), *o.algebra().epsilon())) {
            const int c = degenerationCodim(o.jordanType(), f, o.algebra());
            if (minCodim < 0 || c < minCodim) minCodim = c;
        }
        if (minCodim < 0)
            throw InternalError("singularLocusCodim: nonzero orbit with no cover below");
        if ((minCodim >= 4) != full)
            throw InternalError("singularLocusCodim: full-members rule disagrees with the "
                                "minimal cover codimension at " + o.str());
    }
    return answer;
}

/// DOT rendering of the closure poset: node labels "partition[/label] (dim)",
/// cover edges annotated with the irreducible class letter and codimension.
inline std::string posetToDot(const ClosurePoset& poset) {
    std::ostringstream os;
    os << "digraph closure_poset {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
        const NilpotentOrbit& o = poset.nodes[i];
        os << "  n" << i << " [label=\"" << o.jordanType().str();
        if (o.veryEvenLabel()) os << '/' << str(*o.veryEvenLabel());
        os << " (" << orbitDimension(o) << ")\"];\n";
    }
    const bool classical = poset.algebra.family() != Family::A;
    for (auto [u, l] : poset.coverEdges) {
        os << "  n" << u << " -> n" << l;
        const Partition& du = poset.nodes[static_cast<size_t>(u)].jordanType();
        const Partition& dl = poset.nodes[static_cast<size_t>(l)].jordanType();
        const int codim = degenerationCodim(du, dl, poset.algebra);
        if (classical) {
            const KPTrace t = kpReduce(du, dl, *poset.algebra.epsilon());
            const IrreducibleClass c = classifyIrreducible(t.dIrr, t.fIrr, t.epsIrr);
            os << " [label=\"" << c.letter << " (" << codim << ")\"]";
        } else {
            os << " [label=\"(" << codim << ")\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace orbitcalc
