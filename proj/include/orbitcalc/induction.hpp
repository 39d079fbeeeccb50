#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbitcalc/degeneration.hpp"
#include "orbitcalc/orbit.hpp"

namespace orbitcalc {

/// Levi subalgebra gl(r_1) + ... + gl(r_j) + inner of a B/C/D algebra.
struct LeviDatum {
    std::vector<int> glBlocks;
    Algebra inner;

    int dim() const {
        int s = inner.dim();
        for (int r : glBlocks) s += glDim(r);
        return s;
    }
};

/// A peel choice: 1-based index p into the distinct-part list, with
/// r the cumulative multiplicity of the first p distinct parts.
struct PeelOption {
    int p;
    int r;

    auto operator<=>(const PeelOption&) const = default;
};

/// All positions where the partition drops by at least 2 (treating d_{k+1} = 0).
/// Empty exactly when the partition has full members.
inline std::vector<PeelOption> availablePeels(const NilpotentOrbit& o) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("availablePeels: family B, C or D required");
    const auto runs = o.jordanType().runs();
    std::vector<PeelOption> out;
    int r = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
        r += runs[i].multiplicity;
        const int next = (i + 1 < runs.size()) ? runs[i + 1].value : 0;
        if (runs[i].value >= next + 2) out.push_back({static_cast<int>(i) + 1, r});
    }
    return out;
}

struct InductionStep {
    enum class Kind { Standard, Paired };
    NilpotentOrbit source;  // orbit in the inner algebra g'
    NilpotentOrbit target;  // induced orbit in the ambient algebra
    int r;
    int p;
    Kind kind;
    bool birational;  // standard steps are birational, paired ones are not

    LeviDatum levi() const { return {{r}, source.algebra()}; }
};

namespace detail {

/// Residual Jordan type: subtract 2 from the first p distinct-part runs,
/// drop zero parts, merge runs that became equal.
inline Partition peelResidual(const Partition& d, int p) {
    const auto runs = d.runs();
    std::vector<int> parts;
    for (size_t i = 0; i < runs.size(); ++i) {
        const int v = (static_cast<int>(i) < p) ? runs[i].value - 2 : runs[i].value;
        for (int j = 0; j < runs[i].multiplicity && v > 0; ++j) parts.push_back(v);
    }
    return Partition(std::move(parts));
}

inline NilpotentOrbit partitionLevelOrbit(const Algebra& a, const Partition& d) {
    // Intermediates of peel chains are tracked at partition level; a very even
    // partition stands for either labelled orbit, reported with the I tag.
    if (a.family() == Family::D && isVeryEven(d)) return NilpotentOrbit(a, d, VeryEvenLabel::I);
    return NilpotentOrbit(a, d);
}

}  // namespace detail

/// The induced orbit Ind(gl(r)+g', 0 + inner): add two columns of height r to
/// the inner partition and take the eps-collapse.
inline NilpotentOrbit induce(const Algebra& a, int r, const Partition& inner) {
    if (a.family() == Family::A)
        throw std::invalid_argument("induce: family B, C or D required");
    const int m = a.naturalDim();
    if (r < 1 || m - 2 * r < 0) throw std::invalid_argument("induce: gl block too large");
    if (inner.total() != m - 2 * r)
        throw std::invalid_argument("induce: inner partition does not fit the Levi");
    const Epsilon eps = *a.epsilon();
    if (!isAdmissible(inner, eps))
        throw std::invalid_argument("induce: inner partition is not admissible");
    std::vector<int> parts = inner.parts();
    if (static_cast<int>(parts.size()) < r) parts.resize(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) parts[static_cast<size_t>(i)] += 2;
    return detail::partitionLevelOrbit(a, collapse(Partition(std::move(parts)), eps));
}

/// The birational peel at distinct-part index p (1-based). Inverse to induce.
inline InductionStep peel(const NilpotentOrbit& o, int p) {
    const auto options = availablePeels(o);
    const auto it = std::find_if(options.begin(), options.end(),
                                 [p](const PeelOption& opt) { return opt.p == p; });
    if (it == options.end())
        throw std::invalid_argument("peel: index " + std::to_string(p) +
                                    " is not an available peel of " + o.str());
    const int r = it->r;
    const Algebra inner = innerAlgebra(o.algebra(), r);
    const Partition residual = detail::peelResidual(o.jordanType(), p);
    return {detail::partitionLevelOrbit(inner, residual), o, r, p,
            InductionStep::Kind::Standard, true};
}

/// The Remark-style non-birational induction at a distinct part of multiplicity
/// exactly 2 whose parity matches the sign convention (odd for orthogonal,
/// even for symplectic): the pair (d_p, d_p) is replaced by (d_p-1, d_p-1).
inline InductionStep peelAnotherType(const NilpotentOrbit& o, int p) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("peelAnotherType: family B, C or D required");
    const auto runs = o.jordanType().runs();
    if (p < 1 || p > static_cast<int>(runs.size()))
        throw std::invalid_argument("peelAnotherType: bad distinct-part index");
    const auto& run = runs[static_cast<size_t>(p - 1)];
    const Epsilon eps = *o.algebra().epsilon();
    const bool paired = (eps == Epsilon::orthogonal) ? (run.value % 2 == 1)
                                                     : (run.value % 2 == 0);
    if (run.multiplicity != 2 || !paired)
        throw std::invalid_argument("peelAnotherType: part " + std::to_string(run.value) +
                                    " must have multiplicity exactly 2 and " +
                                    (eps == Epsilon::orthogonal ? "odd" : "even") + " parity");
    int r = 1;
    for (int i = 0; i < p - 1; ++i) r += runs[static_cast<size_t>(i)].multiplicity;
    std::vector<int> parts;
    for (size_t i = 0; i < runs.size(); ++i) {
        int v = runs[i].value;
        if (static_cast<int>(i) < p - 1) v -= 2;
        else if (static_cast<int>(i) == p - 1) v -= 1;
        for (int j = 0; j < runs[i].multiplicity && v > 0; ++j) parts.push_back(v);
    }
    const Algebra inner = innerAlgebra(o.algebra(), r);
    const Partition residual(std::move(parts));
    const NilpotentOrbit back = induce(o.algebra(), r, residual);
    if (back.jordanType() != o.jordanType())
        throw InternalError("peelAnotherType: induction does not reproduce " + o.str());
    return {detail::partitionLevelOrbit(inner, residual), o, r, p,
            InductionStep::Kind::Paired, false};
}

/// Closed-form rigidity test: full members, and no member of the constrained
/// parity has multiplicity exactly 2. Type A orbits are rigid iff zero.
inline bool isRigid(const NilpotentOrbit& o) {
    if (o.algebra().family() == Family::A) return o.isZeroOrbit();
    const Partition& d = o.jordanType();
    if (!hasFullMembers(d)) return false;
    const Epsilon eps = *o.algebra().epsilon();
    for (const auto& run : d.runs()) {
        const bool paired = (eps == Epsilon::orthogonal) ? (run.value % 2 == 1)
                                                         : (run.value % 2 == 0);
        if (paired && run.multiplicity == 2) return false;
    }
    return true;
}

/// Every orbit induced from some Levi gl(r) + g', enumerated over all r and
/// all inner orbits. Single gl blocks suffice: an induction through a deeper
/// gl decomposition factors through these by transitivity.
inline std::vector<NilpotentOrbit> inducedOrbitSet(const Algebra& a) {
    if (a.family() == Family::A)
        throw std::invalid_argument("inducedOrbitSet: family B, C or D required");
    const int m = a.naturalDim();
    std::set<Partition> induced;
    for (int r = 1; 2 * r <= m; ++r) {
        const Epsilon eps = *a.epsilon();
        for (const Partition& inner : enumerateAdmissible(m - 2 * r, eps)) {
            induced.insert(induce(a, r, inner).jordanType());
        }
    }
    std::vector<Partition> sorted(induced.begin(), induced.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<Partition>());
    std::vector<NilpotentOrbit> out;
    for (const Partition& d : sorted) {
        for (auto& o : orbitsOf(a, d)) out.push_back(std::move(o));
    }
    return out;
}

}  // namespace orbitcalc
