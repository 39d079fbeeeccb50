#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitcalc/algebra.hpp"
#include "orbitcalc/partition.hpp"

namespace orbitcalc {

/// Formal tag telling apart the two orbits sharing a very even Jordan type in family D.
/// The tags are symmetric: nothing in this library binds I or II to a matrix representative.
enum class VeryEvenLabel { I, II };

inline const char* str(VeryEvenLabel l) { return l == VeryEvenLabel::I ? "I" : "II"; }

class NilpotentOrbit {
public:
    NilpotentOrbit(Algebra algebra, Partition jordanType,
                   std::optional<VeryEvenLabel> label = std::nullopt)
        : algebra_(algebra), jordan_(std::move(jordanType)), label_(label) {
        if (jordan_.total() != algebra_.naturalDim())
            throw std::invalid_argument("orbit: partition of " + std::to_string(jordan_.total()) +
                                        " does not fit " + algebra_.matrixName());
        if (auto eps = algebra_.epsilon(); eps && !isAdmissible(jordan_, *eps))
            throw std::invalid_argument("orbit: partition [" + jordan_.str() +
                                        "] is not admissible in " + algebra_.matrixName());
        const bool wantsLabel = algebra_.family() == Family::D && isVeryEven(jordan_);
        if (wantsLabel != label_.has_value())
            throw std::invalid_argument(
                wantsLabel ? "orbit: very even partition in family D requires a label I or II"
                           : "orbit: label only allowed for very even partitions in family D");
    }

    const Algebra& algebra() const { return algebra_; }
    const Partition& jordanType() const { return jordan_; }
    std::optional<VeryEvenLabel> veryEvenLabel() const { return label_; }

    bool isZeroOrbit() const { return jordan_.largest() <= 1; }

    /// "C2:[2,1^2]" or "D4:[4^2]/I".
    std::string str() const {
        std::string out = algebra_.name() + ":[" + jordan_.str() + "]";
        if (label_) {
            out += '/';
            out += orbitcalc::str(*label_);
        }
        return out;
    }

    auto operator<=>(const NilpotentOrbit&) const = default;

private:
    Algebra algebra_;
    Partition jordan_;
    std::optional<VeryEvenLabel> label_;
};

/// The orbits attached to one Jordan type: two labelled ones for a very even
/// partition in family D, otherwise exactly one.
inline std::vector<NilpotentOrbit> orbitsOf(const Algebra& a, const Partition& d) {
    if (a.family() == Family::D && isVeryEven(d)) {
        return {NilpotentOrbit(a, d, VeryEvenLabel::I), NilpotentOrbit(a, d, VeryEvenLabel::II)};
    }
    return {NilpotentOrbit(a, d)};
}

/// All nilpotent orbits, partitions in descending lexicographic order, I before II.
inline std::vector<NilpotentOrbit> enumerateOrbits(const Algebra& a) {
    const auto partitions = a.family() == Family::A
                                ? enumeratePartitions(a.naturalDim())
                                : enumerateAdmissible(a.naturalDim(), *a.epsilon());
    std::vector<NilpotentOrbit> out;
    for (const auto& d : partitions) {
        for (auto& o : orbitsOf(a, d)) out.push_back(std::move(o));
    }
    return out;
}

/// dim of the adjoint orbit with Jordan type d (label-independent).
inline int orbitDimension(Family family, const Partition& d) {
    const int m = d.total();
    const Partition t = transpose(d);
    int sumSq = 0;
    for (int x : t.parts()) sumSq += x * x;
    int oddParts = 0;
    for (int x : d.parts()) {
        if (x % 2 == 1) ++oddParts;
    }
    switch (family) {
        case Family::A: return m * m - sumSq;
        case Family::B:
        case Family::D: return (m * m - m) / 2 - (sumSq - oddParts) / 2;
        case Family::C: return (m * m + m) / 2 - (sumSq + oddParts) / 2;
    }
    return 0;
}

inline int orbitDimension(const NilpotentOrbit& o) {
    return orbitDimension(o.algebra().family(), o.jordanType());
}

/// The multiset {d_i-1, d_i-3, ..., -d_i+1} over all parts, sorted non-increasing.
/// These are the eigenvalues of the semisimple element h of a Jacobson-Morozov
/// sl(2)-triple through a representative of the orbit.
inline std::vector<int> exponentSequence(const Partition& d) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(d.total()));
    for (int p : d.parts()) {
        for (int e = p - 1; e >= -p + 1; e -= 2) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

struct WeightedDynkinDiagram {
    Algebra algebra;
    std::vector<int> labels;  // one per simple root, each in {0,1,2}

    auto operator<=>(const WeightedDynkinDiagram&) const = default;
};

/// Labels alpha(h) of the dominant representative h = diag(sorted exponents).
inline WeightedDynkinDiagram weightedDynkin(const NilpotentOrbit& o) {
    const Algebra& a = o.algebra();
    const int n = a.rank();
    if (n < 1 || (a.family() == Family::D && n < 2))
        throw std::invalid_argument("weightedDynkin: degenerate algebra " + a.name());
    const std::vector<int> h = exponentSequence(o.jordanType());
    std::vector<int> labels;
    labels.reserve(static_cast<size_t>(n));
    switch (a.family()) {
        case Family::A:
            for (int i = 0; i + 1 <= n; ++i) labels.push_back(h[i] - h[i + 1]);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
            labels.push_back(h[n - 1]);  // short node e_n
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
            labels.push_back(2 * h[n - 1]);  // long node 2e_n
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) labels.push_back(h[i] - h[i + 1]);
            labels.push_back(h[n - 2] - h[n - 1]);  // fork e_{n-1}-e_n
            labels.push_back(h[n - 2] + h[n - 1]);  // fork e_{n-1}+e_n
            break;
    }
    return {a, std::move(labels)};
}

/// Block sizes of an isotropic flag: palindromic for B/C/D, with an interior
/// zero permitted only as the middle block (a Lagrangian coincidence).
struct FlagType {
    std::vector<int> blocks;

    int total() const {
        int s = 0;
        for (int b : blocks) s += b;
        return s;
    }

    bool isPalindromic() const {
        const size_t n = blocks.size();
        for (size_t i = 0; i < n / 2; ++i) {
            if (blocks[i] != blocks[n - 1 - i]) return false;
        }
        return true;
    }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(blocks[i]);
        }
        return out + ")";
    }

    auto operator<=>(const FlagType&) const = default;
};

/// Flag type of the Jacobson-Morozov parabolic: multiplicities of the distinct
/// values in the sorted exponent sequence.
inline FlagType jmFlagType(const NilpotentOrbit& o) {
    const std::vector<int> ex = exponentSequence(o.jordanType());
    std::vector<int> blocks;
    for (size_t i = 0; i < ex.size();) {
        size_t j = i;
        while (j < ex.size() && ex[j] == ex[i]) ++j;
        blocks.push_back(static_cast<int>(j - i));
        i = j;
    }
    return {std::move(blocks)};
}

/// b2 of G/P for the Jacobson-Morozov parabolic of a full-members orbit in
/// family B/C/D: k-1 for k the largest part, except k in family D when the
/// flag has the (p_1,...,p_{k-1}; 2; p_{k-1},...,p_1) shape.
inline int jmPicardNumber(const NilpotentOrbit& o) {
    if (o.algebra().family() == Family::A)
        throw std::invalid_argument("jmPicardNumber: family B, C or D required");
    const Partition& d = o.jordanType();
    if (!hasFullMembers(d))
        throw std::invalid_argument("jmPicardNumber: partition [" + d.str() +
                                    "] does not have full members");
    const int k = d.largest();
    if (o.algebra().family() == Family::D) {
        const FlagType flag = jmFlagType(o);
        const int l = static_cast<int>(flag.blocks.size());
        if (l == 2 * k - 1 && flag.blocks[static_cast<size_t>(l - 1) / 2] == 2) return k;
    }
    return k - 1;
}

}  // namespace orbitcalc
