#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orbitcalc/partition.hpp"

namespace orbitcalc {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline char letter(Family f) { return static_cast<char>(f); }

/// A classical simple Lie algebra given by family and rank.
///
/// User-facing construction (parseAlgebra) enforces A,B,C >= 1 and D >= 2.
/// The constructor itself also accepts the degenerate ranks B0 = so(1),
/// C0 = sp(0), D0 = so(0) and D1 = so(2): peel chains legitimately land
/// there and every formula below extends to them verbatim.
class Algebra {
public:
    Algebra(Family family, int rank) : family_(family), rank_(rank) {
        if (rank < 0 || (family == Family::A && rank < 1))
            throw std::invalid_argument("invalid algebra rank");
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// Dimension m of the natural representation.
    int naturalDim() const {
        switch (family_) {
            case Family::A: return rank_ + 1;
            case Family::B: return 2 * rank_ + 1;
            case Family::C: return 2 * rank_;
            case Family::D: return 2 * rank_;
        }
        return 0;
    }

    std::optional<Epsilon> epsilon() const {
        switch (family_) {
            case Family::A: return std::nullopt;
            case Family::B: return Epsilon::orthogonal;
            case Family::C: return Epsilon::symplectic;
            case Family::D: return Epsilon::orthogonal;
        }
        return std::nullopt;
    }

    /// Dimension of the Lie algebra.
    int dim() const {
        const int n = rank_;
        switch (family_) {
            case Family::A: return n * n + 2 * n;
            case Family::B: return 2 * n * n + n;
            case Family::C: return 2 * n * n + n;
            case Family::D: return 2 * n * n - n;
        }
        return 0;
    }

    bool isZero() const { return dim() == 0; }

    std::string name() const { return std::string(1, letter(family_)) + std::to_string(rank_); }

    std::string matrixName() const {
        switch (family_) {
            case Family::A: return "sl(" + std::to_string(naturalDim()) + ")";
            case Family::B:
            case Family::D: return "so(" + std::to_string(naturalDim()) + ")";
            case Family::C: return "sp(" + std::to_string(naturalDim()) + ")";
        }
        return {};
    }

    auto operator<=>(const Algebra&) const = default;

private:
    Family family_;
    int rank_;
};

/// Parses "C6", "B3", "D4", "A3" or the aliases "sp12", "so13", "so8", "sl4"
/// (the number in an alias is the natural-representation dimension).
inline Algebra parseAlgebra(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    auto fail = [&]() -> Algebra {
        throw std::invalid_argument("unrecognized algebra \"" + s +
                                    "\" (expected e.g. C6, B3, D4, A3, sp12, so13, sl4)");
    };
    auto number = [&](size_t from) {
        if (from >= s.size()) fail();
        long v = 0;
        for (size_t i = from; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw std::invalid_argument("algebra rank too large");
        }
        return static_cast<int>(v);
    };
    auto validated = [](Family f, int rank) {
        const int minRank = (f == Family::D) ? 2 : 1;
        if (rank < minRank)
            throw std::invalid_argument("algebra " + std::string(1, letter(f)) +
                                        std::to_string(rank) + " is below the minimal rank " +
                                        std::to_string(minRank));
        return Algebra(f, rank);
    };
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'B' || s[0] == 'C' || s[0] == 'D'))
        return validated(static_cast<Family>(s[0]), number(1));
    if (s.rfind("sl", 0) == 0) {
        const int m = number(2);
        if (m < 2) throw std::invalid_argument("sl(m) requires m >= 2");
        return validated(Family::A, m - 1);
    }
    if (s.rfind("sp", 0) == 0) {
        const int m = number(2);
        if (m % 2 == 1) throw std::invalid_argument("sp(m) requires even m");
        return validated(Family::C, m / 2);
    }
    if (s.rfind("so", 0) == 0) {
        const int m = number(2);
        return m % 2 == 1 ? validated(Family::B, (m - 1) / 2) : validated(Family::D, m / 2);
    }
    return fail();
}

/// The inner algebra g' of the Levi gl(r) + g' in a family-B/C/D ambient.
inline Algebra innerAlgebra(const Algebra& ambient, int r) {
    if (ambient.family() == Family::A)
        throw std::invalid_argument("innerAlgebra: not defined for family A");
    const int m = ambient.naturalDim() - 2 * r;
    if (r < 1 || m < 0) throw std::invalid_argument("innerAlgebra: gl block too large");
    switch (ambient.family()) {
        case Family::B: return Algebra(Family::B, (m - 1) / 2);
        case Family::C: return Algebra(Family::C, m / 2);
        default: return Algebra(Family::D, m / 2);
    }
}

inline int glDim(int r) { return r * r; }

/// dim of the Levi gl(r) + inner inside a B/C/D ambient.
inline int leviDim(const Algebra& ambient, int r) {
    return glDim(r) + innerAlgebra(ambient, r).dim();
}

}  // namespace orbitcalc
