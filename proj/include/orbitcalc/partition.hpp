#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitcalc {

/// Sign distinguishing the orthogonal (+1) and symplectic (-1) admissibility rules.
enum class Epsilon : int { orthogonal = +1, symplectic = -1 };

inline int sign(Epsilon e) { return static_cast<int>(e); }
inline Epsilon flipped(Epsilon e) {
    return e == Epsilon::orthogonal ? Epsilon::symplectic : Epsilon::orthogonal;
}

/// Thrown when a computation detects a broken internal invariant (as opposed
/// to bad user input, which is reported with std::invalid_argument).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A partition: weakly decreasing positive integers. Zero parts are never stored.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    /// Sum of all parts.
    int total() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// i-th part (0-based); 0 beyond the end.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    struct Run {
        int value;
        int multiplicity;
        auto operator<=>(const Run&) const = default;
    };

    /// Exponent view: distinct parts d1 > ... > dk with multiplicities.
    std::vector<Run> runs() const {
        std::vector<Run> out;
        for (int p : parts_) {
            if (!out.empty() && out.back().value == p) {
                ++out.back().multiplicity;
            } else {
                out.push_back({p, 1});
            }
        }
        return out;
    }

    static Partition fromRuns(const std::vector<Run>& runs) {
        std::vector<int> parts;
        for (const auto& r : runs) {
            for (int i = 0; i < r.multiplicity; ++i) parts.push_back(r.value);
        }
        return Partition(std::move(parts));
    }

    /// True iff e occurs as a part.
    bool hasMember(int e) const {
        return std::find(parts_.begin(), parts_.end(), e) != parts_.end();
    }

    /// Canonical text form: "6,3^2" (exponents shown only when > 1), "" when empty.
    std::string str() const {
        std::string out;
        for (const auto& r : runs()) {
            if (!out.empty()) out += ',';
            out += std::to_string(r.value);
            if (r.multiplicity > 1) {
                out += '^';
                out += std::to_string(r.multiplicity);
            }
        }
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '[' << p.str() << ']';
}

/// Column-length partition of the Young diagram. Involutive.
inline Partition transpose(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(p.largest()));
    for (int j = 1; j <= p.largest(); ++j) {
        int h = 0;
        for (int x : p.parts()) {
            if (x >= j) ++h;
            else break;
        }
        cols.push_back(h);
    }
    return Partition(std::move(cols));
}

/// Dominance order: every prefix sum of d is >= the one of f. Requires equal totals.
inline bool dominates(const Partition& d, const Partition& f) {
    if (d.total() != f.total())
        throw std::invalid_argument("dominates: partitions of different totals");
    const int n = std::max(d.length(), f.length());
    int sd = 0, sf = 0;
    for (int i = 0; i < n; ++i) {
        sd += d.part(i);
        sf += f.part(i);
        if (sd < sf) return false;
    }
    return true;
}

/// eps=+1: every even part has even multiplicity; eps=-1: every odd part has even multiplicity.
inline bool isAdmissible(const Partition& p, Epsilon eps) {
    for (const auto& r : p.runs()) {
        const bool constrained =
            (eps == Epsilon::orthogonal) ? (r.value % 2 == 0) : (r.value % 2 == 1);
        if (constrained && r.multiplicity % 2 == 1) return false;
    }
    return true;
}

/// All parts even, each with even multiplicity. (The empty partition is not very even.)
inline bool isVeryEven(const Partition& p) {
    if (p.empty()) return false;
    for (const auto& r : p.runs()) {
        if (r.value % 2 == 1 || r.multiplicity % 2 == 1) return false;
    }
    return true;
}

/// True iff every integer 1..d1 occurs as a part.
inline bool hasFullMembers(const Partition& p) {
    for (int j = 1; j <= p.largest(); ++j) {
        if (!p.hasMember(j)) return false;
    }
    return true;
}

/// The dominance-maximum of all eps-admissible partitions dominated by p.
/// Greedy: repeatedly locate the largest wrong-parity part with odd multiplicity,
/// shrink its last copy by one box and push the box down to the first room below.
inline Partition collapse(const Partition& p, Epsilon eps) {
    if (eps == Epsilon::symplectic && p.total() % 2 == 1)
        throw std::invalid_argument("collapse: no symplectic partition of an odd total exists");
    std::vector<int> q = p.parts();
    for (;;) {
        int bad = 0;
        {
            int i = 0;
            const int n = static_cast<int>(q.size());
            while (i < n) {
                int j = i;
                while (j < n && q[j] == q[i]) ++j;
                const bool constrained = (eps == Epsilon::orthogonal) ? (q[i] % 2 == 0)
                                                                      : (q[i] % 2 == 1);
                if (constrained && (j - i) % 2 == 1) {
                    bad = q[i];
                    break;
                }
                i = j;
            }
        }
        if (bad == 0) break;
        int last = -1;
        for (int i = 0; i < static_cast<int>(q.size()); ++i) {
            if (q[i] == bad) last = i;
        }
        --q[last];
        int dest = -1;
        for (int i = last + 1; i < static_cast<int>(q.size()); ++i) {
            if (q[i] < bad - 1) {
                dest = i;
                break;
            }
        }
        if (dest >= 0) ++q[dest];
        else q.push_back(1);
        q.erase(std::remove(q.begin(), q.end(), 0), q.end());
    }
    return Partition(std::move(q));
}

namespace detail {

inline void genPartitions(int m, int maxPart, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int first = std::min(m, maxPart); first >= 1; --first) {
        acc.push_back(first);
        genPartitions(m - first, first, acc, out);
        acc.pop_back();
    }
}

// Descending run-by-run generation under the eps multiplicity-parity rule.
inline void genAdmissible(int m, int maxPart, Epsilon eps, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int v = std::min(m, maxPart); v >= 1; --v) {
        const bool constrained =
            (eps == Epsilon::orthogonal) ? (v % 2 == 0) : (v % 2 == 1);
        const int step = constrained ? 2 : 1;
        const int smax = m / v;
        for (int s = smax - (constrained && smax % 2 == 1 ? 1 : 0); s >= step; s -= step) {
            for (int i = 0; i < s; ++i) acc.push_back(v);
            genAdmissible(m - v * s, v - 1, eps, acc, out);
            for (int i = 0; i < s; ++i) acc.pop_back();
        }
    }
}

}  // namespace detail

/// All partitions of m in descending lexicographic order.
inline std::vector<Partition> enumeratePartitions(int m) {
    if (m < 0) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::genPartitions(m, m == 0 ? 1 : m, acc, out);
    return out;
}

/// All eps-admissible partitions of m in descending lexicographic order.
/// Empty for eps=-1 with m odd.
inline std::vector<Partition> enumerateAdmissible(int m, Epsilon eps) {
    if (m < 0) return {};
    if (m == 0) return {Partition()};
    if (eps == Epsilon::symplectic && m % 2 == 1) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::genAdmissible(m, m, eps, acc, out);
    return out;
}

/// Parses "6,3,3" or "6,3^2" (whitespace ignored). Out-of-order parts are
/// sorted with a warning written to *warn when given.
inline Partition parsePartition(std::string_view text, std::ostream* warn = nullptr) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty partition text");
    std::vector<int> parts;
    size_t pos = 0;
    auto readInt = [&](const char* what) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw std::invalid_argument(std::string("malformed partition: expected ") + what +
                                        " in \"" + s + "\"");
        long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw std::invalid_argument("partition entry too large");
        }
        return static_cast<int>(v);
    };
    for (;;) {
        const int value = readInt("a part");
        if (value == 0) throw std::invalid_argument("partition parts must be positive");
        int mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            mult = readInt("an exponent");
            if (mult == 0) throw std::invalid_argument("partition exponents must be positive");
        }
        for (int i = 0; i < mult; ++i) parts.push_back(value);
        if (pos == s.size()) break;
        if (s[pos] != ',')
            throw std::invalid_argument("malformed partition: unexpected '" +
                                        std::string(1, s[pos]) + "' in \"" + s + "\"");
        ++pos;
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()) && warn) {
        *warn << "warning: partition \"" << s << "\" reordered to canonical weakly-decreasing form\n";
    }
    return Partition(std::move(parts));
}

}  // namespace orbitcalc
