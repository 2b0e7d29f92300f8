#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ballot.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "walk.hpp"
#include "walk_nd.hpp"

namespace walkbij {

// ---------------------------------------------------------------------------
// Enumeration caps. Exhaustive sweeps refuse lengths whose total walk count
// would exceed these bounds instead of hanging.

struct EnumerationCaps {
    int binary = 20;                      // t = 0: 2^20 walks
    int ternary = 13;                     // t = 1: 3^13 walks
    int quaternary = 10;                  // t = 2
    int other_1d = 8;                     // t >= 3
    std::uint64_t nd_budget = 50'000'000; // total-walk budget for step sets
    int nd_max = 8;
    int ballot = 20;                      // 2^20 vote sequences

    int cap_for(const Alphabet& a) const {
        if (a.t == 0) return binary;
        if (a.t == 1) return ternary;
        if (a.t == 2) return quaternary;
        return other_1d;
    }

    int cap_for(const StepSet& s) const {
        std::uint64_t total = 1;
        int len = 0;
        while (len < nd_max) {
            if (total > nd_budget / s.size()) break;
            total *= s.size();
            ++len;
        }
        return len;
    }
};

inline const EnumerationCaps& enumeration_caps() {
    static const EnumerationCaps caps{};
    return caps;
}

inline void check_length_cap(int length, int cap, const std::string& what) {
    if (length < 0) throw parse_error("negative length");
    if (length > cap)
        throw domain_error(errc::cap_exceeded, what + " length " + std::to_string(length) +
                                                   " exceeds the cap of " + std::to_string(cap));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration, in lexicographic symbol order (U < D < N0 < N1 ...;
// step sets use their canonical member order).

namespace detail {

template <class F>
void for_each_digit_string(int length, int radix, F&& visit) {
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    for (;;) {
        visit(digits);
        int i = length;
        while (i-- > 0) {
            if (++digits[static_cast<std::size_t>(i)] < radix) break;
            digits[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) return;
    }
}

} // namespace detail

template <class F>
void for_each_walk(int length, const Alphabet& alphabet, F&& f) {
    check_length_cap(length, enumeration_caps().cap_for(alphabet), "1-D sweep");
    std::vector<Step1D> steps(static_cast<std::size_t>(length));
    detail::for_each_digit_string(length, alphabet.symbol_count(), [&](const std::vector<int>& digits) {
        for (int i = 0; i < length; ++i)
            steps[static_cast<std::size_t>(i)] = alphabet.symbol(digits[static_cast<std::size_t>(i)]);
        f(Walk1D(steps));
    });
}

template <class F>
void for_each_walk_nd(int length, const std::shared_ptr<const StepSet>& set, F&& f) {
    check_length_cap(length, enumeration_caps().cap_for(*set), "n-D sweep");
    std::vector<StepND> steps(static_cast<std::size_t>(length));
    detail::for_each_digit_string(length, static_cast<int>(set->size()),
                                  [&](const std::vector<int>& digits) {
                                      for (int i = 0; i < length; ++i)
                                          steps[static_cast<std::size_t>(i)] =
                                              set->members()[static_cast<std::size_t>(
                                                  digits[static_cast<std::size_t>(i)])];
                                      f(WalkND(set, steps));
                                  });
}

template <class F>
void for_each_ballot(int length, F&& f) {
    check_length_cap(length, enumeration_caps().ballot, "ballot sweep");
    std::vector<Vote> votes(static_cast<std::size_t>(length), Vote::A);
    detail::for_each_digit_string(length, 2, [&](const std::vector<int>& digits) {
        for (int i = 0; i < length; ++i)
            votes[static_cast<std::size_t>(i)] =
                digits[static_cast<std::size_t>(i)] == 0 ? Vote::A : Vote::B;
        f(BallotSequence(votes));
    });
}

template <class Pred>
std::vector<Walk1D> collect_walks(int length, const Alphabet& alphabet, Pred&& keep) {
    std::vector<Walk1D> out;
    for_each_walk(length, alphabet, [&](const Walk1D& w) {
        if (keep(w)) out.push_back(w);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Exact counting by dynamic programming over heights.

// Number of length-`length` walks over the given alphabet; `positive`
// restricts to walks never visiting -1; `end` fixes the end point.
inline BigInt count_walks(int length, const Alphabet& alphabet, bool positive,
                          std::optional<int> end = std::nullopt) {
    if (length < 0) return 0;
    const int offset = length;
    std::vector<BigInt> cur(static_cast<std::size_t>(2 * length + 1), BigInt(0));
    cur[static_cast<std::size_t>(offset)] = 1;
    for (int step = 0; step < length; ++step) {
        std::vector<BigInt> next(cur.size(), BigInt(0));
        for (int h = -length; h <= length; ++h) {
            const BigInt& ways = cur[static_cast<std::size_t>(h + offset)];
            if (ways == 0) continue;
            for (int delta : {+1, -1, 0}) {
                int to = h + delta;
                if (to < -length || to > length) continue;
                if (positive && to < 0) continue;
                BigInt weight = (delta == 0) ? BigInt(alphabet.t) : BigInt(1);
                if (weight == 0) continue;
                next[static_cast<std::size_t>(to + offset)] += ways * weight;
            }
        }
        cur.swap(next);
    }
    if (end) {
        if (*end < -length || *end > length) return 0;
        return cur[static_cast<std::size_t>(*end + offset)];
    }
    BigInt total = 0;
    for (const BigInt& v : cur) total += v;
    return total;
}

// Same for step sets; `positive_orthant` keeps every coordinate non-negative,
// `end` fixes the end point.
inline BigInt count_walks_nd(int length, const StepSet& set, bool positive_orthant,
                             std::optional<StepND> end = std::nullopt) {
    std::map<std::vector<int>, BigInt> cur;
    cur[std::vector<int>(static_cast<std::size_t>(set.dimension()), 0)] = 1;
    for (int step = 0; step < length; ++step) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [pos, ways] : cur) {
            for (const StepND& s : set.members()) {
                std::vector<int> to = pos;
                bool ok = true;
                for (std::size_t c = 0; c < to.size(); ++c) {
                    to[c] += s[c];
                    if (positive_orthant && to[c] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next[to] += ways;
            }
        }
        cur.swap(next);
    }
    if (end) {
        auto it = cur.find(*end);
        return it == cur.end() ? BigInt(0) : it->second;
    }
    BigInt total = 0;
    for (const auto& [_, ways] : cur) total += ways;
    return total;
}

// ---------------------------------------------------------------------------
// Triangle tables.

enum class TriangleKind { Pascal, Trinomial, Positive };

inline const char* triangle_kind_name(TriangleKind k) {
    switch (k) {
        case TriangleKind::Pascal: return "pascal";
        case TriangleKind::Trinomial: return "trinomial";
        case TriangleKind::Positive: return "positive";
    }
    return "?";
}

// Rows of exact integers. Pascal rows are indexed by k = 0..n; trinomial rows
// by end value -n..n; positive rows by end value (lowest attainable
// non-negative end first, stepping by 2 when t = 0).
class TriangleTable {
public:
    static TriangleTable build(TriangleKind kind, int rows, int t) {
        if (rows < 1) throw parse_error("a table needs at least one row");
        TriangleTable out;
        out.kind_ = kind;
        out.t_ = t;
        switch (kind) {
            case TriangleKind::Pascal: out.build_pascal(rows); break;
            case TriangleKind::Trinomial: out.build_all_walks(rows); break;
            case TriangleKind::Positive: out.build_positive(rows); break;
        }
        return out;
    }

    TriangleKind kind() const { return kind_; }
    int t() const { return t_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<BigInt>& row(int n) const { return rows_[static_cast<std::size_t>(n)]; }

    int first_col(int n) const {
        switch (kind_) {
            case TriangleKind::Pascal: return 0;
            case TriangleKind::Trinomial: return -n;
            case TriangleKind::Positive: return (t_ == 0) ? (n % 2) : 0;
        }
        return 0;
    }

    int col_step() const {
        return (kind_ == TriangleKind::Positive && t_ == 0) ? 2 : 1;
    }

    // Entry at column/end `value` of row n; zero outside the stored range.
    BigInt at(int n, int value) const {
        const auto& r = rows_[static_cast<std::size_t>(n)];
        int offset = value - first_col(n);
        if (offset < 0 || offset % col_step() != 0) return 0;
        int idx = offset / col_step();
        if (idx >= static_cast<int>(r.size())) return 0;
        return r[static_cast<std::size_t>(idx)];
    }

    BigInt row_sum(int n) const {
        BigInt s = 0;
        for (const BigInt& v : rows_[static_cast<std::size_t>(n)]) s += v;
        return s;
    }

private:
    void build_pascal(int rows) {
        rows_.resize(static_cast<std::size_t>(rows));
        for (int n = 0; n < rows; ++n) {
            auto& r = rows_[static_cast<std::size_t>(n)];
            r.assign(static_cast<std::size_t>(n + 1), BigInt(0));
            r.front() = 1;
            r.back() = 1;
            if (n > 0) {
                const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
                for (int k = 1; k < n; ++k)
                    r[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)] +
                                                     prev[static_cast<std::size_t>(k)];
            }
        }
    }

    // All-walk counts by end value, columns -n..n.
    void build_all_walks(int rows) {
        rows_.resize(static_cast<std::size_t>(rows));
        for (int n = 0; n < rows; ++n) {
            auto& r = rows_[static_cast<std::size_t>(n)];
            r.assign(static_cast<std::size_t>(2 * n + 1), BigInt(0));
            if (n == 0) {
                r[0] = 1;
                continue;
            }
            const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
            auto prev_at = [&](int value) -> BigInt {
                if (value < -(n - 1) || value > n - 1) return 0;
                return prev[static_cast<std::size_t>(value + n - 1)];
            };
            for (int v = -n; v <= n; ++v)
                r[static_cast<std::size_t>(v + n)] =
                    prev_at(v - 1) + BigInt(t_) * prev_at(v) + prev_at(v + 1);
        }
    }

    // Positive-walk counts by end value, built twice: once by the bounded
    // recurrence (zero boundary at column -1) and once by subtracting from
    // the all-walks table a copy shifted two units; the constructions must
    // agree entry-wise.
    void build_positive(int rows) {
        TriangleTable all;
        all.kind_ = TriangleKind::Trinomial;
        all.t_ = t_;
        all.build_all_walks(rows);

        rows_.resize(static_cast<std::size_t>(rows));
        std::vector<std::vector<BigInt>> by_recurrence(static_cast<std::size_t>(rows));
        for (int n = 0; n < rows; ++n) {
            // recurrence over non-negative end values only
            auto& rec = by_recurrence[static_cast<std::size_t>(n)];
            rec.assign(static_cast<std::size_t>(n + 1), BigInt(0));
            if (n == 0) {
                rec[0] = 1;
            } else {
                const auto& prev = by_recurrence[static_cast<std::size_t>(n - 1)];
                auto prev_at = [&](int value) -> BigInt {
                    if (value < 0 || value > n - 1) return 0;
                    return prev[static_cast<std::size_t>(value)];
                };
                for (int v = 0; v <= n; ++v)
                    rec[static_cast<std::size_t>(v)] =
                        prev_at(v - 1) + BigInt(t_) * prev_at(v) + prev_at(v + 1);
            }

            // subtraction: all(n, v) - all(n, v+2), which vanishes at v = -1
            if (all.at(n, -1) - all.at(n, 1) != 0)
                throw std::logic_error("shifted subtraction does not vanish at column -1");
            const int step = (t_ == 0) ? 2 : 1;
            const int first = (t_ == 0) ? (n % 2) : 0;
            auto& r = rows_[static_cast<std::size_t>(n)];
            for (int v = first; v <= n; v += step) {
                BigInt sub = all.at(n, v) - all.at(n, v + 2);
                if (sub != rec[static_cast<std::size_t>(v)])
                    throw std::logic_error("triangle constructions disagree at row " +
                                           std::to_string(n) + ", end " + std::to_string(v));
                r.push_back(sub);
            }
        }
    }

    TriangleKind kind_ = TriangleKind::Pascal;
    int t_ = 0;
    std::vector<std::vector<BigInt>> rows_;
};

// ---------------------------------------------------------------------------
// Generic exhaustive bijection checking.

// A check applies `map` to every domain element, verifies that the image
// lies in the codomain, that no two elements collide (seen-set of canonical
// keys), that the number of distinct images equals the independently counted
// codomain size, and that every declared relation between input and output
// holds.
template <class In, class Out>
struct BijectionCheck {
    std::string name;
    std::function<void(const std::function<void(const In&)>&)> for_each_domain;
    std::function<Out(const In&)> map;
    std::function<bool(const Out&)> in_codomain;
    std::function<std::string(const In&)> describe_in;
    std::function<std::string(const Out&)> key_out;
    BigInt codomain_size;
    std::vector<std::pair<std::string, std::function<bool(const In&, const Out&)>>> preserved;
};

template <class In, class Out>
VerificationReport run_bijection_check(const BijectionCheck<In, Out>& check) {
    VerificationReport rep;
    rep.name = check.name;
    rep.codomain_size = check.codomain_size;
    for (const auto& [stat, _] : check.preserved)
        rep.preserved_stats.emplace_back(stat, true);

    std::unordered_set<std::string> image;
    check.for_each_domain([&](const In& x) {
        rep.domain_size += 1;
        Out y = check.map(x);
        if (!check.in_codomain(y)) {
            rep.surjective = false;
            rep.note_counterexample("image escapes codomain at " + check.describe_in(x));
        }
        if (!image.insert(check.key_out(y)).second) {
            rep.injective = false;
            rep.note_counterexample("duplicate image at " + check.describe_in(x));
        }
        for (std::size_t i = 0; i < check.preserved.size(); ++i) {
            if (rep.preserved_stats[i].second && !check.preserved[i].second(x, y)) {
                rep.preserved_stats[i].second = false;
                rep.note_counterexample(check.preserved[i].first + " violated at " +
                                        check.describe_in(x));
            }
        }
    });
    if (BigInt(image.size()) != rep.codomain_size) {
        rep.surjective = false;
        rep.note_counterexample("image has " + std::to_string(image.size()) + " elements, codomain " +
                                rep.codomain_size.str());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Exact statistic histograms.

enum class Population { All, Positive, Recurrent, AlmostRecurrent };

inline Population parse_population(const std::string& name) {
    if (name == "all") return Population::All;
    if (name == "positive") return Population::Positive;
    if (name == "recurrent") return Population::Recurrent;
    if (name == "almost-recurrent") return Population::AlmostRecurrent;
    throw parse_error("unknown population '" + name + "'");
}

inline bool population_contains(Population p, const Walk1D& w) {
    switch (p) {
        case Population::All: return true;
        case Population::Positive: return w.is_positive();
        case Population::Recurrent: return w.is_recurrent();
        case Population::AlmostRecurrent: return w.is_almost_recurrent();
    }
    return false;
}

using Histogram = std::map<long long, BigInt>;

// stat is one of depth, end, altvisits (alternating_visits) or
// lift-iters:<name> (lift-iterations:<name>); the lift statistics view the
// walk as a ballot sequence with a prepended vote for A.
inline Histogram distribution(const std::string& stat, Population population, int length,
                              const Alphabet& alphabet) {
    std::function<long long(const Walk1D&)> value;
    if (stat == "depth") {
        value = [](const Walk1D& w) { return w.depth(); };
    } else if (stat == "end") {
        value = [](const Walk1D& w) { return w.end(); };
    } else if (stat == "altvisits" || stat == "alternating_visits") {
        value = [](const Walk1D& w) { return alternating_visits(w); };
    } else if (stat.rfind("lift-iters:", 0) == 0 || stat.rfind("lift-iterations:", 0) == 0) {
        std::string name = stat.substr(stat.find(':') + 1);
        const UglyToBadMap& f = find_ugly_to_bad(name);
        value = [f](const Walk1D& w) { return lift(f, unstrip(Vote::A, w)).iterations; };
    } else {
        throw domain_error(errc::unknown_stat, "no statistic named '" + stat + "'");
    }

    Histogram hist;
    for_each_walk(length, alphabet, [&](const Walk1D& w) {
        if (population_contains(population, w)) hist[value(w)] += 1;
    });
    return hist;
}

} // namespace walkbij
