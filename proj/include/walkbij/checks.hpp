#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ballot.hpp"
#include "census.hpp"
#include "rootops.hpp"
#include "rootops_nd.hpp"
#include "series.hpp"

namespace walkbij {

// Exhaustively checks the bijection from walks ending at 0 or 1 onto positive
// walks of the same length: injectivity, surjectivity against the DP count,
// preservation of length and neutral count, the end-point law
// end' = 2*depth + end, and the two-sided inverse.
inline VerificationReport check_theorem1(int length, const Alphabet& alphabet) {
    BijectionCheck<Walk1D, Walk1D> check;
    check.name = "theorem1 len=" + std::to_string(length) + " t=" + std::to_string(alphabet.t);
    check.for_each_domain = [length, alphabet](const std::function<void(const Walk1D&)>& visit) {
        for_each_walk(length, alphabet, [&](const Walk1D& w) {
            if (w.is_almost_recurrent()) visit(w);
        });
    };
    check.map = [](const Walk1D& w) { return theorem1_forward(w); };
    check.in_codomain = [](const Walk1D& w) { return w.is_positive(); };
    check.describe_in = [](const Walk1D& w) { return format_walk(w); };
    check.key_out = [](const Walk1D& w) { return format_walk(w); };
    check.codomain_size = count_walks(length, alphabet, /*positive=*/true);
    check.preserved = {
        {"length", [](const Walk1D& x, const Walk1D& y) { return x.size() == y.size(); }},
        {"neutral-count",
         [](const Walk1D& x, const Walk1D& y) { return x.neutral_count() == y.neutral_count(); }},
        {"endpoint-law",
         [](const Walk1D& x, const Walk1D& y) { return y.end() == 2 * x.depth() + x.end(); }},
        {"inverse-roundtrip",
         [](const Walk1D& x, const Walk1D& y) { return theorem1_inverse(y) == x; }},
    };
    return run_bijection_check(check);
}

// Per-coordinate version over a step set: bijection from walks ending in
// {0,1}^n onto positive-orthant walks, with coordinate-order independence.
inline VerificationReport check_theorem2(int length, std::shared_ptr<const StepSet> set) {
    const int n = set->dimension();
    std::vector<int> reversed;
    for (int c = n; c-- > 0;) reversed.push_back(c);

    BijectionCheck<WalkND, WalkND> check;
    check.name = "theorem2 len=" + std::to_string(length);
    check.for_each_domain = [length, set](const std::function<void(const WalkND&)>& visit) {
        for_each_walk_nd(length, set, [&](const WalkND& w) {
            if (w.ends_in_unit_cube()) visit(w);
        });
    };
    check.map = [](const WalkND& w) { return theorem2_forward(w); };
    check.in_codomain = [](const WalkND& w) { return w.in_positive_orthant(); };
    check.describe_in = [](const WalkND& w) { return format_walk_nd(w); };
    check.key_out = [](const WalkND& w) { return format_walk_nd(w); };
    check.codomain_size = count_walks_nd(length, *set, /*positive_orthant=*/true);
    check.preserved = {
        {"length", [](const WalkND& x, const WalkND& y) { return x.size() == y.size(); }},
        {"order-independence",
         [reversed](const WalkND& x, const WalkND& y) {
             return theorem2_forward(x, reversed) == y;
         }},
        {"inverse-roundtrip",
         [](const WalkND& x, const WalkND& y) { return theorem2_inverse(y) == x; }},
    };
    return run_bijection_check(check);
}

namespace detail {

// Ugly sequences of length mu, grouped by the number of votes for A
// (only classes where A wins).
inline std::vector<std::pair<int, std::vector<BallotSequence>>> ugly_by_votes(int mu) {
    std::vector<std::pair<int, std::vector<BallotSequence>>> groups;
    for (int alpha = mu / 2 + 1; alpha <= mu; ++alpha) groups.emplace_back(alpha, std::vector<BallotSequence>{});
    for_each_ballot(mu, [&](const BallotSequence& s) {
        if (classify_ballot(s) != Scenario::Ugly) return;
        int alpha = s.count_a();
        if (2 * alpha <= mu) return; // A does not win
        groups[static_cast<std::size_t>(alpha - mu / 2 - 1)].second.push_back(s);
    });
    return groups;
}

} // namespace detail

// One ugly -> bad bijection, checked per vote split (alpha, beta) with
// alpha > beta and merged into a single report. Codomain sizes are the
// binomial counts of bad sequences, not enumerated.
inline VerificationReport check_ballot_map(const std::string& map_name, int mu) {
    const UglyToBadMap& f = find_ugly_to_bad(map_name);
    const bool with_inverse = map_name == "andre";
    std::vector<VerificationReport> parts;
    if (mu >= 1) {
        for (const auto& [alpha, uglies] : detail::ugly_by_votes(mu)) {
            BijectionCheck<BallotSequence, BallotSequence> check;
            check.name = map_name;
            const std::vector<BallotSequence>* domain = &uglies;
            check.for_each_domain =
                [domain](const std::function<void(const BallotSequence&)>& visit) {
                    for (const BallotSequence& s : *domain) visit(s);
                };
            check.map = f;
            const int want_a = alpha;
            check.in_codomain = [want_a](const BallotSequence& s) {
                return classify_ballot(s) == Scenario::Bad && s.count_a() == want_a;
            };
            check.describe_in = [](const BallotSequence& s) { return s.str(); };
            check.key_out = [](const BallotSequence& s) { return s.str(); };
            check.codomain_size = binomial(mu - 1, alpha); // bad sequences with alpha votes for A
            check.preserved = {
                {"vote-counts", [](const BallotSequence& x, const BallotSequence& y) {
                     return x.count_a() == y.count_a() && x.size() == y.size();
                 }},
            };
            if (with_inverse)
                check.preserved.emplace_back("inverse-roundtrip",
                                             [](const BallotSequence& x, const BallotSequence& y) {
                                                 return andre_inverse(y) == x;
                                             });
            parts.push_back(run_bijection_check(check));
        }
    }
    return merge_reports(map_name + " len=" + std::to_string(mu), parts);
}

// Iteration lifting of a registered ugly -> bad bijection: a bijection from
// the non-bad sequences with final margin 1 or 2 onto the good sequences of
// the same length, plus the pointwise iteration-count laws where known.
inline VerificationReport check_lift(const std::string& map_name, int mu) {
    const UglyToBadMap& f = find_ugly_to_bad(map_name);

    BijectionCheck<BallotSequence, LiftResult> check;
    check.name = "lift:" + map_name + " len=" + std::to_string(mu);
    check.for_each_domain = [mu](const std::function<void(const BallotSequence&)>& visit) {
        for_each_ballot(mu, [&](const BallotSequence& s) {
            int m = s.final_margin();
            if ((m == 1 || m == 2) && classify_ballot(s) != Scenario::Bad) visit(s);
        });
    };
    check.map = [&f](const BallotSequence& s) { return lift(f, s); };
    check.in_codomain = [](const LiftResult& r) {
        return classify_ballot(r.sequence) == Scenario::Good;
    };
    check.describe_in = [](const BallotSequence& s) { return s.str(); };
    check.key_out = [](const LiftResult& r) { return r.sequence.str(); };
    BigInt good_total = 0;
    for (int alpha = mu / 2 + 1; alpha <= mu; ++alpha)
        good_total += binomial(mu - 1, alpha - 1) - binomial(mu - 1, alpha);
    check.codomain_size = good_total;
    check.preserved = {
        {"length",
         [](const BallotSequence& x, const LiftResult& y) { return x.size() == y.sequence.size(); }},
    };
    if (map_name == "raise-ballot" || map_name == "andre")
        check.preserved.emplace_back("iterations=depth",
                                     [](const BallotSequence& x, const LiftResult& y) {
                                         return y.iterations == strip(x).depth();
                                     });
    if (map_name == "reflect-last")
        check.preserved.emplace_back("iterations=altvisits",
                                     [](const BallotSequence& x, const LiftResult& y) {
                                         return y.iterations == alternating_visits(strip(x));
                                     });
    if (map_name == "raise-ballot")
        check.preserved.emplace_back("matches-theorem1",
                                     [](const BallotSequence& x, const LiftResult& y) {
                                         return y.sequence ==
                                                unstrip(Vote::A, theorem1_forward(strip(x)));
                                     });
    return run_bijection_check(check);
}

// Odd-length sequences won by A onto all sequences one vote shorter, with the
// inverse round trip. Even lengths have an empty domain and pass trivially.
inline VerificationReport check_footnote(int mu) {
    if (mu % 2 == 0) {
        VerificationReport rep;
        rep.name = "footnote len=" + std::to_string(mu) + " (even, empty domain)";
        return rep;
    }
    check_length_cap(mu, enumeration_caps().ballot, "ballot sweep");
    BijectionCheck<BallotSequence, BallotSequence> check;
    check.name = "footnote len=" + std::to_string(mu);
    check.for_each_domain = [mu](const std::function<void(const BallotSequence&)>& visit) {
        for_each_ballot(mu, [&](const BallotSequence& s) {
            if (s.final_margin() > 0) visit(s);
        });
    };
    check.map = [](const BallotSequence& s) { return footnote_bijection(s); };
    const std::size_t want = static_cast<std::size_t>(mu - 1);
    check.in_codomain = [want](const BallotSequence& s) { return s.size() == want; };
    check.describe_in = [](const BallotSequence& s) { return s.str(); };
    check.key_out = [](const BallotSequence& s) { return s.str(); };
    check.codomain_size = ipow(2, static_cast<unsigned>(mu - 1));
    check.preserved = {
        {"inverse-roundtrip", [](const BallotSequence& x, const BallotSequence& y) {
             return footnote_inverse(y) == x;
         }},
    };
    return run_bijection_check(check);
}

// The convolution pairing: (recurrent walk of length i, positive walk of
// length l-i ending at an even number), over all i, onto walks of length l+1
// ending at a positive odd number.
inline VerificationReport check_concat(int l, const Alphabet& alphabet) {
    check_length_cap(l, enumeration_caps().cap_for(alphabet), "1-D sweep");
    using Pair = std::pair<Walk1D, Walk1D>;
    std::vector<std::vector<Walk1D>> recurrent(static_cast<std::size_t>(l) + 1);
    std::vector<std::vector<Walk1D>> positive_even(static_cast<std::size_t>(l) + 1);
    for (int i = 0; i <= l; ++i) {
        recurrent[static_cast<std::size_t>(i)] =
            collect_walks(i, alphabet, [](const Walk1D& w) { return w.is_recurrent(); });
        positive_even[static_cast<std::size_t>(i)] = collect_walks(i, alphabet, [](const Walk1D& w) {
            return w.is_positive() && w.end() % 2 == 0;
        });
    }

    BijectionCheck<Pair, Walk1D> check;
    check.name = "concat len=" + std::to_string(l) + " t=" + std::to_string(alphabet.t);
    check.for_each_domain = [&](const std::function<void(const Pair&)>& visit) {
        for (int i = 0; i <= l; ++i)
            for (const Walk1D& r : recurrent[static_cast<std::size_t>(i)])
                for (const Walk1D& p : positive_even[static_cast<std::size_t>(l - i)])
                    visit({r, p});
    };
    check.map = [](const Pair& rp) { return concat_with_upstep(rp.first, rp.second); };
    check.in_codomain = [l](const Walk1D& w) {
        return static_cast<int>(w.size()) == l + 1 && w.end() > 0 && w.end() % 2 == 1;
    };
    check.describe_in = [](const Pair& rp) {
        return format_walk(rp.first) + "|" + format_walk(rp.second);
    };
    check.key_out = [](const Walk1D& w) { return format_walk(w); };
    BigInt odd_positive = 0;
    for (int e = 1; e <= l + 1; e += 2) odd_positive += count_walks(l + 1, alphabet, false, e);
    check.codomain_size = odd_positive;
    check.preserved = {
        {"split-roundtrip", [](const Pair& rp, const Walk1D& y) {
             return split_at_last_up_from_zero(y) == rp;
         }},
    };
    return run_bijection_check(check);
}

// Distribution of the backward alternating-visit statistic over binary walks
// of length n ending at n mod 2: the at-least-d counts are C(n, ceil(n/2)+d)
// and the exact-d counts are consecutive differences.
inline VerificationReport check_corollary(int n) {
    Histogram hist = distribution("altvisits", Population::AlmostRecurrent, n, Alphabet{0});
    VerificationReport rep = detail::identity_report("corollary len=" + std::to_string(n));
    const int half_up = (n + 1) / 2;
    for (long long d = 0; d <= n / 2; ++d) {
        BigInt at_least = 0;
        for (const auto& [v, c] : hist)
            if (v >= d) at_least += c;
        BigInt expect = binomial(n, half_up + d);
        detail::identity_case(rep, at_least == expect,
                              "at-least d=" + std::to_string(d) + ": got " + at_least.str() +
                                  " expected " + expect.str());
        BigInt exact = 0;
        if (auto it = hist.find(d); it != hist.end()) exact = it->second;
        BigInt expect_exact = expect - binomial(n, half_up + d + 1);
        detail::identity_case(rep, exact == expect_exact,
                              "exact d=" + std::to_string(d) + ": got " + exact.str() +
                                  " expected " + expect_exact.str());
    }
    detail::identity_case(rep, hist.empty() || hist.rbegin()->first <= n / 2,
                          "a walk exceeds the maximal visit count");
    return rep;
}

inline constexpr int kStatsEqualityCap = 16;

// The depth, alternating-visit, and every lift-iteration statistic have the
// same distribution over binary walks ending at 0 or 1 (histogram equality,
// not pointwise equality).
inline VerificationReport check_stats_equalities(int n) {
    check_length_cap(n, kStatsEqualityCap, "statistic-histogram sweep");
    const Alphabet binary{0};
    Histogram depth = distribution("depth", Population::AlmostRecurrent, n, binary);
    VerificationReport rep = detail::identity_report("stats-equalities len=" + std::to_string(n));
    Histogram alt = distribution("altvisits", Population::AlmostRecurrent, n, binary);
    detail::identity_case(rep, alt == depth, "altvisits histogram differs from depth");
    for (const auto& [name, _] : ugly_to_bad_registry()) {
        Histogram h = distribution("lift-iters:" + name, Population::AlmostRecurrent, n, binary);
        detail::identity_case(rep, h == depth, "lift-iters:" + name + " histogram differs from depth");
    }
    return rep;
}

// ballot_counts against exhaustive enumeration, for every winning split of mu
// votes; bad and ugly classes must also carry the non-winning counts right,
// so every classified sequence is bucketed.
inline VerificationReport check_ballot_counts(int mu) {
    check_length_cap(mu, enumeration_caps().ballot, "ballot sweep");
    VerificationReport rep = detail::identity_report("ballot-counts len=" + std::to_string(mu));
    std::map<std::pair<int, Scenario>, BigInt> buckets;
    for_each_ballot(mu, [&](const BallotSequence& s) {
        if (mu == 0) return;
        buckets[{s.count_a(), classify_ballot(s)}] += 1;
    });
    for (int alpha = mu / 2 + 1; alpha <= mu; ++alpha) {
        BallotCounts expect = ballot_counts(alpha, mu - alpha);
        auto at = [&](Scenario sc) -> BigInt {
            auto it = buckets.find({alpha, sc});
            return it == buckets.end() ? BigInt(0) : it->second;
        };
        BigInt good = at(Scenario::Good), bad = at(Scenario::Bad), ugly = at(Scenario::Ugly);
        bool ok = good == expect.good && bad == expect.bad && ugly == expect.ugly &&
                  good + bad + ugly == expect.total &&
                  Rational(good, expect.total) == expect.probability;
        detail::identity_case(rep, ok,
                              "alpha=" + std::to_string(alpha) + ": enumerated " + good.str() + "/" +
                                  bad.str() + "/" + ugly.str());
    }
    return rep;
}

// The left side of the convolution identity counts walks of length l+1 ending
// at a positive odd number; checked against the DP walk counter.
inline bool eq2_census_agrees(int t, int l) {
    Alphabet alphabet{t};
    BigInt lhs = r_convolution(r_coeffs(t, l), l);
    BigInt odd_positive = 0;
    for (int e = 1; e <= l + 1; e += 2)
        odd_positive += count_walks(l + 1, alphabet, /*positive=*/false, e);
    return lhs == odd_positive;
}

// ---------------------------------------------------------------------------
// Name-based dispatch for the CLI and harnesses.

struct CheckContext {
    Alphabet alphabet{0};
    std::shared_ptr<const StepSet> step_set; // theorem2 only; defaults to {-1,0,1}^2
};

using LengthCheck = std::function<VerificationReport(int)>;

inline std::vector<std::string> check_names() {
    std::vector<std::string> names = {"theorem1", "theorem2", "concat", "footnote",
                                      "corollary", "stats-equalities"};
    for (const auto& [name, _] : ugly_to_bad_registry()) {
        names.push_back(name);
        names.push_back("lift:" + name);
    }
    return names;
}

// Largest admissible --max-len for a named check.
inline int check_length_limit(const std::string& what, const CheckContext& ctx) {
    if (what == "theorem1" || what == "concat") return enumeration_caps().cap_for(ctx.alphabet);
    if (what == "theorem2") {
        if (ctx.step_set) return enumeration_caps().cap_for(*ctx.step_set);
        return enumeration_caps().cap_for(StepSet::full(2));
    }
    if (what == "corollary") return enumeration_caps().cap_for(Alphabet{0});
    if (what == "stats-equalities") return kStatsEqualityCap;
    return enumeration_caps().ballot;
}

inline LengthCheck make_check(const std::string& what, const CheckContext& ctx) {
    if (what == "theorem1") {
        Alphabet a = ctx.alphabet;
        return [a](int len) { return check_theorem1(len, a); };
    }
    if (what == "theorem2") {
        std::shared_ptr<const StepSet> set =
            ctx.step_set ? ctx.step_set : std::make_shared<const StepSet>(StepSet::full(2));
        return [set](int len) { return check_theorem2(len, set); };
    }
    if (what == "concat") {
        Alphabet a = ctx.alphabet;
        return [a](int len) { return check_concat(len, a); };
    }
    if (what == "footnote") return [](int len) { return check_footnote(len); };
    if (what == "corollary") return [](int len) { return check_corollary(len); };
    if (what == "stats-equalities") return [](int len) { return check_stats_equalities(len); };
    if (what.rfind("lift:", 0) == 0) {
        std::string name = what.substr(5);
        find_ugly_to_bad(name); // validate now
        return [name](int len) { return check_lift(name, len); };
    }
    find_ugly_to_bad(what); // validate; throws UnknownMap for anything else
    return [what](int len) { return check_ballot_map(what, len); };
}

} // namespace walkbij
