#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "rootops.hpp"
#include "walk.hpp"

namespace walkbij {

enum class Vote : char { A = 'A', B = 'B' };

inline Vote other(Vote v) { return v == Vote::A ? Vote::B : Vote::A; }

// good: A leads strictly from the first vote on; bad: B wins the first vote;
// ugly: A wins the first vote but the lead is levelled later.
enum class Scenario { Good, Bad, Ugly };

inline const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Good: return "good";
        case Scenario::Bad: return "bad";
        case Scenario::Ugly: return "ugly";
    }
    return "?";
}

// A sequence of votes for A or B with cached running margins:
// margins()[j] = (#A - #B) among the first j votes.
class BallotSequence {
public:
    BallotSequence() : margins_{0} {}

    explicit BallotSequence(std::vector<Vote> votes) : votes_(std::move(votes)) {
        margins_.resize(votes_.size() + 1);
        margins_[0] = 0;
        for (std::size_t i = 0; i < votes_.size(); ++i)
            margins_[i + 1] = margins_[i] + (votes_[i] == Vote::A ? 1 : -1);
    }

    static BallotSequence parse(std::string_view text) {
        std::vector<Vote> votes;
        votes.reserve(text.size());
        for (char c : text) {
            if (c == 'A') votes.push_back(Vote::A);
            else if (c == 'B') votes.push_back(Vote::B);
            else throw parse_error(std::string("unknown character '") + c + "' in ballot text");
        }
        return BallotSequence(std::move(votes));
    }

    std::string str() const {
        std::string out;
        out.reserve(votes_.size());
        for (Vote v : votes_) out += static_cast<char>(v);
        return out;
    }

    std::size_t size() const { return votes_.size(); }
    bool empty() const { return votes_.empty(); }
    const std::vector<Vote>& votes() const { return votes_; }
    Vote vote(std::size_t i) const { return votes_[i]; }
    const std::vector<int>& margins() const { return margins_; }
    int final_margin() const { return margins_.back(); }
    int count_a() const { return (static_cast<int>(size()) + final_margin()) / 2; }
    int count_b() const { return (static_cast<int>(size()) - final_margin()) / 2; }

    friend bool operator==(const BallotSequence&, const BallotSequence&) = default;

private:
    std::vector<Vote> votes_;
    std::vector<int> margins_;
};

inline Scenario classify_ballot(const BallotSequence& s) {
    if (s.empty()) throw domain_error(errc::empty_sequence, "cannot classify an empty sequence");
    if (s.vote(0) == Vote::B) return Scenario::Bad;
    const std::vector<int>& m = s.margins();
    for (std::size_t j = 2; j < m.size(); ++j)
        if (m[j] <= 0) return Scenario::Ugly;
    return Scenario::Good;
}

// 1-based vote counts j >= 1 at which the margin equals 0.
inline std::vector<std::size_t> margin_zero_times(const BallotSequence& s) {
    std::vector<std::size_t> zeros;
    const std::vector<int>& m = s.margins();
    for (std::size_t j = 1; j < m.size(); ++j)
        if (m[j] == 0) zeros.push_back(j);
    return zeros;
}

// Drop the initial vote and map the remainder A -> up, B -> down.
inline Walk1D strip(const BallotSequence& s) {
    if (s.empty()) throw domain_error(errc::empty_sequence, "cannot strip an empty sequence");
    std::vector<Step1D> steps;
    steps.reserve(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i)
        steps.push_back(s.vote(i) == Vote::A ? up_step() : down_step());
    return Walk1D(std::move(steps));
}

// Inverse of strip for a given initial vote. The walk must be binary.
inline BallotSequence unstrip(Vote first, const Walk1D& w) {
    std::vector<Vote> votes;
    votes.reserve(w.size() + 1);
    votes.push_back(first);
    for (const Step1D& st : w.steps()) {
        if (st.delta == 0)
            throw domain_error(errc::bad_input, "walk contains neutral steps");
        votes.push_back(st.delta > 0 ? Vote::A : Vote::B);
    }
    return BallotSequence(std::move(votes));
}

namespace detail {

inline BallotSequence require_scenario(const BallotSequence& s, Scenario want, errc code) {
    if (classify_ballot(s) != want)
        throw domain_error(code, "sequence '" + s.str() + "' is " +
                                     scenario_name(classify_ballot(s)) + ", expected " +
                                     scenario_name(want));
    return s;
}

// Complement votes [0, count) (A <-> B), keep the rest.
inline BallotSequence complement_prefix(const BallotSequence& s, std::size_t count) {
    std::vector<Vote> votes = s.votes();
    for (std::size_t i = 0; i < count; ++i) votes[i] = other(votes[i]);
    return BallotSequence(std::move(votes));
}

inline BallotSequence with_first_vote(const BallotSequence& s, Vote v) {
    std::vector<Vote> votes = s.votes();
    votes[0] = v;
    return BallotSequence(std::move(votes));
}

} // namespace detail

// Andre's rearrangement: split the ugly sequence just before the vote that
// levels A's lead (the first return of the margin to 0) and concatenate the
// two parts in the opposite order. The result is bad with the same vote
// counts.
inline BallotSequence andre(const BallotSequence& s) {
    detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
    std::size_t z = margin_zero_times(s).front(); // 1-based; the z-th vote is for B
    std::vector<Vote> votes;
    votes.reserve(s.size());
    votes.insert(votes.end(), s.votes().begin() + static_cast<std::ptrdiff_t>(z - 1), s.votes().end());
    votes.insert(votes.end(), s.votes().begin(), s.votes().begin() + static_cast<std::ptrdiff_t>(z - 1));
    return BallotSequence(std::move(votes));
}

// Inverse of andre: the moved initial vote for A is the last vote for A at
// which the margin attains its final value; split there and swap back.
inline BallotSequence andre_inverse(const BallotSequence& s) {
    detail::require_scenario(s, Scenario::Bad, errc::not_bad);
    int ultimate = s.final_margin();
    if (ultimate <= 0) throw domain_error(errc::no_winner, "A does not win '" + s.str() + "'");
    std::size_t z = 0; // 1-based index of the pivot vote
    for (std::size_t j = s.size(); j >= 1; --j) {
        if (s.vote(j - 1) == Vote::A && s.margins()[j] == ultimate) {
            z = j;
            break;
        }
    }
    if (z == 0) // a winning margin is first attained by a vote for A
        throw std::logic_error("no vote for A attains the final margin");
    std::vector<Vote> votes;
    votes.reserve(s.size());
    votes.insert(votes.end(), s.votes().begin() + static_cast<std::ptrdiff_t>(z - 1), s.votes().end());
    votes.insert(votes.end(), s.votes().begin(), s.votes().begin() + static_cast<std::ptrdiff_t>(z - 1));
    return BallotSequence(std::move(votes));
}

// Andre's bijection on stripped sequences: remove the down-step that first
// reaches -1, splitting the walk into Q1 Q2, and return Q2 up Q1.
inline Walk1D andre_stripped(const Walk1D& w) {
    if (w.min_height() >= 0)
        throw domain_error(errc::no_negative_visit, "walk never visits a negative number");
    std::size_t cut = static_cast<std::size_t>(w.first_visit(-1)) - 1;
    std::vector<Step1D> steps;
    steps.reserve(w.size());
    steps.insert(steps.end(), w.steps().begin() + static_cast<std::ptrdiff_t>(cut) + 1, w.steps().end());
    steps.push_back(up_step());
    steps.insert(steps.end(), w.steps().begin(), w.steps().begin() + static_cast<std::ptrdiff_t>(cut));
    return Walk1D(std::move(steps));
}

// Reflection method: complement every vote up to and including the k-th
// return of the margin to 0. Complementing negates the margins of the prefix,
// so the set of return times is preserved and each variant is an involution
// between ugly and bad sequences with the same vote counts.
inline BallotSequence reflect_kth(const BallotSequence& s, int k) {
    detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
    std::vector<std::size_t> zeros = margin_zero_times(s);
    if (k < 1 || static_cast<std::size_t>(k) > zeros.size())
        throw domain_error(errc::not_enough_visits,
                           "margin returns to 0 only " + std::to_string(zeros.size()) +
                               " times, visit " + std::to_string(k) + " requested");
    return detail::complement_prefix(s, zeros[static_cast<std::size_t>(k) - 1]);
}

inline BallotSequence reflect_first(const BallotSequence& s) { return reflect_kth(s, 1); }

inline BallotSequence reflect_last(const BallotSequence& s) {
    detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
    return detail::complement_prefix(s, margin_zero_times(s).back());
}

// Central symmetry variant: reverse the order (without complementing) of the
// votes up to and including the first return of the margin to 0.
inline BallotSequence central_first(const BallotSequence& s) {
    detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
    std::size_t z = margin_zero_times(s).front();
    std::vector<Vote> votes = s.votes();
    std::reverse(votes.begin(), votes.begin() + static_cast<std::ptrdiff_t>(z));
    return BallotSequence(std::move(votes));
}

// The raising operator viewed on ballot sequences: raise the stripped walk
// and re-attach a vote for B in front.
inline BallotSequence raise_as_ugly_to_bad(const BallotSequence& s) {
    detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
    return unstrip(Vote::B, raise_walk(strip(s)));
}

using UglyToBadMap = std::function<BallotSequence(const BallotSequence&)>;

// The ugly -> bad bijections available to lift() and to the CLI, by name.
// reflect-second falls back to the first return when only one exists; the
// chosen rule depends only on the (reflection-invariant) set of return times,
// so it stays an involution.
inline const std::vector<std::pair<std::string, UglyToBadMap>>& ugly_to_bad_registry() {
    static const std::vector<std::pair<std::string, UglyToBadMap>> registry = {
        {"andre", [](const BallotSequence& s) { return andre(s); }},
        {"reflect-first", [](const BallotSequence& s) { return reflect_first(s); }},
        {"reflect-second",
         [](const BallotSequence& s) {
             detail::require_scenario(s, Scenario::Ugly, errc::not_ugly);
             std::size_t zeros = margin_zero_times(s).size();
             return reflect_kth(s, zeros >= 2 ? 2 : 1);
         }},
        {"reflect-last", [](const BallotSequence& s) { return reflect_last(s); }},
        {"central", [](const BallotSequence& s) { return central_first(s); }},
        {"raise-ballot", [](const BallotSequence& s) { return raise_as_ugly_to_bad(s); }},
    };
    return registry;
}

inline const UglyToBadMap& find_ugly_to_bad(const std::string& name) {
    for (const auto& [n, f] : ugly_to_bad_registry())
        if (n == name) return f;
    throw domain_error(errc::unknown_map, "no ugly-to-bad bijection named '" + name + "'");
}

struct LiftResult {
    BallotSequence sequence;
    int iterations = 0;
};

// Iteration lifting: while the sequence is ugly, apply f (ugly -> bad) and
// then turn the leading vote for B back into one for A. Maps non-bad
// sequences with final margin 1 or 2 bijectively onto good sequences of the
// same length; terminates within the initial number of votes for B.
inline LiftResult lift(const UglyToBadMap& f, const BallotSequence& s) {
    Scenario sc = classify_ballot(s);
    if (sc == Scenario::Bad)
        throw domain_error(errc::bad_input, "sequence '" + s.str() + "' is bad");
    int margin = s.final_margin();
    if (margin != 1 && margin != 2)
        throw domain_error(errc::bad_input,
                           "final margin is " + std::to_string(margin) + ", expected 1 or 2");
    LiftResult out{s, 0};
    while (classify_ballot(out.sequence) == Scenario::Ugly) {
        out.sequence = detail::with_first_vote(f(out.sequence), Vote::A);
        ++out.iterations;
    }
    return out;
}

inline LiftResult lift(const std::string& registered_name, const BallotSequence& s) {
    return lift(find_ugly_to_bad(registered_name), s);
}

// Odd-length sequences won by A <-> arbitrary sequences one vote shorter:
// remove the first vote; keep the remainder if that vote was for A, else
// return its complement.
inline BallotSequence footnote_bijection(const BallotSequence& s) {
    if (s.size() % 2 == 0)
        throw domain_error(errc::even_length, "sequence length must be odd");
    if (s.final_margin() <= 0)
        throw domain_error(errc::no_winner, "A does not win '" + s.str() + "'");
    std::vector<Vote> tail(s.votes().begin() + 1, s.votes().end());
    if (s.vote(0) == Vote::B)
        for (Vote& v : tail) v = other(v);
    return BallotSequence(std::move(tail));
}

inline BallotSequence footnote_inverse(const BallotSequence& s) {
    if (s.size() % 2 != 0)
        throw domain_error(errc::odd_length, "sequence length must be even");
    std::vector<Vote> votes;
    votes.reserve(s.size() + 1);
    if (s.final_margin() >= 0) { // weakly favourable for A
        votes.push_back(Vote::A);
        votes.insert(votes.end(), s.votes().begin(), s.votes().end());
    } else {
        votes.push_back(Vote::B);
        for (Vote v : s.votes()) votes.push_back(other(v));
    }
    return BallotSequence(std::move(votes));
}

// Backward alternating scan: the last visit to -1, then the preceding visit
// to +1, then the preceding visit to -1, and so on; returns the number of
// visits found. Equals the iteration count of lift(reflect_last) on the
// corresponding ballot sequence.
inline int alternating_visits(const Walk1D& w) {
    const std::vector<int>& h = w.heights();
    int count = 0;
    int target = -1;
    std::ptrdiff_t bound = static_cast<std::ptrdiff_t>(h.size()); // exclusive
    for (;;) {
        std::ptrdiff_t found = -1;
        for (std::ptrdiff_t j = bound - 1; j >= 0; --j) {
            if (h[static_cast<std::size_t>(j)] == target) {
                found = j;
                break;
            }
        }
        if (found < 0) return count;
        ++count;
        bound = found;
        target = -target;
    }
}

struct BallotCounts {
    BigInt total;
    BigInt good;
    BigInt bad;
    BigInt ugly;
    Rational probability; // that A leads strictly throughout, in lowest terms
};

inline BallotCounts ballot_counts(long long alpha, long long beta) {
    if (!(alpha > beta && beta >= 0))
        throw domain_error(errc::no_winner, "need alpha > beta >= 0");
    long long mu = alpha + beta;
    BallotCounts out;
    out.total = binomial(mu, alpha);
    out.bad = binomial(mu - 1, alpha);
    out.ugly = out.bad;
    out.good = binomial(mu - 1, alpha - 1) - binomial(mu - 1, alpha);
    out.probability = Rational(alpha - beta, mu);
    return out;
}

// C(a+b, a) - 2 C(a+b-1, a) = C(a+b-1, a-1) - C(a+b-1, a): total cases minus
// twice the bad ones equals the good ones, for every winning split of mu
// votes; also checks good + bad + ugly = total.
inline bool ballot_eq4_holds(long long mu) {
    for (long long alpha = mu / 2 + 1; alpha <= mu; ++alpha) {
        BigInt lhs = binomial(mu, alpha) - 2 * binomial(mu - 1, alpha);
        BigInt rhs = binomial(mu - 1, alpha - 1) - binomial(mu - 1, alpha);
        if (lhs != rhs) return false;
        BallotCounts c = ballot_counts(alpha, mu - alpha);
        if (c.good + c.bad + c.ugly != c.total) return false;
    }
    return true;
}

// The single-pass description of lift(andre) on stripped walks: from the
// theorem-1 image, remove the last of the reversed steps and swap the two
// remaining parts around an inserted up-step.
inline Walk1D andre_from_theorem1(const Walk1D& w) {
    int e = w.end();
    if (e != 0 && e != 1)
        throw domain_error(errc::bad_endpoint,
                           "walk ends at " + std::to_string(e) + ", expected 0 or 1");
    std::vector<std::size_t> pos = theorem1_flip_positions(w);
    if (pos.empty()) throw domain_error(errc::no_flips, "walk has depth 0");
    Walk1D image = w.with_flipped_steps(pos);
    std::size_t p = pos.back();
    std::vector<Step1D> steps;
    steps.reserve(w.size());
    steps.insert(steps.end(), image.steps().begin() + static_cast<std::ptrdiff_t>(p) + 1,
                 image.steps().end());
    steps.push_back(up_step());
    steps.insert(steps.end(), image.steps().begin(),
                 image.steps().begin() + static_cast<std::ptrdiff_t>(p));
    return Walk1D(std::move(steps));
}

} // namespace walkbij
