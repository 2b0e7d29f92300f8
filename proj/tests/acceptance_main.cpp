// Acceptance suite: every release criterion as one pass/fail line, all exact
// (no tolerances anywhere). Takes the CLI binary path as its only argument
// for the golden-output checks.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <walkbij/walkbij.hpp>

#include "proc.hpp"

namespace {

using namespace walkbij;

int criterion_number = 0;
int failures = 0;

void report(bool ok, const std::string& description, const std::string& detail = "") {
    ++criterion_number;
    if (ok) {
        std::cout << "PASS " << criterion_number << " - " << description << "\n";
    } else {
        ++failures;
        std::cout << "FAIL " << criterion_number << " - " << description
                  << (detail.empty() ? "" : " [" + detail + "]") << "\n";
    }
}

bool run_length_sweep(const std::string& label, int t, int max_len, std::string& detail) {
    for (int len = 0; len <= max_len; ++len) {
        VerificationReport rep = check_theorem1(len, Alphabet{t});
        if (!rep.all_ok()) {
            detail = label + " len=" + std::to_string(len) + ": " + rep.summary();
            return false;
        }
    }
    return true;
}

std::vector<BigInt> ints(std::initializer_list<long long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc >= 2 ? testproc::quoted(argv[1]) : "";

    // 1. The walk bijection, exhaustively: t=0 lengths 0-14, t=1 lengths 0-9,
    //    t=2 lengths 0-7; sizes, injectivity, surjectivity, length and
    //    neutral-count preservation, end-point law, two-sided inverse.
    {
        std::string detail;
        bool ok = run_length_sweep("t=0", 0, 14, detail) && run_length_sweep("t=1", 1, 9, detail) &&
                  run_length_sweep("t=2", 2, 7, detail);
        report(ok, "walk bijection exhaustive (t=0 len<=14, t=1 len<=9, t=2 len<=7)", detail);
    }

    // 2. Positive-walk end distribution at length 8 and Pascal row 8.
    {
        Histogram end = distribution("end", Population::Positive, 8, Alphabet{0});
        bool ok = end == Histogram{{0, 14}, {2, 28}, {4, 20}, {6, 7}, {8, 1}};
        TriangleTable pascal = TriangleTable::build(TriangleKind::Pascal, 9, 0);
        ok = ok && pascal.row(8) == ints({1, 8, 28, 56, 70, 56, 28, 8, 1});
        report(ok, "positive end distribution 14,28,20,7,1 and Pascal row 8");
    }

    // 3. Trinomial row 7 and its positive counterpart, with row sum 750.
    {
        TriangleTable tri = TriangleTable::build(TriangleKind::Trinomial, 8, 1);
        TriangleTable pos = TriangleTable::build(TriangleKind::Positive, 8, 1);
        bool ok = tri.row(7) == ints({1, 7, 28, 77, 161, 266, 357, 393, 357, 266, 161, 77, 28, 7, 1});
        ok = ok && pos.row(7) == ints({127, 196, 189, 133, 70, 27, 7, 1});
        ok = ok && pos.row_sum(7) == 750 && tri.at(7, 0) + tri.at(7, 1) == 750;
        report(ok, "trinomial row 7 and positive row 7 with sum 750 = 393 + 357");
    }

    // 4. The coordinate-wise bijection over two step sets, with
    //    coordinate-order independence.
    {
        std::string detail;
        bool ok = true;
        auto full = std::make_shared<const StepSet>(StepSet::full(2));
        for (int len = 0; ok && len <= 6; ++len) {
            VerificationReport rep = check_theorem2(len, full);
            if (!rep.all_ok()) {
                ok = false;
                detail = "full set len=" + std::to_string(len) + ": " + rep.summary();
            }
        }
        auto diag = std::make_shared<const StepSet>(StepSet::parse("++\n+-\n-+\n--\n00\n"));
        for (int len = 0; ok && len <= 8; ++len) {
            VerificationReport rep = check_theorem2(len, diag);
            if (!rep.all_ok()) {
                ok = false;
                detail = "diagonal set len=" + std::to_string(len) + ": " + rep.summary();
            }
        }
        report(ok, "2-D bijection exhaustive ({-1,0,1}^2 len<=6, diagonal set len<=8)", detail);
    }

    // 5. The counting identities: convolution of central binomials (n<=30),
    //    the closed form for R convolutions (t in {0,1,2,3,5}, l<=20, census
    //    cross-check l<=10), the squared generating series (degree 24), and
    //    R_{2,n} = C(2n,n) (n<=20).
    {
        std::string detail;
        bool ok = check_eq1(30).all_ok();
        if (!ok) detail = "eq1";
        for (int t : {0, 1, 2, 3, 5}) {
            if (ok && !check_eq2(t, 20).all_ok()) {
                ok = false;
                detail = "eq2 t=" + std::to_string(t);
            }
            if (ok && !check_eq3(t, 24).all_ok()) {
                ok = false;
                detail = "eq3 t=" + std::to_string(t);
            }
        }
        for (int t : {0, 1})
            for (int l = 0; ok && l <= 10; ++l)
                if (!eq2_census_agrees(t, l)) {
                    ok = false;
                    detail = "census t=" + std::to_string(t) + " l=" + std::to_string(l);
                }
        ok = ok && check_t2_coincidence(20).all_ok();
        report(ok, "series identities: eq1 n<=30, eq2 l<=20 (+census l<=10), eq3 deg 24, t2 n<=20",
               detail);
    }

    // 6. Ballot counts against enumeration (mu<=14), the count identity as
    //    exact integers (mu<=40), and all six ugly->bad bijections (mu<=14).
    {
        std::string detail;
        bool ok = true;
        for (int mu = 0; ok && mu <= 14; ++mu)
            if (!check_ballot_counts(mu).all_ok()) {
                ok = false;
                detail = "counts mu=" + std::to_string(mu);
            }
        for (int mu = 1; ok && mu <= 40; ++mu)
            if (!ballot_eq4_holds(mu)) {
                ok = false;
                detail = "eq4 mu=" + std::to_string(mu);
            }
        for (const auto& [name, _] : ugly_to_bad_registry())
            for (int mu = 0; ok && mu <= 14; ++mu) {
                VerificationReport rep = check_ballot_map(name, mu);
                if (!rep.all_ok()) {
                    ok = false;
                    detail = name + " mu=" + std::to_string(mu) + ": " + rep.summary();
                }
            }
        report(ok, "ballot counts mu<=14, count identity mu<=40, six ugly->bad bijections mu<=14",
               detail);
    }

    // 7. Lifting: for every registered bijection and length <= 13 a bijection
    //    onto the good sequences; lift(raise) coincides with the walk
    //    bijection through strip/unstrip; iteration counts are depth, depth
    //    and alternating visits respectively.
    {
        std::string detail;
        bool ok = true;
        for (const auto& [name, _] : ugly_to_bad_registry())
            for (int mu = 1; ok && mu <= 13; ++mu) {
                VerificationReport rep = check_lift(name, mu);
                if (!rep.all_ok()) {
                    ok = false;
                    detail = "lift:" + name + " mu=" + std::to_string(mu) + ": " + rep.summary();
                }
            }
        report(ok, "lifting is a bijection onto good sequences (len<=13) with the iteration laws",
               detail);
    }

    // 8. The alternating-visit distribution (n<=14) and the coincidence of
    //    the depth, alternating-visit and lift-iteration histograms (n<=12).
    {
        std::string detail;
        bool ok = true;
        for (int n = 0; ok && n <= 14; ++n)
            if (!check_corollary(n).all_ok()) {
                ok = false;
                detail = "corollary n=" + std::to_string(n);
            }
        for (int n = 0; ok && n <= 12; ++n)
            if (!check_stats_equalities(n).all_ok()) {
                ok = false;
                detail = "histograms n=" + std::to_string(n);
            }
        report(ok, "alternating-visit counts n<=14 and histogram coincidences n<=12", detail);
    }

    // 9. The odd/even bijection for n <= 9 (with inverse round trip) and the
    //    single-pass description of lift(andre) pointwise for lengths <= 12.
    {
        std::string detail;
        bool ok = true;
        for (int mu = 0; ok && mu <= 19; ++mu) {
            VerificationReport rep = check_footnote(mu);
            if (!rep.all_ok()) {
                ok = false;
                detail = "footnote mu=" + std::to_string(mu) + ": " + rep.summary();
            }
        }
        for (int len = 1; ok && len <= 12; ++len) {
            for_each_walk(len, Alphabet{0}, [&](const Walk1D& w) {
                if (!ok || !w.is_almost_recurrent() || w.depth() == 0) return;
                Walk1D direct = andre_from_theorem1(w);
                Walk1D via_lift = strip(lift("andre", unstrip(Vote::A, w)).sequence);
                if (direct != via_lift) {
                    ok = false;
                    detail = "andre_from_theorem1 at " + format_walk(w);
                }
            });
        }
        report(ok, "vote-removal bijection n<=9 round-trips; andre single-pass matches lift (len<=12)",
               detail);
    }

    // 10. CLI golden outputs and the exit-code contract.
    {
        std::string detail;
        bool ok = !cli.empty();
        if (!ok) detail = "no CLI path given";
        if (ok) {
            auto r = testproc::run(cli + " table --kind positive --rows 9 --t 0 2>/dev/null");
            if (r.exit_code != 0 || testproc::last_line(r.output) != "14\t28\t20\t7\t1") {
                ok = false;
                detail = "table output [" + r.output + "]";
            }
        }
        if (ok) {
            auto r = testproc::run(cli + " identity --which eq1 --max 20 2>/dev/null");
            if (r.exit_code != 0) {
                ok = false;
                detail = "identity eq1 exit " + std::to_string(r.exit_code);
            }
        }
        if (ok) {
            auto r = testproc::run(cli +
                                   " stats --stat end --len 8 --t 0 --population positive 2>/dev/null");
            if (r.exit_code != 0 ||
                r.output != "value\tcount\n0\t14\n2\t28\n4\t20\n6\t7\n8\t1\n") {
                ok = false;
                detail = "stats output [" + r.output + "]";
            }
        }
        if (ok) {
            auto success = testproc::run(cli + " apply --op theorem1 --walk DDUU 2>/dev/null");
            auto precond = testproc::run(cli + " apply --op raise --walk UD 2>&1");
            auto usage = testproc::run(cli + " table --kind bogus --rows 3 2>&1");
            if (success.exit_code != 0 || precond.exit_code != 1 || usage.exit_code != 2) {
                ok = false;
                detail = "exit codes " + std::to_string(success.exit_code) + "/" +
                         std::to_string(precond.exit_code) + "/" + std::to_string(usage.exit_code);
            }
        }
        report(ok, "CLI golden outputs (table/identity/stats) and exit-code contract", detail);
    }

    if (failures == 0) {
        std::cout << "all " << criterion_number << " acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " of " << criterion_number << " acceptance criteria FAILED\n";
    return 1;
}
