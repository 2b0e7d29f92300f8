// Command-line interface: one-shot transformations (apply), exhaustive
// bijection verification (verify), triangle tables (table), counting
// identities (identity) and statistic histograms (stats).
//
// Exit codes: 0 success, 1 verification failure or violated operation
// precondition, 2 usage or input-format error.

#include <CLI11.hpp>

#include <walkbij/walkbij.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace walkbij;

constexpr std::size_t kMaxInputLength = 63;

struct Options {
    // apply
    std::string op;
    std::vector<std::string> walks;
    std::string seq;
    bool seq_given = false;
    int k = 2;
    // verify
    std::string what;
    int max_len = -1;
    // table
    std::string kind;
    int rows = 0;
    // identity
    std::string which;
    int max = -1;
    std::string t_set = "0,1,2,3,5";
    // stats
    std::string stat;
    int len = 0;
    std::string population = "all";
    // shared
    int t = -1; // -1: per-command default
    std::string step_set_path;
};

int effective_t(const Options& opt, int fallback) { return opt.t >= 0 ? opt.t : fallback; }

std::shared_ptr<const StepSet> load_step_set(const Options& opt) {
    if (opt.step_set_path.empty())
        return std::make_shared<const StepSet>(StepSet::full(2));
    return std::make_shared<const StepSet>(StepSet::load(opt.step_set_path));
}

Walk1D parse_walk_arg(const Options& opt, std::size_t index, const Alphabet& alphabet) {
    if (index >= opt.walks.size())
        throw parse_error("--op " + opt.op + " needs " + std::to_string(index + 1) +
                          " --walk argument(s)");
    Walk1D w = parse_walk(opt.walks[index], alphabet);
    if (w.size() > kMaxInputLength) throw parse_error("walk longer than 63 steps");
    return w;
}

BallotSequence parse_seq_arg(const Options& opt) {
    if (!opt.seq_given) throw parse_error("--op " + opt.op + " needs --seq");
    BallotSequence s = BallotSequence::parse(opt.seq);
    if (s.size() > kMaxInputLength) throw parse_error("sequence longer than 63 votes");
    return s;
}

std::vector<int> parse_t_set(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!item.empty()) out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw parse_error("--t-set is empty");
    return out;
}

int cmd_apply(const Options& opt) {
    const std::string& op = opt.op;
    Alphabet alphabet{effective_t(opt, 0)};

    auto walk_result = [&](const Walk1D& w) {
        std::cout << format_walk(w) << "\n";
        return 0;
    };
    auto seq_result = [&](const BallotSequence& s) {
        std::cout << s.str() << "\n";
        return 0;
    };

    if (op == "raise") return walk_result(raise_walk(parse_walk_arg(opt, 0, alphabet)));
    if (op == "lower") return walk_result(lower_walk(parse_walk_arg(opt, 0, alphabet)));
    if (op == "theorem1") return walk_result(theorem1_forward(parse_walk_arg(opt, 0, alphabet)));
    if (op == "theorem1-inv") return walk_result(theorem1_inverse(parse_walk_arg(opt, 0, alphabet)));
    if (op == "reverse-negate") return walk_result(reverse_negate(parse_walk_arg(opt, 0, alphabet)));
    if (op == "full-lower") return walk_result(full_lower(parse_walk_arg(opt, 0, alphabet)));
    if (op == "andre-stripped") return walk_result(andre_stripped(parse_walk_arg(opt, 0, alphabet)));
    if (op == "concat")
        return walk_result(
            concat_with_upstep(parse_walk_arg(opt, 0, alphabet), parse_walk_arg(opt, 1, alphabet)));
    if (op == "split") {
        auto [prefix, suffix] = split_at_last_up_from_zero(parse_walk_arg(opt, 0, alphabet));
        std::cout << format_walk(prefix) << "|" << format_walk(suffix) << "\n";
        return 0;
    }
    if (op == "theorem2" || op == "theorem2-inv") {
        auto set = load_step_set(opt);
        if (opt.walks.empty()) throw parse_error("--op " + op + " needs --walk");
        WalkND w = parse_walk_nd(opt.walks[0], set);
        if (w.size() > kMaxInputLength) throw parse_error("walk longer than 63 steps");
        WalkND out = op == "theorem2" ? theorem2_forward(w) : theorem2_inverse(w);
        std::cout << format_walk_nd(out) << "\n";
        return 0;
    }
    if (op == "andre") return seq_result(andre(parse_seq_arg(opt)));
    if (op == "andre-inv") return seq_result(andre_inverse(parse_seq_arg(opt)));
    if (op == "reflect-first") return seq_result(reflect_first(parse_seq_arg(opt)));
    if (op == "reflect-k") return seq_result(reflect_kth(parse_seq_arg(opt), opt.k));
    if (op == "reflect-last") return seq_result(reflect_last(parse_seq_arg(opt)));
    if (op == "central") return seq_result(central_first(parse_seq_arg(opt)));
    if (op == "raise-ballot") return seq_result(raise_as_ugly_to_bad(parse_seq_arg(opt)));
    if (op == "footnote") return seq_result(footnote_bijection(parse_seq_arg(opt)));
    if (op == "footnote-inv") return seq_result(footnote_inverse(parse_seq_arg(opt)));
    if (op.rfind("lift:", 0) == 0) {
        LiftResult r = lift(op.substr(5), parse_seq_arg(opt));
        std::cout << r.sequence.str() << " (" << r.iterations << " iterations)\n";
        return 0;
    }
    throw domain_error(errc::unknown_map, "no operation named '" + op + "'");
}

int cmd_verify(const Options& opt) {
    CheckContext ctx;
    ctx.alphabet = Alphabet{effective_t(opt, 0)};
    if (opt.what == "theorem2" || !opt.step_set_path.empty()) ctx.step_set = load_step_set(opt);
    LengthCheck check = make_check(opt.what, ctx);
    if (opt.max_len < 0) throw parse_error("--max-len is required");
    int limit = check_length_limit(opt.what, ctx);
    if (opt.max_len > limit)
        throw domain_error(errc::cap_exceeded, "--max-len " + std::to_string(opt.max_len) +
                                                   " exceeds the cap of " + std::to_string(limit));
    bool all_ok = true;
    for (int len = 0; len <= opt.max_len; ++len) {
        VerificationReport rep = check(len);
        bool ok = rep.all_ok();
        all_ok = all_ok && ok;
        std::cout << (ok ? "OK " : "FAIL ") << "length=" << len << " " << rep.summary() << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_table(const Options& opt) {
    TriangleKind kind;
    int default_t = 0;
    if (opt.kind == "pascal") {
        kind = TriangleKind::Pascal;
    } else if (opt.kind == "trinomial") {
        kind = TriangleKind::Trinomial;
        default_t = 1;
    } else if (opt.kind == "positive") {
        kind = TriangleKind::Positive;
    } else if (opt.kind == "trinomial-positive") {
        kind = TriangleKind::Positive;
        default_t = 1;
    } else {
        throw parse_error("unknown table kind '" + opt.kind + "'");
    }
    if (opt.rows < 1) throw parse_error("--rows must be at least 1");
    if (opt.rows > 512) throw domain_error(errc::cap_exceeded, "--rows exceeds the cap of 512");
    int t = effective_t(opt, default_t);
    TriangleTable table = TriangleTable::build(kind, opt.rows, t);
    std::cout << "# " << opt.kind;
    if (kind != TriangleKind::Pascal) std::cout << " t=" << t;
    std::cout << " rows=" << opt.rows << "\n";
    for (int n = 0; n < table.rows(); ++n) {
        const auto& row = table.row(n);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) std::cout << "\t";
            std::cout << row[i];
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_identity(const Options& opt) {
    const std::string& which = opt.which;
    bool all_ok = true;
    auto line = [&](bool ok, const std::string& label) {
        all_ok = all_ok && ok;
        std::cout << (ok ? "OK " : "FAIL ") << label << "\n";
    };

    if (which == "eq1") {
        int max = opt.max < 0 ? 30 : opt.max;
        for (int n = 0; n <= max; ++n) line(eq1_holds(n), "n=" + std::to_string(n));
    } else if (which == "eq2") {
        int max = opt.max < 0 ? 20 : opt.max;
        for (int t : parse_t_set(opt.t_set))
            for (int l = 0; l <= max; ++l) {
                bool ok = eq2_holds(t, l);
                if (l <= 10 && t <= 1) ok = ok && eq2_census_agrees(t, l);
                line(ok, "t=" + std::to_string(t) + " l=" + std::to_string(l));
            }
    } else if (which == "eq3") {
        int max = opt.max < 0 ? 24 : opt.max;
        for (int t : parse_t_set(opt.t_set)) {
            VerificationReport rep = check_eq3(t, max);
            line(rep.all_ok(), rep.name + (rep.counterexample ? " " + *rep.counterexample : ""));
        }
    } else if (which == "eq4") {
        int max = opt.max < 0 ? 40 : opt.max;
        for (int mu = 1; mu <= max; ++mu) line(ballot_eq4_holds(mu), "mu=" + std::to_string(mu));
    } else if (which == "ballot") {
        int max = opt.max < 0 ? 14 : opt.max;
        for (int mu = 1; mu <= max; ++mu) {
            VerificationReport rep = check_ballot_counts(mu);
            line(rep.all_ok(), "mu=" + std::to_string(mu) +
                                   (rep.counterexample ? " " + *rep.counterexample : ""));
        }
    } else if (which == "t2") {
        int max = opt.max < 0 ? 20 : opt.max;
        for (int n = 0; n <= max; ++n) line(t2_coincidence_holds(n), "n=" + std::to_string(n));
    } else {
        throw parse_error("unknown identity '" + which + "'");
    }
    return all_ok ? 0 : 1;
}

int cmd_stats(const Options& opt) {
    Population population = parse_population(opt.population);
    Alphabet alphabet{effective_t(opt, 0)};
    Histogram hist = distribution(opt.stat, population, opt.len, alphabet);
    std::cout << "value\tcount\n";
    for (const auto& [value, count] : hist) std::cout << value << "\t" << count << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"walk and ballot bijections: transformations, exhaustive verification, tables"};
    app.require_subcommand(1);

    CLI::App* apply = app.add_subcommand("apply", "apply one operation to a walk or ballot sequence");
    apply->add_option("--op", opt.op, "operation name (e.g. raise, theorem1, andre, lift:andre)")
        ->required();
    apply->add_option("--walk", opt.walks, "walk text (twice for concat; '.'-separated groups in n-D)");
    apply->add_option("--seq", opt.seq, "ballot sequence over {A,B}");
    apply->add_option("--k", opt.k, "return-to-zero index for reflect-k")
        ->check(CLI::PositiveNumber);
    apply->add_option("--t", opt.t, "number of neutral-step kinds")->check(CLI::NonNegativeNumber);
    apply->add_option("--step-set", opt.step_set_path, "step-set file for theorem2");

    CLI::App* verify = app.add_subcommand("verify", "exhaustively verify a bijection per length");
    verify->add_option("--what", opt.what, "check name (theorem1, theorem2, andre, lift:andre, ...)")
        ->required();
    verify->add_option("--max-len", opt.max_len, "largest length to sweep")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--t", opt.t, "number of neutral-step kinds")->check(CLI::NonNegativeNumber);
    verify->add_option("--step-set", opt.step_set_path, "step-set file for theorem2");

    CLI::App* table = app.add_subcommand("table", "print a counting triangle as TSV");
    table->add_option("--kind", opt.kind, "pascal | trinomial | positive | trinomial-positive")
        ->required();
    table->add_option("--rows", opt.rows, "number of rows")->required()->check(CLI::PositiveNumber);
    table->add_option("--t", opt.t, "number of neutral-step kinds")->check(CLI::NonNegativeNumber);

    CLI::App* identity = app.add_subcommand("identity", "check a counting identity per index");
    identity->add_option("--which", opt.which, "eq1 | eq2 | eq3 | eq4 | ballot | t2")->required();
    identity->add_option("--max", opt.max, "largest index (default depends on the identity)")
        ->check(CLI::NonNegativeNumber);
    identity->add_option("--t-set", opt.t_set, "comma-separated t values for eq2/eq3");

    CLI::App* stats = app.add_subcommand("stats", "print an exact statistic histogram as TSV");
    stats->add_option("--stat", opt.stat, "depth | end | altvisits | lift-iters:<name>")->required();
    stats->add_option("--len", opt.len, "walk length")->required()->check(CLI::NonNegativeNumber);
    stats->add_option("--t", opt.t, "number of neutral-step kinds")->check(CLI::NonNegativeNumber);
    stats->add_option("--population", opt.population, "all | positive | recurrent | almost-recurrent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.seq_given = apply->count("--seq") > 0;

    try {
        if (app.got_subcommand(apply)) return cmd_apply(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(table)) return cmd_table(opt);
        if (app.got_subcommand(identity)) return cmd_identity(opt);
        if (app.got_subcommand(stats)) return cmd_stats(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::cap_exceeded:
            case errc::unknown_map:
            case errc::unknown_stat: return 2;
            default: return 1;
        }
    }
    return 2;
}
