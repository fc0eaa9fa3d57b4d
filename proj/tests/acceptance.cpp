// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "htlp/htlp.hpp"
#include "support/corpus.hpp"

using namespace htlp;

namespace {

const std::string E = "\xE2\x88\x85";
const std::string kExample = "(q -> p) | r\n";

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<std::string> run_cli(std::vector<std::string> args, const std::string& input, int* code = nullptr) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int c = cli::main(std::move(args), in, out, err);
    if (code) *code = c;
    std::vector<std::string> lines;
    std::istringstream is(out.str());
    for (std::string l; std::getline(is, l);) lines.push_back(l);
    return lines;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ; ") + x;
    return s;
}

// Interpretations given as (here, there) name lists over {p,q,r}.
std::vector<std::string> as_strings(const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& v) {
    const Signature s{"p", "q", "r"};
    std::vector<std::string> out;
    for (const auto& [x, y] : v) out.push_back(to_string(HtInterpretation(s, x, y)));
    return out;
}

Outcome ac1() {
    Outcome o;
    int code = -1;
    const auto got = run_cli({"countermodels", "-", "--signature", "p,q,r"}, kExample, &code);
    const auto want = as_strings({{{}, {"q"}}, {{"q"}, {"q"}}, {{"q"}, {"p", "q"}},
                                  {{}, {"q", "r"}}, {{"q"}, {"q", "r"}}, {{"q"}, {"p", "q", "r"}}});
    o.require(code == 0, "exit code");
    o.require(got == want, "got " + join(got));
    return o;
}

Outcome ac2() {
    Outcome o;
    const auto got = run_cli({"to-program", "-", "--method=countermodel"}, kExample);
    const std::vector<std::string> want{
        "~p & ~r -> q | ~q",
        "q & ~p & ~r -> bot",
        "q & ~r -> p | ~p",
        "~p -> q | ~q | r | ~r",
        "q & ~p -> r | ~r",
        "q -> p | ~p | r | ~r",
    };
    o.require(got == want, "got " + join(got));
    return o;
}

Outcome ac3() {
    Outcome o;
    const auto models = run_cli({"models", "-"}, kExample);
    // Listed models with the two misprinted there-set members read as ({r},{q,r}) and
    // ({q,r},{q,r}); the two families expand over all admissible here sets.
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> listed{
        {{}, {}}, {{}, {"p"}}, {{"p"}, {"p"}}, {{}, {"r"}}, {{"r"}, {"r"}},
        {{}, {"p", "q"}}, {{"p"}, {"p", "q"}}, {{"p", "q"}, {"p", "q"}},
        {{"r"}, {"q", "r"}}, {{"q", "r"}, {"q", "r"}},
        {{}, {"p", "r"}}, {{"p"}, {"p", "r"}}, {{"r"}, {"p", "r"}}, {{"p", "r"}, {"p", "r"}},
        {{}, {"p", "q", "r"}}, {{"p"}, {"p", "q", "r"}}, {{"r"}, {"p", "q", "r"}},
        {{"p", "q"}, {"p", "q", "r"}}, {{"p", "r"}, {"p", "q", "r"}}, {{"q", "r"}, {"p", "q", "r"}},
        {{"p", "q", "r"}, {"p", "q", "r"}}};
    auto want = as_strings(listed);
    std::vector<std::string> sorted_got = models, sorted_want = want;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    o.require(models.size() == 21, "model count " + std::to_string(models.size()));
    o.require(sorted_got == sorted_want, "model set differs: " + join(models));

    const auto annotated = run_cli({"to-dnf", "-", "--annotate"}, kExample);
    o.require(annotated.size() == 21, "clause count " + std::to_string(annotated.size()));
    std::vector<std::string> clauses;
    for (auto l : annotated) {
        if (l.rfind("| ", 0) == 0) l = l.substr(2);
        clauses.push_back(l.substr(0, l.find("  % ")));
    }
    // The displayed list skips the clause of ({r},{r}); it appears between the
    // displayed fourth and fifth clauses.
    const std::vector<std::string> displayed{
        "~p & ~q & ~r",
        "~q & ~r & ~~p & (p -> p)",
        "p & ~q & ~r",
        "~p & ~q & ~~r & (r -> r)",
        "~r & ~~p & ~~q & (p -> p) & (p -> q) & (q -> p) & (q -> q)",
    };
    if (clauses.size() >= 6) {
        for (std::size_t k = 0; k < 4; ++k) o.require(clauses[k] == displayed[k], "clause " + std::to_string(k) + ": " + clauses[k]);
        o.require(clauses[4] == "r & ~p & ~q", "clause 4: " + clauses[4]);
        o.require(clauses[5] == displayed[4], "clause 5: " + clauses[5]);
    }
    const auto verified = run_cli({"to-dnf", "-", "--verify"}, kExample);
    o.require(!verified.empty() && verified.back() == "VERIFIED", "dnf not equivalent");
    return o;
}

Outcome ac4() {
    Outcome o;
    SyntacticOptions opt;
    opt.simplify = true;
    std::vector<std::string> inner, conj1;
    for (const auto& r : formula_to_program_syn(parse("r -> (q -> p)"), opt).rules()) inner.push_back(print(r));
    o.require(inner == std::vector<std::string>{"q & r -> p"}, "inner: " + join(inner));
    for (const auto& r : formula_to_program_syn(parse("((q & r) -> p) -> (q -> p)"), opt).rules())
        conj1.push_back(print(r));
    o.require(conj1 == std::vector<std::string>{"q & ~r -> p", "q -> p | r | ~p"}, "first conjunct: " + join(conj1));
    // Same through the command line, with the expected parse of each output line.
    const auto cli_inner = run_cli({"to-program", "-", "--method", "syntactic", "--simplify"}, "r -> (q -> p)");
    o.require(cli_inner.size() == 1 && parse(cli_inner[0]) == parse("(q & r) -> p"), "cli: " + join(cli_inner));
    return o;
}

Outcome ac5() {
    Outcome o;
    const auto corpus = testing::all_formulas({"a", "b"}, 3);
    o.require(corpus.size() == 2703, "corpus size " + std::to_string(corpus.size()));
    const Signature sig{"a", "b"};
    std::size_t failures = 0;
    for (const auto& f : corpus) {
        const Theory t({f}, sig);
        const Program cm = theory_to_program_cm(t);
        const Program syn = theory_to_program_syn(t);
        bool good = cm.is_nonnested();
        good = good && ht_equivalent(t, cm.as_theory()).equivalent();
        good = good && ht_equivalent(t, syn.as_theory()).equivalent();
        for (const auto& r : syn.rules()) good = good && is_rule(r.as_formula());
        if (!good) {
            if (failures == 0) o.require(false, "first failure: " + print(f));
            ++failures;
        }
    }
    if (failures) o.detail += " (" + std::to_string(failures) + " failures)";
    return o;
}

Outcome ac6() {
    Outcome o;
    const Signature sig{"a", "b", "c"};
    const auto corpus = testing::all_formulas({"a", "b", "c"}, 2);
    const auto points = testing::all_interpretations(sig);

    // Antecedent rewrite over every triple from the depth <= 2 corpus, pointwise.
    for (const auto& f : corpus) {
        for (const auto& g : corpus) {
            const Formula fg = Formula::implies(f, g);
            std::vector<bool> lhs_fg(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) lhs_fg[i] = sat_ht(points[i], fg);
            for (const auto& k : corpus) {
                const auto [x, y] = antecedent_rewrite(f, g, k);
                for (std::size_t i = 0; i < points.size() && o.ok; ++i) {
                    const bool kk = sat_ht(points[i], k);
                    // (F -> G) -> K at (X,Y): local and classical parts.
                    const bool cls = !sat_classical(AtomSet(sig, points[i].there()), fg) ||
                                     sat_classical(AtomSet(sig, points[i].there()), k);
                    const bool lhs = (!lhs_fg[i] || kk) && cls;
                    const bool rhs = sat_ht(points[i], x) && sat_ht(points[i], y);
                    o.require(lhs == rhs, "antecedent rewrite: " + print(f) + " / " + print(g) + " / " + print(k));
                }
                if (!o.ok) return o;
            }
        }
    }

    // Body characterisation and the countermodels of a single rule.
    for (const auto& i : points) {
        const Rule r = build_rule(i).rule;
        for (const auto& j : points) {
            const bool body = sat_ht(j, r.body());
            const bool expect_body = (i.here() & ~j.here()) == 0 && (j.there() & ~i.there()) == 0;
            o.require(body == expect_body, "body: " + to_string(i) + " at " + to_string(j));
            const bool counter = !sat_ht(j, r.as_formula());
            const bool expect_counter = i.total() ? j.there() == i.there() : (j == i);
            o.require(counter == expect_counter, "rule countermodels: " + to_string(i) + " at " + to_string(j));

            // Clause models: exactly (X,Y) and (Y,Y).
            const bool clause = sat_ht(j, build_clause(i).clause);
            const bool expect_clause = j == i || (j.total() && j.there() == i.there());
            o.require(clause == expect_clause, "clause: " + to_string(i) + " at " + to_string(j));
        }
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    std::mt19937 rng(20260);
    const std::vector<std::string> atoms{"a", "b"};
    const Signature sig(atoms);
    std::uniform_int_distribution<int> count(1, 3);
    for (int k = 0; k < 200 && o.ok; ++k) {
        std::vector<Formula> t, c;
        for (int j = count(rng); j > 0; --j) t.push_back(testing::random_formula(rng, atoms, 3));
        for (int j = count(rng) - 1; j > 0; --j) c.push_back(testing::random_formula(rng, atoms, 3));
        const Theory theory(t, sig);
        const Theory context(c, sig);
        const auto want = testing::oracle_equilibrium([&] {
            auto all = t;
            all.insert(all.end(), c.begin(), c.end());
            return all;
        }(), sig);
        o.require(testing::masks(equilibrium_models(merge(theory, context))) == want, "T u C, pair " + std::to_string(k));
        for (const Program& p : {theory_to_program_cm(theory), theory_to_program_syn(theory)}) {
            auto all = testing::formulas_of(p);
            all.insert(all.end(), c.begin(), c.end());
            o.require(testing::masks(equilibrium_models(Theory(all, sig))) == want,
                      "program u C, pair " + std::to_string(k));
        }
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    for (std::size_t n = 0; n <= 3; ++n)
        o.require(count_formula(n).value == count_bruteforce(n).value, "n = " + std::to_string(n));
    o.require(count_total_closed_raw(2).decimal() == "162", "raw filter at n = 2");
    o.require(count_formula(2).decimal() == "162", "formula at n = 2");
    int code = -1;
    const auto out = run_cli({"count", "2"}, "", &code);
    o.require(code == 0 && out == std::vector<std::string>{"162"}, "cli count");
    return o;
}

Outcome ac9() {
    Outcome o;
    const Signature sig{"a", "b"};
    const auto corpus = testing::all_formulas({"a", "b"}, 2);
    const auto points = testing::all_interpretations(sig);
    auto valid = [&](const Formula& f) {
        for (const auto& i : points)
            if (!sat_ht(i, f)) return false;
        return true;
    };
    for (const auto& f : corpus) {
        o.require(valid(Formula::disj(Formula::neg(f), Formula::neg(Formula::neg(f)))), "weak excluded middle: " + print(f));
        for (const auto& g : corpus) {
            o.require(valid(Formula::disj(Formula::disj(f, Formula::implies(f, g)), Formula::neg(g))),
                      "axiom: " + print(f) + " / " + print(g));
            o.require(valid(Formula::equiv(Formula::neg(Formula::conj(f, g)),
                                           Formula::disj(Formula::neg(f), Formula::neg(g)))),
                      "de morgan: " + print(f) + " / " + print(g));
            o.require(valid(Formula::equiv(Formula::neg(Formula::disj(f, g)),
                                           Formula::conj(Formula::neg(f), Formula::neg(g)))),
                      "dual de morgan: " + print(f) + " / " + print(g));
            o.require(valid(Formula::equiv(Formula::disj(f, g), eliminate_connectives(Formula::disj(f, g)))),
                      "disjunction encoding: " + print(f) + " / " + print(g));
        }
    }
    bool em_fails = false;
    for (const auto& f : corpus)
        if (!valid(Formula::disj(f, Formula::neg(f)))) em_fails = true;
    o.require(em_fails, "excluded middle held everywhere");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 countermodel listing", ac1},
        {"AC2 countermodel program", ac2},
        {"AC3 models and dnf", ac3},
        {"AC4 syntactic worked example", ac4},
        {"AC5 translation property suite", ac5},
        {"AC6 rewrite and rule identities", ac6},
        {"AC7 equilibrium under contexts", ac7},
        {"AC8 counting", ac8},
        {"AC9 tautology suite", ac9},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << secs << " s)";
        if (!o.ok) std::cout << ": " << o.detail;
        std::cout << std::endl;
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
