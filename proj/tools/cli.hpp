#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "htlp/htlp.hpp"

namespace htlp::cli {

enum class Method { Syntactic, Countermodel };
enum class Format { Text, Structured };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::vector<std::string> signature;
    Method method = Method::Countermodel;
    CountermodelMode mode = CountermodelMode::Whole;
    bool simplify = false;
    bool verify = false;
    bool trace = false;
    bool annotate = false;
    bool verbose = false;
    bool allow_large_cap = false;
    Format format = Format::Text;
    std::size_t cap = kDefaultEnumerationCap;
    std::size_t count_n = 0;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3 };

inline constexpr std::size_t kUnacknowledgedCapLimit = 20;

namespace detail {

using nlohmann::json;

inline std::vector<std::string> split_atoms(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& chunk : raw) {
        std::string cur;
        for (char c : chunk) {
            if (c == ',' || c == ' ' || c == '\t') {
                if (!cur.empty()) out.push_back(std::move(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(std::move(cur));
    }
    return out;
}

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline Theory load(const std::vector<std::string>& paths, const Signature& extra, std::istream& in) {
    std::vector<Formula> formulas;
    Signature sig = extra;
    for (const auto& p : paths) {
        Theory t;
        try {
            t = parse_theory(read_input(p, in));
        } catch (const ParseError& e) {
            throw std::runtime_error(p + ":" + e.what());
        }
        formulas.insert(formulas.end(), t.formulas().begin(), t.formulas().end());
        sig = unite(sig, t.signature());
    }
    return Theory(std::move(formulas), sig);
}

inline json names_json(const Signature& sig, AtomMask m) { return sig.names_of(m); }

inline json interpretation_json(const HtInterpretation& i) {
    return {{"here", names_json(i.over(), i.here())}, {"there", names_json(i.over(), i.there())}};
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    bool structured() const { return cfg_.format == Format::Structured; }

    void line(const std::string& text, json item) {
        if (structured()) results_.push_back(std::move(item));
        else out_ << text << '\n';
    }

    void verification(bool ok) {
        verification_ = ok ? "VERIFIED" : "FAILED";
        if (!structured()) out_ << *verification_ << '\n';
    }

    void set_signature(const Signature& sig) { signature_ = sig.atoms(); }
    void extra(const std::string& key, json value) { extra_[key] = std::move(value); }

    void finish() {
        if (!structured()) return;
        json doc = {{"command", cfg_.subcommand}, {"signature", signature_}, {"results", results_}};
        doc["verification"] = verification_ ? json(*verification_) : json(nullptr);
        for (auto& [k, v] : extra_.items()) doc[k] = v;
        out_ << doc.dump(2) << '\n';
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    json results_ = json::array();
    json signature_ = json::array();
    json extra_ = json::object();
    std::optional<std::string> verification_;
};

inline int run_models(const RunConfig& cfg, const Theory& t, Emitter& em) {
    const bool counter = cfg.subcommand == "countermodels";
    const InterpretationSet set = counter ? ht_countermodels(t, cfg.cap) : ht_models(t, cfg.cap);
    for (const auto& i : set) em.line(to_string(i), interpretation_json(i));
    return kOk;
}

inline int run_equilibrium(const RunConfig& cfg, const Theory& t, Emitter& em) {
    for (const auto& y : equilibrium_models(t, cfg.cap)) em.line(to_string(y), y.names());
    return kOk;
}

inline int run_to_program(const RunConfig& cfg, const Theory& t, Emitter& em, std::ostream& err) {
    Program p;
    if (cfg.method == Method::Countermodel) {
        p = theory_to_program_cm(t, cfg.mode, cfg.cap);
        if (cfg.simplify) p = simplify(p, cfg.cap);
    } else {
        RewriteTrace trace;
        SyntacticOptions opt;
        opt.simplify = cfg.simplify;
        opt.cap = cfg.cap;
        p = theory_to_program_syn(t, opt, cfg.trace ? &trace : nullptr);
        if (cfg.trace) err << trace.render();
    }
    for (const auto& r : p.rules()) em.line(print(r), print(r));
    em.extra("rule_count", p.size());
    em.extra("nonnested", p.is_nonnested());
    if (!cfg.verify) return kOk;
    const bool ok = ht_equivalent(t, p.as_theory(), cfg.cap).equivalent();
    em.verification(ok);
    return ok ? kOk : kNegative;
}

inline int run_to_dnf(const RunConfig& cfg, const Theory& t, Emitter& em, std::ostream& out) {
    const auto clauses = dnf_clauses(t, cfg.cap);
    std::vector<Formula> disjuncts;
    for (const auto& c : clauses) disjuncts.push_back(c.clause);
    const Formula dnf = Formula::disj_all(disjuncts);
    if (em.structured()) {
        for (const auto& c : clauses)
            em.line({}, {{"clause", print(c.clause)}, {"source", interpretation_json(c.source)}});
        em.extra("formula", print(dnf));
    } else if (cfg.annotate && !clauses.empty()) {
        for (std::size_t k = 0; k < clauses.size(); ++k)
            out << (k ? "| " : "") << print(clauses[k].clause) << "  % " << to_string(clauses[k].source) << '\n';
    } else {
        out << print(dnf) << '\n';
    }
    if (!cfg.verify) return kOk;
    const bool ok = ht_equivalent(t, Theory({dnf}), cfg.cap).equivalent();
    em.verification(ok);
    return ok ? kOk : kNegative;
}

inline int run_check_equiv(const RunConfig& cfg, const Signature& extra, std::istream& in, Emitter& em) {
    const Theory a = load({cfg.inputs[0]}, extra, in);
    const Theory b = load({cfg.inputs[1]}, extra, in);
    const Signature sig = unite(a.signature(), b.signature());
    em.set_signature(sig);
    check_cap(sig, cfg.cap);
    const EquivalenceVerdict v = ht_equivalent(a.rebased(sig), b.rebased(sig), cfg.cap);
    if (v.equivalent()) {
        em.line("EQUIVALENT", {{"verdict", "EQUIVALENT"}});
        return kOk;
    }
    json item = {{"verdict", "WITNESS"}, {"satisfies", v.witness_satisfies_first ? "first" : "second"}};
    item["interpretation"] = interpretation_json(*v.witness);
    em.line("WITNESS " + to_string(*v.witness), item);
    return kNegative;
}

inline int run_count(const RunConfig& cfg, Emitter& em, std::ostream& out) {
    const ProgramCount c = count_formula(cfg.count_n);
    if (em.structured()) {
        em.line({}, c.decimal());
        if (cfg.verbose) {
            json table = json::array();
            for (const auto& f : count_factors(cfg.count_n))
                table.push_back({{"i", f.i}, {"binomial", f.sets_of_size_i.get_str()}, {"factor", f.per_set.get_str()}});
            em.extra("factors", table);
        }
        return kOk;
    }
    out << c.decimal() << '\n';
    if (cfg.verbose)
        for (const auto& f : count_factors(cfg.count_n))
            out << "i=" << f.i << " C(n,i)=" << f.sets_of_size_i.get_str() << " factor=" << f.per_set.get_str() << '\n';
    return kOk;
}

} // namespace detail

// Runs one parsed command. Returns the process exit code.
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    detail::Emitter em(cfg, out);
    try {
        if (cfg.cap > kUnacknowledgedCapLimit && !cfg.allow_large_cap) {
            err << "error: --cap above " << kUnacknowledgedCapLimit << " requires --allow-large-cap\n";
            return kInputError;
        }
        const Signature extra(detail::split_atoms(cfg.signature));
        int code = kOk;
        if (cfg.subcommand == "count") {
            code = detail::run_count(cfg, em, out);
        } else if (cfg.subcommand == "check-equiv") {
            if (cfg.inputs.size() != 2) {
                err << "error: check-equiv needs exactly two inputs\n";
                return kInputError;
            }
            code = detail::run_check_equiv(cfg, extra, in, em);
        } else {
            const std::vector<std::string> inputs = cfg.inputs.empty() ? std::vector<std::string>{"-"} : cfg.inputs;
            const Theory t = detail::load(inputs, extra, in);
            em.set_signature(t.signature());
            const bool enumerates = cfg.subcommand != "to-program" || cfg.method == Method::Countermodel || cfg.verify;
            if (enumerates) check_cap(t.signature(), cfg.cap);
            if (cfg.subcommand == "models" || cfg.subcommand == "countermodels") code = detail::run_models(cfg, t, em);
            else if (cfg.subcommand == "equilibrium") code = detail::run_equilibrium(cfg, t, em);
            else if (cfg.subcommand == "to-program") code = detail::run_to_program(cfg, t, em, err);
            else if (cfg.subcommand == "to-dnf") code = detail::run_to_dnf(cfg, t, em, out);
            else {
                err << "error: unknown command '" << cfg.subcommand << "'\n";
                return kInputError;
            }
        }
        em.finish();
        return code;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

// Parses argv-style arguments (without the program name) and runs the command.
inline int main(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Here-and-there toolkit: models, equilibrium models, program and DNF translations", "htlp"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string method = "countermodel", mode = "whole", format = "text";

    auto common = [&](CLI::App* sub, bool inputs_required) {
        auto* opt = sub->add_option("inputs", cfg.inputs, "theory files ('-' for standard input)");
        if (inputs_required) opt->required();
        sub->add_option("--signature", cfg.signature, "extra atoms, comma or blank separated");
        sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured", "json"}));
        sub->add_option("--cap", cfg.cap, "enumeration cap in atoms")->check(CLI::PositiveNumber);
        sub->add_flag("--allow-large-cap", cfg.allow_large_cap, "acknowledge a cap above 20");
    };

    auto* models = app.add_subcommand("models", "list HT models");
    common(models, false);
    auto* counter = app.add_subcommand("countermodels", "list HT countermodels");
    common(counter, false);
    auto* equil = app.add_subcommand("equilibrium", "list equilibrium models (answer sets)");
    common(equil, false);

    auto* to_program = app.add_subcommand("to-program", "translate a theory into a strongly equivalent program");
    common(to_program, false);
    to_program->add_option("--method", method, "syntactic or countermodel")
        ->check(CLI::IsMember({"syntactic", "countermodel"}));
    to_program->add_option("--mode", mode, "whole or per_formula (countermodel method)")
        ->check(CLI::IsMember({"whole", "per_formula", "per-formula"}));
    to_program->add_flag("--simplify", cfg.simplify, "simplify the resulting program");
    to_program->add_flag("--verify", cfg.verify, "re-check HT equivalence with the input");
    to_program->add_flag("--trace", cfg.trace, "log syntactic rewrite steps to standard error");

    auto* to_dnf = app.add_subcommand("to-dnf", "build the disjunctive normal form from the HT models");
    common(to_dnf, false);
    to_dnf->add_flag("--verify", cfg.verify, "re-check HT equivalence with the input");
    to_dnf->add_flag("--annotate", cfg.annotate, "one clause per line with its source interpretation");

    auto* check = app.add_subcommand("check-equiv", "decide strong equivalence of two theories");
    common(check, true);

    auto* count = app.add_subcommand("count", "number of programs modulo strong equivalence over n atoms");
    count->add_option("n", cfg.count_n, "number of atoms")->required();
    count->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured", "json"}));
    count->add_flag("--verbose", cfg.verbose, "print the per-size factor table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    cfg.method = method == "syntactic" ? Method::Syntactic : Method::Countermodel;
    cfg.mode = mode == "whole" ? CountermodelMode::Whole : CountermodelMode::PerFormula;
    cfg.format = format == "text" ? Format::Text : Format::Structured;
    return run(cfg, in, out, err);
}

} // namespace htlp::cli
