#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fo2/analysis.hpp"
#include "fo2/congruence.hpp"
#include "fo2/hierarchy.hpp"
#include "fo2/omega_term.hpp"
#include "fo2/ranker_class.hpp"
#include "fo2/version.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json tool_stamp() {
    return {{"name", fo2::kToolName}, {"version", fo2::kVersion}};
}

fo2::Alphabet ranker_letters(const std::string& text, const std::string& word) {
    std::string symbols = word;
    for (char c : text) {
        if (c != 'X' && c != 'Y' && c != '.' &&
            !std::isspace(static_cast<unsigned char>(c))) {
            symbols += c;
        }
    }
    return fo2::Alphabet(symbols);
}

fo2::Side parse_side(const std::string& text) {
    if (text == "right") {
        return fo2::Side::Right;
    }
    if (text == "left") {
        return fo2::Side::Left;
    }
    throw std::invalid_argument("side must be 'right' or 'left'");
}

fo2::Dfa load_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open dfa file: " + path);
    }
    return fo2::parse_dfa_file(in);
}

fo2::FiniteMonoid load_monoid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open table file: " + path);
    }
    return fo2::parse_monoid_table(in);
}

struct AnalyzeArgs {
    std::string regex;
    std::string dfa_path;
    std::string alphabet;
    int max_variables = 4;
    bool json = false;
    bool has_regex = false;
    bool has_dfa = false;
    bool has_alphabet = false;
};

int run_analyze(const AnalyzeArgs& a) {
    fo2::Dfa d;
    std::string kind;
    std::string echo;
    if (a.has_regex) {
        std::optional<fo2::Alphabet> ambient;
        if (a.has_alphabet) {
            ambient = fo2::Alphabet(a.alphabet);
        }
        d = fo2::compile_regex(a.regex, ambient);
        kind = "regex";
        echo = a.regex;
    } else {
        d = load_dfa(a.dfa_path);
        kind = "dfa";
        echo = a.dfa_path;
    }
    const fo2::AnalysisReport report =
        fo2::analyze_language(d, kind, echo, a.max_variables);
    std::cout << (a.json ? fo2::report_json(report) : fo2::report_text(report))
              << std::endl;
    return report.level.inconclusive ? 3 : 0;
}

struct RankerEvalArgs {
    std::string word;
    std::string ranker;
};

int run_ranker_eval(const RankerEvalArgs& a) {
    const fo2::Ranker r = fo2::parse_ranker(a.ranker, ranker_letters(a.ranker, a.word));
    const fo2::EvalOutcome outcome = fo2::eval_ranker(a.word, r);
    ordered_json j;
    j["tool"] = tool_stamp();
    j["input"] = {{"word", a.word}, {"ranker", r.to_string()}};
    ordered_json result;
    result["defined"] = outcome.defined;
    if (outcome.defined) {
        result["position"] = outcome.position;
        result["condensed"] = outcome.condensed;
        ordered_json chain = ordered_json::array();
        for (const auto& [lo, hi] : outcome.chain) {
            chain.push_back({lo, hi});
        }
        result["chain"] = std::move(chain);
    }
    j["result"] = std::move(result);
    std::cout << j.dump(2) << std::endl;
    return 0;
}

struct RankerAgreeArgs {
    std::string u;
    std::string v;
    std::string class_spec;
    std::string mode = "condensed";
    std::string alphabet;
    bool has_alphabet = false;
    int depth_cap = 0;
    bool has_cap = false;
};

int run_ranker_agree(const RankerAgreeArgs& a) {
    const fo2::Alphabet ambient = a.has_alphabet
                                      ? fo2::Alphabet(a.alphabet)
                                      : fo2::alph(a.u).unioned(fo2::alph(a.v));
    std::optional<int> cap;
    if (a.has_cap) {
        cap = a.depth_cap;
    }
    const fo2::RankerClassSpec spec = fo2::parse_class_spec(a.class_spec, ambient, cap);
    fo2::AgreeMode mode;
    if (a.mode == "defined") {
        mode = fo2::AgreeMode::Defined;
    } else if (a.mode == "condensed") {
        mode = fo2::AgreeMode::Condensed;
    } else {
        throw std::invalid_argument("mode must be 'defined' or 'condensed'");
    }
    const bool agree = fo2::agree_on_rankers(a.u, a.v, spec, mode);
    ordered_json j;
    j["tool"] = tool_stamp();
    j["input"] = {{"u", a.u},
                  {"v", a.v},
                  {"class", a.class_spec},
                  {"mode", a.mode},
                  {"alphabet", ambient.letters()}};
    j["result"] = agree;
    std::cout << j.dump(2) << std::endl;
    return agree ? 0 : 1;
}

struct EquivArgs {
    std::string u;
    std::string v;
    int m = 1;
    int n = 1;
    std::string mode = "condensed";
    std::string alphabet;
    bool has_alphabet = false;
};

int run_equiv(const EquivArgs& a) {
    bool result = false;
    if (a.mode == "plain" || a.mode == "condensed") {
        std::optional<fo2::Alphabet> ambient;
        if (a.has_alphabet) {
            ambient = fo2::Alphabet(a.alphabet);
        }
        const fo2::WiMode mode =
            a.mode == "plain" ? fo2::WiMode::Plain : fo2::WiMode::Condensed;
        result = fo2::wi_equivalent(a.u, a.v, a.m, a.n, mode, ambient);
    } else if (a.mode == "cong-right" || a.mode == "cong-left") {
        fo2::CongruenceQuery q;
        q.m = a.m;
        q.n = a.n;
        q.side = a.mode == "cong-right" ? fo2::Side::Right : fo2::Side::Left;
        result = fo2::cong_equivalent(a.u, a.v, q);
    } else {
        throw std::invalid_argument(
            "mode must be plain, condensed, cong-right or cong-left");
    }
    std::cout << (result ? "true" : "false") << std::endl;
    return result ? 0 : 1;
}

struct IdentityArgs {
    std::string table_path;
    std::string lhs;
    std::string rhs;
    int max_variables = 4;
};

int run_identity(const IdentityArgs& a) {
    const fo2::FiniteMonoid m = load_monoid(a.table_path);
    const fo2::OmegaTerm lhs = fo2::parse_omega_term(a.lhs);
    const fo2::OmegaTerm rhs = fo2::parse_omega_term(a.rhs);
    const fo2::IdentityResult res =
        fo2::satisfies_identity(m, lhs, rhs, a.max_variables);
    ordered_json j;
    j["tool"] = tool_stamp();
    j["input"] = {{"table", a.table_path}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    ordered_json result;
    result["holds"] = res.holds;
    if (!res.holds) {
        ordered_json witness;
        for (size_t i = 0; i < res.counterexample.size(); ++i) {
            witness["x" + std::to_string(i + 1)] = res.counterexample[i];
        }
        result["counterexample"] = std::move(witness);
    }
    j["result"] = std::move(result);
    std::cout << j.dump(2) << std::endl;
    return res.holds ? 0 : 1;
}

struct QuotientArgs {
    std::string alphabet;
    int m = 1;
    int n = 1;
    std::string side = "right";
    int length_cap = 12;
    bool json = false;
};

int run_quotient(const QuotientArgs& a) {
    fo2::CongruenceQuery q;
    q.m = a.m;
    q.n = a.n;
    q.side = parse_side(a.side);
    const fo2::QuotientMonoid quotient =
        fo2::quotient_monoid(fo2::Alphabet(a.alphabet), q, a.length_cap);
    if (!a.json) {
        std::cout << fo2::format_monoid_table(quotient.monoid) << std::flush;
        return 0;
    }
    ordered_json j;
    j["tool"] = tool_stamp();
    j["input"] = {{"alphabet", a.alphabet},
                  {"m", a.m},
                  {"n", a.n},
                  {"side", a.side},
                  {"length_cap", a.length_cap}};
    ordered_json result;
    result["size"] = quotient.monoid.size;
    result["identity"] = quotient.monoid.identity;
    ordered_json table = ordered_json::array();
    for (int i = 0; i < quotient.monoid.size; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < quotient.monoid.size; ++k) {
            row.push_back(quotient.monoid.mul(i, k));
        }
        table.push_back(std::move(row));
    }
    result["table"] = std::move(table);
    ordered_json reps = ordered_json::array();
    for (const fo2::Word& w : quotient.representatives) {
        reps.push_back(w);
    }
    result["representatives"] = std::move(reps);
    ordered_json gens;
    for (const auto& [letter, elem] : quotient.monoid.generators) {
        gens[std::string(1, letter)] = elem;
    }
    result["generators"] = std::move(gens);
    j["result"] = std::move(result);
    std::cout << j.dump(2) << std::endl;
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Position of a regular language in the two-variable alternation hierarchy"};
    app.set_version_flag("--version", std::string(fo2::kToolName) + " " + fo2::kVersion);
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Full pipeline: minimize, syntactic monoid, level scan");
    CLI::Option* opt_regex =
        analyze->add_option("--regex", analyze_args.regex, "Regular expression input");
    CLI::Option* opt_dfa =
        analyze->add_option("--dfa", analyze_args.dfa_path, "DFA file input");
    CLI::Option* opt_alpha = analyze->add_option(
        "--alphabet", analyze_args.alphabet, "Ambient alphabet for --regex");
    analyze->add_option("--max-vars", analyze_args.max_variables,
                        "Variable bound for identity checks");
    analyze->add_flag("--json", analyze_args.json, "Emit the report as JSON");
    opt_regex->excludes(opt_dfa);
    opt_alpha->needs(opt_regex);

    CLI::App* ranker = app.add_subcommand("ranker", "Ranker evaluation and agreement");
    ranker->require_subcommand(1);

    RankerEvalArgs eval_args;
    CLI::App* ranker_eval =
        ranker->add_subcommand("eval", "Evaluate a ranker on a word");
    ranker_eval->add_option("--word", eval_args.word, "Input word")->required();
    ranker_eval->add_option("--ranker", eval_args.ranker, "Ranker, e.g. Xa.Yb")
        ->required();

    RankerAgreeArgs agree_args;
    CLI::App* ranker_agree =
        ranker->add_subcommand("agree", "Agreement of two words on a ranker class");
    ranker_agree->add_option("--u", agree_args.u, "First word")->required();
    ranker_agree->add_option("--v", agree_args.v, "Second word")->required();
    ranker_agree
        ->add_option("--class", agree_args.class_spec, "Class spec, e.g. R:1,2 or uRX:2,3")
        ->required();
    ranker_agree->add_option("--mode", agree_args.mode, "defined or condensed");
    CLI::Option* agree_alpha = ranker_agree->add_option(
        "--alphabet", agree_args.alphabet, "Ambient alphabet (default: letters of u and v)");
    CLI::Option* agree_cap = ranker_agree->add_option(
        "--cap", agree_args.depth_cap, "Depth cap for uR:m style classes");

    EquivArgs equiv_args;
    CLI::App* equiv = app.add_subcommand(
        "equiv", "Word equivalence at a hierarchy level");
    equiv->add_option("--u", equiv_args.u, "First word")->required();
    equiv->add_option("--v", equiv_args.v, "Second word")->required();
    equiv->add_option("-m,--m", equiv_args.m, "Block count")->required();
    equiv->add_option("-n,--n", equiv_args.n, "Depth")->required();
    equiv->add_option("--mode", equiv_args.mode,
                      "plain, condensed, cong-right or cong-left");
    CLI::Option* equiv_alpha = equiv->add_option(
        "--alphabet", equiv_args.alphabet, "Ambient alphabet (default: letters of u and v)");

    CLI::App* monoid = app.add_subcommand("monoid", "Monoid identities and quotients");
    monoid->require_subcommand(1);

    IdentityArgs identity_args;
    CLI::App* identity =
        monoid->add_subcommand("identity", "Check an omega-term identity on a table");
    identity->add_option("--table", identity_args.table_path, "Multiplication table file")
        ->required();
    identity->add_option("--lhs", identity_args.lhs, "Left term")->required();
    identity->add_option("--rhs", identity_args.rhs, "Right term")->required();
    identity->add_option("--max-vars", identity_args.max_variables,
                         "Variable bound for the scan");

    QuotientArgs quotient_args;
    CLI::App* quotient =
        monoid->add_subcommand("quotient", "Quotient monoid of a congruence");
    quotient->add_option("--alphabet", quotient_args.alphabet, "Alphabet letters")
        ->required();
    quotient->add_option("-m,--m", quotient_args.m, "Block count")->required();
    quotient->add_option("-n,--n", quotient_args.n, "Depth")->required();
    quotient->add_option("--side", quotient_args.side, "right or left");
    quotient->add_option("--cap", quotient_args.length_cap,
                         "Word length cap for the closure");
    quotient->add_flag("--json", quotient_args.json, "Emit JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    analyze_args.has_regex = opt_regex->count() > 0;
    analyze_args.has_dfa = opt_dfa->count() > 0;
    analyze_args.has_alphabet = opt_alpha->count() > 0;
    agree_args.has_alphabet = agree_alpha->count() > 0;
    agree_args.has_cap = agree_cap->count() > 0;
    equiv_args.has_alphabet = equiv_alpha->count() > 0;

    try {
        if (analyze->parsed()) {
            if (analyze_args.has_regex == analyze_args.has_dfa) {
                std::cerr << "error: exactly one of --regex or --dfa is required"
                          << std::endl;
                return 2;
            }
            return run_analyze(analyze_args);
        }
        if (ranker->parsed()) {
            if (ranker_eval->parsed()) {
                return run_ranker_eval(eval_args);
            }
            return run_ranker_agree(agree_args);
        }
        if (equiv->parsed()) {
            return run_equiv(equiv_args);
        }
        if (monoid->parsed()) {
            if (identity->parsed()) {
                return run_identity(identity_args);
            }
            return run_quotient(quotient_args);
        }
        std::cerr << "error: no command selected" << std::endl;
        return 2;
    } catch (const fo2::StabilizationError& e) {
        std::cerr << "inconclusive: " << e.what() << std::endl;
        return 3;
    } catch (const fo2::VariableBoundError& e) {
        std::cerr << "inconclusive: " << e.what() << std::endl;
        return 3;
    } catch (const fo2::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
