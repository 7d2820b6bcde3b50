#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "mvlogic/json_io.hpp"
#include "mvlogic/principles.hpp"

using nlohmann::json;

namespace {

using namespace mvl;

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const auto slash = item.find('/');
        if (slash == std::string::npos)
            out.emplace_back(std::stoll(item));
        else
            out.emplace_back(std::stoll(item.substr(0, slash)),
                             std::stoll(item.substr(slash + 1)));
        pos = comma + 1;
    }
    return out;
}

std::vector<int> default_vars(const Formula& f, int n_flag) {
    std::set<int> fv = f.free_variables();
    int n = n_flag;
    for (int v : fv) n = std::max(n, v);
    std::vector<int> vars;
    for (int i = 1; i <= std::max(n, 1); ++i) vars.push_back(i);
    return vars;
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // flat text rendering
    for (const auto& [key, value] : j.items())
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

json judgment_json(const JudgmentResult& res) {
    json j;
    j["holds"] = res.holds;
    if (res.witness) j["witness"] = to_json(*res.witness);
    return j;
}

// Every counterexample valuation printed by a judgment is re-checked by a
// fresh evaluation before it leaves the process.
void reverify(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("witness failed re-verification: " + what);
}

int run(int argc, char** argv) {
    CLI::App app{"exact workbench for t-norm based many-valued logics"};
    app.require_subcommand(1);

    std::string alg_str = "MVQ", formula_str, formula2_str, premises_str, val_str;
    std::string p_str, q_str, ratio_str, variant_str = "p2", format = "text";
    std::string table_str;
    int vars_flag = 1, depth = 3, size = 2, max_size = 5, max_steps = 16;
    std::uint64_t seed = 12345;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_eval = app.add_subcommand("eval", "evaluate a formula under a valuation");
    c_eval->add_option("--alg", alg_str);
    c_eval->add_option("--formula", formula_str)->required();
    c_eval->add_option("--val", val_str);
    add_common(c_eval);

    auto* c_taut = app.add_subcommand("taut", "tautology check on a finite chain");
    c_taut->add_option("--alg", alg_str);
    c_taut->add_option("--formula", formula_str)->required();
    c_taut->add_option("--vars", vars_flag);
    add_common(c_taut);

    auto* c_equiv = app.add_subcommand("equiv", "semantic equivalence of two formulas");
    c_equiv->add_option("--alg", alg_str);
    c_equiv->add_option("--formula", formula_str)->required();
    c_equiv->add_option("--formula2", formula2_str)->required();
    c_equiv->add_option("--vars", vars_flag);
    add_common(c_equiv);

    auto* c_conseq = app.add_subcommand("conseq", "semantic consequence check");
    c_conseq->add_option("--alg", alg_str);
    c_conseq->add_option("--premises", premises_str, "semicolon-separated formulas");
    c_conseq->add_option("--formula", formula_str)->required();
    c_conseq->add_option("--vars", vars_flag);
    add_common(c_conseq);

    auto* c_sep = app.add_subcommand("separate",
                                     "separating formula for two rational points");
    c_sep->add_option("--p", p_str)->required();
    c_sep->add_option("--q", q_str)->required();
    add_common(c_sep);

    auto* c_thr = app.add_subcommand("threshold",
                                     "basic literal with zero set [0, h/k]");
    c_thr->add_option("--ratio", ratio_str, "target threshold h/k")->required();
    c_thr->add_option("--max-steps", max_steps, "largest step parameter");
    add_common(c_thr);

    auto* c_p1 = app.add_subcommand("check-p1", "equal one-sets imply equivalence?");
    c_p1->add_option("--alg", alg_str);
    c_p1->add_option("--vars", vars_flag);
    c_p1->add_option("--depth", depth);
    add_common(c_p1);

    auto* c_p2 = app.add_subcommand("check-p2", "do formulas separate valuations?");
    c_p2->add_option("--alg", alg_str);
    c_p2->add_option("--vars", vars_flag);
    c_p2->add_option("--depth", depth);
    c_p2->add_option("--variant", variant_str)
        ->check(CLI::IsMember({"p2", "p2prime", "p2doubleprime"}));
    c_p2->add_option("--seed", seed);
    add_common(c_p2);

    auto* c_cls = app.add_subcommand("classify", "structural classification");
    c_cls->add_option("--alg", alg_str);
    add_common(c_cls);

    auto* c_census = app.add_subcommand("census", "classify all chains up to a size");
    c_census->add_option("--max-size", max_size);
    c_census->add_option("--vars", vars_flag);
    c_census->add_option("--depth", depth);
    add_common(c_census);

    auto* c_enum = app.add_subcommand("enumerate-chains", "all chains of one size");
    c_enum->add_option("--size", size)->required();
    add_common(c_enum);

    auto* c_dec = app.add_subcommand("decompose", "MV-chain summand sizes");
    c_dec->add_option("--alg", alg_str);
    c_dec->add_option("--table", table_str,
                      "raw operation table as JSON {n, conj, imp}");
    add_common(c_dec);

    CLI11_PARSE(app, argc, argv);

    if (c_eval->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        const Formula f = parse_formula(formula_str);
        const Valuation v = parse_valuation(alg, val_str);
        const TruthValue out = eval(alg, v, f);
        emit({{"algebra", alg.str()}, {"formula", render_formula(f)},
              {"value", out.str()}, {"is_top", out.is_top}},
             format);
    } else if (c_taut->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        const Formula f = parse_formula(formula_str);
        const auto vars = default_vars(f, vars_flag);
        const JudgmentResult res = is_tautology(alg, f, vars);
        if (res.witness)
            reverify(!eval(alg, *res.witness, f).is_top, "taut counter-valuation");
        json j = judgment_json(res);
        j["formula"] = render_formula(f);
        j["algebra"] = alg.str();
        emit(j, format);
    } else if (c_equiv->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        const Formula f = parse_formula(formula_str);
        const Formula g = parse_formula(formula2_str);
        auto vars = default_vars(f, vars_flag);
        vars = default_vars(g, static_cast<int>(vars.size()));
        const JudgmentResult res = are_equivalent(alg, f, g, vars);
        if (res.witness)
            reverify(eval(alg, *res.witness, f) != eval(alg, *res.witness, g),
                     "equiv counter-valuation");
        json j = judgment_json(res);
        j["formula"] = render_formula(f);
        j["formula2"] = render_formula(g);
        j["algebra"] = alg.str();
        emit(j, format);
    } else if (c_conseq->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        std::vector<Formula> premises;
        std::size_t pos = 0;
        while (pos <= premises_str.size() && !premises_str.empty()) {
            std::size_t semi = premises_str.find(';', pos);
            if (semi == std::string::npos) semi = premises_str.size();
            premises.push_back(parse_formula(premises_str.substr(pos, semi - pos)));
            pos = semi + 1;
        }
        const Formula f = parse_formula(formula_str);
        int n = vars_flag;
        for (const Formula& p : premises)
            n = static_cast<int>(default_vars(p, n).size());
        const auto vars = default_vars(f, n);
        const JudgmentResult res = semantic_consequence(alg, premises, f, vars);
        json j = judgment_json(res);
        j["algebra"] = alg.str();
        emit(j, format);
    } else if (c_sep->parsed()) {
        const std::vector<Rational> p = parse_point(p_str), q = parse_point(q_str);
        const SeparationResult res = separate_points(p, q);
        const Algebra mvq = Algebra::parse("MVQ");
        std::vector<std::pair<int, TruthValue>> at_p, at_q;
        for (std::size_t i = 0; i < p.size(); ++i) {
            at_p.emplace_back(static_cast<int>(i) + 1, mvq.parse_value(p[i].str()));
            at_q.emplace_back(static_cast<int>(i) + 1, mvq.parse_value(q[i].str()));
        }
        const TruthValue vp = eval(mvq, Valuation(mvq, at_p), res.formula);
        const TruthValue vq = eval(mvq, Valuation(mvq, at_q), res.formula);
        reverify(vq == mvq.bottom() && vp != mvq.bottom(), "separator values");
        emit({{"formula", render_formula(res.formula)},
              {"literal", res.literal.str()},
              {"negated", res.negated},
              {"value_at_p", vp.str()},
              {"value_at_q", vq.str()}},
             format);
    } else if (c_thr->parsed()) {
        const auto slash = ratio_str.find('/');
        if (slash == std::string::npos)
            throw std::invalid_argument("--ratio expects h/k");
        const int h = std::stoi(ratio_str.substr(0, slash));
        const int k = std::stoi(ratio_str.substr(slash + 1));
        const BasicLiteral lit = threshold_literal(h, k, max_steps);
        const PWLFunction pwl = literal_to_pwl(lit);
        emit({{"literal", lit.str()},
              {"formula", render_formula(expand_basic_literal(lit))},
              {"pwl", pwl.str()},
              {"zero_threshold", Rational(h, k).str()}},
             format);
    } else if (c_p1->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        const PrincipleReport r = check_p1(alg, vars_flag, depth);
        if (r.verdict == Verdict::FailsWithWitness)
            reverify(eval(alg, *r.valuation, *r.alpha) !=
                         eval(alg, *r.valuation, *r.beta),
                     "P1 counterexample pair");
        emit(to_json(r), format);
    } else if (c_p2->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        const Principle variant = variant_str == "p2prime" ? Principle::P2Prime
                                  : variant_str == "p2doubleprime"
                                      ? Principle::P2DoublePrime
                                      : Principle::P2;
        const PrincipleReport r = check_p2(alg, vars_flag, depth, variant, seed);
        if (r.separator && r.mu && r.nu) {
            const TruthValue at_mu = eval(alg, *r.mu, *r.separator);
            const TruthValue at_nu = eval(alg, *r.nu, *r.separator);
            bool ok = false;
            switch (variant) {
            case Principle::P2: ok = at_mu != alg.bottom() && at_nu == alg.bottom(); break;
            case Principle::P2Prime: ok = !at_mu.is_top && at_nu.is_top; break;
            default: ok = at_mu == alg.bottom() && at_nu.is_top; break;
            }
            reverify(ok, "P2 separator");
        }
        emit(to_json(r), format);
    } else if (c_cls->parsed()) {
        const Algebra alg = Algebra::parse(alg_str);
        json j = to_json(classify_chain(alg));
        j["algebra"] = alg.str();
        emit(j, format);
    } else if (c_census->parsed()) {
        json rows = json::array();
        for (const CensusRow& row : census(max_size, vars_flag, depth)) {
            json j;
            j["algebra"] = row.alg.str();
            j["classification"] = to_json(row.classification);
            j["p1"] = to_json(row.p1);
            j["p2"] = to_json(row.p2);
            rows.push_back(std::move(j));
        }
        if (format == "json")
            std::cout << rows.dump(2) << "\n";
        else
            for (const auto& row : rows)
                std::cout << row["algebra"].get<std::string>() << ": "
                          << row["classification"]["verdict"].get<std::string>()
                          << ", P1 " << row["p1"]["verdict"].get<std::string>()
                          << ", P2 " << row["p2"]["verdict"].get<std::string>()
                          << "\n";
    } else if (c_enum->parsed()) {
        json arr = json::array();
        for (const Algebra& alg : enumerate_finite_chains(size))
            arr.push_back(alg.str());
        emit({{"size", size}, {"chains", arr}}, format);
    } else if (c_dec->parsed()) {
        std::vector<int> sizes;
        if (!table_str.empty()) {
            const json t = json::parse(table_str);
            OperationTable table;
            table.n = t.at("n").get<int>();
            table.conj = t.at("conj").get<std::vector<int>>();
            table.imp = t.at("imp").get<std::vector<int>>();
            sizes = decompose_finite_chain(table);
        } else {
            sizes = decompose_finite_chain(Algebra::parse(alg_str));
        }
        emit({{"sizes", sizes}}, format);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        // anything else in the logic_error family is a broken invariant
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
