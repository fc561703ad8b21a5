#include "intermute/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "intermute/decide.hpp"
#include "intermute/equations.hpp"
#include "intermute/error.hpp"
#include "intermute/grid.hpp"
#include "intermute/lattice.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/restrict.hpp"
#include "intermute/serialize.hpp"

namespace intermute {

namespace {

constexpr int ok = 0, no = 1, outside = 2, bad_input = 3;

struct InputError : Error {
    using Error::Error;
};

TheoryId parse_theory(const std::string& name) {
    if (auto t = theory_from_name(name)) return *t;
    throw InputError("unknown theory " + name);
}

Objects parse_objects(const std::string& name) {
    if (name == "formulas") return Objects::Formulas;
    if (name == "sequences") return Objects::FormSequences;
    if (name == "sets") return Objects::FormSets;
    throw InputError("unknown objects mode " + name);
}

std::set<std::string> parse_letter_list(const std::string& text) {
    std::set<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.insert(item);
    return out;
}

std::string join(const LetterSeq& s) {
    std::string out;
    for (const auto& l : s) out += (out.empty() ? "" : " ") + l;
    return out;
}

struct Options {
    bool json = false;
    std::string formula, arrow, x, y, theory, style = "ascii", objects = "formulas", letters;
    std::vector<std::string> arrows;
    bool rel = false, mat = false;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

int cmd_parse(const Options& o, std::ostream& out) {
    if (!o.formula.empty() == !o.arrow.empty()) throw InputError("give exactly one of -f and -a");
    const std::string text = o.formula.empty() ? to_string(parse_arrow(o.arrow)) : to_string(parse_formula(o.formula));
    if (o.json) out << Json{{o.formula.empty() ? "arrow" : "formula", text}}.dump() << '\n';
    else out << text << '\n';
    return ok;
}

int cmd_nf(const Options& o, std::ostream& out) {
    const std::string text = to_string(normal_form(parse_formula(o.formula)));
    if (o.json) out << Json{{"normalForm", text}}.dump() << '\n';
    else out << text << '\n';
    return ok;
}

int cmd_grid(const Options& o, std::ostream& out) {
    const Grid g = grid(strictify(parse_formula(o.formula)));
    if (o.json) {
        out << to_json(g).dump() << '\n';
        return ok;
    }
    GridStyle style;
    if (o.style == "ascii") style = GridStyle::Ascii;
    else if (o.style == "svg") style = GridStyle::Svg;
    else if (o.style == "text") style = GridStyle::Text;
    else throw InputError("unknown style " + o.style);
    out << render_grid(g, style);
    return ok;
}

int cmd_tblr(const Options& o, std::ostream& out) {
    const TBLR t = tblr(strictify(parse_formula(o.formula)));
    if (o.json) out << to_json(t).dump() << '\n';
    else
        out << "top: " << join(t.top) << "\nbottom: " << join(t.bottom) << "\nleft: " << join(t.left)
            << "\nright: " << join(t.right) << '\n';
    return ok;
}

int cmd_legit(const Options& o, std::ostream& out) {
    const auto c = check_legitimate(strictify(parse_formula(o.x)), strictify(parse_formula(o.y)));
    if (o.json) {
        Json j{{"legitimate", bool(c)}};
        if (c) j["witness"] = to_json(*c.witness);
        else j["failure"] = c.failure;
        out << j.dump() << '\n';
    } else if (c) {
        out << to_string(*c.witness);
    } else {
        out << "not legitimate: " << c.failure << '\n';
    }
    return c ? ok : no;
}

int cmd_synth(const Options& o, std::ostream& out) {
    const FormSequence x = strictify(parse_formula(o.x)), y = strictify(parse_formula(o.y));
    const auto c = check_legitimate(x, y);
    if (!c) {
        if (o.json) out << Json{{"legitimate", false}, {"failure", c.failure}}.dump() << '\n';
        else out << "not legitimate: " << c.failure << '\n';
        return no;
    }
    const std::string term = to_string(synthesize(x, y));
    if (o.json) out << Json{{"legitimate", true}, {"arrow", term}}.dump() << '\n';
    else out << term << '\n';
    return ok;
}

int cmd_equal(const Options& o, std::ostream& out) {
    if (o.arrows.size() != 2) throw InputError("give two arrows with -a");
    const Verdict v = decide_equal(parse_arrow(o.arrows[0]), parse_arrow(o.arrows[1]), parse_theory(o.theory),
                                   parse_objects(o.objects));
    out << (o.json ? to_json(v).dump() : to_string(v)) << '\n';
    return v.tag == Verdict::Tag::Equal ? ok : v.tag == Verdict::Tag::NotEqual ? no : outside;
}

int cmd_exists(const Options& o, std::ostream& out) {
    const ExistsAnswer a = decide_exists(parse_formula(o.x), parse_formula(o.y), parse_theory(o.theory));
    out << (o.json ? to_json(a).dump() : to_string(a)) << '\n';
    return a.tag == ExistsAnswer::Tag::True ? ok : a.tag == ExistsAnswer::Tag::False ? no : outside;
}

int cmd_eval(const Options& o, std::ostream& out) {
    if (o.rel == o.mat) throw InputError("give exactly one of --rel and --mat");
    const ArrowTerm f = parse_arrow(o.arrow);
    const Objects mode = parse_objects(o.objects);
    if (o.rel) {
        const Relation r = eval_rel(f, mode);
        out << (o.json ? to_json(r).dump() : to_string(r)) << '\n';
    } else {
        const IntMatrix m = eval_mat(f, mode);
        if (o.json) out << to_json(m).dump() << '\n';
        else out << to_string(m);
    }
    return ok;
}

int cmd_develop(const Options& o, std::ostream& out) {
    const Development d = develop(parse_arrow(o.arrow), parse_objects(o.objects));
    if (o.json) {
        Json factors = Json::array();
        for (const auto& f : d.factors) factors.push_back(to_string(f));
        out << Json{{"source", to_string(d.source)}, {"factors", factors}}.dump() << '\n';
        return ok;
    }
    for (const auto& f : d.factors) out << to_string(f) << '\n';
    return ok;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    const std::optional<TheoryId> t = o.theory.empty() ? std::nullopt : std::optional<TheoryId>(parse_theory(o.theory));
    Rng rng(o.seed);
    FormulaShape shape;
    std::size_t failures = 0, run = 0;
    Json report = Json::array();
    for (const auto& s : schema_catalogue()) {
        if (t) {
            const auto ts = schema_theories(s);
            if (std::find(ts.begin(), ts.end(), *t) == ts.end()) continue;
        }
        ++run;
        const std::size_t trials = s.arity == 0 ? 1 : o.trials;
        std::optional<std::string> failed;
        for (std::size_t k = 0; k < trials && !failed; ++k) {
            std::vector<Formula> args;
            for (std::size_t i = 0; i < s.arity; ++i) args.push_back(random_formula(rng, shape));
            if (!check_equation(s, args)) {
                std::string inst;
                for (const auto& a : args) inst += (inst.empty() ? "" : ", ") + to_string(a);
                failed = inst;
            }
        }
        failures += failed.has_value();
        if (o.json) {
            Json j{{"schema", s.name}, {"pass", !failed}, {"trials", trials}};
            if (failed) j["instantiation"] = *failed;
            report.push_back(j);
        } else {
            out << (failed ? "FAIL " : "PASS ") << s.name << " (" << trials << " trials)";
            if (failed) out << " at " << *failed;
            out << '\n';
        }
    }
    if (o.json) out << Json{{"seed", o.seed}, {"schemas", report}, {"failures", failures}}.dump() << '\n';
    else out << run << " schemas, " << failures << " failures\n";
    return failures == 0 ? ok : no;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const auto r = lattice_reduce(parse_arrow(o.arrow));
    if (o.json) {
        Json j{{"reduced", r.has_value()}};
        if (r) j["arrow"] = to_string(*r);
        out << j.dump() << '\n';
    } else {
        out << (r ? to_string(*r) : std::string("no reduction: the matrix is not a permutation matrix")) << '\n';
    }
    return r ? ok : no;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    const std::string r = to_string(restrict_arrow(parse_arrow(o.arrow), parse_letter_list(o.letters)));
    if (o.json) out << Json{{"arrow", r}}.dump() << '\n';
    else out << r << '\n';
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedures for categories with intermutation", "intermute"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Structured output");

    std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>> commands;
    auto command = [&](const char* name, const char* help, auto fn) {
        CLI::App* c = app.add_subcommand(name, help);
        c->fallthrough();
        commands.emplace_back(c, fn);
        return c;
    };

    auto* parse = command("parse", "Print the canonical form of a formula or an arrow", cmd_parse);
    parse->add_option("-f,--formula", o.formula);
    parse->add_option("-a,--arrow", o.arrow);
    command("nf", "Unit normal form", cmd_nf)->add_option("-f,--formula", o.formula)->required();
    auto* g = command("grid", "Rectangular grid of a constant-free formula", cmd_grid);
    g->add_option("-f,--formula", o.formula)->required();
    g->add_option("--style", o.style, "ascii, svg or text");
    command("tblr", "Top, bottom, left and right letter sequences", cmd_tblr)
        ->add_option("-f,--formula", o.formula)
        ->required();
    for (auto [name, help, fn] : {std::tuple{"legit", "Check a legitimate pair", &cmd_legit},
                                  std::tuple{"synth", "Synthesize a strict term X -> Y", &cmd_synth}}) {
        auto* c = command(name, help, fn);
        c->add_option("-x", o.x)->required();
        c->add_option("-y", o.y)->required();
    }
    auto* eq = command("equal", "Decide equality of two arrows", cmd_equal);
    eq->add_option("--theory", o.theory)->required();
    eq->add_option("-a,--arrow", o.arrows)->required();
    eq->add_option("--objects", o.objects, "formulas, sequences or sets");
    auto* ex = command("exists", "Decide whether an arrow X -> Y exists", cmd_exists);
    ex->add_option("--theory", o.theory)->required();
    ex->add_option("-x", o.x)->required();
    ex->add_option("-y", o.y)->required();
    auto* ev = command("eval", "Relation or matrix image of an arrow", cmd_eval);
    ev->add_flag("--rel", o.rel);
    ev->add_flag("--mat", o.mat);
    ev->add_option("-a,--arrow", o.arrow)->required();
    ev->add_option("--objects", o.objects, "formulas, sequences or sets");
    auto* dv = command("develop", "Factors with one generator each", cmd_develop);
    dv->add_option("-a,--arrow", o.arrow)->required();
    dv->add_option("--objects", o.objects, "formulas, sequences or sets");
    auto* ax = command("axioms", "Model-check the equation catalogue", cmd_axioms);
    ax->add_option("--theory", o.theory);
    ax->add_option("--trials", o.trials, "Random instantiations per schema")->capture_default_str();
    ax->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    command("reduce-lattice", "Reduce a lattice arrow with a bijective image", cmd_reduce)
        ->add_option("-a,--arrow", o.arrow)
        ->required();
    auto* rs = command("restrict", "Delete letters from a strict symmetric medial arrow", cmd_restrict);
    rs->add_option("-a,--arrow", o.arrow)->required();
    rs->add_option("-P", o.letters, "Comma-separated letters")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }
    for (const auto& [c, fn] : commands) {
        if (!c->parsed()) continue;
        try {
            return fn(o, out);
        } catch (const ParseError& e) {
            err << "syntax error at " << e.what() << '\n';
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
        }
        return bad_input;
    }
    return bad_input;
}

}  // namespace intermute
