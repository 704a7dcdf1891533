// Command-line front-end: exact theta invariants, structure enumeration,
// and fillability verdicts for small Seifert fibered spaces.
//
// Exit codes: 0 success, 2 argument/parse error, 3 domain error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfl/sfl.hpp"

namespace {

/// Malformed user input (bad rational syntax, missing selector): exit 2.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sfl::Integer parse_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw BadInput("malformed integer: '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw BadInput("malformed integer: '" + s + "'");
    return sfl::Integer(s);
}

sfl::Rational parse_rational_token(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return sfl::Rational(parse_integer_token(s));
    sfl::Integer num = parse_integer_token(s.substr(0, slash));
    sfl::Integer den = parse_integer_token(s.substr(slash + 1));
    if (den == 0) throw BadInput("malformed rational (zero denominator): '" + s + "'");
    return sfl::Rational(num, den);
}

std::pair<sfl::Integer, sfl::Integer> parse_fraction_pair(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw BadInput("expected a fraction p/q, got '" + s + "'");
    return {parse_integer_token(s.substr(0, slash)), parse_integer_token(s.substr(slash + 1))};
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

/// "e0;r1,r2,r3" -> normalized Seifert data (integer parts are absorbed).
sfl::SeifertData parse_seifert_arg(const std::string& arg) {
    auto halves = split_on(arg, ';');
    if (halves.size() != 2)
        throw BadInput("expected \"e0;r1,r2,r3\", got '" + arg + "'");
    auto rs = split_on(halves[1], ',');
    if (rs.size() != 3)
        throw BadInput("expected three multipliers in '" + arg + "'");
    return sfl::normalize_seifert(
        parse_integer_token(halves[0]),
        {parse_rational_token(rs[0]), parse_rational_token(rs[1]), parse_rational_token(rs[2])});
}

// ---------------------------------------------------------------------------
// Shared selector: builds a named diagram from exactly one input option.
// ---------------------------------------------------------------------------

struct Selector {
    std::string lens, prism, seifert, spherical;
    std::vector<std::string> torus;

    int count() const {
        return !lens.empty() + !prism.empty() + !seifert.empty() + !spherical.empty() +
               !torus.empty();
    }
};

void add_selector(CLI::App* cmd, Selector& sel) {
    cmd->add_option("--lens", sel.lens, "lens space parameters p/q");
    cmd->add_option("--prism", sel.prism, "prism manifold parameters p/q");
    cmd->add_option("--seifert", sel.seifert, "Seifert invariants \"e0;r1,r2,r3\"");
    cmd->add_option("--torus-surgery", sel.torus, "p q r: r-surgery on the (p, q) torus knot")
        ->expected(3);
    cmd->add_option("--spherical", sel.spherical, "spherical manifold T3|T27|I49|D:p/q");
}

struct NamedDiagram {
    std::string input;
    sfl::StabilizedDiagram diagram;
    bool stein = true;  // carries theta data (false for the nonnegative-center picture)
};

NamedDiagram select_diagram(const Selector& sel, bool allow_nonneg) {
    if (sel.count() != 1)
        throw BadInput("exactly one of --lens/--prism/--seifert/--torus-surgery/--spherical "
                       "is required");
    NamedDiagram out;
    if (!sel.lens.empty()) {
        auto [p, q] = parse_fraction_pair(sel.lens);
        out.input = "L(" + p.str() + ", " + q.str() + ")";
        out.diagram = sfl::lens_chain(p, q);
    } else if (!sel.prism.empty()) {
        auto [p, q] = parse_fraction_pair(sel.prism);
        out.input = "D(" + p.str() + ", " + q.str() + ")";
        out.diagram = sfl::prism_graph(p, q);
    } else if (!sel.seifert.empty()) {
        sfl::SeifertData s = parse_seifert_arg(sel.seifert);
        out.input = s.str();
        if (s.e0 <= -2) {
            out.diagram = sfl::seifert_to_plumbing(s);
        } else if (s.e0 >= 0 && allow_nonneg) {
            out.diagram = sfl::nonneg_diagram(s);
            out.stein = false;
        } else {
            throw std::domain_error(
                "central weight " + s.e0.str() +
                ": no stabilized surgery presentation in scope (theta requires e0 <= -2)");
        }
    } else if (!sel.torus.empty()) {
        sfl::Integer p = parse_integer_token(sel.torus[0]);
        sfl::Integer q = parse_integer_token(sel.torus[1]);
        sfl::Rational r = parse_rational_token(sel.torus[2]);
        out.input = "surgery on T(" + p.str() + ", " + q.str() + ") with coefficient " + r.str();
        out.diagram = sfl::torus_surgery_chain(p, q, r);
    } else {
        if (sel.spherical == "T3" || sel.spherical == "T27" || sel.spherical == "I49") {
            sfl::SphericalKind k = sel.spherical == "T3"    ? sfl::SphericalKind::T3
                                   : sel.spherical == "T27" ? sfl::SphericalKind::T27
                                                            : sfl::SphericalKind::I49;
            out.input = sel.spherical;
            out.diagram = sfl::spherical_graph(k);
        } else if (sel.spherical.rfind("D:", 0) == 0) {
            auto [p, q] = parse_fraction_pair(sel.spherical.substr(2));
            out.input = "D(" + p.str() + ", " + q.str() + ")";
            out.diagram = sfl::prism_graph(p, q);
        } else {
            throw BadInput("unknown spherical kind '" + sel.spherical +
                           "' (expected T3, T27, I49, or D:p/q)");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rendering helpers.
// ---------------------------------------------------------------------------

std::string rotation_text(const sfl::RotationVector& rot) {
    std::string s = "(";
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (i) s += ", ";
        s += rot[i].str();
    }
    return s + ")";
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

void print_verdict_text(const sfl::VerdictReport& rep) {
    std::cout << "input: " << rep.input << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"rotation", "class", "theta", "status", "justification"});
    for (const auto& v : rep.structures)
        rows.push_back({v.rotation ? rotation_text(*v.rotation) : "-", v.structure_class,
                        v.theta ? v.theta->str() : "-", sfl::fill_status_name(v.status),
                        v.rule + ": " + v.reason});
    print_table(rows);
}

sfl::VerdictOptions make_options(bool all, const std::string& cap) {
    sfl::VerdictOptions opts;
    opts.enumerate_all = all;
    if (!cap.empty()) {
        sfl::Integer c = parse_integer_token(cap);
        if (c < 1) throw BadInput("--cap must be a positive integer");
        opts.cap = c;
    }
    return opts;
}

std::vector<sfl::QhbFamily> load_families(const std::string& templates) {
    if (!templates.empty()) return sfl::load_qhb_families(templates);
    return sfl::default_qhb_families();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contact invariants of small Seifert fibered spaces"};
    app.require_subcommand(1);

    // ---- theta ------------------------------------------------------------
    Selector theta_sel;
    bool theta_all = false, theta_canonical = false, theta_json = false;
    std::string theta_cap;
    auto* theta_cmd = app.add_subcommand("theta", "theta invariants of the tight structures");
    add_selector(theta_cmd, theta_sel);
    theta_cmd->add_flag("--canonical", theta_canonical, "canonical structure only (default)");
    theta_cmd->add_flag("--all", theta_all, "every structure of the presentation");
    theta_cmd->add_flag("--json", theta_json, "JSON output");
    theta_cmd->add_option("--cap", theta_cap, "refuse enumerations above this count");
    theta_cmd->callback([&] {
        if (theta_all && theta_canonical)
            throw BadInput("--canonical and --all are mutually exclusive");
        sfl::VerdictOptions cap_opts = make_options(true, theta_cap);
        NamedDiagram nd = select_diagram(theta_sel, /*allow_nonneg=*/false);
        sfl::ThetaContext ctx(nd.diagram);
        sfl::RotationVector can = sfl::canonical_rotation(nd.diagram);
        sfl::StructureEnumeration en(nd.diagram);
        sfl::Json j = sfl::Json::object();
        j["input"] = nd.input;
        j["theta_canonical"] = ctx.theta(can).str_exact();
        j["c1_squared_canonical"] = ctx.c1_squared(can).str_exact();
        j["structures_total"] = en.count().str();
        if (theta_all) {
            if (en.count() > cap_opts.cap)
                throw std::domain_error("enumeration cap exceeded: " + en.count().str() +
                                        " structures over cap " + cap_opts.cap.str());
            sfl::Json rows = sfl::Json::array();
            en.for_each([&](const sfl::RotationVector& rot) {
                sfl::Json e = sfl::Json::object();
                e["rotation"] = sfl::json_rotation(rot);
                e["theta"] = ctx.theta(rot).str_exact();
                e["class"] = sfl::consistency_name(sfl::classify_consistency(nd.diagram, rot));
                rows.push_back(e);
            });
            j["structures"] = rows;
        }
        if (theta_json) {
            std::cout << sfl::dump_json(j);
        } else {
            std::cout << "input: " << nd.input << "\n"
                      << "theta_canonical: " << ctx.theta(can).str() << "\n"
                      << "c1_squared_canonical: " << ctx.c1_squared(can).str() << "\n"
                      << "structures_total: " << en.count().str() << "\n";
            if (theta_all) {
                std::vector<std::vector<std::string>> rows;
                rows.push_back({"rotation", "theta", "class"});
                en.for_each([&](const sfl::RotationVector& rot) {
                    rows.push_back(
                        {rotation_text(rot), ctx.theta(rot).str(),
                         sfl::consistency_name(sfl::classify_consistency(nd.diagram, rot))});
                });
                print_table(rows);
            }
        }
    });

    // ---- verdict ----------------------------------------------------------
    Selector verdict_sel;
    std::vector<std::string> brieskorn;
    bool verdict_all = false, verdict_json = false;
    std::string verdict_cap, verdict_templates;
    auto* verdict_cmd = app.add_subcommand("verdict", "rational-ball fillability verdicts");
    add_selector(verdict_cmd, verdict_sel);
    verdict_cmd->add_option("--brieskorn", brieskorn, "p q n: the sphere of (p, q, pqn+1)")
        ->expected(3);
    verdict_cmd->add_flag("--all", verdict_all, "one row per structure instead of aggregates");
    verdict_cmd->add_flag("--json", verdict_json, "JSON output");
    verdict_cmd->add_option("--cap", verdict_cap, "refuse enumerations above this count");
    verdict_cmd->add_option("--templates", verdict_templates, "pattern file for census matching");
    verdict_cmd->callback([&] {
        sfl::VerdictOptions opts = make_options(verdict_all, verdict_cap);
        int selectors = verdict_sel.count() + !brieskorn.empty();
        if (selectors != 1)
            throw BadInput("exactly one of --lens/--prism/--seifert/--torus-surgery/"
                           "--spherical/--brieskorn is required");
        sfl::VerdictReport rep;
        if (!brieskorn.empty()) {
            rep = sfl::filling_verdict_brieskorn(parse_integer_token(brieskorn[0]),
                                                 parse_integer_token(brieskorn[1]),
                                                 parse_integer_token(brieskorn[2]), opts);
        } else if (!verdict_sel.lens.empty()) {
            auto [p, q] = parse_fraction_pair(verdict_sel.lens);
            rep = sfl::filling_verdict_lens(p, q, opts);
        } else if (!verdict_sel.prism.empty()) {
            auto [p, q] = parse_fraction_pair(verdict_sel.prism);
            rep = sfl::filling_verdict_prism(p, q, opts);
        } else if (!verdict_sel.seifert.empty()) {
            rep = sfl::filling_verdict(parse_seifert_arg(verdict_sel.seifert),
                                       load_families(verdict_templates), opts);
        } else if (!verdict_sel.torus.empty()) {
            rep = sfl::filling_verdict_torus(parse_integer_token(verdict_sel.torus[0]),
                                             parse_integer_token(verdict_sel.torus[1]),
                                             parse_rational_token(verdict_sel.torus[2]), opts);
        } else if (verdict_sel.spherical == "T3" || verdict_sel.spherical == "T27" ||
                   verdict_sel.spherical == "I49") {
            sfl::SphericalKind k = verdict_sel.spherical == "T3"    ? sfl::SphericalKind::T3
                                   : verdict_sel.spherical == "T27" ? sfl::SphericalKind::T27
                                                                    : sfl::SphericalKind::I49;
            rep = sfl::filling_verdict_spherical(k, opts);
        } else if (verdict_sel.spherical.rfind("D:", 0) == 0) {
            auto [p, q] = parse_fraction_pair(verdict_sel.spherical.substr(2));
            rep = sfl::filling_verdict_prism(p, q, opts);
        } else {
            throw BadInput("unknown spherical kind '" + verdict_sel.spherical + "'");
        }
        if (verdict_json)
            std::cout << sfl::dump_json(sfl::json_verdict(rep));
        else
            print_verdict_text(rep);
    });

    // ---- enumerate --------------------------------------------------------
    Selector enum_sel;
    bool enum_json = false;
    std::string enum_cap, enum_limit;
    auto* enum_cmd = app.add_subcommand("enumerate", "list the structures of a presentation");
    add_selector(enum_cmd, enum_sel);
    enum_cmd->add_flag("--json", enum_json, "JSON output");
    enum_cmd->add_option("--cap", enum_cap, "refuse enumerations above this count");
    enum_cmd->add_option("--limit", enum_limit, "print at most this many rows (count stays exact)");
    enum_cmd->callback([&] {
        NamedDiagram nd = select_diagram(enum_sel, /*allow_nonneg=*/true);
        sfl::StructureEnumeration en(nd.diagram);
        sfl::VerdictOptions opts = make_options(true, enum_cap);
        if (en.count() > opts.cap)
            throw std::domain_error("enumeration cap exceeded: " + en.count().str() +
                                    " structures over cap " + opts.cap.str());
        sfl::Integer limit = enum_limit.empty() ? en.count() : parse_integer_token(enum_limit);
        std::optional<sfl::ThetaContext> ctx;
        if (nd.stein) ctx.emplace(nd.diagram);
        sfl::Json rows = sfl::Json::array();
        std::vector<std::vector<std::string>> text_rows;
        text_rows.push_back(nd.stein
                                ? std::vector<std::string>{"rotation", "theta", "class"}
                                : std::vector<std::string>{"rotation", "class"});
        sfl::Integer printed = 0;
        en.for_each([&](const sfl::RotationVector& rot) {
            if (printed >= limit) return;
            ++printed;
            const char* cls = sfl::consistency_name(sfl::classify_consistency(nd.diagram, rot));
            if (enum_json) {
                sfl::Json e = sfl::Json::object();
                e["rotation"] = sfl::json_rotation(rot);
                if (ctx) e["theta"] = ctx->theta(rot).str_exact();
                e["class"] = cls;
                rows.push_back(e);
            } else if (ctx) {
                text_rows.push_back({rotation_text(rot), ctx->theta(rot).str(), cls});
            } else {
                text_rows.push_back({rotation_text(rot), cls});
            }
        });
        if (enum_json) {
            sfl::Json j = sfl::Json::object();
            j["input"] = nd.input;
            j["count"] = en.count().str();
            j["structures"] = rows;
            std::cout << sfl::dump_json(j);
        } else {
            std::cout << "input: " << nd.input << "\n"
                      << "count: " << en.count().str() << "\n";
            print_table(text_rows);
        }
    });

    // ---- normalize --------------------------------------------------------
    std::vector<std::string> norm_args;
    bool norm_json = false;
    auto* norm_cmd = app.add_subcommand("normalize", "normal form of (e; x1, x2, x3)");
    norm_cmd->add_option("args", norm_args, "e x1 x2 x3")->expected(4);
    norm_cmd->add_flag("--json", norm_json, "JSON output");
    norm_cmd->callback([&] {
        sfl::SeifertData s = sfl::normalize_seifert(
            parse_integer_token(norm_args[0]),
            {parse_rational_token(norm_args[1]), parse_rational_token(norm_args[2]),
             parse_rational_token(norm_args[3])});
        if (norm_json)
            std::cout << sfl::dump_json(sfl::json_seifert(s));
        else
            std::cout << s.str() << "\n";
    });

    // ---- qhb-match --------------------------------------------------------
    std::string match_seifert, match_plumbing, match_templates;
    bool match_json = false;
    auto* match_cmd = app.add_subcommand("qhb-match", "match a plumbing against the census");
    match_cmd->add_option("--seifert", match_seifert, "Seifert invariants \"e0;r1,r2,r3\"");
    match_cmd->add_option("--plumbing", match_plumbing, "plumbing description file");
    match_cmd->add_option("--templates", match_templates, "pattern file for census matching");
    match_cmd->add_flag("--json", match_json, "JSON output");
    match_cmd->callback([&] {
        if (match_seifert.empty() == match_plumbing.empty())
            throw BadInput("exactly one of --seifert/--plumbing is required");
        sfl::StabilizedDiagram d;
        std::string input;
        if (!match_seifert.empty()) {
            sfl::SeifertData s = parse_seifert_arg(match_seifert);
            d = sfl::seifert_to_plumbing(s);
            input = s.str();
        } else {
            std::ifstream in(match_plumbing);
            if (!in) throw BadInput("cannot open plumbing file '" + match_plumbing + "'");
            d = sfl::parse_plumbing(in);
            input = match_plumbing;
        }
        auto matches = sfl::qhb_match(d, load_families(match_templates));
        if (match_json) {
            std::cout << sfl::dump_json(sfl::json_qhb_matches(input, matches));
        } else {
            std::cout << "input: " << input << "\n";
            if (matches.empty()) {
                std::cout << "matches: none\n";
            } else {
                for (const auto& m : matches) {
                    std::cout << "match: " << m.id;
                    for (const auto& [k, v] : m.assignment)
                        std::cout << " " << k << "=" << v.str();
                    std::cout << "\n";
                }
            }
        }
    });

    // ---- generate ---------------------------------------------------------
    std::vector<std::string> gen_args;
    bool gen_json = false;
    auto* gen_cmd = app.add_subcommand("generate", "fillable example from cable parameters");
    gen_cmd->add_option("args", gen_args, "q/p m h k")->expected(4);
    gen_cmd->add_flag("--json", gen_json, "JSON output");
    gen_cmd->callback([&] {
        sfl::FillableExample ex = sfl::generate_fillable(
            parse_rational_token(gen_args[0]), parse_integer_token(gen_args[1]),
            parse_integer_token(gen_args[2]), parse_integer_token(gen_args[3]));
        if (gen_json) {
            sfl::Json j = sfl::json_seifert(ex.seifert);
            j["construction"] = sfl::json_construction(ex.construction());
            std::cout << sfl::dump_json(j);
        } else {
            std::cout << ex.seifert.str() << "\n";
            for (const auto& [k, v] : ex.construction().data)
                std::cout << k << ": " << v << "\n";
        }
    });

    // ---- spherical --------------------------------------------------------
    std::string sph_kind;
    bool sph_json = false;
    auto* sph_cmd = app.add_subcommand("spherical", "plumbing graph of a spherical manifold");
    sph_cmd->add_option("kind", sph_kind, "T3|T27|I49|D:p/q")->required();
    sph_cmd->add_flag("--json", sph_json, "JSON output");
    sph_cmd->callback([&] {
        Selector sel;
        sel.spherical = sph_kind;
        NamedDiagram nd = select_diagram(sel, false);
        sfl::Rational th = sfl::ThetaContext(nd.diagram).theta(sfl::canonical_rotation(nd.diagram));
        if (sph_json) {
            sfl::Json j = sfl::Json::object();
            j["input"] = nd.input;
            j["plumbing"] = sfl::format_plumbing(nd.diagram);
            j["theta_canonical"] = th.str_exact();
            std::cout << sfl::dump_json(j);
        } else {
            std::cout << "input: " << nd.input << "\n"
                      << sfl::format_plumbing(nd.diagram) << "theta_canonical: " << th.str()
                      << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
