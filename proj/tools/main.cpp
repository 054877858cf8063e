#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bisect/error.hpp"
#include "bisect/io.hpp"
#include "render.hpp"

using namespace bisect;

namespace {

// Exit codes: 0 success, 1 internal/regression, 2 parse or schema error,
// 3 invalid quadrilateral, 4 unsupported field for the command, 5 size cap.
int exit_code_for(const Error& e) {
    if (dynamic_cast<const InvalidQuadrilateral*>(&e) || dynamic_cast<const BothZero*>(&e) ||
        dynamic_cast<const IdenticalLines*>(&e) || dynamic_cast<const CoincidentPoints*>(&e))
        return 3;
    if (dynamic_cast<const UnsupportedInMode*>(&e)) return 4;
    if (dynamic_cast<const FieldTooLarge*>(&e)) return 5;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const BadDescriptor*>(&e)) return 2;
    return 1;
}

struct Options {
    std::string field = "rational";
    std::string out;       // empty: stdout
    bool json = false;     // JSON output for the terse commands
    std::string in;        // quadrilateral JSON file, "-" for stdin
    std::string triple;    // inline "h,k,mu"
    std::string triple2;   // second triple for equiv
    std::int64_t p = 0;
    std::string mode = "summary";
    int threads = 1;
    std::int64_t max_p = 13;
    std::string csv;
    std::string svg;
    int samples = 40;
    std::string window = "-5,-5,5,5";
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out);
    if (!out) throw Error("cannot write \"" + opt.out + "\"");
    out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

StandardFormField parse_triple(const FieldDescriptor& desc, const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 3) throw ParseError("triple wants \"h,k,mu\", got \"" + text + "\"");
    return StandardFormField(FieldElement::parse(desc, parts[0]),
                             FieldElement::parse(desc, parts[1]),
                             FieldElement::parse(desc, parts[2]));
}

/// The analyze/classify/boundary/render commands accept either input form.
AnalysisDocument load_input(const Options& opt) {
    const FieldDescriptor desc = parse_field_descriptor(opt.field);
    if (!opt.triple.empty() && !opt.in.empty())
        throw ParseError("give either --in or --triple, not both");
    if (!opt.triple.empty()) return analyze(parse_triple(desc, opt.triple));
    if (!opt.in.empty()) return analyze(quadrilateral_from_json(desc, parse_json(slurp(opt.in))));
    throw ParseError("no input: use --in FILE (quadrilateral JSON) or --triple h,k,mu");
}

int cmd_analyze(const Options& opt) {
    write_output(opt, emit(to_json(load_input(opt))));
    return 0;
}

int cmd_standardize(const Options& opt) {
    const FieldDescriptor desc = parse_field_descriptor(opt.field);
    if (opt.in.empty()) throw ParseError("standardize wants --in FILE (quadrilateral JSON)");
    const Quadrilateral q = quadrilateral_from_json(desc, parse_json(slurp(opt.in)));
    const Standardization s = standardize(q);
    Json out{{"map", to_json(s.map)}, {"image", to_json(s.image)}, {"standard", to_json(s.field)}};
    write_output(opt, emit(out));
    return 0;
}

int cmd_classify(const Options& opt) {
    const AnalysisDocument doc = load_input(opt);
    if (opt.json) {
        write_output(opt, emit(Json{{"class", to_string(doc.standard.cls())},
                                    {"well_centered", doc.well_centered}}));
    } else {
        write_output(opt, to_string(doc.standard.cls()) + "\n");
    }
    return 0;
}

int cmd_equiv(const Options& opt) {
    const FieldDescriptor desc = parse_field_descriptor(opt.field);
    if (opt.triple.empty() || opt.triple2.empty())
        throw ParseError("equiv wants --f1 h,k,mu and --f2 h,k,mu");
    const StandardFormField f1 = parse_triple(desc, opt.triple);
    const StandardFormField f2 = parse_triple(desc, opt.triple2);
    const Equivalence verdict = affinely_equivalent(f1, f2);
    const std::optional<AffineMap> witness =
        verdict == Equivalence::Yes ? equivalence_witness(f1, f2) : std::nullopt;
    const std::string word = verdict == Equivalence::Yes       ? "equivalent"
                             : verdict == Equivalence::No      ? "not"
                                                               : "undecided";
    if (opt.json) {
        Json out{{"verdict", word}};
        out["witness"] = witness ? to_json(*witness) : Json(nullptr);
        write_output(opt, emit(out));
    } else {
        std::string text = word + "\n";
        if (witness) text += witness->to_string() + "\n";
        write_output(opt, text);
    }
    return 0;
}

int cmd_boundary(const Options& opt) {
    write_output(opt, emit(to_json(load_input(opt).envelope)));
    return 0;
}

int cmd_census(const Options& opt) {
    if (opt.mode != "summary" && opt.mode != "full")
        throw ParseError("census mode is \"summary\" or \"full\"");
    CensusOptions copts;
    copts.full = opt.mode == "full";
    copts.threads = opt.threads;
    copts.max_p = opt.max_p;
    const CensusReport report = run_census(opt.p, copts);
    write_output(opt, emit(to_json(report)));
    if (!opt.csv.empty()) {
        std::ofstream out(opt.csv);
        if (!out) throw Error("cannot write \"" + opt.csv + "\"");
        out << census_csv(opt.p);
    }
    if (report.cubic > 0 && report.classes.size() != 2) {
        std::cerr << "census regression: expected 2 well-centered cubic classes, found "
                  << report.classes.size() << "\n";
        return 1;
    }
    return 0;
}

int cmd_render(const Options& opt) {
    const FieldDescriptor desc = parse_field_descriptor(opt.field);
    if (desc.kind == FieldKind::Prime)
        throw UnsupportedInMode("render needs the rational or real field");
    if (opt.svg.empty()) throw ParseError("render wants --svg PATH");

    render::Window window;
    {
        const std::vector<std::string> parts = split(opt.window, ',');
        if (parts.size() != 4) throw ParseError("window wants \"x0,y0,x1,y1\"");
        try {
            window = {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]),
                      std::stod(parts[3])};
        } catch (const std::exception&) {
            throw ParseError("window wants numeric \"x0,y0,x1,y1\"");
        }
        if (window.x1 <= window.x0 || window.y1 <= window.y0)
            throw ParseError("window is empty");
    }

    std::optional<render::Scene> scene;
    if (!opt.triple.empty()) {
        const StandardFormField f = parse_triple(desc, opt.triple);
        scene = render::Scene{standard_polynomials(f), boundary(f), f.center(),
                              quadrilateral_from_triple(f)};
    } else if (!opt.in.empty()) {
        const Quadrilateral q = quadrilateral_from_json(desc, parse_json(slurp(opt.in)));
        scene = render::Scene{bisector_field(q), boundary_of(q), q.centroid(), q};
    } else {
        throw ParseError("no input: use --in FILE or --triple h,k,mu");
    }

    const std::string svg =
        render::render_svg(*scene, window, std::max(1, opt.samples));
    std::ofstream out(opt.svg);
    if (!out) throw Error("cannot write \"" + opt.svg + "\"");
    out << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact analysis of the bisecting lines of quadrilaterals"};
    app.require_subcommand(1);
    app.add_option("--field", opt.field, "coefficient field: rational, real, or prime:P")
        ->capture_default_str();
    app.add_option("--out", opt.out, "write output here instead of stdout");
    app.add_flag("--json", opt.json, "JSON output for classify and equiv");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--in", opt.in, "quadrilateral JSON file, - for stdin");
        sub->add_option("--triple", opt.triple, "standard data h,k,mu");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one input");
    add_input(analyze);
    CLI::App* standardize =
        app.add_subcommand("standardize", "move a quadrilateral to standard position");
    standardize->add_option("--in", opt.in, "quadrilateral JSON file, - for stdin");
    CLI::App* classify = app.add_subcommand("classify", "linear, quadratic, or cubic");
    add_input(classify);
    CLI::App* equiv = app.add_subcommand("equiv", "decide affine equivalence of two triples");
    equiv->add_option("--f1", opt.triple, "first triple h,k,mu")->required();
    equiv->add_option("--f2", opt.triple2, "second triple h,k,mu")->required();
    CLI::App* boundary = app.add_subcommand("boundary", "envelope of the moving bisectors");
    add_input(boundary);
    CLI::App* census = app.add_subcommand("census", "scan all standard triples over GF(p)");
    census->add_option("--p", opt.p, "odd prime")->required();
    census->add_option("--mode", opt.mode, "summary or full")->capture_default_str();
    census->add_option("--threads", opt.threads, "worker threads")->capture_default_str();
    census->add_option("--max-p", opt.max_p, "soft size bound")->capture_default_str();
    census->add_option("--csv", opt.csv, "also write per-triple CSV here");
    CLI::App* render = app.add_subcommand("render", "draw the field as a static SVG");
    add_input(render);
    render->add_option("--svg", opt.svg, "output SVG path")->required();
    render->add_option("--samples", opt.samples, "number of moving bisectors")
        ->capture_default_str();
    render->add_option("--window", opt.window, "view rectangle x0,y0,x1,y1")
        ->capture_default_str();

    // Let --field/--out/--json appear after the subcommand name as well.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (standardize->parsed()) return cmd_standardize(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (equiv->parsed()) return cmd_equiv(opt);
        if (boundary->parsed()) return cmd_boundary(opt);
        if (census->parsed()) return cmd_census(opt);
        if (render->parsed()) return cmd_render(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
