// geoflow: orbit words, lens-space data, templates, braids and knot
// invariants for the (2,k) geodesic flows, from the command line.
//
// Exit codes: 0 success, 2 validation error (bad flags, malformed input,
// words rejected by the configured filters), 3 computation error
// (non-realizable words, oracle size caps, I/O failures).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoflow/hecke.hpp"
#include "geoflow/knotinv.hpp"
#include "geoflow/seifert.hpp"
#include "geoflow/tdl.hpp"
#include "geoflow/templates.hpp"

using nlohmann::json;

namespace {

class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw validation_error(message);
}

std::string kind_name(geoflow::IsometryKind k) {
    switch (k) {
        case geoflow::IsometryKind::elliptic: return "elliptic";
        case geoflow::IsometryKind::parabolic: return "parabolic";
        case geoflow::IsometryKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> letters;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            letters.push_back(v);
        } catch (const std::exception&) {
            throw validation_error("invalid word letter '" + item + "' in '" + text + "'");
        }
    }
    require(!letters.empty(), "empty orbit word '" + text + "'");
    return letters;
}

struct CRange {
    long long lo = 0;
    long long hi = 0;
};

CRange parse_c_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(text);
            return {v, v};
        }
        CRange r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
        if (r.lo > r.hi) throw std::invalid_argument(text);
        return r;
    } catch (const std::exception&) {
        throw validation_error("invalid c range '" + text + "' (expected N or A..B)");
    }
}

std::string word_str(const geoflow::GroupWord& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.letters().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters()[i]);
    }
    return s + ")";
}

// Shared per-run options.
struct RunConfig {
    int k = 3;
    double d_offset = 0.0;
    int max_word_len = 6;
    double tol = geoflow::kParabolicTol;
    std::string template_path;  // empty = builtin
    std::string format = "jsonl";

    void validate() const {
        require(k >= 3 && k % 2 == 1, "k must be odd and >= 3");
        require(d_offset >= 0.0, "d-offset must be >= 0");
        require(max_word_len >= 1 && max_word_len <= 14, "max-len must be in [1, 14]");
        require(tol > 0.0, "tolerance must be positive");
        require(format == "jsonl" || format == "table", "format must be jsonl or table");
    }

    geoflow::TemplateModel load_template() const {
        if (template_path.empty()) return geoflow::hecke_template(k);
        std::ifstream in(template_path);
        if (!in) throw std::runtime_error("cannot read template file: " + template_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return geoflow::hecke_template(k, geoflow::tdl::parse(buf.str()));
    }

    geoflow::HeckeGroup group() const {
        return geoflow::build_group(k, geoflow::lattice_distance(k) + d_offset);
    }
};

void add_run_options(CLI::App* cmd, RunConfig* cfg, bool with_len) {
    cmd->add_option("--k", cfg->k, "Odd k >= 3 of the (2,k) flow");
    cmd->add_option("--d-offset", cfg->d_offset, "Cusp opening beyond the lattice distance");
    if (with_len) cmd->add_option("--max-len", cfg->max_word_len, "Maximal orbit word length");
    cmd->add_option("--tol", cfg->tol, "Parabolic classification tolerance")
        ->envname("GEOFLOW_TOL");
    cmd->add_option("--template", cfg->template_path, "TDL file overriding the builtin template");
    cmd->add_option("--format", cfg->format, "Output format: jsonl or table");
}

// --- lens ------------------------------------------------------------------

struct LensOptions {
    long long n = 2;
    long long k = 3;
    std::string c_range = "0..0";
    std::string format = "table";
};

void cmd_lens(const LensOptions& opt) {
    require(opt.n >= 2 && opt.k >= 2, "need n, k >= 2");
    require(opt.format == "jsonl" || opt.format == "table", "format must be jsonl or table");
    const CRange range = parse_c_range(opt.c_range);
    if (opt.format == "table")
        std::printf("%6s %6s %8s %6s %-10s %s\n", "c", "b", "p", "q", "name", "s3");
    for (long long c = range.lo; c <= range.hi; ++c) {
        const geoflow::LensSpace lens = geoflow::lens_from_embedding(opt.n, opt.k, c);
        const bool is_s3 = lens.kind == geoflow::LensKind::S3;
        if (opt.format == "jsonl") {
            json rec;
            rec["c"] = c;
            rec["b"] = geoflow::euler_from_c(c);
            rec["p"] = lens.p;
            rec["q"] = lens.q;
            rec["name"] = lens.canonical_name();
            rec["is_s3"] = is_s3;
            std::cout << rec.dump() << "\n";
        } else {
            std::printf("%6lld %6lld %8lld %6lld %-10s %s\n", c, geoflow::euler_from_c(c),
                        lens.p, lens.q, lens.canonical_name().c_str(), is_s3 ? "yes" : "no");
        }
    }
}

// --- orbits ----------------------------------------------------------------

void cmd_orbits(const RunConfig& cfg) {
    cfg.validate();
    const geoflow::HeckeGroup group = cfg.group();
    const geoflow::TemplateModel tmpl = cfg.load_template();
    const auto words = geoflow::enumerate_orbit_words(group, cfg.max_word_len,
                                                      geoflow::WordSet::primitive, cfg.tol);
    if (cfg.format == "table")
        std::printf("%-20s %12s %-11s %10s %6s\n", "word", "trace", "class", "length", "lk_xi");
    for (const auto& cw : words) {
        const long long lk_xi = geoflow::linking_with_xi(tmpl, cw.word);
        if (cfg.format == "jsonl") {
            json rec;
            rec["word"] = cw.word.letters();
            rec["trace"] = cw.cls.trace;
            rec["class"] = kind_name(cw.cls.kind);
            if (cw.cls.length) rec["length"] = *cw.cls.length;
            rec["lk_xi"] = lk_xi;
            std::cout << rec.dump() << "\n";
        } else {
            std::printf("%-20s %12.6f %-11s %10s %6lld\n", word_str(cw.word).c_str(),
                        cw.cls.trace, kind_name(cw.cls.kind).c_str(),
                        cw.cls.length ? std::to_string(*cw.cls.length).c_str() : "-", lk_xi);
        }
    }
}

// --- invariants ------------------------------------------------------------

struct WordListOptions {
    RunConfig cfg;
    std::vector<std::string> word_args;
    bool template_only = false;
    bool geodesics = false;
};

std::vector<geoflow::GroupWord> collect_words(const WordListOptions& opt) {
    require(!opt.word_args.empty(), "no orbits: pass at least one --word");
    std::vector<geoflow::GroupWord> words;
    for (const auto& text : opt.word_args) {
        geoflow::GroupWord w{parse_word(text)};
        for (int a : w.letters())
            require(a >= 1 && a <= opt.cfg.k - 1,
                    "letter " + std::to_string(a) + " out of range {1,...," +
                        std::to_string(opt.cfg.k - 1) + "} in word " + text);
        words.push_back(std::move(w));
    }
    if (!opt.template_only) {
        const geoflow::HeckeGroup group = opt.cfg.group();
        for (const auto& w : words) {
            const auto cls = geoflow::classify(geoflow::word_to_matrix(group, w), opt.cfg.tol);
            require(cls.kind == geoflow::IsometryKind::hyperbolic,
                    "word " + word_str(w) + " is " + kind_name(cls.kind) +
                        " at this distance, not a closed geodesic; rerun with --template-only "
                        "to treat it as a template orbit");
        }
    }
    return words;
}

void cmd_invariants(const WordListOptions& opt) {
    opt.cfg.validate();
    const geoflow::TemplateModel tmpl = opt.cfg.load_template();
    const std::vector<geoflow::GroupWord> words = collect_words(opt);

    for (const auto& w : words) {
        const geoflow::StrandDiagram d = geoflow::orbit_strands(tmpl, {w});
        const geoflow::BraidWord braid = geoflow::braid_from_diagram(d);
        const int components = geoflow::closure_components(braid);
        bool positive = true;
        for (const auto& l : braid.letters) positive &= l.sign == +1;
        json rec;
        rec["word"] = w.letters();
        json letters = json::array();
        for (const auto& l : braid.letters) letters.push_back({l.generator, l.sign});
        rec["braid"] = letters;
        rec["strands"] = braid.strand_count;
        rec["components"] = components;
        rec["writhe"] = geoflow::writhe(braid);
        rec["positive"] = positive;
        rec["lk_xi"] = geoflow::linking_with_xi(tmpl, w);
        if (positive && components == 1) rec["genus"] = geoflow::positive_braid_genus(braid);
        if (opt.cfg.format == "jsonl") {
            std::cout << rec.dump() << "\n";
        } else {
            std::printf("word %-16s strands %2d crossings %3zu writhe %3lld components %d%s\n",
                        word_str(w).c_str(), braid.strand_count, braid.letters.size(),
                        geoflow::writhe(braid), components,
                        rec.contains("genus")
                            ? (" genus " + rec["genus"].dump()).c_str()
                            : "");
        }
    }
    if (words.size() >= 2) {
        const geoflow::StrandDiagram joint = geoflow::orbit_strands(tmpl, words);
        json matrix = json::array();
        for (size_t i = 0; i < words.size(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < words.size(); ++j)
                row.push_back(i == j ? json(nullptr)
                                     : json(geoflow::linking_number(
                                           joint, static_cast<int>(i), static_cast<int>(j))));
            matrix.push_back(row);
        }
        json rec;
        json names = json::array();
        for (const auto& w : words) names.push_back(w.letters());
        rec["words"] = names;
        rec["linking_matrix"] = matrix;
        if (opt.cfg.format == "jsonl")
            std::cout << rec.dump() << "\n";
        else
            std::printf("linking %s\n", matrix.dump().c_str());
    }
}

// --- svg -------------------------------------------------------------------

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string render_svg(const geoflow::StrandDiagram& d) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};
    const int n = d.strand_count;
    const int steps = static_cast<int>(d.crossings.size());
    const double margin = 24.0, colw = 36.0, rowh = 28.0;
    const double closure_w = 16.0 + 10.0 * n;
    const double width = 2 * margin + (n > 1 ? (n - 1) * colw : colw) + closure_w;
    const double height = 2 * margin + (steps + 1) * rowh;
    const auto lane_x = [&](double lane) { return margin + lane * colw; };
    const auto step_y = [&](double step) { return margin + step * rowh; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed2(width) +
           "\" height=\"" + fixed2(height) + "\" viewBox=\"0 0 " + fixed2(width) + " " +
           fixed2(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Vertical runs between events, per strand.
    std::string verticals, diagonals;
    for (int s = 0; s < n; ++s) {
        const char* color = kPalette[d.orbit_of[s] % 8];
        const auto& path = d.strand_paths[s];
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const auto [lane0, t0] = path[i];
            const auto [lane1, t1] = path[i + 1];
            // Hold the lane until one row before the move, then go diagonal.
            const double hold_until = std::max(t0, t1 - 1.0);
            if (hold_until > t0)
                verticals += "<line x1=\"" + fixed2(lane_x(lane0)) + "\" y1=\"" +
                             fixed2(step_y(t0)) + "\" x2=\"" + fixed2(lane_x(lane0)) +
                             "\" y2=\"" + fixed2(step_y(hold_until)) + "\" stroke=\"" + color +
                             "\" stroke-width=\"2\" fill=\"none\"/>\n";
            if (lane0 != lane1 || t1 > hold_until) {
                // Diagonal (or final straight) segment; crossings repaint it.
                verticals += "<line x1=\"" + fixed2(lane_x(lane0)) + "\" y1=\"" +
                             fixed2(step_y(hold_until)) + "\" x2=\"" + fixed2(lane_x(lane1)) +
                             "\" y2=\"" + fixed2(step_y(t1)) + "\" stroke=\"" + color +
                             "\" stroke-width=\"2\" fill=\"none\"/>\n";
            }
        }
    }

    // Crossing glyphs: under strand with a gap, over strand on top.
    for (const auto& c : d.crossings) {
        const double y0 = step_y(c.step - 1.0), y1 = step_y(c.step);
        const double xl = lane_x(c.generator - 1.0), xr = lane_x(c.generator);
        // Which side each strand starts on: over strand path holds its lane
        // until step-1; look it up from the recorded waypoints.
        const auto lane_before = [&](int strand) {
            double lane = 0.0;
            for (const auto& [l, t] : d.strand_paths[strand]) {
                if (t > c.step - 0.5) break;
                lane = l;
            }
            return lane;
        };
        const double over_from = lane_x(lane_before(c.over_strand));
        const double over_to = over_from == xl ? xr : xl;
        const double under_from = over_from == xl ? xr : xl;
        const double under_to = over_from;
        const char* over_color = kPalette[d.orbit_of[c.over_strand] % 8];
        const char* under_color = kPalette[d.orbit_of[c.under_strand] % 8];
        diagonals += "<g class=\"crossing\" data-sign=\"" + std::to_string(c.sign) + "\">\n";
        // Under strand: two pieces with a central gap.
        const double mx = (under_from + under_to) / 2.0, my = (y0 + y1) / 2.0;
        const double gap = 0.18;
        diagonals += "<line x1=\"" + fixed2(under_from) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" +
                     fixed2(mx + (under_from - mx) * gap) + "\" y2=\"" +
                     fixed2(my + (y0 - my) * gap) + "\" stroke=\"" + under_color +
                     "\" stroke-width=\"2\" fill=\"none\"/>\n";
        diagonals += "<line x1=\"" + fixed2(mx + (under_to - mx) * gap) + "\" y1=\"" +
                     fixed2(my + (y1 - my) * gap) + "\" x2=\"" + fixed2(under_to) + "\" y2=\"" +
                     fixed2(y1) + "\" stroke=\"" + under_color +
                     "\" stroke-width=\"2\" fill=\"none\"/>\n";
        diagonals += "<line x1=\"" + fixed2(over_from) + "\" y1=\"" + fixed2(y0) + "\" x2=\"" +
                     fixed2(over_to) + "\" y2=\"" + fixed2(y1) + "\" stroke=\"" + over_color +
                     "\" stroke-width=\"2.6\" fill=\"none\"/>\n";
        diagonals += "</g>\n";
    }

    // Closure arcs on the right, nested by lane.
    std::string closures;
    const double top = step_y(0.0), bottom = step_y(steps + 1.0);
    for (int lane = 0; lane < n; ++lane) {
        // Strand ending in this lane is joined to the strand starting here.
        int ender = -1;
        for (int s = 0; s < n; ++s)
            if (d.shift[s] == lane) ender = s;
        const char* color = kPalette[d.orbit_of[ender] % 8];
        const double x = lane_x(static_cast<double>(lane));
        const double xr = lane_x(static_cast<double>(n - 1)) + 16.0 + 10.0 * (n - lane);
        closures += "<path d=\"M " + fixed2(x) + " " + fixed2(bottom) + " L " + fixed2(xr) +
                    " " + fixed2(bottom) + " L " + fixed2(xr) + " " + fixed2(top) + " L " +
                    fixed2(x) + " " + fixed2(top) + "\" stroke=\"" + color +
                    "\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\" fill=\"none\"/>\n";
    }

    out += verticals;
    out += diagonals;
    out += closures;
    out += "</svg>\n";
    return out;
}

struct SvgOptions {
    WordListOptions base;
    std::string out_path;
};

void cmd_svg(const SvgOptions& opt) {
    opt.base.cfg.validate();
    const geoflow::TemplateModel tmpl = opt.base.cfg.load_template();
    const std::vector<geoflow::GroupWord> words = collect_words(opt.base);
    const geoflow::StrandDiagram d = geoflow::orbit_strands(tmpl, words);
    const std::string svg = render_svg(d);
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << svg;
    if (!out) throw std::runtime_error("failed writing SVG to " + opt.out_path);
}

// --- template --------------------------------------------------------------

struct TemplateDumpOptions {
    int k = 3;
    bool lorenz = false;
    std::string out_path;
};

void cmd_template_dump(const TemplateDumpOptions& opt) {
    require(opt.lorenz || (opt.k >= 3 && opt.k % 2 == 1), "k must be odd and >= 3");
    const geoflow::tdl::TemplateDescription desc =
        opt.lorenz ? geoflow::tdl::lorenz_description() : geoflow::tdl::hecke_description(opt.k);
    const std::string text = geoflow::tdl::serialize(desc);
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << text;
}

void cmd_template_validate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read template file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto desc = geoflow::tdl::parse(buf.str());
    geoflow::TemplateModel::from_description(desc);  // model-level validation too
    std::cout << "ok: " << desc.name << " k=" << desc.k << " branches=" << desc.branches.size()
              << " ears=" << desc.ears.size() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geodesic-flow templates for (2,k) orbifolds: orbits, lens spaces, braids"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Config file with key=value lines ([section] per subcommand)");

    LensOptions lens;
    CLI::App* lens_cmd = app.add_subcommand("lens", "Lens spaces of the gluing family");
    lens_cmd->add_option("--n", lens.n, "Order of the second cone point");
    lens_cmd->add_option("--k", lens.k, "Order of the first cone point");
    lens_cmd->add_option("--c", lens.c_range, "Gluing parameter, N or A..B");
    lens_cmd->add_option("--format", lens.format, "jsonl or table");
    lens_cmd->callback([&] { cmd_lens(lens); });

    RunConfig orbits;
    CLI::App* orbits_cmd = app.add_subcommand("orbits", "Enumerate canonical orbit words");
    add_run_options(orbits_cmd, &orbits, true);
    orbits_cmd->callback([&] { cmd_orbits(orbits); });

    WordListOptions inv;
    CLI::App* inv_cmd = app.add_subcommand("invariants", "Braid and knot data of orbit words");
    add_run_options(inv_cmd, &inv.cfg, false);
    inv_cmd->add_option("--word", inv.word_args, "Orbit word as comma-separated letters")
        ->take_all();
    inv_cmd->add_flag("--template-only", inv.template_only,
                      "Accept non-hyperbolic words as template orbits");
    inv_cmd->add_flag("--geodesics", inv.geodesics,
                      "Require hyperbolic words (the default behaviour)");
    inv_cmd->callback([&] {
        require(!(inv.template_only && inv.geodesics),
                "--geodesics and --template-only are mutually exclusive");
        cmd_invariants(inv);
    });

    SvgOptions svg;
    CLI::App* svg_cmd = app.add_subcommand("svg", "Render the strand diagram of orbit words");
    add_run_options(svg_cmd, &svg.base.cfg, false);
    svg_cmd->add_option("--word", svg.base.word_args, "Orbit word as comma-separated letters")
        ->take_all();
    svg_cmd->add_flag("--template-only", svg.base.template_only,
                      "Accept non-hyperbolic words as template orbits");
    svg_cmd->add_option("--out", svg.out_path, "Output SVG path")->required();
    svg_cmd->callback([&] { cmd_svg(svg); });

    CLI::App* tmpl_cmd = app.add_subcommand("template", "Dump or validate TDL descriptions");
    TemplateDumpOptions dump;
    CLI::App* dump_cmd = tmpl_cmd->add_subcommand("dump", "Print a builtin template as TDL");
    dump_cmd->add_option("--k", dump.k, "Odd k >= 3");
    dump_cmd->add_flag("--lorenz", dump.lorenz, "Dump the Lorenz description");
    dump_cmd->add_option("--out", dump.out_path, "Write to file instead of stdout");
    dump_cmd->callback([&] { cmd_template_dump(dump); });
    std::string validate_path;
    CLI::App* val_cmd = tmpl_cmd->add_subcommand("validate", "Parse and validate a TDL file");
    val_cmd->add_option("path", validate_path, "TDL file")->required();
    val_cmd->callback([&] { cmd_template_validate(validate_path); });
    tmpl_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const geoflow::tdl::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const geoflow::realizability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
