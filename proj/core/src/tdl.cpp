#include "geoflow/tdl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "geoflow/seifert.hpp"

namespace geoflow::tdl {

parse_error::parse_error(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + message),
      line_(line),
      col_(col) {}

namespace {

struct Token {
    std::string text;
    int col = 1;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

class Cursor {
  public:
    Cursor(const std::vector<Token>& toks, int line) : toks_(toks), line_(line) {}

    const Token& next(const char* what) {
        if (pos_ >= toks_.size()) {
            const int col = toks_.empty() ? 1 : toks_.back().col + static_cast<int>(toks_.back().text.size());
            throw parse_error(line_, col, std::string("expected ") + what);
        }
        return toks_[pos_++];
    }

    void expect_keyword(const char* kw) {
        const Token& t = next(kw);
        if (t.text != kw)
            throw parse_error(line_, t.col, "expected keyword '" + std::string(kw) + "', got '" + t.text + "'");
    }

    long long integer(const char* what) {
        const Token& t = next(what);
        long long v = 0;
        const char* b = t.text.data();
        const char* e = b + t.text.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || p != e)
            throw parse_error(line_, t.col, std::string("invalid integer for ") + what + ": '" + t.text + "'");
        return v;
    }

    double number(const char* what) {
        const Token& t = next(what);
        double v = 0.0;
        const char* b = t.text.data();
        const char* e = b + t.text.size();
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || p != e || !std::isfinite(v))
            throw parse_error(line_, t.col, std::string("invalid number for ") + what + ": '" + t.text + "'");
        return v;
    }

    std::string word(const char* what) { return next(what).text; }

    void done() {
        if (pos_ < toks_.size())
            throw parse_error(line_, toks_[pos_].col, "unexpected trailing token '" + toks_[pos_].text + "'");
    }

    int last_col() const { return pos_ == 0 ? 1 : toks_[pos_ - 1].col; }

  private:
    const std::vector<Token>& toks_;
    int line_;
    size_t pos_ = 0;
};

std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void check_interval(int line, int col, double lo, double hi, const char* what) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
        throw parse_error(line, col, std::string(what) + " interval [" + fmt(lo) + ", " + fmt(hi) +
                                          "] must satisfy 0 <= lo < hi <= 1");
}

}  // namespace

TemplateDescription parse(const std::string& text) {
    TemplateDescription d;
    bool saw_version = false, saw_header = false;
    std::set<std::string> branch_ids;
    std::set<int> ear_indices;
    struct EarSite {
        int line;
        int col;
    };
    std::vector<std::pair<EarDecl, EarSite>> ears;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        Cursor cur(toks, lineno);
        const Token& head = toks[0];
        if (head.text == "tdl") {
            cur.expect_keyword("tdl");
            if (saw_version) throw parse_error(lineno, head.col, "duplicate version line");
            const long long v = cur.integer("version");
            if (v != 1) throw parse_error(lineno, cur.last_col(), "unsupported version " + std::to_string(v));
            d.version = static_cast<int>(v);
            saw_version = true;
            cur.done();
        } else if (head.text == "template") {
            cur.expect_keyword("template");
            if (saw_header) throw parse_error(lineno, head.col, "duplicate template header");
            d.name = cur.word("template name");
            cur.expect_keyword("k");
            const long long k = cur.integer("k");
            if (k < 3) throw parse_error(lineno, cur.last_col(), "k must be >= 3");
            d.k = static_cast<int>(k);
            cur.expect_keyword("lens");
            d.lens_label = cur.word("lens label");
            saw_header = true;
            cur.done();
        } else if (head.text == "branch") {
            cur.expect_keyword("branch");
            BranchDecl bd;
            bd.id = cur.word("branch id");
            const int id_col = cur.last_col();
            bd.lo = cur.number("branch lo");
            bd.hi = cur.number("branch hi");
            check_interval(lineno, id_col, bd.lo, bd.hi, "branch");
            if (!branch_ids.insert(bd.id).second)
                throw parse_error(lineno, id_col, "duplicate branch id '" + bd.id + "'");
            d.branches.push_back(bd);
            cur.done();
        } else if (head.text == "ear") {
            cur.expect_keyword("ear");
            EarDecl e;
            e.index = static_cast<int>(cur.integer("ear index"));
            const int idx_col = cur.last_col();
            if (e.index < 1) throw parse_error(lineno, idx_col, "ear index must be >= 1");
            cur.expect_keyword("source");
            e.source_branch = cur.word("source branch id");
            e.source_lo = cur.number("source lo");
            e.source_hi = cur.number("source hi");
            check_interval(lineno, head.col, e.source_lo, e.source_hi, "source");
            cur.expect_keyword("target");
            e.target_branch = cur.word("target branch id");
            e.target_lo = cur.number("target lo");
            e.target_hi = cur.number("target hi");
            check_interval(lineno, head.col, e.target_lo, e.target_hi, "target");
            cur.expect_keyword("orient");
            const Token& o = cur.next("orientation + or -");
            if (o.text == "+")
                e.orientation_preserving = true;
            else if (o.text == "-")
                e.orientation_preserving = false;
            else
                throw parse_error(lineno, o.col, "orientation must be '+' or '-', got '" + o.text + "'");
            cur.expect_keyword("twists");
            e.half_twists = static_cast<int>(cur.integer("half twists"));
            cur.expect_keyword("passes");
            e.long_ear_passes = static_cast<int>(cur.integer("long ear passes"));
            if (e.long_ear_passes < 0)
                throw parse_error(lineno, cur.last_col(), "passes must be >= 0");
            cur.expect_keyword("xi");
            e.xi_weight = cur.integer("xi weight");
            cur.expect_keyword("layer");
            e.layer = static_cast<int>(cur.integer("layer rank"));
            if (e.layer < 1) throw parse_error(lineno, cur.last_col(), "layer rank must be >= 1");
            if (!ear_indices.insert(e.index).second)
                throw parse_error(lineno, idx_col, "duplicate ear index " + std::to_string(e.index));
            ears.push_back({e, {lineno, head.col}});
            cur.done();
        } else {
            throw parse_error(lineno, head.col, "unknown keyword '" + head.text + "'");
        }
    }
    if (!saw_version) throw parse_error(1, 1, "missing 'tdl' version line");
    if (!saw_header) throw parse_error(1, 1, "missing 'template' header line");

    // Cross-references and per-target layer permutations.
    std::map<std::string, std::vector<int>> layers_by_target;
    for (const auto& [e, site] : ears) {
        if (!branch_ids.count(e.source_branch))
            throw parse_error(site.line, site.col,
                              "ear " + std::to_string(e.index) + " references undeclared branch '" +
                                  e.source_branch + "'");
        if (!branch_ids.count(e.target_branch))
            throw parse_error(site.line, site.col,
                              "ear " + std::to_string(e.index) + " references undeclared branch '" +
                                  e.target_branch + "'");
        auto& ranks = layers_by_target[e.target_branch];
        if (std::find(ranks.begin(), ranks.end(), e.layer) != ranks.end())
            throw parse_error(site.line, site.col,
                              "duplicate layer rank " + std::to_string(e.layer) + " at branch '" +
                                  e.target_branch + "'");
        ranks.push_back(e.layer);
        d.ears.push_back(e);
    }
    for (auto& [id, ranks] : layers_by_target) {
        std::sort(ranks.begin(), ranks.end());
        for (size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] != static_cast<int>(i) + 1)
                throw parse_error(1, 1, "layer ranks at branch '" + id +
                                            "' do not form a permutation of 1.." +
                                            std::to_string(ranks.size()));
        }
    }
    return canonicalize(std::move(d));
}

TemplateDescription canonicalize(TemplateDescription d) {
    std::sort(d.branches.begin(), d.branches.end(),
              [](const BranchDecl& a, const BranchDecl& b) { return a.id < b.id; });
    std::sort(d.ears.begin(), d.ears.end(),
              [](const EarDecl& a, const EarDecl& b) { return a.index < b.index; });
    return d;
}

std::string serialize(const TemplateDescription& desc) {
    const TemplateDescription d = canonicalize(desc);
    std::string out;
    out += "tdl " + std::to_string(d.version) + "\n";
    out += "template " + d.name + " k " + std::to_string(d.k) + " lens " + d.lens_label + "\n";
    for (const auto& b : d.branches)
        out += "branch " + b.id + " " + fmt(b.lo) + " " + fmt(b.hi) + "\n";
    for (const auto& e : d.ears) {
        out += "ear " + std::to_string(e.index);
        out += " source " + e.source_branch + " " + fmt(e.source_lo) + " " + fmt(e.source_hi);
        out += " target " + e.target_branch + " " + fmt(e.target_lo) + " " + fmt(e.target_hi);
        out += std::string(" orient ") + (e.orientation_preserving ? "+" : "-");
        out += " twists " + std::to_string(e.half_twists);
        out += " passes " + std::to_string(e.long_ear_passes);
        out += " xi " + std::to_string(e.xi_weight);
        out += " layer " + std::to_string(e.layer);
        out += "\n";
    }
    return out;
}

TemplateDescription lorenz_description() {
    TemplateDescription d;
    d.name = "lorenz";
    d.k = 3;
    d.lens_label = "S3";
    d.branches = {{"B0", 0.0, 1.0}};
    d.ears = {
        {1, "B0", 0.0, 0.5, "B0", 0.0, 1.0, true, 0, 0, 1, 1},
        {2, "B0", 0.5, 1.0, "B0", 0.0, 1.0, true, 0, 0, 1, 2},
    };
    return d;
}

TemplateDescription hecke_description(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("hecke_description: k must be odd and >= 3");
    TemplateDescription d;
    d.name = "hecke-2-" + std::to_string(k);
    d.k = k;
    d.lens_label = lens_from_embedding(2, k, 1).canonical_name();
    d.branches = {{"B0", 0.0, 1.0}, {"B1", 0.0, 1.0}, {"B2", 0.0, 1.0}};
    const int ears = k - 1;
    for (int i = 1; i <= ears; ++i) {
        EarDecl e;
        e.index = i;
        e.source_branch = e.target_branch = "B0";
        e.source_lo = static_cast<double>(i - 1) / ears;
        e.source_hi = static_cast<double>(i) / ears;
        e.target_lo = 0.0;
        e.target_hi = 1.0;
        e.orientation_preserving = true;
        e.half_twists = 0;
        e.long_ear_passes = std::min(i - 1, k - i - 1);
        e.xi_weight = (i == 1 || i == ears) ? 1 : i;
        e.layer = i;
        d.ears.push_back(e);
    }
    return d;
}

}  // namespace geoflow::tdl
