#pragma once

// Template Description Language: a line-oriented text format recording all
// figure-derived template data (branch lines, ears, twists, layering,
// winding counts, xi weights) so every modeling default can be inspected,
// diffed, and overridden. Grammar in docs/tdl-grammar.md; canonical output
// is byte-stable: sorted declarations, fixed field order, LF endings.

#include <stdexcept>
#include <string>
#include <vector>

namespace geoflow::tdl {

struct BranchDecl {
    std::string id;
    double lo = 0.0;  // length-normalized coordinates, within [0,1]
    double hi = 1.0;
    bool operator==(const BranchDecl&) const = default;
};

struct EarDecl {
    int index = 0;
    std::string source_branch;
    double source_lo = 0.0, source_hi = 0.0;
    std::string target_branch;
    double target_lo = 0.0, target_hi = 0.0;
    bool orientation_preserving = true;
    int half_twists = 0;
    int long_ear_passes = 0;
    long long xi_weight = 0;
    int layer = 0;  // front-to-back rank among ears arriving at the target
    bool operator==(const EarDecl&) const = default;
};

struct TemplateDescription {
    int version = 1;
    std::string name;
    int k = 3;
    std::string lens_label;
    std::vector<BranchDecl> branches;
    std::vector<EarDecl> ears;
    bool operator==(const TemplateDescription&) const = default;
};

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, int col, const std::string& message);
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    int line_;
    int col_;
};

// Parses and validates; throws parse_error with 1-based line/column on any
// unknown keyword, malformed field, dangling branch reference, interval out
// of [0,1], or duplicate layer rank.
TemplateDescription parse(const std::string& text);

// Canonical text; parse(serialize(d)) == canonicalize(d) and serialization is
// stable under the round trip.
std::string serialize(const TemplateDescription& d);

// Sorted declarations (branches by id, ears by index); the form serialize emits.
TemplateDescription canonicalize(TemplateDescription d);

// Built-in defaults. The Lorenz description is the single-branch-line
// two-ear template; hecke_description(k) is the merged three-branch-line
// model for the (2,k) flow with the k-1 orbit ears on the central line.
TemplateDescription lorenz_description();
TemplateDescription hecke_description(int k);

}  // namespace geoflow::tdl
