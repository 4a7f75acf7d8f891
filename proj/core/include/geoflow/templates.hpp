#pragma once

// Combinatorial models of embedded templates for the (2,k) geodesic flows,
// and the machinery turning orbit words into strand diagrams, braids and
// linking data.
//
// Model. A template is a set of branch lines plus ears. Ear E_i leaves a
// sub-interval of the central branch line, stretches over its target
// interval, and returns; in the merged three-branch-line form of the (2,k)
// template the ear first drops to a side branch line, travels
// long_ear_passes times around the solid-torus core through the long ear,
// and comes back. The travel counts are min(i-1, k-i-1), symmetric under
// E_i <-> E_{k-i}; the long ear covers its own branch line only partly, so
// at most (k-1)/2 consecutive travels are realizable. Ears with travel
// count 0 (E_1 and E_{k-1}) are flat bands: a Lorenz pair.
//
// Diagram conventions (everything a figure would normally fix; all of it
// overridable through a TDL description):
//  * Period points of the input words are placed on the central branch line
//    in one-sided-shift order: itineraries compared lexicographically by
//    source-interval position, with the comparison sense flipping after
//    each orientation-reversing letter.
//  * Crossings come in three bands, top to bottom: per-ear half-twist
//    braids (sign = sign(half_twists)), one joint full twist per winding
//    turn shared by all strands still travelling the long ear (positive),
//    and the branch-region permutation braid where the ear of lower layer
//    rank crosses in front (positive when the front strand moves right).
//    With default data every crossing is positive.
//  * Right-handed crossing = +1. Linking of two orbits is half the signed
//    sum of their inter-orbit crossings.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geoflow/hecke.hpp"
#include "geoflow/tdl.hpp"

namespace geoflow {

// A word needs more consecutive long-ear travels than the template carries.
class realizability_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double width() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

struct BranchLine {
    std::string id;
    Interval extent;
    bool operator==(const BranchLine&) const = default;
};

struct Ear {
    int index = 0;  // E_index; also the word letter that routes through it
    int source_branch = 0;
    Interval source;
    int target_branch = 0;
    Interval target;
    bool orientation_preserving = true;
    int half_twists = 0;       // parity must match the orientation flag
    int long_ear_passes = 0;   // travels along the long ear per transit
    long long xi_weight = 0;   // winding around the missing fiber
    int layer = 0;             // 1 = frontmost at the target branch line
    bool operator==(const Ear&) const = default;
};

class TemplateModel {
  public:
    static TemplateModel from_description(const tdl::TemplateDescription& d);

    const std::vector<BranchLine>& branch_lines() const { return branch_lines_; }
    const std::vector<Ear>& ears() const { return ears_; }  // sorted by index
    int k() const { return k_; }
    int max_consecutive_long_passes() const { return cap_; }
    const std::string& name() const { return name_; }
    const std::string& lens_label() const { return lens_label_; }

    const Ear* find_ear(int index) const;
    const Ear& ear_for_letter(int letter) const;  // throws on unknown letter
    std::vector<long long> xi_weights() const;

    // Single-branch-line view: the same ears over the central line only.
    TemplateModel unmerged() const;

    tdl::TemplateDescription to_description() const;

    // Structural equality; names and lens labels are bookkeeping.
    bool operator==(const TemplateModel& o) const;

  private:
    std::vector<BranchLine> branch_lines_;
    std::vector<Ear> ears_;
    int k_ = 3;
    int cap_ = 1;
    std::string name_;
    std::string lens_label_;
};

// The two-ear template: both ears flat, both stretching over the whole
// branch line, left ear in front, xi weights (1,1).
TemplateModel lorenz_template();

// The merged (2,k) template, built from tdl::hecke_description(k) unless an
// override is supplied (override.k must agree). hecke_template(3).unmerged()
// carries the same data as lorenz_template().
TemplateModel hecke_template(int k,
                             std::optional<tdl::TemplateDescription> tdl_override = {});

struct PeriodPoint {
    int word_index = 0;
    int rotation = 0;
    int letter = 0;          // ear index of the outgoing transit
    double coordinate = 0.0; // on the central branch line
};

struct Crossing {
    int over_strand = 0;   // period-point index of the front strand
    int under_strand = 0;
    int sign = +1;
    int generator = 0;     // 1-based braid position at emission time
    int step = 0;          // time order down the diagram
};

struct StrandDiagram {
    int strand_count = 0;
    std::vector<PeriodPoint> points;  // sorted along the branch line
    std::vector<int> shift;           // point -> image under the return map
    std::vector<int> orbit_of;        // point -> input word index
    std::vector<Crossing> crossings;  // in step order
    std::vector<GroupWord> words;
    // Per-strand polyline in the abstract projection plane: (lane, depth)
    // waypoints; strand s starts at lane s and ends at lane shift[s].
    std::vector<std::vector<std::pair<double, double>>> strand_paths;
    int front_ear = 0;    // ear of layer rank 1 on the central line
    int trip_count = 0;   // period points whose transit uses the front ear
};

// Builds the diagram for a set of pairwise distinct primitive cyclic words.
// Letters must name ears of T; a letter whose ear demands more consecutive
// long-ear travels than the template allows raises realizability_error.
StrandDiagram orbit_strands(const TemplateModel& t, const std::vector<GroupWord>& words);

struct BraidLetter {
    int generator = 0;  // sigma_generator, 1-based
    int sign = +1;
    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strand_count = 0;
    std::vector<BraidLetter> letters;
    bool operator==(const BraidWord&) const = default;
};

// Reads the diagram's crossing stream back as a braid word on
// strand_count = number of period points; deterministic.
BraidWord braid_from_diagram(const StrandDiagram& d);

// Half the signed sum of crossings between the two orbits (word indices
// into d.words). Rejects a == b and unknown indices.
long long linking_number(const StrandDiagram& d, int orbit_a, int orbit_b);

// Sum of xi weights over the letters of w.
long long linking_with_xi(const TemplateModel& t, const GroupWord& w);

struct LorenzWitness {
    bool found = false;
    int ear_a = 0;
    int ear_b = 0;
};

// Searches for a pair of flat ears (no half twists, no long-ear travels)
// stretching over the whole central branch line whose cores are unknotted
// and mutually unlinked; such a pair spans a Lorenz subtemplate.
LorenzWitness contains_lorenz_subtemplate(const TemplateModel& t);

}  // namespace geoflow
