#pragma once

// Invariants of braid closures and an independent desk-scale verification
// path through signed Gauss codes: component counts, writhe, the exact genus
// formula for positive braid knots, signed-count linking, Seifert-circle
// counting, and a bounded Reidemeister-move search for unknot detection.

#include <optional>

#include "geoflow/templates.hpp"

namespace geoflow {

struct LinkSummary {
    int components = 0;
    long long writhe = 0;
    bool positive = true;
    std::optional<long long> genus;  // defined only for positive knots
    int crossing_count = 0;
};

// Cycles of the underlying permutation of the closed braid.
int closure_components(const BraidWord& b);

// g = (crossings - strands + 1) / 2, exact for positive braid closures that
// are knots. Rejects negative letters and multi-component closures.
long long positive_braid_genus(const BraidWord& b);

// Signed letter count.
long long writhe(const BraidWord& b);

// Everything below works on the closure of a StrandDiagram through its own
// Gauss-code traversal, independent of the braid-letter bookkeeping.

// Circles produced by orientation-respecting smoothing of every crossing.
int seifert_circle_count(const StrandDiagram& d);

// Half the signed crossing count between the two orbits, evaluated on the
// Gauss code.
long long oracle_linking(const StrandDiagram& d, int orbit_a, int orbit_b);

// Exhaustive search over Reidemeister I/II reductions; true only when some
// move sequence reaches a crossingless diagram. Sound, not complete.
// Rejects multi-component diagrams and more than 8 crossings.
bool oracle_is_unknot(const StrandDiagram& d);

// Components, signed counts and (for positive knots) Seifert-algorithm
// genus; move search refines single components of at most 8 crossings.
// Diagrams above 40 crossings are rejected.
LinkSummary diagram_reduce_oracle(const StrandDiagram& d);

}  // namespace geoflow
