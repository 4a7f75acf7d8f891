#pragma once

// The (2,k) Hecke triangle group in the upper half-plane: generators
// U (order-2 rotation about i) and V (order-k rotation about i e^d), the
// lattice distance d0 at which the cusp element U V is parabolic, and the
// enumeration of cyclic words <-> conjugacy classes <-> template ear words.
//
// Word convention: a word (a_1, ..., a_m) with a_i in {1, ..., k-1} names the
// product U V^{a_1} U V^{a_2} ... U V^{a_m}, read cyclically. Letter a
// corresponds to template ear E_a. Words are stored as their
// lexicographically least rotation. enumerate_orbit_words lists primitive
// cyclic words (periodic orbits of the shift); imprimitive powers w^n retrace
// the same closed geodesic and are listed only on request.

#include <cstdint>
#include <optional>
#include <vector>

#include "geoflow/hyperbolic.hpp"

namespace geoflow {

inline constexpr double kParabolicTol = 1e-9;  // |tr| in [2-tol, 2+tol] counts as parabolic

// d0 = arccosh(1 / sin(pi/k)); the unique distance making U V parabolic.
// Rejects even k and k < 3.
double lattice_distance(int k);

struct HeckeGroup {
    int k = 3;
    double d = 0.0;
    MobiusTransform u;  // order 2 about i
    MobiusTransform v;  // order k about i e^d

    // V^a computed from the rotation angle directly (no power accumulation).
    MobiusTransform v_power(int a) const;
};

HeckeGroup build_group(int k, double d);

class GroupWord {
  public:
    // Canonicalizes to the least rotation. Letters must be positive.
    explicit GroupWord(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool is_primitive() const;
    GroupWord rotated(int r) const;

    bool operator==(const GroupWord&) const = default;
    // (length, lexicographic) order; the enumeration order.
    bool operator<(const GroupWord& o) const;

  private:
    std::vector<int> letters_;
};

std::vector<int> least_rotation(const std::vector<int>& w);

enum class IsometryKind { elliptic, parabolic, hyperbolic };

struct IsometryClass {
    IsometryKind kind = IsometryKind::elliptic;
    double trace = 0.0;
    std::optional<double> length;  // 2 arccosh(|tr|/2), hyperbolic only
};

// Trichotomy by |trace| against 2 with a +-tol parabolic band. The identity
// has |tr| = 2 and lands in the parabolic band; callers must treat the band
// as non-hyperbolic.
IsometryClass classify(const MobiusTransform& m, double tol = kParabolicTol);

// Product U V^{a_1} ... U V^{a_m}. Letters outside {1, ..., k-1} rejected.
MobiusTransform word_to_matrix(const HeckeGroup& g, const GroupWord& w);

enum class WordSet { primitive, all };

struct ClassifiedWord {
    GroupWord word;
    IsometryClass cls;
};

// All canonical cyclic words of length <= max_len over {1, ..., k-1} in
// (length, lex) order, classified at g.d. WordSet::all additionally includes
// imprimitive powers.
std::vector<ClassifiedWord> enumerate_orbit_words(const HeckeGroup& g, int max_len,
                                                  WordSet set = WordSet::primitive,
                                                  double tol = kParabolicTol);

// Fixed points on the ideal boundary, ordered (repelling, attracting).
// Rejects non-hyperbolic input.
BoundaryGeodesic axis(const MobiusTransform& m, double tol = kParabolicTol);

}  // namespace geoflow
