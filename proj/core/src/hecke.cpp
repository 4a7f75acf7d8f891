#include "geoflow/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geoflow {

double lattice_distance(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("lattice_distance: k must be odd and >= 3");
    return std::acosh(1.0 / std::sin(std::numbers::pi / k));
}

MobiusTransform HeckeGroup::v_power(int a) const {
    const UpperHalfPoint cone{0.0, std::exp(d)};
    return rotation_about(cone, 2.0 * std::numbers::pi * a / k);
}

HeckeGroup build_group(int k, double d) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("build_group: k must be odd and >= 3");
    if (!(d > 0.0)) throw std::invalid_argument("build_group: d must be positive");
    HeckeGroup g;
    g.k = k;
    g.d = d;
    g.u = rotation_about(UpperHalfPoint{0.0, 1.0}, std::numbers::pi);
    g.v = g.v_power(1);
    return g;
}

std::vector<int> least_rotation(const std::vector<int>& w) {
    const int m = static_cast<int>(w.size());
    if (m == 0) return w;
    int best = 0;
    for (int r = 1; r < m; ++r) {
        for (int j = 0; j < m; ++j) {
            const int a = w[(r + j) % m], b = w[(best + j) % m];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    std::vector<int> out(m);
    for (int j = 0; j < m; ++j) out[j] = w[(best + j) % m];
    return out;
}

GroupWord::GroupWord(std::vector<int> letters) {
    if (letters.empty()) throw std::invalid_argument("GroupWord: empty word");
    for (int a : letters)
        if (a < 1) throw std::invalid_argument("GroupWord: letters must be >= 1");
    letters_ = least_rotation(letters);
}

bool GroupWord::is_primitive() const {
    const int m = length();
    for (int p = 1; p < m; ++p) {
        if (m % p != 0) continue;
        bool periodic = true;
        for (int j = 0; j < m && periodic; ++j)
            periodic = letters_[j] == letters_[(j + p) % m];
        if (periodic) return false;
    }
    return true;
}

GroupWord GroupWord::rotated(int r) const {
    const int m = length();
    std::vector<int> out(m);
    for (int j = 0; j < m; ++j) out[j] = letters_[((r % m + m) % m + j) % m];
    return GroupWord(std::move(out));
}

bool GroupWord::operator<(const GroupWord& o) const {
    if (length() != o.length()) return length() < o.length();
    return letters_ < o.letters_;
}

IsometryClass classify(const MobiusTransform& m, double tol) {
    IsometryClass c;
    c.trace = m.trace();
    const double t = std::abs(c.trace);
    if (t > 2.0 + tol) {
        c.kind = IsometryKind::hyperbolic;
        c.length = 2.0 * std::acosh(t / 2.0);
    } else if (t >= 2.0 - tol) {
        c.kind = IsometryKind::parabolic;
    } else {
        c.kind = IsometryKind::elliptic;
    }
    return c;
}

MobiusTransform word_to_matrix(const HeckeGroup& g, const GroupWord& w) {
    MobiusTransform out;
    for (int a : w.letters()) {
        if (a < 1 || a > g.k - 1)
            throw std::invalid_argument("word_to_matrix: letter out of range {1,...,k-1}");
        out = compose(out, compose(g.u, g.v_power(a)));
    }
    return out;
}

namespace {

// Duval's generation of Lyndon words over {1,...,s} up to length n; these are
// exactly the canonical forms of primitive cyclic words.
void lyndon_words(int s, int n, std::vector<std::vector<int>>& out) {
    std::vector<int> w{0};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) <= n) out.push_back(w);
        const int m = static_cast<int>(w.size());
        while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == s) w.pop_back();
    }
}

}  // namespace

std::vector<ClassifiedWord> enumerate_orbit_words(const HeckeGroup& g, int max_len,
                                                  WordSet set, double tol) {
    if (max_len < 1) throw std::invalid_argument("enumerate_orbit_words: max_len must be >= 1");
    std::vector<std::vector<int>> roots;
    lyndon_words(g.k - 1, max_len, roots);

    std::vector<GroupWord> words;
    for (const auto& r : roots) {
        words.emplace_back(r);
        if (set == WordSet::all) {
            const int m = static_cast<int>(r.size());
            for (int rep = 2; rep * m <= max_len; ++rep) {
                std::vector<int> power;
                power.reserve(rep * m);
                for (int i = 0; i < rep; ++i) power.insert(power.end(), r.begin(), r.end());
                words.emplace_back(std::move(power));
            }
        }
    }
    std::sort(words.begin(), words.end());

    std::vector<ClassifiedWord> out;
    out.reserve(words.size());
    for (auto& w : words) {
        IsometryClass c = classify(word_to_matrix(g, w), tol);
        out.push_back({std::move(w), c});
    }
    return out;
}

BoundaryGeodesic axis(const MobiusTransform& m, double tol) {
    if (classify(m, tol).kind != IsometryKind::hyperbolic)
        throw std::invalid_argument("axis: transform is not hyperbolic");
    const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
    if (c == 0.0) {
        // Fixed points b/(d-a) and infinity; |derivative| = 1/d^2 at both.
        const IdealPoint finite = IdealPoint::at(b / (d - a));
        const IdealPoint inf = IdealPoint::at_infinity();
        if (std::abs(d) < 1.0) return {finite, inf};  // 1/d^2 > 1: finite point repels
        return {inf, finite};
    }
    // Roots of c x^2 + (d - a) x - b = 0.
    const double disc = (d - a) * (d - a) + 4.0 * b * c;  // = tr^2 - 4 > 0
    const double sq = std::sqrt(disc);
    const double x1 = (a - d + sq) / (2.0 * c);
    const double x2 = (a - d - sq) / (2.0 * c);
    // Attracting fixed point has |c x + d| > 1 (the derivative factors
    // multiply to det = 1, so exactly one does).
    const double f1 = std::abs(c * x1 + d);
    if (f1 > 1.0) return {IdealPoint::at(x2), IdealPoint::at(x1)};
    return {IdealPoint::at(x1), IdealPoint::at(x2)};
}

}  // namespace geoflow
