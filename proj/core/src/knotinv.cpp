#include "geoflow/knotinv.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace geoflow {

namespace {

std::vector<int> braid_permutation(const BraidWord& b) {
    std::vector<int> strand_at(b.strand_count);
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (const auto& l : b.letters) {
        if (l.generator < 1 || l.generator >= b.strand_count)
            throw std::invalid_argument("braid: generator out of range");
        std::swap(strand_at[l.generator - 1], strand_at[l.generator]);
    }
    // perm[s] = s's end position; closure joins end position p to start p.
    std::vector<int> perm(b.strand_count);
    for (int pos = 0; pos < b.strand_count; ++pos) perm[strand_at[pos]] = pos;
    return perm;
}

}  // namespace

int closure_components(const BraidWord& b) {
    if (b.strand_count < 1) throw std::invalid_argument("braid: need at least one strand");
    const std::vector<int> perm = braid_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (size_t t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

long long positive_braid_genus(const BraidWord& b) {
    for (const auto& l : b.letters)
        if (l.sign != +1)
            throw std::invalid_argument("positive_braid_genus: braid has negative letters");
    if (closure_components(b) != 1)
        throw std::invalid_argument("positive_braid_genus: closure is not a knot");
    const long long c = static_cast<long long>(b.letters.size());
    const long long n = b.strand_count;
    if ((c - n + 1) % 2 != 0) throw std::logic_error("positive_braid_genus: parity violation");
    return (c - n + 1) / 2;
}

long long writhe(const BraidWord& b) {
    long long w = 0;
    for (const auto& l : b.letters) w += l.sign;
    return w;
}

namespace {

struct Passage {
    int crossing = 0;
    bool over = false;
};

// Closure of a strand diagram as cyclic passage sequences, one per link
// component, plus per-crossing signs and component memberships.
struct GaussLink {
    std::vector<std::vector<Passage>> comps;
    std::vector<int> sign;        // by crossing id
    std::vector<int> comp_orbit;  // component -> orbit (word index)
};

GaussLink gauss_from_diagram(const StrandDiagram& d) {
    GaussLink g;
    const int n = d.strand_count;
    // Passages of each strand in step order.
    std::vector<std::vector<Passage>> per_strand(n);
    g.sign.resize(d.crossings.size());
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        per_strand[c.over_strand].push_back({static_cast<int>(ci), true});
        per_strand[c.under_strand].push_back({static_cast<int>(ci), false});
        g.sign[ci] = c.sign;
    }
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Passage> comp;
        int t = s;
        do {
            seen[t] = true;
            comp.insert(comp.end(), per_strand[t].begin(), per_strand[t].end());
            t = d.shift[t];
        } while (t != s);
        g.comps.push_back(std::move(comp));
        g.comp_orbit.push_back(d.orbit_of[s]);
    }
    return g;
}

struct Site {
    int comp = -1;
    int pos = -1;
};

std::vector<std::array<Site, 2>> crossing_sites(const GaussLink& g) {
    std::vector<std::array<Site, 2>> sites(g.sign.size());  // [over, under]
    for (size_t c = 0; c < g.comps.size(); ++c)
        for (size_t i = 0; i < g.comps[c].size(); ++i) {
            const Passage& p = g.comps[c][i];
            sites[p.crossing][p.over ? 0 : 1] = {static_cast<int>(c), static_cast<int>(i)};
        }
    return sites;
}

}  // namespace

int seifert_circle_count(const StrandDiagram& d) {
    const GaussLink g = gauss_from_diagram(d);
    const auto sites = crossing_sites(g);
    // Arc i of a component runs from passage i to passage i+1 (cyclically).
    // Smoothing sends the arc entering a passage to the arc leaving the
    // partner passage of the same crossing.
    std::vector<int> arc_base(g.comps.size(), 0);
    int total_arcs = 0;
    int circles = 0;
    for (size_t c = 0; c < g.comps.size(); ++c) {
        arc_base[c] = total_arcs;
        if (g.comps[c].empty())
            ++circles;  // crossingless component is its own circle
        else
            total_arcs += static_cast<int>(g.comps[c].size());
    }
    std::vector<int> succ(total_arcs, -1);
    for (size_t c = 0; c < g.comps.size(); ++c) {
        const int m = static_cast<int>(g.comps[c].size());
        for (int i = 0; i < m; ++i) {
            const Passage& entered = g.comps[c][(i + 1) % m];
            const Site partner = sites[entered.crossing][entered.over ? 1 : 0];
            succ[arc_base[c] + i] = arc_base[partner.comp] + partner.pos;
        }
    }
    std::vector<bool> seen(total_arcs, false);
    for (int a = 0; a < total_arcs; ++a) {
        if (seen[a]) continue;
        ++circles;
        for (int t = a; !seen[t]; t = succ[t]) seen[t] = true;
    }
    return circles;
}

long long oracle_linking(const StrandDiagram& d, int orbit_a, int orbit_b) {
    if (orbit_a == orbit_b)
        throw std::invalid_argument("oracle_linking: need two distinct orbits");
    const GaussLink g = gauss_from_diagram(d);
    std::vector<int> orbit_of_comp = g.comp_orbit;
    std::vector<int> comp_of_crossing_over(g.sign.size(), -1),
        comp_of_crossing_under(g.sign.size(), -1);
    for (size_t c = 0; c < g.comps.size(); ++c)
        for (const Passage& p : g.comps[c])
            (p.over ? comp_of_crossing_over : comp_of_crossing_under)[p.crossing] =
                static_cast<int>(c);
    long long sum = 0;
    bool found_a = false, found_b = false;
    for (int o : orbit_of_comp) {
        found_a |= o == orbit_a;
        found_b |= o == orbit_b;
    }
    if (!found_a || !found_b)
        throw std::invalid_argument("oracle_linking: orbit missing from diagram");
    for (size_t c = 0; c < g.sign.size(); ++c) {
        const int oa = orbit_of_comp[comp_of_crossing_over[c]];
        const int ob = orbit_of_comp[comp_of_crossing_under[c]];
        if ((oa == orbit_a && ob == orbit_b) || (oa == orbit_b && ob == orbit_a)) sum += g.sign[c];
    }
    if (sum % 2 != 0) throw std::logic_error("oracle_linking: odd signed count");
    return sum / 2;
}

namespace {

// Single-component reduction state for the move search.
struct KnotState {
    std::vector<Passage> seq;  // cyclic
    std::vector<int> sign;     // by crossing id as used in seq
};

std::string encode(const KnotState& s) {
    // Minimal rotation with crossings renumbered by first appearance.
    const int m = static_cast<int>(s.seq.size());
    std::string best;
    for (int r = 0; r < std::max(m, 1); ++r) {
        std::map<int, int> renum;
        std::string enc;
        for (int i = 0; i < m; ++i) {
            const Passage& p = s.seq[(r + i) % m];
            auto [it, fresh] = renum.insert({p.crossing, static_cast<int>(renum.size())});
            enc += static_cast<char>('a' + it->second);
            enc += p.over ? 'o' : 'u';
            enc += s.sign[p.crossing] > 0 ? '+' : '-';
            (void)fresh;
        }
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

KnotState remove_passages(const KnotState& s, std::set<int> kill_positions) {
    KnotState out;
    for (int i = 0; i < static_cast<int>(s.seq.size()); ++i)
        if (!kill_positions.count(i)) out.seq.push_back(s.seq[i]);
    out.sign = s.sign;
    return out;
}

std::vector<KnotState> reductions(const KnotState& s) {
    std::vector<KnotState> out;
    const int m = static_cast<int>(s.seq.size());
    // R1: the two passages of one crossing sit adjacently.
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        if (s.seq[i].crossing == s.seq[j].crossing) out.push_back(remove_passages(s, {i, j}));
    }
    // R2: two adjacent passages all-over on one stretch and all-under on the
    // partner stretch, opposite signs.
    for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        const Passage &a = s.seq[i], &b = s.seq[j];
        if (a.crossing == b.crossing || !a.over || !b.over) continue;
        if (s.sign[a.crossing] == s.sign[b.crossing]) continue;
        // Find the partner (under) passages of both crossings.
        for (int x = 0; x < m; ++x) {
            const int y = (x + 1) % m;
            if (x == i || x == j || y == i || y == j) continue;
            const Passage &c = s.seq[x], &d = s.seq[y];
            if (c.over || d.over) continue;
            const bool match = (c.crossing == a.crossing && d.crossing == b.crossing) ||
                               (c.crossing == b.crossing && d.crossing == a.crossing);
            if (match) out.push_back(remove_passages(s, {i, j, x, y}));
        }
    }
    return out;
}

}  // namespace

bool oracle_is_unknot(const StrandDiagram& d) {
    const GaussLink g = gauss_from_diagram(d);
    if (g.comps.size() != 1)
        throw std::invalid_argument("oracle_is_unknot: diagram has several components");
    if (g.sign.size() > 8)
        throw std::invalid_argument("oracle_is_unknot: more than 8 crossings");
    KnotState start{g.comps[0], g.sign};
    std::set<std::string> seen;
    std::queue<KnotState> queue;
    queue.push(start);
    seen.insert(encode(start));
    while (!queue.empty()) {
        KnotState s = std::move(queue.front());
        queue.pop();
        if (s.seq.empty()) return true;
        for (KnotState& next : reductions(s)) {
            const std::string key = encode(next);
            if (seen.insert(key).second) queue.push(std::move(next));
        }
    }
    return false;
}

LinkSummary diagram_reduce_oracle(const StrandDiagram& d) {
    if (d.crossings.size() > 40)
        throw std::invalid_argument("diagram_reduce_oracle: diagram exceeds 40 crossings");
    LinkSummary out;
    const GaussLink g = gauss_from_diagram(d);
    out.components = static_cast<int>(g.comps.size());
    out.crossing_count = static_cast<int>(g.sign.size());
    for (int s : g.sign) {
        out.writhe += s;
        if (s != +1) out.positive = false;
    }
    if (out.components == 1) {
        if (out.positive) {
            const int circles = seifert_circle_count(d);
            out.genus = (out.crossing_count - circles + 1) / 2;
        } else if (out.crossing_count <= 8 && oracle_is_unknot(d)) {
            out.genus = 0;
        }
    }
    return out;
}

}  // namespace geoflow
