#include "geoflow/templates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace geoflow {

namespace {

constexpr double kIntervalTol = 1e-12;

}  // namespace

TemplateModel TemplateModel::from_description(const tdl::TemplateDescription& d) {
    TemplateModel t;
    if (d.k < 3) throw std::invalid_argument("template: k must be >= 3");
    t.k_ = d.k;
    t.cap_ = (d.k - 1) / 2;
    t.name_ = d.name;
    t.lens_label_ = d.lens_label;

    std::map<std::string, int> branch_index;
    for (const auto& b : d.branches) {
        if (branch_index.count(b.id))
            throw std::invalid_argument("template: duplicate branch id '" + b.id + "'");
        branch_index[b.id] = static_cast<int>(t.branch_lines_.size());
        t.branch_lines_.push_back({b.id, {b.lo, b.hi}});
    }
    if (t.branch_lines_.empty()) throw std::invalid_argument("template: no branch lines");

    std::set<int> indices;
    for (const auto& e : d.ears) {
        Ear ear;
        ear.index = e.index;
        auto src = branch_index.find(e.source_branch);
        auto tgt = branch_index.find(e.target_branch);
        if (src == branch_index.end() || tgt == branch_index.end())
            throw std::invalid_argument("template: ear references undeclared branch line");
        ear.source_branch = src->second;
        ear.source = {e.source_lo, e.source_hi};
        ear.target_branch = tgt->second;
        ear.target = {e.target_lo, e.target_hi};
        ear.orientation_preserving = e.orientation_preserving;
        ear.half_twists = e.half_twists;
        ear.long_ear_passes = e.long_ear_passes;
        ear.xi_weight = e.xi_weight;
        ear.layer = e.layer;
        if ((std::abs(ear.half_twists) % 2 == 1) == ear.orientation_preserving)
            throw std::invalid_argument("template: half-twist parity inconsistent with orientation flag");
        if (ear.target.width() + kIntervalTol < ear.source.width())
            throw std::invalid_argument("template: contracting ear (return map must expand)");
        if (!indices.insert(ear.index).second)
            throw std::invalid_argument("template: duplicate ear index");
        t.ears_.push_back(ear);
    }
    if (t.ears_.empty()) throw std::invalid_argument("template: no ears");
    std::sort(t.ears_.begin(), t.ears_.end(),
              [](const Ear& a, const Ear& b) { return a.index < b.index; });

    // Source intervals on a common branch line must not overlap in their
    // interiors, and layer ranks at each target must form a permutation.
    for (size_t li = 0; li < t.branch_lines_.size(); ++li) {
        std::vector<const Ear*> sources;
        std::vector<int> layers;
        for (const auto& e : t.ears_) {
            if (e.source_branch == static_cast<int>(li)) sources.push_back(&e);
            if (e.target_branch == static_cast<int>(li)) layers.push_back(e.layer);
        }
        std::sort(sources.begin(), sources.end(),
                  [](const Ear* a, const Ear* b) { return a->source.lo < b->source.lo; });
        for (size_t i = 1; i < sources.size(); ++i) {
            if (sources[i]->source.lo < sources[i - 1]->source.hi - kIntervalTol)
                throw std::invalid_argument("template: overlapping ear sources on branch line '" +
                                            t.branch_lines_[li].id + "'");
        }
        std::sort(layers.begin(), layers.end());
        for (size_t i = 0; i < layers.size(); ++i) {
            if (layers[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("template: layer ranks at branch line '" +
                                            t.branch_lines_[li].id + "' are not a permutation");
        }
    }
    return t;
}

const Ear* TemplateModel::find_ear(int index) const {
    for (const auto& e : ears_)
        if (e.index == index) return &e;
    return nullptr;
}

const Ear& TemplateModel::ear_for_letter(int letter) const {
    const Ear* e = find_ear(letter);
    if (!e)
        throw std::invalid_argument("template: letter " + std::to_string(letter) +
                                    " names no ear of this template");
    return *e;
}

std::vector<long long> TemplateModel::xi_weights() const {
    std::vector<long long> w;
    w.reserve(ears_.size());
    for (const auto& e : ears_) w.push_back(e.xi_weight);
    return w;
}

TemplateModel TemplateModel::unmerged() const {
    if (ears_.empty()) return *this;
    const int central = ears_.front().source_branch;
    TemplateModel t = *this;
    t.branch_lines_ = {branch_lines_[central]};
    t.ears_.clear();
    for (Ear e : ears_) {
        if (e.source_branch != central || e.target_branch != central)
            throw std::invalid_argument("unmerged: ears must live on the central branch line");
        e.source_branch = 0;
        e.target_branch = 0;
        t.ears_.push_back(e);
    }
    return t;
}

tdl::TemplateDescription TemplateModel::to_description() const {
    tdl::TemplateDescription d;
    d.name = name_;
    d.k = k_;
    d.lens_label = lens_label_;
    for (const auto& b : branch_lines_) d.branches.push_back({b.id, b.extent.lo, b.extent.hi});
    for (const auto& e : ears_) {
        tdl::EarDecl ed;
        ed.index = e.index;
        ed.source_branch = branch_lines_[e.source_branch].id;
        ed.source_lo = e.source.lo;
        ed.source_hi = e.source.hi;
        ed.target_branch = branch_lines_[e.target_branch].id;
        ed.target_lo = e.target.lo;
        ed.target_hi = e.target.hi;
        ed.orientation_preserving = e.orientation_preserving;
        ed.half_twists = e.half_twists;
        ed.long_ear_passes = e.long_ear_passes;
        ed.xi_weight = e.xi_weight;
        ed.layer = e.layer;
        d.ears.push_back(ed);
    }
    return tdl::canonicalize(std::move(d));
}

bool TemplateModel::operator==(const TemplateModel& o) const {
    return branch_lines_ == o.branch_lines_ && ears_ == o.ears_ && k_ == o.k_ && cap_ == o.cap_;
}

TemplateModel lorenz_template() {
    return TemplateModel::from_description(tdl::lorenz_description());
}

TemplateModel hecke_template(int k, std::optional<tdl::TemplateDescription> tdl_override) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("hecke_template: k must be odd and >= 3");
    if (tdl_override) {
        if (tdl_override->k != k)
            throw std::invalid_argument("hecke_template: override describes k = " +
                                        std::to_string(tdl_override->k) + ", not k = " +
                                        std::to_string(k));
        return TemplateModel::from_description(*tdl_override);
    }
    return TemplateModel::from_description(tdl::hecke_description(k));
}

namespace {

// One period point per rotation of each word, keyed back to (word, rotation).
struct RawPoint {
    int word_index;
    int rotation;
};

int letter_at(const GroupWord& w, int rotation, int offset) {
    const auto& l = w.letters();
    const int m = static_cast<int>(l.size());
    return l[(rotation + offset) % m];
}

// One-sided-shift order: lexicographic by source-interval position, with the
// sense flipping after each orientation-reversing letter. Returns <0, 0, >0.
int compare_itineraries(const TemplateModel& t, const std::vector<GroupWord>& words,
                        const std::map<int, int>& rank, const RawPoint& pa, const RawPoint& pb) {
    const GroupWord& wa = words[pa.word_index];
    const GroupWord& wb = words[pb.word_index];
    // Fine-Wilf: distinct periodic itineraries differ within |a| + |b| steps.
    const int bound = wa.length() + wb.length();
    int parity = +1;
    for (int j = 0; j < bound; ++j) {
        const int la = letter_at(wa, pa.rotation, j);
        const int lb = letter_at(wb, pb.rotation, j);
        if (la != lb) {
            const int cmp = rank.at(la) < rank.at(lb) ? -1 : +1;
            return parity * cmp;
        }
        if (!t.ear_for_letter(la).orientation_preserving) parity = -parity;
    }
    return 0;
}

struct Emitter {
    std::vector<int> pos_of;   // strand -> position
    std::vector<int> strand_at;  // position -> strand
    std::vector<Crossing>* crossings;
    std::vector<std::vector<std::pair<double, double>>>* paths;
    int step = 0;

    // Emit one generator at `pos` (0-based pair (pos, pos+1)).
    void cross(int pos, int sign, bool over_left) {
        const int left = strand_at[pos];
        const int right = strand_at[pos + 1];
        Crossing c;
        c.over_strand = over_left ? left : right;
        c.under_strand = over_left ? right : left;
        c.sign = sign;
        c.generator = pos + 1;
        c.step = ++step;
        crossings->push_back(c);
        std::swap(strand_at[pos], strand_at[pos + 1]);
        pos_of[left] = pos + 1;
        pos_of[right] = pos;
        (*paths)[left].push_back({static_cast<double>(pos + 1), static_cast<double>(step)});
        (*paths)[right].push_back({static_cast<double>(pos), static_cast<double>(step)});
    }
};

}  // namespace

StrandDiagram orbit_strands(const TemplateModel& t, const std::vector<GroupWord>& words) {
    if (words.empty()) throw std::invalid_argument("orbit_strands: no orbit words given");
    for (size_t i = 0; i < words.size(); ++i) {
        if (!words[i].is_primitive())
            throw std::invalid_argument(
                "orbit_strands: imprimitive word (a power retraces the same orbit)");
        for (size_t j = i + 1; j < words.size(); ++j)
            if (words[i] == words[j])
                throw std::invalid_argument("orbit_strands: duplicate cyclic word");
        for (int a : words[i].letters()) {
            const Ear& e = t.ear_for_letter(a);
            if (e.long_ear_passes > t.max_consecutive_long_passes())
                throw realizability_error(
                    "orbit word uses ear E_" + std::to_string(a) + " demanding " +
                    std::to_string(e.long_ear_passes) +
                    " consecutive long-ear travels, but the template realizes at most " +
                    std::to_string(t.max_consecutive_long_passes()));
        }
    }

    // All transits must take place over a single branch line.
    int central = -1;
    for (const auto& w : words)
        for (int a : w.letters()) {
            const Ear& e = t.ear_for_letter(a);
            if (central == -1) central = e.source_branch;
            if (e.source_branch != central || e.target_branch != central)
                throw std::invalid_argument(
                    "orbit_strands: orbit words must route through ears of one branch line");
        }

    // Alphabet order = order of ear source intervals along the branch line.
    std::map<int, int> rank;
    {
        std::vector<const Ear*> es;
        for (const auto& e : t.ears())
            if (e.source_branch == central && e.target_branch == central) es.push_back(&e);
        std::sort(es.begin(), es.end(),
                  [](const Ear* a, const Ear* b) { return a->source.lo < b->source.lo; });
        for (size_t i = 0; i < es.size(); ++i) rank[es[i]->index] = static_cast<int>(i);
    }

    std::vector<RawPoint> raw;
    for (size_t wi = 0; wi < words.size(); ++wi)
        for (int r = 0; r < words[wi].length(); ++r)
            raw.push_back({static_cast<int>(wi), r});

    std::sort(raw.begin(), raw.end(), [&](const RawPoint& a, const RawPoint& b) {
        return compare_itineraries(t, words, rank, a, b) < 0;
    });
    for (size_t i = 1; i < raw.size(); ++i)
        if (compare_itineraries(t, words, rank, raw[i - 1], raw[i]) == 0)
            throw std::invalid_argument("orbit_strands: coincident period points");

    const int n = static_cast<int>(raw.size());
    StrandDiagram d;
    d.strand_count = n;
    d.words = words;

    // Positions within each ear's source interval, evenly spaced in sorted order.
    std::map<int, int> per_ear_count, per_ear_seen;
    for (const auto& p : raw) ++per_ear_count[letter_at(words[p.word_index], p.rotation, 0)];
    std::map<std::pair<int, int>, int> index_of;
    for (int i = 0; i < n; ++i) {
        const RawPoint& p = raw[i];
        const int letter = letter_at(words[p.word_index], p.rotation, 0);
        const Ear& e = t.ear_for_letter(letter);
        const int local = per_ear_seen[letter]++;
        PeriodPoint pp;
        pp.word_index = p.word_index;
        pp.rotation = p.rotation;
        pp.letter = letter;
        pp.coordinate =
            e.source.lo + (local + 0.5) * e.source.width() / per_ear_count[letter];
        d.points.push_back(pp);
        d.orbit_of.push_back(p.word_index);
        index_of[{p.word_index, p.rotation}] = i;
    }
    for (int i = 0; i < n; ++i) {
        const PeriodPoint& pp = d.points[i];
        const int m = words[pp.word_index].length();
        d.shift.push_back(index_of.at({pp.word_index, (pp.rotation + 1) % m}));
    }

    d.strand_paths.assign(n, {});
    for (int i = 0; i < n; ++i)
        d.strand_paths[i].push_back({static_cast<double>(i), 0.0});

    Emitter em;
    em.pos_of.resize(n);
    em.strand_at.resize(n);
    std::iota(em.pos_of.begin(), em.pos_of.end(), 0);
    std::iota(em.strand_at.begin(), em.strand_at.end(), 0);
    em.crossings = &d.crossings;
    em.paths = &d.strand_paths;

    // Band 1: half twists. Each ear's strands occupy a contiguous run of
    // start positions; Delta^{|h|} on the run, reversing it once per twist.
    {
        std::vector<int> letters_in_order;
        for (const auto& entry : rank) letters_in_order.push_back(entry.first);
        std::sort(letters_in_order.begin(), letters_in_order.end(),
                  [&](int a, int b) { return rank.at(a) < rank.at(b); });
        for (int letter : letters_in_order) {
            const Ear& e = t.ear_for_letter(letter);
            if (e.half_twists == 0) continue;
            int lo = n, hi = -1;
            for (int i = 0; i < n; ++i)
                if (d.points[i].letter == letter) {
                    lo = std::min(lo, em.pos_of[i]);
                    hi = std::max(hi, em.pos_of[i]);
                }
            if (hi <= lo) continue;
            const int sign = e.half_twists > 0 ? +1 : -1;
            for (int rep = 0; rep < std::abs(e.half_twists); ++rep)
                for (int top = hi - 1; top >= lo; --top)
                    for (int p = lo; p <= top; ++p) em.cross(p, sign, sign > 0);
        }
    }

    // Band 2: winding. Turn by turn, all strands still travelling the long
    // ear make one joint full twist; contiguous runs twist separately.
    {
        int max_w = 0;
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) {
            w[i] = t.ear_for_letter(d.points[i].letter).long_ear_passes;
            max_w = std::max(max_w, w[i]);
        }
        for (int turn = 1; turn <= max_w; ++turn) {
            std::vector<bool> winding(n, false);
            for (int i = 0; i < n; ++i)
                if (w[i] >= turn) winding[em.pos_of[i]] = true;
            int p = 0;
            while (p < n) {
                if (!winding[p]) {
                    ++p;
                    continue;
                }
                int q = p;
                while (q + 1 < n && winding[q + 1]) ++q;
                const int m = q - p + 1;
                if (m >= 2) {
                    // Full twist: (sigma_p ... sigma_{q-1})^m, pure, each
                    // pair crossing exactly twice.
                    for (int rep = 0; rep < m; ++rep)
                        for (int g = p; g < q; ++g) em.cross(g, +1, true);
                }
                p = q + 1;
            }
        }
    }

    // Band 3: branch-region permutation braid; bubble towards the shift
    // targets, the lower layer rank in front.
    {
        bool moved = true;
        while (moved) {
            moved = false;
            for (int p = 0; p + 1 < n; ++p) {
                const int left = em.strand_at[p];
                const int right = em.strand_at[p + 1];
                if (d.shift[left] > d.shift[right]) {
                    const int llayer = t.ear_for_letter(d.points[left].letter).layer;
                    const int rlayer = t.ear_for_letter(d.points[right].letter).layer;
                    const bool left_front = llayer <= rlayer;
                    em.cross(p, left_front ? +1 : -1, left_front);
                    moved = true;
                }
            }
        }
    }

    for (int i = 0; i < n; ++i)
        d.strand_paths[i].push_back(
            {static_cast<double>(em.pos_of[i]), static_cast<double>(em.step + 1)});

    // Front ear and trip count on the central line.
    {
        int best_layer = 0;
        for (const auto& e : t.ears()) {
            if (e.source_branch != central || e.target_branch != central) continue;
            if (best_layer == 0 || e.layer < best_layer) {
                best_layer = e.layer;
                d.front_ear = e.index;
            }
        }
        for (const auto& pp : d.points)
            if (pp.letter == d.front_ear) ++d.trip_count;
    }
    return d;
}

BraidWord braid_from_diagram(const StrandDiagram& d) {
    BraidWord b;
    b.strand_count = d.strand_count;
    b.letters.reserve(d.crossings.size());
    for (const auto& c : d.crossings) {
        if (c.generator < 1 || c.generator >= d.strand_count)
            throw std::invalid_argument("braid_from_diagram: generator out of range");
        b.letters.push_back({c.generator, c.sign});
    }
    return b;
}

long long linking_number(const StrandDiagram& d, int orbit_a, int orbit_b) {
    const int nw = static_cast<int>(d.words.size());
    if (orbit_a < 0 || orbit_a >= nw || orbit_b < 0 || orbit_b >= nw)
        throw std::invalid_argument("linking_number: orbit index out of range");
    if (orbit_a == orbit_b)
        throw std::invalid_argument("linking_number: linking of an orbit with itself is undefined");
    long long signed_sum = 0;
    for (const auto& c : d.crossings) {
        const int oa = d.orbit_of[c.over_strand];
        const int ob = d.orbit_of[c.under_strand];
        if ((oa == orbit_a && ob == orbit_b) || (oa == orbit_b && ob == orbit_a))
            signed_sum += c.sign;
    }
    if (signed_sum % 2 != 0)
        throw std::logic_error("linking_number: odd inter-orbit crossing sum");
    return signed_sum / 2;
}

long long linking_with_xi(const TemplateModel& t, const GroupWord& w) {
    long long sum = 0;
    for (int a : w.letters()) sum += t.ear_for_letter(a).xi_weight;
    return sum;
}

LorenzWitness contains_lorenz_subtemplate(const TemplateModel& t) {
    const auto& ears = t.ears();
    for (size_t i = 0; i < ears.size(); ++i) {
        for (size_t j = i + 1; j < ears.size(); ++j) {
            const Ear& a = ears[i];
            const Ear& b = ears[j];
            if (a.half_twists != 0 || b.half_twists != 0) continue;
            // Flat bands only: a long-ear travel gives the band a framing
            // twist even though its core stays unknotted.
            if (a.long_ear_passes != 0 || b.long_ear_passes != 0) continue;
            if (a.source_branch != b.source_branch || a.target_branch != b.target_branch)
                continue;
            const Interval extent = t.branch_lines()[a.target_branch].extent;
            if (!(a.target == extent) || !(b.target == extent)) continue;
            try {
                StrandDiagram d = orbit_strands(
                    t, {GroupWord({a.index}), GroupWord({b.index})});
                bool core_self_crossing = false;
                for (const auto& c : d.crossings)
                    if (d.orbit_of[c.over_strand] == d.orbit_of[c.under_strand])
                        core_self_crossing = true;
                if (!core_self_crossing && linking_number(d, 0, 1) == 0)
                    return {true, a.index, b.index};
            } catch (const std::exception&) {
                continue;
            }
        }
    }
    return {false, 0, 0};
}

}  // namespace geoflow
