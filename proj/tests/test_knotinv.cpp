#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geoflow/hecke.hpp"
#include "geoflow/knotinv.hpp"
#include "geoflow/templates.hpp"

using namespace geoflow;

namespace {

BraidWord braid(int strands, std::initializer_list<std::pair<int, int>> letters) {
    BraidWord b;
    b.strand_count = strands;
    for (auto [g, s] : letters) b.letters.push_back({g, s});
    return b;
}

BraidWord power(int strands, std::initializer_list<int> generators, int reps) {
    BraidWord b;
    b.strand_count = strands;
    for (int r = 0; r < reps; ++r)
        for (int g : generators) b.letters.push_back({g, +1});
    return b;
}

StrandDiagram lorenz_diagram(std::initializer_list<std::vector<int>> ws) {
    std::vector<GroupWord> words;
    for (const auto& w : ws) words.emplace_back(w);
    return orbit_strands(lorenz_template(), words);
}

// Apply a random valid braid relation in place; both relations preserve the
// closure and the writhe.
void apply_random_relation(BraidWord& b, std::mt19937_64& rng) {
    if (b.letters.size() < 2) return;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const size_t i = rng() % (b.letters.size() - 1);
        BraidLetter& x = b.letters[i];
        BraidLetter& y = b.letters[i + 1];
        if (std::abs(x.generator - y.generator) >= 2) {
            std::swap(x, y);  // far commutation
            return;
        }
        if (i + 2 < b.letters.size()) {
            BraidLetter& z = b.letters[i + 2];
            const bool yang_baxter = x.sign == +1 && y.sign == +1 && z.sign == +1 &&
                                     x.generator == z.generator &&
                                     std::abs(x.generator - y.generator) == 1;
            if (yang_baxter) {
                // aba -> bab
                const int a = x.generator, bgen = y.generator;
                x.generator = bgen;
                y.generator = a;
                z.generator = bgen;
                return;
            }
        }
    }
}

}  // namespace

TEST_CASE("closure components") {
    CHECK(closure_components(braid(3, {})) == 3);
    CHECK(closure_components(braid(2, {{1, +1}})) == 1);
    CHECK(closure_components(braid(2, {{1, +1}, {1, +1}, {1, +1}})) == 1);
    CHECK(closure_components(braid(2, {{1, +1}, {1, +1}})) == 2);
    CHECK(closure_components(power(3, {1, 2}, 2)) == 1);
    CHECK(closure_components(power(3, {1, 2}, 3)) == 3);  // full twist is pure
    CHECK_THROWS_AS(closure_components(braid(2, {{2, +1}})), std::invalid_argument);
}

TEST_CASE("genus of positive braid knots") {
    CHECK(positive_braid_genus(braid(2, {{1, +1}})) == 0);                    // unknot
    CHECK(positive_braid_genus(braid(2, {{1, +1}, {1, +1}, {1, +1}})) == 1);  // trefoil
    CHECK(positive_braid_genus(power(2, {1}, 5)) == 2);                       // (2,5) torus knot
    CHECK(positive_braid_genus(power(3, {1, 2}, 2)) == 1);                    // (3,2) torus knot
    CHECK(positive_braid_genus(power(3, {1, 2}, 4)) == 3);                    // (3,4) torus knot

    CHECK_THROWS_AS(positive_braid_genus(power(3, {1, 2}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(positive_braid_genus(braid(2, {{1, -1}})), std::invalid_argument);
}

TEST_CASE("genus formula against the Seifert-circle count") {
    const HeckeGroup g = build_group(3, lattice_distance(3));
    const TemplateModel t = lorenz_template();
    for (const auto& cw : enumerate_orbit_words(g, 7)) {
        const StrandDiagram d = orbit_strands(t, {cw.word});
        const BraidWord b = braid_from_diagram(d);
        const int circles = seifert_circle_count(d);
        const long long oracle_genus =
            (static_cast<long long>(d.crossings.size()) - circles + 1) / 2;
        CHECK(positive_braid_genus(b) == oracle_genus);
        CHECK(circles == b.strand_count);  // braid-form diagrams smooth to their strands
    }
}

TEST_CASE("writhe") {
    CHECK(writhe(braid(4, {})) == 0);
    CHECK(writhe(braid(2, {{1, +1}, {1, +1}, {1, +1}})) == 3);
    CHECK(writhe(braid(2, {{1, +1}, {1, -1}})) == 0);
}

TEST_CASE("writhe is invariant under braid relations") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        BraidWord b;
        b.strand_count = 4;
        const size_t len = 3 + rng() % 8;
        for (size_t i = 0; i < len; ++i)
            b.letters.push_back({static_cast<int>(1 + rng() % 3), rng() % 2 ? +1 : -1});
        const long long before = writhe(b);
        const int comps = closure_components(b);
        for (int moves = 0; moves < 5; ++moves) apply_random_relation(b, rng);
        CHECK(writhe(b) == before);
        CHECK(closure_components(b) == comps);
    }
}

TEST_CASE("unknot detection by move search") {
    CHECK(oracle_is_unknot(lorenz_diagram({{1}})));      // crossingless core
    CHECK(oracle_is_unknot(lorenz_diagram({{1, 2}})));   // one kink
    CHECK(oracle_is_unknot(lorenz_diagram({{1, 1, 2}})));
    CHECK_FALSE(oracle_is_unknot(lorenz_diagram({{1, 2, 1, 2, 2}})));  // trefoil word

    CHECK_THROWS_AS(oracle_is_unknot(lorenz_diagram({{1}, {2}})), std::invalid_argument);
    // More than 8 crossings is out of the search's remit.
    CHECK_THROWS_AS(oracle_is_unknot(lorenz_diagram({{1, 1, 2, 1, 2, 2, 1, 2, 2, 2}})),
                    std::invalid_argument);
}

TEST_CASE("move search cancels opposite-sign pairs") {
    // Hand-built closure of sigma_1 sigma_1^{-1} sigma_1 on two strands: an
    // unknot that needs one R2 before the final R1.
    StrandDiagram d;
    d.strand_count = 2;
    d.shift = {1, 0};
    d.orbit_of = {0, 0};
    d.words = {GroupWord({1, 2})};
    d.points.resize(2);
    d.crossings = {
        {0, 1, +1, 1, 1},
        {0, 1, -1, 1, 2},
        {0, 1, +1, 1, 3},
    };
    CHECK(oracle_is_unknot(d));
    const LinkSummary s = diagram_reduce_oracle(d);
    CHECK_FALSE(s.positive);
    CHECK(s.writhe == 1);
    CHECK(s.genus == 0);  // via the move search
}

TEST_CASE("diagram reduction summary") {
    const LinkSummary zero = diagram_reduce_oracle(lorenz_diagram({{1}}));
    CHECK(zero.components == 1);
    CHECK(zero.crossing_count == 0);
    CHECK(zero.writhe == 0);
    CHECK(zero.positive);
    CHECK(zero.genus == 0);

    const LinkSummary lr = diagram_reduce_oracle(lorenz_diagram({{1, 2}}));
    CHECK(lr.components == 1);
    CHECK(lr.crossing_count == 1);
    CHECK(lr.genus == 0);

    const LinkSummary cores = diagram_reduce_oracle(lorenz_diagram({{1}, {2}}));
    CHECK(cores.components == 2);
    CHECK(cores.crossing_count == 0);
    CHECK_FALSE(cores.genus.has_value());

    const LinkSummary trefoil = diagram_reduce_oracle(lorenz_diagram({{1, 2, 1, 2, 2}}));
    CHECK(trefoil.components == 1);
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.writhe == 6);

    CHECK_THROWS_AS(diagram_reduce_oracle(lorenz_diagram({{1, 1, 1, 1, 1, 2},
                                                          {1, 1, 1, 2, 2, 2},
                                                          {1, 2, 2, 2, 2, 2},
                                                          {1, 1, 2, 1, 2, 2}})),
                    std::invalid_argument);
}

TEST_CASE("linking via crossing records equals linking via the Gauss code") {
    const TemplateModel t = lorenz_template();
    const HeckeGroup g = build_group(3, lattice_distance(3));
    const auto words = enumerate_orbit_words(g, 6);
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
            const StrandDiagram d = orbit_strands(t, {words[i].word, words[j].word});
            CHECK(linking_number(d, 0, 1) == oracle_linking(d, 0, 1));
        }
    const StrandDiagram cores = lorenz_diagram({{1}, {2}});
    CHECK(oracle_linking(cores, 0, 1) == 0);
    CHECK_THROWS_AS(oracle_linking(cores, 0, 0), std::invalid_argument);
}
