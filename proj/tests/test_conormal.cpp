#include <doctest.h>

#include "g2micro/conormal.hpp"
#include "g2micro/pipeline.hpp"

using namespace g2micro;
using namespace g2micro::conormal;
using orbitgeom::GroupType;

namespace {
const std::string kData = G2MICRO_DATA_DIR;
}

TEST_CASE("nilpotent poset") {
    auto p = nilpotent_poset();
    CHECK(p.dims == std::vector<int>{6, 5, 5, 4, 3, 0});
    CHECK(p.contained(NilpOrbit::O4, NilpOrbit::O51));
    CHECK(p.contained(NilpOrbit::O4, NilpOrbit::O52));
    CHECK(p.contained(NilpOrbit::O0, NilpOrbit::O0));
    CHECK(!p.contained(NilpOrbit::O51, NilpOrbit::O52));
    CHECK(!p.contained(NilpOrbit::O52, NilpOrbit::O51));
    CHECK(!p.contained(NilpOrbit::O3, NilpOrbit::O0));
    CHECK(p.contained(NilpOrbit::O0, NilpOrbit::O6));
    CHECK(p.special ==
          std::vector<bool>{true, true, true, false, false, true});
    CHECK(p.component_group[static_cast<int>(NilpOrbit::O51)] == "S3");
    CHECK(p.component_group[static_cast<int>(NilpOrbit::O52)] == "Z2");
}

TEST_CASE("springer counts") {
    auto c = springer_counts(kData);
    CHECK(c.count == std::array<int, 6>{1, 2, 3, 2, 1, 1});
    int total = 0;
    for (int v : c.count) total += v;
    CHECK(total == 10);
}

TEST_CASE("vertical classification") {
    auto d = pipeline::load_pair({GroupType::G2, GroupType::SL2xSL2}, kData);
    std::set<int> v1, v2;
    for (int orbit = 0; orbit < 10; ++orbit) {
        if (vertical(d.action, d.params, orbit, 1)) v1.insert(orbit);
        if (vertical(d.action, d.params, orbit, 2)) v2.insert(orbit);
    }
    CHECK(v1 == std::set<int>{1, 4, 6, 8, 9});
    CHECK(v2 == std::set<int>{2, 3, 5, 7, 9});
    // vertical and horizontal are complements within the orbit set
    for (int orbit = 0; orbit < 10; ++orbit) {
        CHECK((v1.count(orbit) + (1 - v1.count(orbit))) == 1);
        CHECK(vertical(d.action, d.params, orbit, 2) == (v2.count(orbit) > 0));
    }
}

TEST_CASE("moment images") {
    auto d = pipeline::load_pair({GroupType::G2, GroupType::SL2xSL2}, kData);
    auto counts = springer_counts(kData);
    auto poset = nilpotent_poset();
    auto result = moment_images(default_seeds(), counts, poset, d.orbits, d.action, d.params);
    CHECK(result.solution_count == 1);
    std::map<int, NilpOrbit> want = {
        {0, NilpOrbit::O6},  {1, NilpOrbit::O51}, {2, NilpOrbit::O52}, {3, NilpOrbit::O51},
        {4, NilpOrbit::O52}, {5, NilpOrbit::O52}, {6, NilpOrbit::O4},  {7, NilpOrbit::O4},
        {8, NilpOrbit::O3},  {9, NilpOrbit::O0}};
    CHECK(result.image == want);

    // exactly count(O) orbits map onto each closure
    std::array<int, 6> tally{};
    for (const auto& [orbit, o] : result.image) {
        (void)orbit;
        ++tally[static_cast<int>(o)];
    }
    CHECK(tally == counts.count);

    // monotone along every solid edge
    for (int orbit = 0; orbit < 10; ++orbit)
        for (int s = 1; s <= 2; ++s) {
            int up = d.orbits.m_action(s, orbit);
            if (up == orbit) continue;
            CHECK(poset.contained(result.image.at(up), result.image.at(orbit)));
        }

    // dropping the three-dimensional seed loses uniqueness
    auto seeds = default_seeds();
    seeds.erase(8);
    auto loose = moment_images(seeds, counts, poset, d.orbits, d.action, d.params);
    CHECK(loose.solution_count >= 2);
}
