#include <doctest.h>

#include <set>

#include "g2micro/pipeline.hpp"
#include "g2micro/translation.hpp"

using namespace g2micro;
using namespace g2micro::translation;

namespace {
const std::string kData = G2MICRO_DATA_DIR;
}

TEST_CASE("subregular block structure") {
    auto g2 = pipeline::solve_integral(kData);
    auto block = subregular_block(g2.pair.orbits, g2.pair.params);

    CHECK(block.nq() == 5);
    CHECK(block.q_dims == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(block.fiber[block.psi_b] == std::vector<int>{1});
    CHECK(block.fiber[block.psi_a] == std::vector<int>{0, 2, 4});
    CHECK(block.fiber[2] == std::vector<int>{3, 6});
    CHECK(block.fiber[3] == std::vector<int>{5, 8});
    CHECK(block.fiber[4] == std::vector<int>{7, 9});
    CHECK(block.f_star_orbit == std::vector<int>{1, 4, 6, 8, 9});
    CHECK(block.pushforward == std::vector<int>{1, 4, 6, 8, 9, 10});
    CHECK(block.gamma_orbit == std::vector<int>{0, 1, 2, 3, 4, 4});
    CHECK(block.q_covers ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(block.fiber_provenance ==
          std::vector<std::string>{"paper", "paper", "derived", "derived", "derived"});

    // the fibers partition the ten orbits with a unique open member each
    std::set<int> seen;
    for (int q = 0; q < block.nq(); ++q) {
        int open = 0;
        for (int s : block.fiber[q]) {
            seen.insert(s);
            if (g2.pair.orbits.orbits[s].dim == block.q_dims[q] + 1) ++open;
        }
        CHECK(open == 1);
    }
    CHECK(seen.size() == 10);
}

TEST_CASE("singular cycles") {
    auto g2 = pipeline::solve_integral(kData);
    auto block = subregular_block(g2.pair.orbits, g2.pair.params);
    auto qcc = singular_cc(block, g2.solved.cc);

    auto col = [&](int g) {
        std::map<int, long long> m;
        for (int q = 0; q < qcc.norbits; ++q)
            if (qcc.chi[q][g] != 0) m[q] = qcc.chi[q][g];
        return m;
    };
    CHECK(col(0) == std::map<int, long long>{{0, 1}});
    CHECK(col(1) == std::map<int, long long>{{1, 1}});
    CHECK(col(2) == std::map<int, long long>{{0, 2}, {2, 1}});
    CHECK(col(3) == std::map<int, long long>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(col(4) == std::map<int, long long>{{4, 1}});
    CHECK(col(5) == std::map<int, long long>{{0, 1}, {2, 1}, {3, 1}, {4, 1}});

    // multiplicities transport unchanged through the pushforward
    for (int g = 0; g < block.ngamma(); ++g)
        for (int q = 0; q < block.nq(); ++q)
            CHECK(qcc.chi[q][g] ==
                  g2.solved.cc.chi[block.f_star_orbit[q]][block.pushforward[g]]);
}

TEST_CASE("singular packets") {
    auto g2 = pipeline::solve_integral(kData);
    auto block = subregular_block(g2.pair.orbits, g2.pair.params);
    auto qcc = singular_cc(block, g2.solved.cc);

    auto pa = singular_packet(block, qcc, block.psi_a);
    CHECK(pa.members == std::vector<int>{1, 3});
    CHECK(pa.eta == std::map<int, long long>{{1, 1}, {3, 1}});

    auto pb = singular_packet(block, qcc, block.psi_b);
    CHECK(pb.members == std::vector<int>{0, 2, 5});
    CHECK(pb.eta == std::map<int, long long>{{0, 1}, {2, 2}, {5, 1}});

    auto p4 = singular_packet(block, qcc, 4);
    CHECK(p4.members == std::vector<int>{4, 5});

    // translation kills exactly the seven parameters outside the image
    std::set<int> image(block.pushforward.begin(), block.pushforward.end());
    CHECK(image == std::set<int>{1, 4, 6, 8, 9, 10});
    CHECK(13 - static_cast<int>(image.size()) == 7);
}
