#include "doctest.h"

#include <random>
#include <set>

#include "curvata/complex.hpp"
#include "helpers.hpp"

using namespace curvata;
using testutil::uniform_complex;

TEST_CASE("build_complex closures") {
    auto full = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    CHECK(full.vertices().size() == 3);
    CHECK(full.edges().size() == 3);
    CHECK(full.faces_of_dim(2).size() == 1);

    auto hollow = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(hollow.vertices().size() == 3);
    CHECK(hollow.edges().size() == 3);
    CHECK(hollow.faces_of_dim(2).empty());

    auto glued = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"b", "c", "d"}});
    CHECK(glued.vertices().size() == 4);
    CHECK(glued.edges().size() == 5);
    CHECK(glued.faces_of_dim(2).size() == 2);

    CHECK_THROWS_AS(SimplicialComplex::from_maximal({}), Error);
    CHECK_THROWS_AS(make_simplex({"a", "a", "b"}), Error);
}

TEST_CASE("downward closure holds after construction") {
    auto x = SimplicialComplex::from_maximal({{"a", "b", "c", "d"}, {"d", "e", "f"}});
    for (const auto& s : x.simplices()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + i);
            if (!face.empty()) CHECK(x.contains(face));
        }
    }
}

TEST_CASE("link") {
    auto full = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    auto lk = full.link({"a"});
    CHECK(lk == SimplicialComplex::from_maximal({{"b", "c"}}));

    auto hollow = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto lkh = hollow.link({"a"});
    CHECK(lkh == SimplicialComplex::from_maximal({{"b"}, {"c"}}));

    auto glued = SimplicialComplex::from_maximal({{"a", "b", "c"}, {"b", "c", "d"}});
    auto lkb = glued.link({"b"});
    CHECK(lkb == SimplicialComplex::from_maximal({{"a", "c"}, {"c", "d"}}));

    CHECK_THROWS_AS(full.link({"z"}), Error);
}

TEST_CASE("link involution") {
    auto x = SimplicialComplex::from_maximal(
        {{"a", "b", "c"}, {"b", "c", "d"}, {"d", "e"}, {"a", "e"}});
    for (const auto& u : x.vertices())
        for (const auto& v : x.vertices()) {
            if (u == v) continue;
            CHECK(x.link({u}).has_vertex(v) == x.link({v}).has_vertex(u));
        }
}

TEST_CASE("is_flag") {
    auto hollow = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto r = hollow.is_flag();
    CHECK_FALSE(r.flag);
    CHECK(r.witness == Simplex{"a", "b", "c"});

    CHECK(SimplicialComplex::from_maximal({{"a", "b", "c"}}).is_flag().flag);
    CHECK(SimplicialComplex::from_maximal(testutil::octahedron_faces()).is_flag().flag);
}

TEST_CASE("euler characteristic") {
    CHECK(SimplicialComplex::from_maximal({{"a", "b", "c"}}).euler_characteristic() == 1);
    CHECK(SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}})
              .euler_characteristic() == 0);
    CHECK(SimplicialComplex::from_maximal(testutil::octahedron_faces())
              .euler_characteristic() == 2);
}

TEST_CASE("enumerate_full_cycles basics") {
    auto hollow = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto cs = enumerate_full_cycles(hollow, 3);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices.size() == 3);

    auto full = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    CHECK(enumerate_full_cycles(full, 3).empty());

    auto c5 = SimplicialComplex::from_maximal(
        testutil::cycle_graph({"a", "b", "c", "d", "e"}));
    auto cs5 = enumerate_full_cycles(c5, 5);
    REQUIRE(cs5.size() == 1);
    CHECK(cs5[0].vertices.size() == 5);
}

TEST_CASE("full cycle enumeration matches brute force") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        // random graph plus random triangles, <= 9 vertices
        int n = 4 + static_cast<int>(rng() % 6);
        std::vector<Simplex> maximal;
        for (int i = 0; i < n; ++i)
            maximal.push_back({"v" + std::to_string(i)});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0)
                    maximal.push_back({"v" + std::to_string(i), "v" + std::to_string(j)});
        auto x = SimplicialComplex::from_maximal(maximal);
        // promote some triangles of the 1-skeleton to 2-simplices
        auto adj = x.adjacency();
        auto vs = x.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                for (std::size_t k = j + 1; k < vs.size(); ++k)
                    if (x.has_edge(vs[i], vs[j]) && x.has_edge(vs[j], vs[k]) &&
                        x.has_edge(vs[i], vs[k]) && rng() % 2 == 0)
                        x.insert_closed(make_simplex({vs[i], vs[j], vs[k]}));

        int bound = n; // all simple cycles fit in n edges
        auto got = enumerate_full_cycles(x, bound);
        std::set<std::vector<Vertex>> got_set;
        for (const auto& c : got) got_set.insert(canonical_cycle(c.vertices));
        CHECK(got_set.size() == got.size());
        CHECK(got_set == testutil::brute_full_cycles(x, bound));
    }
}

TEST_CASE("is_large") {
    auto sq = uniform_complex(testutil::cycle_graph({"a", "b", "c", "d"}), Rational(1, 2));
    CHECK(is_large(sq).large);

    auto c5 = uniform_complex(testutil::cycle_graph({"a", "b", "c", "d", "e"}),
                              Rational(1, 3));
    auto r5 = is_large(c5);
    CHECK_FALSE(r5.large);
    CHECK(r5.kind == LargeResult::Witness::ShortFullCycle);
    CHECK(r5.cycle.vertices.size() == 5);

    auto hollow = uniform_complex({{"a", "b"}, {"b", "c"}, {"c", "a"}}, Rational(1, 3));
    CHECK_FALSE(is_large(hollow).large);
}

TEST_CASE("is_large zero-length edges need a user bound") {
    SimplicialComplex cx = SimplicialComplex::from_maximal(
        testutil::cycle_graph({"a", "b", "c", "d"}));
    std::map<EdgeKey, Rational> ls;
    for (const auto& e : cx.edges()) ls.emplace(e, Rational(0));
    LengthComplex x(cx, ls);
    CHECK_THROWS_AS(is_large(x), Error);
    auto r = is_large(x, 4);
    CHECK_FALSE(r.large); // 4-cycle of total length 0
}

TEST_CASE("is_locally_large") {
    auto octa = testutil::octahedron_faces();
    CHECK(is_locally_large(uniform_complex(octa, Rational(1, 2))).locally_large);
    auto r = is_locally_large(uniform_complex(octa, Rational(1, 3)));
    CHECK_FALSE(r.locally_large);
    CHECK_FALSE(r.witness.empty());
    CHECK(r.detail.kind == LargeResult::Witness::ShortFullCycle);

    CHECK(is_locally_large(uniform_complex({{"a", "b", "c"}}, Rational(1, 3)))
              .locally_large);
}

TEST_CASE("large implies locally large on generated complexes") {
    std::mt19937 rng(77);
    int seen_large = 0;
    for (int trial = 0; trial < 80; ++trial) {
        auto faces = testutil::random_disk(rng, 1 + static_cast<int>(rng() % 5));
        auto cx = SimplicialComplex::from_maximal(faces);
        if (!cx.is_flag().flag) continue;
        auto x = LengthComplex(cx, testutil::random_valid_lengths(cx, rng));
        auto big = is_large(x);
        if (!big.large) continue;
        ++seen_large;
        CHECK(is_locally_large(x).locally_large);
    }
    CHECK(seen_large > 5);
}

TEST_CASE("geodesic_distance") {
    auto tri = uniform_complex({{"a", "b", "c"}}, Rational(1, 4));
    auto same = geodesic_distance(tri, "a", "a");
    CHECK(same.distance == Rational(0));
    CHECK(same.path.vertices.empty());

    auto one = geodesic_distance(tri, "a", "b");
    CHECK(one.distance == Rational(1, 4));
    CHECK(one.path.vertices == std::vector<Vertex>{"a", "b"});

    // square a-b-c-d with sides 1/2,1/2 on one route and 1/3,1/3 on the other
    SimplicialComplex sq = SimplicialComplex::from_maximal(
        testutil::cycle_graph({"a", "b", "c", "d"}));
    std::map<EdgeKey, Rational> ls;
    ls[make_edge("a", "b")] = Rational(1, 2);
    ls[make_edge("b", "c")] = Rational(1, 2);
    ls[make_edge("c", "d")] = Rational(1, 3);
    ls[make_edge("d", "a")] = Rational(1, 3);
    LengthComplex x(sq, ls);
    auto g = geodesic_distance(x, "a", "c");
    CHECK(g.distance == Rational(2, 3));
    CHECK(g.path.vertices == std::vector<Vertex>{"a", "d", "c"});

    auto disc = SimplicialComplex::from_maximal({{"a", "b"}, {"c", "d"}});
    std::map<EdgeKey, Rational> ls2{{make_edge("a", "b"), Rational(1, 3)},
                                    {make_edge("c", "d"), Rational(1, 3)}};
    CHECK_THROWS_AS(geodesic_distance(LengthComplex(disc, ls2), "a", "c"), Error);
}

TEST_CASE("geodesic distance is a metric on random complexes") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto faces = testutil::random_disk(rng, 4);
        auto cx = SimplicialComplex::from_maximal(faces);
        auto x = LengthComplex(cx, testutil::random_valid_lengths(cx, rng));
        auto vs = cx.vertices();
        std::map<std::pair<Vertex, Vertex>, Rational> d;
        for (const auto& u : vs)
            for (const auto& v : vs) d[{u, v}] = geodesic_distance(x, u, v).distance;
        for (const auto& u : vs)
            for (const auto& v : vs) {
                CHECK(d[{u, v}] == d[{v, u}]);
                for (const auto& w : vs) CHECK(d[{u, v}] <= d[{u, w}] + d[{w, v}]);
            }
    }
}

TEST_CASE("canonical_cycle identifies rotations and reflections") {
    std::vector<Vertex> c{"b", "c", "d", "a"};
    auto canon = canonical_cycle(c);
    CHECK(canon == canonical_cycle({"a", "b", "c", "d"}));
    CHECK(canon == canonical_cycle({"d", "c", "b", "a"}));
    CHECK(canon.front() == "a");
}

TEST_CASE("length complex constructor requires all lengths") {
    SimplicialComplex cx = SimplicialComplex::from_maximal({{"a", "b", "c"}});
    std::map<EdgeKey, Rational> partial{{make_edge("a", "b"), Rational(1, 3)}};
    CHECK_THROWS_AS(LengthComplex(cx, partial), Error);
}
