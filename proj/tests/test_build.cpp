#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trinity/build.hpp"
#include "trinity/states.hpp"

using namespace trinity;

TEST_CASE("gluing round trip on the fixtures") {
    for (Trinity t : {trivial_trinity(), smallest_toric()}) {
        auto phi = gluing_of(t);
        Trinity back = trinity_from_gluing(phi, std::nullopt);
        if (t.genus() == 0) {
            back.outer = back.whites().front();
            back.finalize();
        }
        CHECK(back.n() == t.n());
        CHECK(back.genus() == t.genus());
        CHECK(canonical_form(back).encoding == canonical_form(t).encoding);
    }
}

TEST_CASE("connected sum with F is trivial") {
    Trinity t3 = smallest_toric();
    Trinity f = trivial_trinity();
    for (TriangleId b : t3.blacks()) {
        Trinity sum = connected_sum(t3, b, f);
        CHECK(validate(sum).empty());
        CHECK(sum.n() == t3.n());
        CHECK(sum.genus() == 1);
        CHECK(canonical_digest(sum) == canonical_digest(t3));
    }
}

TEST_CASE("connected sum arithmetic and decomposition round trip") {
    Trinity t3 = smallest_toric();
    PlanarSampler sampler(0x5eed);
    Trinity p = sampler.sample(3);
    REQUIRE(validate(p).empty());
    REQUIRE(p.genus() == 0);

    TriangleId b = t3.blacks()[1];
    Trinity sum = connected_sum(t3, b, p);
    CHECK(validate(sum).empty());
    CHECK(sum.genus() == 1);
    CHECK(sum.n() == t3.n() + p.n() - 1);

    SECTION("state counts multiply") {
        CHECK(enumerate_states(sum).size() == enumerate_states(t3).size() * enumerate_states(p).size());
    }

    SECTION("decompose finds the core and the summand") {
        SumTree tree = decompose(sum);
        REQUIRE(tree.nodes.size() >= 2);
        Trinity back = reglue(tree);
        CHECK(canonical_digest(back) == canonical_digest(sum));
    }

    SECTION("irreducibility checks") {
        CHECK(is_irreducible(t3));
        CHECK(decompose(t3).trivial());
        CHECK_FALSE(is_irreducible(sum));
    }
}

TEST_CASE("nested double sum yields a two-level tree") {
    Trinity t3 = smallest_toric();
    PlanarSampler sampler(0xabcdef);
    Trinity p1 = sampler.sample(2);
    Trinity p2 = sampler.sample(2);
    REQUIRE(is_irreducible(p1));

    SumProvenance prov1;
    Trinity once = connected_sum(t3, t3.blacks()[0], p1, &prov1);
    // Glue the second summand into a black triangle that came from p1.
    TriangleId inner = -1;
    for (TriangleId tr : p1.blacks())
        if (prov1.part_tri[tr] >= 0) inner = prov1.part_tri[tr];
    REQUIRE(inner >= 0);
    REQUIRE(once.triangle_color(inner) == TriangleColor::Black);
    Trinity twice = connected_sum(once, inner, p2);
    CHECK(validate(twice).empty());
    CHECK(twice.n() == t3.n() + p1.n() + p2.n() - 2);

    SumTree tree = decompose(twice);
    REQUIRE(tree.nodes.size() == 3);
    bool nested = false;
    for (std::size_t m = 1; m < tree.nodes.size(); ++m)
        nested = nested || !tree.nodes[m].children.empty();
    CHECK(nested);
    CHECK(canonical_digest(reglue(tree)) == canonical_digest(twice));
}

TEST_CASE("toric census at tiny sizes") {
    auto census2 = enumerate_toric_trinities(2);
    CHECK(census2.empty());  // the torus needs n >= 3

    auto census3 = enumerate_toric_trinities(3);
    REQUIRE_FALSE(census3.empty());
    std::string t3_digest = canonical_digest(smallest_toric());
    bool found = false;
    for (const auto& t : census3) {
        CHECK(validate(t).empty());
        CHECK(t.genus() == 1);
        CHECK(t.n() <= 3);
        if (canonical_digest(t) == t3_digest) found = true;
    }
    CHECK(found);

    SECTION("no duplicate canonical forms") {
        std::set<std::string> digests;
        for (const auto& t : census3) CHECK(digests.insert(canonical_digest(t)).second);
    }
    SECTION("agrees with the brute-force generator") {
        auto brute = enumerate_toric_trinities_bruteforce(3);
        REQUIRE(brute.size() == census3.size());
        for (std::size_t i = 0; i < brute.size(); ++i)
            CHECK(canonical_digest(brute[i]) == canonical_digest(census3[i]));
    }
    SECTION("sharding partitions the census") {
        std::set<std::string> sharded;
        for (int s = 0; s < 3; ++s)
            for (const auto& t : enumerate_toric_trinities(3, s, 3)) sharded.insert(canonical_digest(t));
        std::set<std::string> whole;
        for (const auto& t : census3) whole.insert(canonical_digest(t));
        CHECK(sharded == whole);
    }
    SECTION("worker fan-out is deterministic") {
        auto threaded = enumerate_toric_trinities(3, 0, 1, 4);
        REQUIRE(threaded.size() == census3.size());
        for (std::size_t i = 0; i < threaded.size(); ++i)
            CHECK(canonical_digest(threaded[i]) == canonical_digest(census3[i]));
    }
}

TEST_CASE("planar sampler emits valid spheres") {
    PlanarSampler sampler(7);
    for (int n : {1, 2, 3, 4, 5}) {
        Trinity t = sampler.sample(n);
        CHECK(validate(t).empty());
        CHECK(t.genus() == 0);
        CHECK(t.n() == n);
        CHECK(t.outer.has_value());
    }
}
