#include <doctest.h>

#include "fhkit/braid.hpp"
#include "fhkit/errors.hpp"

using namespace fh;

TEST_CASE("full twists") {
    CHECK(full_twist(2, 2).letters == std::vector<int>{1, 1});
    CHECK(full_twist(3, 3).letters == std::vector<int>{1, 2, 1, 2, 1, 2});
    CHECK(full_twist(1, 4).letters.empty());
    for (int n = 1; n <= 6; ++n) {
        ClosureData c = closure_data(full_twist(n, n));
        for (int i = 0; i < n; ++i) CHECK(c.permutation[i] == i);
        CHECK(c.writhe == n * (n - 1));
        CHECK(c.components == n);
    }
}

TEST_CASE("Jucys-Murphy braids are pure") {
    CHECK(jucys_murphy(2, 3).letters == std::vector<int>{1, 1});
    CHECK(jucys_murphy(3, 3).letters == std::vector<int>{2, 1, 1, 2});
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            ClosureData c = closure_data(jucys_murphy(k, n));
            for (int i = 0; i < n; ++i) CHECK(c.permutation[i] == i);
        }
}

TEST_CASE("closures") {
    ClosureData a = closure_data(BraidWord(2, {1}));
    CHECK(a.permutation == std::vector<int>{1, 0});
    CHECK(a.components == 1);
    CHECK(a.writhe == 1);
    CHECK(closure_data(BraidWord(3, {})).components == 3);
    ClosureData t = closure_data(torus_braid(3, 4));
    CHECK(t.components == 1);
    CHECK(t.writhe == 8);
    CHECK(closure_data(torus_braid(3, 3)).components == 3);
    CHECK(closure_data(torus_braid(2, 4)).components == 2);
    CHECK(closure_data(BraidWord(3, {1, -2, 1, -2})).writhe == 0);
}

TEST_CASE("word operations") {
    BraidWord w(3, {1, -2});
    CHECK(w.inverse().letters == std::vector<int>{2, -1});
    CHECK((w * w.inverse()).writhe() == 0);
    CHECK(w.pow(3).letters.size() == 6);
    CHECK(w.on_strands(5).strands == 5);
    CHECK(parse_braid("s1 -s2", 3) == w);
    CHECK(parse_braid(to_string(w), 3) == w);
    CHECK(parse_braid("", 2).letters.empty());
    CHECK_THROWS_AS(parse_braid("s3", 3), Error);
    CHECK_THROWS_AS(parse_braid("x1", 3), Error);
    CHECK_THROWS_AS(BraidWord(2, {1}) * BraidWord(3, {1}), Error);
}
