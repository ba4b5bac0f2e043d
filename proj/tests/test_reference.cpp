// The brute-force reference must itself reproduce the hand-derived values
// before it is allowed to arbitrate anything.
#include "doctest.h"
#include "reference/reference_bml.hpp"

using bmlref::Rows;

TEST_CASE("reference: horizontal phase on single-row 4-torus") {
    CHECK(bmlref::horizontal_phase({">.>.", "....", "....", "...."})[0] == ".>.>");
    CHECK(bmlref::horizontal_phase({">>..", "....", "....", "...."})[0] == ">.>.");
    CHECK(bmlref::horizontal_phase({">>>>", "....", "....", "...."})[0] == ">>>>");
    CHECK(bmlref::horizontal_phase({">v..", "....", "....", "...."})[0] == ">v..");
}

TEST_CASE("reference: vertical phase mirrors the horizontal one") {
    // column [v, .] wraps: the vehicle advances downward
    Rows g = {"v.", ".."};
    CHECK(bmlref::vertical_phase(g) == Rows{"..", "v."});
}

TEST_CASE("reference: full steps on 2x2 grids") {
    CHECK(bmlref::step({">.", ".v"}) == Rows{".>", ".v"});
    CHECK(bmlref::step({"..", ".."}) == Rows{"..", ".."});

    // period-2 orbit: a lone LR vehicle returns home after two steps
    const Rows start = {">.", ".."};
    const Rows one = bmlref::step(start);
    CHECK(one == Rows{".>", ".."});
    CHECK(bmlref::step(one) == start);
}

TEST_CASE("reference: rejects malformed grids") {
    CHECK_THROWS(bmlref::step({}));
    CHECK_THROWS(bmlref::step({">.", ">"}));
}
