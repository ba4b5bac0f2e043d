#include "bml/verify.hpp"

#include "bml/digest.hpp"
#include "doctest.h"

using namespace bml;

TEST_CASE("verify_backends: four identical digests on a non-lane-aligned grid") {
    SimConfig cfg;
    cfg.n = 33;
    cfg.rho = 0.5;
    cfg.steps = 20;
    cfg.seed = 7;
    cfg.threads = 2;
    cfg.backend = Backend::ParallelRows;

    const VerifyReport report = verify_backends(cfg);
    CHECK(report.ok());
    CHECK(report.conserved);
    REQUIRE(report.digests.size() == 4);
    for (const auto& d : report.digests) CHECK(d.digest == report.digests[0].digest);
}

TEST_CASE("first_mismatch detects an injected fault") {
    // stand-in for a buggy backend that skipped one cell
    const Grid good = parse_grid(">.v\n.v.\n>..");
    Grid faulty = good;
    faulty.interior(1, 2) = Cell::LR;

    const auto diff =
        first_mismatch({NamedGrid{"naive", good}, NamedGrid{"faulty", faulty}});
    REQUIRE(diff.has_value());
    CHECK(diff->a == "naive");
    CHECK(diff->b == "faulty");
    CHECK(diff->row == 1);
    CHECK(diff->col == 2);

    CHECK_FALSE(first_mismatch({NamedGrid{"a", good}, NamedGrid{"b", good}}).has_value());
}
