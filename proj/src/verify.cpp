#include "bml/verify.hpp"

#include <array>

#include "bml/digest.hpp"
#include "bml/metrics.hpp"
#include "bml/seeding.hpp"

namespace bml {

std::optional<GridMismatch> first_mismatch(const std::vector<NamedGrid>& grids) {
    for (std::size_t i = 1; i < grids.size(); ++i) {
        if (const auto diff = first_interior_mismatch(grids[0].grid, grids[i].grid))
            return GridMismatch{grids[0].name, grids[i].name, diff->first, diff->second};
    }
    return std::nullopt;
}

VerifyReport verify_backends(const SimConfig& cfg) {
    validate(cfg);
    const Grid initial = init_grid({cfg.n, cfg.rho, cfg.seed});

    constexpr std::array<Backend, 4> kBackends = {Backend::ScalarNaive, Backend::ScalarHalo,
                                                  Backend::ParallelRows, Backend::Lanes};
    VerifyReport report;
    std::vector<NamedGrid> finals;
    for (Backend b : kBackends) {
        SimConfig one = cfg;
        one.backend = b;
        one.threads = b == Backend::ParallelRows ? cfg.threads : 1;
        GridPair pair = make_grid_pair(b, initial);
        try {
            // observer attached so run() asserts conservation every step
            run(one, pair, [](const StepMetrics&) {});
        } catch (const std::logic_error&) {
            report.conserved = false;
        }
        finals.push_back(NamedGrid{std::string(backend_name(b)), pair.cur});
        report.digests.push_back(BackendDigest{b, grid_digest(pair.cur)});
    }
    report.mismatch = first_mismatch(finals);
    return report;
}

}  // namespace bml
