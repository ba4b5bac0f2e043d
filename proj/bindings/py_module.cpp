#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "bml/digest.hpp"
#include "bml/engine.hpp"
#include "bml/metrics.hpp"
#include "bml/seeding.hpp"
#include "bml/snapshot.hpp"
#include "bml/verify.hpp"

namespace py = pybind11;

namespace {

bml::Grid simulate_steps(bml::Grid grid, long steps, bml::Backend backend, int threads) {
    bml::GridPair pair = bml::make_grid_pair(backend, grid);
    for (long s = 0; s < steps; ++s) bml::step(backend, pair, threads);
    return pair.cur;
}

std::pair<bml::Grid, std::vector<bml::StepMetrics>> simulate_with_metrics(
    bml::Grid grid, long steps, bml::Backend backend, int threads) {
    bml::SimConfig cfg;
    cfg.n = grid.n();
    cfg.steps = steps;
    cfg.backend = backend;
    cfg.threads = threads;
    bml::GridPair pair = bml::make_grid_pair(backend, grid);
    std::vector<bml::StepMetrics> metrics;
    bml::run(cfg, pair, [&](const bml::StepMetrics& m) { metrics.push_back(m); });
    return {pair.cur, std::move(metrics)};
}

}  // namespace

PYBIND11_MODULE(_bml, m) {
    m.doc() = "Biham-Middleton-Levine traffic cellular automaton (multi-backend core)";

    py::enum_<bml::Cell>(m, "Cell")
        .value("empty", bml::Cell::Empty)
        .value("lr", bml::Cell::LR)
        .value("tb", bml::Cell::TB);

    py::enum_<bml::Backend>(m, "Backend")
        .value("naive", bml::Backend::ScalarNaive)
        .value("halo", bml::Backend::ScalarHalo)
        .value("parallel", bml::Backend::ParallelRows)
        .value("lanes", bml::Backend::Lanes);

    py::enum_<bml::Phase>(m, "Phase")
        .value("horizontal", bml::Phase::Horizontal)
        .value("vertical", bml::Phase::Vertical);

    py::enum_<bml::Regime>(m, "Regime")
        .value("FreeFlow", bml::Regime::FreeFlow)
        .value("Jammed", bml::Regime::Jammed)
        .value("Intermediate", bml::Regime::Intermediate);

    py::class_<bml::Grid>(m, "Grid")
        .def_static("from_text", &bml::parse_grid, py::arg("text"),
                    "Parse n lines of n characters from {'.', '>', 'v'}.")
        .def_property_readonly("n", &bml::Grid::n)
        .def("to_text", &bml::render_grid)
        .def("cell",
             [](const bml::Grid& g, int r, int c) {
                 if (r < 0 || r >= g.n() || c < 0 || c >= g.n())
                     throw py::index_error("cell index out of range");
                 return g.interior(r, c);
             },
             py::arg("row"), py::arg("col"))
        .def("set_cell",
             [](bml::Grid& g, int r, int c, bml::Cell cell) {
                 if (r < 0 || r >= g.n() || c < 0 || c >= g.n())
                     throw py::index_error("cell index out of range");
                 g.interior(r, c) = cell;
             },
             py::arg("row"), py::arg("col"), py::arg("cell"))
        .def("digest", &bml::grid_digest)
        .def("__eq__", [](const bml::Grid& a, const bml::Grid& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const bml::Grid& g) {
            return "<bml.Grid n=" + std::to_string(g.n()) + ">";
        });

    py::class_<bml::StepMetrics>(m, "StepMetrics")
        .def_readonly("step", &bml::StepMetrics::step)
        .def_readonly("lr_count", &bml::StepMetrics::lr_count)
        .def_readonly("tb_count", &bml::StepMetrics::tb_count)
        .def_readonly("lr_moved", &bml::StepMetrics::lr_moved)
        .def_readonly("tb_moved", &bml::StepMetrics::tb_moved)
        .def_readonly("mobility", &bml::StepMetrics::mobility)
        .def("__repr__", [](const bml::StepMetrics& s) {
            return "<bml.StepMetrics step=" + std::to_string(s.step) +
                   " mobility=" + std::to_string(s.mobility) + ">";
        });

    py::class_<bml::VerifyReport>(m, "VerifyReport")
        .def_property_readonly("ok", &bml::VerifyReport::ok)
        .def_readonly("conserved", &bml::VerifyReport::conserved)
        .def_property_readonly("digests", [](const bml::VerifyReport& r) {
            py::dict out;
            for (const auto& d : r.digests)
                out[py::str(std::string(bml::backend_name(d.backend)))] = d.digest;
            return out;
        });

    m.def("init_grid",
          [](int n, double rho, std::uint64_t seed) { return bml::init_grid({n, rho, seed}); },
          py::arg("n"), py::arg("rho"), py::arg("seed"),
          "Random placement of floor(rho*n^2/2) vehicles of each species.");

    m.def("step", &simulate_steps, py::arg("grid"), py::arg("steps") = 1,
          py::arg("backend") = bml::Backend::ScalarHalo, py::arg("threads") = 1,
          "Advance `steps` full steps and return the resulting grid.");

    m.def("simulate", &simulate_with_metrics, py::arg("grid"), py::arg("steps"),
          py::arg("backend") = bml::Backend::ScalarHalo, py::arg("threads") = 1,
          "Advance and record per-step metrics; returns (grid, [StepMetrics]).");

    m.def("count_vehicles",
          [](const bml::Grid& g) {
              const auto counts = bml::count_vehicles(g);
              return py::make_tuple(counts.lr, counts.tb);
          },
          py::arg("grid"), "Exact (lr, tb) interior counts.");

    m.def("classify",
          [](const std::vector<double>& window) {
              return bml::classify(window);
          },
          py::arg("mobility_window"));

    m.def("write_ppm", &bml::write_ppm, py::arg("grid"), py::arg("path"));
    m.def("encode_ppm", [](const bml::Grid& g) {
        const auto bytes = bml::encode_ppm(g);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    });

    m.def("verify_backends",
          [](int n, double rho, long steps, std::uint64_t seed, int threads) {
              bml::SimConfig cfg;
              cfg.n = n;
              cfg.rho = rho;
              cfg.steps = steps;
              cfg.seed = seed;
              cfg.threads = threads;
              cfg.backend = bml::Backend::ParallelRows;
              return bml::verify_backends(cfg);
          },
          py::arg("n"), py::arg("rho"), py::arg("steps"), py::arg("seed") = 1,
          py::arg("threads") = 1,
          "Run all four backends from one initial grid and compare bit-exactly.");

    m.def("lane_width", &bml::lane_width);
    m.attr("__version__") = "0.1.0";
}
