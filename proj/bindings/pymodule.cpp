#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subsmooth/catalogue.hpp"
#include "subsmooth/determination.hpp"
#include "subsmooth/expr.hpp"
#include "subsmooth/meanvalue.hpp"
#include "subsmooth/semismooth.hpp"

namespace py = pybind11;
using namespace subsmooth;

namespace {

double ext_to_py(const ExtReal& v) { return v.as_double(); }

Vec vec_from(const std::vector<double>& coords) { return Vec(coords); }

ScalarFn fn_from_callable(py::function f, int dim, bool convex, bool lipschitz,
                          std::optional<double> lipschitz_const) {
  FnMeta meta;
  meta.convex = convex;
  meta.locally_lipschitz = lipschitz;
  meta.lipschitz_const = lipschitz_const;
  return make_fn(
      [f](const Vec& x) -> ExtReal {
        py::gil_scoped_acquire gil;
        double v = f(x.coords()).cast<double>();
        return ExtReal(v);
      },
      dim, meta);
}

ScalarFn resolve_fn(const std::string& text, int dim) {
  if (catalogue::has(text)) return catalogue::get(text).fn;
  return parse_expression(text, dim);
}

SubdiffOracle oracle_of(const std::string& name) {
  return SubdiffOracle{catalogue::get(name).exact_subdiff, OracleProvenance::exact_catalogue};
}

py::dict verdict_to_py(const Verdict& v) {
  py::dict d;
  d["outcome"] = std::string(to_string(v.outcome));
  d["margins"] = v.margins;
  d["notes"] = v.notes;
  return d;
}

py::dict tail_to_py(const TailEstimate& t) {
  py::dict d;
  d["liminf_est"] = ext_to_py(t.liminf_est);
  d["limsup_est"] = ext_to_py(t.limsup_est);
  d["divergent"] = std::string(to_string(t.divergent));
  d["stable"] = t.stable;
  return d;
}

}  // namespace

PYBIND11_MODULE(_subsmooth, m) {
  m.doc() = "numerical nonsmooth analysis: subderivatives, subdifferentials, "
            "semismoothness detectors and determination experiments";

  py::class_<GridConfig>(m, "GridConfig")
      .def(py::init<>())
      .def_readwrite("t0", &GridConfig::t0)
      .def_readwrite("rho", &GridConfig::rho)
      .def_readwrite("K", &GridConfig::K)
      .def_readwrite("window", &GridConfig::window)
      .def_readwrite("div_threshold", &GridConfig::div_threshold)
      .def_readwrite("tol", &GridConfig::tol)
      .def_readwrite("seed", &GridConfig::seed);

  py::class_<DirectionalSamplingConfig>(m, "SamplingConfig")
      .def(py::init<>())
      .def_readwrite("base", &DirectionalSamplingConfig::base)
      .def_readwrite("n_dirs", &DirectionalSamplingConfig::n_dirs)
      .def_readwrite("delta0", &DirectionalSamplingConfig::delta0)
      .def_readwrite("delta_rho", &DirectionalSamplingConfig::delta_rho)
      .def_readwrite("value_filter", &DirectionalSamplingConfig::value_filter);

  py::class_<ScalarFn>(m, "ScalarFn")
      .def_readonly("dim", &ScalarFn::dim)
      .def("__call__",
           [](const ScalarFn& f, const std::vector<double>& x) { return ext_to_py(f(vec_from(x))); });

  m.def("function", &fn_from_callable, py::arg("f"), py::arg("dim") = 1,
        py::arg("convex") = false, py::arg("lipschitz") = false,
        py::arg("lipschitz_const") = std::nullopt,
        "wrap a python callable taking a coordinate list");
  m.def("expression", [](const std::string& text, int dim) { return parse_expression(text, dim); },
        py::arg("text"), py::arg("dim") = 1);
  m.def("catalogue_names", &catalogue::names);
  m.def("catalogue_fn", [](const std::string& name) { return catalogue::get(name).fn; });

  m.def("geometric_grid", &geometric_grid);

  auto with_fn = [](const std::string& text, int dim) { return resolve_fn(text, dim); };

  m.def(
      "radial_lower",
      [with_fn](const std::string& fn, std::vector<double> x, std::vector<double> u,
                const GridConfig& cfg) {
        Vec xv = vec_from(x);
        return tail_to_py(radial_lower(with_fn(fn, xv.dim()), xv, vec_from(u), cfg));
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("cfg") = GridConfig{});
  m.def(
      "radial_upper",
      [with_fn](const std::string& fn, std::vector<double> x, std::vector<double> u,
                const GridConfig& cfg) {
        Vec xv = vec_from(x);
        return tail_to_py(radial_upper(with_fn(fn, xv.dim()), xv, vec_from(u), cfg));
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("cfg") = GridConfig{});
  m.def(
      "subderivative",
      [with_fn](const std::string& fn, std::vector<double> x, std::vector<double> u,
                const std::string& kind, const DirectionalSamplingConfig& cfg) {
        Vec xv = vec_from(x), uv = vec_from(u);
        ScalarFn f = with_fn(fn, xv.dim());
        TailEstimate est;
        double value;
        if (kind == "r") {
          est = radial_lower(f, xv, uv, cfg.base);
          value = est.liminf_est.as_double();
        } else if (kind == "r+") {
          est = radial_upper(f, xv, uv, cfg.base);
          value = est.limsup_est.as_double();
        } else if (kind == "0") {
          est = clarke(f, xv, uv, cfg);
          value = est.limsup_est.as_double();
        } else if (kind == "d") {
          est = directional(f, xv, uv, cfg);
          value = est.liminf_est.as_double();
        } else if (kind == "up") {
          est = clarke_rockafellar(f, xv, uv, cfg);
          value = est.limsup_est.as_double();
        } else {
          throw ParseError("kind must be one of r, r+, 0, d, up");
        }
        py::dict d = tail_to_py(est);
        d["value"] = value;
        return d;
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("kind") = "r",
      py::arg("cfg") = DirectionalSamplingConfig{});
  m.def(
      "lattice_check",
      [with_fn](const std::string& fn, std::vector<double> x, std::vector<double> u,
                const DirectionalSamplingConfig& cfg) {
        Vec xv = vec_from(x);
        return verdict_to_py(lattice_check(with_fn(fn, xv.dim()), xv, vec_from(u), cfg));
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("cfg") = DirectionalSamplingConfig{});

  m.def(
      "support",
      [](const std::string& name, std::vector<double> x, std::vector<double> u) {
        return ext_to_py(support(catalogue::get(name).exact_subdiff(vec_from(x)), vec_from(u)));
      },
      "support function of a catalogue entry's subdifferential");
  m.def(
      "mr_subdiff_1d",
      [with_fn](const std::string& fn, double x, const GridConfig& cfg) {
        SubgradientSet s = mr_subdiff_1d(with_fn(fn, 1), x, cfg);
        py::dict d;
        d["form"] = s.form_name();
        if (s.is_interval()) {
          d["lo"] = ext_to_py(s.as_interval().lo);
          d["hi"] = ext_to_py(s.as_interval().hi);
        }
        return d;
      },
      py::arg("fn"), py::arg("x"), py::arg("cfg") = GridConfig{});
  m.def(
      "density_scan",
      [with_fn](const std::string& fn, std::vector<double> x,
                const DirectionalSamplingConfig& cfg) {
        Vec xv = vec_from(x);
        return verdict_to_py(density_scan(catalogue::get(fn).fn, oracle_of(fn), xv, cfg));
      },
      py::arg("fn"), py::arg("x"), py::arg("cfg") = DirectionalSamplingConfig{});

  m.def(
      "recovered_radial",
      [](const std::string& name, std::vector<double> x, std::vector<double> u,
         const std::string& mode, const DirectionalSamplingConfig& cfg) {
        RecoveryConfig rc;
        rc.sampling = cfg;
        rc.mode = mode == "full" ? RecoveryMode::full : RecoveryMode::directional;
        return ext_to_py(recovered_radial(oracle_of(name), vec_from(x), vec_from(u), rc));
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("mode") = "directional",
      py::arg("cfg") = DirectionalSamplingConfig{});
  m.def(
      "classify",
      [](const std::string& name, std::vector<double> x, std::vector<double> u,
         const DirectionalSamplingConfig& cfg) {
        RecoveryConfig rc;
        rc.sampling = cfg;
        ClassVerdict cv = classify(catalogue::get(name), vec_from(x), vec_from(u), rc);
        py::dict d;
        d["radially_accessible"] = verdict_to_py(cv.radially_accessible);
        d["upper_semismooth"] = verdict_to_py(cv.upper_semismooth);
        d["strictly_upper_semismooth"] = verdict_to_py(cv.strictly_upper_semismooth);
        d["mifflin_semismooth"] = verdict_to_py(cv.mifflin_semismooth);
        d["dir_approx_convex"] = verdict_to_py(cv.dir_approx_convex);
        d["dir_lipschitz"] = verdict_to_py(cv.dir_lipschitz);
        d["recovered_value_directional"] = ext_to_py(cv.recovered_value_directional);
        d["recovered_value_full"] = ext_to_py(cv.recovered_value_full);
        d["direct_radial"] = ext_to_py(cv.direct_radial);
        d["estimator_inconsistency"] = cv.estimator_inconsistency;
        return d;
      },
      py::arg("fn"), py::arg("x"), py::arg("u"), py::arg("cfg") = DirectionalSamplingConfig{});

  m.def(
      "mvi_witness",
      [](py::function psi, double lam, const GridConfig& cfg) {
        Fn01 fn;
        fn.eval = [psi](double t) {
          py::gil_scoped_acquire gil;
          return ExtReal(psi(t).cast<double>());
        };
        MviWitness w = mvi_witness(fn, lam, cfg);
        py::dict d;
        d["t0"] = w.t0;
        d["psi_t0"] = ext_to_py(w.psi_t0);
        d["lower_dini_est"] = ext_to_py(w.lower_dini_est);
        d["slack_position"] = w.slack_position;
        d["slack_derivative"] = ext_to_py(w.slack_derivative);
        return d;
      },
      py::arg("psi"), py::arg("lam"), py::arg("cfg") = GridConfig{});

  m.def(
      "recover_increment",
      [](const std::string& g, double x0, double x1, const DirectionalSamplingConfig& cfg,
         int n_quad) {
        RecoveryConfig rc;
        rc.sampling = cfg;
        return recover_increment(oracle_of(g), Vec{x0}, Vec{x1}, rc, n_quad);
      },
      py::arg("g"), py::arg("x0"), py::arg("x1"), py::arg("cfg") = DirectionalSamplingConfig{},
      py::arg("n_quad") = 8192);
  m.def(
      "determination_experiment",
      [](const std::string& f, const std::string& g, double lo, double hi, int n,
         const std::string& mode, const DirectionalSamplingConfig& cfg) {
        SegmentTask task;
        task.f = catalogue::get(f).fn;
        task.g = catalogue::get(g).fn;
        task.f_oracle = oracle_of(f);
        task.g_oracle = oracle_of(g);
        task.xbar = Vec{lo};
        task.ybar = Vec{hi};
        task.mode = mode == "semicontinuous" ? SegmentTask::Mode::semicontinuous
                                             : SegmentTask::Mode::continuous;
        std::vector<Vec> grid;
        for (int i = 0; i <= n; ++i) grid.push_back(Vec{lo + (hi - lo) * i / n});
        RecoveryConfig rc;
        rc.sampling = cfg;
        DeterminationReport rep = determination_experiment(task, grid, rc);
        py::dict d;
        d["inclusion_holds"] = verdict_to_py(rep.inclusion_holds);
        d["hypothesis_51"] = verdict_to_py(rep.hypothesis_51);
        d["hypothesis_52"] = verdict_to_py(rep.hypothesis_52);
        d["const_estimate"] = rep.const_estimate;
        d["const_deviation"] = rep.const_deviation;
        d["theorem"] = verdict_to_py(rep.theorem);
        return d;
      },
      py::arg("f"), py::arg("g"), py::arg("lo") = -1.0, py::arg("hi") = 1.0, py::arg("n") = 20,
      py::arg("mode") = "continuous", py::arg("cfg") = DirectionalSamplingConfig{});
}
