#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "qlie/automorphism.hpp"
#include "qlie/dsl.hpp"
#include "qlie/random.hpp"
#include "qlie/verify.hpp"

namespace py = pybind11;

namespace {

py::list to_strs(const std::vector<qlie::Rat>& values) {
  py::list out;
  for (const qlie::Rat& v : values) out.append(qlie::rat_str(v));
  return out;
}

py::list path_names(const qlie::QuiverLieAlgebra& alg) {
  py::list out;
  for (int i = 0; i < alg.dim(); ++i) out.append(alg.name(i));
  return out;
}

qlie::DiagonalMetric metric_from_dict(const qlie::QuiverLieAlgebra& alg,
                                      const py::dict& entries) {
  qlie::DiagonalMetric g = qlie::ones_metric(alg.dim());
  for (auto item : entries) {
    const std::string name = py::cast<std::string>(item.first);
    auto idx = alg.index_of_name(name);
    if (!idx) throw qlie::InputError("unknown path '" + name + "'");
    qlie::Rat value = qlie::rat_parse(py::cast<std::string>(item.second));
    if (value <= 0) {
      throw qlie::NonPositiveNorm("'" + name + "' must be positive");
    }
    g.norms_squared[*idx] = value;
  }
  return g;
}

py::dict certificate_dict(const qlie::QuiverLieAlgebra& alg,
                          const qlie::SolitonCertificate& cert) {
  py::dict checks;
  checks["derivation"] = cert.d_is_derivation;
  checks["diagonal"] = cert.operator_diagonal;
  checks["aut_invariant"] = cert.aut_invariant;
  checks["residual_zero"] = cert.ric_equals_minus_id_plus_d;

  py::dict d;
  d["paths"] = path_names(alg);
  d["norms_squared"] = to_strs(cert.metric.norms_squared);
  d["ricci_eigenvalues"] = to_strs(cert.ricci_diagonal);
  d["c"] = qlie::rat_str(cert.c);
  d["derivation_diagonal"] = to_strs(cert.derivation.entries);
  d["checks"] = checks;
  d["all_checks"] = cert.all_checks();
  return d;
}

}  // namespace

PYBIND11_MODULE(qlie, m) {
  m.doc() = "Nilpotent Lie algebras from acyclic quivers: exact Ricci "
            "curvature and algebraic Ricci soliton certificates";

  py::register_exception<qlie::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<qlie::CheckError>(m, "CheckError",
                                           PyExc_RuntimeError);

  py::class_<qlie::Quiver>(m, "Quiver")
      .def(py::init<>())
      .def("add_vertex", &qlie::Quiver::add_vertex, py::arg("name"))
      .def("add_arrow", &qlie::Quiver::add_arrow, py::arg("name"),
           py::arg("source"), py::arg("target"))
      .def_property_readonly("vertices", &qlie::Quiver::vertices)
      .def_property_readonly("arrows",
                             [](const qlie::Quiver& q) {
                               py::list out;
                               for (const qlie::Arrow& a : q.arrows()) {
                                 out.append(py::make_tuple(
                                     a.name, q.vertex_name(a.source),
                                     q.vertex_name(a.target)));
                               }
                               return out;
                             })
      .def("__eq__", [](const qlie::Quiver& a,
                        const qlie::Quiver& b) { return a == b; })
      .def("__repr__", [](const qlie::Quiver& q) {
        return "<Quiver: " + std::to_string(q.vertex_count()) + " vertices, " +
               std::to_string(q.arrow_count()) + " arrows>";
      });

  m.def("parse", &qlie::parse, py::arg("text"),
        "Parse the quiver text format.");
  m.def("serialize", &qlie::serialize, py::arg("quiver"));
  m.def("to_dot", &qlie::export_dot, py::arg("quiver"));
  m.def("validate", &qlie::validate, py::arg("quiver"),
        "Raise InputError unless the quiver is finite and acyclic.");
  m.def("quiver_length", &qlie::quiver_length, py::arg("quiver"));
  m.def("reduced_quiver", &qlie::reduced_quiver, py::arg("quiver"));

  m.def("paths", [](const qlie::Quiver& q) {
    qlie::validate(q);
    py::list out;
    for (const qlie::PathSeq& p : qlie::enumerate_paths(q)) {
      out.append(qlie::path_name(q, p));
    }
    return out;
  });

  m.def("starting_set", [](const qlie::Quiver& q) {
    qlie::validate(q);
    py::list out;
    for (int a : qlie::starting_set(q)) out.append(q.arrow(a).name);
    return out;
  });

  m.def("automorphisms", [](const qlie::Quiver& q) {
    qlie::validate(q);
    py::list out;
    for (const qlie::ArrowPermutation& f : qlie::automorphisms(q)) {
      py::dict img;
      for (int i = 0; i < f.degree(); ++i) {
        img[py::str(q.arrow(i).name)] = q.arrow(f.image[i]).name;
      }
      out.append(img);
    }
    return out;
  });

  m.def("info", [](const qlie::Quiver& q) {
    qlie::validate(q);
    qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
    py::list grading;
    for (const auto& grade : alg.grades()) grading.append(grade.size());
    py::dict d;
    d["dimension"] = alg.dim();
    d["step"] = qlie::nilpotency_step(alg);
    d["grading"] = grading;
    d["paths"] = path_names(alg);
    qlie::check_nice_basis(alg);
    d["nice_basis"] = true;
    mpz_class aut_order = qlie::automorphism_chain(q).order;
    if (aut_order.fits_ulong_p()) {
      d["aut_order"] = aut_order.get_ui();
    } else {
      d["aut_order"] = aut_order.get_str();
    }
    return d;
  });

  m.def(
      "soliton",
      [](const qlie::Quiver& q) {
        qlie::validate(q);
        qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
        qlie::DiagonalMetric g = qlie::construct_soliton_metric(q);
        return certificate_dict(alg, qlie::verify_certificate(alg, g, q));
      },
      py::arg("quiver"),
      "Construct the soliton inner product and verify its certificate.");

  m.def("certificate_json", [](const qlie::Quiver& q) {
    qlie::validate(q);
    qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
    qlie::DiagonalMetric g = qlie::construct_soliton_metric(q);
    return qlie::certificate_to_json(alg, qlie::verify_certificate(alg, g, q));
  });

  m.def(
      "ricci",
      [](const qlie::Quiver& q, py::object metric) {
        qlie::validate(q);
        qlie::QuiverLieAlgebra alg = qlie::build_algebra(q);
        qlie::DiagonalMetric g =
            metric.is_none() ? qlie::ones_metric(alg.dim())
                             : metric_from_dict(alg, py::cast<py::dict>(metric));
        qlie::RicciResult full = qlie::ricci_form(alg, g);
        std::vector<qlie::Rat> nice = qlie::ricci_diagonal_nice(alg, g);
        if (!full.operator_diagonal() || full.diagonal != nice) {
          throw qlie::CrossCheckMismatch(
              "full-form and nice-basis Ricci routes disagree");
        }
        py::dict d;
        d["paths"] = path_names(alg);
        d["ricci_diagonal"] = to_strs(nice);
        auto feasible = qlie::diagonal_soliton_feasibility(alg, g);
        d["feasible"] = feasible.has_value();
        if (feasible) {
          d["c"] = qlie::rat_str(feasible->first);
          d["derivation_diagonal"] = to_strs(feasible->second.entries);
        }
        return d;
      },
      py::arg("quiver"), py::arg("metric") = py::none(),
      "Exact Ricci diagonal; metric maps path names to 'p/q' strings.");

  m.def(
      "random_quiver",
      [](int vertices, int arrows, unsigned long long seed) {
        std::mt19937_64 rng(seed);
        return qlie::random_quiver({vertices, arrows}, rng);
      },
      py::arg("vertices"), py::arg("arrows"), py::arg("seed") = 1);

  m.def("full_verification", &qlie::full_verification, py::arg("quiver"),
        "Run the whole invariant suite on one quiver; raises on failure.");
}
