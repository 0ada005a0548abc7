#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hspin/json_io.hpp"
#include "hspin/lambda.hpp"
#include "hspin/quasiplucker.hpp"
#include "hspin/random.hpp"
#include "hspin/verify.hpp"

namespace py = pybind11;
using namespace hspin;

PYBIND11_MODULE(_core, m) {
    m.doc() = "quaternionic spinors, horospheres and lambda lengths in H^4";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("a") = 0.0,
             py::arg("b") = 0.0, py::arg("c") = 0.0, py::arg("d") = 0.0)
        .def_readwrite("a", &Quaternion::a)
        .def_readwrite("b", &Quaternion::b)
        .def_readwrite("c", &Quaternion::c)
        .def_readwrite("d", &Quaternion::d)
        .def("norm", &Quaternion::norm)
        .def("norm2", &Quaternion::norm2)
        .def("__add__", [](const Quaternion& p, const Quaternion& q) { return p + q; })
        .def("__sub__", [](const Quaternion& p, const Quaternion& q) { return p - q; })
        .def("__mul__", [](const Quaternion& p, const Quaternion& q) { return p * q; })
        .def("__mul__", [](const Quaternion& p, double s) { return p * s; })
        .def("__rmul__", [](const Quaternion& p, double s) { return p * s; })
        .def("__neg__", [](const Quaternion& p) { return -p; })
        .def("__eq__", [](const Quaternion& p, const Quaternion& q) { return p == q; })
        .def("__repr__", [](const Quaternion& q) {
            return "Quaternion" + json_quaternion(q);
        });

    m.def("conj_prime", [](const Quaternion& q) { return conj_prime(q); });
    m.def("conj_bar", [](const Quaternion& q) { return conj_bar(q); });
    m.def("conj_star", [](const Quaternion& q) { return conj_star(q); });
    m.def("inverse", py::overload_cast<const Quaternion&>(&inverse));
    m.def("qexp", [](const Quaternion& q) { return hspin::exp(q); });

    py::class_<Paravector>(m, "Paravector")
        .def(py::init<double, double, double>(), py::arg("a") = 0.0, py::arg("b") = 0.0,
             py::arg("c") = 0.0)
        .def_readwrite("a", &Paravector::a)
        .def_readwrite("b", &Paravector::b)
        .def_readwrite("c", &Paravector::c)
        .def("norm", &Paravector::norm)
        .def("quat", &Paravector::quat)
        .def("__repr__", [](const Paravector& v) {
            return "Paravector" + json_paravector(v);
        });

    py::class_<Spinor>(m, "Spinor")
        .def(py::init<Quaternion, Quaternion>(), py::arg("xi"), py::arg("eta"))
        .def_readwrite("xi", &Spinor::xi)
        .def_readwrite("eta", &Spinor::eta)
        .def("norm", &Spinor::norm)
        .def("__repr__", [](const Spinor& k) { return "Spinor" + json_spinor(k); });

    m.def("make_spinor", &make_spinor, py::arg("xi"), py::arg("eta"),
          py::arg("tol") = 0.0);
    m.def("bracket", &bracket);
    m.def("complementary", &complementary);

    py::class_<CliffordMatrix>(m, "CliffordMatrix")
        .def(py::init<Quaternion, Quaternion, Quaternion, Quaternion>(), py::arg("a"),
             py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readwrite("a", &CliffordMatrix::a)
        .def_readwrite("b", &CliffordMatrix::b)
        .def_readwrite("c", &CliffordMatrix::c)
        .def_readwrite("d", &CliffordMatrix::d)
        .def("__repr__", [](const CliffordMatrix& cm) {
            return "CliffordMatrix" + json_clifford(cm);
        });

    m.def("make_clifford", &make_clifford, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("d"), py::arg("tol") = 0.0);
    m.def("pdet", &pdet);
    m.def("inverse", py::overload_cast<const CliffordMatrix&>(&inverse));
    m.def("compose", &compose);
    m.def("act_spinor", &act_spinor);
    m.def("parabolic_from_spinor", &parabolic_from_spinor);

    py::class_<ExtendedParavector>(m, "ExtendedParavector")
        .def_static("infinity", &ExtendedParavector::infinity)
        .def_static("finite", &ExtendedParavector::finite)
        .def_readwrite("v", &ExtendedParavector::v)
        .def_readwrite("inf", &ExtendedParavector::inf)
        .def("__repr__", [](const ExtendedParavector& x) {
            return "ExtendedParavector(" + json_extended(x) + ")";
        });

    m.def("mobius_apply", &mobius_apply, py::arg("m"), py::arg("v"), py::arg("tol") = 0.0);

    py::class_<MinkowskiPoint>(m, "MinkowskiPoint")
        .def(py::init<double, double, double, double, double>(), py::arg("T") = 0.0,
             py::arg("W") = 0.0, py::arg("X") = 0.0, py::arg("Y") = 0.0,
             py::arg("Z") = 0.0)
        .def_readwrite("T", &MinkowskiPoint::T)
        .def_readwrite("W", &MinkowskiPoint::W)
        .def_readwrite("X", &MinkowskiPoint::X)
        .def_readwrite("Y", &MinkowskiPoint::Y)
        .def_readwrite("Z", &MinkowskiPoint::Z)
        .def("__repr__", [](const MinkowskiPoint& p) {
            return "MinkowskiPoint" + json_point(p);
        });

    m.def("minkowski_inner", &minkowski_inner);
    m.def("phi1", &phi1);
    m.def("boundary_to_uhs", &boundary_to_uhs, py::arg("p"), py::arg("tol") = 0.0);
    m.def("boundary_to_disc", &boundary_to_disc, py::arg("p"), py::arg("tol") = 0.0);
    m.def("act_minkowski", &act_minkowski);

    py::class_<DecoratedHorosphere>(m, "DecoratedHorosphere")
        .def_readonly("center", &DecoratedHorosphere::center)
        .def_readonly("size", &DecoratedHorosphere::size)
        .def_readonly("dir_i", &DecoratedHorosphere::dir_i)
        .def_readonly("dir_j", &DecoratedHorosphere::dir_j);

    m.def("decorated_horosphere_from_spinor", &decorated_horosphere_from_spinor,
          py::arg("k"), py::arg("tol") = 0.0);

    m.def("lambda_pdet", &lambda_pdet);
    m.def("lambda_geometric", &lambda_geometric, py::arg("k1"), py::arg("k2"),
          py::arg("tol") = 0.0);
    m.def("ptolemy_residual", &ptolemy_residual, py::arg("k0"), py::arg("k1"),
          py::arg("k2"), py::arg("k3"), py::arg("tol") = 0.0);

    py::class_<Holonomy>(m, "Holonomy")
        .def_readonly("value", &Holonomy::value)
        .def_readonly("inf", &Holonomy::inf);

    m.def("triangle_holonomy", &triangle_holonomy, py::arg("k1"), py::arg("k2"),
          py::arg("k3"), py::arg("tol") = 0.0);

    m.def("quasi_plucker", &quasi_plucker, py::arg("quad"), py::arg("l"), py::arg("m"),
          py::arg("n"), py::arg("s") = 1);
    m.def("gr_skew_symmetry_residual", &gr_skew_symmetry_residual);
    m.def("gr_plucker_residual", &gr_plucker_residual);

    m.def("random_spinor",
          py::overload_cast<std::uint64_t, double>(&random_spinor), py::arg("seed"),
          py::arg("p_inf") = 0.05);
    m.def("random_clifford", py::overload_cast<std::uint64_t, int>(&random_clifford),
          py::arg("seed"), py::arg("length"));

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("suite", &SuiteResult::suite)
        .def_readonly("trials", &SuiteResult::trials)
        .def_readonly("max_residual", &SuiteResult::max_residual)
        .def_readonly("worst_seed", &SuiteResult::worst_seed)
        .def_readonly("tolerance", &SuiteResult::tolerance)
        .def_readonly("passed", &SuiteResult::pass);

    m.def("run_suite", &run_suite, py::arg("name"), py::arg("trials"), py::arg("seed"),
          py::arg("tol") = -1.0);
    m.def("suite_names", [] { return suite_names(); });
}
