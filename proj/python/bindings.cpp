#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "steiner/closed_forms.hpp"
#include "steiner/hypermatrix.hpp"
#include "steiner/matrix.hpp"
#include "steiner/resultant.hpp"
#include "steiner/spectra.hpp"
#include "steiner/tree.hpp"
#include "steiner/tree_bases.hpp"

namespace py = pybind11;
using namespace steiner;

namespace {

py::object fraction(const Rat& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_to_string(r));
}

Rat to_rat(const py::handle& obj) {
    return rat_from_string(py::str(obj).cast<std::string>());
}

RatVec to_rat_vec(const py::sequence& seq) {
    RatVec v;
    v.reserve(seq.size());
    for (const py::handle& item : seq) v.push_back(to_rat(item));
    return v;
}

py::list from_rat_vec(const RatVec& v) {
    py::list out;
    for (const Rat& r : v) out.append(fraction(r));
    return out;
}

py::list from_mat(const RatMat& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(fraction(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

std::vector<RatVec> to_vec_list(const py::sequence& seq) {
    std::vector<RatVec> out;
    for (const py::handle& item : seq) out.push_back(to_rat_vec(item.cast<py::sequence>()));
    return out;
}

}  // namespace

PYBIND11_MODULE(steinerhd, m) {
    m.doc() = "Steiner distance hypermatrices of trees: exact forms, "
              "hyperdeterminants, and tensor eigenvalue experiments";

    py::class_<Tree>(m, "Tree")
        .def(py::init<std::vector<std::pair<int, int>>>(), py::arg("edges"))
        .def_property_readonly("n", &Tree::n)
        .def_property_readonly("edges", [](const Tree& t) { return t.edges(); })
        .def("parent", &Tree::parent)
        .def("depth", &Tree::depth)
        .def("steiner_distance",
             [](const Tree& t, const std::vector<int>& verts) {
                 return steiner_distance(t, verts);
             })
        .def("__repr__", [](const Tree& t) {
            std::ostringstream os;
            os << "Tree(n=" << t.n() << ", edges=" << t.edges().size() << ")";
            return os.str();
        });

    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
    m.def("path_tree", &path_tree);
    m.def("star_tree", &star_tree);
    m.def("caterpillar_tree", &caterpillar_tree);
    m.def("broom_tree", &broom_tree);
    m.def("prufer_decode", &prufer_decode);

    py::class_<Hypermatrix>(m, "Hypermatrix")
        .def_property_readonly("order", &Hypermatrix::order)
        .def_property_readonly("dim", &Hypermatrix::dim)
        .def("entry",
             [](const Hypermatrix& a, const std::vector<int>& idx) {
                 return fraction(a.at(idx));
             },
             "entry at a 1-based index tuple")
        .def("eval",
             [](const Hypermatrix& a, const py::sequence& xs) {
                 return fraction(eval_multilinear(a, to_vec_list(xs)));
             })
        .def("eval_form",
             [](const Hypermatrix& a, const py::sequence& x) {
                 return fraction(eval_kform(a, to_rat_vec(x)));
             })
        .def("gradient",
             [](const Hypermatrix& a, const py::sequence& x) {
                 return from_rat_vec(eval_gradient(a, to_rat_vec(x)));
             })
        .def("polarize",
             [](const Hypermatrix& a, const py::sequence& xs) {
                 return fraction(polarize(a, to_vec_list(xs)));
             })
        .def("is_symmetric", [](const Hypermatrix& a) { return is_symmetric(a); })
        .def("__repr__", [](const Hypermatrix& a) {
            std::ostringstream os;
            os << "Hypermatrix(order=" << a.order() << ", dim=" << a.dim() << ")";
            return os.str();
        });

    m.def("steiner_hypermatrix",
          [](const Tree& t, int k) { return steiner_hypermatrix(t, k); },
          py::arg("tree"), py::arg("k"));
    m.def("identity_hypermatrix", &identity_hypermatrix, py::arg("n"), py::arg("k"),
          py::arg("pad_zero_last") = false);
    m.def("u_hypermatrix", &u_hypermatrix, py::arg("n"), py::arg("k"));
    m.def("near_diagonal_target", &near_diagonal_target, py::arg("n"), py::arg("k"));

    m.def("zeta_matrix", [](const Tree& t) { return from_mat(zeta_matrix(t)); });
    m.def("mobius_matrix", [](const Tree& t) { return from_mat(mobius_matrix(t)); });
    m.def("p_matrix", [](const Tree& t) { return from_mat(p_matrix(t)); });
    m.def("p_prime_matrix", [](const Tree& t) { return from_mat(p_prime_matrix(t)); });
    m.def("p_prime_inverse", [](const Tree& t) { return from_mat(p_prime_inverse(t)); });
    m.def("reflection_matrix", [](int n) { return from_mat(reflection_matrix(n)); });

    m.def("edge_sum_total",
          [](const Tree& t, int k, const py::sequence& c) {
              return fraction(edge_sum_form(t, k, to_rat_vec(c)).total);
          },
          "closed-form diagonal evaluation via the per-edge decomposition");
    m.def("diagonal_form_even", [](const Tree& t, int k, const py::sequence& c) {
        return fraction(diagonal_form_even(t, k, to_rat_vec(c)));
    });

    m.def("hyperdet",
          [](const Hypermatrix& a, uint64_t seed) { return fraction(hyperdet(a, seed)); },
          py::arg("a"), py::arg("seed") = 0);
    m.def("tree_hyperdet",
          [](const Tree& t, int k, uint64_t seed) {
              return fraction(hyperdet(steiner_hypermatrix(t, k), seed));
          },
          py::arg("tree"), py::arg("k"), py::arg("seed") = 0);

    m.def("k2_closed_eigenvalues", &k2_closed_eigenvalues, py::arg("k"));

    m.def("h_eigen_search",
          [](const Hypermatrix& a, int starts, uint64_t seed, double tol, int max_iter) {
              py::list out;
              for (const EigenPair& p : h_eigen_search(a, starts, seed, tol, max_iter)) {
                  py::dict d;
                  d["lambda"] = p.lambda;
                  d["x"] = p.x;
                  d["residual"] = p.residual;
                  d["iterations"] = p.iterations;
                  d["shift"] = p.shift;
                  out.append(d);
              }
              return out;
          },
          py::arg("a"), py::arg("starts") = 50, py::arg("seed") = 1,
          py::arg("tol") = 1e-10, py::arg("max_iter") = 2000);

    m.def("reflected_realization",
          [](const Hypermatrix& a, const std::vector<int>& mask) {
              return reflected_form(a, mask).realize();
          },
          py::arg("a"), py::arg("mask"),
          "explicit hypermatrix with the reflection composed into the masked modes");
}
