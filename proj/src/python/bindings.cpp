#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "yf/chains.hpp"
#include "yf/fibokostka.hpp"
#include "yf/insertion.hpp"
#include "yf/permutation.hpp"
#include "yf/snakeshape.hpp"
#include "yf/tableau.hpp"
#include "yf/verify.hpp"
#include "yf/weak_order.hpp"
#include "yf/youngside.hpp"

namespace py = pybind11;
using namespace yf;

namespace {

std::vector<std::string> tableau_strings(const std::vector<YfTableau>& tableaux) {
    std::vector<std::string> out;
    out.reserve(tableaux.size());
    for (const auto& t : tableaux) {
        out.push_back(t.str());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_yfib, m) {
    m.doc() = "Young-Fibonacci insertion, growth diagrams, tableau posets and "
              "Kostka-style matrices";

    py::class_<Snakeshape>(m, "Snakeshape")
        .def(py::init([](const std::string& text) { return Snakeshape::parse(text); }))
        .def_property_readonly("parts",
                               [](const Snakeshape& s) {
                                   return std::vector<int>(s.parts().begin(), s.parts().end());
                               })
        .def("size", &Snakeshape::size)
        .def("length", &Snakeshape::length)
        .def("__str__", &Snakeshape::str)
        .def("__repr__", [](const Snakeshape& s) { return "Snakeshape('" + s.str() + "')"; })
        .def("__eq__", [](const Snakeshape& a, const Snakeshape& b) { return a == b; })
        .def("__hash__", [](const Snakeshape& s) { return py::hash(py::str(s.str())); });

    py::class_<YfTableau>(m, "YfTableau")
        .def(py::init([](const std::string& text) { return YfTableau::parse(text); }))
        .def_property_readonly("columns",
                               [](const YfTableau& t) {
                                   std::vector<std::vector<int>> cols;
                                   for (const auto& col : t.columns()) {
                                       if (col.two_boxed()) {
                                           cols.push_back({col.bottom, col.top});
                                       } else {
                                           cols.push_back({col.bottom});
                                       }
                                   }
                                   return cols;
                               })
        .def("size", &YfTableau::size)
        .def("shape", &YfTableau::shape)
        .def("__str__", &YfTableau::str)
        .def("__repr__", [](const YfTableau& t) { return "YfTableau('" + t.str() + "')"; })
        .def("__eq__", [](const YfTableau& a, const YfTableau& b) { return a == b; })
        .def("__hash__", [](const YfTableau& t) { return py::hash(py::str(t.str())); });

    m.def("shapes_of_size", &shapes_of_size);
    m.def("covers_up", &covers_up);
    m.def("covers_down", &covers_down);
    m.def("v_one_minus", &v_one_minus);
    m.def("chain_count", &chain_count);
    m.def("hook_count", &hook_count);
    m.def("is_standard", &is_standard);
    m.def("is_semistandard", &is_semistandard);
    m.def("enumerate_standard",
          [](const Snakeshape& u) { return tableau_strings(enumerate_standard(u)); });
    m.def("enumerate_semistandard", [](const Snakeshape& u, const Snakeshape& v) {
        return tableau_strings(enumerate_semistandard(u, v));
    });
    m.def("row_canonical", &row_canonical);
    m.def("column_canonical", &column_canonical);
    m.def("rho_min", &rho_min);
    m.def("rho_max", &rho_max);
    m.def("min_cano", [](const YfTableau& t) { return min_cano(t).str(); });
    m.def("max_cano", [](const YfTableau& t) { return max_cano(t).str(); });
    m.def("cano_involution", [](const YfTableau& t) { return cano_involution(t).str(); });

    m.def("insert_p",
          [](const std::string& word) { return insert_p(Permutation::parse(word)); });
    m.def("insert_pq", [](const std::string& word) {
        auto [p, q] = insert_pq(Permutation::parse(word));
        return py::make_tuple(p, q);
    });
    m.def(
        "fibo_class",
        [](const YfTableau& t, int bound) {
            std::vector<std::string> out;
            for (const auto& sigma : fibo_class(t, bound)) {
                out.push_back(sigma.str());
            }
            return out;
        },
        py::arg("tableau"), py::arg("bound") = 10);

    m.def("chain_to_tableau",
          [](const std::string& chain) { return chain_to_tableau(ShapeChain::parse(chain)); });
    m.def("tableau_to_chain", [](const YfTableau& t) { return tableau_to_chain(t).str(); });
    m.def("growth_chains", [](const std::string& word) {
        GrowthDiagram d{Permutation::parse(word)};
        auto [p_hat, q_hat] = boundary_chains(d);
        return py::make_tuple(p_hat.str(), q_hat.str());
    });
    m.def("growth_grid", [](const std::string& word) {
        GrowthDiagram d{Permutation::parse(word)};
        std::vector<std::vector<std::string>> rows;
        for (int row = d.n(); row >= 0; --row) {
            std::vector<std::string> line;
            for (int col = 0; col <= d.n(); ++col) {
                line.push_back(d.at(col, row).str());
            }
            rows.push_back(std::move(line));
        }
        return rows;
    });
    m.def("evacuate_letter", &evacuate_letter);
    m.def("evacuation_tableau", &evacuation_tableau);

    m.def("shift_targets",
          [](const YfTableau& t) { return tableau_strings(shift_targets(t)); });

    m.def("n_number", &n_number);
    m.def("okada_k", &okada_k);
    m.def(
        "okada_k_by_interval",
        [](const Snakeshape& u, const Snakeshape& v, int bound) {
            return okada_k_by_interval(u, v, bound);
        },
        py::arg("u"), py::arg("v"), py::arg("bound") = 8);
    m.def("zero_pair_count", &zero_pair_count);
    m.def(
        "n_matrix",
        [](int n) {
            auto m6 = n_matrix(n);
            std::vector<std::string> order;
            for (const auto& s : m6.order) {
                order.push_back(s.str());
            }
            return py::make_tuple(order, m6.entries);
        },
        py::arg("n"));
    m.def(
        "okada_matrix",
        [](int n, const std::string& method) {
            auto mat = okada_matrix(
                n, method == "interval" ? OkadaMethod::Interval : OkadaMethod::Recurrence, n);
            std::vector<std::string> order;
            for (const auto& s : mat.order) {
                order.push_back(s.str());
            }
            return py::make_tuple(order, mat.entries);
        },
        py::arg("n"), py::arg("method") = "recurrence");

    m.def("kostka", [](const std::string& lam, const std::string& mu) {
        return kostka(Partition::parse(lam), Partition::parse(mu));
    });
    m.def(
        "kostka_by_interval",
        [](const std::string& lam, const std::string& mu, const std::string& order) {
            return kostka_by_interval(Partition::parse(lam), Partition::parse(mu),
                                      order == "chain" ? SytOrder::Chain : SytOrder::Weak);
        },
        py::arg("lam"), py::arg("mu"), py::arg("order") = "chain");
    m.def("rsk_shape", [](const std::string& word) {
        return rsk_p(Permutation::parse(word)).shape().str();
    });
    m.def("dominance_leq", [](const std::string& mu, const std::string& lam) {
        return dominance_leq(Partition::parse(mu), Partition::parse(lam));
    });

    m.def(
        "verify",
        [](const std::string& suite, int bound) {
            std::ostringstream log;
            bool ok = run_verify_suite(suite, bound, log);
            return py::make_tuple(ok, log.str());
        },
        py::arg("suite") = "all", py::arg("bound") = 5);
}
