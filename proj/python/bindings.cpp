#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partlab/core.hpp"
#include "partlab/maps.hpp"
#include "partlab/qseries.hpp"
#include "partlab/shapes.hpp"
#include "partlab/verify.hpp"

namespace py = pybind11;
using namespace partlab;

namespace {

using Parts = std::vector<int>;

Partition as_partition(const Parts& parts) { return Partition(parts); }

py::object to_py_int(const BigInt& c)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::dict series_dict(const std::string& name, int order, int param)
{
    const auto id = series_id_from_string(name);
    if (!id) {
        throw DomainError("unknown series '" + name + "'");
    }
    const MultiSeries s = build(*id, order, param);
    py::dict out;
    for (int q = 0; q <= s.order(); ++q) {
        for (const auto& [xy, c] : s.bucket(q)) {
            out[py::make_tuple(q, xy.first, xy.second)] = to_py_int(c);
        }
    }
    return out;
}

py::dict report_dict(const VerificationReport& r)
{
    py::dict summary;
    for (const auto& [k, v] : r.summary) {
        summary[py::str(k)] = v;
    }
    py::dict d;
    d["name"] = r.name;
    d["bounds"] = r.bounds;
    d["passed"] = r.passed;
    d["witness"] = r.witness;
    d["summary"] = summary;
    return d;
}

}  // namespace

PYBIND11_MODULE(_partlab, m)
{
    m.doc() = "Exact partition statistics, bijections, q-series and identity checks";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("parse_partition", [](const std::string& s) { return parse_partition(s).vec(); });
    m.def("partitions", [](int n) {
        std::vector<Parts> out;
        for_each_partition(n, [&](const Partition& p) { out.push_back(p.vec()); });
        return out;
    });

    m.def("size", [](const Parts& p) { return size(as_partition(p)); });
    m.def("length", [](const Parts& p) { return length(as_partition(p)); });
    m.def("sol", [](const Parts& p) { return sol(as_partition(p)); });
    m.def("k_measure", [](const Parts& p, int k) { return k_measure(as_partition(p), k); }, py::arg("p"),
          py::arg("k"));
    m.def("conjugate", [](const Parts& p) { return conjugate(as_partition(p)).vec(); });
    m.def("parity_index", [](const std::vector<int>& s) { return parity_index(s); });

    m.def("durfee_side", [](const Parts& p) { return durfee_side(as_partition(p)); });
    m.def("dur2", [](const Parts& p) { return dur2(as_partition(p)); });
    m.def("dur2_sub", [](const Parts& p) {
        const SubDurfee s = dur2_sub(as_partition(p));
        return py::make_tuple(to_string(s.type), s.side);
    });
    m.def("alternating_index", [](const Parts& p) { return alternating_index(as_partition(p)); });
    m.def("modular2_diagram", [](const Parts& p, bool right_border) {
        return modular2_diagram(as_partition(p), right_border ? BorderStyle::RightBorder : BorderStyle::LastCell)
            .rows;
    }, py::arg("p"), py::arg("right_border") = false);

    m.def("sylvester", [](const Parts& p) { return sylvester(as_partition(p)).vec(); });
    m.def("glaisher", [](const Parts& p) { return glaisher(as_partition(p)).vec(); });
    m.def("involution_phi", [](const std::string& pair) { return to_string(involution_phi(parse_signed_pair(pair))); },
          "Apply phi to a pair written \"<strict>|<labeled>\".");
    m.def("classify_pair", [](const std::string& pair) { return to_string(classify_pair(parse_signed_pair(pair)).kind); });
    m.def("lemma51_decompose", [](const Parts& p) {
        const OddGapSplit s = lemma51_decompose(as_partition(p));
        return py::make_tuple(s.sigma.vec(), s.tau.vec());
    });

    m.def("series", &series_dict, py::arg("name"), py::arg("order"), py::arg("param") = 0,
          "Coefficients keyed by (q, x, y) exponents.");
    m.def("serialize_series", [](const std::string& name, int order, int param) {
        const auto id = series_id_from_string(name);
        if (!id) {
            throw DomainError("unknown series '" + name + "'");
        }
        return serialize(build(*id, order, param));
    }, py::arg("name"), py::arg("order"), py::arg("param") = 0);

    m.def("count_D", &count_D);
    m.def("count_A1", &count_A1);
    m.def("count_A2", &count_A2);
    m.def("count_B", &count_B);

    m.def("checker_names", &checker_names);
    m.def("verify", [](const std::string& name, std::optional<int> nmax, std::optional<int> order,
                       std::optional<int> k) {
        VerificationReport r;
        {
            py::gil_scoped_release release;
            r = verify(name, Bounds{nmax, order, k});
        }
        return report_dict(r);
    }, py::arg("name"), py::arg("nmax") = py::none(), py::arg("order") = py::none(), py::arg("k") = py::none());

    m.def("example_sets", [](const std::string& preset) {
        const ExampleSets s = example_sets(preset);
        auto lists = [](const std::vector<Partition>& v) {
            std::vector<Parts> out;
            for (const auto& p : v) {
                out.push_back(p.vec());
            }
            return out;
        };
        py::dict d;
        d[py::str(s.a_name)] = lists(s.a);
        d[py::str(s.b_name)] = lists(s.b);
        d[py::str(s.d_name)] = lists(s.d);
        return d;
    });
    m.def("involution_table", &involution_table);
}
