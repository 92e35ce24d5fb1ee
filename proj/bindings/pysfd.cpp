// Python bindings for the spin fake degree engine.
//
// The module exposes the main operations: root system data, group orders,
// the closed form, full fake degree tables, the verification battery, the
// dataset round-trip, and the field-literal grammar.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfd/dataset.hpp"
#include "sfd/emit.hpp"

namespace py = pybind11;
using namespace sfd;

namespace {

CartanType ct(const std::string& s) { return CartanType::parse(s); }

std::vector<long> int_coeffs(const IntPolynomial& p, int top) {
    std::vector<long> out(top + 1);
    for (int k = 0; k <= top; ++k) out[k] = p.coeff(k).get_si();
    return out;
}

py::dict table_to_dict(const FakeDegreeTable& fd) {
    py::dict d;
    d["type"] = fd.type.str();
    d["N"] = fd.n_reflections;
    d["degrees"] = fd.degrees;
    d["q_factor"] = fd.q_factor.get_str();
    d["matched_reference"] = fd.matched_reference;
    d["notes"] = fd.notes;
    py::list labels, types, degs, polys, series;
    for (const auto& row : fd.rows) {
        labels.append(row.label);
        types.append(std::string(1, row.type));
        degs.append(row.degree);
        polys.append(int_coeffs(row.P, fd.n_reflections));
        std::vector<long> h(row.H.size());
        for (size_t i = 0; i < row.H.size(); ++i) h[i] = row.H[i].get_si();
        series.append(h);
    }
    d["labels"] = labels;
    d["types"] = types;
    d["character_degrees"] = degs;
    d["P"] = polys;
    d["H"] = series;
    d["basic_row"] = fd.basic_row;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "spin fake degrees of Weyl groups, exact arithmetic engine";

    m.def("supported_types", [] {
        std::vector<std::string> out;
        for (const char* s : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
                              "D4", "G2", "F4", "E6", "E7", "E8"})
            out.push_back(s);
        return out;
    });

    m.def("degrees", [](const std::string& type) {
        RootSystem rs(ct(type));
        return rs.degrees();
    }, py::arg("type"), "fundamental invariant degrees, increasing");

    m.def("num_positive_roots", [](const std::string& type) {
        return RootSystem(ct(type)).num_positive();
    }, py::arg("type"));

    m.def("group_order", [](const std::string& type) {
        return py::cast(group_order(RootSystem(ct(type))).get_str());
    }, py::arg("type"), "|W| as a decimal string (stabilizer chain)");

    m.def("basic_spin_closed_form", [](const std::string& type) {
        RootSystem rs(ct(type));
        IntPolynomial p = basic_spin_closed_form(rs);
        return int_coeffs(p, p.degree());
    }, py::arg("type"), "coefficients of m * prod(1 + t^(d_i - 1))");

    m.def("fake_degree_table", [](const std::string& type, long budget) {
        Engine eng(budget);
        return table_to_dict(eng.fake_degrees(ct(type)));
    }, py::arg("type"), py::arg("budget") = kDefaultBudget,
       "full fake degree table computed from scratch");

    m.def("split_class_counts", [](const std::string& type, long budget) {
        Engine eng(budget);
        const auto& st = eng.spin_table(ct(type));
        return py::make_tuple(st.even_split.size(), st.odd_split.size());
    }, py::arg("type"), py::arg("budget") = kDefaultBudget);

    m.def("verify", [](const std::string& type, bool deep, long budget) {
        Engine eng(budget);
        auto rep = eng.verify(ct(type), deep);
        py::list out;
        for (const auto& c : rep.checks) out.append(py::make_tuple(c.name, c.ok, c.detail));
        return out;
    }, py::arg("type"), py::arg("deep") = false, py::arg("budget") = kDefaultBudget);

    m.def("export_class_dataset", [](const std::string& type, long budget) {
        Engine eng(budget);
        CartanType t = ct(type);
        const auto& cls = eng.classes(t);
        eng.cover_classes(t);
        return export_class_dataset(cls, eng.store(t));
    }, py::arg("type"), py::arg("budget") = kDefaultBudget);

    m.def("export_spin_table", [](const std::string& type, long budget) {
        Engine eng(budget);
        CartanType t = ct(type);
        return export_spin_table(eng.spin_table(t), eng.classes(t), eng.fake_degrees(t));
    }, py::arg("type"), py::arg("budget") = kDefaultBudget);

    m.def("fake_degrees_from_dataset", [](const std::string& classes_text,
                                          const std::string& spintable_text,
                                          const std::string& type) {
        RootSystem rs(ct(type));
        ClassDataset cds = parse_class_dataset(classes_text, rs);
        SpinTableDataset sds = parse_spin_table(spintable_text);
        return table_to_dict(fake_degrees_from_dataset(sds, cds, rs));
    }, py::arg("classes_text"), py::arg("spintable_text"), py::arg("type"));

    m.def("parse_field_literal", [](const std::string& lit) {
        return field_literal(parse_field_literal(lit));
    }, py::arg("literal"), "parse and re-emit a field literal in canonical form");

    m.def("emit_table", [](const std::string& type, const std::string& format, bool half,
                           long budget) {
        Engine eng(budget);
        return emit_table(eng.fake_degrees(ct(type)), parse_format(format), half);
    }, py::arg("type"), py::arg("format") = "csv", py::arg("half") = false,
       py::arg("budget") = kDefaultBudget);

    // translators run newest-first: register the base before the subclasses
    py::register_exception<Error>(m, "EngineError");
    py::register_exception<MissingDataset>(m, "MissingDatasetError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
}
