#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "dcx/descriptions.hpp"
#include "dcx/json_io.hpp"
#include "dcx/relations.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json to_json_value(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json j = json::object();
        for (auto item : obj.cast<py::dict>())
            j[item.first.cast<std::string>()] = to_json_value(item.second);
        return j;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json j = json::array();
        for (auto item : obj.cast<py::sequence>()) j.push_back(to_json_value(item));
        return j;
    }
    throw py::type_error("unsupported value in object description");
}

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json verdict_json(const dcx::Verdict& v) {
    json j{{"status", dcx::status_code(v.status)}};
    if (v.witness) {
        json pts = json::array();
        for (const auto& p : v.witness->points) {
            json a = json::array();
            for (auto c : p) a.push_back(c);
            pts.push_back(std::move(a));
        }
        j["witness"] = json{{"inequality", v.witness->inequality}, {"points", std::move(pts)}};
        if (!v.witness->note.empty()) j["witness"]["note"] = v.witness->note;
    }
    if (v.slope) j["slope"] = dcx::rat_to_string(*v.slope);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json report_json(const dcx::ClassReport& r) {
    json j = json::object();
    for (dcx::ClassId c : dcx::all_classes()) j[dcx::class_code(c)] = verdict_json(r.at(c));
    return j;
}

dcx::DiscreteFunction parse_object(const py::dict& obj) {
    return dcx::object_from_json(to_json_value(obj));
}

py::object classify_py(const py::dict& obj) {
    json j = to_json_value(obj);
    dcx::DiscreteFunction f = dcx::object_from_json(j);
    dcx::CertificateMap certs;
    if (j.contains("certificates")) {
        for (const auto& c : j["certificates"]) {
            auto cls = dcx::class_from_code(c.at("class").get<std::string>());
            auto kind = dcx::cert_kind_from_code(c.at("kind").get<std::string>());
            if (!cls || !kind) throw dcx::parse_error("bad certificate class/kind");
            dcx::Certificate cert;
            cert.kind = *kind;
            cert.part1 = dcx::object_from_json(c.at("parts").at(0));
            cert.part2 = dcx::object_from_json(c.at("parts").at(1));
            certs.emplace(*cls, std::move(cert));
        }
    }
    return to_py(report_json(dcx::classify_all(f, certs)));
}

py::object generate_py(const std::string& cls, int dim, long long radius, std::uint64_t seed,
                       long long value_range) {
    dcx::GenSpec spec;
    spec.cls = cls;
    spec.dim = dim;
    spec.radius = radius;
    spec.seed = seed;
    spec.value_range = value_range;
    json out;
    if (cls == "sep") out = dcx::to_json(dcx::gen_separable(spec));
    else if (cls == "linear") out = dcx::to_json(dcx::gen_linear(spec));
    else if (cls == "lnat") out = dcx::to_json(dcx::gen_lnat_function(spec));
    else if (cls == "lnat_set") out = dcx::to_json(dcx::gen_lnat_set(spec));
    else if (cls == "l_set") out = dcx::to_json(dcx::gen_l_set(spec), dcx::gen_l_window(spec));
    else if (cls == "mnat") out = dcx::to_json(dcx::gen_mnat_function(spec));
    else if (cls == "mnat_set") out = dcx::to_json(dcx::gen_mnat_set(spec));
    else if (cls == "m") out = dcx::to_json(dcx::gen_m_function(spec));
    else if (cls == "m_base") out = dcx::to_json(dcx::gen_m_base(spec));
    else if (cls == "mm") out = dcx::to_json(dcx::gen_multimodular_function(spec));
    else if (cls == "mm_set") out = dcx::to_json(dcx::gen_multimodular_set(spec));
    else if (cls == "rank") out = dcx::to_json(dcx::gen_interval_rank(spec));
    else if (cls == "noise") out = dcx::to_json(dcx::gen_noise(spec));
    else throw dcx::parse_error("unknown generator class: " + cls);
    return to_py(out);
}

py::object example_py(const std::string& id) {
    dcx::CatalogEntry e = dcx::paper_example(id);
    json j{{"id", e.id}, {"provenance", e.provenance}, {"kind", e.is_set ? "set" : "function"}};
    j["object"] = e.is_set ? dcx::to_json(e.object.domain(), e.object.window)
                           : dcx::to_json(e.object);
    json exp = json::object();
    for (const auto& [c, s] : e.expected) exp[dcx::class_code(c)] = dcx::status_code(s);
    j["expected"] = std::move(exp);
    return to_py(j);
}

py::object describe_py(const py::dict& obj, const std::string& as_kind) {
    dcx::DiscreteSet s = dcx::set_from_json(to_json_value(obj));
    json out;
    if (as_kind == "lnat") out = dcx::to_json(dcx::extract_lnat_description(s));
    else if (as_kind == "mm") out = dcx::to_json(dcx::extract_interval_bounds(s));
    else if (as_kind == "rank") out = dcx::to_json(dcx::extract_interval_rank(s));
    else if (as_kind == "hull") out = dcx::to_json(dcx::convex_hull(s));
    else throw dcx::parse_error("describe kind must be lnat, mm, rank, or hull");
    return to_py(out);
}

py::object binary_op_py(const std::string& op, const py::dict& a, const py::dict& b) {
    json ja = to_json_value(a), jb = to_json_value(b);
    if (op == "minkowski_sum")
        return to_py(dcx::to_json(dcx::minkowski_sum(dcx::set_from_json(ja), dcx::set_from_json(jb))));
    if (op == "intersect")
        return to_py(dcx::to_json(dcx::intersect(dcx::set_from_json(ja), dcx::set_from_json(jb))));
    if (op == "infimal_convolution")
        return to_py(dcx::to_json(
            dcx::infimal_convolution(dcx::object_from_json(ja), dcx::object_from_json(jb))));
    if (op == "pointwise_sum")
        return to_py(
            dcx::to_json(dcx::pointwise_sum(dcx::object_from_json(ja), dcx::object_from_json(jb))));
    throw dcx::parse_error("unknown operation: " + op);
}

py::object d_transform_py(const py::dict& obj, const std::string& direction) {
    dcx::DTransformDirection dir = direction == "from_lnat" ? dcx::DTransformDirection::FromLnat
                                                            : dcx::DTransformDirection::ToLnat;
    json j = to_json_value(obj);
    if (j.contains("points"))
        return to_py(dcx::to_json(dcx::d_transform(dcx::set_from_json(j), dir)));
    return to_py(dcx::to_json(dcx::d_transform(dcx::function_from_json(j), dir)));
}

py::object argmin_py(const py::dict& obj) {
    return to_py(dcx::to_json(dcx::argmin_set(parse_object(obj))));
}

py::list run_suite_py(const std::string& name, int trials, std::uint64_t seed) {
    py::list out;
    for (const auto& s : dcx::run_suite(name, trials, seed)) {
        py::dict d;
        d["name"] = s.name;
        d["checks"] = s.checks;
        d["failures"] = s.failures;
        py::list msgs;
        for (const auto& m : s.messages) msgs.append(m);
        d["messages"] = msgs;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_dcx, m) {
    m.doc() = "exact recognizers and constructors for discrete convexity classes";
    m.def("classify", &classify_py, py::arg("obj"),
          "classify a set or function given as a JSON-like dict; returns a verdict per class");
    m.def("generate", &generate_py, py::arg("cls"), py::arg("dim") = 3, py::arg("radius") = 3,
          py::arg("seed") = 1, py::arg("value_range") = 6);
    m.def("paper_example", &example_py, py::arg("id"));
    m.def("catalog_ids", [] { return dcx::catalog_ids(); });
    m.def("describe", &describe_py, py::arg("obj"), py::arg("as_kind") = "lnat");
    m.def("binary_op", &binary_op_py, py::arg("op"), py::arg("a"), py::arg("b"));
    m.def("d_transform", &d_transform_py, py::arg("obj"), py::arg("direction") = "to_lnat");
    m.def("argmin_set", &argmin_py, py::arg("obj"));
    m.def("table_text", [] { return dcx::table_text(); });
    m.def("run_suite", &run_suite_py, py::arg("name"), py::arg("trials") = 50,
          py::arg("seed") = 1);
    m.def("set_composite_guard", &dcx::set_composite_guard, py::arg("guard"));
    m.def("set_max_dim", &dcx::set_max_dim, py::arg("n"));
}
