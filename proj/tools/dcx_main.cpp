#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dcx/descriptions.hpp"
#include "dcx/json_io.hpp"
#include "dcx/relations.hpp"

namespace {

using dcx::ClassId;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitParse = 2;
constexpr int kExitScaleGuard = 3;

json witness_to_json(const dcx::Witness& w) {
    json pts = json::array();
    for (const auto& p : w.points) {
        json a = json::array();
        for (auto c : p) a.push_back(c);
        pts.push_back(std::move(a));
    }
    json j{{"inequality", w.inequality}, {"points", std::move(pts)}};
    if (!w.indices.empty()) j["indices"] = w.indices;
    if (!w.rational_point.empty()) {
        json rp = json::array();
        for (const auto& r : w.rational_point) rp.push_back(dcx::rat_to_string(r));
        j["rational_point"] = std::move(rp);
    }
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json verdict_to_json(const dcx::Verdict& v) {
    json j{{"status", dcx::status_code(v.status)}};
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    json detail = json::object();
    if (v.slope) detail["slope"] = dcx::rat_to_string(*v.slope);
    if (v.parts) {
        json phis = json::array();
        for (const auto& phi : v.parts->phi) {
            json m = json::array();
            for (const auto& [t, val] : phi)
                m.push_back(json{{"t", t}, {"v", dcx::rat_to_string(val)}});
            phis.push_back(std::move(m));
        }
        detail["separable_parts"] = std::move(phis);
    }
    if (!v.note.empty()) detail["note"] = v.note;
    if (!detail.empty()) j["detail"] = std::move(detail);
    return j;
}

json report_to_json(const dcx::ClassReport& r) {
    json arr = json::array();
    for (ClassId c : dcx::all_classes()) {
        json e = verdict_to_json(r.at(c));
        e["class"] = dcx::class_code(c);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string report_to_text(const dcx::ClassReport& r) {
    std::string out;
    for (ClassId c : dcx::all_classes()) {
        const dcx::Verdict& v = r.at(c);
        out += dcx::class_code(c);
        out += ": ";
        out += dcx::status_code(v.status);
        if (v.slope) out += " (slope " + dcx::rat_to_string(*v.slope) + ")";
        if (v.witness) {
            out += " [" + v.witness->inequality;
            for (const auto& p : v.witness->points) out += " " + dcx::point_to_string(p);
            out += "]";
        }
        out += "\n";
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dcx::parse_error("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw dcx::parse_error(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

dcx::CertificateMap certs_from_json(const json& j, int dim) {
    dcx::CertificateMap out;
    if (!j.is_array()) throw dcx::parse_error("'certificates' must be an array");
    for (const auto& c : j) {
        auto cls = dcx::class_from_code(c.at("class").get<std::string>());
        auto kind = dcx::cert_kind_from_code(c.at("kind").get<std::string>());
        if (!cls || !kind) throw dcx::parse_error("certificate with unknown class or kind");
        const auto& parts = c.at("parts");
        if (!parts.is_array() || parts.size() != 2)
            throw dcx::parse_error("certificate needs exactly two parts");
        dcx::Certificate cert;
        cert.kind = *kind;
        cert.part1 = dcx::object_from_json(parts[0]);
        cert.part2 = dcx::object_from_json(parts[1]);
        if (cert.part1.dim != dim || cert.part2.dim != dim)
            throw dcx::parse_error("certificate parts have the wrong dimension");
        out.emplace(*cls, std::move(cert));
    }
    return out;
}

json entry_to_json(const dcx::CatalogEntry& e) {
    json j{{"id", e.id},
           {"provenance", e.provenance},
           {"kind", e.is_set ? "set" : "function"}};
    if (e.is_set) {
        j["object"] = dcx::to_json(e.object.domain(), e.object.window);
    } else {
        j["object"] = dcx::to_json(e.object);
    }
    json exp = json::object();
    for (const auto& [c, s] : e.expected) exp[dcx::class_code(c)] = dcx::status_code(s);
    j["expected"] = std::move(exp);
    if (!e.certs.empty()) {
        json cs = json::array();
        for (const auto& [c, cert] : e.certs) {
            json parts = json::array();
            parts.push_back(dcx::to_json(cert.part1));
            parts.push_back(dcx::to_json(cert.part2));
            cs.push_back(json{{"class", dcx::class_code(c)},
                              {"kind", dcx::cert_kind_code(cert.kind)},
                              {"parts", std::move(parts)}});
        }
        j["certificates"] = std::move(cs);
    }
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"recognizers, constructors and relation suites for discrete convexity classes"};
    app.require_subcommand(1);

    if (const char* guard = std::getenv("DCX_GUARD")) dcx::set_composite_guard(std::atoll(guard));
    if (const char* md = std::getenv("DCX_MAX_DIM")) dcx::set_max_dim(std::atoi(md));

    std::string in_path, format = "json", as_kind = "lnat", gen_class = "lnat_set", suite_name,
                example_id;
    int dim = 3;
    long long radius = 3, value_range = 6, window_radius = -1;
    std::uint64_t seed = 1;
    int trials = 100;

    auto* classify = app.add_subcommand("classify", "classify an object from a JSON file");
    classify->add_option("--in", in_path, "input set/function JSON")->required();
    classify->add_option("--format", format, "json or text");
    classify->add_option("--window", window_radius, "override check window radius");

    auto* describe = app.add_subcommand("describe", "extract a polyhedral description");
    describe->add_option("--in", in_path, "input set JSON")->required();
    describe->add_option("--as", as_kind, "lnat, mm, rank, or hull");

    auto* generate = app.add_subcommand("generate", "generate a seeded object of a class");
    generate->add_option("--class", gen_class, "sep, linear, lnat, lnat_set, l_set, mnat, "
                                               "mnat_set, m, m_base, mm, mm_set, rank, noise");
    generate->add_option("--dim", dim, "dimension");
    generate->add_option("--radius", radius, "window radius");
    generate->add_option("--value-range", value_range, "value magnitude scale");
    generate->add_option("--seed", seed, "seed");

    auto* example = app.add_subcommand("example", "emit a catalog entry");
    example->add_option("--id", example_id, "catalog id")->required();

    auto* suite = app.add_subcommand("suite", "run a relation suite");
    suite->add_option("--name", suite_name, "inclusions, intersections, argmin, equivalence, all")
        ->required();
    suite->add_option("--trials", trials, "trial count");
    suite->add_option("--seed", seed, "seed");
    suite->add_option("--format", format, "json or text");

    auto* table = app.add_subcommand("table", "print the class-relation table");
    bool table_check = false;
    table->add_flag("--check", table_check, "also re-validate the table evidence");

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) {
        json j = load_json_file(in_path);
        bool was_set = false;
        dcx::DiscreteFunction f = dcx::object_from_json(j, &was_set);
        if (window_radius >= 0) {
            dcx::Box w(dcx::Point(size_t(f.dim), -window_radius),
                       dcx::Point(size_t(f.dim), window_radius));
            f = dcx::DiscreteFunction(f.dim, f.entries, w);
        }
        dcx::CertificateMap certs;
        if (j.contains("certificates")) certs = certs_from_json(j["certificates"], f.dim);
        dcx::ClassReport rep = dcx::classify_all(f, certs);
        if (format == "text")
            std::cout << report_to_text(rep);
        else
            std::cout << dcx::dumps(report_to_json(rep));
        return kExitOk;
    }
    if (describe->parsed()) {
        json j = load_json_file(in_path);
        dcx::DiscreteSet s = dcx::set_from_json(j);
        json out;
        if (as_kind == "lnat")
            out = dcx::to_json(dcx::extract_lnat_description(s));
        else if (as_kind == "mm")
            out = dcx::to_json(dcx::extract_interval_bounds(s));
        else if (as_kind == "rank")
            out = dcx::to_json(dcx::extract_interval_rank(s));
        else if (as_kind == "hull")
            out = dcx::to_json(dcx::convex_hull(s));
        else
            throw dcx::parse_error("--as must be lnat, mm, rank, or hull");
        std::cout << dcx::dumps(out);
        return kExitOk;
    }
    if (generate->parsed()) {
        dcx::GenSpec spec;
        spec.cls = gen_class;
        spec.dim = dim;
        spec.radius = radius;
        spec.value_range = value_range;
        spec.seed = seed;
        json out;
        if (gen_class == "sep")
            out = dcx::to_json(dcx::gen_separable(spec));
        else if (gen_class == "linear")
            out = dcx::to_json(dcx::gen_linear(spec));
        else if (gen_class == "lnat")
            out = dcx::to_json(dcx::gen_lnat_function(spec));
        else if (gen_class == "lnat_set")
            out = dcx::to_json(dcx::gen_lnat_set(spec));
        else if (gen_class == "l_set")
            out = dcx::to_json(dcx::gen_l_set(spec), dcx::gen_l_window(spec));
        else if (gen_class == "mnat")
            out = dcx::to_json(dcx::gen_mnat_function(spec));
        else if (gen_class == "mnat_set")
            out = dcx::to_json(dcx::gen_mnat_set(spec));
        else if (gen_class == "m")
            out = dcx::to_json(dcx::gen_m_function(spec));
        else if (gen_class == "m_base")
            out = dcx::to_json(dcx::gen_m_base(spec));
        else if (gen_class == "mm")
            out = dcx::to_json(dcx::gen_multimodular_function(spec));
        else if (gen_class == "mm_set")
            out = dcx::to_json(dcx::gen_multimodular_set(spec));
        else if (gen_class == "rank")
            out = dcx::to_json(dcx::gen_interval_rank(spec));
        else if (gen_class == "noise")
            out = dcx::to_json(dcx::gen_noise(spec));
        else
            throw dcx::parse_error("unknown generator class: " + gen_class);
        std::cout << dcx::dumps(out);
        return kExitOk;
    }
    if (example->parsed()) {
        std::cout << dcx::dumps(entry_to_json(dcx::paper_example(example_id)));
        return kExitOk;
    }
    if (suite->parsed()) {
        std::vector<dcx::SuiteResult> results = dcx::run_suite(suite_name, trials, seed);
        bool failed = false;
        json arr = json::array();
        for (const auto& s : results) {
            failed = failed || !s.ok();
            arr.push_back(json{{"name", s.name},
                               {"checks", s.checks},
                               {"failures", s.failures},
                               {"messages", s.messages}});
            if (format != "json") {
                std::cout << (s.ok() ? "PASS  " : "FAIL  ") << s.name << "  (" << s.checks
                          << " checks, " << s.failures << " failures)\n";
                for (const auto& m : s.messages) std::cout << "      " << m << "\n";
            }
        }
        if (format == "json") std::cout << dcx::dumps(arr);
        return failed ? kExitContradiction : kExitOk;
    }
    if (table->parsed()) {
        std::cout << dcx::table_text();
        if (table_check) {
            dcx::SuiteResult ev = dcx::table_evidence_suite();
            if (!ev.ok()) {
                for (const auto& m : ev.messages) std::cerr << "contradiction: " << m << "\n";
                return kExitContradiction;
            }
        }
        return kExitOk;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dcx::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dcx::scale_guard_error& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitScaleGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContradiction;
    }
}
