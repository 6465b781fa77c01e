#include "hofa/serialize.hpp"

#include <chrono>
#include <fstream>

namespace hofa {

Json field_to_json(const Field& fld) {
    return Json{{"p", fld.p()}, {"t", fld.t()}, {"modulus_poly", fld.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
    int p = j.at("p").get<int>();
    int t = j.at("t").get<int>();
    if (j.contains("modulus_poly"))
        return Field::make(p, t, j.at("modulus_poly").get<std::vector<int>>());
    return Field::make(p, t);
}

Json dense_fn_to_json(const DenseFn& f) {
    Json values = Json::array();
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        values.push_back({f.values[i].real(), f.values[i].imag()});
    return Json{{"field", field_to_json(f.dom.field())}, {"n", f.dom.n()}, {"values", values}};
}

DenseFn dense_fn_from_json(const Json& j) {
    PointSpace dom(field_from_json(j.at("field")), j.at("n").get<int>());
    const auto& values = j.at("values");
    Eigen::ArrayXcd v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& pair = values.at(i);
        v[static_cast<Eigen::Index>(i)] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return DenseFn(dom, std::move(v));
}

Json word_to_json(const Word& w) {
    std::vector<int> syms(w.symbols.data(), w.symbols.data() + w.symbols.size());
    return Json{{"field", field_to_json(w.dom.field())}, {"n", w.dom.n()}, {"m", w.m}, {"values", syms}};
}

Word word_from_json(const Json& j) {
    PointSpace dom(field_from_json(j.at("field")), j.at("n").get<int>());
    auto syms = j.at("values").get<std::vector<int>>();
    Eigen::ArrayXi arr(static_cast<Eigen::Index>(syms.size()));
    for (std::size_t i = 0; i < syms.size(); ++i) arr[static_cast<Eigen::Index>(i)] = syms[i];
    return Word(dom, j.at("m").get<int>(), std::move(arr));
}

Json ncpoly_to_json(const NCPoly& poly) {
    const int t = poly.dom().field().t();
    Json terms = Json::array();
    for (const auto& term : poly.terms()) {
        Json rows = Json::array();
        for (int i = 0; i < poly.dom().n(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < t; ++j) row.push_back(term.exponents[static_cast<std::size_t>(i * t + j)]);
            rows.push_back(row);
        }
        terms.push_back({{"exponents", rows}, {"depth", term.depth}, {"coeff", term.coeff}});
    }
    return Json{{"field", field_to_json(poly.dom().field())},
                {"n", poly.dom().n()},
                {"degree_bound", poly.degree_bound()},
                {"theta", {poly.theta().num, poly.theta().log_den}},
                {"terms", terms}};
}

NCPoly ncpoly_from_json(const Json& j) {
    FieldPtr fld = field_from_json(j.at("field"));
    PointSpace dom(fld, j.at("n").get<int>());
    TorusValue theta(j.at("theta").at(0).get<std::int64_t>(), j.at("theta").at(1).get<int>(), fld->p());
    std::vector<NCTerm> terms;
    for (const auto& tj : j.at("terms")) {
        NCTerm term;
        for (const auto& row : tj.at("exponents"))
            for (const auto& e : row) term.exponents.push_back(e.get<int>());
        term.depth = tj.at("depth").get<int>();
        term.coeff = tj.at("coeff").get<int>();
        terms.push_back(std::move(term));
    }
    return NCPoly(dom, j.at("degree_bound").get<int>(), theta, std::move(terms));
}

Json code_to_json(const CodeSpec& code) {
    Json words = Json::array();
    for (const auto& w : code.codewords) {
        std::vector<int> syms(w.symbols.data(), w.symbols.data() + w.symbols.size());
        words.push_back(syms);
    }
    Json out{{"field", field_to_json(code.dom.field())},
             {"n", code.dom.n()},
             {"m", code.m},
             {"codewords", words}};
    if (!code.generator.empty()) out["generator"] = code.generator;
    return out;
}

Json net_to_json(const NetSpec& net) {
    Json polys = Json::array();
    for (const auto& poly : net.polys) polys.push_back(ncpoly_to_json(poly));
    Json lattice = Json::array();
    for (const auto& [a, b] : net.lattice) lattice.push_back({a, b});
    Json elements = Json::array();
    for (const auto& el : net.elements) {
        Json tau = Json::array();
        for (int idx : el.tau) tau.push_back(idx);
        elements.push_back({{"poly_indices", el.poly_indices}, {"tau", tau}});
    }
    return Json{{"field", field_to_json(*net.field)},
                {"n", net.n},
                {"r", net.r},
                {"eps", net.eps},
                {"k", net.k},
                {"polys", polys},
                {"lattice", lattice},
                {"elements", elements}};
}

Json make_report(const std::string& command, std::uint64_t seed, const Json& params,
                 const Json& outputs, bool pass) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", command},
                {"seed", seed},
                {"params", params},
                {"outputs", outputs},
                {"pass", pass},
                {"timestamp", std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}};
}

ReportValidation validate_report(const Json& report) {
    for (const char* key : {"schema_version", "command", "seed", "params", "outputs", "pass"})
        if (!report.contains(key)) return {false, std::string("missing required key: ") + key};
    if (!report.at("schema_version").is_number_integer())
        return {false, "schema_version must be an integer"};
    int version = report.at("schema_version").get<int>();
    if (version != kReportSchemaVersion)
        return {false, "schema_version mismatch: report has " + std::to_string(version) +
                           ", expected " + std::to_string(kReportSchemaVersion)};
    if (!report.at("command").is_string()) return {false, "command must be a string"};
    if (!report.at("seed").is_number()) return {false, "seed must be a number"};
    if (!report.at("params").is_object()) return {false, "params must be an object"};
    if (!report.at("outputs").is_object()) return {false, "outputs must be an object"};
    if (!report.at("pass").is_boolean()) return {false, "pass must be a boolean"};
    return {true, ""};
}

ReportValidation validate_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {false, "cannot open " + path};
    Json report;
    try {
        in >> report;
    } catch (const std::exception& e) {
        return {false, std::string("malformed JSON: ") + e.what()};
    }
    return validate_report(report);
}

}  // namespace hofa
