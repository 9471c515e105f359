#include "morsewig/io.hpp"

#include <charconv>
#include <chrono>
#include <fstream>

#include "morsewig/errors.hpp"

namespace morsewig {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_field_csv(const std::string& path, const WignerField& field) {
    std::ofstream out(path);
    if (!out) throw Error("write_field_csv: cannot open " + path);
    out << "x,p,re,im,err\n";
    for (size_t i = 0; i < field.x.size(); ++i) {
        for (size_t j = 0; j < field.p.size(); ++j) {
            size_t idx = i * field.p.size() + j;
            out << format_double(field.x[i]) << ',' << format_double(field.p[j])
                << ',' << format_double(field.values[idx].real()) << ','
                << format_double(field.values[idx].imag()) << ','
                << format_double(field.err[idx]) << '\n';
        }
    }
}

static nlohmann::ordered_json label_json(const SpectralLabel& l) {
    if (l.is_bound()) return {{"kind", "bound"}, {"nu", l.nu}};
    return {{"kind", "scattering"}, {"k", l.k}};
}

nlohmann::ordered_json field_to_json(const WignerField& field,
                                     const MorseSystem& sys,
                                     const SpectralLabel& left,
                                     const SpectralLabel& right,
                                     const ContourSpec& contour) {
    nlohmann::ordered_json j;
    j["schema"] = "moyal-morse/1";
    nlohmann::json sysj;
    to_json(sysj, sys);
    j["system"] = sysj;
    j["left"] = label_json(left);
    j["right"] = label_json(right);
    j["contour"] = {{"c", contour.c},
                    {"half_length", contour.half_length},
                    {"nodes_per_unit", contour.nodes_per_unit},
                    {"rel_tol", contour.rel_tol}};
    j["convention"] = "exp(-i y p)";
    j["normalized"] = field.normalized;
    j["x"] = field.x;
    j["p"] = field.p;
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const cplx& v : field.values)
        vals.push_back({v.real(), v.imag()});
    j["values"] = vals;
    j["err"] = field.err;
    j["ok"] = field.ok;
    return j;
}

WignerField field_from_json(const nlohmann::ordered_json& j) {
    if (j.value("schema", "") != std::string("moyal-morse/1"))
        throw Error("field_from_json: unknown schema");
    WignerField f;
    f.x = j.at("x").get<std::vector<double>>();
    f.p = j.at("p").get<std::vector<double>>();
    for (const auto& v : j.at("values"))
        f.values.push_back(cplx(v.at(0).get<double>(), v.at(1).get<double>()));
    f.err = j.at("err").get<std::vector<double>>();
    f.ok = j.at("ok").get<std::vector<uint8_t>>();
    f.normalized = j.value("normalized", false);
    if (f.values.size() != f.x.size() * f.p.size())
        throw Error("field_from_json: shape mismatch");
    return f;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("file_digest: cannot open " + path);
    uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void write_manifest(const std::string& path, const RunManifest& m) {
    nlohmann::ordered_json j;
    j["schema"] = "moyal-morse/manifest/1";
    j["command_line"] = m.command_line;
    j["version"] = m.version;
    j["timestamp"] = m.timestamp;
    j["config"] = m.config;
    nlohmann::ordered_json outs = nlohmann::ordered_json::array();
    for (const std::string& f : m.outputs)
        outs.push_back({{"path", f}, {"digest", file_digest(f)}});
    j["outputs"] = outs;
    std::ofstream out(path);
    if (!out) throw Error("write_manifest: cannot open " + path);
    out << j.dump(2) << "\n";
}

}  // namespace morsewig
