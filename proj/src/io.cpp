#include "gptcap/io.hpp"

#include <fstream>

namespace gptcap {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected integer or \"p/q\" string, got " + j.dump());
}

json rational_to_json(const Rational& r) {
    if (denominator(r) == 1 && numerator(r) >= -(1LL << 53) && numerator(r) <= (1LL << 53))
        return json(static_cast<long long>(numerator(r)));
    return json(rat_str(r));
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    Vec v;
    v.reserve(j.size());
    for (const auto& entry : j) v.push_back(rational_from_json(entry));
    return v;
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rational_to_json(x));
    return arr;
}

ConeModel model_from_json(const json& j) {
    ConeModel m;
    try {
        m.name = j.value("name", std::string("unnamed"));
        m.dim = j.at("dim").get<int>();
        for (const auto& ray : j.at("primal_rays")) m.primal_rays.push_back(vec_from_json(ray));
        for (const auto& ray : j.at("dual_rays")) m.dual_rays.push_back(vec_from_json(ray));
        m.unit = vec_from_json(j.at("unit"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("model JSON: ") + e.what());
    }
    return m;
}

json model_to_json(const ConeModel& m) {
    json j;
    j["name"] = m.name;
    j["dim"] = m.dim;
    j["primal_rays"] = json::array();
    for (const auto& ray : m.primal_rays) j["primal_rays"].push_back(vec_to_json(ray));
    j["dual_rays"] = json::array();
    for (const auto& ray : m.dual_rays) j["dual_rays"].push_back(vec_to_json(ray));
    j["unit"] = vec_to_json(m.unit);
    return j;
}

json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

ModelPtr load_model_file(const std::filesystem::path& path) {
    return make_model(model_from_json(load_json_file(path)));
}

void save_model_file(const ConeModel& m, const std::filesystem::path& path) {
    save_json_file(model_to_json(m), path);
}

ClassicalToGPTChannel load_channel_file(const std::filesystem::path& path) {
    json j = load_json_file(path);
    ClassicalToGPTChannel ch;
    try {
        ch.name = j.value("name", path.stem().string());
        const json& model = j.at("model");
        if (model.is_string())
            ch.model = load_model_file(path.parent_path() / model.get<std::string>());
        else
            ch.model = make_model(model_from_json(model));
        for (const auto& label : j.at("alphabet")) ch.alphabet.push_back(label.get<std::string>());
        const json& outputs = j.at("outputs");
        if (outputs.size() != ch.alphabet.size())
            throw ParseError("channel has " + std::to_string(ch.alphabet.size()) +
                             " letters but " + std::to_string(outputs.size()) + " outputs");
        for (const auto& out : outputs)
            ch.outputs.push_back(State::make(ch.model, vec_from_json(out)));
    } catch (const json::exception& e) {
        throw ParseError(std::string("channel JSON: ") + e.what());
    }
    if (ch.alphabet.empty()) throw ParseError("channel alphabet is empty");
    return ch;
}

} // namespace gptcap
