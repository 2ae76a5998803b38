#ifndef GPTCAP_IO_HPP
#define GPTCAP_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gptcap/model.hpp"

namespace gptcap {

using nlohmann::json;

// Rationals travel as JSON integers or "p/q" strings; decimals would lose
// exactness and are rejected.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);

// Model files: {"name", "dim", "primal_rays", "dual_rays", "unit"}.
ConeModel model_from_json(const json& j);
json model_to_json(const ConeModel& m);

// Loads and validates; throws ParseError / InvalidModel.
ModelPtr load_model_file(const std::filesystem::path& path);
void save_model_file(const ConeModel& m, const std::filesystem::path& path);

// Channel files: {"name", "model": <path or inline object>, "alphabet",
// "outputs": one state vector per letter}. A model path resolves relative to
// the channel file's directory.
ClassicalToGPTChannel load_channel_file(const std::filesystem::path& path);

json load_json_file(const std::filesystem::path& path);
void save_json_file(const json& j, const std::filesystem::path& path);

} // namespace gptcap

#endif
