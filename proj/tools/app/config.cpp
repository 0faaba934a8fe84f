#include "config.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "catalog.hpp"

namespace thermoform::app {

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  if (!obj.at(key).is_number()) throw ConfigError(where + ": '" + key + "' must be a number");
  return obj.at(key).get<double>();
}

std::array<double, 2> range(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  const json& r = obj.at(key);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
    throw ConfigError(where + ": '" + key + "' must be a [lo, hi] pair of numbers");
  }
  return {r[0].get<double>(), r[1].get<double>()};
}

ModelSpec parse_model(const json& m) {
  const std::string where = "model";
  if (!m.is_object()) throw ConfigError("model must be an object");
  reject_unknown_keys(m, {"name", "parameters", "corrupted", "domain"}, where);
  ModelSpec spec;
  if (!m.contains("name") || !m.at("name").is_string()) throw ConfigError("model: missing string 'name'");
  spec.name = m.at("name").get<std::string>();
  if (m.contains("parameters")) {
    const json& p = m.at("parameters");
    if (!p.is_object()) throw ConfigError("model: 'parameters' must be an object");
    for (const auto& [key, value] : p.items()) {
      if (!value.is_number()) throw ConfigError("model.parameters: '" + key + "' must be a number");
      spec.parameters[key] = value.get<double>();
    }
  }
  if (m.contains("corrupted")) {
    if (!m.at("corrupted").is_boolean()) throw ConfigError("model: 'corrupted' must be a boolean");
    spec.corrupted = m.at("corrupted").get<bool>();
  }
  if (m.contains("domain")) {
    const json& d = m.at("domain");
    if (!d.is_object()) throw ConfigError("model: 'domain' must be an object");
    reject_unknown_keys(d, {"s", "v"}, "model.domain");
    const auto s = range(d, "s", "model.domain");
    const auto v = range(d, "v", "model.domain");
    try {
      spec.domain = DomainBox::make(s[0], s[1], v[0], v[1]);
    } catch (const Error& e) {
      throw ConfigError(std::string("model.domain: ") + e.what());
    }
  }
  return spec;
}

Tolerances parse_tolerances(const json& t) {
  if (!t.is_object()) throw ConfigError("tolerances must be an object");
  reject_unknown_keys(t, {"deriv_rel", "quad_abs", "newton_tol", "max_newton_iter"}, "tolerances");
  const Tolerances defaults;
  auto get = [&](const char* key, double fallback) {
    return t.contains(key) ? number(t, key, "tolerances") : fallback;
  };
  int max_iter = defaults.max_newton_iter();
  if (t.contains("max_newton_iter")) {
    if (!t.at("max_newton_iter").is_number_integer()) {
      throw ConfigError("tolerances: 'max_newton_iter' must be an integer");
    }
    max_iter = t.at("max_newton_iter").get<int>();
  }
  try {
    return Tolerances(get("deriv_rel", defaults.deriv_rel()), get("quad_abs", defaults.quad_abs()),
                      get("newton_tol", defaults.newton_tol()), max_iter);
  } catch (const Error& e) {
    throw ConfigError(std::string("tolerances: ") + e.what());
  }
}

}  // namespace

EosModel build_model(const ModelSpec& spec) {
  auto require_none = [&] {
    if (!spec.parameters.empty()) throw ConfigError("model: ideal_gas takes no parameters");
  };
  auto param = [&](const std::string& key) {
    const auto it = spec.parameters.find(key);
    if (it == spec.parameters.end()) throw ConfigError("model.parameters: missing '" + key + "'");
    return it->second;
  };
  try {
    EosModel base = [&] {
      if (spec.name == "ideal_gas") {
        require_none();
        return spec.domain ? ideal_gas(*spec.domain) : ideal_gas();
      }
      if (spec.name == "van_der_waals") {
        for (const auto& [key, value] : spec.parameters) {
          if (key != "a" && key != "b") throw ConfigError("model.parameters: unknown parameter '" + key + "'");
        }
        const double a = param("a"), b = param("b");
        return spec.domain ? van_der_waals(a, b, *spec.domain) : van_der_waals(a, b);
      }
      throw ConfigError("model: unknown model '" + spec.name + "' (expected ideal_gas or van_der_waals)");
    }();
    return spec.corrupted ? corrupted(base) : base;
  } catch (const Error& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  try {
    config.document = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  const json& doc = config.document;
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown_keys(doc, {"model", "tolerances", "derivative_mode", "output_dir", "tasks"}, "config");

  if (!doc.contains("model")) throw ConfigError("config: missing 'model'");
  config.model = parse_model(doc.at("model"));
  const EosModel model = build_model(config.model);

  if (doc.contains("tolerances")) config.tolerances = parse_tolerances(doc.at("tolerances"));
  if (doc.contains("derivative_mode")) {
    if (!doc.at("derivative_mode").is_string()) throw ConfigError("config: 'derivative_mode' must be a string");
    try {
      config.derivative_mode = derivative_mode_from_string(doc.at("derivative_mode").get<std::string>());
    } catch (const Error& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) throw ConfigError("config: 'output_dir' must be a string");
    config.output_dir = doc.at("output_dir").get<std::string>();
  }

  if (!doc.contains("tasks") || !doc.at("tasks").is_array() || doc.at("tasks").empty()) {
    throw ConfigError("config: 'tasks' must be a non-empty array");
  }
  std::set<std::string> ids;
  int index = 0;
  for (const json& t : doc.at("tasks")) {
    const std::string where = "tasks[" + std::to_string(index) + "]";
    if (!t.is_object()) throw ConfigError(where + ": must be an object");
    if (!t.contains("task") || !t.at("task").is_string()) throw ConfigError(where + ": missing string 'task'");
    TaskSpec spec;
    spec.task = t.at("task").get<std::string>();
    if (!find_task(spec.task)) throw ConfigError(where + ": unknown task '" + spec.task + "'");
    spec.id = spec.task + "-" + std::to_string(index);
    if (t.contains("id")) {
      if (!t.at("id").is_string() || t.at("id").get<std::string>().empty()) {
        throw ConfigError(where + ": 'id' must be a non-empty string");
      }
      spec.id = t.at("id").get<std::string>();
      if (spec.id.find_first_of("/\\") != std::string::npos || spec.id == "." || spec.id == "..") {
        throw ConfigError(where + ": 'id' must be usable as a file name");
      }
    }
    if (!ids.insert(spec.id).second) throw ConfigError(where + ": duplicate task id '" + spec.id + "'");
    spec.params = t;
    spec.params.erase("task");
    spec.params.erase("id");
    try {
      validate_task(spec, model);
    } catch (const ConfigError& e) {
      throw ConfigError(where + " (" + spec.task + "): " + e.what());
    }
    config.tasks.push_back(std::move(spec));
    ++index;
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + file.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string config_hash(const json& document) {
  const std::string canonical = document.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char byte[3];
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

}  // namespace thermoform::app
