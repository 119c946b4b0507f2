#pragma once

// CLI11 config formatter reading a JSON object. Top-level keys are global
// flags; a nested object named after a subcommand holds that subcommand's
// flags and selects it.

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace ratlrc::cli {

class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    return dump(app, default_also).dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> out;
    collect(j, {}, out);
    return out;
  }

 private:
  static std::string scalar(const nlohmann::json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config value for \"" + key + "\" must be a scalar or a list of scalars");
  }

  static void collect(const nlohmann::json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_object()) {
        auto path = parents;
        path.push_back(key);
        // "++" / "--" bracket a section so CLI11 can trigger the subcommand.
        out.push_back({path, "++", {}});
        collect(v, path, out);
        out.push_back({path, "--", {}});
        continue;
      }
      CLI::ConfigItem item{parents, key, {}};
      if (v.is_array())
        for (const auto& e : v) item.inputs.push_back(scalar(e, key));
      else
        item.inputs.push_back(scalar(v, key));
      out.push_back(std::move(item));
    }
  }

  static nlohmann::json dump(const CLI::App* app, bool default_also) {
    nlohmann::json j = nlohmann::json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        if (res.size() == 1)
          j[name] = res.front();
        else
          j[name] = res;
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({}))
      if (sub->count() > 0) j[sub->get_name()] = dump(sub, default_also);
    return j;
  }
};

}  // namespace ratlrc::cli
