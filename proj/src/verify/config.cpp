#include "brtk/verify/config.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "brtk/error.hpp"

namespace brtk {

  namespace {

    template <typename Visit>
    void fields(VerifyConfig& c, Visit&& visit) {
      visit("seed", c.seed);
      visit("budget", c.budget);
      visit("exhaustive_max_group_order", c.exhaustive_max_group_order);
      visit("exhaustive_max_points", c.exhaustive_max_points);
      visit("catalog_max_group_order", c.catalog_max_group_order);
      visit("catalog_max_points", c.catalog_max_points);
      visit("extension_exhaustive_max_order", c.extension_exhaustive_max_order);
      visit("extension_samples", c.extension_samples);
      visit("premorphisms_per_group", c.premorphisms_per_group);
      visit("explore_non_monoid", c.explore_non_monoid);
      visit("topology_max_points", c.topology_max_points);
      visit("discrete_max_points", c.discrete_max_points);
      visit("domain_meet_samples", c.domain_meet_samples);
      visit("pi_bound", c.pi_bound);
    }

  }  // namespace

  VerifyConfig parse_config(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ValidationError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
      throw ValidationError("config: expected a JSON object");
    }
    VerifyConfig c;
    std::size_t  known = 0;
    fields(c, [&](char const* key, auto& field) {
      if (!j.contains(key)) {
        return;
      }
      ++known;
      auto const& value = j.at(key);
      using Field       = std::remove_reference_t<decltype(field)>;
      if (std::is_same_v<Field, bool> ? !value.is_boolean() : !value.is_number_unsigned()) {
        throw ValidationError(std::string("config: bad value for '") + key + "'");
      }
      try {
        field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
      } catch (nlohmann::json::exception const&) {
        throw ValidationError(std::string("config: bad value for '") + key + "'");
      }
    });
    if (known != j.size()) {
      for (auto const& [key, value] : j.items()) {
        bool found = false;
        fields(c, [&](char const* k, auto&) { found = found || key == k; });
        if (!found) {
          throw ValidationError("config: unknown key '" + key + "'");
        }
      }
    }
    if (c.exhaustive_max_group_order > 4 || c.catalog_max_group_order > 4 || c.catalog_max_points > 3
        || c.exhaustive_max_points > 3 || c.topology_max_points > 4 || c.discrete_max_points > 4
        || c.extension_exhaustive_max_order > 3) {
      throw ValidationError("config: a size exceeds what the suites support");
    }
    return c;
  }

  VerifyConfig load_config(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ValidationError("cannot read config '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
  }

  std::string format_config(VerifyConfig const& c) {
    nlohmann::ordered_json j;
    VerifyConfig           copy = c;
    fields(copy, [&](char const* key, auto& field) { j[key] = field; });
    return j.dump(2) + "\n";
  }

}  // namespace brtk
