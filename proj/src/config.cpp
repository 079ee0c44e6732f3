#include "opf/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "opf/error.hpp"

namespace opf {

namespace {

int positive(const nlohmann::json& v, const std::string& key, long long hi = 64) {
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > hi)
    throw Error("config: \"" + key + "\" must be an integer in [1," + std::to_string(hi) + "]");
  return v.get<int>();
}

}  // namespace

Bounds load_bounds(const std::optional<std::string>& path) {
  Bounds b;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw Error("config: cannot open " + *path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw Error("config: top level must be an object");
    for (const auto& [key, v] : j.items()) {
      if (key == "max_n") b.max_n = positive(v, key);
      else if (key == "big_max_n") b.big_max_n = positive(v, key);
      else if (key == "max_order") b.max_order = positive(v, key);
      else if (key == "identity_labels") b.identity_labels = positive(v, key);
      else if (key == "dend_leaves") b.dend_leaves = positive(v, key);
      else if (key == "square_leaves") b.square_leaves = positive(v, key);
      else if (key == "max_matrix_entries") b.max_matrix_entries = positive(v, key, 4096);
      else throw Error("config: unknown key \"" + key + "\"");
    }
  }
  if (const char* env = std::getenv("OPERAD_FOREST_MAX_N"); env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 64) throw Error("OPERAD_FOREST_MAX_N must be an integer in [1,64]");
    b.max_n = static_cast<int>(v);
    b.big_max_n = std::max(b.big_max_n, b.max_n);
  }
  return b;
}

}  // namespace opf
