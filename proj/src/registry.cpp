#include "kirbykit/registry.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kirbykit/error.hpp"
#include "kirbykit/invariants.hpp"

#ifndef KIRBYKIT_DEFAULT_REGISTRY
#define KIRBYKIT_DEFAULT_REGISTRY "registry"
#endif

namespace kirbykit {

namespace {

constexpr std::string_view kTwistPrefix = "twist-knot:";
constexpr std::string_view kExtension = ".kirby";

}  // namespace

std::filesystem::path registry_dir() {
  if (const char* env = std::getenv("KIRBYKIT_REGISTRY"); env && *env) return env;
  return KIRBYKIT_DEFAULT_REGISTRY;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(registry_dir(), ec))
    if (entry.is_regular_file() && entry.path().extension() == kExtension) names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  names.push_back(std::string(kTwistPrefix) + "<n>");
  return names;
}

Diagram load_diagram_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_diagram(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Diagram registry_load(std::string_view name) {
  if (name.substr(0, kTwistPrefix.size()) == kTwistPrefix) {
    const std::string_view digits = name.substr(kTwistPrefix.size());
    int n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty() || n < 1)
      throw PreconditionError("twist-knot entries are twist-knot:<n> with n ≥ 1");
    return twist_knot(n);
  }
  if (name.empty() || name.find('/') != std::string_view::npos || name.find("..") != std::string_view::npos)
    throw PreconditionError("bad registry name '" + std::string(name) + "'");
  const std::filesystem::path file = registry_dir() / (std::string(name) + std::string(kExtension));
  if (!std::filesystem::is_regular_file(file))
    throw PreconditionError("no registry entry '" + std::string(name) + "' in " + registry_dir().string());
  return load_diagram_file(file);
}

std::string registry_status(const Diagram& d) {
  const auto it = d.meta().find("status");
  return it == d.meta().end() ? "complete" : it->second;
}

}  // namespace kirbykit
