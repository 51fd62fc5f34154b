#pragma once

// Named diagram templates: files `<name>.kirby` in the registry directory plus the
// generated family `twist-knot:<n>`.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kirbykit/diagram.hpp"

namespace kirbykit {

/// $KIRBYKIT_REGISTRY if set, else the directory shipped with the sources.
std::filesystem::path registry_dir();

/// Sorted template names, followed by the pattern "twist-knot:<n>".
std::vector<std::string> registry_names();

/// Loads a template; throws PreconditionError for unknown names and ParseError
/// (prefixed with the file name) for malformed files.
Diagram registry_load(std::string_view name);

/// The template's `meta status` ("complete", "needs-figure-data", ...), or "complete"
/// when absent.
std::string registry_status(const Diagram& d);

/// Reads a file into a diagram; ParseError messages are prefixed with the path.
Diagram load_diagram_file(const std::filesystem::path& path);

}  // namespace kirbykit
