#pragma once

#include <string>
#include <vector>

#include "sextic/groups/presentation.hpp"

namespace sextic {

/// Directory holding corpus/*.pres; the SEXTIC_DATA_DIR environment variable
/// overrides the build-time default.
std::string data_dir();

/// Names of the shipped presentations (file stems under corpus/).
std::vector<std::string> corpus_names();

Presentation corpus_presentation(const std::string& name);

}  // namespace sextic
