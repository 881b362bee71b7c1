#pragma once

#include <string>

namespace edgesim {

/// Reads a whole file into memory. Throws IoError with the path on
/// failure.
std::string read_text_file(const std::string& path);

/// Writes (replacing) a whole file. Throws IoError with the path on
/// failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace edgesim
