#pragma once

#include <functional>
#include <iosfwd>
#include <string>

namespace sna {

std::string read_file(const std::string& path);

// Writes through a temp file in the same directory and renames into place,
// so a failing stage never leaves a truncated artifact.
void atomic_write_file(const std::string& path,
                       const std::function<void(std::ostream&)>& writer);
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace sna
