#pragma once

#include <string>
#include <string_view>

namespace skillkit {

/// Lowercase hex SHA-256 digest; used to key replay fixture files.
std::string sha256_hex(std::string_view data);

} // namespace skillkit
