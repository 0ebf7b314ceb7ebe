#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmapgen::preview {

std::string base64_encode(std::span<const std::uint8_t> data);

// Accepts plain base64 or a data URL ("data:image/png;base64,..."). ASCII
// whitespace is ignored. Returns nullopt on malformed input.
std::optional<std::vector<std::uint8_t>> base64_decode(std::string_view text);

}  // namespace nmapgen::preview
