#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace teflow {

struct SectorCode {
    std::string_view code;
    std::string_view market; // "CN" or "US"
    std::string_view name;
};

// Bundled sector-code table (28 Chinese six-digit codes, 16 USA mnemonics),
// used only for labeling output.
const std::vector<SectorCode>& sector_code_table();

std::optional<std::string> sector_display_name(std::string_view code);

} // namespace teflow
