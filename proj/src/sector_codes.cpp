#include "teflow/sector_codes.hpp"

namespace teflow {

// Mirrors data/sector_codes.csv; used only to attach display names to output.
const std::vector<SectorCode>& sector_code_table() {
    static const std::vector<SectorCode> table = {
        {"801010", "CN", "agriculture and forestry"},
        {"801020", "CN", "mining"},
        {"801030", "CN", "chemical"},
        {"801040", "CN", "steel"},
        {"801050", "CN", "non-ferrous metals"},
        {"801080", "CN", "electronic"},
        {"801110", "CN", "household appliances"},
        {"801120", "CN", "food and drink"},
        {"801130", "CN", "textile and apparel"},
        {"801140", "CN", "light manufacturing"},
        {"801150", "CN", "biotechnology"},
        {"801160", "CN", "utilities"},
        {"801170", "CN", "transportation"},
        {"801180", "CN", "real estate"},
        {"801200", "CN", "commercial trade"},
        {"801210", "CN", "leisure and services"},
        {"801230", "CN", "composite"},
        {"801710", "CN", "building materials"},
        {"801720", "CN", "building and decoration"},
        {"801730", "CN", "electrical equipment"},
        {"801740", "CN", "national defense"},
        {"801750", "CN", "computer"},
        {"801760", "CN", "media"},
        {"801770", "CN", "communications"},
        {"801780", "CN", "bank"},
        {"801790", "CN", "non-bank financial"},
        {"801880", "CN", "automobile"},
        {"801890", "CN", "mechanical equipment"},
        {"M3L", "US", "appliances resources"},
        {"BIL", "US", "banking/investment services"},
        {"YPL", "US", "cyclical construction producers"},
        {"CRL", "US", "cyclical consumer services"},
        {"E2L", "US", "energy"},
        {"FBL", "US", "food/beverages"},
        {"HSL", "US", "healthcare services"},
        {"IVL", "US", "industrial and commercial services"},
        {"IGL", "US", "industrial goods"},
        {"MRL", "US", "mineral resources"},
        {"PHL", "US", "pharmaceuticals/MD research"},
        {"REL", "US", "real estate"},
        {"RTL", "US", "retailers"},
        {"TEL", "US", "technology"},
        {"TRL", "US", "transportation"},
        {"U2$", "US", "utilities"},
    };
    return table;
}

std::optional<std::string> sector_display_name(std::string_view code) {
    for (const auto& entry : sector_code_table())
        if (entry.code == code) return std::string(entry.name);
    return std::nullopt;
}

} // namespace teflow
