#include "checkpoint.hpp"

#include <fstream>

#include "error.hpp"

namespace cantor {

using nlohmann::json;

void save_checkpoint(run_geometry& geo, const std::string& path, uint32_t depth) {
    json entries = json::array();
    for (const auto& [index, stream] : geo.sigma0()->materialized()) {
        std::string digits = stream->cached_prefix();
        if (digits.empty())
            continue;
        entries.push_back({{"index", index},
                           {"value", algebraic_json(geo.enumeration().at(index - 1))},
                           {"digits", digits}});
    }
    json doc = {{"schema", 1},
                {"kind", "checkpoint"},
                {"window", {{"lo", geo.window_lo().get_str()}, {"hi", geo.window_hi().get_str()}}},
                {"depth", depth},
                {"base_digits", entries}};
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw error(errc::io_error, "cannot open checkpoint for writing: " + path);
    out << doc.dump() << "\n";
    if (!out)
        throw error(errc::io_error, "checkpoint write failed: " + path);
}

void load_checkpoint(run_geometry& geo, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::io_error, "cannot open checkpoint: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("malformed checkpoint: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "checkpoint" || doc.value("schema", 0) != 1)
        throw error(errc::parse_error, "not a checkpoint file");
    if (doc.at("window").at("lo").get<std::string>() != geo.window_lo().get_str() ||
        doc.at("window").at("hi").get<std::string>() != geo.window_hi().get_str())
        throw error(errc::invalid_argument, "checkpoint window disagrees with the configured window");
    for (const json& e : doc.at("base_digits")) {
        uint64_t index = e.at("index").get<uint64_t>();
        std::string digits = e.at("digits").get<std::string>();
        if (index < 1)
            throw error(errc::parse_error, "checkpoint index must be >= 1");
        // the recorded carrier must agree with this run's enumeration
        if (e.contains("value") &&
            e.at("value") != algebraic_json(geo.enumeration().at(index - 1)))
            throw error(errc::parse_error,
                        "checkpoint entry " + std::to_string(index) +
                            " disagrees with the canonical enumeration");
        geo.sigma0()->at(index)->seed_prefix(digits);
    }
}

} // namespace cantor
