#include "firerisk/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>

#include "firerisk/ascii_grid.hpp"

namespace firerisk {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

struct SceneEntry {
    std::optional<Date> date;
    std::string mission;
    CloudCover cloud = CloudCover::None;
    std::map<BandId, std::string> band_paths;
    std::string cloud_mask_path;
    int first_line = 0;
};

}  // namespace

std::vector<Scene> load_scene_manifest(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();

    std::map<unsigned, SceneEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError(path, line_no, 0, "expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (value.empty()) throw ParseError(path, line_no, 0, "missing value");

        // key: scene.<n>.<field...>
        if (key.rfind("scene.", 0) != 0)
            throw ParseError(path, line_no, 0, "unknown key '" + key + "'");
        const std::size_t idx_end = key.find('.', 6);
        if (idx_end == std::string::npos)
            throw ParseError(path, line_no, 0, "key '" + key + "' is missing a field");
        unsigned index = 0;
        {
            const char* first = key.data() + 6;
            const char* last = key.data() + idx_end;
            auto [ptr, ec] = std::from_chars(first, last, index);
            if (ec != std::errc() || ptr != last)
                throw ParseError(path, line_no, 0, "bad scene index in '" + key + "'");
        }
        const std::string field = key.substr(idx_end + 1);

        SceneEntry& entry = entries[index];
        if (entry.first_line == 0) entry.first_line = line_no;

        if (field == "date") {
            entry.date = Date::parse(value);
        } else if (field == "cloud") {
            const auto cc = cloud_cover_from_string(value);
            if (!cc)
                throw ParseError(path, line_no, 0,
                                 "cloud must be none, partial or full, got '" + value + "'");
            entry.cloud = *cc;
        } else if (field == "mission") {
            entry.mission = value;
        } else if (field == "cloud_mask") {
            entry.cloud_mask_path = value;
        } else if (field.rfind("band.", 0) == 0) {
            const auto band = band_from_string(field.substr(5));
            if (!band)
                throw ParseError(path, line_no, 0,
                                 "unknown band '" + field.substr(5) + "'");
            entry.band_paths[*band] = value;
        } else {
            throw ParseError(path, line_no, 0, "unknown field '" + field + "'");
        }
    }
    if (entries.empty()) throw ParseError(path, line_no, 0, "manifest lists no scenes");

    std::vector<Scene> scenes;
    scenes.reserve(entries.size());
    for (auto& [index, entry] : entries) {
        if (!entry.date)
            throw ParseError(path, entry.first_line, 0,
                             "scene." + std::to_string(index) + " has no date");
        Scene scene;
        scene.date = *entry.date;
        scene.mission = entry.mission;
        scene.cloud = entry.cloud;
        for (const auto& [band, rel] : entry.band_paths)
            scene.bands.emplace(band, read_ascii_grid((base / rel).string()));
        if (!entry.cloud_mask_path.empty()) {
            const RasterGrid grid = read_ascii_grid((base / entry.cloud_mask_path).string());
            MaskGrid mask(grid.geometry());
            // nodata counts as cloud: a pixel with no usable flag is unusable
            for (int r = 0; r < grid.n_rows(); ++r)
                for (int c = 0; c < grid.n_cols(); ++c)
                    mask.set(r, c, !grid.valid(r, c) || grid.value(r, c) != 0.0);
            scene.cloud_mask = std::move(mask);
        }
        scenes.push_back(std::move(scene));
    }

    std::sort(scenes.begin(), scenes.end(),
              [](const Scene& a, const Scene& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < scenes.size(); ++i)
        if (scenes[i - 1].date == scenes[i].date)
            throw Error("manifest '" + path + "' lists date " + scenes[i].date.to_string() +
                        " twice");
    return scenes;
}

}  // namespace firerisk
