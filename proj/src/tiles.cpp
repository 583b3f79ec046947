#include "cdc/tiles.hpp"

#include "cdc/errors.hpp"

namespace cdc {
namespace {

constexpr std::array<std::string_view, 9> kTileNames = {"NW", "N", "NE", "W", "O", "E", "SW", "S", "SE"};

}  // namespace

std::string_view to_string(TileName t) { return kTileNames[static_cast<std::size_t>(t)]; }

std::optional<TileName> parse_tile_name(std::string_view s) {
    for (std::size_t i = 0; i < kTileNames.size(); ++i)
        if (kTileNames[i] == s) return static_cast<TileName>(i);
    return std::nullopt;
}

std::uint8_t TileSet::columns() const {
    std::uint8_t mask = 0;
    for (TileName t : kAllTiles)
        if (contains(t)) mask |= static_cast<std::uint8_t>(1U << tile_column(t));
    return mask;
}

std::uint8_t TileSet::rows() const {
    std::uint8_t mask = 0;
    for (TileName t : kAllTiles)
        if (contains(t)) mask |= static_cast<std::uint8_t>(1U << tile_row(t));
    return mask;
}

TileSet TileSet::product(std::uint8_t column_mask, std::uint8_t row_mask) {
    TileSet out;
    for (TileName t : kAllTiles)
        if (((column_mask >> tile_column(t)) & 1U) && ((row_mask >> tile_row(t)) & 1U)) out.insert(t);
    return out;
}

bool TileSet::is_product() const { return *this == product(columns(), rows()); }

bool TileSet::is_edge_connected() const {
    if (empty()) return false;
    std::uint16_t seen = static_cast<std::uint16_t>(bits_ & -bits_);
    std::uint16_t frontier = seen;
    while (frontier != 0) {
        std::uint16_t next = 0;
        for (int i = 0; i < 9; ++i) {
            if (!((frontier >> i) & 1U)) continue;
            const int row = i / 3, col = i % 3;
            if (col > 0) next |= static_cast<std::uint16_t>(1U << (i - 1));
            if (col < 2) next |= static_cast<std::uint16_t>(1U << (i + 1));
            if (row > 0) next |= static_cast<std::uint16_t>(1U << (i - 3));
            if (row < 2) next |= static_cast<std::uint16_t>(1U << (i + 3));
        }
        next &= bits_;
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= next;
    }
    return seen == bits_;
}

std::string TileSet::str() const {
    std::string out;
    for (TileName t : kAllTiles) {
        if (!contains(t)) continue;
        if (!out.empty()) out += ':';
        out += to_string(t);
    }
    return out;
}

TileSet TileSet::parse(std::string_view text) {
    TileSet out;
    if (text.empty()) throw ParseError("empty tile set");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t colon = text.find(':', start);
        if (colon == std::string_view::npos) colon = text.size();
        auto name = parse_tile_name(text.substr(start, colon - start));
        if (!name) throw ParseError("unknown tile name in '" + std::string(text) + "'");
        if (out.contains(*name)) throw ParseError("repeated tile name in '" + std::string(text) + "'");
        out.insert(*name);
        start = colon + 1;
    }
    return out;
}

}  // namespace cdc
