#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cdc {

/// The nine tiles around a reference box, in row-major order (north row first).
enum class TileName : std::uint8_t { NW, N, NE, W, O, E, SW, S, SE };

inline constexpr std::array<TileName, 9> kAllTiles = {
    TileName::NW, TileName::N, TileName::NE, TileName::W, TileName::O,
    TileName::E,  TileName::SW, TileName::S, TileName::SE};

/// Column 0..2 (west, middle, east) and row 0..2 (north, middle, south).
constexpr int tile_column(TileName t) { return static_cast<int>(t) % 3; }
constexpr int tile_row(TileName t) { return static_cast<int>(t) / 3; }
constexpr TileName tile_at(int row, int column) { return static_cast<TileName>(row * 3 + column); }

std::string_view to_string(TileName t);
std::optional<TileName> parse_tile_name(std::string_view s);

/// A set of tile names stored as a 9-bit mask (bit i = TileName i). A nonempty
/// TileSet is the serialized form of a direction relation matrix.
class TileSet {
public:
    constexpr TileSet() = default;
    constexpr explicit TileSet(std::uint16_t bits) : bits_(bits & 0x1FF) {}
    constexpr TileSet(std::initializer_list<TileName> tiles) {
        for (TileName t : tiles) insert(t);
    }

    [[nodiscard]] constexpr std::uint16_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr bool contains(TileName t) const { return (bits_ >> static_cast<int>(t)) & 1U; }
    [[nodiscard]] int size() const { return __builtin_popcount(bits_); }
    constexpr void insert(TileName t) { bits_ |= static_cast<std::uint16_t>(1U << static_cast<int>(t)); }
    constexpr void erase(TileName t) { bits_ &= static_cast<std::uint16_t>(~(1U << static_cast<int>(t))); }

    /// Columns (bit 0 = west, 1 = middle, 2 = east) touched by the set.
    [[nodiscard]] std::uint8_t columns() const;
    /// Rows (bit 0 = north, 1 = middle, 2 = south) touched by the set.
    [[nodiscard]] std::uint8_t rows() const;
    /// True when the set equals columns() x rows(), i.e. a single box can realize it.
    [[nodiscard]] bool is_product() const;
    /// Edge-connectivity of the selected cells in the 3x3 tile grid.
    [[nodiscard]] bool is_edge_connected() const;

    /// Colon-joined names in canonical row-major order, e.g. "N:NE:E".
    [[nodiscard]] std::string str() const;
    /// Accepts names in any order; rejects empty input, unknown names and repeats.
    static TileSet parse(std::string_view text);

    static TileSet product(std::uint8_t column_mask, std::uint8_t row_mask);

    friend constexpr bool operator==(TileSet, TileSet) = default;
    friend constexpr auto operator<=>(TileSet a, TileSet b) { return a.bits_ <=> b.bits_; }
    friend constexpr TileSet operator|(TileSet a, TileSet b) { return TileSet(a.bits_ | b.bits_); }
    friend constexpr TileSet operator&(TileSet a, TileSet b) { return TileSet(a.bits_ & b.bits_); }
    TileSet& operator|=(TileSet o) { bits_ |= o.bits_; return *this; }

private:
    std::uint16_t bits_ = 0;
};

}  // namespace cdc
