#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace chmeta {

/// Document categories of the collection scheme. The enumerator value is the
/// digit used as the first component of a document number.
enum class Category : std::uint8_t {
    Portraits = 1,
    OutgoingCorrespondence = 2,
    CreativeWorks = 3,
    PersonalMaterials = 4,
    HistoricalMaterials = 5,
    PrintedMaterials = 6,
    IncomingCorrespondence = 7,
    ForeignMaterials = 8,
    LibraryMaterials = 9,
};

inline constexpr std::array<Category, 9> kAllCategories = {
    Category::Portraits,           Category::OutgoingCorrespondence, Category::CreativeWorks,
    Category::PersonalMaterials,   Category::HistoricalMaterials,    Category::PrintedMaterials,
    Category::IncomingCorrespondence, Category::ForeignMaterials,    Category::LibraryMaterials,
};

constexpr int to_digit(Category c) noexcept { return static_cast<int>(c); }

std::string_view label(Category c) noexcept;
std::optional<Category> category_from_code(int code) noexcept;
std::optional<Category> category_from_label(std::string_view label) noexcept;

/// Small bitset over the nine categories.
class CategorySet {
public:
    constexpr CategorySet() = default;
    constexpr CategorySet(std::initializer_list<Category> cs) {
        for (auto c : cs)
            insert(c);
    }

    static constexpr CategorySet all() {
        CategorySet s;
        for (auto c : kAllCategories)
            s.insert(c);
        return s;
    }

    constexpr void insert(Category c) { bits_ |= bit(c); }
    constexpr bool contains(Category c) const { return (bits_ & bit(c)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool operator==(const CategorySet&) const = default;

    std::vector<Category> members() const;

private:
    static constexpr std::uint16_t bit(Category c) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
    }
    std::uint16_t bits_ = 0;
};

}  // namespace chmeta
