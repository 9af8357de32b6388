#include "chmeta/model/category.hpp"

namespace chmeta {

namespace {

constexpr std::array<std::string_view, 9> kLabels = {
    "Portraits, images, and drawings",
    "Outgoing correspondence",
    "Creative works (literary and other)",
    "Personal materials",
    "Historical materials, diplomas",
    "Printed materials and press clippings",
    "Incoming correspondence",
    "Foreign materials (notes about individuals, various letters)",
    "Library materials (covers, bookmarks, historical catalog cards)",
};

}  // namespace

std::string_view label(Category c) noexcept {
    return kLabels[static_cast<std::size_t>(to_digit(c) - 1)];
}

std::optional<Category> category_from_code(int code) noexcept {
    if (code < 1 || code > 9)
        return std::nullopt;
    return static_cast<Category>(code);
}

std::optional<Category> category_from_label(std::string_view text) noexcept {
    for (auto c : kAllCategories)
        if (label(c) == text)
            return c;
    return std::nullopt;
}

std::vector<Category> CategorySet::members() const {
    std::vector<Category> out;
    for (auto c : kAllCategories)
        if (contains(c))
            out.push_back(c);
    return out;
}

}  // namespace chmeta
