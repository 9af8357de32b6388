#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace chmeta::detail {

/// Element names come through with any namespace prefix stripped.
struct SaxHandlers {
    std::function<void(std::string_view name, const std::map<std::string, std::string>& attrs)> start;
    std::function<void(std::string_view name)> end;
    std::function<void(std::string_view text)> text;
};

/// Runs expat over a complete document. Throws Error(UnreadableFile) with
/// the expat message and line on malformed input.
void parse_xml(std::string_view document, const SaxHandlers& handlers, std::string_view what);

}  // namespace chmeta::detail
