#include "xml_sax.hpp"

#include <memory>

#include <expat.h>

#include "chmeta/error.hpp"

namespace chmeta::detail {

namespace {

std::string_view local_name(const XML_Char* qname) {
    std::string_view n = qname;
    const auto colon = n.find(':');
    return colon == std::string_view::npos ? n : n.substr(colon + 1);
}

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
    const auto& h = *static_cast<const SaxHandlers*>(user);
    if (!h.start)
        return;
    std::map<std::string, std::string> attrs;
    for (int i = 0; atts[i] != nullptr; i += 2)
        attrs.emplace(std::string(local_name(atts[i])), atts[i + 1]);
    h.start(local_name(name), attrs);
}

void XMLCALL on_end(void* user, const XML_Char* name) {
    const auto& h = *static_cast<const SaxHandlers*>(user);
    if (h.end)
        h.end(local_name(name));
}

void XMLCALL on_text(void* user, const XML_Char* s, int len) {
    const auto& h = *static_cast<const SaxHandlers*>(user);
    if (h.text)
        h.text(std::string_view(s, static_cast<std::size_t>(len)));
}

}  // namespace

void parse_xml(std::string_view document, const SaxHandlers& handlers, std::string_view what) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!parser)
        throw Error(Errc::UnreadableFile, "cannot create XML parser");
    XML_SetUserData(parser.get(), const_cast<SaxHandlers*>(&handlers));
    XML_SetElementHandler(parser.get(), on_start, on_end);
    XML_SetCharacterDataHandler(parser.get(), on_text);
    if (XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE) == XML_STATUS_ERROR) {
        throw Error(Errc::UnreadableFile, std::string(what) + ": " + XML_ErrorString(XML_GetErrorCode(parser.get())) +
                                              " at line " + std::to_string(XML_GetCurrentLineNumber(parser.get())));
    }
}

}  // namespace chmeta::detail
