#include <cctype>

#include "chmeta/sec/catalog.hpp"
#include "chmeta/util/text.hpp"

namespace chmeta {

namespace {

struct UrlParts {
    std::string scheme;  // lowercased
    std::string host;    // lowercased, no port, no leading "www."
    std::string path;    // from the first '/' after the host, query/fragment dropped
};

std::optional<UrlParts> split_url(std::string_view url) {
    if (url.empty())
        return std::nullopt;
    for (char c : url)
        if (std::isspace(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) < 0x20)
            return std::nullopt;

    const auto colon = url.find(':');
    if (colon == std::string_view::npos || colon == 0)
        return std::nullopt;
    const auto scheme = url.substr(0, colon);
    if (!std::isalpha(static_cast<unsigned char>(scheme.front())))
        return std::nullopt;
    for (char c : scheme)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return std::nullopt;
    if (url.substr(colon, 3) != "://")
        return std::nullopt;

    auto rest = url.substr(colon + 3);
    const auto host_end = rest.find_first_of("/?#");
    auto authority = rest.substr(0, host_end);
    if (const auto at = authority.rfind('@'); at != std::string_view::npos)
        authority = authority.substr(at + 1);
    if (const auto port = authority.find(':'); port != std::string_view::npos) {
        const auto digits = authority.substr(port + 1);
        if (!digits.empty() && !text::is_digits(digits))
            return std::nullopt;
        authority = authority.substr(0, port);
    }
    if (authority.empty() || authority.front() == '.' || authority.back() == '.')
        return std::nullopt;
    for (char c : authority)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.' && static_cast<unsigned char>(c) < 0x80)
            return std::nullopt;

    UrlParts parts;
    parts.scheme = text::to_lower_ascii(scheme);
    parts.host = text::to_lower_ascii(authority);
    if (parts.host.rfind("www.", 0) == 0)
        parts.host = parts.host.substr(4);
    if (host_end != std::string_view::npos) {
        auto path = rest.substr(host_end);
        path = path.substr(0, path.find_first_of("?#"));
        parts.path = std::string(path);
    }
    return parts;
}

bool host_is(std::string_view host, std::string_view domain) {
    if (host == domain)
        return true;
    return host.size() > domain.size() && host.substr(host.size() - domain.size()) == domain &&
           host[host.size() - domain.size() - 1] == '.';
}

std::optional<Authority> classify(const UrlParts& u) {
    if (host_is(u.host, "geonames.org"))
        return Authority::Geonames;
    if (host_is(u.host, "d-nb.info"))
        return Authority::Gnd;
    if (host_is(u.host, "wikidata.org"))
        return Authority::Wikidata;
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Authority a) noexcept {
    switch (a) {
    case Authority::Geonames: return "GEONAMES";
    case Authority::Gnd: return "GND";
    case Authority::Wikidata: return "WIKIDATA";
    }
    return "";
}

UrlLint lint_authority_url(std::string_view url, Sheet sheet, int row, std::string_view column) {
    UrlLint out;
    auto finding = [&](Severity sev, std::string_view c, std::string msg) {
        out.findings.push_back(Diagnostic{sev, std::string(c), sheet, row, std::string(column), std::move(msg)});
    };
    const auto parts = split_url(url);
    if (!parts) {
        finding(Severity::Error, code::kUrlMalformed, "'" + std::string(url) + "' is not an absolute URL");
        return out;
    }
    if (parts->scheme != "http" && parts->scheme != "https") {
        finding(Severity::Error, code::kUrlScheme,
                "'" + std::string(url) + "' uses scheme " + parts->scheme + ", expected http or https");
        return out;
    }
    out.authority = classify(*parts);
    if (!out.authority)
        finding(Severity::Warning, code::kUrlUnrecognizedAuthority,
                "host " + parts->host + " is not a known authority (GND, Geonames, Wikidata)");
    return out;
}

std::optional<std::string> authority_local_id(std::string_view url) {
    const auto parts = split_url(url);
    if (!parts)
        return std::nullopt;
    const auto auth = classify(*parts);
    if (!auth)
        return std::nullopt;
    auto segments = text::split(parts->path, '/');
    std::erase_if(segments, [](const std::string& s) { return s.empty(); });
    switch (*auth) {
    case Authority::Geonames:
        for (const auto& s : segments)
            if (text::is_digits(s))
                return s;
        break;
    case Authority::Gnd:
        if (segments.size() >= 2 && segments[0] == "gnd")
            return segments[1];
        break;
    case Authority::Wikidata:
        if (!segments.empty() && segments.back().size() > 1 &&
            (segments.back()[0] == 'Q' || segments.back()[0] == 'P') &&
            text::is_digits(std::string_view(segments.back()).substr(1)))
            return segments.back();
        break;
    }
    return std::nullopt;
}

}  // namespace chmeta
