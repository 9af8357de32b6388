#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace testsupport {

struct XmlNode {
    std::string name;
    std::map<std::string, std::string> attrs;
    std::vector<XmlNode> children;
    std::string text;  // concatenated character data directly inside this element

    std::vector<const XmlNode*> all(std::string_view child) const;
    const XmlNode* first(std::string_view child) const;
    std::string attr(std::string_view key) const;
};

struct XmlDocument {
    bool well_formed = false;
    std::string error;
    XmlNode root;
};

/// Builds a tree with expat; `well_formed` is false with the expat message
/// on any error.
XmlDocument read_xml(std::string_view doc);

/// Structural rules of the finding aid:
///  - root `ead` in the EAD 2002 namespace with eadheader(eadid, filedesc/titlestmt/titleproper) and archdesc;
///  - archdesc and every `c` carry a level, open with a `did` holding a unittitle;
///  - file-level components sit directly under dsc; item-level ones directly under a file;
///  - every unitdate has a `normal` attribute of the form first/last or first/..
/// Returns one message per violation.
std::vector<std::string> ead_violations(const XmlNode& root);

}  // namespace testsupport
