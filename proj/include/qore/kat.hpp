#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qore/bytes.hpp"

namespace qore {

/// One stanza of a response-style vector file (`name = hexvalue` lines,
/// `#` comments, stanzas separated by blank lines / repeated keys).
struct KatVector {
    std::map<std::string, std::string> fields;

    bool has(const std::string& name) const { return fields.count(name) != 0; }
    const std::string& raw(const std::string& name) const;
    Bytes hex(const std::string& name) const;
    long long integer(const std::string& name) const;
};

std::vector<KatVector> load_kat_file(const std::filesystem::path& path);

}  // namespace qore
