#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace effalg {

/// One `sum x y = z` line of an EAF document, by element name.
struct DeclaredSum {
    std::string left;
    std::string right;
    std::string result;
    std::size_t line = 0;

    bool operator==(const DeclaredSum& other) const {
        return left == other.left && right == other.right && result == other.result;
    }
};

/// Parsed but not yet validated EAF v1 document.
struct EafDocument {
    std::string version = "v1";
    std::vector<std::string> names;
    std::string zero;
    std::string one;
    std::vector<DeclaredSum> sums;
};

}  // namespace effalg
