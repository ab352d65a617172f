#pragma once

#include <stdexcept>
#include <string>

namespace lingomotion {

// Single exception type for all pipeline failures. The message is a single
// line, machine-parseable as "<category>: <detail>".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    Error(const std::string& category, const std::string& detail)
        : std::runtime_error(category + ": " + detail) {}
};

}  // namespace lingomotion
