#pragma once

#include <stdexcept>
#include <string>

namespace jetrank {

struct RetriesExhausted : std::runtime_error {
    explicit RetriesExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SubsetCapExceeded : std::runtime_error {
    explicit SubsetCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct UnsortedInput : std::invalid_argument {
    explicit UnsortedInput(const std::string& what) : std::invalid_argument(what) {}
};

struct NotCovered : std::invalid_argument {
    explicit NotCovered(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeTooHighForModulus : std::invalid_argument {
    explicit DegreeTooHighForModulus(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace jetrank
