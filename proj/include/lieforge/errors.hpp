#ifndef LIEFORGE_ERRORS_HPP
#define LIEFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieforge {

// Bad arguments, malformed files, unknown names. CLI maps this to exit 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A constructed object violates its own closure rules.
struct build_error : std::runtime_error {
    explicit build_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root data does not form a recognizable root system.
struct classification_error : std::runtime_error {
    explicit classification_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lieforge

#endif
