#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace toruscolor {

// Malformed or inconsistent input (bad file, unknown vertex, invalid rotation...).
// CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a configured search bound. CLI maps this to exit code 3.
struct bound_exceeded : std::runtime_error {
    explicit bound_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A required structural hypothesis fails (e.g. the input contains a 6-cycle).
// Carries one message per violated hypothesis. CLI maps this to exit code 1.
struct hypothesis_error : std::runtime_error {
    std::vector<std::string> violations;
    explicit hypothesis_error(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "hypothesis violation:";
        for (const auto& x : v) s += " [" + x + "]";
        return s;
    }
};

} // namespace toruscolor
