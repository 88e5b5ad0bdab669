#pragma once

#include <stdexcept>
#include <string>

namespace ldtalk {

// Error taxonomy mirrors the CLI exit code contract:
// config 2, dependency 3, data 4, anything else 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dependency_error : std::runtime_error {
    explicit dependency_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller broke an in-process contract (wrong shapes, bad space tag, ...).
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_contract(bool ok, const std::string& msg) {
    if (!ok) throw contract_error(msg);
}

}  // namespace ldtalk
