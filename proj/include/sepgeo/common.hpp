#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepgeo {

/// Base-2 log used by every parameter schedule. Values <= 2 clamp to 1 so
/// that schedules never degenerate on tiny inputs.
inline double clamped_log2(double x) {
    return x <= 2.0 ? 1.0 : std::log2(x);
}

/// Exact rational balance threshold (default 2/3). Kept as a fraction so the
/// balance check stays integer-exact.
struct BalanceRatio {
    long long num = 2;
    long long den = 3;

    /// side of `size` is acceptable within a piece of `total` vertices.
    /// A one-vertex piece is always balanced (no split can exist).
    bool side_ok(long long size, long long total) const {
        if (total <= 1) return true;
        return size * den <= total * num;
    }
};

/// Outcome of a validator: a list of named checks, each pass/fail.
struct CheckReport {
    struct Entry {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    std::vector<Entry> entries;

    void add(std::string name, bool pass, std::string detail = "") {
        entries.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    const Entry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

/// Malformed input file (edge list, segment CSV, certificate JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A separator oracle handed to the division builder broke its contract
/// (invalid certificate, size bound exceeded, or degenerate split).
class OracleBreach : public std::runtime_error {
public:
    OracleBreach(const std::string& what, std::string certificate_json)
        : std::runtime_error(what), certificate_json_(std::move(certificate_json)) {}

    const std::string& certificate_json() const { return certificate_json_; }

private:
    std::string certificate_json_;
};

}  // namespace sepgeo
