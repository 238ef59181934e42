#pragma once

#include <string>
#include <vector>

namespace configcomplex {

// Outcome of a validator: empty `failures` means every check passed.
struct Finding {
    std::string check;   // short machine-friendly name, e.g. "regularity"
    std::string detail;  // human-readable witness
};

struct Report {
    std::vector<Finding> failures;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    explicit operator bool() const { return ok(); }

    void fail(std::string check, std::string detail) { failures.push_back({std::move(check), std::move(detail)}); }
    void note(std::string text) { notes.push_back(std::move(text)); }
    void merge(const Report& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
    bool has(const std::string& check) const {
        for (const auto& f : failures)
            if (f.check == check) return true;
        return false;
    }
};

}  // namespace configcomplex
