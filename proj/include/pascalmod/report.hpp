#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace pascalmod {

/// Outcome of a law verified over a finite range.
struct CheckReport {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string failure;  // first counterexample, empty when ok

    void fail(std::string what) {
        if (ok) failure = std::move(what);
        ok = false;
    }
};

}  // namespace pascalmod
