#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace catwords {

struct Check {
    std::string description;
    bool passed;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::vector<Check> checks;
    std::uint64_t words_enumerated = 0;

    std::size_t passed() const;
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }
};

/// Cross-checks the continued-fraction pipeline against enumeration for every
/// length 1..max_length:
///   - word count against the Catalan number,
///   - the oracle monomial multiset against [z^n] gf_full(n, Catalan, n),
///   - each requested letter's histogram against [z^n] letter_gf_series,
///   - bounded counts for h = 1..n against [z^n] bounded_letter_series(h, n),
/// and the determinant identity for depths 1..min(max_length, 10).
/// Independent lengths run concurrently; checks are reported in a fixed order.
VerifyReport run_verify(std::size_t max_length, const std::vector<unsigned>& letters);

} // namespace catwords
