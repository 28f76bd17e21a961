#pragma once

// Brute-force ground truth over Catalan words: words a_1..a_n of positive
// integers with a_1 = 1 and a_{i+1} <= a_i + 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catwords/polyring.hpp"

namespace catwords {

using CatalanWord = std::vector<unsigned>;

bool is_catalan_word(std::span<const unsigned> letters);

/// Streams all Catalan words of a given length (optionally with every letter
/// <= max_letter) in strictly increasing lexicographic order. Only the current
/// word is held in memory.
///
///     WordEnumerator words(4);
///     while (words.next()) use(words.word());
class WordEnumerator {
public:
    explicit WordEnumerator(std::size_t length, std::optional<unsigned> max_letter = std::nullopt);

    /// Advances to the next word; false once the stream is exhausted.
    bool next();
    std::span<const unsigned> word() const { return word_; }

private:
    CatalanWord word_;
    unsigned bound_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<CatalanWord> enumerate_words(std::size_t length,
                                         std::optional<unsigned> max_letter = std::nullopt);

/// Number of words of a given length containing `letter` exactly k times,
/// keyed by k.
struct Histogram {
    unsigned letter;
    std::size_t length;
    std::map<unsigned, std::uint64_t> counts;

    std::uint64_t total() const;
    /// sum_k counts[k] V^k
    Polynomial as_polynomial() const;
};

Histogram letter_histogram(std::size_t length, unsigned letter);

/// sum over words w of length n of prod_j v_j^(occurrences of j in w).
/// Throws UnderTracked when num_vars < length.
Polynomial monomial_multiset(std::size_t length, unsigned num_vars);

/// Words of the given length whose letters are all <= max_letter.
std::uint64_t bounded_count(std::size_t length, unsigned max_letter);

/// "1123", or "1.2.10.11" once any letter reaches 10.
std::string format_word(std::span<const unsigned> letters);

} // namespace catwords
