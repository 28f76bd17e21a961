#include "catwords/oracle.hpp"

#include <algorithm>
#include <limits>

#include "catwords/errors.hpp"

namespace catwords {

bool is_catalan_word(std::span<const unsigned> letters)
{
    if (letters.empty()) return true;
    if (letters.front() != 1) return false;
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i] < 1 || letters[i] > letters[i - 1] + 1) return false;
    }
    return true;
}

WordEnumerator::WordEnumerator(std::size_t length, std::optional<unsigned> max_letter)
    : word_(length, 1u), bound_(max_letter.value_or(std::numeric_limits<unsigned>::max()))
{
    if (bound_ == 0 && length > 0) done_ = true;
}

bool WordEnumerator::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    // Bump the rightmost position that can still grow, reset the suffix to 1s.
    for (std::size_t pos = word_.size(); pos-- > 1;) {
        const unsigned limit = std::min(word_[pos - 1] + 1, bound_);
        if (word_[pos] < limit) {
            ++word_[pos];
            std::fill(word_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, word_.end(), 1u);
            return true;
        }
    }
    done_ = true;
    return false;
}

std::vector<CatalanWord> enumerate_words(std::size_t length, std::optional<unsigned> max_letter)
{
    std::vector<CatalanWord> out;
    WordEnumerator words(length, max_letter);
    while (words.next()) out.emplace_back(words.word().begin(), words.word().end());
    return out;
}

std::uint64_t Histogram::total() const
{
    std::uint64_t sum = 0;
    for (const auto& [k, n] : counts) sum += n;
    return sum;
}

Polynomial Histogram::as_polynomial() const
{
    Polynomial p;
    for (const auto& [k, n] : counts) p.add_term(Monomial(Variable::v(), k), Integer(n));
    return p;
}

Histogram letter_histogram(std::size_t length, unsigned letter)
{
    if (letter == 0) throw InvalidArgument("letters are numbered from 1");
    Histogram h{letter, length, {}};
    WordEnumerator words(length);
    while (words.next()) {
        const auto w = words.word();
        ++h.counts[static_cast<unsigned>(std::count(w.begin(), w.end(), letter))];
    }
    return h;
}

Polynomial monomial_multiset(std::size_t length, unsigned num_vars)
{
    if (num_vars < length) {
        throw UnderTracked("monomial multiset of length " + std::to_string(length) +
                           " needs at least that many variables");
    }
    Polynomial p;
    std::vector<unsigned> occurrences(length + 1);
    WordEnumerator words(length);
    while (words.next()) {
        std::fill(occurrences.begin(), occurrences.end(), 0u);
        for (unsigned a : words.word()) ++occurrences[a];
        std::vector<Monomial::Factor> factors;
        for (unsigned j = 1; j <= length; ++j) {
            if (occurrences[j] > 0) factors.emplace_back(Variable::indexed(j), occurrences[j]);
        }
        p.add_term(Monomial::from_factors(std::move(factors)), 1);
    }
    return p;
}

std::uint64_t bounded_count(std::size_t length, unsigned max_letter)
{
    if (max_letter == 0) throw InvalidArgument("max letter must be >= 1");
    std::uint64_t n = 0;
    WordEnumerator words(length, max_letter);
    while (words.next()) ++n;
    return n;
}

std::string format_word(std::span<const unsigned> letters)
{
    const bool dotted = std::any_of(letters.begin(), letters.end(), [](unsigned a) { return a >= 10; });
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (dotted && i > 0) out += '.';
        out += std::to_string(letters[i]);
    }
    return out;
}

} // namespace catwords
