#pragma once

// Convergents of the Catalan continued fraction
//
//              1
//   ---------------------
//   1 -       z v1
//       -----------------
//       1 -     z v2
//           -------------
//           1 - ...
//
// computed with h_i = h_{i-1} - a_i h_{i-2}, k_i = k_{i-1} - a_i k_{i-2} from
// h_{-1} = 0, h_0 = 1, k_{-1} = 1, k_0 = 1. Cutting the fraction at depth n
// and multiplying the last quotient by a tail gives either the generating
// function of words with letters <= n (tail 1) or the full generating
// function with letters > n unweighted (tail C(z)).

#include <cstddef>
#include <span>
#include <vector>

#include "catwords/polyring.hpp"

namespace catwords {

struct PartialQuotient {
    unsigned index; // i >= 1
    Polynomial value;
};

enum class Tail { None, One, SymbolC };

/// What the formal symbol C is replaced by when a convergent is expanded.
enum class TailMode { One, Catalan };

class Convergent {
public:
    /// Throws std::logic_error if k does not have constant term 1.
    Convergent(unsigned depth, Polynomial h, Polynomial k, Tail tail);

    unsigned depth() const { return depth_; }
    const Polynomial& h() const { return h_; }
    const Polynomial& k() const { return k_; }
    Tail tail() const { return tail_; }

private:
    unsigned depth_;
    Polynomial h_;
    Polynomial k_;
    Tail tail_;
};

/// Single-letter generating function as an unreduced fraction over {z, V, C}.
struct LetterGF {
    unsigned letter;
    Polynomial numerator;
    Polynomial denominator;
};

/// a_i = z v_i for i = 1..n.
std::vector<PartialQuotient> generic_quotients(unsigned n);
/// a_j = z for j < letter and a_letter = z V.
std::vector<PartialQuotient> letter_quotients(unsigned letter);
/// a_i = z for i = 1..n.
std::vector<PartialQuotient> counting_quotients(unsigned n);

/// Plain convergent (h_n, k_n). Throws InsufficientQuotients when fewer than
/// `depth` quotients are given.
Convergent convergent(unsigned depth, std::span<const PartialQuotient> quotients);

/// Convergent with the final quotient a_n replaced by a_n * tail_factor.
/// tail_factor must be 1 or the symbol C; depth must be >= 1.
Convergent tail_convergent(unsigned depth, std::span<const PartialQuotient> quotients,
                           const Polynomial& tail_factor);

/// Expands numerator/denominator as a series through z^order after replacing
/// C by 1 or by the Catalan series.
Series expand_ratio(const Polynomial& numerator, const Polynomial& denominator,
                    TailMode mode, std::size_t order);

/// F(z; v1..vn): [z^m] is the sum over Catalan words of length m of
/// prod_j v_j^(occurrences of j). In TailMode::One only words with letters
/// <= depth contribute.
Series gf_full(unsigned depth, TailMode mode, std::size_t order);

/// Single-letter generating function: [z^n] = sum_k (#words of length n with
/// exactly k copies of `letter`) V^k.
Series letter_gf_series(unsigned letter, std::size_t order);

/// Raw depth-`letter` convergent with quotients z,...,z, zVC. No cancellation.
LetterGF rational_form(unsigned letter);

/// [z^n] counts Catalan words of length n with every letter <= max_letter.
Series bounded_letter_series(unsigned max_letter, std::size_t order);

} // namespace catwords
