#include "catwords/cfrac.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "catwords/catalan.hpp"
#include "catwords/errors.hpp"

namespace catwords {

using symbols::z;

Convergent::Convergent(unsigned depth, Polynomial h, Polynomial k, Tail tail)
    : depth_(depth), h_(std::move(h)), k_(std::move(k)), tail_(tail)
{
    if (k_.constant_term() != 1) {
        throw std::logic_error("convergent denominator must have constant term 1");
    }
}

std::vector<PartialQuotient> generic_quotients(unsigned n)
{
    std::vector<PartialQuotient> qs;
    qs.reserve(n);
    for (unsigned i = 1; i <= n; ++i) qs.push_back({i, z() * symbols::v(i)});
    return qs;
}

std::vector<PartialQuotient> letter_quotients(unsigned letter)
{
    if (letter == 0) throw InvalidArgument("letters are numbered from 1");
    std::vector<PartialQuotient> qs;
    qs.reserve(letter);
    for (unsigned j = 1; j < letter; ++j) qs.push_back({j, z()});
    qs.push_back({letter, z() * symbols::V()});
    return qs;
}

std::vector<PartialQuotient> counting_quotients(unsigned n)
{
    std::vector<PartialQuotient> qs;
    qs.reserve(n);
    for (unsigned i = 1; i <= n; ++i) qs.push_back({i, z()});
    return qs;
}

namespace {

Convergent run_recurrence(unsigned depth, std::span<const PartialQuotient> quotients,
                          const Polynomial* tail_factor, Tail tail)
{
    if (quotients.size() < depth) {
        throw InsufficientQuotients("depth " + std::to_string(depth) + " needs " +
                                    std::to_string(depth) + " partial quotients, got " +
                                    std::to_string(quotients.size()));
    }
    Polynomial h_prev(0), h(1);
    Polynomial k_prev(1), k(1);
    for (unsigned i = 1; i <= depth; ++i) {
        Polynomial a = quotients[i - 1].value;
        if (tail_factor && i == depth) a *= *tail_factor;
        Polynomial h_next = h - a * h_prev;
        Polynomial k_next = k - a * k_prev;
        h_prev = std::exchange(h, std::move(h_next));
        k_prev = std::exchange(k, std::move(k_next));
    }
    return Convergent(depth, std::move(h), std::move(k), tail);
}

} // namespace

Convergent convergent(unsigned depth, std::span<const PartialQuotient> quotients)
{
    return run_recurrence(depth, quotients, nullptr, Tail::None);
}

Convergent tail_convergent(unsigned depth, std::span<const PartialQuotient> quotients,
                           const Polynomial& tail_factor)
{
    if (depth == 0) throw InvalidArgument("a tail needs depth >= 1");
    Tail tail;
    if (tail_factor == Polynomial(1)) {
        tail = Tail::One;
    } else if (tail_factor == symbols::C()) {
        tail = Tail::SymbolC;
    } else {
        throw InvalidArgument("tail factor must be 1 or C");
    }
    return run_recurrence(depth, quotients, &tail_factor, tail);
}

Series expand_ratio(const Polynomial& numerator, const Polynomial& denominator, TailMode mode,
                    std::size_t order)
{
    Assignment tail;
    tail.emplace(Variable::c(),
                 mode == TailMode::Catalan ? catalan_polynomial(order) : Polynomial(1));
    const Series num = series_from_poly(specialize(numerator, tail), order);
    const Series den = series_from_poly(specialize(denominator, tail), order);
    return series_divide(num, den);
}

Series gf_full(unsigned depth, TailMode mode, std::size_t order)
{
    if (depth == 0) throw InvalidArgument("depth must be >= 1");
    const auto c = tail_convergent(depth, generic_quotients(depth), symbols::C());
    return expand_ratio(c.h(), c.k(), mode, order);
}

LetterGF rational_form(unsigned letter)
{
    const auto c = tail_convergent(letter, letter_quotients(letter), symbols::C());
    return {letter, c.h(), c.k()};
}

Series letter_gf_series(unsigned letter, std::size_t order)
{
    const LetterGF gf = rational_form(letter);
    return expand_ratio(gf.numerator, gf.denominator, TailMode::Catalan, order);
}

Series bounded_letter_series(unsigned max_letter, std::size_t order)
{
    if (max_letter == 0) throw InvalidArgument("max letter must be >= 1");
    const auto c = tail_convergent(max_letter, counting_quotients(max_letter), Polynomial(1));
    return expand_ratio(c.h(), c.k(), TailMode::One, order);
}

} // namespace catwords
