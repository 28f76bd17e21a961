#include "catwords/verify.hpp"

#include <algorithm>
#include <future>

#include "catwords/catalan.hpp"
#include "catwords/cfrac.hpp"
#include "catwords/errors.hpp"
#include "catwords/format.hpp"
#include "catwords/oracle.hpp"

namespace catwords {

namespace {

constexpr std::size_t kMaxDeterminantDepth = 10;
constexpr std::size_t kInlineLimit = 120;

// Large multivariate coefficients are summarized instead of printed in full.
std::string summarize(const Polynomial& p)
{
    std::string text = render_polynomial(p);
    if (text.size() <= kInlineLimit) return text;
    Integer sum = 0;
    for (const auto& [m, c] : p.terms()) sum += c;
    return "[" + std::to_string(p.size()) + " terms, coefficient sum " + sum.str() + "]";
}

// Renders a polynomial in V alone the way histograms print: {k:count,...}.
std::string as_histogram(const Polynomial& p)
{
    Histogram h{0, 0, {}};
    for (const auto& [m, c] : p.terms()) {
        if (m.without(Variable::v()).is_unit() && c > 0) {
            h.counts[m.exponent(Variable::v())] = c.convert_to<std::uint64_t>();
        } else {
            return render_polynomial(p);
        }
    }
    return render_histogram(h);
}

Check compare(std::string description, const std::string& expected, const std::string& actual,
              bool passed)
{
    return {std::move(description), passed, expected, actual};
}

struct LengthResult {
    std::vector<Check> checks;
    std::uint64_t words = 0;
};

LengthResult check_length(std::size_t n, const std::vector<unsigned>& letters)
{
    LengthResult r;
    const std::string prefix = "n=" + std::to_string(n);

    std::uint64_t words = 0;
    WordEnumerator all(n);
    while (all.next()) ++words;
    r.words = words;
    const Integer catalan = catalan_series(n)[n].constant_term();
    r.checks.push_back(compare(prefix + " word count", catalan.str(), std::to_string(words),
                               Integer(words) == catalan));

    const Polynomial multiset = monomial_multiset(n, static_cast<unsigned>(n));
    const Polynomial coefficient = gf_full(static_cast<unsigned>(n), TailMode::Catalan, n)[n];
    r.checks.push_back(compare(prefix + " monomial multiset", summarize(multiset),
                               summarize(coefficient), multiset == coefficient));

    for (unsigned i : letters) {
        const Histogram h = letter_histogram(n, i);
        const Polynomial c = letter_gf_series(i, n)[n];
        r.checks.push_back(compare(prefix + ",i=" + std::to_string(i) + " histogram",
                                   render_histogram(h), as_histogram(c), h.as_polynomial() == c));
    }

    for (unsigned h = 1; h <= n; ++h) {
        const std::uint64_t count = bounded_count(n, h);
        const Polynomial c = bounded_letter_series(h, n)[n];
        r.checks.push_back(compare(prefix + ",h=" + std::to_string(h) + " bounded count",
                                   std::to_string(count), render_polynomial(c),
                                   c == Polynomial(Integer(count))));
    }
    return r;
}

Check check_determinant(unsigned depth)
{
    const auto qs = generic_quotients(depth);
    const Convergent cur = convergent(depth, qs);
    const Convergent prev = convergent(depth - 1, qs);
    const Polynomial lhs = cur.h() * prev.k() - prev.h() * cur.k();
    Polynomial rhs(1);
    for (const auto& q : qs) rhs *= q.value;
    return compare("depth=" + std::to_string(depth) + " determinant identity",
                   render_polynomial(rhs), render_polynomial(lhs), lhs == rhs);
}

} // namespace

std::size_t VerifyReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

VerifyReport run_verify(std::size_t max_length, const std::vector<unsigned>& letters)
{
    if (max_length < 1) throw InvalidArgument("max length must be >= 1");
    if (std::find(letters.begin(), letters.end(), 0u) != letters.end()) {
        throw InvalidArgument("letters are numbered from 1");
    }

    std::vector<std::future<LengthResult>> pending;
    for (std::size_t n = 1; n <= max_length; ++n) {
        pending.push_back(std::async(std::launch::async, check_length, n, std::cref(letters)));
    }

    VerifyReport report;
    for (auto& f : pending) {
        LengthResult r = f.get();
        report.words_enumerated += r.words;
        std::move(r.checks.begin(), r.checks.end(), std::back_inserter(report.checks));
    }
    const auto depth = static_cast<unsigned>(std::min(max_length, kMaxDeterminantDepth));
    for (unsigned d = 1; d <= depth; ++d) report.checks.push_back(check_determinant(d));
    return report;
}

} // namespace catwords
