#include "catwords/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "catwords/cfrac.hpp"
#include "catwords/errors.hpp"
#include "catwords/format.hpp"
#include "catwords/json_io.hpp"
#include "catwords/oracle.hpp"
#include "catwords/verify.hpp"

namespace catwords {

namespace {

enum class Format { Plain, Json, Csv };

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string series_csv(const Series& s)
{
    std::string out = "n,coefficient\n";
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out += std::to_string(n) + "," + csv_field(render_polynomial(s[n])) + "\n";
    }
    return out;
}

std::string render(const Series& s, Format format)
{
    switch (format) {
    case Format::Plain: return render_series(s) + "\n";
    case Format::Json: return to_json(s).dump(2) + "\n";
    case Format::Csv: return series_csv(s);
    }
    return {};
}

struct ExpandArgs {
    unsigned letter = 1;
    std::size_t order = 10;
};

struct CfracArgs {
    unsigned depth = 1;
    std::string tail = "catalan";
    std::size_t order = 10;
    bool generic = false;
};

struct RationalArgs {
    unsigned letter = 1;
};

struct EnumerateArgs {
    std::size_t length = 0;
    std::optional<unsigned> max_letter;
    std::optional<unsigned> histogram_letter;
};

struct VerifyArgs {
    std::size_t max_length = 10;
    std::vector<unsigned> letters{1, 2, 3, 4, 5};
};

std::string run_expand(const ExpandArgs& a, Format format)
{
    return render(letter_gf_series(a.letter, a.order), format);
}

std::string run_cfrac(const CfracArgs& a, Format format)
{
    const auto quotients = a.generic ? generic_quotients(a.depth) : counting_quotients(a.depth);
    const TailMode mode = a.tail == "one" ? TailMode::One : TailMode::Catalan;
    const Polynomial factor = mode == TailMode::One ? Polynomial(1) : symbols::C();
    const Convergent c = tail_convergent(a.depth, quotients, factor);
    const Series s = expand_ratio(c.h(), c.k(), mode, a.order);

    const std::string d = std::to_string(a.depth);
    switch (format) {
    case Format::Plain:
        return "h_" + d + " = " + render_polynomial(c.h()) + "\n" + "k_" + d + " = " +
               render_polynomial(c.k()) + "\n" + "series = " + render_series(s) + "\n";
    case Format::Json:
        return Json{{"depth", a.depth},
                    {"tail", a.tail},
                    {"h", to_json(c.h())},
                    {"k", to_json(c.k())},
                    {"series", to_json(s)}}
                   .dump(2) +
               "\n";
    case Format::Csv: return series_csv(s);
    }
    return {};
}

std::string run_rational(const RationalArgs& a, Format format)
{
    const LetterGF gf = rational_form(a.letter);
    switch (format) {
    case Format::Plain:
        return "numerator: " + render_polynomial(gf.numerator) + "\n" +
               "denominator: " + render_polynomial(gf.denominator) + "\n";
    case Format::Json: return to_json(gf).dump(2) + "\n";
    case Format::Csv:
        return "part,polynomial\nnumerator," + csv_field(render_polynomial(gf.numerator)) +
               "\ndenominator," + csv_field(render_polynomial(gf.denominator)) + "\n";
    }
    return {};
}

std::string run_enumerate(const EnumerateArgs& a, Format format)
{
    if (a.histogram_letter) {
        const Histogram h = letter_histogram(a.length, *a.histogram_letter);
        switch (format) {
        case Format::Plain: return render_histogram(h) + "\n";
        case Format::Json: return to_json(h).dump(2) + "\n";
        case Format::Csv: return histogram_csv(h);
        }
    }

    std::ostringstream os;
    WordEnumerator words(a.length, a.max_letter);
    if (format == Format::Json) {
        Json list = Json::array();
        while (words.next()) list.push_back(words.word());
        os << list.dump() << '\n';
        return os.str();
    }
    if (format == Format::Csv) os << "word\n";
    while (words.next()) os << format_word(words.word()) << '\n';
    return os.str();
}

std::string run_verify_command(const VerifyArgs& a, Format format, bool& ok)
{
    const VerifyReport report = run_verify(a.max_length, a.letters);
    ok = report.ok();

    std::ostringstream os;
    switch (format) {
    case Format::Plain:
        for (const auto& c : report.checks) {
            os << (c.passed ? "pass " : "FAIL ") << c.description << ' ' << c.expected;
            if (!c.passed) os << " (got " << c.actual << ')';
            os << '\n';
        }
        os << "checks: " << report.checks.size() << ", passed: " << report.passed()
           << ", failed: " << report.failed() << ", words enumerated: " << report.words_enumerated
           << '\n';
        break;
    case Format::Json: {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            checks.push_back(Json{{"description", c.description},
                                  {"status", c.passed ? "pass" : "fail"},
                                  {"expected", c.expected},
                                  {"actual", c.actual}});
        }
        os << Json{{"checks", std::move(checks)},
                   {"summary",
                    {{"total", report.checks.size()},
                     {"passed", report.passed()},
                     {"failed", report.failed()},
                     {"words_enumerated", report.words_enumerated}}}}
                  .dump(2)
           << '\n';
        break;
    }
    case Format::Csv:
        os << "status,description,expected,actual\n";
        for (const auto& c : report.checks) {
            os << (c.passed ? "pass" : "fail") << ',' << csv_field(c.description) << ','
               << csv_field(c.expected) << ',' << csv_field(c.actual) << '\n';
        }
        break;
    }
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Catalan word generating functions via continued fractions", "catwords"};
    app.require_subcommand(1);
    app.fallthrough();

    Format format = Format::Plain;
    std::string output;
    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("-o,--output", output, "Write results to this file instead of stdout");

    const auto positive = CLI::Range(1u, 1000000u);

    ExpandArgs expand;
    auto* expand_cmd = app.add_subcommand("expand", "Series expansion of a single-letter GF in z and V");
    expand_cmd->add_option("--letter", expand.letter, "Tracked letter i")->required()->check(positive);
    expand_cmd->add_option("--order", expand.order, "Highest power of z")->capture_default_str();

    CfracArgs cfrac;
    auto* cfrac_cmd = app.add_subcommand("cfrac", "Convergent h_n/k_n with a tail, and its expansion");
    cfrac_cmd->add_option("--depth", cfrac.depth, "Convergent depth n")->required()->check(positive);
    cfrac_cmd->add_option("--tail", cfrac.tail, "Tail substituted for C")
        ->check(CLI::IsMember({"one", "catalan"}))
        ->capture_default_str();
    cfrac_cmd->add_option("--order", cfrac.order, "Highest power of z")->capture_default_str();
    cfrac_cmd->add_flag("--generic", cfrac.generic, "Weight letter j by v_j instead of 1");

    RationalArgs rational;
    auto* rational_cmd = app.add_subcommand("rational", "Unreduced rational form of a single-letter GF");
    rational_cmd->add_option("--letter", rational.letter, "Tracked letter i")->required()->check(positive);

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List Catalan words or a letter histogram");
    enumerate_cmd->add_option("--length", enumerate.length, "Word length")->required();
    enumerate_cmd->add_option("--max-letter", enumerate.max_letter, "Only words with letters <= this")
        ->check(positive);
    enumerate_cmd->add_option("--histogram-letter", enumerate.histogram_letter,
                              "Print occurrence counts of this letter instead of words")
        ->check(positive);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the symbolic results by enumeration");
    verify_cmd->add_option("--max-length", verify.max_length, "Check lengths 1..L")
        ->check(positive)
        ->capture_default_str();
    verify_cmd->add_option("--letters", verify.letters, "Letters whose histograms are checked")
        ->delimiter(',')
        ->check(positive);

    std::vector<const char*> argv{"catwords"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string text;
    int status = kExitOk;
    try {
        if (expand_cmd->parsed()) {
            text = run_expand(expand, format);
        } else if (cfrac_cmd->parsed()) {
            text = run_cfrac(cfrac, format);
        } else if (rational_cmd->parsed()) {
            text = run_rational(rational, format);
        } else if (enumerate_cmd->parsed()) {
            text = run_enumerate(enumerate, format);
        } else if (verify_cmd->parsed()) {
            bool ok = false;
            text = run_verify_command(verify, format, ok);
            if (!ok) status = kExitVerifyFailed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << output << '\n';
            return kExitUsage;
        }
        file << text;
    }
    return status;
}

} // namespace catwords
