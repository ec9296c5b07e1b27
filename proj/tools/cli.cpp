#include "cli.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibpart/complement.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/oracle.hpp"
#include "fibpart/sequences.hpp"
#include "fibpart/tables.hpp"
#include "fibpart/zeckendorf.hpp"

namespace fibpart::cli {

namespace {

enum class Format { text, csv, jsonl };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"csv", Format::csv}, {"jsonl", Format::jsonl}};

std::optional<natural> parse_natural(std::string_view token) {
    natural value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) return std::nullopt;
    return value;
}

struct Options {
    Format format = Format::text;
    std::vector<natural> encode_inputs;
    std::vector<std::string> decode_inputs;
    std::vector<std::string> classify_inputs;
    std::string set_name;
    std::optional<natural> k;
    std::optional<natural> limit;
    std::optional<natural> depth;
    natural count = 0;
    unsigned jobs = 1;
    bool odd_only = false;
    bool timing = false;
};

// One classify line. Returns false on a rejected token.
bool classify_token(const std::string& token, Format format, std::ostream& out) {
    const std::optional<natural> m = parse_natural(token);
    if (!m || *m == 0) {
        const std::string message = "expected a positive integer";
        switch (format) {
            case Format::text: out << token << " error: " << message << '\n'; break;
            case Format::csv: out << token << ",error,,,\n"; break;
            case Format::jsonl:
                out << nlohmann::json{{"input", token}, {"error", message}}.dump() << '\n';
                break;
        }
        return false;
    }
    const Classification c = classify_detailed(*m);
    switch (format) {
        case Format::text:
            out << c.m << ' ' << c.cell.k << ' ' << c.cell.n << ' ' << c.split.pp << ' '
                << c.split.op << '\n';
            break;
        case Format::csv:
            out << c.m << ',' << c.cell.k << ',' << c.cell.n << ',' << c.split.pp << ','
                << c.split.op << '\n';
            break;
        case Format::jsonl:
            out << nlohmann::json{{"m", c.m},
                                  {"k", c.cell.k},
                                  {"n", c.cell.n},
                                  {"pp", c.split.pp},
                                  {"op", c.split.op}}
                       .dump()
                << '\n';
            break;
    }
    return true;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
    bool all_good = true;
    if (opt.format == Format::csv) out << "m,k,n,pp,op\n";
    if (!opt.classify_inputs.empty()) {
        for (const std::string& token : opt.classify_inputs) {
            all_good = classify_token(token, opt.format, out) && all_good;
        }
    } else {
        std::string token;
        while (in >> token) all_good = classify_token(token, opt.format, out) && all_good;
    }
    return all_good ? kSuccess : kUsageError;
}

int cmd_encode(const Options& opt, std::ostream& out) {
    if (opt.format == Format::csv) out << "n,zeckendorf\n";
    for (const natural n : opt.encode_inputs) {
        const ZeckendorfRep rep = zeckendorf_encode(n);
        switch (opt.format) {
            case Format::text: out << rep.bits() << '\n'; break;
            case Format::csv: out << n << ',' << rep.bits() << '\n'; break;
            case Format::jsonl:
                out << nlohmann::json{{"n", n}, {"zeckendorf", rep.bits()}}.dump() << '\n';
                break;
        }
    }
    return kSuccess;
}

int cmd_decode(const Options& opt, std::ostream& out) {
    if (opt.format == Format::csv) out << "zeckendorf,n\n";
    for (const std::string& bits : opt.decode_inputs) {
        const natural n = zeckendorf_decode(bits);
        switch (opt.format) {
            case Format::text: out << n << '\n'; break;
            case Format::csv: out << bits << ',' << n << '\n'; break;
            case Format::jsonl:
                out << nlohmann::json{{"zeckendorf", bits}, {"n", n}}.dump() << '\n';
                break;
        }
    }
    return kSuccess;
}

// Resolves "fib"/"odfib" aliases and "phi"/"psi" with an index.
std::optional<SetId> resolve_set(const Options& opt) {
    if (opt.set_name == "fib") return SetId{SetKind::phi, 0};
    if (opt.set_name == "odfib") return SetId{SetKind::psi, 0};
    if (opt.set_name == "phi" || opt.set_name == "psi") {
        if (!opt.k) return std::nullopt;
        return SetId{opt.set_name == "phi" ? SetKind::phi : SetKind::psi, *opt.k};
    }
    return std::nullopt;
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<SetId> id = resolve_set(opt);
    if (!id) {
        err << "gen: expected 'fib', 'odfib', 'phi K' or 'psi K'\n";
        return kUsageError;
    }
    const natural limit = *opt.limit;
    const std::string name = id->kind == SetKind::phi ? "phi" : "psi";
    if (opt.format == Format::csv) out << "n,value\n";
    // Members are increasing in n, so stop at the first one past the limit.
    bool first = true;
    for (natural n = id->kind == SetKind::phi ? 1 : 0;; ++n) {
        natural value = 0;
        try {
            value = set_member(*id, n);
        } catch (const width_overflow&) {
            break;
        }
        if (value > limit) break;
        switch (opt.format) {
            case Format::text: out << (first ? "" : " ") << value; break;
            case Format::csv: out << n << ',' << value << '\n'; break;
            case Format::jsonl:
                out << nlohmann::json{{"set", name}, {"k", id->k}, {"n", n}, {"value", value}}
                           .dump()
                    << '\n';
                break;
        }
        first = false;
    }
    if (opt.format == Format::text) out << '\n';
    return kSuccess;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err) {
    TableGrid grid;
    const std::string& kind = opt.set_name;
    if (kind == "fib" || kind == "phi") {
        const natural k = kind == "fib" ? 0 : opt.k.value_or(1);
        const natural depth = opt.depth.value_or(6);
        if (depth > kMaxTableDepth) {
            err << "table: --depth must be at most " << kMaxTableDepth << '\n';
            return kUsageError;
        }
        grid = render_phi_table(k, static_cast<unsigned>(depth));
    } else if (kind == "ona1" || kind == "ona2") {
        const natural rows = opt.depth.value_or(12);
        const natural max_k = opt.k.value_or(6);
        grid = kind == "ona1" ? render_ona1(rows, max_k) : render_ona2(rows, max_k);
    } else {
        err << "table: unknown table kind '" << kind << "' (fib, phi, ona1, ona2)\n";
        return kUsageError;
    }
    switch (opt.format) {
        case Format::text: out << grid.to_text(); break;
        case Format::csv: out << grid.to_csv(); break;
        case Format::jsonl:
            for (std::size_t r = 0; r < grid.rows(); ++r) {
                out << nlohmann::json{{"row", grid.row_labels[r]}, {"cells", grid.row(r)}}.dump()
                    << '\n';
            }
            break;
    }
    return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const natural limit = *opt.limit;
    const oracle::VerificationReport report = opt.odd_only
                                                  ? oracle::verify_odd_partition(limit, opt.jobs)
                                                  : oracle::verify_partition(limit, opt.jobs);
    report.write_failures(out);
    out << report.summary() << '\n';
    if (opt.timing) {
        err << "elapsed "
            << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()
            << " ms\n";
    }
    return report.ok() ? kSuccess : kVerificationFailed;
}

int cmd_bfile(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::optional<Sequence> seq = parse_sequence(opt.set_name);
    if (!seq) {
        err << "bfile: unknown sequence '" << opt.set_name
            << "' (fib, odfib, evfib, phi, psi)\n";
        return kUsageError;
    }
    if ((*seq == Sequence::phi || *seq == Sequence::psi) && !opt.k) {
        err << "bfile: " << opt.set_name << " needs a set index K\n";
        return kUsageError;
    }
    write_bfile(out, *seq, opt.k.value_or(0), opt.count);
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Zeckendorf, fibbinary and complement-set tools"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

    auto* encode = app.add_subcommand("encode", "Zeckendorf representation of each N");
    encode->add_option("n", opt.encode_inputs, "Positive integers")->required();

    auto* decode = app.add_subcommand("decode", "Integer with each Zeckendorf coefficient string");
    decode->add_option("bits", opt.decode_inputs, "Strings of 0/1, no adjacent ones")->required();

    auto* classify = app.add_subcommand(
        "classify", "Print 'm k n pp op' for each M (reads stdin when none given)");
    classify->add_option("m", opt.classify_inputs, "Positive integers");

    auto* gen = app.add_subcommand("gen", "Members of fib, odfib, phi K or psi K up to --limit");
    gen->add_option("set", opt.set_name, "fib, odfib, phi or psi")->required();
    gen->add_option("k,--k", opt.k, "Set index for phi/psi");
    gen->add_option("--limit", opt.limit, "Largest value to print")->required();

    auto* table = app.add_subcommand("table", "Render a table: fib, phi, ona1 or ona2");
    table->add_option("kind", opt.set_name, "fib, phi, ona1 or ona2")->required();
    table->add_option("--k", opt.k, "phi: set index (default 1); ona: last column (default 6)");
    table->add_option("--depth", opt.depth,
                      "phi: subset rows (default 6); ona: last row index (default 12)");

    auto* verify = app.add_subcommand("verify", "Exhaustively check the partition up to --limit");
    verify->add_option("--limit", opt.limit, "Upper end of the checked range")
        ->required()
        ->check(CLI::Range(natural{1}, natural{1} << 32));
    verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    verify->add_flag("--odd", opt.odd_only, "Check the odd-number partition instead");
    verify->add_flag("--timing", opt.timing, "Report elapsed time on stderr");

    auto* bfile = app.add_subcommand("bfile", "OEIS b-file lines 'n a(n)'");
    bfile->add_option("seq", opt.set_name, "fib, odfib, evfib, phi or psi")->required();
    bfile->add_option("k,--k", opt.k, "Set index for phi/psi");
    bfile->add_option("--count", opt.count, "Number of terms")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*encode) return cmd_encode(opt, out);
        if (*decode) return cmd_decode(opt, out);
        if (*classify) return cmd_classify(opt, in, out);
        if (*gen) return cmd_gen(opt, out, err);
        if (*table) return cmd_table(opt, out, err);
        if (*verify) return cmd_verify(opt, out, err);
        if (*bfile) return cmd_bfile(opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace fibpart::cli
