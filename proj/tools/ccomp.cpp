// ccomp: batch CLI over the colorcomp C API.
//
// Subcommands: count, enumerate, transform, parts, blacktie, bell.
// Exit status: 0 success, 2 usage error, 3 enumeration cap overflow,
// 4 malformed input file.

#include <colorcomp.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitBadFile = 4;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
    throw CliError{code, message};
}

// Maps a C API failure to the CLI exit contract. from_file upgrades parse
// errors to the malformed-file status.
void check(cc_status status, bool from_file = false) {
    if (status == CC_OK) return;
    int code = kExitUsage;
    if (status == CC_ERR_CAP) code = kExitCap;
    if (status == CC_ERR_PARSE && from_file) code = kExitBadFile;
    fail(code, cc_last_error());
}

using SeqPtr = std::unique_ptr<cc_seq, decltype(&cc_seq_free)>;
using ColPtr = std::unique_ptr<cc_coloration, decltype(&cc_coloration_free)>;
using PolyPtr = std::unique_ptr<cc_poly, decltype(&cc_poly_free)>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    cc_string_free(s);
    return out;
}

SeqPtr parse_seq(const std::string& list, bool from_file = false) {
    cc_seq* raw = nullptr;
    check(cc_seq_parse(list.c_str(), &raw), from_file);
    return SeqPtr(raw, cc_seq_free);
}

// --- coloration options ------------------------------------------------

struct ColorationOpts {
    std::string prefix;
    std::string tail = "0";
    std::string preset;
};

void add_coloration_flags(CLI::App* cmd, ColorationOpts& opts) {
    cmd->add_option("--prefix", opts.prefix,
                    "coloration prefix x_1,x_2,... (may be empty)");
    cmd->add_option("--tail", opts.tail,
                    "cyclic tail repeated after the prefix (default 0)");
    cmd->add_option("--preset", opts.preset,
                    "named coloration: catalan, natural or ones")
        ->check(CLI::IsMember({"catalan", "natural", "ones"}));
}

// Builds the coloration, materializing presets out to length needed.
ColPtr make_coloration(const ColorationOpts& opts, long needed) {
    std::string prefix = opts.prefix;
    std::string tail = opts.tail;
    if (!opts.preset.empty()) {
        if (!opts.prefix.empty())
            fail(kExitUsage, "--preset conflicts with --prefix");
        if (opts.preset == "ones") {
            prefix = "";
            tail = "1";
        } else if (opts.preset == "natural") {
            prefix.clear();
            for (long i = 1; i <= needed; ++i) {
                if (i > 1) prefix += ",";
                prefix += std::to_string(i);
            }
            tail = "0";
        } else {  // catalan: x_i = C_{i-1}
            // Segner's recurrence C_m = (C*C)_{m-1}, evaluated through the
            // exact sequence API so the values never leave string form.
            std::vector<std::string> c = {"1"};
            for (long m = 1; m < needed; ++m) {
                std::string list;
                for (size_t i = 0; i < c.size(); ++i) {
                    if (i) list += ",";
                    list += c[i];
                }
                SeqPtr known = parse_seq(list);
                cc_seq* square = nullptr;
                check(cc_convolve(known.get(), known.get(), &square));
                SeqPtr sq(square, cc_seq_free);
                char* last = nullptr;
                check(cc_seq_term(sq.get(), c.size() - 1, &last));
                c.push_back(take_string(last));
            }
            prefix.clear();
            for (long i = 0; i < needed; ++i) {
                if (i) prefix += ",";
                prefix += c[i];
            }
            tail = "0";
        }
    }
    cc_coloration* raw = nullptr;
    check(cc_coloration_new(prefix.c_str(), tail.c_str(), &raw));
    return ColPtr(raw, cc_coloration_free);
}

// --- output ------------------------------------------------------------

void print_seq_lines(const cc_seq* s) {
    for (size_t i = 0; i < cc_seq_len(s); ++i) {
        char* term = nullptr;
        check(cc_seq_term(s, i, &term));
        std::cout << take_string(term) << "\n";
    }
}

void print_seq_json(const cc_seq* s) {
    nlohmann::json terms = nlohmann::json::array();
    for (size_t i = 0; i < cc_seq_len(s); ++i) {
        char* term = nullptr;
        check(cc_seq_term(s, i, &term));
        terms.push_back(take_string(term));
    }
    std::cout << nlohmann::json{{"terms", terms}}.dump() << "\n";
}

void print_seq(const cc_seq* s, bool as_json) {
    if (as_json)
        print_seq_json(s);
    else
        print_seq_lines(s);
}

// --- sequence sources --------------------------------------------------

struct SeqSourceOpts {
    std::string inline_list;
    std::string json_path;
    std::string bfile_path;
};

void add_seq_source_flags(CLI::App* cmd, SeqSourceOpts& opts) {
    cmd->add_option("--seq", opts.inline_list,
                    "inline comma-separated terms, or - for stdin");
    cmd->add_option("--file", opts.json_path,
                    "JSON file {\"terms\": [\"...\"]}");
    cmd->add_option("--bfile", opts.bfile_path, "OEIS b-file (index value lines)");
}

SeqPtr load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(kExitBadFile, "cannot open b-file: " + path);
    std::string line;
    std::string terms;
    bool have_start = false;
    long expected_index = 0;
    long start_index = 0;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        long index;
        std::string value;
        if (!(fields >> index >> value))
            fail(kExitBadFile, "malformed b-file line: " + line);
        if (!have_start) {
            start_index = expected_index = index;
            have_start = true;
        } else if (index != expected_index) {
            fail(kExitBadFile,
                 "non-consecutive b-file index " + std::to_string(index));
        }
        ++expected_index;
        if (!terms.empty()) terms += ",";
        terms += value;
    }
    if (!have_start) fail(kExitBadFile, "b-file has no data lines: " + path);
    std::cerr << "b-file start index: " << start_index << "\n";
    return parse_seq(terms, /*from_file=*/true);
}

SeqPtr load_sequence(const SeqSourceOpts& opts) {
    const int given = !opts.inline_list.empty() + !opts.json_path.empty() +
                      !opts.bfile_path.empty();
    if (given != 1)
        fail(kExitUsage, "give exactly one of --seq, --file, --bfile");
    if (!opts.bfile_path.empty()) return load_bfile(opts.bfile_path);
    if (!opts.json_path.empty()) {
        std::ifstream in(opts.json_path);
        if (!in) fail(kExitBadFile, "cannot open file: " + opts.json_path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            fail(kExitBadFile, std::string("bad JSON: ") + e.what());
        }
        if (!doc.contains("terms") || !doc["terms"].is_array())
            fail(kExitBadFile, "JSON file must contain a \"terms\" array");
        std::string list;
        for (const auto& t : doc["terms"]) {
            if (!list.empty()) list += ",";
            if (t.is_string())
                list += t.get<std::string>();
            else if (t.is_number_integer())
                list += std::to_string(t.get<long long>());
            else
                fail(kExitBadFile, "terms must be decimal strings or integers");
        }
        return parse_seq(list, /*from_file=*/true);
    }
    if (opts.inline_list == "-") {
        std::string all((std::istreambuf_iterator<char>(std::cin)),
                        std::istreambuf_iterator<char>());
        for (auto& ch : all)
            if (ch == '\n' || ch == ' ' || ch == '\t' || ch == '\r') ch = ',';
        std::string squeezed;
        for (char ch : all) {
            if (ch == ',' && (squeezed.empty() || squeezed.back() == ','))
                continue;
            squeezed += ch;
        }
        while (!squeezed.empty() && squeezed.back() == ',') squeezed.pop_back();
        return parse_seq(squeezed);
    }
    return parse_seq(opts.inline_list);
}

// --- subcommands -------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"exact computation with colored compositions and the Invert transform"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "A_1..A_n for a coloration");
    ColorationOpts count_col;
    long count_n = 0;
    std::string count_method = "recurrence";
    bool count_json = false;
    add_coloration_flags(count, count_col);
    count->add_option("--n", count_n, "number of terms")->required();
    count->add_option("--method", count_method)
        ->check(CLI::IsMember({"recurrence", "multinomial", "invert"}));
    count->add_flag("--json", count_json, "emit a JSON terms object");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list the compositions of n");
    ColorationOpts enum_col;
    long enum_n = 0;
    bool enum_blacktie = false;
    long enum_cap = 1000000;
    add_coloration_flags(enumerate, enum_col);
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_flag("--blacktie", enum_blacktie,
                        "enumerate black-tie tilings instead");
    enumerate->add_option("--cap", enum_cap, "object cap (default 10^6)");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a sequence transform");
    SeqSourceOpts trans_src;
    std::string trans_op;
    std::string trans_x = "1";
    long trans_n = 0;
    bool trans_json = false;
    add_seq_source_flags(transform, trans_src);
    transform->add_option("--op", trans_op)
        ->required()
        ->check(CLI::IsMember({"invert", "inverse", "conv", "sigma"}));
    transform->add_option("--x", trans_x,
                          "interpolation parameter (rational, default 1)");
    transform->add_option("--n", trans_n,
                          "output terms (default: input length)");
    transform->add_flag("--json", trans_json);

    // parts
    auto* parts = app.add_subcommand("parts", "P_0..P_n for a coloration");
    ColorationOpts parts_col;
    long parts_n = 0;
    bool parts_json = false;
    add_coloration_flags(parts, parts_col);
    parts->add_option("--n", parts_n)->required();
    parts->add_flag("--json", parts_json);

    // blacktie
    auto* blacktie = app.add_subcommand("blacktie", "B_0..B_n for a coloration");
    ColorationOpts bt_col;
    long bt_n = 0;
    std::string bt_method = "conv";
    bool bt_json = false;
    add_coloration_flags(blacktie, bt_col);
    blacktie->add_option("--n", bt_n)->required();
    blacktie->add_option("--method", bt_method)
        ->check(CLI::IsMember({"conv", "t5", "t6"}));
    blacktie->add_flag("--json", bt_json);

    // bell
    auto* bell = app.add_subcommand("bell", "ordinary Bell polynomials");
    long bell_n = 0, bell_k = 0;
    std::string bell_eval;
    bell->add_option("--n", bell_n)->required();
    bell->add_option("--k", bell_k, "partial polynomial B_{n,k}");
    bell->add_option("--eval", bell_eval, "evaluation point t_1,...,t_n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (count->parsed()) {
        ColPtr col = make_coloration(count_col, count_n);
        cc_count_method method = CC_COUNT_RECURRENCE;
        if (count_method == "multinomial") method = CC_COUNT_MULTINOMIAL;
        if (count_method == "invert") method = CC_COUNT_INVERT;
        cc_seq* out = nullptr;
        check(cc_count_sequence(col.get(), count_n, method, &out));
        SeqPtr result(out, cc_seq_free);
        print_seq(result.get(), count_json);
    } else if (enumerate->parsed()) {
        ColPtr col = make_coloration(enum_col, enum_n);
        char* lines = nullptr;
        long total = 0;
        check(cc_enumerate(col.get(), enum_n, enum_blacktie ? 1 : 0, enum_cap,
                           &lines, &total));
        std::cout << take_string(lines) << "total=" << total << "\n";
    } else if (transform->parsed()) {
        SeqPtr input = load_sequence(trans_src);
        const long n = trans_n > 0 ? trans_n
                                   : static_cast<long>(cc_seq_len(input.get()));
        cc_seq* out = nullptr;
        if (trans_op == "sigma") {
            check(cc_sigma(input.get(), &out));
        } else if (trans_op == "conv") {
            check(cc_convolve(input.get(), input.get(), &out));
        } else if (trans_op == "invert") {
            check(cc_invert_interpolated(input.get(), trans_x.c_str(), n, &out));
        } else {  // inverse
            check(cc_invert_interpolated(input.get(), "-1", n, &out));
        }
        SeqPtr result(out, cc_seq_free);
        if (trans_json) {
            print_seq_json(result.get());
        } else {
            char* text = nullptr;
            check(cc_seq_format(result.get(), ",", &text));
            std::cout << take_string(text) << "\n";
        }
        if (trans_op == "inverse") {
            int verdict = 0;
            long witness_index = -1;
            char* witness_value = nullptr;
            check(cc_coloration_of(input.get(), &verdict, nullptr,
                                   &witness_index, &witness_value));
            if (verdict) {
                std::cout << "coloration: yes\n";
            } else {
                take_string(witness_value);
                std::cout << "coloration: no (first negative at index "
                          << witness_index << ")\n";
            }
        }
    } else if (parts->parsed()) {
        ColPtr col = make_coloration(parts_col, parts_n);
        cc_seq* out = nullptr;
        check(cc_parts_sequence(col.get(), parts_n, &out));
        SeqPtr result(out, cc_seq_free);
        print_seq(result.get(), parts_json);
    } else if (blacktie->parsed()) {
        ColPtr col = make_coloration(bt_col, bt_n);
        cc_blacktie_method method = CC_BLACKTIE_CONV;
        if (bt_method == "t5") method = CC_BLACKTIE_T5;
        if (bt_method == "t6") method = CC_BLACKTIE_T6;
        cc_seq* out = nullptr;
        check(cc_blacktie_sequence(col.get(), bt_n, method, &out));
        SeqPtr result(out, cc_seq_free);
        print_seq(result.get(), bt_json);
    } else if (bell->parsed()) {
        cc_poly* raw = nullptr;
        if (bell->count("--k"))
            check(cc_bell_partial(bell_n, bell_k, &raw));
        else
            check(cc_bell_complete(bell_n, &raw));
        PolyPtr poly(raw, cc_poly_free);
        if (!bell_eval.empty()) {
            SeqPtr point = parse_seq(bell_eval);
            char* value = nullptr;
            check(cc_poly_evaluate(poly.get(), point.get(), &value));
            std::cout << take_string(value) << "\n";
        } else {
            char* text = nullptr;
            check(cc_poly_to_string(poly.get(), "t", &text));
            std::cout << take_string(text) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
