// gmset command-line tool: similarity indices, split Pearson, sliding
// template matching and scalar-field export over CSV data.
//
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmset/gmset.hpp"

namespace {

using gmset::io::ColumnSelector;
using gmset::io::DataError;
using gmset::io::format_double;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<ColumnSelector> parse_cols(const std::string& text, std::size_t expected)
{
    std::vector<ColumnSelector> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(ColumnSelector::parse(text.substr(start, comma - start)));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (out.size() != expected) {
        throw UsageError("expected " + std::to_string(expected) + " column(s) in '" + text + "'");
    }
    return out;
}

void print_value(std::ostream& out, const std::string& name, double v)
{
    out << name << '=' << format_double(v) << '\n';
}

void print_optional(std::ostream& out, const std::string& name, std::optional<double> v)
{
    if (v) {
        print_value(out, name, *v);
    } else {
        out << name << "=nan\n";
    }
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + path + "'");
    }
    return out;
}

struct CommonInput {
    std::string input;
    std::string cols;
    double dx = 1.0;
    bool no_header = false;

    void add_to(CLI::App* app, const std::string& cols_flag)
    {
        app->add_option("--input", input, "CSV file")->required();
        app->add_option(cols_flag, cols, "column selector(s): header name or 0-based index")->required();
        app->add_option("--dx", dx, "sample spacing")->check(CLI::PositiveNumber);
        app->add_flag("--no-header", no_header, "the file has no header row");
    }

    std::vector<gmset::Signal> read(std::size_t n) const
    {
        return gmset::io::read_csv(input, parse_cols(cols, n), !no_header, dx);
    }
};

void run_compute(const CommonInput& in, const std::string& index)
{
    const auto sig = in.read(2);
    const auto& f = sig[0];
    const auto& g = sig[1];
    if (index == "all") {
        const auto r = gmset::similarity_report(f, g);
        print_value(std::cout, "jaccard", r.jaccard);
        print_value(std::cout, "interiority", r.interiority);
        print_value(std::cout, "coincidence", r.coincidence);
        print_optional(std::cout, "cosine", r.cosine);
        print_value(std::cout, "inner", r.inner);
        print_value(std::cout, "norm_f", r.norm_f);
        print_value(std::cout, "norm_g", r.norm_g);
        print_value(std::cout, "euclidean", r.euclidean);
        std::optional<double> p;
        try {
            p = gmset::pearson(f, g);
        } catch (const std::exception&) {
        }
        print_optional(std::cout, "pearson", p);
    } else if (index == "jaccard") {
        print_value(std::cout, index, gmset::jaccard(f, g));
    } else if (index == "coincidence") {
        print_value(std::cout, index, gmset::coincidence(f, g));
    } else if (index == "interiority") {
        print_value(std::cout, index, gmset::interiority(f, g));
    } else if (index == "cosine") {
        print_value(std::cout, index, gmset::cosine(f, g));
    } else if (index == "pearson") {
        print_value(std::cout, index, gmset::pearson(f, g));
    } else if (index == "inner") {
        print_value(std::cout, index, gmset::inner(f, g));
    }
}

struct FieldArgs {
    std::string expr;
    int power = 1;
    gmset::GridSpec grid;
    std::string out;
    std::string pgm;
    std::optional<double> lo;
    std::optional<double> hi;
};

void run_field(const FieldArgs& a, unsigned threads)
{
    const auto expr = gmset::parse_field_expr(a.expr);
    if (!expr) {
        throw UsageError("unknown --expr '" + a.expr + "'");
    }
    if (a.lo.has_value() != a.hi.has_value()) {
        throw UsageError("--lo and --hi must be given together");
    }
    const auto field = gmset::field(*expr, a.grid, a.power, threads);
    gmset::io::write_field_csv(field, a.out);
    if (!a.pgm.empty()) {
        const auto range = a.lo ? gmset::io::HeatmapRange{*a.lo, *a.hi}
                                : gmset::io::HeatmapRange::default_for(*expr, field);
        gmset::io::write_pgm(field, range, a.pgm);
    }
}

struct SlideArgs {
    std::string templ;
    std::string signal;
    std::string templ_col = "0";
    std::string signal_col = "0";
    std::string index;
    std::string out;
    double dx = 1.0;
    bool no_header = false;
};

void run_slide(const SlideArgs& a)
{
    const auto index = gmset::parse_slide_index(a.index);
    if (!index) {
        throw UsageError("unknown --index '" + a.index + "'");
    }
    const auto t = gmset::io::read_csv(a.templ, {ColumnSelector::parse(a.templ_col)}, !a.no_header, a.dx);
    const auto s = gmset::io::read_csv(a.signal, {ColumnSelector::parse(a.signal_col)}, !a.no_header, a.dx);
    const auto profile = gmset::slide(t[0], s[0], *index);
    auto out = open_out(a.out);
    gmset::io::write_profile_csv(profile, out);
    std::size_t flagged = 0;
    for (bool d : profile.degenerate) {
        flagged += d ? 1 : 0;
    }
    std::cout << "best_lag=" << profile.best_lag << '\n';
    print_value(std::cout, "best_score", profile.best_score);
    std::cout << "degenerate_lags=" << flagged << '\n';
}

void run_split(const CommonInput& in, double alpha)
{
    const auto sig = in.read(2);
    const auto dp = gmset::double_pearson(sig[0], sig[1], alpha);
    print_value(std::cout, "p_plus", dp.p_plus);
    print_value(std::cout, "p_minus", dp.p_minus);
    print_value(std::cout, "p_alpha", dp.p_alpha);
    print_value(std::cout, "pearson", gmset::pearson(sig[0], sig[1]));
}

void run_standardize(const CommonInput& in, const std::string& out_path)
{
    const auto sig = in.read(1);
    const auto z = gmset::standardize(sig[0]);
    auto out = open_out(out_path);
    out << (in.no_header ? std::string("value") : in.cols) << '\n';
    for (double v : z.values()) {
        out << format_double(v) << '\n';
    }
}

void run_signs(const CommonInput& in, const std::string& out_path)
{
    const auto sig = in.read(2);
    auto out = open_out(out_path);
    out << "s_hp,s_hm,s_xy\n";
    for (std::size_t i = 0; i < sig[0].size(); ++i) {
        const auto s = gmset::conjoint_signs(sig[0][i], sig[1][i]);
        out << format_double(s.s_hp) << ',' << format_double(s.s_hm) << ',' << format_double(s.s_xy) << '\n';
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized-multiset similarity indices and scalar fields"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for field generation")
        ->check(CLI::Range(1u, 1024u));

    CommonInput compute_in;
    std::string compute_index = "all";
    auto* compute = app.add_subcommand("compute", "similarity report for two columns");
    compute_in.add_to(compute, "--cols");
    compute->add_option("--index", compute_index)
        ->check(CLI::IsMember({"jaccard", "coincidence", "interiority", "cosine", "pearson", "inner", "all"}));

    FieldArgs field_args;
    auto* field = app.add_subcommand("field", "evaluate a scalar field on a grid");
    field->add_option("--expr", field_args.expr, "a1|a2|a3|a4|a5|jr|kron|jrpow")->required();
    field->add_option("--D", field_args.power, "power for jrpow")->check(CLI::PositiveNumber);
    field->add_option("--xmin", field_args.grid.x_min);
    field->add_option("--xmax", field_args.grid.x_max);
    field->add_option("--ymin", field_args.grid.y_min);
    field->add_option("--ymax", field_args.grid.y_max);
    field->add_option("--nx", field_args.grid.nx);
    field->add_option("--ny", field_args.grid.ny);
    field->add_option("--out", field_args.out, "field CSV")->required();
    field->add_option("--pgm", field_args.pgm, "optional PGM heatmap");
    field->add_option("--lo", field_args.lo);
    field->add_option("--hi", field_args.hi);
    field->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 1024u));

    SlideArgs slide_args;
    auto* slide = app.add_subcommand("slide", "sliding template matching");
    slide->add_option("--template", slide_args.templ)->required();
    slide->add_option("--signal", slide_args.signal)->required();
    slide->add_option("--template-col", slide_args.templ_col);
    slide->add_option("--signal-col", slide_args.signal_col);
    slide->add_option("--index", slide_args.index, "inner|jaccard|coincidence|pearson|cosine")->required();
    slide->add_option("--out", slide_args.out, "profile CSV")->required();
    slide->add_option("--dx", slide_args.dx)->check(CLI::PositiveNumber);
    slide->add_flag("--no-header", slide_args.no_header);

    CommonInput split_in;
    double alpha = 0.5;
    auto* split = app.add_subcommand("split", "double Pearson coefficient");
    split_in.add_to(split, "--cols");
    split->add_option("--alpha", alpha)->required()->check(CLI::Range(0.0, 1.0));

    CommonInput std_in;
    std::string std_out;
    auto* standardize = app.add_subcommand("standardize", "zero-mean unit-std column");
    std_in.add_to(standardize, "--col");
    standardize->add_option("--out", std_out)->required();

    CommonInput signs_in;
    std::string signs_out;
    auto* signs = app.add_subcommand("signs", "per-row conjoint sign functions");
    signs_in.add_to(signs, "--cols");
    signs->add_option("--out", signs_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*compute) {
            run_compute(compute_in, compute_index);
        } else if (*field) {
            run_field(field_args, threads);
        } else if (*slide) {
            run_slide(slide_args);
        } else if (*split) {
            run_split(split_in, alpha);
        } else if (*standardize) {
            run_standardize(std_in, std_out);
        } else if (*signs) {
            run_signs(signs_in, signs_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
