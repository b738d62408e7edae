#include "polygem/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "polygem/construction.hpp"
#include "polygem/grammar.hpp"
#include "polygem/milgram.hpp"
#include "polygem/polygem2.hpp"
#include "polygem/smith.hpp"

namespace polygem {

namespace {

// Input problems that are not parse errors of an element or file.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Outcome {
    int code = ExitOk;
    std::string report;
};

std::vector<SpaceFactor> parse_space_list(const std::string& text)
{
    std::vector<SpaceFactor> out;
    int depth = 0;
    std::string cur;
    for (char c : text + ",") {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            if (cur.find_first_not_of(" \t") != std::string::npos)
                out.push_back(parse_space_factor(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.empty())
        throw UsageError("empty space list");
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void series_rows(std::ostream& os, const PoincareSeries& s)
{
    os << "degree\tdimension\n";
    for (int d = 0; d <= s.max_degree(); ++d)
        os << d << '\t' << s[d] << '\n';
}

Outcome do_reduce(const std::string& text)
{
    std::ostringstream os;
    const auto e = parse_element(text);
    os << "input\t" << text << '\n';
    if (const auto* a = std::get_if<SteenrodElement>(&e)) {
        os << "kind\tsteenrod\n";
        os << "reduced\t" << a->to_string() << '\n';
    } else {
        const auto& x = std::get<ModuleElement>(e);
        os << "kind\t" << x.module().to_string() << '\n';
        os << "degree\t" << x.degree() << '\n';
        os << "reduced\t" << x.to_string() << '\n';
    }
    return {ExitOk, os.str()};
}

Outcome do_basis(const std::string& module, std::optional<int> degree, int max_degree)
{
    const auto m = parse_module_id(module);
    std::ostringstream os;
    os << "degree\telement\n";
    const int lo = degree ? *degree : 0;
    const int hi = degree ? *degree : max_degree;
    for (int d = lo; d <= hi; ++d)
        for (const auto& l : basis(m, d))
            os << d << '\t' << ModuleElement(m, d, {l}).to_string() << '\n';
    return {ExitOk, os.str()};
}

Outcome do_milgram(int n, int max_degree)
{
    std::ostringstream os;
    os << "# catalogue\n" << milgram_generators(n).to_tsv();
    os << "# polynomial generators\n";
    os << "degree\tname\tindecomposable\tprimitive\trepresentative\n";
    for (const auto& g : polynomial_generators_P(n, max_degree))
        os << g.degree << '\t' << g.name << '\t' << (g.indecomposable ? "yes" : "no") << '\t'
           << (g.primitive ? "prim" : "non-prim") << '\t' << g.representative.to_string() << '\n';
    return {ExitOk, os.str()};
}

Outcome do_series(const std::string& space, int max_degree)
{
    const auto factors = parse_space_list(space);
    std::ostringstream os;
    series_rows(os, series_of_product(factors, max_degree));
    return {ExitOk, os.str()};
}

Outcome do_emfiber(const std::string& input, std::optional<int> square, const std::string& compare,
                   int max_degree)
{
    if (input.empty() == !square)
        throw UsageError("emfiber needs exactly one of --input and --square");
    std::string text;
    if (square) {
        const int n = *square;
        if (n < 1)
            throw UsageError("--square needs n >= 1");
        text = "E: KF2(" + std::to_string(n) + ")\nF: KF2(" + std::to_string(2 * n) + ")\nf(i(" +
               std::to_string(2 * n) + ")) = Sq(" + std::to_string(n) + ")*i(" + std::to_string(n) +
               ")\n";
    } else {
        text = read_file(input);
    }
    const auto in = parse_two_polygem(text);
    const auto total = series_of_product(in.e_factors, max_degree);
    const auto r = gr_fiber_series(in.map, total, max_degree);
    const auto cup = verify_cup_square_kernel(in.map, max_degree);

    std::ostringstream os;
    os << r.to_tsv();
    os << "# checks\n";
    os << "kernel_in_cup_squares\t" << (cup.ok ? "yes" : "no");
    if (cup.failed_degree)
        os << "\tdegree " << *cup.failed_degree << '\t' << cup.witness->to_string();
    os << '\n';
    int code = ExitOk;
    if (!compare.empty()) {
        const auto expected = series_of_product(parse_space_list(compare), max_degree);
        os << "compare\t" << compare << '\t';
        if (expected == r.combined) {
            os << "match\n";
        } else {
            int d = 0;
            while (expected[d] == r.combined[d])
                ++d;
            os << "mismatch\tdegree " << d << "\texpected " << expected[d] << "\tgot "
               << r.combined[d] << '\n';
            code = ExitVerificationFailed;
        }
    }
    return {code, os.str()};
}

Outcome do_construct(int l, int steps, int max_degree, bool witness)
{
    const auto r = run(l, steps, max_degree);
    return {r.verified ? ExitOk : ExitVerificationFailed, r.to_tsv(witness)};
}

Outcome do_check2pg(const std::string& input, int r_max, int max_degree)
{
    const auto in = parse_two_polygem(read_file(input));
    const auto v = classify(in, max_degree, r_max);
    return {v.certified ? ExitOk : ExitVerificationFailed, v.to_tsv()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Computations with unstable modules, Milgram spaces and polyGEMs", "polygem"};
    app.require_subcommand(1);
    app.fallthrough();
    int max_degree = 24;
    std::string output;
    app.add_option("--degree-max", max_degree, "Largest degree computed")
        ->check(CLI::Range(1, 4096))
        ->capture_default_str();
    app.add_option("--output", output, "Write the report here instead of stdout");

    std::string element;
    auto* reduce = app.add_subcommand("reduce", "Reduce a Steenrod or module element");
    reduce->add_option("element", element, "Element text, e.g. Sq(2,1)*i(2)")->required();

    std::string module;
    std::optional<int> degree;
    auto* basis_cmd = app.add_subcommand("basis", "Basis of an unstable module");
    basis_cmd->add_option("--module", module, "Free(n), ReducedFree(n), Prime(n), SubI(m), WedgeF1(n)")
        ->required();
    basis_cmd->add_option("--degree", degree, "Single degree (default: all up to --degree-max)")
        ->check(CLI::NonNegativeNumber);

    int n = 0;
    auto* milgram = app.add_subcommand("milgram", "Generators of the Milgram space E_n");
    milgram->add_option("--n", n, "Milgram index")->required();

    std::string space;
    auto* series = app.add_subcommand("series", "Poincare series of a product of spaces");
    series->add_option("--space", space, "e.g. \"E(4), KZ2h(3,2)\"")->required();

    std::string input;
    std::optional<int> square;
    std::string compare;
    auto* emfiber = app.add_subcommand("emfiber", "Series of the fiber of a map of 1-polyGEMs");
    emfiber->add_option("--input", input, "Map in the E:/F:/f(...) format");
    emfiber->add_option("--square", square, "Use K(F2,n) -> K(F2,2n) classified by i_n^2");
    emfiber->add_option("--compare", compare, "Space list whose series must match");

    int l = 2;
    int steps = 9;
    bool witness = false;
    auto* construct = app.add_subcommand("construct", "Run the nilpotent tower");
    construct->add_option("--l", l, "Connectivity parameter")->capture_default_str();
    construct->add_option("--steps", steps, "Number of steps")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    construct->add_flag("--witness", witness, "Include witness elements in the verification log");

    int r_max = 20;
    auto* check2pg = app.add_subcommand("check2pg", "Classify a stable 2-polyGEM");
    check2pg->add_option("--input", input, "Map in the E:/F:/f(...) format")->required();
    check2pg->add_option("--r", r_max, "Iterations of Sq_1 to certify")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitOk;
    } catch (const CLI::ParseError& e) {
        err << "polygem: " << e.what() << '\n';
        return ExitInputError;
    }

    Outcome result;
    try {
        if (*reduce)
            result = do_reduce(element);
        else if (*basis_cmd)
            result = do_basis(module, degree, max_degree);
        else if (*milgram)
            result = do_milgram(n, max_degree);
        else if (*series)
            result = do_series(space, max_degree);
        else if (*emfiber)
            result = do_emfiber(input, square, compare, max_degree);
        else if (*construct)
            result = do_construct(l, steps, max_degree, witness);
        else
            result = do_check2pg(input, r_max, max_degree);
    } catch (const std::invalid_argument& e) {
        // Parse errors, bad factors and bad parameters all land here.
        err << "polygem: " << e.what() << '\n';
        return ExitInputError;
    } catch (const std::domain_error& e) {
        err << "polygem: " << e.what() << '\n';
        return ExitVerificationFailed;
    }

    if (output.empty()) {
        out << result.report;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!(f << result.report)) {
            err << "polygem: cannot write " << output << '\n';
            return ExitInputError;
        }
    }
    if (result.code == ExitVerificationFailed)
        err << "polygem: verification failed, see report\n";
    return result.code;
}

}  // namespace polygem
