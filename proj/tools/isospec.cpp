#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isospec/error.hpp"
#include "isospec/search.hpp"
#include "isospec/spectrum.hpp"
#include "isospec/theta.hpp"
#include "isospec/weight_lattice.hpp"

using namespace isospec;
using json = nlohmann::ordered_json;

namespace {

// Bad flag values that CLI11 cannot see (space grammar, family names, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpaceKind space_arg(const std::string& text)
{
    try {
        return parse_space(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

GroupFamily family_arg(const std::string& kind, int n)
{
    try {
        return GroupFamily::make(parse_family_kind(kind), n);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

ReportFormat format_arg(const std::string& text)
{
    try {
        return parse_format(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string join(const std::vector<BigInt>& values, char sep = ',')
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += values[i].str();
    }
    return out;
}

json strings(const std::vector<BigInt>& values)
{
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(v.str());
    }
    return out;
}

std::string bracketed(const std::vector<std::int64_t>& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i != 0 ? ", " : "") + std::to_string(s[i]);
    }
    return out + "]";
}

// `key = value` lines; `#` starts a comment; values may be quoted.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file " + path);
    }
    std::map<std::string, std::string> out;
    std::string line;
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    for (int number = 1; std::getline(in, line); ++number) {
        line = strip(line.substr(0, line.find('#')));
        if (line.empty() || line.front() == '[') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        std::string value = strip(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        out[strip(line.substr(0, eq))] = value;
    }
    return out;
}

// Lattice options shared by theta, rational, spectrum and genfun.
struct LatticeArgs {
    std::string space;
    std::string family;
    int n = 0;
    std::int64_t q = 1;
    std::vector<std::int64_t> s;
    std::int64_t u = 0;
    bool even = false;

    void add(CLI::App* cmd, bool family_allowed)
    {
        cmd->add_option("--space", space, "cp:<n>, s:<d> or hp1");
        if (family_allowed) {
            cmd->add_option("--family", family, "A, B, C2 or D");
            cmd->add_option("--n", n, "rank")->check(CLI::PositiveNumber);
            cmd->add_flag("--even", even, "intersect with D2 (C2 only)");
        }
        cmd->add_option("--q", q, "group order")->check(CLI::PositiveNumber);
        cmd->add_option("--s", s, "exponents, comma separated")->delimiter(',')->required();
        cmd->add_option("--u", u, "character");
    }

    std::optional<SpaceKind> space_kind() const
    {
        if (space.empty()) {
            return std::nullopt;
        }
        return space_arg(space);
    }

    CongruenceLattice lattice() const
    {
        const CyclicParams params{q, s, u};
        if (const auto sp = space_kind()) {
            return lattice_for(*sp, params);
        }
        if (family.empty()) {
            throw UsageError("either --space or --family is required");
        }
        int rank = n > 0 ? n : static_cast<int>(s.size());
        if (n == 0 && family == "A") {
            rank -= 1; // full list of n + 1 exponents
        }
        return CongruenceLattice::make(family_arg(family, rank), params, even);
    }

    SpaceKind required_space() const
    {
        const auto sp = space_kind();
        if (!sp) {
            throw UsageError("--space is required");
        }
        return *sp;
    }
};

void print_spectrum(const SpectrumDescriptor& spec, ReportFormat format, const json& zeta)
{
    switch (format) {
    case ReportFormat::Json: {
        json entries = json::array();
        for (const auto& e : spec.entries) {
            entries.push_back({{"k", e.k}, {"eigenvalue", e.eigenvalue}, {"multiplicity", e.multiplicity.str()}});
        }
        json doc{{"space", spec.space.name()}, {"entries", entries}};
        if (!zeta.is_null()) {
            doc["zeta"] = zeta;
        }
        std::cout << doc.dump(2) << '\n';
        return;
    }
    case ReportFormat::Csv:
        std::cout << "k,eigenvalue,multiplicity\n";
        for (const auto& e : spec.entries) {
            std::cout << e.k << ',' << e.eigenvalue << ',' << e.multiplicity << '\n';
        }
        break;
    case ReportFormat::Markdown:
        std::cout << "| k | eigenvalue | multiplicity |\n|---:|---:|---:|\n";
        for (const auto& e : spec.entries) {
            std::cout << "| " << e.k << " | " << e.eigenvalue << " | " << e.multiplicity << " |\n";
        }
        break;
    }
    if (!zeta.is_null()) {
        std::cout << "zeta(" << zeta["exponent"].get<std::string>() << ") = "
                  << zeta["value"].get<std::string>() << '\n';
    }
}

BigRational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return BigRational(BigInt(text));
        }
        return BigRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError("bad rational: " + text);
    }
}

int report_verify(int number, std::int64_t qmax, unsigned threads)
{
    const GoldenTable& table = golden_table(number);
    const TableDiff diff = verify_table(number, qmax, threads);
    const auto print = [&](const char* tag, const std::vector<IsospectralFamily>& list) {
        for (const auto& fam : list) {
            std::cout << "  " << tag << ' ' << fam.space.name() << " q=" << fam.q << ':';
            for (const auto& m : fam.members) {
                std::cout << ' ' << bracketed(m.s);
                if (table.mode == UMode::Twisted) {
                    std::cout << " u=" << m.u;
                }
            }
            std::cout << '\n';
        }
    };
    std::cout << "table " << number << ": " << (diff.ok() ? "pass" : "FAIL") << " (missing "
              << diff.missing.size() << ", extra " << diff.extra.size() << ")\n";
    print("missing", diff.missing);
    print("extra", diff.extra);
    return diff.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"isospec: isospectral orbifolds of rank-one symmetric spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "isospec 0.1.0");

    LatticeArgs theta_args;
    std::size_t terms = 10;
    std::string engine = "fast";
    std::string format = "csv";
    auto* theta = app.add_subcommand("theta", "theta series coefficients");
    theta_args.add(theta, true);
    theta->add_option("--terms", terms, "number of coefficients")->check(CLI::PositiveNumber);
    theta->add_option("--engine", engine)->check(CLI::IsMember({"fast", "enumerate"}));
    theta->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    LatticeArgs rational_args;
    auto* rational = app.add_subcommand("rational", "exact rational form of the theta series (u = 0)");
    rational_args.add(rational, true);
    rational->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    LatticeArgs spectrum_args;
    std::size_t levels = 10;
    std::string zeta;
    int precision = 30;
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
    spectrum_args.add(spectrum, false);
    spectrum->add_option("--levels", levels)->check(CLI::PositiveNumber);
    spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
    spectrum->add_option("--zeta", zeta, "also print the partial zeta sum at this exponent (p or p/q)");
    spectrum->add_option("--precision", precision, "significant digits of the zeta sum")
        ->check(CLI::Range(1, 100));

    LatticeArgs genfun_args;
    bool closed = false;
    auto* genfun = app.add_subcommand("genfun", "generating function of the spectrum");
    genfun_args.add(genfun, false);
    genfun->add_option("--terms", terms)->check(CLI::PositiveNumber);
    genfun->add_flag("--rational", closed, "print numerator and denominator (u = 0)");
    genfun->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    std::string space_text;
    std::string family_text;
    int rank = 0;
    std::int64_t q = 1;
    std::vector<std::int64_t> s_a;
    std::vector<std::int64_t> s_b;
    auto* conjugate = app.add_subcommand("conjugate", "canonical forms and conjugacy test");
    conjugate->add_option("--space", space_text);
    conjugate->add_option("--family", family_text);
    conjugate->add_option("--n", rank, "rank (default: inferred from --s)")->check(CLI::PositiveNumber);
    conjugate->add_option("--q", q)->check(CLI::PositiveNumber)->required();
    conjugate->add_option("--s", s_a)->delimiter(',')->required();
    conjugate->add_option("--t", s_b, "second exponent vector")->delimiter(',');

    auto* enumerate = app.add_subcommand("enumerate", "conjugacy class representatives");
    enumerate->add_option("--space", space_text);
    enumerate->add_option("--family", family_text);
    enumerate->add_option("--n", rank)->check(CLI::PositiveNumber);
    enumerate->add_option("--q", q)->check(CLI::PositiveNumber)->required();

    std::string config_path;
    std::int64_t qmin = 1;
    std::int64_t qmax = 0;
    std::string mode = "untwisted";
    int depth_factor = 2;
    unsigned threads = 0;
    auto* search_cmd = app.add_subcommand("search", "isospectral families");
    search_cmd->add_option("--config", config_path, "key = value file (space, qmin, qmax, mode, depth_factor, threads, format)");
    search_cmd->add_option("--space", space_text);
    search_cmd->add_option("--qmin", qmin)->check(CLI::PositiveNumber);
    search_cmd->add_option("--qmax", qmax)->check(CLI::PositiveNumber);
    search_cmd->add_option("--mode", mode)->check(CLI::IsMember({"untwisted", "twisted"}));
    search_cmd->add_option("--depth-factor", depth_factor)->check(CLI::PositiveNumber);
    search_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
    search_cmd->add_option("--threads", threads, "0 = all cores")->envname("ISOSPEC_THREADS");

    int table_number = 0;
    auto* tables = app.add_subcommand("tables", "print the embedded tables of families");
    tables->add_option("--table", table_number)->check(CLI::Range(1, 6))->required();
    tables->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));

    auto* verify = app.add_subcommand("verify", "rerun the searches behind the tables and diff");
    verify->add_option("--table", table_number, "1..6; all tables when omitted")->check(CLI::Range(1, 6));
    verify->add_option("--qmax", qmax)->check(CLI::PositiveNumber);
    verify->add_option("--threads", threads)->envname("ISOSPEC_THREADS");

    auto* noncyclic = app.add_subcommand("noncyclic", "checks of the non-cyclic example in SO(12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*theta) {
            const auto lattice = theta_args.lattice();
            const auto series = theta_truncated(lattice, terms,
                                                engine == "fast" ? ThetaEngine::Fast : ThetaEngine::Enumerate);
            if (format == "json") {
                std::cout << json{{"family", to_string(lattice.family())}, {"q", lattice.q()},
                                  {"s", lattice.s()}, {"u", lattice.u()}, {"coeffs", strings(series.coeffs)}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << join(series.coeffs) << '\n';
            }
        } else if (*rational) {
            const auto lattice = rational_args.lattice();
            const RationalForm form = ehrhart_form(lattice);
            if (format == "json") {
                std::cout << json{{"q", form.q}, {"n", form.n}, {"numerator", strings(form.numerator)},
                                  {"denominator", "(1 - z^" + std::to_string(form.q) + ")^" + std::to_string(form.n + 1)}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "numerator " << join(form.numerator) << '\n'
                          << "form (1 - z) p(z) / (1 - z^" << form.q << ")^" << form.n + 1 << '\n';
            }
        } else if (*spectrum) {
            const auto space = spectrum_args.required_space();
            const auto lattice = spectrum_args.lattice();
            json zeta_doc;
            if (!zeta.empty()) {
                const HighPrecision value = zeta_partial(lattice, space, parse_rational(zeta), levels);
                zeta_doc = {{"exponent", zeta},
                            {"levels", levels},
                            {"value", value.str(precision, std::ios_base::scientific)}};
            }
            print_spectrum(spectrum_table(lattice, space, levels), format_arg(format), zeta_doc);
        } else if (*genfun) {
            const auto space = genfun_args.required_space();
            const auto lattice = genfun_args.lattice();
            if (closed) {
                const auto f = spectral_generating_function(lattice, space);
                if (format == "json") {
                    std::cout << json{{"numerator", strings(f.numerator)}, {"denominator", strings(f.denominator)}}
                                     .dump(2)
                              << '\n';
                } else {
                    std::cout << "numerator " << join(f.numerator) << '\n'
                              << "denominator " << join(f.denominator) << '\n';
                }
            } else {
                const auto series = spectral_generating_series(lattice, space, terms);
                if (format == "json") {
                    std::cout << json{{"space", space.name()}, {"coeffs", strings(series)}}.dump(2) << '\n';
                } else {
                    std::cout << join(series) << '\n';
                }
            }
        } else if (*conjugate) {
            GroupFamily family;
            if (!space_text.empty()) {
                family = space_arg(space_text).family();
            } else if (!family_text.empty()) {
                int n = rank > 0 ? rank : static_cast<int>(s_a.size());
                if (rank == 0 && family_text == "A") {
                    n -= 1; // full list of n + 1 exponents
                }
                family = family_arg(family_text, n);
            } else {
                throw UsageError("either --space or --family is required");
            }
            std::cout << "canonical " << bracketed(canonical_form(family, q, s_a))
                      << '\n';
            if (!s_b.empty()) {
                std::cout << "canonical " << bracketed(canonical_form(family, q, s_b))
                          << '\n';
                const bool same = is_conjugate(family, q, s_a, s_b);
                std::cout << "conjugate " << (same ? "yes" : "no") << '\n';
            }
        } else if (*enumerate) {
            GroupFamily family;
            if (!space_text.empty()) {
                family = space_arg(space_text).family();
            } else if (!family_text.empty() && rank > 0) {
                family = family_arg(family_text, rank);
            } else {
                throw UsageError("either --space or --family with --n is required");
            }
            for (const auto& rep : enumerate_representatives(family, q)) {
                std::cout << bracketed(rep) << '\n';
            }
        } else if (*search_cmd) {
            if (!config_path.empty()) {
                const auto config = read_config(config_path);
                auto pick = [&](const char* key, const CLI::Option* flag, auto& target) {
                    const auto it = config.find(key);
                    if (it == config.end() || flag->count() > 0) {
                        return;
                    }
                    std::istringstream in(it->second);
                    if (!(in >> target)) {
                        throw UsageError(std::string("bad config value for ") + key);
                    }
                };
                pick("space", search_cmd->get_option("--space"), space_text);
                pick("qmin", search_cmd->get_option("--qmin"), qmin);
                pick("qmax", search_cmd->get_option("--qmax"), qmax);
                pick("mode", search_cmd->get_option("--mode"), mode);
                pick("depth_factor", search_cmd->get_option("--depth-factor"), depth_factor);
                pick("threads", search_cmd->get_option("--threads"), threads);
                pick("format", search_cmd->get_option("--format"), format);
                if (mode != "untwisted" && mode != "twisted") {
                    throw UsageError("mode must be untwisted or twisted");
                }
            }
            if (space_text.empty() || qmax < 1) {
                throw UsageError("search needs --space and --qmax");
            }
            const SpaceKind space = space_arg(space_text);
            const ReportFormat fmt = format_arg(format);
            const UMode umode = mode == "twisted" ? UMode::Twisted : UMode::Untwisted;
            const auto families = search({space, qmin, qmax, umode, depth_factor, threads});
            std::cout << family_report(families, space, umode == UMode::Twisted, fmt);
        } else if (*tables) {
            const GoldenTable& table = golden_table(table_number);
            const ReportFormat fmt = format_arg(format);
            for (const int n : table.ranks) {
                const SpaceKind space = SpaceKind::make(table.space, n);
                std::vector<IsospectralFamily> block;
                for (const auto& fam : table.families) {
                    if (fam.space == space) {
                        block.push_back(fam);
                    }
                }
                std::cout << family_report(block, space, table.mode == UMode::Twisted, fmt);
            }
        } else if (*verify) {
            int status = 0;
            for (int t = 1; t <= 6; ++t) {
                if (table_number == 0 || table_number == t) {
                    status |= report_verify(t, qmax, threads);
                }
            }
            return status;
        } else if (*noncyclic) {
            bool all = true;
            for (const auto& check : noncyclic_example_check()) {
                std::cout << (check.pass ? "pass " : "FAIL ") << check.name;
                if (!check.detail.empty()) {
                    std::cout << " (" << check.detail << ')';
                }
                std::cout << '\n';
                all = all && check.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
