#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoclass/arith.hpp"
#include "isoclass/census.hpp"
#include "isoclass/characters.hpp"
#include "isoclass/error.hpp"
#include "isoclass/experiments.hpp"
#include "isoclass/lfunctions.hpp"
#include "isoclass/quadforms.hpp"
#include "isoclass/sieve.hpp"

namespace isoclass::cli {

namespace {

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string rational_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>)
                return format_number(v);
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else
                return v;
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return nullptr;
                // Round-trip through the 12-digit text so CSV and JSON agree.
                return std::stod(format_number(v));
            } else {
                return v;
            }
        },
        cell);
}

Cell param_cell(const experiments::ParamValue& v)
{
    return std::visit([](const auto& x) -> Cell { return x; }, v);
}

// ---------------------------------------------------------------------------
// Options shared by every subcommand.

struct Common
{
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;

    Parallelism parallelism() const { return {threads}; }
};

void add_common(CLI::App* sub, Common& common)
{
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "Output file (stdout when omitted)");
    sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

// ---------------------------------------------------------------------------
// Subcommands. Each validates its inputs through the owning module before
// the heavy computation starts.

struct CensusArgs
{
    std::int64_t p = 0;
    std::int64_t max_p = census::kDefaultMaxPrime;
};

Document run_census(const CensusArgs& a, const Common& c)
{
    const auto table = census::census(a.p, {a.max_p, c.parallelism()});
    Document doc;
    doc.command = "census";
    doc.params = {{"p", a.p}, {"max_p", a.max_p}};
    doc.columns = {"t", "I", "iota"};
    for (std::int64_t t = -table.bound; t <= table.bound; ++t)
        doc.rows.push_back({t, table.count(t), census::iota(table, t)});
    doc.summary = {{"total", table.total},
                   {"aut_weighted_total", rational_string(table.aut_weighted_total)},
                   {"model_count", rational_string(census::model_count_check(table))}};
    for (const auto& [aut, n] : table.classes_by_aut) doc.summary.emplace_back("classes_aut" + std::to_string(aut), n);
    return doc;
}

struct TheoremArgs
{
    std::int64_t q = 0;
    std::vector<std::int64_t> R;
    std::string method = "auto";
    bool mirror = false;
    std::int64_t max_p = census::kDefaultMaxPrime;
};

Document run_theorem(const TheoremArgs& a, const Common& c)
{
    const auto pp = arith::require_field_size(a.q);
    for (std::int64_t R : a.R) {
        validate_window({a.q, R});
        if (R < 2) throw DomainError("theorem needs R >= 2 (log R = 0 at R = 1)");
    }
    std::string method = a.method;
    if (method == "auto") method = (pp.exponent == 1 && a.q <= a.max_p) ? "census" : "formula";
    if (method == "census" && pp.exponent != 1)
        throw DomainError("census path needs a prime q; use --method formula for prime powers");

    Document doc;
    doc.command = "theorem";
    std::string r_list;
    for (std::int64_t R : a.R) r_list += (r_list.empty() ? "" : ";") + std::to_string(R);
    doc.params = {{"q", a.q}, {"R", r_list}, {"method", method}, {"mirror", a.mirror}};
    doc.columns = {"q", "R", "count", "sum_iota", "avg_iota", "envelope", "ratio"};

    std::optional<census::TraceTable> table;
    if (method == "census") table = census::census(a.q, {a.max_p, c.parallelism()});

    for (std::int64_t R : a.R) {
        const WindowSpec w{a.q, R};
        const auto row = table ? experiments::theorem_window_average(w, *table, a.mirror)
                               : experiments::theorem_window_average(experiments::window_counts_formula(w));
        doc.rows.push_back({a.q, R, std::get<std::int64_t>(*row.find("count")),
                            std::get<double>(*row.find("sum_iota")), row.statistic, row.envelope, row.ratio});
        if (const auto* m = row.find("mirror_sum_iota"))
            doc.summary.emplace_back("mirror_sum_iota[R=" + std::to_string(R) + "]", param_cell(*m));
    }
    return doc;
}

struct SatoTateArgs
{
    std::int64_t p = 0;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::int64_t max_p = census::kDefaultMaxPrime;
};

Document run_satotate(const SatoTateArgs& a, const Common& c)
{
    std::vector<std::pair<double, double>> windows;
    if (a.alpha || a.beta) {
        if (!a.alpha || !a.beta) throw DomainError("satotate needs both --alpha and --beta, or neither");
        if (!(*a.alpha >= -1.0 && *a.beta <= 1.0 && *a.alpha < *a.beta))
            throw DomainError("satotate needs -1 <= alpha < beta <= 1");
        windows.emplace_back(*a.alpha, *a.beta);
    } else {
        windows = {{-1.0, -0.5}, {-0.5, 0.0}, {0.0, 0.5}, {0.5, 1.0}, {-1.0, 1.0}};
    }
    const auto table = census::census(a.p, {a.max_p, c.parallelism()});

    Document doc;
    doc.command = "satotate";
    doc.params = {{"p", a.p}};
    if (a.alpha) {
        doc.params.emplace_back("alpha", *a.alpha);
        doc.params.emplace_back("beta", *a.beta);
    }
    doc.columns = {"q", "alpha", "beta", "statistic", "mu", "c", "ratio"};
    for (const auto& [lo, hi] : windows) {
        const auto row = experiments::sato_tate_compare(table, lo, hi);
        doc.rows.push_back({a.p, lo, hi, row.statistic, std::get<double>(*row.find("mu")),
                            std::get<double>(*row.find("c")), row.ratio});
    }
    return doc;
}

struct CharSumArgs
{
    std::int64_t q = 0;
    std::int64_t R = 0;
    std::int64_t L = 0;
    std::string mode = "paper_literal";
};

Document run_charsum(const CharSumArgs& a, const Common& c)
{
    const auto mode = characters::parse_mode(a.mode);
    const WindowSpec w{a.q, a.R};
    validate_window(w);
    const auto result = characters::avg_max_char_sum(w, a.L, mode, c.parallelism());

    Document doc;
    doc.command = "charsum";
    doc.params = {{"q", a.q}, {"R", a.R}, {"L", a.L}, {"mode", std::string(characters::to_string(mode))}};
    doc.columns = {"q", "R", "L", "avg_max", "envelope", "ratio"};
    const double envelope = result.envelope.value_or(std::nan(""));
    const double ratio = result.envelope && *result.envelope > 0.0 ? result.average / envelope : std::nan("");
    doc.rows.push_back({a.q, a.R, a.L, result.average, envelope, ratio});
    doc.summary = {{"total", result.total}};
    if (a.R >= 2) {
        const auto threshold = experiments::l_threshold(a.q, a.R);
        doc.summary.emplace_back("X", experiments::x_parameter(a.q, a.R));
        doc.summary.emplace_back("log_l_threshold", threshold.log_value);
        doc.summary.emplace_back("l_condition", experiments::satisfies_l_condition(a.q, a.R, a.L));
    }
    return doc;
}

struct LFuncArgs
{
    std::int64_t q = 0;
    std::optional<std::int64_t> t;
    std::int64_t N = 100'000;
    std::optional<std::int64_t> R;
};

Document run_lfunc(const LFuncArgs& a, const Common& c)
{
    const auto pp = arith::require_field_size(a.q);
    if (a.N < 1) throw DomainError("--n must be >= 1");
    std::vector<std::int64_t> traces;
    if (a.t) {
        quadforms::require_ordinary_trace(a.q, *a.t);
        traces.push_back(*a.t);
    } else {
        for (std::int64_t t = 1; t * t < 4 * a.q; ++t)
            if (t % pp.prime != 0) traces.push_back(t);
    }
    if (a.R) validate_window({a.q, *a.R});

    struct Row
    {
        lfunc::LValueRecord rec;
        double truncated = 0.0;
    };
    const auto rows = parallel_map<Row>(traces.size(), c.parallelism(), [&](std::size_t i) {
        Row row;
        row.rec = lfunc::l_star_and_full(a.q, traces[i]);
        row.truncated = lfunc::l_truncated(
            characters::CharacterHandle(a.q, traces[i], characters::CharacterMode::field_disc), a.N);
        return row;
    });

    Document doc;
    doc.command = "lfunc";
    doc.params = {{"q", a.q}, {"N", a.N}};
    if (a.t) doc.params.emplace_back("t", *a.t);
    if (a.R) doc.params.emplace_back("R", *a.R);
    doc.columns = {"q", "t", "f", "Dstar", "L_star", "euler", "L_full", "L_trunc", "residual"};
    double mertens = 0.0;
    for (const auto& row : rows) {
        const auto& r = row.rec;
        doc.rows.push_back({a.q, r.t, r.split.f, r.split.D_star, r.L_star, r.euler_product, r.L_full, row.truncated,
                            std::abs(row.truncated - r.L_full)});
        mertens = std::max(mertens, lfunc::mertens_ratio(r));
    }
    doc.summary = {{"mertens_C", mertens}};
    if (a.R) {
        const auto avg = lfunc::avg_abs_l({a.q, *a.R}, lfunc::LMethod::class_number_formula, a.N, c.parallelism());
        doc.summary.emplace_back("avg_abs_l", avg.average);
        doc.summary.emplace_back("sum_abs_l", avg.sum);
        doc.summary.emplace_back("avg_abs_l_envelope", avg.envelope);
        doc.summary.emplace_back("avg_abs_l_ratio", avg.average / avg.envelope);
    }
    return doc;
}

struct SieveArgs
{
    std::int64_t q = 0;
    std::int64_t R = 0;
    std::int64_t N = 0;
    std::uint64_t seed = 0;
};

Document run_sieve(const SieveArgs& a, const Common& c)
{
    const WindowSpec w{a.q, a.R};
    validate_window(w);
    if (a.N < 1) throw DomainError("--n must be >= 1");
    const sieve::SieveLimits limits;
    if (a.N > limits.max_N) throw DomainError("sieve instance too large: N = " + std::to_string(a.N));
    const sieve::SieveInstance inst(w, sieve::random_coefficients(a.N, a.seed));
    sieve::check_limits(inst, limits);

    const double lhs = sieve::sieve_lhs(inst, sieve::Residues::coprime, c.parallelism());
    const auto env = sieve::sieve_envelopes(inst);

    Document doc;
    doc.command = "sieve";
    doc.params = {{"q", a.q}, {"R", a.R}, {"N", a.N}, {"seed", static_cast<std::int64_t>(a.seed)}};
    doc.columns = {"q", "R", "N", "seed", "lhs", "env_paper", "env_classical", "env_conjecture"};
    doc.rows.push_back({a.q, a.R, a.N, static_cast<std::int64_t>(a.seed), lhs, env.paper, env.classical, env.conjecture});
    doc.summary = {{"Z", inst.energy()},
                   {"ratio_paper", lhs / env.paper},
                   {"ratio_classical", lhs / env.classical},
                   {"ratio_conjecture", lhs / env.conjecture}};
    return doc;
}

struct GaussArgs
{
    std::int64_t r_min = 1;
    std::int64_t r_max = 2000;
    std::uint64_t seed = 0;
    std::string convention = "character";
};

// A coprime v in [1, r] drawn from a stream keyed by (seed, r), so the
// choice does not depend on how rows are scheduled.
std::int64_t coprime_sample(std::uint64_t seed, std::int64_t r)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
    std::mt19937_64 gen(seq);
    for (;;) {
        const auto v = static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(r)) + 1;
        if (std::gcd(v, r) == 1) return v;
    }
}

Document run_gauss(const GaussArgs& a, const Common& c)
{
    if (a.r_min < 1 || a.r_max < a.r_min) throw DomainError("gauss needs 1 <= r-min <= r-max");
    const auto convention = characters::parse_convention(a.convention);
    const auto count = static_cast<std::size_t>(a.r_max - a.r_min + 1);
    struct Row
    {
        double abs_tau = 0.0;
        double residual = 0.0;
    };
    const auto rows = parallel_map<Row>(count, c.parallelism(), [&](std::size_t i) {
        const std::int64_t r = a.r_min + static_cast<std::int64_t>(i);
        return Row{std::abs(characters::gauss_sum(r, convention)),
                   characters::gauss_twist_residual(coprime_sample(a.seed, r), r, convention)};
    });

    Document doc;
    doc.command = "gauss";
    doc.params = {{"r_min", a.r_min}, {"r_max", a.r_max}, {"seed", static_cast<std::int64_t>(a.seed)},
                  {"convention", a.convention}};
    doc.columns = {"r", "abs_tau", "sqrt_r", "residual"};
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t r = a.r_min + static_cast<std::int64_t>(i);
        doc.rows.push_back({r, rows[i].abs_tau, std::sqrt(static_cast<double>(r)), rows[i].residual});
    }
    return doc;
}

struct DivisorArgs
{
    std::optional<int> nu;
    std::optional<std::int64_t> M;
};

Document run_divisor(const DivisorArgs& a, const Common& c)
{
    std::vector<std::pair<int, std::int64_t>> grid;
    if (a.nu || a.M) {
        if (!a.nu || !a.M) throw DomainError("divisor needs both --nu and --m, or neither");
        grid.emplace_back(*a.nu, *a.M);
    } else {
        for (int nu = 1; nu <= 3; ++nu)
            for (std::int64_t M = 2; M <= 32; ++M) grid.emplace_back(nu, M);
    }
    const auto checks = parallel_map<sieve::GaraevCheck>(grid.size(), c.parallelism(), [&](std::size_t i) {
        return sieve::garaev_check(grid[i].first, grid[i].second);
    });

    Document doc;
    doc.command = "divisor";
    if (a.nu) doc.params = {{"nu", static_cast<std::int64_t>(*a.nu)}, {"M", *a.M}};
    else doc.params = {{"grid", std::string("nu=1..3;M=2..32")}};
    doc.columns = {"nu", "M", "lhs", "rhs", "ok"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        doc.rows.push_back({static_cast<std::int64_t>(grid[i].first), grid[i].second,
                            static_cast<std::int64_t>(checks[i].lhs), checks[i].rhs, checks[i].ok});
    return doc;
}

struct PsiArgs
{
    std::int64_t q = 0;
};

Document run_psi(const PsiArgs& a, const Common& c)
{
    const auto pp = arith::require_field_size(a.q);
    std::vector<std::int64_t> traces;
    for (std::int64_t t = 1; t * t < 4 * a.q; ++t)
        if (t % pp.prime != 0) traces.push_back(t);

    struct Row
    {
        std::int64_t f = 0;
        Rational psi{0};
    };
    const auto rows = parallel_map<Row>(traces.size(), c.parallelism(), [&](std::size_t i) {
        const std::int64_t t = traces[i];
        return Row{arith::conductor_split(t * t - 4 * a.q).f, quadforms::psi_derived(a.q, t)};
    });

    Document doc;
    doc.command = "psi";
    doc.params = {{"q", a.q}};
    doc.columns = {"q", "t", "f", "psi", "loglog_env", "ratio"};
    double worst = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const double env = std::pow(std::log(std::log(static_cast<double>(rows[i].f) + 2.0)), 2.0);
        const double psi = static_cast<double>(rows[i].psi.numerator()) / static_cast<double>(rows[i].psi.denominator());
        doc.rows.push_back({a.q, traces[i], rows[i].f, rational_string(rows[i].psi), env, psi / env});
        worst = std::max(worst, psi / env);
    }
    doc.summary = {{"max_ratio", worst}};
    return doc;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing output file '" + path + "'");
}

} // namespace

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_csv(const Document& doc)
{
    std::ostringstream os;
    os << "# command=" << doc.command << '\n';
    for (const auto& [k, v] : doc.params) os << "# " << k << '=' << cell_text(v) << '\n';
    for (const auto& [k, v] : doc.summary) os << "# summary." << k << '=' << cell_text(v) << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << csv_escape(doc.columns[i]);
    os << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Document& doc)
{
    nlohmann::ordered_json j;
    j["command"] = doc.command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.params) j["params"][k] = cell_json(v);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[doc.columns[i]] = cell_json(row[i]);
        j["rows"].push_back(std::move(r));
    }
    if (!doc.summary.empty()) {
        j["summary"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : doc.summary) j["summary"][k] = cell_json(v);
    }
    return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact isogeny-class statistics over prime fields", argv.empty() ? "isoclass" : argv.front()};
    app.require_subcommand(1);

    Common common;
    std::string selected;

    CensusArgs census_args;
    auto* census_cmd = app.add_subcommand("census", "Isomorphism-class counts I(t) for every trace");
    census_cmd->add_option("--p", census_args.p, "Prime > 3")->required();
    census_cmd->add_option("--max-p", census_args.max_p, "Largest prime accepted");

    TheoremArgs theorem_args;
    auto* theorem_cmd = app.add_subcommand("theorem", "Dyadic window average of iota(t) against its envelope");
    theorem_cmd->add_option("--p,--q", theorem_args.q, "Field size (prime, or prime power with --method formula)")->required();
    theorem_cmd->add_option("--r", theorem_args.R, "Window parameter(s) R >= 2")->required()->delimiter(',');
    theorem_cmd->add_option("--method", theorem_args.method)->check(CLI::IsMember({"auto", "census", "formula"}));
    theorem_cmd->add_flag("--mirror", theorem_args.mirror, "Also sum the window -2R <= t < -R");
    theorem_cmd->add_option("--max-p", theorem_args.max_p, "Largest prime for the census path");

    SatoTateArgs st_args;
    auto* st_cmd = app.add_subcommand("satotate", "Self-calibrated Sato-Tate window masses");
    st_cmd->add_option("--p", st_args.p, "Prime > 3")->required();
    st_cmd->add_option("--alpha", st_args.alpha);
    st_cmd->add_option("--beta", st_args.beta);
    st_cmd->add_option("--max-p", st_args.max_p);

    CharSumArgs cs_args;
    auto* cs_cmd = app.add_subcommand("charsum", "Averaged maxima of quadratic character sums");
    cs_cmd->add_option("--q", cs_args.q)->required();
    cs_cmd->add_option("--r", cs_args.R)->required();
    cs_cmd->add_option("--l", cs_args.L)->required();
    cs_cmd->add_option("--mode", cs_args.mode)->check(CLI::IsMember({"paper_literal", "field_disc"}));

    LFuncArgs lf_args;
    auto* lf_cmd = app.add_subcommand("lfunc", "L(1, chi) values per ordinary trace");
    lf_cmd->add_option("--q", lf_args.q)->required();
    lf_cmd->add_option("--t", lf_args.t);
    lf_cmd->add_option("--n", lf_args.N, "Terms in the truncated series");
    lf_cmd->add_option("--r", lf_args.R, "Also report the dyadic average of |L| over t ~ R");

    SieveArgs sv_args;
    auto* sv_cmd = app.add_subcommand("sieve", "Brute-force large-sieve sum on seeded random coefficients");
    sv_cmd->add_option("--q", sv_args.q)->required();
    sv_cmd->add_option("--r", sv_args.R)->required();
    sv_cmd->add_option("--n", sv_args.N)->required();
    sv_cmd->add_option("--seed", sv_args.seed)->required();

    GaussArgs g_args;
    auto* g_cmd = app.add_subcommand("gauss", "Gauss sum sizes and twist residuals");
    g_cmd->add_option("--r-min", g_args.r_min);
    g_cmd->add_option("--r-max", g_args.r_max);
    g_cmd->add_option("--seed", g_args.seed);
    g_cmd->add_option("--convention", g_args.convention, "chi_r used when 2 || r")
        ->check(CLI::IsMember({"character", "literal"}));

    DivisorArgs d_args;
    auto* d_cmd = app.add_subcommand("divisor", "Second moment of the bounded multiple divisor function");
    d_cmd->add_option("--nu", d_args.nu);
    d_cmd->add_option("--m", d_args.M);

    PsiArgs psi_args;
    auto* psi_cmd = app.add_subcommand("psi", "The class-count weight psi(f_t) per ordinary trace");
    psi_cmd->add_option("--q", psi_args.q)->required();

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_common(sub, common);

    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    }

    try {
        Document doc;
        if (census_cmd->parsed()) doc = run_census(census_args, common);
        else if (theorem_cmd->parsed()) doc = run_theorem(theorem_args, common);
        else if (st_cmd->parsed()) doc = run_satotate(st_args, common);
        else if (cs_cmd->parsed()) doc = run_charsum(cs_args, common);
        else if (lf_cmd->parsed()) doc = run_lfunc(lf_args, common);
        else if (sv_cmd->parsed()) doc = run_sieve(sv_args, common);
        else if (g_cmd->parsed()) doc = run_gauss(g_args, common);
        else if (d_cmd->parsed()) doc = run_divisor(d_args, common);
        else doc = run_psi(psi_args, common);

        const std::string text = common.format == "json" ? to_json(doc) : to_csv(doc);
        write_output(text, common.out, out);
        std::ostream& note = common.out.empty() ? err : out;
        note << doc.command << ": " << doc.rows.size() << " row(s)";
        if (!common.out.empty()) note << " -> " << common.out;
        note << '\n';
        return kExitOk;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIoError;
    }
}

} // namespace isoclass::cli
