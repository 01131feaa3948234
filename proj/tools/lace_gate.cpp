#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lacegate/certificate_json.hpp>
#include <lacegate/errors.hpp>
#include <lacegate/oracles/finite_graph.hpp>
#include <lacegate/oracles/perc_tiny.hpp>
#include <lacegate/oracles/rw_convolution.hpp>
#include <lacegate/oracles/saw_enumeration.hpp>
#include <lacegate/rw_engine.hpp>
#include <lacegate/verifier.hpp>

namespace
{

using namespace lacegate;
using nlohmann::ordered_json;

enum exit_code : int { exit_pass = 0, exit_bound = 1, exit_unsupported = 2, exit_usage = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct run_config {
    std::string model = "saw";
    int dim = 0;
    std::string dims;
    unsigned long N = 500;
    std::string k;
    std::string format = "text";
    std::string out;
    std::string step = "1/100";
    std::string k_min = "1";
    std::string k_max = "10";
    int max_degree = 4;
    int depth = 1;
    std::string graph;
    std::string suite;
    int count = 50;
    std::uint64_t seed = 1;
};

std::string upper6(const big_rational &q)
{
    return to_decimal(q, 6, rounding::up);
}

verify::bootstrap_constants parse_k(const std::string &text, verify::model m, int d)
{
    if (text.empty()) {
        return verify::reference_constants(m, d);
    }
    std::vector<big_rational> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(parse_rational(item));
    }
    if (parts.size() != 3) {
        throw usage_error("--k expects three values K1,K2,K3");
    }
    verify::bootstrap_constants K{m, d, parts[0], parts[1], parts[2]};
    K.validate();
    return K;
}

std::pair<int, int> parse_dims(const run_config &cfg)
{
    if (cfg.dims.empty()) {
        if (cfg.dim == 0) {
            return {3, 9};
        }
        return {cfg.dim, cfg.dim};
    }
    const auto sep = cfg.dims.find("..");
    if (sep == std::string::npos) {
        throw usage_error("--dims expects A..B");
    }
    try {
        return {std::stoi(cfg.dims.substr(0, sep)), std::stoi(cfg.dims.substr(sep + 2))};
    } catch (const std::logic_error &) {
        throw usage_error("--dims expects A..B");
    }
}

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw usage_error("cannot write " + path);
    }
    f << text << '\n';
}

void emit(const run_config &cfg, const std::string &text, const std::string &json)
{
    std::cout << (cfg.format == "json" ? json : text);
    if (cfg.format == "json" || (!text.empty() && text.back() != '\n')) {
        std::cout << '\n';
    }
    if (!cfg.out.empty()) {
        write_file(cfg.out, json);
    }
}

// Left pads to a display width counted in code points.
std::string pad(const std::string &s, std::size_t width)
{
    std::size_t cols = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) {
            ++cols;
        }
    }
    return cols >= width ? s : std::string(width - cols, ' ') + s;
}

std::string entry_text(const rw::rw_entry &e)
{
    return e.is_divergent() ? "∞" : upper6(e.bound().value());
}

int cmd_rw_table(const run_config &cfg)
{
    const auto [lo, hi] = parse_dims(cfg);
    if (lo < 3 || hi > 12 || lo > hi) {
        throw usage_error("dimension range must lie within 3..12");
    }
    if (cfg.N == 0) {
        throw usage_error("--N must be positive");
    }
    std::vector<rw::rw_quantities> rows;
    std::ostringstream t;
    t << pad("d", 3);
    for (const char *h : {"ε₁", "ε₂", "ε₃", "ε₂′"}) {
        t << pad(h, 12);
    }
    t << '\n';
    for (int d = lo; d <= hi; ++d) {
        rows.push_back(rw::rw_bundle(d, cfg.N));
        const auto &r = rows.back();
        t << pad(std::to_string(d), 3);
        for (const auto *e : {&r.eps1, &r.eps2, &r.eps3, &r.eps2_prime}) {
            t << pad(entry_text(*e), 12);
        }
        t << '\n';
    }
    emit(cfg, t.str(), rw_table_to_json(rows));
    return exit_pass;
}

std::string constants_text(const verify::bootstrap_constants &K)
{
    return "(" + to_decimal(K.K1, 6) + ", " + to_decimal(K.K2, 6) + ", " + to_decimal(K.K3, 6) + ")";
}

void stage_text(std::ostream &os, const verify::stage_record &s)
{
    const bool initial = s.stage == stage::initial;
    os << (initial ? "initial" : "bootstrap") << ": " << (s.pass ? (initial ? "pass" : "strict pass") : "fail")
       << '\n';
    if (!s.computed) {
        os << "  " << s.detail << '\n';
        return;
    }
    const certified_upper *ratio = nullptr;
    const certified_upper *rho = nullptr;
    if (const auto *db = std::get_if<saw::diagram_bounds>(&s.diagrams)) {
        ratio = &db->ratio;
    } else if (const auto *db = std::get_if<perc::diagram_bounds>(&s.diagrams)) {
        ratio = &db->ratio;
        rho = &db->rho;
    }
    if (ratio) {
        os << "  r            " << upper6(ratio->value()) << '\n';
    }
    if (rho) {
        os << "  rho          " << upper6(rho->value()) << '\n';
    }
    if (s.saw_series) {
        os << "  pi sum       " << upper6((s.saw_series->pi_odd + s.saw_series->pi_even).value()) << '\n';
    }
    if (s.perc_series) {
        const auto &p = *s.perc_series;
        os << "  combined sum " << upper6((p.pi_even + p.pi_odd + p.delta_even + p.delta_odd).value()) << '\n';
    }
    for (const auto &c : s.checks) {
        os << "  " << c.name << std::string(c.name.size() < 13 ? 13 - c.name.size() : 1, ' ');
        if (s.g || s.sufficiency) {
            os << upper6(c.lhs.value()) << (c.pass ? " <  " : " >= ") << to_decimal(c.threshold, 6) << "  ";
        }
        os << (c.pass ? "pass" : "FAIL") << '\n';
    }
    if (!s.pass && !s.detail.empty()) {
        os << "  " << s.detail << '\n';
    }
}

int cmd_verify(const run_config &cfg)
{
    const verify::model m = verify::parse_model(cfg.model);
    if (cfg.dim == 0 || cfg.N == 0) {
        throw usage_error("verify needs --dim and a positive --N");
    }
    const verify::bootstrap_constants K = parse_k(cfg.k, m, cfg.dim);
    const verify::certificate cert = verify::verify_theorem(K, cfg.N);

    std::ostringstream t;
    t << "model " << verify::name(m) << "  d " << cert.d << "  N " << cert.N << "  K " << constants_text(K) << '\n';
    stage_text(t, cert.initial);
    stage_text(t, cert.bootstrap);
    t << "theorem: " << (cert.theorem_pass ? "pass" : "fail") << '\n';
    t << "continuity: " << cert.continuity << '\n';
    emit(cfg, t.str(), certificate_to_json(cert));

    switch (cert.outcome) {
        case verify::verdict::pass:
            return exit_pass;
        case verify::verdict::unsupported_dimension:
            std::cerr << "unsupported dimension: " << cert.binding_constraint << '\n';
            return exit_unsupported;
        case verify::verdict::bound_failure:
            break;
    }
    std::cerr << "binding constraint: " << cert.binding_constraint << '\n';
    return exit_bound;
}

int cmd_search(const run_config &cfg)
{
    const verify::model m = verify::parse_model(cfg.model);
    if (cfg.dim == 0 || cfg.N == 0) {
        throw usage_error("search needs --dim and a positive --N");
    }
    verify::grid_spec grid;
    try {
        grid = verify::grid_spec::uniform(parse_rational(cfg.step), parse_rational(cfg.k_min), parse_rational(cfg.k_max));
        grid.validate();
    } catch (const std::invalid_argument &e) {
        throw usage_error(e.what());
    }
    verify::search_result res;
    if (cfg.dim > 2) {
        res = verify::search_constants(m, cfg.dim, cfg.N, grid);
    } else {
        res.m = m;
        res.d = cfg.dim;
        res.N = cfg.N;
        res.unsupported = true;
        res.binding_constraint = "unsupported_dimension";
    }

    std::ostringstream t;
    t << "model " << verify::name(m) << "  d " << res.d << "  N " << res.N << "  grid " << cfg.k_min << ".."
      << cfg.k_max << " step " << cfg.step << '\n';
    if (res.feasible) {
        t << "feasible K " << constants_text(*res.point) << '\n';
    } else if (res.unsupported) {
        t << "unsupported dimension\n";
    } else {
        t << "infeasible";
        if (res.point) {
            t << " at K " << constants_text(*res.point);
        }
        t << ", binding constraint " << res.binding_constraint << '\n';
    }
    t << "evaluations " << res.evaluations << '\n';
    emit(cfg, t.str(), search_result_to_json(res));

    if (res.feasible) {
        return exit_pass;
    }
    if (res.unsupported) {
        std::cerr << "unsupported dimension\n";
        return exit_unsupported;
    }
    std::cerr << "binding constraint: " << res.binding_constraint << '\n';
    return exit_bound;
}

ordered_json rational(const big_rational &q)
{
    return ordered_json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"decimal", to_decimal(q, 12)}};
}

int oracle_saw_recursion(const run_config &cfg)
{
    if (cfg.dim < 1) {
        throw usage_error("saw-recursion needs --dim >= 1");
    }
    const auto rep = oracle::verify_saw_recursion(cfg.dim, cfg.max_degree, cfg.depth);
    std::ostringstream t;
    t << "saw-recursion d " << rep.d << "  max-degree " << rep.max_degree << "  depth " << rep.depth << '\n';
    t << "  recursion identity         " << rep.coefficients_checked << " coefficients, " << rep.mismatches.size()
      << " mismatches\n";
    t << "  remainder non-negativity   " << rep.remainder_orders_checked << " remainders, "
      << rep.negative_remainders.size() << " violations\n";
    t << "  remainder bounds           " << rep.remainder_orders_checked << " remainders, "
      << rep.bound_violations.size() << " violations\n";
    for (const auto &mm : rep.mismatches) {
        t << "  mismatch at " << oracle::to_string(mm.site) << " degree " << mm.degree << ": " << mm.lhs
          << " != " << mm.rhs << '\n';
    }
    t << (rep.pass() ? "pass" : "FAIL") << '\n';

    ordered_json j{{"suite", "saw-recursion"},
                   {"d", rep.d},
                   {"max_degree", rep.max_degree},
                   {"depth", rep.depth},
                   {"coefficients_checked", rep.coefficients_checked},
                   {"mismatches", rep.mismatches.size()},
                   {"negative_remainders", rep.negative_remainders.size()},
                   {"bound_violations", rep.bound_violations.size()},
                   {"remainder_orders_checked", rep.remainder_orders_checked},
                   {"pass", rep.pass()}};
    emit(cfg, t.str(), j.dump(2));
    return rep.pass() ? exit_pass : exit_bound;
}

int oracle_rw_convolution(const run_config &cfg)
{
    const auto rep = oracle::rw_convolution_check(cfg.dim, static_cast<int>(cfg.N));
    std::ostringstream t;
    ordered_json ids = ordered_json::array();
    t << "rw-convolution d " << rep.d << "  N " << rep.N << '\n';
    for (const auto &id : rep.identities) {
        t << "  " << id.name << std::string(id.name.size() < 12 ? 12 - id.name.size() : 1, ' ')
          << to_decimal(id.weighted_sum, 12) << "  " << (id.match() ? "exact" : "MISMATCH") << '\n';
        ids.push_back({{"name", id.name},
                       {"weighted_sum", rational(id.weighted_sum)},
                       {"convolution", rational(id.convolution)},
                       {"match", id.match()}});
    }
    t << rep.identities.size() << " identities, " << (rep.pass() ? "pass" : "FAIL") << '\n';
    ordered_json j{{"suite", "rw-convolution"}, {"d", rep.d}, {"N", rep.N}, {"identities", ids}, {"pass", rep.pass()}};
    emit(cfg, t.str(), j.dump(2));
    return rep.pass() ? exit_pass : exit_bound;
}

ordered_json tiny_json(const oracle::perc_tiny_result &r)
{
    return ordered_json{{"two_point", rational(r.two_point)},
                        {"double_connection", rational(r.double_connection)},
                        {"pivotal", rational(r.pivotal)},
                        {"first_pivotal_expansion", rational(r.first_pivotal_expansion)},
                        {"split_identity", r.split_identity()},
                        {"expansion_identity", r.expansion_identity()}};
}

int oracle_perc_tiny(const run_config &cfg)
{
    std::ostringstream t;
    ordered_json j{{"suite", "perc-tiny"}};
    bool pass = true;
    if (!cfg.graph.empty()) {
        const oracle::finite_graph g = oracle::load_graph_json(cfg.graph);
        const auto r = oracle::perc_exact_tiny(g, g.source, g.target);
        t << "perc-tiny " << cfg.graph << "  " << g.vertex_count() << " vertices, " << g.bonds.size() << " bonds\n";
        t << "  two_point            " << r.two_point << '\n';
        t << "  double_connection    " << r.double_connection << '\n';
        t << "  pivotal              " << r.pivotal << '\n';
        t << "  split                " << r.double_connection << " + " << r.pivotal << " = " << r.two_point << "  "
          << (r.split_identity() ? "exact" : "MISMATCH") << '\n';
        t << "  first-pivotal sum    " << r.first_pivotal_expansion << "  "
          << (r.expansion_identity() ? "exact" : "MISMATCH") << '\n';
        pass = r.split_identity() && r.expansion_identity();
        j["graph"] = cfg.graph;
        j["result"] = tiny_json(r);
        try {
            const auto c = oracle::check_pi0_bound(g, g.source, g.target);
            t << "  pi0 bound            " << c.pi0 << " <= " << c.bound << "  " << (c.holds() ? "holds" : "VIOLATED")
              << '\n';
            j["pi0"] = {{"d", c.d}, {"pi0", rational(c.pi0)}, {"bound", rational(c.bound)}, {"holds", c.holds()}};
            pass = pass && c.holds();
        } catch (const unsupported_instance &e) {
            t << "  pi0 bound            not applicable: " << e.what() << '\n';
            j["pi0"] = {{"applicable", false}, {"reason", e.what()}};
        }
    } else {
        if (cfg.count < 1) {
            throw usage_error("--count must be positive");
        }
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> size(1, 12);
        int split = 0;
        int expansion = 0;
        for (int i = 0; i < cfg.count; ++i) {
            const auto g = oracle::random_graph(rng, size(rng));
            const auto r = oracle::perc_exact_tiny(g, g.source, g.target);
            split += r.split_identity();
            expansion += r.expansion_identity();
        }
        pass = split == cfg.count && expansion == cfg.count;
        t << "perc-tiny " << cfg.count << " random graphs, seed " << cfg.seed << '\n';
        t << "  pivotal split        " << split << "/" << cfg.count << " exact\n";
        t << "  first-pivotal sum    " << expansion << "/" << cfg.count << " exact\n";
        j["graphs"] = cfg.count;
        j["seed"] = cfg.seed;
        j["split_exact"] = split;
        j["expansion_exact"] = expansion;
    }
    t << (pass ? "pass" : "FAIL") << '\n';
    j["pass"] = pass;
    emit(cfg, t.str(), j.dump(2));
    return pass ? exit_pass : exit_bound;
}

int cmd_oracle(const run_config &cfg)
{
    if (cfg.suite == "saw-recursion") {
        return oracle_saw_recursion(cfg);
    }
    if (cfg.suite == "rw-convolution") {
        return oracle_rw_convolution(cfg);
    }
    return oracle_perc_tiny(cfg);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Certified bound chains for self-avoiding walk and percolation on the BCC lattice", "lace-gate"};
    app.require_subcommand(1);
    run_config cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--N", cfg.N, "Number of exactly summed random-walk terms")->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "Write the JSON rendering to this file");
    };
    auto add_model = [&cfg](CLI::App *sub) {
        sub->add_option("--model", cfg.model, "Model")->check(CLI::IsMember({"saw", "percolation"}))->required();
        sub->add_option("--dim", cfg.dim, "Dimension")->required();
    };

    auto *rw_table = app.add_subcommand("rw-table", "Random-walk loop, bubble and triangle bounds");
    auto *dim_opt = rw_table->add_option("--dim", cfg.dim, "Single dimension");
    rw_table->add_option("--dims", cfg.dims, "Dimension range A..B")->excludes(dim_opt);
    add_common(rw_table);

    auto *verify_cmd = app.add_subcommand("verify", "Check initial conditions, bootstrap and the theorem gate");
    add_model(verify_cmd);
    verify_cmd->add_option("--k", cfg.k, "Bootstrap constants K1,K2,K3");
    add_common(verify_cmd);

    auto *search = app.add_subcommand("search", "Search the K grid for feasible constants");
    add_model(search);
    search->add_option("--step", cfg.step, "Grid step")->capture_default_str();
    search->add_option("--k-min", cfg.k_min, "Smallest grid value")->capture_default_str();
    search->add_option("--k-max", cfg.k_max, "Largest grid value")->capture_default_str();
    add_common(search);

    auto *oracle_cmd = app.add_subcommand("oracle", "Exact brute-force oracle suites");
    oracle_cmd->add_option("suite", cfg.suite, "Oracle suite")
        ->check(CLI::IsMember({"saw-recursion", "rw-convolution", "perc-tiny"}))
        ->required();
    oracle_cmd->add_option("--dim", cfg.dim, "Dimension");
    oracle_cmd->add_option("--max-degree", cfg.max_degree, "Largest series degree")->capture_default_str();
    oracle_cmd->add_option("--depth", cfg.depth, "Expansion depth")->capture_default_str();
    oracle_cmd->add_option("--graph", cfg.graph, "Graph JSON file");
    oracle_cmd->add_option("--count", cfg.count, "Random graphs when no graph is given")->capture_default_str();
    oracle_cmd->add_option("--seed", cfg.seed, "Seed for the random graphs")->capture_default_str();
    add_common(oracle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_usage;
    }

    try {
        if (rw_table->parsed()) {
            return cmd_rw_table(cfg);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(cfg);
        }
        if (search->parsed()) {
            return cmd_search(cfg);
        }
        if (cfg.suite == "rw-convolution" && oracle_cmd->count("--N") == 0) {
            cfg.N = 4;
        }
        return cmd_oracle(cfg);
    } catch (const usage_error &e) {
        std::cerr << "lace-gate: " << e.what() << '\n';
        return exit_usage;
    } catch (const scale_error &e) {
        std::cerr << "lace-gate: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "lace-gate: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "lace-gate: " << e.what() << '\n';
        return exit_bound;
    }
}
