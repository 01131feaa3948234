#include <lacegate/verifier.hpp>

#include <stdexcept>

#include <lacegate/errors.hpp>

namespace lacegate::verify
{

std::string_view name(model m)
{
    return m == model::saw ? "saw" : "percolation";
}

model parse_model(std::string_view text)
{
    if (text == "saw") {
        return model::saw;
    }
    if (text == "percolation") {
        return model::percolation;
    }
    throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected saw or percolation)");
}

int min_dimension(model m)
{
    return m == model::saw ? 5 : 7;
}

std::string_view name(verdict v)
{
    switch (v) {
        case verdict::pass:
            return "pass";
        case verdict::bound_failure:
            return "bound_failure";
        case verdict::unsupported_dimension:
            return "unsupported_dimension";
    }
    return "unknown";
}

void bootstrap_constants::validate() const
{
    if (K1 < 1 || K2 < 1 || K3 < 1) {
        throw std::invalid_argument("bootstrap constants must satisfy K_i >= 1");
    }
}

bootstrap_constants reference_constants(model m, int d)
{
    if (m == model::saw) {
        return {m, d, make_rational(103, 100), make_rational(103, 100), make_rational(179, 100)};
    }
    return {m, d, make_rational(101, 100), make_rational(109, 100), make_rational(270, 100)};
}

namespace
{

void fail_stage(stage_record &s, const std::string &constraint, const std::string &detail)
{
    check_record c;
    c.name = constraint;
    c.pass = false;
    s.checks.push_back(std::move(c));
    if (s.binding_constraint.empty()) {
        s.binding_constraint = constraint;
        s.detail = detail;
    }
}

void add_check(stage_record &s, std::string name, const certified_upper &lhs, const big_rational &threshold)
{
    check_record c{std::move(name), lhs, threshold, lhs.value() < threshold};
    if (!c.pass && s.binding_constraint.empty()) {
        s.binding_constraint = c.name;
        s.detail = c.name + " bound " + to_decimal(lhs.value(), 6, rounding::up) + " is not below "
                   + to_decimal(threshold, 6, rounding::down);
    }
    s.checks.push_back(std::move(c));
}

void add_g_checks(stage_record &s, const g_bounds &g, const bootstrap_constants &K)
{
    add_check(s, "g1", g.g1, K.K1);
    add_check(s, "g2", g.g2, K.K2);
    add_check(s, "g3", g.g3, K.K3);
}

void run_saw(stage_record &s, const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    const saw::diagram_bounds db = s.stage == lacegate::stage::initial
                                       ? saw::initial_diagrams(rw)
                                       : saw::bootstrap_diagrams(rw, K.K1, K.K2, K.K3);
    s.diagrams = db;
    s.saw_series = saw::compute_series(db);
    s.sufficiency = saw::check_sufficiency(*s.saw_series);
    add_check(s, "sufficiency", s.sufficiency->lhs, s.sufficiency->threshold);
    s.g = saw::compute_g_bounds(db, *s.saw_series);
    add_g_checks(s, *s.g, K);
}

void run_percolation(stage_record &s, const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    const perc::diagram_bounds db = s.stage == lacegate::stage::initial
                                        ? perc::initial_diagrams(rw)
                                        : perc::bootstrap_diagrams(rw, K.K1, K.K2, K.K3);
    s.diagrams = db;
    s.phi = perc::compute_phi(db);
    s.perc_series = perc::compute_series(db, *s.phi);
    s.sufficiency = perc::check_sufficiency(*s.perc_series);
    add_check(s, "sufficiency", s.sufficiency->lhs, s.sufficiency->threshold);
    s.g = perc::compute_g_bounds(db, *s.phi, *s.perc_series);
    add_g_checks(s, *s.g, K);
}

stage_record run_stage(lacegate::stage st, const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    K.validate();
    if (rw.d != K.d) {
        throw std::invalid_argument("random-walk quantities computed for another dimension");
    }
    stage_record s;
    s.stage = st;
    if (K.d < min_dimension(K.m)) {
        s.detail = std::string(name(K.m)) + " bound chain needs d >= " + std::to_string(min_dimension(K.m));
        s.binding_constraint = "unsupported_dimension";
        return s;
    }
    s.computed = true;
    try {
        if (K.m == model::saw) {
            run_saw(s, rw, K);
        } else {
            run_percolation(s, rw, K);
        }
    } catch (const bound_chain_failure &e) {
        fail_stage(s, e.constraint(), e.what());
    }
    s.pass = s.binding_constraint.empty();
    return s;
}

stage_record unsupported_stage(lacegate::stage st, const bootstrap_constants &K)
{
    stage_record s;
    s.stage = st;
    s.binding_constraint = "unsupported_dimension";
    s.detail = "random-walk loop diverges for d = " + std::to_string(K.d);
    return s;
}

std::optional<rw::rw_quantities> try_rw(int d, unsigned long N)
{
    try {
        return rw::rw_bundle(d, N);
    } catch (const divergence_error &) {
        return std::nullopt;
    }
}

} // namespace

stage_record check_initial(const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    return run_stage(lacegate::stage::initial, rw, K);
}

stage_record check_bootstrap(const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    return run_stage(lacegate::stage::bootstrap, rw, K);
}

stage_record check_initial(const bootstrap_constants &K, unsigned long N)
{
    const auto rw = try_rw(K.d, N);
    return rw ? check_initial(*rw, K) : unsupported_stage(lacegate::stage::initial, K);
}

stage_record check_bootstrap(const bootstrap_constants &K, unsigned long N)
{
    const auto rw = try_rw(K.d, N);
    return rw ? check_bootstrap(*rw, K) : unsupported_stage(lacegate::stage::bootstrap, K);
}

namespace
{

certificate assemble(const bootstrap_constants &K, unsigned long N, std::optional<rw::rw_quantities> rw,
                     stage_record initial, stage_record bootstrap)
{
    certificate c;
    c.m = K.m;
    c.d = K.d;
    c.N = N;
    c.K = K;
    c.rw = std::move(rw);
    c.initial = std::move(initial);
    c.bootstrap = std::move(bootstrap);
    c.theorem_pass = c.initial.pass && c.bootstrap.pass;
    if (c.theorem_pass) {
        c.outcome = verdict::pass;
    } else if (!c.initial.computed || !c.bootstrap.computed) {
        c.outcome = verdict::unsupported_dimension;
    } else {
        c.outcome = verdict::bound_failure;
    }
    if (!c.initial.pass) {
        c.binding_constraint = "initial:" + c.initial.binding_constraint;
    } else if (!c.bootstrap.pass) {
        c.binding_constraint = "bootstrap:" + c.bootstrap.binding_constraint;
    }
    c.assert_consistent();
    return c;
}

} // namespace

certificate verify_theorem(const rw::rw_quantities &rw, const bootstrap_constants &K)
{
    return assemble(K, rw.N, rw, check_initial(rw, K), check_bootstrap(rw, K));
}

certificate verify_theorem(const bootstrap_constants &K, unsigned long N)
{
    K.validate();
    auto rw = try_rw(K.d, N);
    if (!rw) {
        return assemble(K, N, std::nullopt, unsupported_stage(lacegate::stage::initial, K),
                        unsupported_stage(lacegate::stage::bootstrap, K));
    }
    return verify_theorem(*rw, K);
}

void certificate::assert_consistent() const
{
    auto stage_ok = [](const stage_record &s) {
        if (!s.pass) {
            return !s.binding_constraint.empty();
        }
        if (!s.computed || !s.binding_constraint.empty() || !s.sufficiency || !s.g) {
            return false;
        }
        for (const auto &c : s.checks) {
            if (!c.pass) {
                return false;
            }
        }
        return s.checks.size() == 4;
    };
    if (!stage_ok(initial) || !stage_ok(bootstrap)) {
        throw std::logic_error("certificate stage record is inconsistent");
    }
    if (theorem_pass != (initial.pass && bootstrap.pass)) {
        throw std::logic_error("theorem_pass disagrees with the stage results");
    }
    if (theorem_pass != (outcome == verdict::pass) || theorem_pass != binding_constraint.empty()) {
        throw std::logic_error("certificate verdict is inconsistent");
    }
}

} // namespace lacegate::verify
