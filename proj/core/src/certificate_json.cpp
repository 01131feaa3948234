#include <lacegate/certificate_json.hpp>

#include <stdexcept>

#include <json.hpp>

namespace lacegate
{

using nlohmann::ordered_json;

namespace
{

constexpr int decimal_digits = 12;

ordered_json rational_json(const big_rational &q, rounding mode = rounding::nearest)
{
    return ordered_json{{"num", q.get_num().get_str()},
                        {"den", q.get_den().get_str()},
                        {"decimal", to_decimal(q, decimal_digits, mode)}};
}

ordered_json certified_json(const certified_upper &c)
{
    const directed_real e = c.enclosure();
    return ordered_json{{"exact_part", rational_json(c.exact_part(), rounding::up)},
                        {"tail_part", rational_json(c.tail_part(), rounding::up)},
                        {"value", rational_json(c.value(), rounding::up)},
                        {"enclosure", {{"lo", rational_json(e.lo(), rounding::down)},
                                       {"hi", rational_json(e.hi(), rounding::up)}}}};
}

ordered_json entry_json(const rw::rw_entry &e)
{
    if (e.is_divergent()) {
        return ordered_json{{"divergent", true}};
    }
    ordered_json j = certified_json(e.bound());
    j["divergent"] = false;
    return j;
}

ordered_json rw_json(const rw::rw_quantities &rw)
{
    return ordered_json{{"d", rw.d},
                        {"N", rw.N},
                        {"eps1", entry_json(rw.eps1)},
                        {"eps2", entry_json(rw.eps2)},
                        {"eps3", entry_json(rw.eps3)},
                        {"eps2_prime", entry_json(rw.eps2_prime)},
                        {"bubble_sup", entry_json(rw.bubble_sup)},
                        {"triangle_sup", entry_json(rw.triangle_sup)}};
}

std::string_view stage_name(stage s)
{
    return s == stage::initial ? "initial" : "bootstrap";
}

ordered_json diagrams_json(const saw::diagram_bounds &db)
{
    return ordered_json{{"p_sup", rational_json(db.p_sup)},
                        {"step_sup", rational_json(db.step_sup)},
                        {"loop", certified_json(db.loop)},
                        {"bubble", certified_json(db.bubble)},
                        {"bubble_prime", certified_json(db.bubble_prime)},
                        {"weight", certified_json(db.weight)},
                        {"ratio", certified_json(db.ratio)}};
}

ordered_json diagrams_json(const perc::diagram_bounds &db)
{
    ordered_json v = ordered_json::array();
    for (const auto &x : db.vertex) {
        v.push_back(certified_json(x));
    }
    return ordered_json{{"p_sup", rational_json(db.p_sup)},
                        {"step_sup", rational_json(db.step_sup)},
                        {"loop", certified_json(db.loop)},
                        {"bubble", certified_json(db.bubble)},
                        {"triangle", certified_json(db.triangle)},
                        {"vertex", v},
                        {"ratio", certified_json(db.ratio)},
                        {"rho", certified_json(db.rho)}};
}

ordered_json stage_json(const verify::stage_record &s)
{
    ordered_json j;
    j["stage"] = stage_name(s.stage);
    j["computed"] = s.computed;
    if (const auto *db = std::get_if<saw::diagram_bounds>(&s.diagrams)) {
        j["diagrams"] = diagrams_json(*db);
    } else if (const auto *db = std::get_if<perc::diagram_bounds>(&s.diagrams)) {
        j["diagrams"] = diagrams_json(*db);
    } else {
        j["diagrams"] = nullptr;
    }
    if (s.saw_series) {
        j["series"] = {{"pi_odd", certified_json(s.saw_series->pi_odd)},
                       {"pi_even", certified_json(s.saw_series->pi_even)},
                       {"delta_odd", certified_json(s.saw_series->delta_odd)},
                       {"delta_even", certified_json(s.saw_series->delta_even)}};
    } else if (s.perc_series) {
        j["series"] = {{"pi_even", certified_json(s.perc_series->pi_even)},
                       {"pi_odd", certified_json(s.perc_series->pi_odd)},
                       {"delta_even", certified_json(s.perc_series->delta_even)},
                       {"delta_odd", certified_json(s.perc_series->delta_odd)}};
    } else {
        j["series"] = nullptr;
    }
    if (s.phi) {
        ordered_json even = ordered_json::array();
        ordered_json odd = ordered_json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            even.push_back(certified_json(s.phi->even[i]));
            odd.push_back(certified_json(s.phi->odd[i]));
        }
        j["phi"] = {{"even", even}, {"odd", odd}};
    }
    if (s.sufficiency) {
        j["sufficiency"] = {{"lhs", certified_json(s.sufficiency->lhs)},
                            {"threshold", rational_json(s.sufficiency->threshold)},
                            {"pass", s.sufficiency->pass}};
    } else {
        j["sufficiency"] = nullptr;
    }
    if (s.g) {
        j["g_bounds"] = {{"g1", certified_json(s.g->g1)},
                         {"g2", certified_json(s.g->g2)},
                         {"g3", certified_json(s.g->g3)}};
    } else {
        j["g_bounds"] = nullptr;
    }
    ordered_json checks = ordered_json::array();
    for (const auto &c : s.checks) {
        ordered_json cj{{"name", c.name}, {"pass", c.pass}};
        if (s.sufficiency || s.g) {
            cj["lhs"] = certified_json(c.lhs);
            cj["threshold"] = rational_json(c.threshold);
        }
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j[s.stage == stage::initial ? "pass" : "strict_pass"] = s.pass;
    j["binding_constraint"] = s.binding_constraint;
    j["detail"] = s.detail;
    return j;
}

ordered_json constants_json(const verify::bootstrap_constants &K)
{
    return ordered_json{{"K1", rational_json(K.K1)}, {"K2", rational_json(K.K2)}, {"K3", rational_json(K.K3)}};
}

[[noreturn]] void invalid(const std::string &path, const std::string &what)
{
    throw std::invalid_argument("certificate field '" + path + "': " + what);
}

const ordered_json &field(const ordered_json &obj, const std::string &key, const std::string &path)
{
    if (!obj.is_object()) {
        invalid(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        invalid(path + "." + key, "missing");
    }
    return *it;
}

big_rational check_rational(const ordered_json &j, const std::string &path)
{
    const auto &num = field(j, "num", path);
    const auto &den = field(j, "den", path);
    if (!num.is_string() || !den.is_string()) {
        invalid(path, "num and den must be strings");
    }
    if (!field(j, "decimal", path).is_string()) {
        invalid(path + ".decimal", "expected a string");
    }
    try {
        big_int n(num.get<std::string>());
        big_int d(den.get<std::string>());
        if (d <= 0) {
            invalid(path + ".den", "must be positive");
        }
        return make_rational(n, d);
    } catch (const std::invalid_argument &e) {
        if (std::string_view(e.what()).starts_with("certificate field")) {
            throw;
        }
        invalid(path, "num and den must be integers");
    }
}

void check_certified(const ordered_json &j, const std::string &path)
{
    const big_rational exact = check_rational(field(j, "exact_part", path), path + ".exact_part");
    const big_rational tail = check_rational(field(j, "tail_part", path), path + ".tail_part");
    const big_rational value = check_rational(field(j, "value", path), path + ".value");
    const auto &enc = field(j, "enclosure", path);
    const big_rational lo = check_rational(field(enc, "lo", path + ".enclosure"), path + ".enclosure.lo");
    const big_rational hi = check_rational(field(enc, "hi", path + ".enclosure"), path + ".enclosure.hi");
    if (tail < 0 || exact + tail != value || hi != value || lo > hi) {
        invalid(path, "inconsistent certified value");
    }
}

bool check_bool(const ordered_json &j, const std::string &path)
{
    if (!j.is_boolean()) {
        invalid(path, "expected a boolean");
    }
    return j.get<bool>();
}

bool check_stage(const ordered_json &j, const std::string &path, const std::string &pass_key)
{
    check_bool(field(j, "computed", path), path + ".computed");
    const bool pass = check_bool(field(j, pass_key, path), path + "." + pass_key);
    const auto &checks = field(j, "checks", path);
    if (!checks.is_array()) {
        invalid(path + ".checks", "expected an array");
    }
    bool all = true;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const std::string p = path + ".checks[" + std::to_string(i) + "]";
        if (!field(checks[i], "name", p).is_string()) {
            invalid(p + ".name", "expected a string");
        }
        const bool cp = check_bool(field(checks[i], "pass", p), p + ".pass");
        if (checks[i].contains("lhs")) {
            check_certified(checks[i]["lhs"], p + ".lhs");
            check_rational(field(checks[i], "threshold", p), p + ".threshold");
        }
        all = all && cp;
    }
    const auto &g = field(j, "g_bounds", path);
    if (!g.is_null()) {
        for (const char *k : {"g1", "g2", "g3"}) {
            check_certified(field(g, k, path + ".g_bounds"), path + ".g_bounds." + k);
        }
    }
    if (!field(j, "binding_constraint", path).is_string()) {
        invalid(path + ".binding_constraint", "expected a string");
    }
    if (pass && (!all || checks.size() != 4 || g.is_null())) {
        invalid(path + "." + pass_key, "true although a check failed");
    }
    return pass;
}

} // namespace

std::string certificate_to_json(const verify::certificate &cert, int indent)
{
    cert.assert_consistent();
    ordered_json j;
    j["schema"] = verify::certificate::schema;
    j["model"] = verify::name(cert.m);
    j["d"] = cert.d;
    j["N"] = cert.N;
    j["K"] = constants_json(cert.K);
    j["rw_quantities"] = cert.rw ? rw_json(*cert.rw) : ordered_json(nullptr);
    j["initial"] = stage_json(cert.initial);
    j["bootstrap"] = stage_json(cert.bootstrap);
    j["theorem_pass"] = cert.theorem_pass;
    j["outcome"] = verify::name(cert.outcome);
    j["binding_constraint"] = cert.binding_constraint;
    j["continuity"] = cert.continuity;
    return j.dump(indent);
}

void validate_certificate_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
    }
    const auto &schema = field(j, "schema", "$");
    if (!schema.is_string() || schema.get<std::string>() != verify::certificate::schema) {
        invalid("$.schema", "expected \"lace-cert/1\"");
    }
    const auto &m = field(j, "model", "$");
    if (!m.is_string()) {
        invalid("$.model", "expected a string");
    }
    try {
        verify::parse_model(m.get<std::string>());
    } catch (const std::invalid_argument &) {
        invalid("$.model", "unknown model");
    }
    if (!field(j, "d", "$").is_number_integer()) {
        invalid("$.d", "expected an integer");
    }
    if (!field(j, "N", "$").is_number_unsigned()) {
        invalid("$.N", "expected a non-negative integer");
    }
    const auto &K = field(j, "K", "$");
    for (const char *k : {"K1", "K2", "K3"}) {
        if (check_rational(field(K, k, "$.K"), std::string("$.K.") + k) < 1) {
            invalid(std::string("$.K.") + k, "must be at least 1");
        }
    }
    const auto &rw = field(j, "rw_quantities", "$");
    if (!rw.is_null()) {
        for (const char *k : {"eps1", "eps2", "eps3", "eps2_prime", "bubble_sup", "triangle_sup"}) {
            const auto &e = field(rw, k, "$.rw_quantities");
            if (!check_bool(field(e, "divergent", std::string("$.rw_quantities.") + k),
                            std::string("$.rw_quantities.") + k + ".divergent")) {
                check_certified(e, std::string("$.rw_quantities.") + k);
            }
        }
    }
    const bool ip = check_stage(field(j, "initial", "$"), "$.initial", "pass");
    const bool bp = check_stage(field(j, "bootstrap", "$"), "$.bootstrap", "strict_pass");
    const bool tp = check_bool(field(j, "theorem_pass", "$"), "$.theorem_pass");
    if (tp != (ip && bp)) {
        invalid("$.theorem_pass", "must equal initial.pass and bootstrap.strict_pass");
    }
    const auto &outcome = field(j, "outcome", "$");
    if (!outcome.is_string() || (outcome.get<std::string>() == "pass") != tp) {
        invalid("$.outcome", "disagrees with theorem_pass");
    }
    if (!field(j, "binding_constraint", "$").is_string() || !field(j, "continuity", "$").is_string()) {
        invalid("$", "binding_constraint and continuity must be strings");
    }
}

std::string rw_table_to_json(const std::vector<rw::rw_quantities> &rows, int indent)
{
    ordered_json j;
    j["schema"] = "lace-rw-table/1";
    ordered_json arr = ordered_json::array();
    for (const auto &r : rows) {
        arr.push_back(rw_json(r));
    }
    j["rows"] = arr;
    return j.dump(indent);
}

std::string search_result_to_json(const verify::search_result &res, int indent)
{
    ordered_json j;
    j["model"] = verify::name(res.m);
    j["d"] = res.d;
    j["N"] = res.N;
    j["feasible"] = res.feasible;
    j["unsupported"] = res.unsupported;
    j["point"] = res.point ? constants_json(*res.point) : ordered_json(nullptr);
    j["binding_constraint"] = res.binding_constraint;
    j["evaluations"] = res.evaluations;
    j["certificate"] = res.winner ? ordered_json::parse(certificate_to_json(*res.winner)) : ordered_json(nullptr);
    return j.dump(indent);
}

} // namespace lacegate
