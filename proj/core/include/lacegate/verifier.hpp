#ifndef LACEGATE_VERIFIER_HPP
#define LACEGATE_VERIFIER_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <lacegate/chain_common.hpp>
#include <lacegate/perc_chain.hpp>
#include <lacegate/rw_engine.hpp>
#include <lacegate/saw_chain.hpp>

namespace lacegate::verify
{

enum class model { saw, percolation };

std::string_view name(model m);
// Accepts "saw" and "percolation"; throws std::invalid_argument otherwise.
model parse_model(std::string_view text);

// Smallest dimension in which the bound chain of the model is finite.
int min_dimension(model m);

struct bootstrap_constants {
    model m = model::saw;
    int d = 0;
    big_rational K1 = 1;
    big_rational K2 = 1;
    big_rational K3 = 1;

    // Throws std::invalid_argument unless every K_i >= 1.
    void validate() const;
};

// K = (1.03, 1.03, 1.79) for the walk and (1.01, 1.09, 2.70) for percolation.
bootstrap_constants reference_constants(model m, int d);

// One strict inequality lhs < threshold of the chain.
struct check_record {
    std::string name;
    certified_upper lhs;
    big_rational threshold;
    bool pass = false;
};

struct stage_record {
    lacegate::stage stage = lacegate::stage::initial;
    // false when the model's chain is infinite in this dimension
    bool computed = false;
    std::variant<std::monostate, saw::diagram_bounds, perc::diagram_bounds> diagrams;
    std::optional<saw::series_sums> saw_series;
    std::optional<perc::phi_coefficients> phi;
    std::optional<perc::series_sums> perc_series;
    std::optional<sufficiency_witness> sufficiency;
    std::optional<lacegate::g_bounds> g;
    // in evaluation order; a failed chain step appears with pass = false
    std::vector<check_record> checks;
    bool pass = false;
    // first failed check, empty on pass
    std::string binding_constraint;
    std::string detail;
};

enum class verdict { pass, bound_failure, unsupported_dimension };

std::string_view name(verdict v);

struct certificate {
    static constexpr std::string_view schema = "lace-cert/1";

    model m = model::saw;
    int d = 0;
    unsigned long N = 0;
    bootstrap_constants K;
    std::optional<rw::rw_quantities> rw;
    stage_record initial;
    stage_record bootstrap;
    bool theorem_pass = false;
    verdict outcome = verdict::bound_failure;
    // "<stage>:<check>" of the first failure, empty on pass
    std::string binding_constraint;
    std::string continuity = "proved analytically, not machine-checked";

    // Throws std::logic_error when theorem_pass disagrees with the stage
    // results or a passing stage holds a failed check.
    void assert_consistent() const;
};

stage_record check_initial(const bootstrap_constants &K, unsigned long N);
stage_record check_bootstrap(const bootstrap_constants &K, unsigned long N);
certificate verify_theorem(const bootstrap_constants &K, unsigned long N);

// Same, reusing random-walk quantities computed for K.d.
stage_record check_initial(const rw::rw_quantities &rw, const bootstrap_constants &K);
stage_record check_bootstrap(const rw::rw_quantities &rw, const bootstrap_constants &K);
certificate verify_theorem(const rw::rw_quantities &rw, const bootstrap_constants &K);

// Grid points lo, lo + step, ... not exceeding hi. A single point has lo = hi
// and any step.
struct grid_axis {
    big_rational lo = 1;
    big_rational hi = 10;
    big_rational step = make_rational(1, 100);

    // Throws std::invalid_argument for an empty axis, a non-positive step on a
    // proper range, or points outside [1, 10].
    void validate() const;
    // Smallest grid point strictly above x.
    std::optional<big_rational> first_above(const big_rational &x) const;
    std::optional<big_rational> next(const big_rational &point) const;
    std::size_t size() const;
};

struct grid_spec {
    std::array<grid_axis, 3> axes;

    static grid_spec uniform(const big_rational &step, const big_rational &lo = 1, const big_rational &hi = 10);
    static grid_spec single(const bootstrap_constants &K);
    void validate() const;
};

struct search_result {
    model m = model::saw;
    int d = 0;
    unsigned long N = 0;
    bool feasible = false;
    bool unsupported = false;
    // the winning constants, or the closest failing point when infeasible
    std::optional<bootstrap_constants> point;
    std::optional<certificate> winner;
    // failing check at `point`, or of the initial stage
    std::string binding_constraint;
    std::size_t evaluations = 0;
};

// Lexicographically smallest (K1, K2, K3) grid point whose certificate passes.
// Skips only grid points that fail by monotonicity of the bounds in K.
search_result search_constants(model m, int d, unsigned long N, const grid_spec &grid);

} // namespace lacegate::verify

#endif
