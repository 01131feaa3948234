#ifndef LACEGATE_ORACLES_RW_CONVOLUTION_HPP
#define LACEGATE_ORACLES_RW_CONVOLUTION_HPP

#include <string>
#include <vector>

#include <lacegate/number.hpp>

namespace lacegate::oracle
{

// D^{*k}(o) for k = 0..max_length by repeated convolution of walk counts on
// the lattice. Throws scale_error when the support grows beyond the budget.
std::vector<big_rational> return_probabilities_by_convolution(int d, int max_length);

// Number of ways to write total as an ordered sum of `parts` non-negative
// integers, counted by explicit enumeration.
unsigned long long composition_count(int total, int parts);

struct convolution_identity {
    std::string name;
    big_rational weighted_sum; // from the closed-form weights
    big_rational convolution;  // sum over compositions of walk lengths
    bool match() const
    {
        return weighted_sum == convolution;
    }
};

struct rw_convolution_report {
    int d = 0;
    int N = 0;
    std::vector<convolution_identity> identities;
    bool pass() const;
};

// Compares the truncated eps sums and the convolution-sup combinations with
// D^{*2} * S_1^{*j}, D^{*4} * S_1^{*2} and S_1^{*j} at the origin, all
// truncated at walk length 2N. Requires 1 <= N <= 8.
rw_convolution_report rw_convolution_check(int d, int N);

} // namespace lacegate::oracle

#endif
