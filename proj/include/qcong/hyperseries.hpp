#pragma once

// Terminating basic hypergeometric series with parameters of the form +-q^t,
// and the two Watson 8phi7 -> 4phi3 steps used for the [4k+1] and [4k-1]
// families, checked at concrete n.

#include <vector>

#include "qcong/qkit.hpp"

namespace qcong {

/// sign * q^exp
struct QParam {
    int sign = 1;
    long exp = 0;
};

/// sum_{k=0}^{truncation} (a_0,...,a_s; q^s)_k z^k / (q^s, b_1,...,b_s; q^s)_k
struct HyperSeriesSpec {
    std::vector<QParam> upper;
    std::vector<QParam> lower;
    long base_scale = 1;
    QParam argument;
    long truncation = 0;
};

/// Throws std::invalid_argument on a malformed spec and VanishingDenominator
/// when a lower parameter produces 1 - q^0 inside the range. Stops early once
/// an upper parameter has made every later term zero.
RationalFn eval_phi(const HyperSeriesSpec& spec);

/// The k-th term on its own.
RationalFn phi_term(const HyperSeriesSpec& spec, long k);

struct WatsonInstance {
    // direct sum at a = q^{-2n}, the 8phi7, the prefactor times the 4phi3,
    // and the closed form, for one of the two families
    RationalFn direct, phi87, phi43, closed;
    bool holds() const { return direct == phi87 && phi87 == phi43 && phi43 == closed; }
};

/// [4k+1] family; arg_shift perturbs the 8phi7 argument exponent (0 for the
/// real statement).
WatsonInstance watson_4k_plus_1(long n, long arg_shift = 0);
/// [4k-1] family.
WatsonInstance watson_4k_minus_1(long n, long arg_shift = 0);

/// Both families hold exactly at this odd n > 1.
bool watson_instance_check(long n);

}  // namespace qcong
