#pragma once

#include <string>
#include <vector>

#include "sphkl/session.hpp"

// Cross-checks of the main computations against each other and against the
// brute-force oracles. Shared by `sphkl verify` and the acceptance suite.
namespace sphkl::checks {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes; // first few failures

    bool passed() const { return failures == 0 && cases > 0; }
    void fail(std::string note);
    void merge(const CheckResult& other);
};

/// Dominant lambda with length(n_lambda) <= max_length, central part in {-1,0,1}.
std::vector<Coweight> grid(const Session& s, int max_length);

/// Every certificate is self-dual, unitriangular and positive.
CheckResult kl_certificates(const Session& s, int max_length);
/// P_lambda = s_lambda + sum_{nu < lambda} c s_nu with c in L_++.
CheckResult hl_unitriangular(const Session& s, int max_length);
/// Tensor multiplicities agree with the character oracle and with the star product.
CheckResult tensor(const Session& s, int max_length);
/// Weight multiplicities agree with Freudenthal.
CheckResult weights(const Session& s, int max_length);
/// s_lambda, parameters forgotten, is the Weyl character.
CheckResult characters(const Session& s, int max_length);
/// H_s Phi(xi) - Phi(s xi) H_s against its closed form, for xi = e^tau, |tau|_inf <= radius.
CheckResult commutation(const Session& s, int radius);

CheckResult quadratic_braid(const Session& s, int max_length);
CheckResult duality(const Session& s, int max_length);
CheckResult bernstein(const Session& s);
CheckResult translation_length(const Session& s, int max_length);
CheckResult reflection_order(const Session& s, int radius);
CheckResult alpha_strings(const Session& s, int radius);
CheckResult bruhat_oracle(const Session& s, int max_length);
/// Skipped (zero cases) unless all parameters are equal.
CheckResult orbit_sum(const Session& s, int max_length);
CheckResult kl_generic(const Session& s, int max_length);

/// The structural group: relations, duality, lengths, orders and the equal-parameter oracles.
std::vector<CheckResult> structural(const Session& s, int max_length);
/// Everything above at one length bound.
std::vector<CheckResult> run_all(const Session& s, int max_length);

} // namespace sphkl::checks
