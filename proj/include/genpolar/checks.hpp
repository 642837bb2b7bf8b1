#pragma once

// The K(5,12) worked example as a labeled check list, and the
// classifier-vs-oracle verification sweep.

#include <cstdint>
#include <string>
#include <vector>

#include "genpolar/classifier.hpp"

namespace genpolar {

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

// Reproduces every assertion of the K(5,12) case study; 16 labeled checks.
std::vector<CheckResult> run_example_5_12();

struct VerifyOptions {
    long nmax = 8;
    long mmax = 20;
    std::uint64_t seed = 0;
    int trials = 7;
};

struct VerifyInstance {
    long n = 0, m = 0, lambda = 0;
    int profile = 0;  // 0 zero, 1 ones on T_lambda, 2 random on I_lambda
    bool polygon_ok = false;
    bool type_compared = false;
    bool type_ok = true;
    bool generic_compared = false;  // profile 1 doubles as the Prop-consistency probe
    bool generic_ok = true;
    std::string detail;

    bool ok() const { return polygon_ok && type_ok && generic_ok; }
};

struct VerifyResult {
    std::vector<VerifyInstance> instances;
    long pairs = 0;
    long failures = 0;
    bool all_ok() const { return failures == 0; }
};

// Sweeps all coprime 4 <= n <= nmax, n < m <= mmax, every finite Zariski
// invariant, three coefficient profiles each.  Per instance: the predicted
// polygon must equal the sampled polar's polygon; when the classifier
// decides a type and the sample is non-degenerate the types must agree;
// the generic polygon must match the all-ones-on-T profile.
VerifyResult run_verify(const VerifyOptions& opt);

}  // namespace genpolar
