// Independent reference implementations used only by tests. These stay
// deliberately naive (linear scans, explicit walks) so they cannot share a
// bug with the library code they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tqre/logical_error_model.hpp"
#include "tqre/shor_algorithm.hpp"

namespace oracles {

// Deterministic LCG so property tests are reproducible without any global RNG.
class Lcg {
public:
    explicit Lcg(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 11;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() % (1ULL << 40)) /
                                 static_cast<double>(1ULL << 40));
    }

private:
    uint64_t state_;
};

// Linear scan over odd distances.
inline int required_distance_scan(double target, double x, const tqre::ErrorModelParams& em) {
    for (int d = 3; d <= 4001; d += 2) {
        const double err =
            (2.0 * em.prefactor_c / x) * std::pow((em.alpha * x + 1.0) / em.lambda, (d + 1) / 2.0);
        if (err <= target) {
            return d;
        }
    }
    return -1;
}

// Walks the windowed modular-exponentiation schedule and materializes every
// lookup-addition as a record.
struct LookupAdditionOp {
    long long exponent_window;
    int pass;
    long long mult_window;
};

inline std::vector<LookupAdditionOp> windowed_schedule_walk(long long exponent_bits,
                                                            long long n_bits, int w_exp,
                                                            int w_mul) {
    std::vector<LookupAdditionOp> ops;
    long long e = 0;
    while (e < exponent_bits) {
        for (int pass = 0; pass < 2; ++pass) {
            long long m = 0;
            while (m < n_bits) {
                ops.push_back({e / w_exp, pass, m / w_mul});
                m += w_mul;
            }
        }
        e += w_exp;
    }
    return ops;
}

// Walks the MAJ/UMA chain of a runway-segmented ripple adder bit by bit and
// counts the CCZ-consuming carry computations (one per MAJ; the UMA side
// uncomputes by measurement).
inline long long adder_ccz_walk(long long n_bits, long long r_sep, long long r_pad) {
    long long ccz = 0;
    long long consumed = 0;
    while (consumed < n_bits) {
        const long long real_bits = std::min(r_sep, n_bits - consumed);
        for (long long i = 0; i < real_bits + r_pad; ++i) {
            ccz += 1;  // MAJ computes the next carry
        }
        consumed += real_bits;
    }
    return ccz;
}

} // namespace oracles
