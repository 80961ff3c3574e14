#pragma once

#include <cstdint>

#include "fanolines/poly.hpp"

namespace fanolines {

// splitmix64: tiny, seed-stable across platforms, good enough for test data
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi], inclusive
    long long int_in(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next_u64() % span);
    }

    Rat rational(long long num_bound = 20, long long den_bound = 6) {
        Rat r(Int(static_cast<long>(int_in(-num_bound, num_bound))),
              Int(static_cast<long>(int_in(1, den_bound))));
        r.canonicalize();
        return r;
    }

    Rat nonzero_rational(long long num_bound = 20, long long den_bound = 6) {
        for (;;) {
            Rat r = rational(num_bound, den_bound);
            if (r != 0) return r;
        }
    }

    Poly poly(const RingPtr& ring, int max_terms = 5, int max_deg = 3, long long coeff_bound = 9) {
        Poly p(ring);
        int terms = static_cast<int>(int_in(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            Exponents e(static_cast<size_t>(ring->nvars()), 0);
            int budget = static_cast<int>(int_in(0, max_deg));
            for (int d = 0; d < budget; ++d)
                ++e[static_cast<size_t>(int_in(0, ring->nvars() - 1))];
            long long c = int_in(-coeff_bound, coeff_bound);
            if (c != 0) p.add_term(e, Rat(static_cast<long>(c)));
        }
        return p;
    }

    Poly nonzero_poly(const RingPtr& ring, int max_terms = 5, int max_deg = 3,
                      long long coeff_bound = 9) {
        for (;;) {
            Poly p = poly(ring, max_terms, max_deg, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace fanolines
