#pragma once

#include <string>

#include "g2p/common.hpp"

namespace g2p {

// Splittable deterministic RNG. Every consumer derives its own stream from a
// root seed by a unique label, so results are reproducible regardless of
// evaluation order or thread scheduling.
class Rng {
  public:
    explicit Rng(u64 seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)), state_(mix(key_)) {}

    // Child stream keyed by (this stream's key, label); the parent's position
    // does not influence the child.
    Rng derive(const std::string& label) const {
        u64 h = 1469598103934665603ull;  // FNV-1a over the label
        for (unsigned char ch : label) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        return Rng(key_ ^ mix(h));
    }

    u64 next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, n), n >= 1, by rejection.
    u64 below(u64 n) {
        if (n == 0) fail_internal("Rng::below(0)");
        if (n == 1) return 0;
        u64 limit = ~u64(0) - (~u64(0) % n);
        for (;;) {
            u64 v = next();
            if (v < limit) return v % n;
        }
    }

    bool bit() { return next() & 1; }

  private:
    u64 key_;
    u64 state_;

    static u64 mix(u64 z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace g2p
