/*
   Copyright 2026 The ratdec authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RATDEC_RNG_HPP
#define RATDEC_RNG_HPP

#include <cstdint>

#include <gmpxx.h>

namespace ratdec {

/// Deterministic pseudorandom stream (xoshiro256** seeded via splitmix64).
///
/// Every random choice in the library draws from an explicit stream passed
/// by the caller, so a fixed seed reproduces a run bit for bit.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound), bound > 0, by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % bound;
    }

    /// Uniform mpz in [0, bound), bound > 0.
    mpz_class below(const mpz_class& bound) {
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        const std::size_t words = (bits + 63) / 64;
        while (true) {
            mpz_class v = 0;
            for (std::size_t i = 0; i < words; ++i) {
                v <<= 64;
                mpz_class w;
                const std::uint64_t raw = next_u64();
                mpz_import(w.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
                v |= w;
            }
            v >>= static_cast<unsigned long>(64 * words - bits);
            if (v < bound) return v;
        }
    }

    /// Uniform integer in [-box, box].
    mpz_class boxed_int(const mpz_class& box) {
        mpz_class span = 2 * box + 1;
        return below(span) - box;
    }

    /// Independent substream (e.g. one per retry); deterministic in index.
    RandomStream substream(std::uint64_t index) {
        RandomStream s(0);
        s.state_[0] = state_[0] ^ splitmix64(index);
        std::uint64_t x = state_[1] + 0x9e3779b97f4a7c15ULL * (index + 1);
        s.state_[1] = splitmix64(x);
        s.state_[2] = state_[2];
        s.state_[3] = splitmix64(x);
        return s;
    }

   private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace ratdec

#endif
