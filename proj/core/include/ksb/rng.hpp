// Copyright 2026 The ksb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSB_RNG_HPP
#define KSB_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace ksb {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless keyed bijection of a 128-bit counter; disjoint streams are
// obtained by fixing the high counter word, which is what makes
// reproducible parallel Monte Carlo trivial: no state to hand between
// threads, just (seed, stream) pairs.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kBump0 = 0x9E3779B9u;  // golden ratio
    static constexpr std::uint32_t kBump1 = 0xBB67AE85u;  // sqrt(3) - 1

    static Counter block(Counter ctr, Key key) {
        for (int round = 0;;) {
            const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
            ctr = Counter{
                static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                static_cast<std::uint32_t>(p0)};
            if (++round == 10) break;
            key[0] += kBump0;
            key[1] += kBump1;
        }
        return ctr;
    }
};

// Sequential view of one Philox stream: stream id in the high counter
// words, block index in the low words.  Yields doubles in the open
// interval (0,1), two per 128-bit block.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    // Uniform on (0,1); never returns 0 or 1.
    double uniform() {
        if (have_ == 0) refill();
        return out_[--have_];
    }

    // Unit-rate exponential.
    double exponential() { return -std::log(uniform()); }

  private:
    void refill() {
        const auto words = Philox4x32::block(
            {static_cast<std::uint32_t>(block_),
             static_cast<std::uint32_t>(block_ >> 32), stream_lo_,
             stream_hi_},
            key_);
        ++block_;
        out_[1] = to_unit(words[0], words[1]);
        out_[0] = to_unit(words[2], words[3]);
        have_ = 2;
    }

    static double to_unit(std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t bits = (std::uint64_t(hi) << 32) | lo;
        // 53 significant bits, centered on the cell: value in (0,1).
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
    }

    Philox4x32::Key key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    double out_[2] = {0, 0};
    int have_ = 0;
};

}  // namespace ksb

#endif  // KSB_RNG_HPP
