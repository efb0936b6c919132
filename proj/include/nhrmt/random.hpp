#pragma once

#include <cstdint>
#include <limits>

namespace nhrmt {

inline constexpr std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: output k of stream s is a hash of (seed, s, k).
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(seed ^ splitmix64(stream ^ 0x6a09e667f3bcc909ULL)))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    void discard(std::uint64_t k) { counter_ += k; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace nhrmt
