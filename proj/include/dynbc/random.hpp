#ifndef DYNBC_RANDOM_HPP_
#define DYNBC_RANDOM_HPP_

#include <random>

#include <dynbc/types.hpp>

namespace dynbc {

/// Uniform draw from [0, bound) by rejection on 64-bit engine words, so the
/// consumed word sequence does not depend on the standard library.
inline count uniformIndex(std::mt19937_64 &rng, count bound) {
    if (bound == 0)
        throw DomainError("uniformIndex with empty range");
    if (bound == 1)
        return 0;
    const count limit = std::numeric_limits<count>::max() - std::numeric_limits<count>::max() % bound;
    while (true) {
        count word = rng();
        if (word < limit)
            return word % bound;
    }
}

/// Uniform real in [0, 1) with 53 random bits.
inline double uniformReal(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform arbitrary-precision draw from [0, bound), bound > 0.
inline pathcount uniformPathcount(std::mt19937_64 &rng, const pathcount &bound) {
    if (bound <= 0)
        throw DomainError("uniformPathcount with empty range");
    if (bound == 1)
        return 0;
    const count bits = boost::multiprecision::msb(bound) + 1;
    const count words = (bits + 63) / 64;
    const count topShift = words * 64 - bits;
    while (true) {
        pathcount draw = 0;
        for (count i = 0; i < words; ++i) {
            draw <<= 64;
            draw += rng();
        }
        draw >>= topShift;
        if (draw < bound)
            return draw;
    }
}

/// Ordered pair of distinct node ids, uniform over n*(n-1) possibilities.
inline std::pair<node, node> uniformNodePair(std::mt19937_64 &rng, count n) {
    if (n < 2)
        throw DomainError("uniformNodePair needs at least two nodes");
    const node s = static_cast<node>(uniformIndex(rng, n));
    node t = static_cast<node>(uniformIndex(rng, n - 1));
    if (t >= s)
        ++t;
    return {s, t};
}

} // namespace dynbc

#endif // DYNBC_RANDOM_HPP_
