#ifndef DYNBC_TYPES_HPP_
#define DYNBC_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dynbc {

using node = std::uint32_t;
using count = std::uint64_t;
using edgeweight = double;

/// Number of shortest paths; grows beyond 64 bits on dense graphs,
/// so path counts are kept in arbitrary precision.
using pathcount = boost::multiprecision::cpp_int;

constexpr node none = std::numeric_limits<node>::max();
constexpr edgeweight infiniteDistance = std::numeric_limits<edgeweight>::infinity();

/// Malformed external input (edge lists, batch files, snapshots).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A request that is outside the defined domain of an operation.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string &msg) : std::runtime_error(msg) {}
};

/// An internal invariant does not hold (bad batch, corrupted state).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace dynbc

#endif // DYNBC_TYPES_HPP_
