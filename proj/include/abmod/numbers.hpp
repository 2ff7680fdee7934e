#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

namespace abmod {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat& q) {
    return q.str();
}

/// Parses "p", "-p" or "p/q" into a rational; returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

}  // namespace abmod
