#ifndef K3WALL_SRC_EXACT_SIGN_KERNEL_HPP
#define K3WALL_SRC_EXACT_SIGN_KERNEL_HPP

#include "k3wall/exact.hpp"

namespace k3wall::detail {

/// sign(a + b*sqrt(d)) for integers, d >= 0.
Sign sign_one(const BigInt& a, const BigInt& b, const BigInt& d);

/// sign(a + b*sqrt(d1) + c*sqrt(d2)) for integers, d1, d2 >= 0.
Sign sign_two(const BigInt& a, const BigInt& b, const BigInt& d1, const BigInt& c,
              const BigInt& d2);

}  // namespace k3wall::detail

#endif  // K3WALL_SRC_EXACT_SIGN_KERNEL_HPP
