#pragma once

#include "fracture/core/integer.hpp"

#include <string>

namespace fracture {

inline constexpr long kDefaultPrecision = 64;

// An element of Z_p known modulo p^N (absolute precision N).
class PadicApprox {
  public:
    PadicApprox(long p, long precision, const Int& residue, bool exact = false);
    static PadicApprox from_integer(const Int& a, long p, long precision = kDefaultPrecision);
    // a must be p-integral.
    static PadicApprox from_rational(const Rat& a, long p, long precision = kDefaultPrecision);

    long prime() const { return p_; }
    long precision() const { return n_; }
    const Int& residue() const { return r_; }
    bool exact() const { return exact_; }
    // Valuation of the residue, capped at the precision.
    long valuation() const;
    bool is_unit() const { return valuation() == 0; }

    PadicApprox operator+(const PadicApprox& b) const;
    PadicApprox operator-(const PadicApprox& b) const;
    PadicApprox operator*(const PadicApprox& b) const;
    PadicApprox operator-() const;
    PadicApprox inv() const;
    PadicApprox scaled(const Int& m) const; // multiplication by an exact integer
    // Exact division by p^k; loses k digits of precision.
    PadicApprox divide_by_p_power(long k) const;

    // Equal modulo p^min(N_a, N_b).
    bool agrees(const PadicApprox& b) const;
    std::string to_string() const;

  private:
    long p_, n_;
    Int r_;
    bool exact_;
};

enum class PadicOp { Add, Mul, Inv };
PadicApprox padic_op(const PadicApprox& a, const PadicApprox& b, PadicOp op);

} // namespace fracture
