#pragma once

#include "fracture/core/padic.hpp"

#include <map>
#include <string>

namespace fracture {

// Element of Q (x) prod_p Z_p^ under the finite-support convention.
// Outside S the component is rational_part; at p in S it is
// rational_part + corrections[p] / scale, with scale an S-smooth integer.
class AdeleElement {
  public:
    AdeleElement(Support S, Rat rational_part, std::map<long, PadicApprox> corrections, Int scale = 1);
    static AdeleElement from_rational(const Support& S, const Rat& r, long precision = kDefaultPrecision);

    const Support& support() const { return S_; }
    const Rat& rational_part() const { return r_; }
    const std::map<long, PadicApprox>& corrections() const { return c_; }
    const Int& scale() const { return scale_; }

    AdeleElement operator+(const AdeleElement& b) const;
    AdeleElement operator*(const AdeleElement& b) const;

    // Exact rational parts equal and p-adic components agree at shared precision.
    bool agrees(const AdeleElement& b) const;
    std::string to_string() const;

  private:
    Support S_;
    Rat r_;
    std::map<long, PadicApprox> c_;
    Int scale_;
};

} // namespace fracture
