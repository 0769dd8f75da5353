#include "fracture/core/adele.hpp"

#include "fracture/core/errors.hpp"

#include <sstream>

namespace fracture {

AdeleElement::AdeleElement(Support S, Rat rational_part, std::map<long, PadicApprox> corrections, Int scale)
    : S_(normalize_support(std::move(S))), r_(std::move(rational_part)), c_(std::move(corrections)),
      scale_(std::move(scale)) {
    require(!S_.empty(), ErrorCode::Input, "adele support must be nonempty");
    require(is_smooth(r_.get_den(), S_), ErrorCode::Input, "rational part has denominator outside S");
    require(scale_ > 0 && is_smooth(scale_, S_), ErrorCode::Input, "adele scale must be S-smooth");
    require(c_.size() == S_.size(), ErrorCode::Input, "corrections must be keyed exactly by S");
    for (long p : S_) {
        auto it = c_.find(p);
        require(it != c_.end() && it->second.prime() == p, ErrorCode::Input, "missing correction at a prime of S");
    }
}

AdeleElement AdeleElement::from_rational(const Support& S, const Rat& r, long precision) {
    std::map<long, PadicApprox> c;
    for (long p : S) c.emplace(p, PadicApprox::from_integer(0, p, precision));
    return AdeleElement(S, r, std::move(c), 1);
}

AdeleElement AdeleElement::operator+(const AdeleElement& b) const {
    require(S_ == b.S_, ErrorCode::Precondition, "adele supports differ");
    std::map<long, PadicApprox> c;
    for (long p : S_) c.emplace(p, c_.at(p).scaled(b.scale_) + b.c_.at(p).scaled(scale_));
    return AdeleElement(S_, r_ + b.r_, std::move(c), scale_ * b.scale_);
}

AdeleElement AdeleElement::operator*(const AdeleElement& b) const {
    require(S_ == b.S_, ErrorCode::Precondition, "adele supports differ");
    // (r1 + c1/D1)(r2 + c2/D2) = r1 r2 + (r1 D1 c2 + r2 D2 c1 + c1 c2) / (D1 D2);
    // multiplying through by den(r1) den(r2) keeps every correction integral.
    const Int e1 = r_.get_den(), e2 = b.r_.get_den();
    std::map<long, PadicApprox> c;
    for (long p : S_) {
        const auto& c1 = c_.at(p);
        const auto& c2 = b.c_.at(p);
        auto t = c2.scaled(r_.get_num() * e2 * scale_) + c1.scaled(b.r_.get_num() * e1 * b.scale_) +
                 (c1 * c2).scaled(e1 * e2);
        c.emplace(p, t);
    }
    return AdeleElement(S_, r_ * b.r_, std::move(c), scale_ * b.scale_ * e1 * e2);
}

bool AdeleElement::agrees(const AdeleElement& b) const {
    if (S_ != b.S_ || r_ != b.r_) return false;
    for (long p : S_) {
        auto lhs = c_.at(p).scaled(b.scale_);
        auto rhs = b.c_.at(p).scaled(scale_);
        if (!lhs.agrees(rhs)) return false;
    }
    return true;
}

std::string AdeleElement::to_string() const {
    std::ostringstream os;
    os << r_.get_str();
    for (const auto& [p, c] : c_) os << " + [" << p << ": (" << c.to_string() << ")/" << scale_ << "]";
    return os.str();
}

} // namespace fracture
