#include "fracture/local/atomic.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

std::string Atom::to_string() const {
    const std::string ps = std::to_string(p);
    switch (type) {
    case AtomType::Z: return "Z";
    case AtomType::Q: return "Q";
    case AtomType::Torsion: return "Z/" + ps + "^" + std::to_string(k);
    case AtomType::Prufer: return "Z/" + ps + "^inf";
    case AtomType::ZpHat: return "Z_" + ps + "^";
    case AtomType::QpHat: return "Q_" + ps;
    }
    return "?";
}

AtomicModule::AtomicModule(std::initializer_list<std::pair<Atom, long>> terms) {
    for (const auto& [a, m] : terms) add(a, m);
}

void AtomicModule::add(const Atom& a, long multiplicity) {
    require(multiplicity >= 0, ErrorCode::Input, "negative multiplicity");
    if (a.type == AtomType::Torsion) require(a.k >= 1, ErrorCode::Input, "torsion exponent must be >= 1");
    if (a.type != AtomType::Z && a.type != AtomType::Q)
        require(is_prime(a.p), ErrorCode::Input, "atom prime must be prime");
    if (multiplicity == 0) return;
    terms_[a] += multiplicity;
}

std::string AtomicModule::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [a, m] : terms_) {
        if (!s.empty()) s += " + ";
        s += a.to_string();
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

DerivedCompletion derived_completion(const AtomicModule& m, long p) {
    require(is_prime(p), ErrorCode::Input, "completion prime must be prime");
    DerivedCompletion r;
    for (const auto& [a, mult] : m.terms()) {
        const bool here = a.p == p;
        switch (a.type) {
        case AtomType::Z: r.L0.add(Atom::zp_hat(p), mult); break;
        case AtomType::Q: break;
        case AtomType::Torsion:
            if (here) r.L0.add(a, mult);
            break;
        case AtomType::Prufer:
            if (here) r.L1.add(Atom::zp_hat(p), mult);
            break;
        case AtomType::ZpHat:
            if (here) r.L0.add(a, mult);
            break;
        case AtomType::QpHat:
            break;
        }
    }
    return r;
}

DerivedCompletion derived_completion(const AtomicModule& m, long p, const Support& S) {
    require(contains(S, p), ErrorCode::Precondition, "completion prime outside the ambient support");
    for (const auto& [a, mult] : m.terms())
        if (a.type != AtomType::Z && a.type != AtomType::Q)
            require(contains(S, a.p), ErrorCode::Precondition, "atom " + a.to_string() + " lies outside the support");
    return derived_completion(m, p);
}

bool is_l_complete(const AtomicModule& m, long p) {
    auto r = derived_completion(m, p);
    return r.L0 == m && r.L1.is_zero();
}

} // namespace fracture
