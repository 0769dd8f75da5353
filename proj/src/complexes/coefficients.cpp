#include "fracture/complexes/coefficients.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

char kind_char(Kind k) {
    switch (k) {
    case Kind::F: return 'F';
    case Kind::D: return 'D';
    case Kind::P: return 'P';
    }
    return '?';
}

Kind parse_kind(const std::string& s) {
    if (s == "F") return Kind::F;
    if (s == "D") return Kind::D;
    if (s == "P") return Kind::P;
    fail(ErrorCode::Input, "unknown generator kind '" + s + "'");
}

std::string tag_name(RingTag t) {
    switch (t) {
    case RingTag::IntegersZ: return "IntegersZ";
    case RingTag::RationalsQ: return "RationalsQ";
    case RingTag::PadicZ: return "PadicZ";
    case RingTag::PadicQ: return "PadicQ";
    case RingTag::ProfiniteNub: return "ProfiniteNub";
    case RingTag::FiniteAdeles: return "FiniteAdeles";
    case RingTag::ProfiniteFamily: return "ProfiniteFamily";
    case RingTag::SIntegers: return "SIntegers";
    }
    return "?";
}

RingTag parse_tag(const std::string& s) {
    for (auto t : {RingTag::IntegersZ, RingTag::RationalsQ, RingTag::PadicZ, RingTag::PadicQ,
                   RingTag::ProfiniteNub, RingTag::FiniteAdeles, RingTag::ProfiniteFamily, RingTag::SIntegers})
        if (tag_name(t) == s) return t;
    fail(ErrorCode::Input, "unknown ring tag '" + s + "'");
}

void Ring::validate() const {
    switch (tag) {
    case RingTag::PadicZ:
    case RingTag::PadicQ:
        require(is_prime(p), ErrorCode::Input, "ring prime must be prime");
        break;
    case RingTag::ProfiniteNub:
    case RingTag::FiniteAdeles:
        require(!S.empty(), ErrorCode::Input, "support must be nonempty");
        [[fallthrough]];
    case RingTag::ProfiniteFamily:
    case RingTag::SIntegers:
        require(normalize_support(S) == S, ErrorCode::Input, "support must be sorted primes");
        break;
    default:
        break;
    }
}

Kind Ring::max_kind() const {
    switch (tag) {
    case RingTag::ProfiniteNub: return Kind::P;
    case RingTag::RationalsQ:
    case RingTag::PadicQ: return Kind::F;
    default: return Kind::D;
    }
}

bool Ring::lattice_is_field() const {
    return tag == RingTag::RationalsQ || tag == RingTag::PadicQ || tag == RingTag::FiniteAdeles;
}

bool Ring::in_lattice(const Rat& x) const {
    switch (tag) {
    case RingTag::IntegersZ: return x.get_den() == 1;
    case RingTag::PadicZ: return x.get_den() % p != 0;
    case RingTag::ProfiniteNub:
    case RingTag::ProfiniteFamily:
    case RingTag::SIntegers: return is_smooth(x.get_den(), S);
    default: return true;
    }
}

bool Ring::is_lattice_unit(const Int& d) const { return d != 0 && local_torsion(d) == 1; }

Int Ring::local_torsion(const Int& d) const {
    if (d == 0) return 0;
    switch (tag) {
    case RingTag::IntegersZ: return abs(d);
    case RingTag::PadicZ: return p_part(d, p);
    case RingTag::ProfiniteNub:
    case RingTag::ProfiniteFamily:
    case RingTag::SIntegers: return strip_primes(d, S);
    default: return 1;
    }
}

std::string Ring::name() const {
    std::string s = tag_name(tag);
    if (tag == RingTag::PadicZ || tag == RingTag::PadicQ) s += "(" + std::to_string(p) + ")";
    if (!S.empty() || tag == RingTag::ProfiniteFamily || tag == RingTag::SIntegers) {
        s += "{";
        for (std::size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
        s += "}";
    }
    return s;
}

bool has_morphism(const Ring& from, const Ring& to) {
    if (from == to) return true;
    switch (from.tag) {
    case RingTag::IntegersZ:
        return to.tag != RingTag::ProfiniteFamily;
    case RingTag::RationalsQ:
        return to.tag == RingTag::PadicQ || to.tag == RingTag::FiniteAdeles;
    case RingTag::PadicZ:
        return to.tag == RingTag::PadicQ && to.p == from.p;
    case RingTag::ProfiniteNub:
        return to.tag == RingTag::FiniteAdeles && to.S == from.S;
    case RingTag::SIntegers:
        return (to.tag == RingTag::ProfiniteNub || to.tag == RingTag::FiniteAdeles) && to.S == from.S;
    default:
        return false;
    }
}

Kind map_kind(const Ring& from, const Ring& to, Kind k) {
    require(has_morphism(from, to), ErrorCode::NoMorphism,
            "no declared ring morphism " + from.name() + " -> " + to.name());
    if (from == to) return k;
    switch (to.tag) {
    case RingTag::RationalsQ:
    case RingTag::PadicQ:
        return Kind::F;
    case RingTag::FiniteAdeles:
        // Q (x) prod Z_q absorbs F and D; prod Q_q is the P envelope.
        return k == Kind::P ? Kind::D : Kind::F;
    default:
        return k;
    }
}

} // namespace fracture
