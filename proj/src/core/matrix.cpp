#include "fracture/core/matrix.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

QMatrix to_rational(const IntMatrix& a) {
    QMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
    return m;
}

bool is_integral(const QMatrix& a) {
    for (const auto& x : a.entries())
        if (x.get_den() != 1) return false;
    return true;
}

IntMatrix to_integer(const QMatrix& a) {
    require(is_integral(a), ErrorCode::Precondition, "matrix has non-integral entries");
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num();
    return m;
}

Int common_denominator(const QMatrix& a) {
    Int l = 1;
    for (const auto& x : a.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

} // namespace fracture
