#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>

#include <Eigen/Core>

namespace torsionlab {

// Exact integer coefficients. Handle slides can blow coefficients up
// arbitrarily, so fixed-width integers are not used anywhere in the core.
using Int = boost::multiprecision::cpp_int;

// All character-evaluated arithmetic runs in extended precision; values are
// narrowed to double only at the reporting boundary.
using Cplx = std::complex<long double>;
using Real = long double;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace torsionlab

namespace Eigen {

template <>
struct NumTraits<torsionlab::Int> : GenericNumTraits<torsionlab::Int> {
    typedef torsionlab::Int Real;
    typedef torsionlab::Int NonInteger;
    typedef torsionlab::Int Nested;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 60,
    };
    static inline torsionlab::Int epsilon() { return 0; }
    static inline torsionlab::Int dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace torsionlab {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using CplxMatrix = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace torsionlab
