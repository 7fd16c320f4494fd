#pragma once

#include "spinent/matrix.hpp"

namespace spinent {

inline const Mat2 kId2 = Mat2::identity();

inline const Mat2 kSigma1{{cplx(0, 0), cplx(1, 0),  //
                           cplx(1, 0), cplx(0, 0)}};

inline const Mat2 kSigma2{{cplx(0, 0), cplx(0, -1),  //
                           cplx(0, 1), cplx(0, 0)}};

inline const Mat2 kSigma3{{cplx(1, 0), cplx(0, 0),  //
                           cplx(0, 0), cplx(-1, 0)}};

// sigma(0) is the identity, sigma(1..3) the Pauli matrices.
inline const Mat2& sigma(int a) {
  switch (a) {
    case 0: return kId2;
    case 1: return kSigma1;
    case 2: return kSigma2;
    case 3: return kSigma3;
    default: throw std::out_of_range("sigma: index must be 0..3");
  }
}

}  // namespace spinent
