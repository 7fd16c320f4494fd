#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "spinent/matrix.hpp"
#include "spinent/rng.hpp"

namespace testsupport {

using namespace spinent;

inline Spinor make_spinor(cplx a, cplx b, cplx c, cplx d) {
  Spinor s;
  s[0] = a;
  s[1] = b;
  s[2] = c;
  s[3] = d;
  return s;
}

inline TwoSpinor make_two(cplx a, cplx b) {
  TwoSpinor s;
  s[0] = a;
  s[1] = b;
  return s;
}

inline Mat2 make_mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

template <std::size_t N>
Matrix<N> random_matrix(RandomStream& rng, double scale = 1.0) {
  Matrix<N> m;
  for (auto& e : m.e) e = scale * 0.5 * rng.normal_complex();
  return m;
}

template <std::size_t N>
Matrix<N> random_hermitian(RandomStream& rng, double scale = 1.0) {
  const Matrix<N> m = random_matrix<N>(rng, scale);
  return 0.5 * (m + m.adjoint());
}

inline Spinor random_spinor(RandomStream& rng) {
  Spinor s;
  for (auto& c : s.c) c = rng.normal_complex();
  const double n = std::sqrt(s.norm2_euclid());
  return (1.0 / n) * s;
}

// Independent exponential reference built from a different scaling depth
// and series length than the production routine. Each squaring doubles
// accumulated roundoff, so the depth stays moderate and the series does
// the rest of the work.
template <std::size_t N>
Matrix<N> reference_expm(const Matrix<N>& a) {
  const int k = 8;
  const Matrix<N> x = std::ldexp(1.0, -k) * a;
  Matrix<N> sum = Matrix<N>::identity();
  Matrix<N> term = Matrix<N>::identity();
  for (int j = 1; j <= 20; ++j) {
    term = (1.0 / j) * (term * x);
    sum += term;
  }
  for (int j = 0; j < k; ++j) sum = sum * sum;
  return sum;
}

// Literal frame-sum form of the B-side partial trace: contracts X
// against an explicit kappa_b-orthonormal frame with its signs.
inline Mat2 frame_sum_trace_b(const Mat4& x, const Mat2& kappa_a, const Mat2& kappa_b,
                              const std::array<TwoSpinor, 2>& frame,
                              const std::array<int, 2>& signs) {
  const Mat4 w = tensor_product(kappa_a, kappa_b) * x;
  Mat2 acc;
  for (std::size_t l = 0; l < 2; ++l) {
    const TwoSpinor& b = frame[l];
    Mat2 z;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        cplx s = 0.0;
        for (std::size_t kk = 0; kk < 2; ++kk)
          for (std::size_t ll = 0; ll < 2; ++ll)
            s += std::conj(b[kk]) * w(2 * i + kk, 2 * j + ll) * b[ll];
        z(i, j) = s;
      }
    acc += static_cast<double>(signs[l]) * z;
  }
  return kappa_a * acc;
}

struct CliResult {
  int code = -1;
  std::string output;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = true) {
  const char* bin = std::getenv("SPINENT_BIN");
  if (!bin) return {-1, "SPINENT_BIN not set"};
  const std::string cmd =
      std::string("\"") + bin + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CliResult r;
  r.output = out;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace testsupport
