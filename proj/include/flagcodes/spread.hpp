#pragma once

// The Segre planar spread of F_q^{2k}, the field reduction map from lines of
// F_{q^k}^2 into G_q(k, 2k), and the monomorphism psi: GL(2, q^k) -> GL(2k, q).

#include <span>
#include <string>
#include <vector>

#include "flagcodes/galois.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/random.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// U_k = rowsp(I_k | 0_k)
inline Subspace U_k(const FieldTower& t) {
  const std::size_t k = t.k();
  Matrix m(t.gf_q(), k, 2 * k);
  m.set_block(0, 0, Matrix::identity(t.gf_q(), k));
  return Subspace::from(m);
}

/// V_k = rowsp(0_k | I_k)
inline Subspace V_k(const FieldTower& t) {
  const std::size_t k = t.k();
  Matrix m(t.gf_q(), k, 2 * k);
  m.set_block(0, k, Matrix::identity(t.gf_q(), k));
  return Subspace::from(m);
}

/// rowsp(x1, x2) in F_{q^k}^2.
inline Subspace make_line(const FieldTower& t, Code x1, Code x2) {
  if (x1 == 0 && x2 == 0) throw InvalidArgument("a line needs a nonzero vector");
  return Subspace::from(Matrix(t.gf_qk(), 1, 2, {x1, x2}));
}

/// All q^k + 1 lines of F_{q^k}^2, canonically sorted.
inline std::vector<Subspace> all_lines(const FieldTower& t) { return enumerate_grassmannian(t.gf_qk(), 1, 2); }

inline SubspaceCode build_segre_spread(const FieldTower& t) {
  const std::size_t k = t.k();
  const GaloisField& f = t.gf_q();
  std::vector<Subspace> members{U_k(t), V_k(t)};
  Matrix gen(f, k, 2 * k);
  gen.set_block(0, 0, Matrix::identity(f, k));
  Matrix pw = Matrix::identity(f, k);
  for (std::uint32_t i = 0; i + 1 < t.qk(); ++i) {
    gen.set_block(0, k, pw);
    members.push_back(Subspace::from(gen));
    pw = pw * t.companion();
  }
  return SubspaceCode(f, 2 * k, k, std::move(members));
}

/// rowsp(x1, x2) -> rowsp(phi(x1) | phi(x2))
inline Subspace field_reduction(const FieldTower& t, const Subspace& line) {
  if (line.field_ptr() != &t.gf_qk()) throw InvalidArgument("field_reduction expects a line over GF(q^k)");
  if (line.ambient() != 2 || line.dim() != 1) throw InvalidArgument("field_reduction expects a line of F_{q^k}^2");
  const std::size_t k = t.k();
  Matrix m(t.gf_q(), k, 2 * k);
  m.set_block(0, 0, t.field_iso(line.basis()(0, 0)));
  m.set_block(0, k, t.field_iso(line.basis()(0, 1)));
  return Subspace::from(m);
}

/// Blockwise field isomorphism; no invertibility check.
inline Matrix psi_unchecked(const FieldTower& t, const Matrix& m) {
  const std::size_t k = t.k();
  Matrix r(t.gf_q(), 2 * k, 2 * k);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.set_block(i * k, j * k, t.field_iso(m(i, j)));
  return r;
}

inline Matrix psi(const FieldTower& t, const Matrix& m) {
  if (m.field_ptr() != &t.gf_qk() || m.rows() != 2 || m.cols() != 2)
    throw InvalidArgument("psi expects a 2x2 matrix over GF(q^k)");
  if (determinant(m) == 0) throw InvalidArgument("psi is only defined on invertible matrices");
  return psi_unchecked(t, m);
}

/// phi(l . A) = phi(l) . psi(A) for every line l and every A in `elements`.
inline CheckReport action_equivalence_check(const FieldTower& t, std::span<const Matrix> elements) {
  return timed_check("eq_accioequiv", [&](CheckReport& r) {
    const auto lines = all_lines(t);
    std::vector<Subspace> images;
    for (const auto& l : lines) images.push_back(field_reduction(t, l));
    std::size_t checked = 0, bad = 0;
    for (const Matrix& a : elements) {
      const Matrix pa = psi(t, a);
      for (std::size_t i = 0; i < lines.size(); ++i) {
        ++checked;
        if (field_reduction(t, lines[i] * a) == images[i] * pa) continue;
        if (++bad <= 10) r.fail("line #" + std::to_string(i) + " breaks equivariance");
      }
    }
    r.expected = checked;
    r.computed = checked - bad;
  });
}

/// Sampled variant over uniform random elements of GL(2, q^k).
inline CheckReport action_equivalence_check(const FieldTower& t, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> el;
  el.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) el.push_back(random_invertible(rng, t.gf_qk(), 2));
  return action_equivalence_check(t, el);
}

}  // namespace flagcodes
