#pragma once

// The concrete groups: G <= GL(2k, q), its 2x2 preimage Gbar <= GL(2, q^k),
// SL(2, q^k), the Singer cycle M and Hbar = <M^(q^k - 1)>, H = psi(Hbar).

#include <string>
#include <vector>

#include "flagcodes/galois.hpp"
#include "flagcodes/group.hpp"
#include "flagcodes/matrix.hpp"
#include "flagcodes/report.hpp"
#include "flagcodes/spread.hpp"
#include "flagcodes/subspace.hpp"

namespace flagcodes {

/// [[0, I_k], [I_k, 0]] over `f`.
inline Matrix swap_matrix(const GaloisField& f, std::size_t k) {
  Matrix m(f, 2 * k, 2 * k);
  m.set_block(0, k, Matrix::identity(f, k));
  m.set_block(k, 0, Matrix::identity(f, k));
  return m;
}

/// [[I_k, b], [0, I_k]]
inline Matrix upper_unipotent(const Matrix& b) {
  const GaloisField& f = b.field();
  const std::size_t k = b.rows();
  Matrix m = Matrix::identity(f, 2 * k);
  m.set_block(0, k, b);
  return m;
}

/// [[I_k, 0], [b, I_k]]
inline Matrix lower_unipotent(const Matrix& b) {
  const GaloisField& f = b.field();
  const std::size_t k = b.rows();
  Matrix m = Matrix::identity(f, 2 * k);
  m.set_block(k, 0, b);
  return m;
}

inline std::vector<Matrix> G_generators(const FieldTower& t) {
  std::vector<Matrix> gens{swap_matrix(t.gf_q(), t.k())};
  Matrix pw = Matrix::identity(t.gf_q(), t.k());
  for (std::uint32_t i = 0; i + 1 < t.qk(); ++i) {
    gens.push_back(upper_unipotent(pw));
    pw = pw * t.companion();
  }
  return gens;
}

inline std::vector<Matrix> Gbar_generators(const FieldTower& t) {
  const GaloisField& f = t.gf_qk();
  std::vector<Matrix> gens{swap_matrix(f, 1)};
  for (std::uint32_t i = 0; i + 1 < t.qk(); ++i) gens.push_back(upper_unipotent(Matrix(f, {{f.exp(i)}})));
  return gens;
}

inline std::vector<Matrix> SL2_generators(const FieldTower& t) {
  const GaloisField& f = t.gf_qk();
  std::vector<Matrix> gens;
  for (std::uint32_t i = 0; i + 1 < t.qk(); ++i) gens.push_back(upper_unipotent(Matrix(f, {{f.exp(i)}})));
  for (std::uint32_t i = 0; i + 1 < t.qk(); ++i) gens.push_back(lower_unipotent(Matrix(f, {{f.exp(i)}})));
  return gens;
}

inline MatrixGroup build_G(const FieldTower& t, std::size_t cap = caps::resolve(caps::kGroupClosure)) {
  return close_group(t.gf_q(), 2 * t.k(), G_generators(t), cap);
}

inline MatrixGroup build_Gbar(const FieldTower& t, std::size_t cap = caps::resolve(caps::kGroupClosure)) {
  return close_group(t.gf_qk(), 2, Gbar_generators(t), cap);
}

inline MatrixGroup build_SL2(const FieldTower& t, std::size_t cap = caps::resolve(caps::kGroupClosure)) {
  return close_group(t.gf_qk(), 2, SL2_generators(t), cap);
}

/// All 2x2 matrices over `f` with determinant `det`, sorted. Exhaustive over
/// |f|^4 matrices.
inline std::vector<Matrix> matrices_with_det(const GaloisField& f, Code det) {
  const std::uint64_t q = f.size();
  if (q * q * q * q > caps::resolve(caps::kGroupClosure)) throw CapExceeded("exhaustive 2x2 enumeration", caps::resolve(caps::kGroupClosure));
  std::vector<Matrix> out;
  for (Code a = 0; a < q; ++a)
    for (Code b = 0; b < q; ++b)
      for (Code c = 0; c < q; ++c)
        for (Code d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == det) out.push_back(Matrix(f, 2, 2, {a, b, c, d}));
  std::sort(out.begin(), out.end());
  return out;
}

/// Image of a group under psi, closed from the images of its generators.
inline MatrixGroup psi_image(const FieldTower& t, const MatrixGroup& g) {
  std::vector<Matrix> gens;
  for (const auto& m : g.generators()) gens.push_back(psi(t, m));
  return close_group(t.gf_q(), 2 * t.k(), std::move(gens));
}

struct SingerData {
  Matrix M;               // 2x2 companion matrix over GF(q^k) of the minimal polynomial of omega
  MatrixGroup cycle;      // <M>, order q^2k - 1
  MatrixGroup Hbar;       // <M^(q^k - 1)>, order q^k + 1
  MatrixGroup H;          // psi(Hbar) <= G
};

inline SingerData build_singer(const FieldTower& t) {
  SingerData s;
  s.M = companion_matrix(t.gf_qk(), t.gf_q2k().polynomial());
  s.cycle = close_group(t.gf_qk(), 2, {s.M});
  s.Hbar = close_group(t.gf_qk(), 2, {s.M.pow(t.qk() - 1)});
  s.H = psi_image(t, s.Hbar);
  return s;
}

/// Stab_<M>(l) is the scalar group for every line, and Stab_Hbar(l) is {I}
/// (char 2) or {I, -I} (odd char) for every line.
inline std::vector<CheckReport> singer_stabilizer_checks(const FieldTower& t, const SingerData& s) {
  const GaloisField& f = t.gf_qk();
  const auto lines = all_lines(t);
  std::vector<Matrix> scalars;
  for (Code a = 1; a < f.size(); ++a) scalars.push_back(Matrix::scalar(f, 2, a));
  std::sort(scalars.begin(), scalars.end());
  std::vector<Matrix> pm{Matrix::identity(f, 2)};
  if (t.p() != 2) pm.push_back(Matrix::scalar(f, 2, f.neg(1)));
  std::sort(pm.begin(), pm.end());

  auto run = [&](std::string name, const MatrixGroup& g, const std::vector<Matrix>& want) {
    return timed_check(std::move(name), [&](CheckReport& r) {
      std::size_t ok = 0;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (stabilizer(g, lines[i]).elements() == want)
          ++ok;
        else
          r.fail("line #" + std::to_string(i) + " has an unexpected stabilizer");
      }
      r.expected = {{"lines", lines.size()}, {"stabilizer_order", want.size()}};
      r.computed = {{"lines_matching", ok}};
    });
  };
  return {run("lem_stabM", s.cycle, scalars), run("lem_stabHbar", s.Hbar, pm)};
}

}  // namespace flagcodes
