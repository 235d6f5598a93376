#pragma once
//
// Brute-force ground truth over the integers: column Hermite forms, left
// GCDs as joint column lattices, exhaustive left-divisor enumeration via
// overlattices, and literal checks of the adequacy definition clauses.
//
#include "adq/divisor.hpp"

#include <vector>

namespace adq::oracle {

// Lower-triangular Hermite representative of a full-rank column lattice:
// [[d1, 0], [h21, d2]] with d1, d2 > 0 and 0 <= h21 < d2.
struct HnfMatrix {
  Int d1, h21, d2;

  Mat2 to_mat2() const;
  bool is_identity() const { return d1 == 1 && d2 == 1 && h21 == 0; }
  friend bool operator==(const HnfMatrix&, const HnfMatrix&) = default;
};

/// Unique Hermite representative of the lattice spanned by the columns.
HnfMatrix col_hnf(const std::vector<std::array<Int, 2>>& columns);

/// Left GCD of two nonsingular integer matrices as the Hermite form of the
/// 2x4 concatenation [A | B].
Mat2 leftgcd_oracle(const Mat2& a, const Mat2& b);

/// Full certificate: gcd matrix, both cofactors, and its SNF diagonal.
LeftGcdResult left_gcd_full(const Mat2& a, const Mat2& b);

struct Options {
  long long det_bound = 10000;
  bool permissive_clause_ii = false;  // allow a unit P in clause (ii)
};

/// All left divisors of B up to right strong associates, i.e. all
/// overlattices of B's column lattice, in Hermite form, sorted.
std::vector<HnfMatrix> enumerate_left_divisors(const Mat2& b, bool include_units,
                                               const Options& opt = {});

/// Literal reading of the criterion: every nonunit left divisor of S has a
/// non-unimodular left GCD with A.
bool theorem2_oracle(const Mat2& a, const Mat2& s, const Options& opt = {});

struct DefinitionCheck {
  bool clause_i = false;
  bool clause_ii = false;
};

/// Checks both clauses of the adequacy definition for B = S * T against A
/// by exhaustive enumeration.
DefinitionCheck definition_check(const Mat2& b, const Mat2& s, const Mat2& t, const Mat2& a,
                                 const Options& opt = {});

}  // namespace adq::oracle
