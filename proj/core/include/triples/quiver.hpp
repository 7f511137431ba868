#pragma once

#include "triples/errors.hpp"
#include "triples/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Finite oracle: representations of the two-vertex quiver V1 -> V2 over a
// small prime field.  Everything is validated by exhaustive enumeration;
// the point is independence from the cleverness being tested.

namespace triples::oracle {

inline constexpr int kMaxTotalDim = 6;

// Dense matrix over F_p, p in {2, 3}.
struct FpMat {
  int p = 2;
  int rows = 0, cols = 0;
  std::vector<uint8_t> v;  // row major

  uint8_t& at(int r, int c) { return v[r * cols + c]; }
  uint8_t at(int r, int c) const { return v[r * cols + c]; }
  static FpMat zero(int p, int rows, int cols) {
    return {p, rows, cols, std::vector<uint8_t>(rows * cols, 0)};
  }
  bool operator==(const FpMat&) const = default;
  bool operator<(const FpMat& o) const { return v < o.v; }
};

FpMat rref(const FpMat& m, std::vector<int>* pivots = nullptr);
int rank(const FpMat& m);
std::vector<uint8_t> mat_vec(const FpMat& m, const std::vector<uint8_t>& x);
// Reduce x modulo the row space of an RREF matrix; empty remainder means
// membership.
std::vector<uint8_t> reduce_by_rows(const FpMat& rref_rows,
                                    const std::vector<uint8_t>& x);
bool in_row_space(const FpMat& rref_rows, const std::vector<uint8_t>& x);

// All subspaces of F_p^n as RREF basis matrices (the zero subspace has zero
// rows), sorted by dimension then entries; complete and duplicate-free.
std::vector<FpMat> all_subspaces(int p, int n);

struct QuiverRep {
  int p = 2;
  int n1 = 0, n2 = 0;
  FpMat phi;  // n2 x n1

  void validate() const;  // SizeBound / MalformedInput
  bool is_zero() const { return n1 == 0 && n2 == 0; }
  std::string key() const;
};

std::vector<QuiverRep> all_reps(int p, int n1, int n2);

// Exact central charge on dimension vectors: Z(n1,n2) = n1 z1 + n2 z2 with
// both values in the semi-closed upper half plane.
struct DimCharge {
  QC z1, z2;

  void validate() const;  // MalformedInput when not a stability function
  QC eval(int n1, int n2) const {
    return {z1.re * n1 + z2.re * n2, z1.im * n1 + z2.im * n2};
  }
};

// Slope comparison against a rational threshold: mu = -Re/Im, infinite when
// Im = 0.  Exact.
bool slope_gt(const QC& z, const Rat& alpha);

struct Subrep {
  FpMat W1, W2;  // RREF bases
  int d1 = 0, d2 = 0;
};

// All subrepresentations: subspace pairs with phi(W1) inside W2.
std::vector<Subrep> subreps(const QuiverRep& rep);

QuiverRep sub_rep(const QuiverRep& rep, const Subrep& s);
QuiverRep quotient_rep(const QuiverRep& rep, const Subrep& s);

struct HnFactor {
  int n1 = 0, n2 = 0;
  QC z;  // charge of the factor class

  bool operator==(const HnFactor&) const = default;
};

// Greedy filtration: the subobject of maximal phase, ties broken by maximal
// imaginary part; quotient and recurse.  Factors have strictly decreasing
// phases.
std::vector<HnFactor> hn_filtration(const QuiverRep& rep, const DimCharge& Z);

bool semistable(const QuiverRep& rep, const DimCharge& Z);

// Independent check: every filtration with semistable factors of strictly
// decreasing phases, found by exhaustive scan; memoized per rep.
class ExhaustiveHn {
 public:
  explicit ExhaustiveHn(DimCharge Z) : Z_(std::move(Z)) {}

  // Distinct factor signatures of valid HN chains (uniqueness = size one).
  std::vector<std::vector<HnFactor>> chains(const QuiverRep& rep);
  bool semistable_memo(const QuiverRep& rep);

 private:
  DimCharge Z_;
  std::map<std::string, std::vector<std::vector<HnFactor>>> memo_;
  std::map<std::string, bool> ss_;
};

// dim Hom(X, Y): pairs (A, B) with B phi_X = phi_Y A, by exact linear
// algebra over F_p.
int hom_dim(const QuiverRep& X, const QuiverRep& Y);
// The same count by enumerating every pair of linear maps; SizeBound when
// the search space exceeds 2^20.
long long hom_count_bruteforce(const QuiverRep& X, const QuiverRep& Y);

struct TruncationResult {
  std::vector<QuiverRep> torsion, free;  // membership at the given dims
  bool hom_axiom;            // Hom(T, F) = 0 across the listed members
  bool decomposition_axiom;  // every rep splits as T-sub with F-quotient
};

TruncationResult truncation_pair(int p, int n1, int n2, const DimCharge& Z,
                                 const Rat& alpha);

// Cross-dimension verification of both torsion-pair axioms over all reps
// with n1 + n2 <= total_cap.  exhaustive_hom additionally re-checks the
// Hom axiom by full map enumeration wherever it fits.
bool verify_truncation_axioms(int p, int total_cap, const DimCharge& Z,
                              const Rat& alpha, bool exhaustive_hom = false);

struct GluedHeartReport {
  bool contains_embedded;
  bool extension_closed;
  std::optional<QuiverRep> witness;  // escaping extension when not closed
};

// Glued-heart membership at quiver scale: vertex hearts with the second
// one optionally shifted.  With no shift every representation belongs and
// extensions stay inside; shifting the second simples finds an escaping
// extension by exhaustive search.
GluedHeartReport glued_heart_check(int p, int shift2, int total_cap);

}  // namespace triples::oracle
