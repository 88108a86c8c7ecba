#pragma once

// Resolvents of monic integral septics: the 35-ic of 3-subset sums built
// exactly from power sums, and the quadratic, 30-ic and 120-ic (plus a
// numeric 35-ic) built from high-precision roots over coset representatives.

#include "septic/intpoly.hpp"
#include "septic/perm.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace septic {

enum class ResolventKind { Quadratic, Thirty, OneTwenty, ThreeSet35 };

std::string kindString(ResolventKind k);
std::optional<ResolventKind> parseKind(std::string_view text);
int resolventDegree(ResolventKind k);
/// The stabilizer H whose cosets index the resolvent's roots.
const PermGroup& resolventStabilizer(ResolventKind k);

/// Newton's identities in both directions. powerSumsFromPoly returns
/// P_0..P_k of the roots of a monic f (P_0 = deg f).
std::vector<BigInt> powerSumsFromPoly(const IntPoly& f, int k);
/// Monic polynomial of degree n whose roots have power sums p[1..n];
/// throws DomainError if a coefficient is not integral.
IntPoly polyFromPowerSums(const std::vector<BigRat>& p, int n);

/// prod over 3-subsets {i,j,k} of (x - (a_i + a_j + a_k)), exactly.
IntPoly resolvent35Symbolic(const IntPoly& f);

/// Characteristic polynomial of multiplication by t(x) in Q[x]/(f), made
/// primitive with positive leading coefficient.
IntPoly tschirnhausen(const IntPoly& f, const IntPoly& t);
/// The transformation polynomial used for a given seed (seed 0 is x).
IntPoly tschirnhausenPolynomial(int seed);
/// tschirnhausen(f, tschirnhausenPolynomial(seed)); DomainError when t(alpha)
/// does not generate the field (result not squarefree).
IntPoly tschirnhausen(const IntPoly& f, int seed);

class PrecisionExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NumericResolvent {
  ResolventKind kind{};
  IntPoly poly;
  /// The septic whose roots were used: f itself, or a Tschirnhausen
  /// transform of it when f produced colliding resolvent roots.
  IntPoly source;
  int tschirnhausenSeed = 0;
  long digits = 0;
};

/// Numeric resolvent of a monic squarefree septic. Escalates 100 -> 200 ->
/// 400 requested digits (starting at `digits` if larger) until every
/// coefficient rounds within 0.4, and retries on Tschirnhausen transforms
/// with seeds 1, 2, ... when two resolvent roots collide.
NumericResolvent resolventNumeric(const IntPoly& f, ResolventKind kind, long digits = 100);

/// Res_y(h(y), (x-y)^2 - d) = prod_k ((x - b_k)^2 - d) * lc(h)^2.
IntPoly auxiliaryGd(const IntPoly& h, const BigInt& d);

/// "kind degree c_n ... c_0"
std::string resolventDump(ResolventKind kind, const IntPoly& r);

}  // namespace septic
