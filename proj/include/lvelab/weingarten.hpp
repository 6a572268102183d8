#pragma once

#include <map>
#include <vector>

#include "lvelab/partition.hpp"
#include "lvelab/permutation.hpp"
#include "lvelab/rational_function.hpp"

namespace lvelab {

/* Largest moment order for which Weingarten data is precomputed. */
inline constexpr int kWeingartenKMax = 6;

/* Unitary Weingarten function Wg(sigma, N) as an exact rational function of
   the formal size N; depends on sigma only through its cycle type.  Computed
   once per k by inverting the class-algebra Gram matrix
   M[e,d] = sum over tau in class d of N^(#cycles(tau * rep(e)^-1))
   against the identity-class unit vector, using fraction-free elimination.
   capacity_error for k > kWeingartenKMax. */
const RationalFunctionN& weingarten(const IntegerPartition& cycle_type);

/* Haar moment of a product of k U entries and k U* entries:
   integral of U[a1,b1]..U[ak,bk] U*[c1,d1]..U*[ck,dk] dU
   = sum over sigma,tau of delta(a_tau = c) delta(b_sigma = d) Wg(tau sigma^-1).
   Unequal factor counts are a domain error (the integral vanishes identically;
   callers must not rely on a fake zero). */
RationalFunctionN haar_moment(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& c, const std::vector<int>& d);

/* Coefficient tensor of a degree-k unitary-invariant polynomial
   P(H) = sum A[p1,q1,..,pk,qk] H[p1,q1]..H[pk,qk], given by its nonzero
   entries on indices 0..dim-1; dim must exceed k so the delta-pattern basis
   is independent.  Returns the expansion of P over power-trace invariants:
   P = sum over partitions pi of P_pi * Tr_pi(H), each P_pi obtained from the
   double permutation sum with Weingarten weights. */
std::map<IntegerPartition, RationalFunctionN> trace_invariant_coeffs(
    int k, int dim, const std::map<std::vector<int>, BigRat>& coeff_tensor);

}  // namespace lvelab
