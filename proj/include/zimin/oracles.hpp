// oracles.hpp -- independent exhaustive-enumeration oracles for the
// counting recursions, plus the five-way decomposition classifier
#pragma once

#include "zimin/numbers.hpp"
#include "zimin/words.hpp"

namespace zimin {

/// Exact bifix-free word count over [q] at length ell, by enumeration.
/// Budget: q^ell <= 10^7 (size_error beyond).
Int oracle_bifix_free_count(int q, int ell);

/// Number of length-m words of the form L A L (A nonempty) none of whose
/// bifixes is an aba-shaped instance. Requires L bifix-free and nonempty;
/// budget q^(m - 2|L|) <= 10^7.
Int oracle_b_count(int q, const Word& L, int m);

/// Number of length-m words of the form L A L (A nonempty) that admit no
/// decomposition L B L B L, L B L L B L, or L B L C L B L with B, C
/// nonempty. Same preconditions and budget as oracle_b_count.
Int oracle_bhat_count(int q, const Word& L, int m);

/// Number of length-n aba-shaped instances over [q], by enumeration.
/// Budget: q^n <= 10^7.
Int oracle_z2_instance_count(int q, int n);

/// The five mutually exclusive shapes a word W = LAL with an aba-shaped
/// bifix can take, keyed by its shortest such bifix U:
///   case_i   W = U C U with U = LBL and C nonempty
///   case_ii  W = U U with U = LBL
///   case_iii W = LBLBL (the two U-occurrences overlap in exactly L)
///   case_iv  W = LLFLLFLL with U = LLFLL, F nonempty
///   case_v   W = LLLL
/// none means W has no aba-shaped bifix.
enum class BifixCase { case_i, case_ii, case_iii, case_iv, case_v, none };

const char* to_string(BifixCase c);

/// Classifies w against the decomposition above. Requires L bifix-free
/// and a bifix of w (std::invalid_argument otherwise). Throws
/// std::logic_error if a word with an aba-shaped bifix fits none of the
/// five shapes (the decomposition would be refuted).
BifixCase classify_bifix_case(const Word& w, const Word& L);

} // namespace zimin
