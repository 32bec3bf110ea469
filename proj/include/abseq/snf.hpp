#ifndef ABSEQ_SNF_HPP
#define ABSEQ_SNF_HPP

#include <optional>

#include "abseq/intmatrix.hpp"

namespace abseq {

// Smith normal form U * M * V = D with U, V unimodular and D diagonal with
// a divisibility chain d1 | d2 | ... (nonnegative).  Inverses are tracked
// during the reduction so that M = U_inv * D * V_inv.
struct SmithForm {
    IntMatrix U, U_inv, V, V_inv;
    IntVec diag;        // min(rows, cols) entries, trailing zeros included
    std::size_t rank = 0;  // number of nonzero diagonal entries

    IntMatrix D(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& M);

// Columns form a Z-basis of ker(M); the kernel of an integer matrix is
// always a direct summand of the domain lattice.
IntMatrix kernel_basis(const IntMatrix& M);

std::size_t rank_of(const IntMatrix& M);

// One integral solution x of M x = b, or nullopt if none exists.
std::optional<IntVec> solve_linear(const SmithForm& S, std::size_t rows, std::size_t cols,
                                   const IntVec& b);
std::optional<IntVec> solve_linear(const IntMatrix& M, const IntVec& b);

// True iff the sublattice spanned by the rows of B is a direct summand of
// Z^cols: the rows are independent and all invariant factors are 1.
bool is_direct_summand(const IntMatrix& B);

bool is_unimodular(const IntMatrix& M);

} // namespace abseq

#endif
