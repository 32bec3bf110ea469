#ifndef ABSEQ_ABELIAN_HPP
#define ABSEQ_ABELIAN_HPP

#include <optional>
#include <string>

#include "abseq/snf.hpp"

namespace abseq {

// Finitely generated abelian group in canonical form: free rank plus
// invariant factors d1 | d2 | ... with every d >= 2.
struct AbelianPresentation {
    std::size_t free_rank = 0;
    IntVec torsion;

    bool operator==(const AbelianPresentation& o) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::size_t components() const { return free_rank + torsion.size(); }

    // Annihilator per presentation coordinate: torsion factors first, then
    // zeros for the free generators.
    IntVec annihilators() const;

    Int order() const;  // 0 when infinite
    std::string to_string() const;
};

// Group of a quotient of lattices span(cycles)/span(boundaries) inside an
// ambient Z^n, with enough change-of-basis data retained to lift presentation
// generators to ambient vectors and to reduce ambient vectors lying in
// span(cycles) to presentation coordinates.
class Subquotient {
public:
    // cycles, boundaries: columns generate the respective sublattices.
    // Throws if some boundary column is not in span(cycles).
    Subquotient(std::size_t ambient_rank, const IntMatrix& cycles, const IntMatrix& boundaries);

    const AbelianPresentation& group() const { return group_; }
    std::size_t ambient_rank() const { return ambient_; }

    // Ambient lift of presentation generator i (torsion generators first).
    IntVec lift(std::size_t i) const;
    IntMatrix generator_lifts() const;  // ambient x components

    // Presentation coordinates of an ambient vector in span(cycles); torsion
    // coordinates are canonicalized into [0, d).  nullopt if v is not in
    // span(cycles).
    std::optional<IntVec> reduce(const IntVec& v) const;

    bool contains(const IntVec& v) const { return reduce(v).has_value(); }

private:
    std::size_t ambient_;
    AbelianPresentation group_;
    // span(cycles) basis data: Bas = U_C_inv * diag(dc) (first rank_c columns)
    IntMatrix Uc_;
    IntVec dc_;
    std::size_t rank_c_;
    // relation data in basis coordinates: SNF of the boundary-coordinate matrix
    IntMatrix Ux_;
    IntMatrix lifts_;          // ambient x components, generator lifts
    IntVec factors_;           // full SNF diagonal of X (rank_c entries, padded)
    std::size_t ones_;         // leading invariant factors equal to 1
    std::size_t nonzero_;      // rank of X
};

// Presentation of Z^rows / column-span(M).
AbelianPresentation cokernel(const IntMatrix& M);

// Columns m * e_j for each torsion coordinate (ann[j] != 0).
IntMatrix relation_columns(const IntVec& ann);

// Coordinate-wise canonical form modulo annihilators.
IntVec reduce_mod_ann(IntVec v, const IntVec& ann);
bool is_zero_mod_ann(const IntVec& v, const IntVec& ann);
bool matrix_zero_mod_ann(const IntMatrix& M, const IntVec& row_ann);

// Homology at B of a complex  A --f--> B --g--> C  of presented groups.
// annB/annC are the annihilator vectors of B and C; f, g act on presentation
// coordinates and must map relations into relations (g o f = 0 in C).
Subquotient group_complex_homology(const IntMatrix& f, const IntVec& annB,
                                   const IntMatrix& g, const IntVec& annC);

// Lattice of coordinate vectors x with g(x) = 0 in the presented group C,
// i.e. the x-projection of ker[g | relations(C)].  Columns generate it.
IntMatrix group_map_kernel(const IntMatrix& g, const IntVec& annC);

} // namespace abseq

#endif
