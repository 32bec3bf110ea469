#include "abseq/abelian.hpp"

#include <sstream>

namespace abseq {

IntVec AbelianPresentation::annihilators() const
{
    IntVec a(components());
    for (std::size_t i = 0; i < torsion.size(); ++i)
        a[i] = torsion[i];
    return a;
}

Int AbelianPresentation::order() const
{
    if (free_rank > 0)
        return 0;
    Int o = 1;
    for (const Int& d : torsion)
        o *= d;
    return o;
}

std::string AbelianPresentation::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

Subquotient::Subquotient(std::size_t ambient_rank, const IntMatrix& cycles,
                         const IntMatrix& boundaries)
    : ambient_(ambient_rank)
{
    if (cycles.rows() != ambient_rank || (boundaries.cols() > 0 && boundaries.rows() != ambient_rank))
        throw std::invalid_argument("subquotient: ambient rank mismatch");

    SmithForm Sc = smith_normal_form(cycles);
    Uc_ = Sc.U;
    rank_c_ = Sc.rank;
    dc_.assign(Sc.diag.begin(), Sc.diag.begin() + rank_c_);

    // Coordinates of the boundary columns in the chosen basis of span(cycles).
    IntMatrix X(rank_c_, boundaries.cols());
    for (std::size_t j = 0; j < boundaries.cols(); ++j) {
        IntVec y = Uc_.apply(boundaries.column(j));
        for (std::size_t i = 0; i < ambient_rank; ++i) {
            if (i < rank_c_) {
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(), dc_[i].get_mpz_t());
                if (r != 0)
                    throw std::invalid_argument("boundaries not contained in cycles");
                X.at(i, j) = q;
            } else if (y[i] != 0) {
                throw std::invalid_argument("boundaries not contained in cycles");
            }
        }
    }

    SmithForm Sx = smith_normal_form(X);
    Ux_ = Sx.U;
    nonzero_ = Sx.rank;
    factors_.assign(rank_c_, 0);
    for (std::size_t i = 0; i < Sx.diag.size() && i < rank_c_; ++i)
        factors_[i] = Sx.diag[i];
    ones_ = 0;
    while (ones_ < nonzero_ && factors_[ones_] == 1)
        ++ones_;

    group_.free_rank = rank_c_ - nonzero_;
    group_.torsion.assign(factors_.begin() + ones_, factors_.begin() + nonzero_);

    // Generator lifts: columns of Bas * Ux_inv for the surviving coordinates,
    // where Bas = Uc_inv * diag(dc).
    IntMatrix Bas(ambient_rank, rank_c_);
    for (std::size_t j = 0; j < rank_c_; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i)
            Bas.at(i, j) = Sc.U_inv.at(i, j) * dc_[j];
    IntMatrix newbas = Bas * Sx.U_inv;
    std::vector<std::size_t> keep;
    for (std::size_t j = ones_; j < nonzero_; ++j)
        keep.push_back(j);  // torsion generators
    for (std::size_t j = nonzero_; j < rank_c_; ++j)
        keep.push_back(j);  // free generators
    lifts_ = newbas.select_cols(keep);
}

IntVec Subquotient::lift(std::size_t i) const
{
    return lifts_.column(i);
}

IntMatrix Subquotient::generator_lifts() const
{
    return lifts_;
}

std::optional<IntVec> Subquotient::reduce(const IntVec& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("reduce: dimension mismatch");
    IntVec y = Uc_.apply(v);
    IntVec w(rank_c_);
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (i < rank_c_) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(), dc_[i].get_mpz_t());
            if (r != 0)
                return std::nullopt;
            w[i] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec z = Ux_.apply(w);
    IntVec out(group_.components());
    std::size_t t = nonzero_ - ones_;
    for (std::size_t p = 0; p < t; ++p)
        out[p] = mod_canonical(z[ones_ + p], factors_[ones_ + p]);
    for (std::size_t p = 0; p < rank_c_ - nonzero_; ++p)
        out[t + p] = z[nonzero_ + p];
    return out;
}

AbelianPresentation cokernel(const IntMatrix& M)
{
    SmithForm S = smith_normal_form(M);
    AbelianPresentation g;
    g.free_rank = M.rows() - S.rank;
    for (std::size_t i = 0; i < S.rank; ++i)
        if (S.diag[i] >= 2)
            g.torsion.push_back(S.diag[i]);
    return g;
}

IntMatrix relation_columns(const IntVec& ann)
{
    std::size_t t = 0;
    for (const Int& a : ann)
        if (a != 0)
            ++t;
    IntMatrix R(ann.size(), t);
    std::size_t j = 0;
    for (std::size_t i = 0; i < ann.size(); ++i)
        if (ann[i] != 0)
            R.at(i, j++) = ann[i];
    return R;
}

IntVec reduce_mod_ann(IntVec v, const IntVec& ann)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod_canonical(v[i], ann[i]);
    return v;
}

bool is_zero_mod_ann(const IntVec& v, const IntVec& ann)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (ann[i] == 0) {
            if (v[i] != 0)
                return false;
        } else if (v[i] % ann[i] != 0) {
            return false;
        }
    }
    return true;
}

bool matrix_zero_mod_ann(const IntMatrix& M, const IntVec& row_ann)
{
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (!is_zero_mod_ann(M.column(j), row_ann))
            return false;
    return true;
}

IntMatrix group_map_kernel(const IntMatrix& g, const IntVec& annC)
{
    IntMatrix full = g.hcat(relation_columns(annC));
    if (full.rows() == 0)
        return IntMatrix::identity(g.cols());
    IntMatrix ker = kernel_basis(full);
    // x-projection: keep the rows belonging to the domain of g
    IntMatrix proj(g.cols(), ker.cols());
    for (std::size_t i = 0; i < g.cols(); ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j)
            proj.at(i, j) = ker.at(i, j);
    return proj;
}

Subquotient group_complex_homology(const IntMatrix& f, const IntVec& annB,
                                   const IntMatrix& g, const IntVec& annC)
{
    const std::size_t dimB = annB.size();
    if (g.cols() != dimB || (f.cols() > 0 && f.rows() != dimB))
        throw std::invalid_argument("group_complex_homology: dimension mismatch");
    IntMatrix cycles = group_map_kernel(g, annC);
    IntMatrix boundaries = (f.cols() > 0 ? f : IntMatrix(dimB, 0)).hcat(relation_columns(annB));
    return Subquotient(dimB, cycles, boundaries);
}

} // namespace abseq
