#include "abseq/snf.hpp"

namespace abseq {

IntMatrix SmithForm::D(std::size_t rows, std::size_t cols) const
{
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i)
        d.at(i, i) = diag[i];
    return d;
}

namespace {

// Row/column operations are mirrored on U resp. V, and inverted on
// U_inv resp. V_inv (on the opposite side), keeping U*M0*V = M and
// M0 = U_inv * M * V_inv invariant.
struct Reducer {
    IntMatrix M, U, U_inv, V, V_inv;

    explicit Reducer(const IntMatrix& m)
        : M(m),
          U(IntMatrix::identity(m.rows())), U_inv(IntMatrix::identity(m.rows())),
          V(IntMatrix::identity(m.cols())), V_inv(IntMatrix::identity(m.cols()))
    {}

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        M.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        M.swap_cols(a, b);
        V.swap_cols(a, b);
        V_inv.swap_rows(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& c)
    {
        M.add_row_multiple(dst, src, c);
        U.add_row_multiple(dst, src, c);
        U_inv.add_col_multiple(src, dst, -c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& c)
    {
        M.add_col_multiple(dst, src, c);
        V.add_col_multiple(dst, src, c);
        V_inv.add_row_multiple(src, dst, -c);
    }
    void negate_row(std::size_t i)
    {
        M.negate_row(i);
        U.negate_row(i);
        U_inv.negate_col(i);
    }

    // Bring M to diagonal form with nonnegative entries, zeros last.
    void diagonalize()
    {
        const std::size_t r = M.rows(), c = M.cols();
        const std::size_t t = std::min(r, c);
        for (std::size_t k = 0; k < t; ++k) {
            for (;;) {
                // pivot: minimal nonzero absolute value in the trailing block
                std::size_t pi = k, pj = k;
                Int best = 0;
                for (std::size_t i = k; i < r; ++i)
                    for (std::size_t j = k; j < c; ++j) {
                        const Int& v = M.at(i, j);
                        if (v == 0)
                            continue;
                        Int a = int_abs(v);
                        if (best == 0 || a < best) {
                            best = a;
                            pi = i;
                            pj = j;
                        }
                    }
                if (best == 0)
                    return;  // trailing block is zero; done
                swap_rows(k, pi);
                swap_cols(k, pj);
                bool dirty = false;
                for (std::size_t i = k + 1; i < r; ++i) {
                    if (M.at(i, k) == 0)
                        continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), M.at(i, k).get_mpz_t(), M.at(k, k).get_mpz_t());
                    add_row(i, k, -q);
                    if (M.at(i, k) != 0)
                        dirty = true;  // nonzero remainder, smaller than pivot
                }
                for (std::size_t j = k + 1; j < c; ++j) {
                    if (M.at(k, j) == 0)
                        continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), M.at(k, j).get_mpz_t(), M.at(k, k).get_mpz_t());
                    add_col(j, k, -q);
                    if (M.at(k, j) != 0)
                        dirty = true;
                }
                if (!dirty)
                    break;  // row and column k are clear
            }
            if (M.at(k, k) < 0)
                negate_row(k);
        }
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& Min)
{
    const std::size_t t = std::min(Min.rows(), Min.cols());
    Reducer red(Min);
    IntMatrix& M = red.M;

    // Diagonalize, then repair the divisibility chain; a repair step can
    // break diagonality, so re-diagonalize until the chain holds.  Each
    // repair strictly shrinks an invariant, so this terminates.
    for (;;) {
        red.diagonalize();
        std::size_t bad = t;
        for (std::size_t k = 0; k + 1 < t; ++k) {
            const Int &a = M.at(k, k), &b = M.at(k + 1, k + 1);
            if (a != 0 && b != 0 && b % a != 0) {
                bad = k;
                break;
            }
        }
        if (bad == t)
            break;
        red.add_col(bad, bad + 1, 1);  // gcd step; re-diagonalization finishes it
    }

    SmithForm S;
    S.U = std::move(red.U);
    S.U_inv = std::move(red.U_inv);
    S.V = std::move(red.V);
    S.V_inv = std::move(red.V_inv);
    S.diag.resize(t);
    for (std::size_t k = 0; k < t; ++k) {
        S.diag[k] = M.at(k, k);
        if (S.diag[k] != 0)
            S.rank = k + 1;
    }
    return S;
}

IntMatrix kernel_basis(const IntMatrix& M)
{
    SmithForm S = smith_normal_form(M);
    // ker(M) = V * ker(D); ker(D) is spanned by the coordinates past the rank
    return S.V.column_range(S.rank, M.cols());
}

std::size_t rank_of(const IntMatrix& M)
{
    return smith_normal_form(M).rank;
}

std::optional<IntVec> solve_linear(const SmithForm& S, std::size_t rows, std::size_t cols,
                                   const IntVec& b)
{
    if (b.size() != rows)
        throw std::invalid_argument("dimension mismatch in solve");
    IntVec y = S.U.apply(b);
    IntVec z(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < S.diag.size() && S.diag[i] != 0) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y[i].get_mpz_t(), S.diag[i].get_mpz_t());
            if (r != 0)
                return std::nullopt;
            z[i] = q;
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return S.V.apply(z);
}

std::optional<IntVec> solve_linear(const IntMatrix& M, const IntVec& b)
{
    return solve_linear(smith_normal_form(M), M.rows(), M.cols(), b);
}

bool is_direct_summand(const IntMatrix& B)
{
    if (B.rows() == 0)
        return true;
    SmithForm S = smith_normal_form(B);
    if (S.rank != B.rows())
        return false;
    for (std::size_t i = 0; i < S.rank; ++i)
        if (S.diag[i] != 1)
            return false;
    return true;
}

bool is_unimodular(const IntMatrix& M)
{
    if (M.rows() != M.cols())
        return false;
    SmithForm S = smith_normal_form(M);
    if (S.rank != M.rows())
        return false;
    for (std::size_t i = 0; i < S.rank; ++i)
        if (S.diag[i] != 1)
            return false;
    return true;
}

} // namespace abseq
