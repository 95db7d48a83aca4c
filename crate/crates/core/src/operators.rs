//! Variable transpositions `s_ij`, the operators `N_ij`, Cherednik operators
//! `ξ_i` and the raising operator `Φ`.
//!
//! Indices are 0-based. The `_block` variants act on a contiguous range of
//! variables inside a larger ring, which is how `ξ^x` and `ξ^y` are applied to
//! a bi-series in `x_1…x_n, y_1…y_n`.

use std::ops::Range;

use thiserror::Error;

use crate::field::AlphaFrac;
use crate::poly::{ExponentVector, PolyError, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("operator needs two distinct variables, got {0} twice")]
    SameIndex(usize),
    #[error("variable block {start}..{end} does not fit in {nvars} variables")]
    Block {
        start: usize,
        end: usize,
        nvars: usize,
    },
    #[error("internal error: division by x_{i} - x_{j} left a remainder")]
    Remainder { i: usize, j: usize },
}

fn check_pair(f: &SparsePoly, i: usize, j: usize) -> Result<(), OperatorError> {
    for k in [i, j] {
        if k >= f.nvars() {
            return Err(PolyError::IndexOutOfRange {
                index: k,
                nvars: f.nvars(),
            }
            .into());
        }
    }
    if i == j {
        return Err(OperatorError::SameIndex(i));
    }
    Ok(())
}

fn check_block(f: &SparsePoly, block: &Range<usize>) -> Result<(), OperatorError> {
    if block.start >= block.end || block.end > f.nvars() {
        return Err(OperatorError::Block {
            start: block.start,
            end: block.end,
            nvars: f.nvars(),
        });
    }
    Ok(())
}

/// `s_ij f`: exchanges `x_i` and `x_j`.
pub fn transpose_vars(f: &SparsePoly, i: usize, j: usize) -> Result<SparsePoly, OperatorError> {
    check_pair(f, i, j)?;
    Ok(f.swap_vars(i, j)?)
}

/// `N_ij f = (f − s_ij f)/(x_i − x_j)` by long division in `x_i`.
pub fn n_op(f: &SparsePoly, i: usize, j: usize) -> Result<SparsePoly, OperatorError> {
    check_pair(f, i, j)?;
    let mut rem = f.try_sub(&f.swap_vars(i, j)?)?;
    let mut quot = SparsePoly::zero(f.nvars());
    let top = rem.terms().map(|(e, _)| e.0[i]).max().unwrap_or(0);
    for k in (1..=top).rev() {
        let lead: Vec<(ExponentVector, AlphaFrac)> = rem
            .terms()
            .filter(|(e, _)| e.0[i] == k)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        for (e, c) in lead {
            // c·x_i^k·r = c·x_i^{k-1}·r·(x_i − x_j) + c·x_i^{k-1}·x_j·r
            let mut down = e.clone();
            down.0[i] -= 1;
            quot.add_term(down.clone(), &c);
            rem.add_term(e, &-&c);
            down.0[j] += 1;
            rem.add_term(down, &c);
        }
    }
    if !rem.is_zero() {
        return Err(OperatorError::Remainder { i, j });
    }
    Ok(quot)
}

/// Adds `sign · c · N_ij(x^e)` into `out` using the closed form for a monomial.
fn add_n_monomial(out: &mut SparsePoly, e: &ExponentVector, c: &AlphaFrac, i: usize, j: usize) {
    let (p, q) = (e.0[i], e.0[j]);
    if p == q {
        return;
    }
    // (x_i^p x_j^q − x_i^q x_j^p)/(x_i − x_j) = ±Σ_k x_hi^{top−1−k} x_lo^{low+k}
    let (hi, lo, top, low, coeff) = if p > q {
        (i, j, p, q, c.clone())
    } else {
        (j, i, q, p, -c)
    };
    for k in 0..top - low {
        let mut m = e.clone();
        m.0[hi] = top - 1 - k;
        m.0[lo] = low + k;
        out.add_term(m, &coeff);
    }
}

/// `ξ_i = α x_i∂_i + Σ_{j<i} N_ij x_j + Σ_{j>i} x_j N_ij` on all variables.
pub fn cherednik(f: &SparsePoly, i: usize) -> Result<SparsePoly, OperatorError> {
    cherednik_block(f, i, 0..f.nvars())
}

/// `ξ_i` acting on the variables in `block`; `i` is relative to the block.
pub fn cherednik_block(
    f: &SparsePoly,
    i: usize,
    block: Range<usize>,
) -> Result<SparsePoly, OperatorError> {
    check_block(f, &block)?;
    let n = block.len();
    if i >= n {
        return Err(PolyError::IndexOutOfRange { index: i, nvars: n }.into());
    }
    let vi = block.start + i;
    let mut out = SparsePoly::zero(f.nvars());
    for (e, c) in f.terms() {
        let a = e.0[vi];
        if a > 0 {
            out.add_term(e.clone(), &(c * &AlphaFrac::linear(a as i64, 0)));
        }
        for vj in block.clone() {
            if vj < vi {
                let mut m = e.clone();
                m.0[vj] += 1;
                add_n_monomial(&mut out, &m, c, vi, vj);
            } else if vj > vi {
                let mut tmp = SparsePoly::zero(f.nvars());
                add_n_monomial(&mut tmp, e, c, vi, vj);
                for (m, d) in tmp.terms() {
                    let mut m = m.clone();
                    m.0[vj] += 1;
                    out.add_term(m, d);
                }
            }
        }
    }
    Ok(out)
}

/// `ξ_i` composed from [`n_op`] and [`transpose_vars`], term by term as written.
///
/// Slower than [`cherednik`]; kept as a cross-check.
pub fn cherednik_reference(f: &SparsePoly, i: usize) -> Result<SparsePoly, OperatorError> {
    let n = f.nvars();
    if i >= n {
        return Err(PolyError::IndexOutOfRange { index: i, nvars: n }.into());
    }
    let mut out = f
        .partial_derivative(i)?
        .mul_var(i, 1)?
        .scale(&AlphaFrac::alpha());
    for j in 0..n {
        if j < i {
            out = out.try_add(&n_op(&f.mul_var(j, 1)?, i, j)?)?;
        } else if j > i {
            out = out.try_add(&n_op(f, i, j)?.mul_var(j, 1)?)?;
        }
    }
    Ok(out)
}

/// `Φf(x_1,…,x_n) = x_n f(x_n, x_1, …, x_{n−1})`.
pub fn phi(f: &SparsePoly) -> SparsePoly {
    let n = f.nvars();
    if n == 0 {
        return f.clone();
    }
    let mut out = SparsePoly::zero(n);
    for (e, c) in f.terms() {
        let mut b = vec![0; n];
        b[..n - 1].copy_from_slice(&e.0[1..]);
        b[n - 1] = e.0[0] + 1;
        out.add_term(ExponentVector(b), c);
    }
    out
}

/// Checks `ξ_i f = λ_i f` for every `i`; returns the first failing index.
pub fn first_eigen_failure(
    f: &SparsePoly,
    eigenvalues: &[AlphaFrac],
) -> Result<Option<usize>, OperatorError> {
    for (i, ev) in eigenvalues.iter().enumerate() {
        let lhs = cherednik(f, i)?;
        let rhs = f.scale(ev);
        if lhs != rhs {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
