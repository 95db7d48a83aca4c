//! The two combinatorial scalar products.
//!
//! `⟨x^η, q_γ⟩ = δ_{ηγ}` where `q_γ` is the coefficient of `y^γ` in `Ω`, and
//! `⟨m_λ, g_μ⟩_s = δ_{λμ}` where `g_μ` is the coefficient of `m_μ(y)` in
//! `∏(1 − x_i y_j)^{−1/α}`. Both are computed degree by degree: with `Q` the
//! matrix of basis polynomials in monomial coordinates, `⟨f, g⟩ = fᵀ (Qᵀ)⁻¹ g`.

use num_traits::Zero;
use thiserror::Error;

use crate::compositions::{enumerate_compositions, enumerate_partitions, Composition};
use crate::field::AlphaFrac;
use crate::linalg::{LinAlgError, Matrix};
use crate::par::{self, Parallelism};
use crate::poly::SparsePoly;
use crate::series::{omega_kernel, symmetric_kernel, SeriesError, TruncatedBiSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("degree {degree} exceeds the basis cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("polynomial has {got} variables, the basis has {n}")]
    Variables { got: usize, n: usize },
    #[error("symmetric pairing needs symmetric input")]
    NotSymmetric,
    #[error("index {0} is not in the basis")]
    UnknownIndex(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `q_γ`, indexed by compositions, dual to monomials.
    Nonsymmetric,
    /// `g_λ`, indexed by partitions, dual to `m_λ`.
    Symmetric,
}

#[derive(Clone, Debug)]
struct DegreeBlock {
    index: Vec<Composition>,
    polys: Vec<SparsePoly>,
    /// `(Qᵀ)⁻¹` with `Q[γ][η]` the coordinate of basis element `γ` at `η`.
    form: Matrix,
}

/// Per-degree dual basis and its Gram form.
#[derive(Clone, Debug)]
pub struct DualBasis {
    kind: BasisKind,
    n: usize,
    cap: u32,
    blocks: Vec<DegreeBlock>,
}

fn block_from_kernel(
    kernel: &TruncatedBiSeries,
    index: Vec<Composition>,
) -> Result<DegreeBlock, PairingError> {
    let polys: Vec<SparsePoly> = index
        .iter()
        .map(|g| kernel.coefficient_of_y(g.parts()))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<AlphaFrac>> = polys
        .iter()
        .map(|p| index.iter().map(|eta| p.coefficient(eta.parts())).collect())
        .collect();
    let form = Matrix::from_rows(rows)?.transpose().inverse()?;
    Ok(DegreeBlock { index, polys, form })
}

impl DualBasis {
    fn build(
        kind: BasisKind,
        n: usize,
        cap: u32,
        kernel: TruncatedBiSeries,
        mode: Parallelism,
    ) -> Result<Self, PairingError> {
        let degrees: Vec<u32> = (0..=cap).collect();
        let blocks = par::map(&degrees, mode, |&d| {
            let index = match kind {
                BasisKind::Nonsymmetric => enumerate_compositions(n, d),
                BasisKind::Symmetric => enumerate_partitions(n, d)
                    .into_iter()
                    .map(|p| p.into_composition())
                    .collect(),
            };
            block_from_kernel(&kernel, index)
        })
        .into_iter()
        .collect::<Result<_, _>>()?;
        Ok(DualBasis {
            kind,
            n,
            cap,
            blocks,
        })
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// The basis polynomial with the given index (`q_γ` or `g_λ`).
    pub fn element(&self, index: &Composition) -> Result<&SparsePoly, PairingError> {
        let block = self
            .blocks
            .get(index.degree() as usize)
            .filter(|_| index.len() == self.n)
            .ok_or_else(|| PairingError::UnknownIndex(index.to_string()))?;
        block
            .index
            .iter()
            .position(|g| g == index)
            .map(|k| &block.polys[k])
            .ok_or_else(|| PairingError::UnknownIndex(index.to_string()))
    }

    /// Indices of degree `d`.
    pub fn indices(&self, d: u32) -> &[Composition] {
        self.blocks.get(d as usize).map_or(&[], |b| &b.index)
    }

    fn check(&self, f: &SparsePoly) -> Result<(), PairingError> {
        if f.nvars() != self.n {
            return Err(PairingError::Variables {
                got: f.nvars(),
                n: self.n,
            });
        }
        if let Some(d) = f.degree() {
            if d > self.cap {
                return Err(PairingError::DegreeCap {
                    degree: d,
                    cap: self.cap,
                });
            }
        }
        if self.kind == BasisKind::Symmetric && !f.is_symmetric() {
            return Err(PairingError::NotSymmetric);
        }
        Ok(())
    }

    /// `⟨f, g⟩` (or `⟨f, g⟩_s` for a symmetric basis).
    pub fn pair(&self, f: &SparsePoly, g: &SparsePoly) -> Result<AlphaFrac, PairingError> {
        self.check(f)?;
        self.check(g)?;
        let mut acc = AlphaFrac::zero();
        for block in &self.blocks {
            let fv: Vec<AlphaFrac> = block
                .index
                .iter()
                .map(|e| f.coefficient(e.parts()))
                .collect();
            if fv.iter().all(Zero::is_zero) {
                continue;
            }
            let gv: Vec<AlphaFrac> = block
                .index
                .iter()
                .map(|e| g.coefficient(e.parts()))
                .collect();
            if gv.iter().all(Zero::is_zero) {
                continue;
            }
            let mg = block.form.mul_vec(&gv)?;
            for (a, b) in fv.iter().zip(&mg) {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
        }
        Ok(acc)
    }

    /// Dual coordinates of `g`, for pairing many `f` against one `g`.
    pub fn prepare(&self, g: &SparsePoly) -> Result<Prepared, PairingError> {
        self.check(g)?;
        let coords = self
            .blocks
            .iter()
            .map(|block| {
                let gv: Vec<AlphaFrac> = block
                    .index
                    .iter()
                    .map(|e| g.coefficient(e.parts()))
                    .collect();
                block.form.mul_vec(&gv)
            })
            .collect::<Result<_, _>>()?;
        Ok(Prepared(coords))
    }

    /// `⟨f, g⟩` for a prepared `g`.
    pub fn pair_prepared(&self, f: &SparsePoly, g: &Prepared) -> Result<AlphaFrac, PairingError> {
        self.check(f)?;
        let mut acc = AlphaFrac::zero();
        for (block, mg) in self.blocks.iter().zip(&g.0) {
            for (e, b) in block.index.iter().zip(mg) {
                if b.is_zero() {
                    continue;
                }
                let a = f.coefficient(e.parts());
                if !a.is_zero() {
                    acc += &(&a * b);
                }
            }
        }
        Ok(acc)
    }
}

/// `(Qᵀ)⁻¹ g` per degree block.
#[derive(Clone, Debug)]
pub struct Prepared(Vec<Vec<AlphaFrac>>);

/// `q_γ` for all `|γ| ≤ cap`.
pub fn q_basis(n: usize, cap: u32, mode: Parallelism) -> Result<DualBasis, PairingError> {
    DualBasis::build(
        BasisKind::Nonsymmetric,
        n,
        cap,
        omega_kernel(n, cap, mode),
        mode,
    )
}

/// `g_λ` for all partitions `|λ| ≤ cap` with at most `n` parts.
pub fn g_basis(n: usize, cap: u32, mode: Parallelism) -> Result<DualBasis, PairingError> {
    let c = AlphaFrac::alpha().recip().expect("α is nonzero");
    DualBasis::build(
        BasisKind::Symmetric,
        n,
        cap,
        symmetric_kernel(n, n, &c, cap, mode),
        mode,
    )
}

/// `⟨f, g⟩` against a nonsymmetric basis.
pub fn pair(f: &SparsePoly, g: &SparsePoly, basis: &DualBasis) -> Result<AlphaFrac, PairingError> {
    basis.pair(f, g)
}

/// `⟨f, g⟩_s` against a symmetric basis.
pub fn pair_symmetric(
    f: &SparsePoly,
    g: &SparsePoly,
    basis: &DualBasis,
) -> Result<AlphaFrac, PairingError> {
    basis.pair(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::Partition;
    use crate::jack::{monomial_symmetric, JackFamily};
    use crate::operators::tests::arb_poly;
    use num_traits::One;
    use proptest::prelude::*;

    fn f(s: &str) -> AlphaFrac {
        s.parse().unwrap()
    }

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn x(e: &[u32]) -> SparsePoly {
        SparsePoly::x_pow(e)
    }

    const SEQ: Parallelism = Parallelism::Sequential;

    #[test]
    fn q_basis_examples() {
        let b = q_basis(2, 2, SEQ).unwrap();
        assert_eq!(b.element(&c(&[0, 0])).unwrap(), &SparsePoly::one(2));
        let q10 = x(&[1, 0])
            .scale(&f("1+1/α"))
            .try_add(&x(&[0, 1]).scale(&f("1/α")))
            .unwrap();
        let q01 = x(&[1, 0])
            .scale(&f("1/α"))
            .try_add(&x(&[0, 1]).scale(&f("1+1/α")))
            .unwrap();
        assert_eq!(b.element(&c(&[1, 0])).unwrap(), &q10);
        assert_eq!(b.element(&c(&[0, 1])).unwrap(), &q01);
        assert!(b.element(&c(&[3, 0])).is_err());
    }

    #[test]
    fn pair_examples() {
        let b = q_basis(2, 2, SEQ).unwrap();
        assert!(b
            .pair(&SparsePoly::one(2), &SparsePoly::one(2))
            .unwrap()
            .is_one());
        assert_eq!(b.pair(&x(&[0, 1]), &x(&[0, 1])).unwrap(), f("(α+1)/(α+2)"));
        let fam = JackFamily::build(2, 1, SEQ);
        let f10 = fam.f(&c(&[1, 0])).unwrap();
        let f01 = fam.f(&c(&[0, 1])).unwrap();
        assert!(b.pair(&f10, &f01).unwrap().is_zero());
        assert_eq!(
            b.pair(&x(&[3, 0]), &x(&[3, 0])),
            Err(PairingError::DegreeCap { degree: 3, cap: 2 })
        );
        assert!(matches!(
            b.pair(&SparsePoly::one(3), &SparsePoly::one(3)),
            Err(PairingError::Variables { .. })
        ));
    }

    #[test]
    fn duality_round_trip() {
        for n in 1..=3 {
            let b = q_basis(n, 3, SEQ).unwrap();
            for d in 0..=3 {
                for eta in b.indices(d) {
                    for gamma in b.indices(d) {
                        let v = b.pair(&x(eta.parts()), b.element(gamma).unwrap()).unwrap();
                        assert_eq!(v.is_one(), eta == gamma);
                        assert!(v.is_one() || v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn q_matrices_invertible() {
        for n in 1..=3 {
            assert!(q_basis(n, 5, Parallelism::Parallel).is_ok());
        }
    }

    #[test]
    fn g_basis_examples() {
        let b = g_basis(2, 2, SEQ).unwrap();
        assert_eq!(b.element(&c(&[0, 0])).unwrap(), &SparsePoly::one(2));
        let m1 = monomial_symmetric(&Partition::new(vec![1, 0]).unwrap());
        assert_eq!(b.element(&c(&[1, 0])).unwrap(), &m1.scale(&f("1/α")));
        assert_eq!(b.pair(&m1, &m1).unwrap(), f("α"));
        for d in 0..=2 {
            for lambda in b.indices(d) {
                assert!(b.element(lambda).unwrap().is_symmetric());
            }
        }
        assert_eq!(b.pair(&x(&[1, 0]), &m1), Err(PairingError::NotSymmetric));
    }

    #[test]
    fn symmetric_duality() {
        for n in 1..=3 {
            let b = g_basis(n, 4, SEQ).unwrap();
            for d in 0..=4 {
                for lambda in b.indices(d) {
                    let m = monomial_symmetric(&Partition::new(lambda.parts().to_vec()).unwrap());
                    for mu in b.indices(d) {
                        let v = b.pair(&m, b.element(mu).unwrap()).unwrap();
                        assert_eq!(v.is_one(), lambda == mu);
                        assert!(v.is_one() || v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn stanley_small() {
        let b = g_basis(2, 2, SEQ).unwrap();
        let fam = JackFamily::build(2, 2, SEQ);
        let j10 = fam
            .symmetric_j(&Partition::new(vec![1, 0]).unwrap())
            .unwrap();
        assert_eq!(b.pair(&j10, &j10).unwrap(), f("α"));
        let j20 = fam
            .symmetric_j(&Partition::new(vec![2, 0]).unwrap())
            .unwrap();
        let j11 = fam
            .symmetric_j(&Partition::new(vec![1, 1]).unwrap())
            .unwrap();
        assert!(b.pair(&j20, &j11).unwrap().is_zero());
    }

    fn basis3() -> &'static DualBasis {
        use std::sync::OnceLock;
        static B: OnceLock<DualBasis> = OnceLock::new();
        B.get_or_init(|| q_basis(3, 3, SEQ).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn pairing_is_symmetric(p in arb_poly(3, 3), q in arb_poly(3, 3)) {
            let b = basis3();
            prop_assert_eq!(b.pair(&p, &q).unwrap(), b.pair(&q, &p).unwrap());
            prop_assert_eq!(b.pair(&p, &q).unwrap(), b.pair_prepared(&p, &b.prepare(&q).unwrap()).unwrap());
        }

        #[test]
        fn pairing_is_bilinear(p in arb_poly(3, 3), q in arb_poly(3, 3), r in arb_poly(3, 3), a in -3i64..=3, k in -2i64..=2) {
            let b = basis3();
            let s = AlphaFrac::linear(a, k);
            let lhs = b.pair(&p.scale(&s).try_add(&q).unwrap(), &r).unwrap();
            let rhs = &(&s * &b.pair(&p, &r).unwrap()) + &b.pair(&q, &r).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn different_degrees_are_orthogonal(p in arb_poly(3, 3), q in arb_poly(3, 3), d in 0u32..=3, e in 0u32..=3) {
            prop_assume!(d != e);
            let b = basis3();
            prop_assert!(b.pair(&p.homogeneous_part(d), &q.homogeneous_part(e)).unwrap().is_zero());
        }
    }
}
