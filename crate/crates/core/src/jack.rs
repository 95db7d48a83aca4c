//! Nonsymmetric Jack polynomials `E_η`, `F_η` and symmetric `P_λ`, `J_λ`.
//!
//! [`JackFamily`] builds every monic `E_η` of length `n` up to a degree cap by
//! the raising/intertwining recursion and then stays immutable. The eigen-solve
//! oracles ([`build_e_oracle`], [`symmetric_p_oracle`]) share nothing with the
//! recursion beyond the Cherednik operators and are used to cross-check it.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::compositions::{
    dominates_strictly, enumerate_compositions, enumerate_partitions, partition_compare,
    Composition, CompositionError, DominanceOrdering, Partition,
};
use crate::field::AlphaFrac;
use crate::linalg::{LinAlgError, Matrix};
use crate::operators::{cherednik, phi, OperatorError};
use crate::par::{self, Parallelism};
use crate::poly::{ExponentVector, PolyError, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JackError {
    #[error("{eta} has length {got}, the family has {n} variables")]
    Length { eta: String, got: usize, n: usize },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("partition {0} has more nonzero parts than variables")]
    TooManyParts(String),
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("eigen-solve failed: {0}")]
    LinAlg(#[from] LinAlgError),
}

/// Which recursion step produced a cached `E_η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `E_0 = 1`.
    Unit,
    /// `E_η = Φ E_ζ`.
    Raise { from: Composition },
    /// `E_η = (s_i + 1/d) E_{s_iη}` with 0-based `i`.
    Swap {
        from: Composition,
        i: usize,
        d: AlphaFrac,
    },
}

#[derive(Clone, Debug)]
struct Entry {
    poly: SparsePoly,
    provenance: Provenance,
}

/// All monic `E_η` with `η` of length `n` and `|η| ≤ max_degree`.
#[derive(Clone, Debug)]
pub struct JackFamily {
    n: usize,
    max_degree: u32,
    entries: BTreeMap<Composition, Entry>,
}

impl JackFamily {
    pub fn build(n: usize, max_degree: u32, mode: Parallelism) -> Self {
        assert!(n >= 1, "a family needs at least one variable");
        let mut entries = BTreeMap::new();
        entries.insert(
            Composition::zeros(n),
            Entry {
                poly: SparsePoly::one(n),
                provenance: Provenance::Unit,
            },
        );
        for degree in 1..=max_degree {
            let orbits = enumerate_partitions(n, degree);
            let built = par::map(&orbits, mode, |lambda| build_orbit(lambda, &entries));
            for orbit in built {
                entries.extend(orbit);
            }
        }
        JackFamily {
            n,
            max_degree,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Compositions in the family, by degree then lexicographically.
    pub fn compositions(&self) -> Vec<Composition> {
        (0..=self.max_degree)
            .flat_map(|d| enumerate_compositions(self.n, d))
            .collect()
    }

    fn entry(&self, eta: &Composition) -> Result<&Entry, JackError> {
        if eta.len() != self.n {
            return Err(JackError::Length {
                eta: eta.to_string(),
                got: eta.len(),
                n: self.n,
            });
        }
        self.entries.get(eta).ok_or(JackError::DegreeCap {
            degree: eta.degree(),
            cap: self.max_degree,
        })
    }

    /// Monic `E_η`.
    pub fn e(&self, eta: &Composition) -> Result<&SparsePoly, JackError> {
        Ok(&self.entry(eta)?.poly)
    }

    pub fn provenance(&self, eta: &Composition) -> Result<&Provenance, JackError> {
        Ok(&self.entry(eta)?.provenance)
    }

    /// Integral `F_η = d_η E_η`.
    pub fn f(&self, eta: &Composition) -> Result<SparsePoly, JackError> {
        Ok(self.e(eta)?.scale(&eta.constants().d))
    }

    fn check_partition(&self, lambda: &Partition) -> Result<Partition, JackError> {
        if lambda.length() > self.n {
            return Err(JackError::TooManyParts(lambda.to_string()));
        }
        let mut parts = lambda.parts().to_vec();
        parts.resize(self.n, 0);
        Ok(Partition::new(parts)?)
    }

    /// `Σ_{η⁺=λ} f_η^{-1} F_η`.
    pub fn symmetrized_sum(&self, lambda: &Partition) -> Result<SparsePoly, JackError> {
        let lambda = self.check_partition(lambda)?;
        let mut acc = SparsePoly::zero(self.n);
        for eta in lambda.rearrangements() {
            let k = eta.constants();
            let w = k.d.checked_div(&k.f).map_err(PolyError::from)?;
            acc = acc.try_add(&self.e(&eta)?.scale(&w))?;
        }
        Ok(acc)
    }

    /// `J_λ = j_λ Σ_{η⁺=λ} f_η^{-1} F_η`.
    pub fn symmetric_j(&self, lambda: &Partition) -> Result<SparsePoly, JackError> {
        let padded = self.check_partition(lambda)?;
        let j = padded.partition_constants().j;
        Ok(self.symmetrized_sum(&padded)?.scale(&j))
    }

    /// `P_λ = J_λ / c_λ`.
    pub fn symmetric_p(&self, lambda: &Partition) -> Result<SparsePoly, JackError> {
        let padded = self.check_partition(lambda)?;
        let k = padded.partition_constants();
        let scale = k.j.checked_div(&k.c).map_err(PolyError::from)?;
        Ok(self.symmetrized_sum(&padded)?.scale(&scale))
    }
}

/// Builds one orbit `{η : η⁺ = λ}` from the previous degree.
fn build_orbit(
    lambda: &Partition,
    previous: &BTreeMap<Composition, Entry>,
) -> Vec<(Composition, Entry)> {
    let mut increasing = lambda.parts().to_vec();
    increasing.reverse();
    let start = Composition::new(increasing);
    let from = start
        .phi_preimage()
        .expect("nonzero partition has a positive last part when sorted increasingly");
    let base = &previous
        .get(&from)
        .expect("previous degree is complete")
        .poly;
    let mut orbit: BTreeMap<Composition, Entry> = BTreeMap::new();
    orbit.insert(
        start.clone(),
        Entry {
            poly: phi(base),
            provenance: Provenance::Raise { from },
        },
    );
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..mu.len() - 1 {
            if mu.parts()[i] >= mu.parts()[i + 1] {
                continue;
            }
            let eta = mu.swapped(i);
            if orbit.contains_key(&eta) {
                continue;
            }
            let bar = eta.eigenvalues();
            let d = &bar[i] - &bar[i + 1];
            let src = &orbit[&mu].poly;
            let inv_d = d
                .recip()
                .expect("d = α(η_i − η_{i+1}) + positive integer is nonzero");
            let poly = src
                .swap_vars(i, i + 1)
                .expect("adjacent indices are in range")
                .try_add(&src.scale(&inv_d))
                .expect("same ring");
            orbit.insert(
                eta.clone(),
                Entry {
                    poly,
                    provenance: Provenance::Swap {
                        from: mu.clone(),
                        i,
                        d,
                    },
                },
            );
            queue.push_back(eta);
        }
    }
    orbit.into_iter().collect()
}

/// Monic `E_η` by the recursion.
pub fn build_e(eta: &Composition) -> Result<SparsePoly, JackError> {
    let family = JackFamily::build(eta.len(), eta.degree(), Parallelism::Sequential);
    Ok(family.e(eta)?.clone())
}

/// Integral `F_η = d_η E_η`.
pub fn integral_f(eta: &Composition) -> Result<SparsePoly, JackError> {
    Ok(build_e(eta)?.scale(&eta.constants().d))
}

type Op = Box<dyn Fn(&SparsePoly) -> Result<SparsePoly, JackError>>;

/// Solves for `lead + Σ c_b b` with `L_k(·) = λ_k(·)` for every operator `L_k`.
fn eigen_solve(
    lead: &SparsePoly,
    lower: &[SparsePoly],
    operators: &[Op],
    eigenvalues: &[AlphaFrac],
) -> Result<SparsePoly, JackError> {
    if lower.is_empty() {
        for (op, ev) in operators.iter().zip(eigenvalues) {
            if op(lead)? != lead.scale(ev) {
                return Err(LinAlgError::Inconsistent.into());
            }
        }
        return Ok(lead.clone());
    }
    let residual = |op: &Op, ev: &AlphaFrac, b: &SparsePoly| -> Result<SparsePoly, JackError> {
        Ok(op(b)?.try_sub(&b.scale(ev))?)
    };
    let mut rows: Vec<Vec<AlphaFrac>> = Vec::new();
    let mut rhs = Vec::new();
    for (op, ev) in operators.iter().zip(eigenvalues) {
        let cols: Vec<SparsePoly> = lower
            .iter()
            .map(|b| residual(op, ev, b))
            .collect::<Result<_, _>>()?;
        let target = residual(op, ev, lead)?;
        let mut monomials: Vec<&ExponentVector> = cols
            .iter()
            .flat_map(|c| c.terms().map(|(e, _)| e))
            .collect();
        monomials.extend(target.terms().map(|(e, _)| e));
        monomials.sort();
        monomials.dedup();
        for m in monomials {
            rows.push(cols.iter().map(|c| c.coefficient(&m.0)).collect());
            rhs.push(-target.coefficient(&m.0));
        }
    }
    if rows.is_empty() {
        return Err(LinAlgError::Singular.into());
    }
    let coeffs = Matrix::from_rows(rows)?.solve(&rhs)?;
    let mut out = lead.clone();
    for (b, c) in lower.iter().zip(&coeffs) {
        out = out.try_add(&b.scale(c))?;
    }
    Ok(out)
}

/// Monic `E_η` from the eigen-equations and dominance triangularity alone.
pub fn build_e_oracle(eta: &Composition) -> Result<SparsePoly, JackError> {
    let n = eta.len();
    let lower: Vec<SparsePoly> = enumerate_compositions(n, eta.degree())
        .into_iter()
        .filter(|z| dominates_strictly(eta, z))
        .map(|z| SparsePoly::x_pow(z.parts()))
        .collect();
    let ops: Vec<Op> = (0..n)
        .map(|i| Box::new(move |f: &SparsePoly| Ok(cherednik(f, i)?)) as Op)
        .collect();
    eigen_solve(
        &SparsePoly::x_pow(eta.parts()),
        &lower,
        &ops,
        &eta.eigenvalues(),
    )
}

/// `m_λ`: the sum of `x^η` over distinct rearrangements of `λ`.
pub fn monomial_symmetric(lambda: &Partition) -> SparsePoly {
    let n = lambda.len();
    SparsePoly::from_terms(
        n,
        lambda
            .rearrangements()
            .into_iter()
            .map(|eta| (ExponentVector(eta.parts().to_vec()), AlphaFrac::one())),
    )
    .expect("exponent vectors have the partition's length")
}

/// `Σ_i ξ_i^k f`.
fn power_sum_operator(f: &SparsePoly, k: u32) -> Result<SparsePoly, JackError> {
    let mut acc = SparsePoly::zero(f.nvars());
    for i in 0..f.nvars() {
        let mut g = f.clone();
        for _ in 0..k {
            g = cherednik(&g, i)?;
        }
        acc = acc.try_add(&g)?;
    }
    Ok(acc)
}

/// Monic `P_λ` in `λ.len()` variables from the symmetric eigen-equations
/// `Σ_i ξ_i^k P = p_k(λ̄) P`, `k = 1…n`, with `P = m_λ + Σ_{μ<λ} c_μ m_μ`.
pub fn symmetric_p_oracle(lambda: &Partition) -> Result<SparsePoly, JackError> {
    let n = lambda.len();
    let lower: Vec<SparsePoly> = enumerate_partitions(n, lambda.degree())
        .into_iter()
        .filter(|mu| partition_compare(lambda, mu) == Ok(DominanceOrdering::Greater))
        .map(|mu| monomial_symmetric(&mu))
        .collect();
    let bar = lambda.eigenvalues();
    let ks: Vec<u32> = (1..=n as u32).collect();
    let eigenvalues: Vec<AlphaFrac> = ks
        .iter()
        .map(|&k| {
            bar.iter()
                .map(|b| b.pow(k as i32).expect("positive power"))
                .sum()
        })
        .collect();
    let ops: Vec<Op> = ks
        .iter()
        .map(|&k| Box::new(move |f: &SparsePoly| power_sum_operator(f, k)) as Op)
        .collect();
    eigen_solve(&monomial_symmetric(lambda), &lower, &ops, &eigenvalues)
}

/// `J_λ = c_λ P_λ` with `P_λ` from [`symmetric_p_oracle`].
pub fn symmetric_j_oracle(lambda: &Partition) -> Result<SparsePoly, JackError> {
    Ok(symmetric_p_oracle(lambda)?.scale(&lambda.partition_constants().c))
}

/// `J_λ` in `λ.len()` variables by the symmetrization sum.
pub fn symmetric_j(lambda: &Partition) -> Result<SparsePoly, JackError> {
    JackFamily::build(lambda.len(), lambda.degree(), Parallelism::Sequential).symmetric_j(lambda)
}

/// Value at `(1, …, 1)`.
pub fn eval_ones(f: &SparsePoly) -> AlphaFrac {
    f.eval_ones()
}

/// Coefficients of `f` in the `E`-basis of its degree; `f` must be homogeneous of degree `degree`.
pub fn expand_in_e_basis(
    family: &JackFamily,
    f: &SparsePoly,
    degree: u32,
) -> Result<BTreeMap<Composition, AlphaFrac>, JackError> {
    let basis = enumerate_compositions(family.n(), degree);
    let polys: Vec<&SparsePoly> = basis
        .iter()
        .map(|b| family.e(b))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<AlphaFrac>> = basis
        .iter()
        .map(|m| polys.iter().map(|p| p.coefficient(m.parts())).collect())
        .collect();
    let rhs: Vec<AlphaFrac> = basis.iter().map(|m| f.coefficient(m.parts())).collect();
    if f.terms().any(|(e, _)| e.degree() != degree) {
        return Err(LinAlgError::Inconsistent.into());
    }
    let coeffs = Matrix::from_rows(rows)?.solve(&rhs)?;
    Ok(basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect())
}
