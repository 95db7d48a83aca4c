//! Compositions, partitions, diagram statistics, and the orders on them.
//!
//! Cells of a diagram are addressed 1-based as `(row, col)` with
//! `1 ≤ row ≤ n` and `1 ≤ col ≤ η_row`, drawn matrix style. Permutations are
//! stored 0-based in one-line notation and act on vectors by
//! `(w·v)_{w(i)} = v_i`, so that `η = w_η · η⁺`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::AlphaFrac;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompositionError {
    #[error("cell ({row}, {col}) lies outside the diagram of {comp}")]
    CellOutside { row: usize, col: u32, comp: String },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("{0} is not a partition")]
    NotPartition(String),
    #[error("cannot parse composition: {0}")]
    Parse(String),
}

/// A vector of nonnegative parts `(η_1, …, η_n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

/// Per-cell statistics of a composition diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CellStats {
    pub arm: u32,
    pub coarm: u32,
    pub lower_leg: u32,
    pub upper_leg: u32,
    pub lower_coleg: u32,
    pub upper_coleg: u32,
}

impl CellStats {
    pub fn leg(&self) -> u32 {
        self.lower_leg + self.upper_leg
    }

    pub fn coleg(&self) -> u32 {
        self.lower_coleg + self.upper_coleg
    }
}

/// Hook-type products attached to a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    pub d: AlphaFrac,
    pub d_prime: AlphaFrac,
    pub e: AlphaFrac,
    /// `d · d′`, the squared norm of the integral polynomial.
    pub f: AlphaFrac,
    /// Present when the composition is a partition.
    pub partition: Option<PartitionConstants>,
}

/// Stanley's constants for a partition in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionConstants {
    pub b: AlphaFrac,
    pub c: AlphaFrac,
    pub c_prime: AlphaFrac,
    /// `c · c′`
    pub j: AlphaFrac,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn as_partition(&self) -> Result<Partition, CompositionError> {
        Partition::new(self.0.clone())
    }

    /// Sorted rearrangement `η⁺` and the minimal `w_η` with `η = w_η · η⁺`.
    ///
    /// A stable sort keeps equal parts in their original relative order,
    /// which is what makes `w_η` of minimal length.
    pub fn sort_to_partition(&self) -> (Partition, Permutation) {
        let mut positions: Vec<usize> = (0..self.len()).collect();
        positions.sort_by(|&a, &b| self.0[b].cmp(&self.0[a]));
        let lambda = positions.iter().map(|&p| self.0[p]).collect();
        (Partition(Composition(lambda)), Permutation(positions))
    }

    pub fn plus(&self) -> Partition {
        self.sort_to_partition().0
    }

    /// Statistics of the cell at 1-based `(row, col)`.
    pub fn cell_stats(&self, row: usize, col: u32) -> Result<CellStats, CompositionError> {
        if row == 0 || row > self.len() || col == 0 || col > self.0[row - 1] {
            return Err(CompositionError::CellOutside {
                row,
                col,
                comp: self.to_string(),
            });
        }
        let i = row - 1;
        let eta_i = self.0[i];
        let (before, after) = (&self.0[..i], &self.0[i + 1..]);
        Ok(CellStats {
            arm: eta_i - col,
            coarm: col - 1,
            lower_leg: after.iter().filter(|&&k| col <= k && k <= eta_i).count() as u32,
            upper_leg: before
                .iter()
                .filter(|&&k| col <= k + 1 && k < eta_i)
                .count() as u32,
            lower_coleg: after.iter().filter(|&&k| k > eta_i).count() as u32,
            upper_coleg: before.iter().filter(|&&k| k >= eta_i).count() as u32,
        })
    }

    /// All cells `(row, col)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// `η̄_i = α η_i − (k′_i + k″_i)`.
    pub fn eigenvalues(&self) -> Vec<AlphaFrac> {
        (0..self.len())
            .map(|i| {
                let e = self.0[i];
                let k1 = self.0[..i].iter().filter(|&&k| k >= e).count();
                let k2 = self.0[i + 1..].iter().filter(|&&k| k > e).count();
                AlphaFrac::linear(e as i64, -((k1 + k2) as i64))
            })
            .collect()
    }

    /// `α η + w_η · ρ` with `ρ = (0, −1, …, −n+1)`; agrees with [`eigenvalues`](Self::eigenvalues).
    pub fn eigenvalues_via_rho(&self) -> Vec<AlphaFrac> {
        let (_, w) = self.sort_to_partition();
        let rho: Vec<i64> = (0..self.len() as i64).map(|i| -i).collect();
        let w_rho = w.act(&rho);
        self.0
            .iter()
            .zip(w_rho)
            .map(|(&e, r)| AlphaFrac::linear(e as i64, r))
            .collect()
    }

    /// `d_η`, `d′_η`, `e_η`, `f_η`, plus Stanley's constants for partitions.
    pub fn constants(&self) -> Constants {
        let n = self.len() as i64;
        let mut d = AlphaFrac::one();
        let mut dp = AlphaFrac::one();
        let mut e = AlphaFrac::one();
        for (row, col) in self.cells() {
            let s = self.cell_stats(row, col).expect("cell of the diagram");
            let (a, l, a1, l1) = (
                s.arm as i64,
                s.leg() as i64,
                s.coarm as i64,
                s.coleg() as i64,
            );
            d *= &AlphaFrac::linear(a + 1, l + 1);
            dp *= &AlphaFrac::linear(a + 1, l);
            e *= &AlphaFrac::linear(a1 + 1, n - l1);
        }
        let f = &d * &dp;
        let partition = self
            .is_partition()
            .then(|| Partition(self.clone()).partition_constants());
        Constants {
            d,
            d_prime: dp,
            e,
            f,
            partition,
        }
    }

    /// `e_η` as `∏_i ∏_{0 ≤ j < η_i} (n + η̄_i − jα)`.
    pub fn e_via_eigenvalues(&self) -> AlphaFrac {
        let n = AlphaFrac::from_int(self.len() as i64);
        let bar = self.eigenvalues();
        let mut acc = AlphaFrac::one();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                let t = &(&n + &bar[i]) - &AlphaFrac::linear(j as i64, 0);
                acc *= &t;
            }
        }
        acc
    }

    /// `Φη = (η_2, …, η_n, η_1 + 1)`.
    pub fn phi(&self) -> Composition {
        let mut v: Vec<u32> = self.0[1..].to_vec();
        v.push(self.0[0] + 1);
        Composition(v)
    }

    /// Inverse of [`phi`](Self::phi); `None` when the last part is zero.
    pub fn phi_preimage(&self) -> Option<Composition> {
        let last = *self.0.last()?;
        if last == 0 {
            return None;
        }
        let mut v = vec![last - 1];
        v.extend_from_slice(&self.0[..self.len() - 1]);
        Some(Composition(v))
    }

    /// `s_i η`: exchanges parts `i` and `i+1` (0-based `i`).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Composition(v)
    }

    /// Appends zero parts up to length `n`.
    pub fn padded(&self, n: usize) -> Composition {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        Composition(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    /// Accepts `1,0,2` and `(1,0,2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        if t.trim().is_empty() {
            return Err(CompositionError::Parse(format!("empty composition {s:?}")));
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| CompositionError::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Composition)
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

/// A weakly decreasing composition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        let c = Composition(parts);
        if !c.is_partition() {
            return Err(CompositionError::NotPartition(c.to_string()));
        }
        Ok(Partition(c))
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn into_composition(self) -> Composition {
        self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0 .0.iter().take_while(|&&p| p > 0).count()
    }

    /// Classical arm, leg, coarm, coleg of the cell `(row, col)`.
    pub fn classical_stats(
        &self,
        row: usize,
        col: u32,
    ) -> Result<(u32, u32, u32, u32), CompositionError> {
        let parts = self.parts();
        if row == 0 || row > parts.len() || col == 0 || col > parts[row - 1] {
            return Err(CompositionError::CellOutside {
                row,
                col,
                comp: self.to_string(),
            });
        }
        let arm = parts[row - 1] - col;
        let leg = parts[row..].iter().filter(|&&k| col <= k).count() as u32;
        Ok((arm, leg, col - 1, row as u32 - 1))
    }

    /// `b_λ`, `c_λ`, `c′_λ`, `j_λ` from the classical statistics.
    pub fn partition_constants(&self) -> PartitionConstants {
        let n = self.len() as i64;
        let mut b = AlphaFrac::one();
        let mut c = AlphaFrac::one();
        let mut cp = AlphaFrac::one();
        for (row, col) in self.cells() {
            let (a, l, a1, l1) = self.classical_stats(row, col).expect("cell of the diagram");
            let (a, l, a1, l1) = (a as i64, l as i64, a1 as i64, l1 as i64);
            b *= &AlphaFrac::linear(a1, n - l1);
            c *= &AlphaFrac::linear(a, l + 1);
            cp *= &AlphaFrac::linear(a + 1, l);
        }
        let j = &c * &cp;
        PartitionConstants {
            b,
            c,
            c_prime: cp,
            j,
        }
    }

    /// `k_λ(r) = ∏_s [α(r + a′(s)) − l′(s)]`.
    pub fn las_coefficient(&self, r: &AlphaFrac) -> AlphaFrac {
        let alpha = AlphaFrac::alpha();
        self.cells()
            .map(|(row, col)| {
                let (_, _, a1, l1) = self.classical_stats(row, col).expect("cell of the diagram");
                let shifted = r + &AlphaFrac::from_int(a1 as i64);
                &(&alpha * &shifted) - &AlphaFrac::from_int(l1 as i64)
            })
            .product()
    }

    /// Distinct rearrangements, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut v = self.parts().to_vec();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        while next_permutation(&mut v) {
            out.push(Composition(v.clone()));
        }
        out
    }
}

impl Deref for Partition {
    type Target = Composition;
    fn deref(&self) -> &Composition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = CompositionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: Composition = s.parse()?;
        Partition::new(c.0)
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A permutation of `{0, …, n−1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Validates a 0-based one-line word.
    pub fn new(one_line: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; one_line.len()];
        for &x in &one_line {
            if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation(one_line))
    }

    /// From the usual 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_based(one_line: &[usize]) -> Option<Self> {
        Self::new(
            one_line
                .iter()
                .map(|&x| x.checked_sub(1))
                .collect::<Option<_>>()?,
        )
    }

    /// Simple transposition `s_i` exchanging `i` and `i+1` (0-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w] = i;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// `(w·v)_{w(i)} = v_i`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            v.len(),
            self.len(),
            "permutation acts on vectors of its own length"
        );
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// Strong Bruhat order by the rank-matrix criterion:
    /// `u ≤ w` iff `#{a ≤ i : u(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.len(), other.len());
        let n = self.len();
        for j in 0..n {
            let (mut cu, mut cw) = (0usize, 0usize);
            for i in 0..n {
                cu += usize::from(self.0[i] >= j);
                cw += usize::from(other.0[i] >= j);
                if cu > cw {
                    return false;
                }
            }
        }
        true
    }

    /// All permutations of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut v: Vec<u32> = (0..n as u32).collect();
        let mut out = vec![Permutation(v.iter().map(|&x| x as usize).collect())];
        while next_permutation(&mut v) {
            out.push(Permutation(v.iter().map(|&x| x as usize).collect()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceOrdering {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl DominanceOrdering {
    pub fn reverse(self) -> Self {
        match self {
            DominanceOrdering::Greater => DominanceOrdering::Less,
            DominanceOrdering::Less => DominanceOrdering::Greater,
            other => other,
        }
    }
}

/// Classical dominance on partial sums; callers guarantee equal length and degree.
fn partition_dominance(a: &[u32], b: &[u32]) -> DominanceOrdering {
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for (x, y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        ge &= sa >= sb;
        le &= sa <= sb;
    }
    match (ge, le) {
        (true, true) => DominanceOrdering::Equal,
        (true, false) => DominanceOrdering::Greater,
        (false, true) => DominanceOrdering::Less,
        (false, false) => DominanceOrdering::Incomparable,
    }
}

/// Dominance order on compositions of equal length and degree:
/// `η ≥ ζ` iff `η⁺ > ζ⁺`, or `η⁺ = ζ⁺` and `w_η ≤ w_ζ` in Bruhat order.
pub fn dominance_compare(
    eta: &Composition,
    zeta: &Composition,
) -> Result<DominanceOrdering, CompositionError> {
    if eta.len() != zeta.len() {
        return Err(CompositionError::LengthMismatch(eta.len(), zeta.len()));
    }
    if eta.degree() != zeta.degree() {
        return Err(CompositionError::DegreeMismatch(
            eta.degree(),
            zeta.degree(),
        ));
    }
    let (pe, we) = eta.sort_to_partition();
    let (pz, wz) = zeta.sort_to_partition();
    let ord = partition_dominance(pe.parts(), pz.parts());
    if ord != DominanceOrdering::Equal {
        return Ok(ord);
    }
    Ok(match (we.bruhat_leq(&wz), wz.bruhat_leq(&we)) {
        (true, true) => DominanceOrdering::Equal,
        (true, false) => DominanceOrdering::Greater,
        (false, true) => DominanceOrdering::Less,
        (false, false) => DominanceOrdering::Incomparable,
    })
}

/// Dominance on partitions of equal degree (used for symmetric triangularity).
pub fn partition_compare(
    a: &Partition,
    b: &Partition,
) -> Result<DominanceOrdering, CompositionError> {
    if a.len() != b.len() {
        return Err(CompositionError::LengthMismatch(a.len(), b.len()));
    }
    if a.degree() != b.degree() {
        return Err(CompositionError::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(partition_dominance(a.parts(), b.parts()))
}

/// Strictly lower in dominance order.
pub fn dominates_strictly(upper: &Composition, lower: &Composition) -> bool {
    matches!(
        dominance_compare(upper, lower),
        Ok(DominanceOrdering::Greater)
    )
}

/// All compositions of `d` into `n` parts, lexicographically increasing.
pub fn enumerate_compositions(n: usize, d: u32) -> Vec<Composition> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(d);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            rec(n - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All compositions of length `n` with degree at most `max_degree`, by degree then lex.
pub fn compositions_up_to(n: usize, max_degree: u32) -> Vec<Composition> {
    (0..=max_degree)
        .flat_map(|d| enumerate_compositions(n, d))
        .collect()
}

/// Partitions of `d` with at most `n` parts, padded with zeros to length `n`,
/// in reverse lexicographic order (largest first part first).
pub fn enumerate_partitions(n: usize, d: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = enumerate_compositions(n, d)
        .into_iter()
        .filter(Composition::is_partition)
        .map(Partition)
        .collect();
    out.reverse();
    out
}

pub fn partitions_up_to(n: usize, max_degree: u32) -> Vec<Partition> {
    (0..=max_degree)
        .flat_map(|d| enumerate_partitions(n, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use DominanceOrdering::*;

    fn c(v: &[u32]) -> Composition {
        Composition(v.to_vec())
    }

    fn f(s: &str) -> AlphaFrac {
        s.parse().unwrap()
    }

    /// Brute force: shortest `w` with `η = w·λ`.
    fn minimal_sorting_perm(eta: &Composition) -> Permutation {
        let lambda = eta.plus();
        Permutation::all(eta.len())
            .into_iter()
            .filter(|w| w.act(lambda.parts()) == eta.parts())
            .min_by_key(Permutation::length)
            .unwrap()
    }

    /// Bruhat order as the closure of length-decreasing right multiplications by transpositions.
    fn bruhat_down_set(w: &Permutation) -> std::collections::HashSet<Permutation> {
        let n = w.len();
        let mut seen = std::collections::HashSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(u) = stack.pop() {
            for a in 0..n {
                for b in a + 1..n {
                    let mut v = u.one_line().to_vec();
                    v.swap(a, b);
                    let v = Permutation::new(v).unwrap();
                    if v.length() < u.length() && seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn sort_to_partition_examples() {
        let (l, w) = c(&[2, 2]).sort_to_partition();
        assert_eq!(l.parts(), &[2, 2]);
        assert_eq!(w, Permutation::identity(2));
        let (l, w) = c(&[0, 1]).sort_to_partition();
        assert_eq!(l.parts(), &[1, 0]);
        assert_eq!(w.one_based(), vec![2, 1]);
        let (l, w) = c(&[1, 0, 2]).sort_to_partition();
        assert_eq!(l.parts(), &[2, 1, 0]);
        // under (w·v)_{w(i)} = v_i the word is [3,1,2]; its inverse [2,3,1]
        // lists which λ-slot each position of η receives
        assert_eq!(w.one_based(), vec![3, 1, 2]);
        assert_eq!(w.inverse().one_based(), vec![2, 3, 1]);
        assert_eq!(w.act(l.parts()), vec![1, 0, 2]);
    }

    #[test]
    fn stable_sort_is_minimal() {
        for n in 1..=4 {
            for d in 0..=4 {
                for eta in enumerate_compositions(n, d) {
                    let (l, w) = eta.sort_to_partition();
                    assert_eq!(w.act(l.parts()), eta.parts());
                    let brute = minimal_sorting_perm(&eta);
                    assert_eq!(w.length(), brute.length(), "{eta}");
                    assert_eq!(w, brute, "minimal permutation is unique for {eta}");
                }
            }
        }
    }

    #[test]
    fn cell_stats_examples() {
        let s = c(&[0, 1]).cell_stats(2, 1).unwrap();
        assert_eq!(
            s,
            CellStats {
                arm: 0,
                coarm: 0,
                lower_leg: 0,
                upper_leg: 1,
                lower_coleg: 0,
                upper_coleg: 0
            }
        );
        let s = c(&[2, 1]).cell_stats(1, 1).unwrap();
        assert_eq!((s.arm, s.leg(), s.coarm, s.coleg()), (1, 1, 0, 0));
        let s = c(&[1, 0]).cell_stats(1, 1).unwrap();
        assert_eq!((s.arm, s.leg(), s.coarm, s.coleg()), (0, 0, 0, 0));
        assert!(c(&[1, 0]).cell_stats(2, 1).is_err());
        assert!(c(&[1, 0]).cell_stats(1, 2).is_err());
    }

    #[test]
    fn partition_stats_agree_with_classical() {
        for n in 1..=4 {
            for lambda in partitions_up_to(n, 6) {
                for (row, col) in lambda.cells() {
                    let s = lambda.cell_stats(row, col).unwrap();
                    let (a, l, a1, l1) = lambda.classical_stats(row, col).unwrap();
                    assert_eq!(s.upper_leg, 0);
                    assert_eq!((s.arm, s.leg(), s.coarm, s.coleg()), (a, l, a1, l1));
                }
            }
        }
    }

    #[test]
    fn eigenvalue_examples() {
        let z = c(&[0, 0, 0]).eigenvalues();
        assert_eq!(z, vec![f("0"), f("-1"), f("-2")]);
        assert_eq!(c(&[0, 1]).eigenvalues(), vec![f("-1"), f("α")]);
        assert_eq!(c(&[1, 0]).eigenvalues(), vec![f("α"), f("-1")]);
        for eta in compositions_up_to(4, 5) {
            assert_eq!(eta.eigenvalues(), eta.eigenvalues_via_rho(), "{eta}");
        }
    }

    #[test]
    fn constants_examples() {
        let k = c(&[0, 0]).constants();
        assert!(k.d.is_one() && k.d_prime.is_one() && k.e.is_one() && k.f.is_one());
        let p = k.partition.unwrap();
        assert!(p.b.is_one() && p.c.is_one() && p.c_prime.is_one() && p.j.is_one());

        let k = c(&[0, 1]).constants();
        assert_eq!(k.d, f("α+2"));
        assert_eq!(k.d_prime, f("α+1"));
        assert_eq!(k.e, f("α+2"));
        assert_eq!(k.f, f("(α+2)(α+1)"));
        assert!(k.partition.is_none());

        let k = c(&[1, 0]).constants();
        assert_eq!((k.d, k.d_prime, k.e), (f("α+1"), f("α"), f("α+2")));
        let p = k.partition.unwrap();
        assert_eq!((p.b, p.c, p.c_prime, p.j), (f("2"), f("1"), f("α"), f("α")));
    }

    #[test]
    fn constant_identities() {
        for eta in compositions_up_to(4, 6) {
            let k = eta.constants();
            assert_eq!(k.e, eta.e_via_eigenvalues(), "{eta}");
            assert_eq!(k.e, eta.plus().constants().e, "{eta}");
            if let Some(p) = &k.partition {
                assert_eq!(k.d_prime, p.c_prime, "{eta}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_compare(&c(&[1, 0]), &c(&[0, 1])), Ok(Greater));
        assert_eq!(dominance_compare(&c(&[2, 0]), &c(&[1, 1])), Ok(Greater));
        assert_eq!(
            dominance_compare(&c(&[1, 2, 0]), &c(&[2, 0, 1])),
            Ok(Incomparable)
        );
        assert_eq!(dominance_compare(&c(&[0, 1]), &c(&[1, 0])), Ok(Less));
        assert_eq!(dominance_compare(&c(&[0, 1]), &c(&[0, 1])), Ok(Equal));
        assert!(dominance_compare(&c(&[1, 0]), &c(&[2, 0])).is_err());
        assert!(dominance_compare(&c(&[1, 0]), &c(&[1, 0, 0])).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=3 {
            for d in 0..=4 {
                let all = enumerate_compositions(n, d);
                let geq = |a: &Composition, b: &Composition| {
                    matches!(dominance_compare(a, b).unwrap(), Greater | Equal)
                };
                for a in &all {
                    assert!(geq(a, a));
                    for b in &all {
                        if geq(a, b) && geq(b, a) {
                            assert_eq!(a, b);
                        }
                        assert_eq!(
                            dominance_compare(a, b).unwrap(),
                            dominance_compare(b, a).unwrap().reverse()
                        );
                        for cc in &all {
                            if geq(a, b) && geq(b, cc) {
                                assert!(geq(a, cc), "{a} {b} {cc}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bruhat_examples_and_oracle() {
        let s1 = Permutation::simple(3, 0);
        let s2 = Permutation::simple(3, 1);
        for w in Permutation::all(3) {
            assert!(Permutation::identity(3).bruhat_leq(&w));
        }
        assert!(s1.bruhat_leq(&s1.compose(&s2)));
        assert!(!s1.bruhat_leq(&s2));
        assert!(!s2.bruhat_leq(&s1));
        for n in 1..=4 {
            for w in Permutation::all(n) {
                let down = bruhat_down_set(&w);
                for u in Permutation::all(n) {
                    assert_eq!(u.bruhat_leq(&w), down.contains(&u), "{u} <= {w}");
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_compositions(2, 2),
            vec![c(&[0, 2]), c(&[1, 1]), c(&[2, 0])]
        );
        assert_eq!(enumerate_compositions(1, 5), vec![c(&[5])]);
        assert_eq!(enumerate_compositions(3, 2).len(), 6);
        for n in 1..=4usize {
            for d in 0..=6u32 {
                let binom = (1..n as u64).fold(1u64, |acc, k| acc * (d as u64 + k) / k);
                assert_eq!(enumerate_compositions(n, d).len() as u64, binom);
            }
        }
        let ps: Vec<String> = enumerate_partitions(3, 3)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(ps, vec!["(3,0,0)", "(2,1,0)", "(1,1,1)"]);
    }

    #[test]
    fn phi_and_preimage() {
        let eta = c(&[2, 0, 1]);
        assert_eq!(eta.phi(), c(&[0, 1, 3]));
        assert_eq!(eta.phi().phi_preimage(), Some(eta));
        assert_eq!(c(&[1, 0]).phi_preimage(), None);
    }

    #[test]
    fn parsing() {
        assert_eq!("1,0,2".parse::<Composition>().unwrap(), c(&[1, 0, 2]));
        assert_eq!("(1, 0,2)".parse::<Composition>().unwrap(), c(&[1, 0, 2]));
        assert!("1,-1".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert!("0,1".parse::<Partition>().is_err());
        assert_eq!(c(&[3, 0]).to_string(), "(3,0)");
    }

    #[test]
    fn rearrangements_and_las() {
        let l = Partition::new(vec![2, 1, 0]).unwrap();
        assert_eq!(l.rearrangements().len(), 6);
        assert_eq!(
            Partition::new(vec![1, 1, 0])
                .unwrap()
                .rearrangements()
                .len(),
            3
        );
        // single cell: α r
        let k = Partition::new(vec![1, 0])
            .unwrap()
            .las_coefficient(&f("5/2"));
        assert_eq!(k, f("5α/2"));
    }
}
