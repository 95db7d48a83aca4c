//! Exact verification sweeps producing machine-readable reports.
//!
//! Every check compares two values of `Q(α)` or two polynomials for exact
//! equality. Reports keep enumeration order regardless of parallelism, and
//! record rendered values only for failures.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::compositions::{
    compositions_up_to, dominates_strictly, partitions_up_to, Composition, Partition,
};
use crate::field::{rising_factorial, AlphaFrac, FieldError};
use crate::jack::{build_e_oracle, expand_in_e_basis, symmetric_j_oracle, JackError, JackFamily};
use crate::operators::{cherednik_block, first_eigen_failure, phi, OperatorError};
use crate::pairing::{g_basis, q_basis, PairingError};
use crate::par::{self, Parallelism};
use crate::poly::{ExponentVector, PolyError, SparsePoly};
use crate::series::omega_kernel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Jack(#[from] JackError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid sweep parameters: {0}")]
    Params(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub params: Value,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl CheckEntry {
    /// Compares `lhs` and `rhs`; renders both only when they differ.
    pub fn compare<T: PartialEq + fmt::Display>(
        check: &str,
        params: Value,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let ok = lhs == rhs;
        CheckEntry {
            check: check.to_string(),
            params,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: (!ok).then(|| lhs.to_string()),
            rhs: (!ok).then(|| rhs.to_string()),
        }
    }

    /// A predicate check; `detail` is recorded as `lhs` on failure.
    pub fn holds(check: &str, params: Value, ok: bool, detail: impl FnOnce() -> String) -> Self {
        CheckEntry {
            check: check.to_string(),
            params,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: (!ok).then(detail),
            rhs: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new(entries: Vec<CheckEntry>) -> Self {
        Report { entries }
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when at least one check ran and none failed.
    pub fn passed(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn count(&self, check: &str) -> usize {
        self.entries.iter().filter(|e| e.check == check).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line: `N checks, M failed`.
    pub fn summary(&self) -> String {
        format!("{} checks, {} failed", self.len(), self.failures().count())
    }
}

fn flatten(parts: Vec<Result<Vec<CheckEntry>, VerifyError>>) -> Result<Report, VerifyError> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(Report::new(out))
}

fn div(a: &AlphaFrac, b: &AlphaFrac) -> Result<AlphaFrac, VerifyError> {
    Ok(a.checked_div(b)?)
}

fn check_n(n: usize) -> Result<(), VerifyError> {
    if n == 0 {
        return Err(VerifyError::Params("n must be at least 1".into()));
    }
    Ok(())
}

/// `⟨F_η, F_γ⟩ = δ_{ηγ} d_η d′_η` over unordered pairs with `|η|, |γ| ≤ D`.
pub fn verify_orthogonality(
    n: usize,
    degree: u32,
    mode: Parallelism,
) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let basis = q_basis(n, degree, mode)?;
    let comps = family.compositions();
    let fs: Vec<SparsePoly> = comps
        .iter()
        .map(|e| family.f(e))
        .collect::<Result<_, _>>()?;
    let prepared = par::map(&fs, mode, |f| basis.prepare(f))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let pairs: Vec<(usize, usize)> = (0..comps.len())
        .flat_map(|a| (a..comps.len()).map(move |b| (a, b)))
        .collect();
    let entries = par::map(&pairs, mode, |&(a, b)| {
        let value = basis.pair_prepared(&fs[a], &prepared[b])?;
        let params = json!({"n": n, "eta": comps[a].to_string(), "gamma": comps[b].to_string()});
        Ok(if a == b {
            CheckEntry::compare("norm", params, &value, &comps[a].constants().f)
        } else {
            CheckEntry::compare("orthogonality", params, &value, &AlphaFrac::zero())
        })
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// `F_η(1ⁿ) = e_η`, with the raising and swapping steps of its proof.
pub fn verify_evaluation(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let comps = family.compositions();
    let parts = par::map(&comps, mode, |eta| {
        let mut out = Vec::new();
        let k = eta.constants();
        let ones = family.f(eta)?.eval_ones();
        out.push(CheckEntry::compare(
            "evaluation",
            json!({"n": n, "eta": eta.to_string()}),
            &ones,
            &k.e,
        ));
        let e1 = family.e(eta)?.eval_ones();
        if eta.degree() < degree {
            let raised = eta.phi();
            let v = family.e(&raised)?.eval_ones();
            out.push(CheckEntry::compare(
                "evaluation-raise",
                json!({"n": n, "eta": eta.to_string()}),
                &v,
                &e1,
            ));
        }
        let bar = eta.eigenvalues();
        for i in 0..n.saturating_sub(1) {
            if eta.parts()[i] > eta.parts()[i + 1] {
                let d = &bar[i] - &bar[i + 1];
                let ratio = div(&d, &(&d + &AlphaFrac::one()))?;
                let v = family.e(&eta.swapped(i))?.eval_ones();
                out.push(CheckEntry::compare(
                    "evaluation-swap",
                    json!({"n": n, "eta": eta.to_string(), "i": i + 1}),
                    &v,
                    &(&ratio * &e1),
                ));
            }
        }
        Ok(out)
    });
    flatten(parts)
}

/// `j_λ⁻¹ J_λ = Σ_{η⁺=λ} f_η⁻¹ F_η` with `J_λ` from the independent eigen-solve.
pub fn verify_symmetrization(
    n: usize,
    degree: u32,
    mode: Parallelism,
) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let parts = partitions_up_to(n, degree);
    let entries = par::map(&parts, mode, |lambda| {
        let j = lambda.partition_constants().j;
        let lhs = symmetric_j_oracle(lambda)?.scale(&j.recip()?);
        let rhs = family.symmetrized_sum(lambda)?;
        Ok(CheckEntry::compare(
            "symmetrization",
            json!({"n": n, "lambda": lambda.to_string()}),
            &lhs,
            &rhs,
        ))
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// `Ω = Σ_{|η| ≤ D} f_η⁻¹ F_η(x) F_η(y)`, compared degree by degree.
pub fn verify_cauchy(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let omega = omega_kernel(n, degree, mode);
    let comps = family.compositions();
    let terms = par::map(&comps, mode, |eta| {
        let k = eta.constants();
        let e = family.e(eta)?;
        // f⁻¹ F(x) F(y) = (d²/f) E(x) E(y)
        let w = div(&(&k.d * &k.d), &k.f)?;
        Ok::<_, VerifyError>(e.embed(2 * n, 0).try_mul(&e.embed(2 * n, n))?.scale(&w))
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::new();
    for d in 0..=degree {
        let mut rhs = SparsePoly::zero(2 * n);
        for (eta, t) in comps.iter().zip(&terms) {
            if eta.degree() == d {
                rhs = rhs.try_add(t)?;
            }
        }
        let lhs = omega.poly().filter_terms(|e| e.degree_in(0..n) == d);
        entries.push(CheckEntry::compare(
            "cauchy",
            json!({"n": n, "cap": degree, "degree": d}),
            &lhs,
            &rhs,
        ));
    }
    Ok(Report::new(entries))
}

/// `ξ^x_i Ω = ξ^y_i Ω` on terms of x-degree below the cap.
pub fn verify_kernel_operator(
    n: usize,
    degree: u32,
    mode: Parallelism,
) -> Result<Report, VerifyError> {
    check_n(n)?;
    let omega = omega_kernel(n, degree, mode);
    let indices: Vec<usize> = (0..n).collect();
    let entries = par::map(&indices, mode, |&i| {
        let below = |e: &ExponentVector| e.degree_in(0..n) < degree;
        let lhs = cherednik_block(omega.poly(), i, 0..n)?.filter_terms(below);
        let rhs = cherednik_block(omega.poly(), i, n..2 * n)?.filter_terms(below);
        Ok(CheckEntry::compare(
            "kernel-operator",
            json!({"n": n, "cap": degree, "i": i + 1}),
            &lhs,
            &rhs,
        ))
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// Constant identities under raising and adjacent swaps, and related rewrites.
pub fn verify_recursions(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let comps = compositions_up_to(n, degree);
    let parts = par::map(&comps, mode, |eta| {
        let p = |extra: Value| {
            let mut v = json!({"n": n, "eta": eta.to_string()});
            if let (Value::Object(m), Value::Object(x)) = (&mut v, extra) {
                m.extend(x);
            }
            v
        };
        let mut out = Vec::new();
        let k = eta.constants();
        let bar = eta.eigenvalues();
        let raised = eta.phi().constants();
        let target = &(&bar[0] + &AlphaFrac::alpha()) + &AlphaFrac::from_int(n as i64);
        out.push(CheckEntry::compare(
            "raise-d",
            p(json!({})),
            &div(&raised.d, &k.d)?,
            &target,
        ));
        out.push(CheckEntry::compare(
            "raise-e",
            p(json!({})),
            &div(&raised.e, &k.e)?,
            &target,
        ));
        out.push(CheckEntry::compare(
            "e-sorted",
            p(json!({})),
            &k.e,
            &eta.plus().constants().e,
        ));
        out.push(CheckEntry::compare(
            "e-product",
            p(json!({})),
            &k.e,
            &eta.e_via_eigenvalues(),
        ));
        out.push(CheckEntry::compare(
            "eigenvalues-rho",
            p(json!({})),
            &format!("{:?}", bar),
            &format!("{:?}", eta.eigenvalues_via_rho()),
        ));
        if let Some(pc) = &k.partition {
            out.push(CheckEntry::compare(
                "dprime-cprime",
                p(json!({})),
                &k.d_prime,
                &pc.c_prime,
            ));
        }
        let r = div(&(&k.d * &k.d), &k.f)?;
        for i in 0..n.saturating_sub(1) {
            let s = eta.swapped(i).constants();
            out.push(CheckEntry::compare(
                "swap-e",
                p(json!({"i": i + 1})),
                &s.e,
                &k.e,
            ));
            if eta.parts()[i] > eta.parts()[i + 1] {
                let d = &bar[i] - &bar[i + 1];
                let one = AlphaFrac::one();
                out.push(CheckEntry::compare(
                    "swap-d",
                    p(json!({"i": i + 1})),
                    &div(&s.d, &k.d)?,
                    &div(&(&d + &one), &d)?,
                ));
                out.push(CheckEntry::compare(
                    "swap-dprime",
                    p(json!({"i": i + 1})),
                    &div(&s.d_prime, &k.d_prime)?,
                    &div(&d, &(&d - &one))?,
                ));
                let rs = div(&(&s.d * &s.d), &s.f)?;
                let d2 = &d * &d;
                out.push(CheckEntry::compare(
                    "r-ratio",
                    p(json!({"i": i + 1})),
                    &rs,
                    &(&div(&(&d2 - &one), &d2)? * &r),
                ));
            }
        }
        Ok(out)
    });
    flatten(parts)
}

/// `∏_i (1 − x_i)^{−r} = Σ_λ k_λ(r) J_λ / j_λ` through total degree `D`.
pub fn verify_binomial_expansion(
    n: usize,
    degree: u32,
    r: &AlphaFrac,
    mode: Parallelism,
) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let mut lhs = SparsePoly::one(n);
    for i in 0..n {
        let factor = SparsePoly::from_terms(
            n,
            (0..=degree).map(|k| {
                let mut e = vec![0; n];
                e[i] = k;
                (ExponentVector(e), rising_factorial(r, k))
            }),
        )?;
        lhs = lhs.mul_filtered(&factor, |e| e.degree() <= degree)?;
    }
    let parts = partitions_up_to(n, degree);
    let terms = par::map(&parts, mode, |lambda| {
        let w = div(&lambda.las_coefficient(r), &lambda.partition_constants().j)?;
        Ok::<_, VerifyError>(family.symmetric_j(lambda)?.scale(&w))
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::new();
    for d in 0..=degree {
        let mut rhs = SparsePoly::zero(n);
        for (lambda, t) in parts.iter().zip(&terms) {
            if lambda.degree() == d {
                rhs = rhs.try_add(t)?;
            }
        }
        entries.push(CheckEntry::compare(
            "binomial-expansion",
            json!({"n": n, "r": r.to_string(), "degree": d}),
            &lhs.homogeneous_part(d),
            &rhs,
        ));
    }
    Ok(Report::new(entries))
}

/// Recursion against the triangular eigen-solve.
pub fn verify_oracle(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let comps = family.compositions();
    let entries = par::map(&comps, mode, |eta| {
        Ok(CheckEntry::compare(
            "oracle",
            json!({"n": n, "eta": eta.to_string()}),
            family.e(eta)?,
            &build_e_oracle(eta)?,
        ))
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// Eigen-equations, triangularity and the intertwining relations of `E_η`.
pub fn verify_eigen(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let comps = family.compositions();
    let parts = par::map(&comps, mode, |eta| {
        let mut out = Vec::new();
        let params = || json!({"n": n, "eta": eta.to_string()});
        let e = family.e(eta)?;
        let fail = first_eigen_failure(e, &eta.eigenvalues())?;
        out.push(CheckEntry::holds("eigen", params(), fail.is_none(), || {
            format!("ξ_{} fails on {}", fail.unwrap_or(0) + 1, e)
        }));
        let bad: Vec<String> = e
            .terms()
            .filter(|(m, c)| {
                if m.0 == eta.parts() {
                    !c.is_one()
                } else {
                    !dominates_strictly(eta, &Composition::new(m.0.clone()))
                }
            })
            .map(|(m, _)| Composition::new(m.0.clone()).to_string())
            .collect();
        let lead_ok = !e.coefficient(eta.parts()).is_zero();
        out.push(CheckEntry::holds(
            "triangularity",
            params(),
            bad.is_empty() && lead_ok,
            || format!("offending monomials: {}", bad.join(" ")),
        ));
        if eta.degree() < degree {
            out.push(CheckEntry::compare(
                "raise",
                params(),
                family.e(&eta.phi())?,
                &phi(e),
            ));
        }
        let bar = eta.eigenvalues();
        for i in 0..n.saturating_sub(1) {
            let (a, b) = (eta.parts()[i], eta.parts()[i + 1]);
            let swapped = e.swap_vars(i, i + 1)?;
            let p = json!({"n": n, "eta": eta.to_string(), "i": i + 1});
            if a == b {
                out.push(CheckEntry::compare("swap-fixed", p, &swapped, e));
            } else if a > b {
                let d = &bar[i] - &bar[i + 1];
                let low = family.e(&eta.swapped(i))?;
                // d E_η = (d s_i + 1) E_{s_iη}
                let forward = low.swap_vars(i, i + 1)?.scale(&d).try_add(low)?;
                out.push(CheckEntry::compare(
                    "swap-forward",
                    p.clone(),
                    &e.scale(&d),
                    &forward,
                ));
                // s_i E_η = (1/d) E_η + ((d²−1)/d²) E_{s_iη}
                let d2 = &d * &d;
                let inverse = e
                    .scale(&d.recip()?)
                    .try_add(&low.scale(&div(&(&d2 - &AlphaFrac::one()), &d2)?))?;
                out.push(CheckEntry::compare("swap-inverse", p, &swapped, &inverse));
            }
        }
        Ok(out)
    });
    flatten(parts)
}

/// `P_λ` lies in the span of `{E_η : η⁺ = λ}`.
pub fn verify_structure(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let parts = partitions_up_to(n, degree);
    let entries = par::map(&parts, mode, |lambda| {
        let p = family.symmetric_p(lambda)?;
        let coeffs = expand_in_e_basis(&family, &p, lambda.degree())?;
        let outside: Vec<String> = coeffs
            .keys()
            .filter(|eta| &eta.plus() != lambda)
            .map(ToString::to_string)
            .collect();
        Ok(CheckEntry::holds(
            "span",
            json!({"n": n, "lambda": lambda.to_string()}),
            outside.is_empty(),
            || format!("components outside the orbit: {}", outside.join(" ")),
        ))
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// `⟨J_λ, J_μ⟩_s = δ_{λμ} c_λ c′_λ`, `J_λ(1ⁿ) = b_λ`, and leading coefficient `c_λ`.
pub fn verify_stanley(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let family = JackFamily::build(n, degree, mode);
    let basis = g_basis(n, degree, mode)?;
    let parts = partitions_up_to(n, degree);
    let js = par::map(&parts, mode, symmetric_j_oracle)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::new();
    for (lambda, j) in parts.iter().zip(&js) {
        let params = || json!({"n": n, "lambda": lambda.to_string()});
        let k = lambda.partition_constants();
        entries.push(CheckEntry::compare(
            "stanley-routes",
            params(),
            j,
            &family.symmetric_j(lambda)?,
        ));
        entries.push(CheckEntry::compare(
            "stanley-evaluation",
            params(),
            &j.eval_ones(),
            &k.b,
        ));
        entries.push(CheckEntry::holds(
            "stanley-leading",
            params(),
            j.is_symmetric() && j.coefficient(lambda.parts()) == k.c,
            || j.to_string(),
        ));
    }
    let prepared = par::map(&js, mode, |j| basis.prepare(j))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let pairs: Vec<(usize, usize)> = (0..parts.len())
        .flat_map(|a| (a..parts.len()).map(move |b| (a, b)))
        .collect();
    let pair_entries = par::map(&pairs, mode, |&(a, b)| {
        let v = basis.pair_prepared(&js[a], &prepared[b])?;
        let params = json!({"n": n, "lambda": parts[a].to_string(), "mu": parts[b].to_string()});
        Ok(if a == b {
            CheckEntry::compare(
                "stanley-norm",
                params,
                &v,
                &parts[a].partition_constants().j,
            )
        } else {
            CheckEntry::compare("stanley-orthogonality", params, &v, &AlphaFrac::zero())
        })
    });
    entries.extend(
        pair_entries
            .into_iter()
            .collect::<Result<Vec<_>, VerifyError>>()?,
    );
    Ok(Report::new(entries))
}

/// `J_λ(x_1, …, x_n, 0)` in `n+1` variables equals `J_λ` in `n` variables.
pub fn verify_stability(n: usize, degree: u32, mode: Parallelism) -> Result<Report, VerifyError> {
    check_n(n)?;
    let small = JackFamily::build(n, degree, mode);
    let big = JackFamily::build(n + 1, degree, mode);
    let parts = partitions_up_to(n, degree);
    let entries = par::map(&parts, mode, |lambda| {
        let mut wide = lambda.parts().to_vec();
        wide.push(0);
        let wide = Partition::new(wide).expect("appending a zero keeps a partition");
        let restricted = big.symmetric_j(&wide)?.restrict_to_zero(n)?;
        Ok(CheckEntry::compare(
            "stability",
            json!({"n": n, "lambda": lambda.to_string()}),
            &restricted,
            &small.symmetric_j(lambda)?,
        ))
    });
    Ok(Report::new(
        entries.into_iter().collect::<Result<_, VerifyError>>()?,
    ))
}

/// Named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Orthogonality,
    Cauchy,
    Symm,
    Spec,
    Recursions,
    BinomialExpansion,
    KernelOperator,
    Oracle,
    Eigen,
    Structure,
    Stanley,
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Orthogonality,
        Suite::Cauchy,
        Suite::Symm,
        Suite::Spec,
        Suite::Recursions,
        Suite::BinomialExpansion,
        Suite::KernelOperator,
        Suite::Oracle,
        Suite::Eigen,
        Suite::Structure,
        Suite::Stanley,
        Suite::Stability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Cauchy => "cauchy",
            Suite::Symm => "symm",
            Suite::Spec => "spec",
            Suite::Recursions => "recursions",
            Suite::BinomialExpansion => "las",
            Suite::KernelOperator => "lemma31",
            Suite::Oracle => "oracle",
            Suite::Eigen => "eigen",
            Suite::Structure => "structure",
            Suite::Stanley => "stanley",
            Suite::Stability => "stability",
        }
    }

    /// Runs the suite; `r` is used only by [`Suite::BinomialExpansion`] and defaults to 1.
    pub fn run(
        self,
        n: usize,
        degree: u32,
        r: Option<&AlphaFrac>,
        mode: Parallelism,
    ) -> Result<Report, VerifyError> {
        match self {
            Suite::Orthogonality => verify_orthogonality(n, degree, mode),
            Suite::Cauchy => verify_cauchy(n, degree, mode),
            Suite::Symm => verify_symmetrization(n, degree, mode),
            Suite::Spec => verify_evaluation(n, degree, mode),
            Suite::Recursions => verify_recursions(n, degree, mode),
            Suite::BinomialExpansion => {
                verify_binomial_expansion(n, degree, r.unwrap_or(&AlphaFrac::one()), mode)
            }
            Suite::KernelOperator => verify_kernel_operator(n, degree, mode),
            Suite::Oracle => verify_oracle(n, degree, mode),
            Suite::Eigen => verify_eigen(n, degree, mode),
            Suite::Structure => verify_structure(n, degree, mode),
            Suite::Stanley => verify_stanley(n, degree, mode),
            Suite::Stability => verify_stability(n, degree, mode),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::Params(format!("unknown suite {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEQ: Parallelism = Parallelism::Sequential;

    fn f(s: &str) -> AlphaFrac {
        s.parse().unwrap()
    }

    fn assert_pass(r: &Report) {
        let bad: Vec<_> = r.failures().collect();
        assert!(r.passed(), "{bad:#?}");
    }

    #[test]
    fn orthogonality_counts() {
        let r = verify_orthogonality(1, 3, SEQ).unwrap();
        assert_pass(&r);
        assert_eq!(r.count("norm"), 4);
        assert_eq!(r.count("orthogonality"), 6);
        assert_pass(&verify_orthogonality(2, 3, SEQ).unwrap());
        assert_pass(&verify_orthogonality(3, 2, Parallelism::Parallel).unwrap());
    }

    #[test]
    fn cauchy_examples() {
        assert_pass(&verify_cauchy(1, 2, SEQ).unwrap());
        assert_pass(&verify_cauchy(2, 2, SEQ).unwrap());
        let r = verify_cauchy(2, 0, SEQ).unwrap();
        assert_pass(&r);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn symmetrization_examples() {
        assert_pass(&verify_symmetrization(2, 1, SEQ).unwrap());
        assert_pass(&verify_symmetrization(3, 3, Parallelism::Parallel).unwrap());
    }

    #[test]
    fn binomial_expansion_examples() {
        assert_pass(&verify_binomial_expansion(2, 2, &f("1"), SEQ).unwrap());
        assert_pass(&verify_binomial_expansion(2, 2, &f("2/α"), SEQ).unwrap());
        assert_pass(&verify_binomial_expansion(1, 3, &f("5/2"), SEQ).unwrap());
    }

    #[test]
    fn kernel_operator_holds_at_the_cap_too() {
        // both sides preserve x-degree, so the comparison extends to the cap
        let n = 2;
        let omega = omega_kernel(n, 3, SEQ);
        for i in 0..n {
            let lhs = cherednik_block(omega.poly(), i, 0..n).unwrap();
            let rhs = cherednik_block(omega.poly(), i, n..2 * n).unwrap();
            assert_eq!(lhs, rhs);
        }
        assert_pass(&verify_kernel_operator(2, 3, SEQ).unwrap());
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in Suite::ALL {
            let r = suite.run(2, 2, None, Parallelism::Parallel).unwrap();
            assert_pass(&r);
        }
        assert_pass(&verify_recursions(4, 4, SEQ).unwrap());
    }

    #[test]
    fn failure_is_rendered() {
        let e = CheckEntry::compare("x", json!({}), &f("α"), &f("1"));
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.lhs.as_deref(), Some("α"));
        let ok = CheckEntry::compare("x", json!({}), &f("α"), &f("α"));
        assert!(ok.passed() && ok.lhs.is_none());
        let report = Report::new(vec![e, ok]);
        assert!(!report.passed());
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert!(!Report::default().passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
