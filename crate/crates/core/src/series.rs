//! Truncated power series in two variable sets and the Cauchy-type kernels.
//!
//! A [`TruncatedBiSeries`] lives in the ring `F[x_1..x_nx, y_1..y_ny]`, x-variables
//! first. Only terms of x-degree at most `cap` are kept. Every kernel built
//! here is bi-homogeneous, so the y-degree of each term equals its x-degree.

use num_traits::One;
use thiserror::Error;

use crate::field::{rising_factorial, AlphaFrac};
use crate::par::{self, Parallelism};
use crate::poly::{ExponentVector, PolyError, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("requested degree {degree} exceeds the truncation cap {cap}")]
    CapExceeded { degree: u32, cap: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBiSeries {
    nx: usize,
    ny: usize,
    cap: u32,
    poly: SparsePoly,
}

impl TruncatedBiSeries {
    pub fn one(nx: usize, ny: usize, cap: u32) -> Self {
        TruncatedBiSeries {
            nx,
            ny,
            cap,
            poly: SparsePoly::one(nx + ny),
        }
    }

    /// Wraps a polynomial in `nx + ny` variables, dropping terms above the cap.
    pub fn from_poly(
        nx: usize,
        ny: usize,
        cap: u32,
        poly: SparsePoly,
    ) -> Result<Self, SeriesError> {
        if poly.nvars() != nx + ny {
            return Err(SeriesError::Shape(format!(
                "polynomial has {} variables, expected {}",
                poly.nvars(),
                nx + ny
            )));
        }
        let poly = poly.filter_terms(|e| e.degree_in(0..nx) <= cap);
        Ok(TruncatedBiSeries { nx, ny, cap, poly })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePoly {
        self.poly
    }

    pub fn x_degree(&self, e: &ExponentVector) -> u32 {
        e.degree_in(0..self.nx)
    }

    pub fn y_degree(&self, e: &ExponentVector) -> u32 {
        e.degree_in(self.nx..self.nx + self.ny)
    }

    /// Every term has equal x- and y-degree.
    pub fn is_bihomogeneous(&self) -> bool {
        self.poly
            .terms()
            .all(|(e, _)| self.x_degree(e) == self.y_degree(e))
    }

    /// Truncated product; terms above the smaller cap are dropped as they arise.
    pub fn mul(&self, other: &TruncatedBiSeries) -> Result<TruncatedBiSeries, SeriesError> {
        if self.nx != other.nx || self.ny != other.ny {
            return Err(SeriesError::Shape(
                "series over different variable sets".into(),
            ));
        }
        let cap = self.cap.min(other.cap);
        let nx = self.nx;
        let poly = self
            .poly
            .mul_filtered(&other.poly, |e| e.degree_in(0..nx) <= cap)?;
        Ok(TruncatedBiSeries {
            nx,
            ny: self.ny,
            cap,
            poly,
        })
    }

    pub fn truncate(&self, cap: u32) -> TruncatedBiSeries {
        let cap = cap.min(self.cap);
        let nx = self.nx;
        TruncatedBiSeries {
            nx,
            ny: self.ny,
            cap,
            poly: self.poly.filter_terms(|e| e.degree_in(0..nx) <= cap),
        }
    }

    /// The x-polynomial multiplying `y^γ`.
    pub fn coefficient_of_y(&self, gamma: &[u32]) -> Result<SparsePoly, SeriesError> {
        if gamma.len() != self.ny {
            return Err(SeriesError::Shape(format!(
                "y-exponent of length {}, expected {}",
                gamma.len(),
                self.ny
            )));
        }
        let degree: u32 = gamma.iter().sum();
        if degree > self.cap {
            return Err(SeriesError::CapExceeded {
                degree,
                cap: self.cap,
            });
        }
        let nx = self.nx;
        let terms = self
            .poly
            .terms()
            .filter(|(e, _)| &e.0[nx..] == gamma)
            .map(|(e, c)| (ExponentVector(e.0[..nx].to_vec()), c.clone()));
        Ok(SparsePoly::from_terms(nx, terms)?)
    }

    /// Exchanges `x_i` and `y_i` for every `i`.
    pub fn swap_xy(&self) -> Result<TruncatedBiSeries, SeriesError> {
        if self.nx != self.ny {
            return Err(SeriesError::Shape(
                "swap needs equally many x and y variables".into(),
            ));
        }
        let n = self.nx;
        let target: Vec<usize> = (0..2 * n).map(|k| (k + n) % (2 * n)).collect();
        Ok(TruncatedBiSeries {
            nx: n,
            ny: n,
            cap: self.cap,
            poly: self.poly.permute_vars(&target),
        })
    }

    /// Rendering with variables named `x1.., y1..`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.nx)
            .map(|i| format!("x{i}"))
            .chain((1..=self.ny).map(|j| format!("y{j}")))
            .collect();
        self.poly.to_text_with(&names)
    }
}

/// `(1 - x_i y_j)^(-c)` expanded through x-degree `cap` (0-based `i`, `j`).
pub fn kernel_factor(
    nx: usize,
    ny: usize,
    c: &AlphaFrac,
    i: usize,
    j: usize,
    cap: u32,
) -> Result<TruncatedBiSeries, SeriesError> {
    if i >= nx || j >= ny {
        return Err(SeriesError::Shape(format!(
            "factor index ({i}, {j}) outside {nx}×{ny}"
        )));
    }
    let terms = (0..=cap).map(|k| {
        let mut e = vec![0; nx + ny];
        e[i] = k;
        e[nx + j] = k;
        (ExponentVector(e), rising_factorial(c, k))
    });
    let poly = SparsePoly::from_terms(nx + ny, terms)?;
    Ok(TruncatedBiSeries { nx, ny, cap, poly })
}

fn product_of(
    factors: Vec<TruncatedBiSeries>,
    nx: usize,
    ny: usize,
    cap: u32,
    mode: Parallelism,
) -> TruncatedBiSeries {
    par::reduce(
        factors,
        mode,
        || TruncatedBiSeries::one(nx, ny, cap),
        |a, b| a.mul(&b).expect("factors share one shape"),
    )
}

/// `Ω = ∏_i (1 - x_i y_i)^(-1) · ∏_{i,j} (1 - x_i y_j)^(-1/α)` through x-degree `cap`.
///
/// Factors are listed diagonal first, then row-major over `(i, j)`.
pub fn omega_kernel(n: usize, cap: u32, mode: Parallelism) -> TruncatedBiSeries {
    assert!(n >= 1, "kernel needs at least one variable");
    let inv_alpha = AlphaFrac::alpha().recip().expect("α is nonzero");
    let mut factors = Vec::with_capacity(n + n * n);
    for i in 0..n {
        factors.push(kernel_factor(n, n, &AlphaFrac::one(), i, i, cap).expect("in range"));
    }
    for i in 0..n {
        for j in 0..n {
            factors.push(kernel_factor(n, n, &inv_alpha, i, j, cap).expect("in range"));
        }
    }
    product_of(factors, n, n, cap, mode)
}

/// `∏_{i ≤ n, j ≤ m} (1 - x_i y_j)^(-c)` through x-degree `cap`.
pub fn symmetric_kernel(
    n: usize,
    m: usize,
    c: &AlphaFrac,
    cap: u32,
    mode: Parallelism,
) -> TruncatedBiSeries {
    assert!(
        n >= 1 && m >= 1,
        "kernel needs at least one variable per set"
    );
    let factors = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| kernel_factor(n, m, c, i, j, cap).expect("in range"))
        .collect();
    product_of(factors, n, m, cap, mode)
}
