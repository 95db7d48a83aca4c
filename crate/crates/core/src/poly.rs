//! Sparse multivariate polynomials with Q(α) coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{parse_rational, AlphaFrac, AlphaPoly, FieldError};

/// Version tag of the JSON polynomial form.
pub const JSON_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCount { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("evaluation point has {got} coordinates, expected {expected}")]
    PointLength { got: usize, expected: usize },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Exponents of a monomial `x_1^{e_1}…x_n^{e_n}`.
///
/// The derived `Ord` is plain lexicographic; rendering uses graded order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
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

    /// Total degree of the entries in `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().sum()
    }

    fn added(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// Higher total degree first, then lexicographically larger first.
pub fn graded_lex_desc(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| b.0.cmp(&a.0))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, AlphaFrac>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, AlphaFrac::one())
    }

    pub fn constant(nvars: usize, c: AlphaFrac) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn monomial(exps: ExponentVector, c: AlphaFrac) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `x^exps` with coefficient 1.
    pub fn x_pow(exps: &[u32]) -> Self {
        Self::monomial(ExponentVector(exps.to_vec()), AlphaFrac::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self, PolyError> {
        check_index(i, nvars)?;
        let mut e = vec![0; nvars];
        e[i] = 1;
        Ok(Self::x_pow(&e))
    }

    /// Builds from (exponents, coefficient) pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVector, AlphaFrac)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::VariableCount {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &AlphaFrac)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order, leading term first.
    pub fn terms_graded(&self) -> Vec<(&ExponentVector, &AlphaFrac)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_lex_desc(a.0, b.0));
        v
    }

    pub fn coefficient(&self, exps: &[u32]) -> AlphaFrac {
        self.terms
            .get(&ExponentVector(exps.to_vec()))
            .cloned()
            .unwrap_or_else(AlphaFrac::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> SparsePoly {
        self.filter_terms(|e| e.degree() == d)
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: &AlphaFrac) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, other: &SparsePoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCount {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only monomials accepted by `keep`.
    pub fn mul_filtered(
        &self,
        other: &SparsePoly,
        keep: impl Fn(&ExponentVector) -> bool,
    ) -> Result<SparsePoly, PolyError> {
        self.check_same(other)?;
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.added(eb);
                if keep(&e) {
                    out.add_term(e, &(ca * cb));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &AlphaFrac) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        if c.is_one() {
            return self.clone();
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by `x_i^k`.
    pub fn mul_var(&self, i: usize, k: u32) -> Result<SparsePoly, PolyError> {
        check_index(i, self.nvars)?;
        Ok(SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0[i] += k;
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// `∂f/∂x_i` (0-based index).
    pub fn partial_derivative(&self, i: usize) -> Result<SparsePoly, PolyError> {
        check_index(i, self.nvars)?;
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[i];
            if k == 0 {
                continue;
            }
            let mut e = e.clone();
            e.0[i] -= 1;
            out.terms.insert(e, c * &AlphaFrac::from_int(k as i64));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[AlphaFrac]) -> Result<AlphaFrac, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                got: point.len(),
                expected: self.nvars,
            });
        }
        let mut acc = AlphaFrac::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t = &t * &x.pow(k as i32)?;
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Value at `(1, …, 1)`: the sum of all coefficients.
    pub fn eval_ones(&self) -> AlphaFrac {
        self.terms.values().sum()
    }

    /// Renames variables: `x_i ↦ x_{target[i]}`. `target` must be a permutation.
    pub fn permute_vars(&self, target: &[usize]) -> SparsePoly {
        debug_assert_eq!(target.len(), self.nvars);
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; self.nvars];
                    for (i, &k) in e.0.iter().enumerate() {
                        ne[target[i]] = k;
                    }
                    (ExponentVector(ne), c.clone())
                })
                .collect(),
        }
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<SparsePoly, PolyError> {
        check_index(i, self.nvars)?;
        check_index(j, self.nvars)?;
        Ok(SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Sets `x_i = 0` and removes the variable.
    pub fn restrict_to_zero(&self, i: usize) -> Result<SparsePoly, PolyError> {
        check_index(i, self.nvars)?;
        Ok(SparsePoly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0[i] == 0)
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0.remove(i);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Places the variables at positions `offset..offset+n` of a ring with `total` variables.
    pub fn embed(&self, total: usize, offset: usize) -> SparsePoly {
        assert!(offset + self.nvars <= total);
        SparsePoly {
            nvars: total,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; total];
                    ne[offset..offset + self.nvars].copy_from_slice(&e.0);
                    (ExponentVector(ne), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes a rational value for α in every coefficient.
    pub fn specialize(&self, alpha: &BigRational) -> Result<SparsePoly, PolyError> {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.specialize(alpha)?);
        }
        Ok(out)
    }

    /// Invariant under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.swap_vars(i, i + 1)
                .map(|s| s == *self)
                .unwrap_or(false)
        })
    }

    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        self.to_text_with(&names)
    }

    /// Plain text such as `(α+2)·x2+x1^2`, with the given variable names.
    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms_graded() {
            let mono: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| match k {
                        1 => names[i].clone(),
                        _ => format!("{}^{k}", names[i]),
                    })
                    .collect();
            let mono = mono.join("·");
            push_term(&mut out, c, &mono, "·", |c| c.to_string());
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms_graded() {
            let mono: String =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| match k {
                        1 => format!("x_{{{}}}", i + 1),
                        _ => format!("x_{{{}}}^{{{k}}}", i + 1),
                    })
                    .collect();
            push_term(&mut out, c, &mono, "", |c| c.to_latex());
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(s: &str) -> Result<SparsePoly, PolyError> {
        let wire: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))?;
        wire.try_into()
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<SparsePoly, PolyError> {
        let wire: PolyJson =
            serde_json::from_value(v).map_err(|e| PolyError::Json(e.to_string()))?;
        wire.try_into()
    }
}

fn check_index(i: usize, nvars: usize) -> Result<(), PolyError> {
    if i >= nvars {
        return Err(PolyError::IndexOutOfRange { index: i, nvars });
    }
    Ok(())
}

fn push_term(
    out: &mut String,
    c: &AlphaFrac,
    mono: &str,
    sep: &str,
    render: impl Fn(&AlphaFrac) -> String,
) {
    if mono.is_empty() {
        let s = render(c);
        if !out.is_empty() && !s.starts_with('-') {
            out.push('+');
        }
        out.push_str(&s);
        return;
    }
    if c.is_simple_term() {
        let neg = c.is_negative_leading();
        let mag = if neg { -c } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&render(&mag));
            out.push_str(sep);
        }
    } else {
        if !out.is_empty() {
            out.push('+');
        }
        out.push('(');
        out.push_str(&render(c));
        out.push(')');
        out.push_str(sep);
    }
    out.push_str(mono);
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<u32>,
    coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    version: u32,
    n: usize,
    terms: Vec<TermJson>,
}

fn poly_to_strings(p: &AlphaPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn strings_to_poly(v: &[String]) -> Result<AlphaPoly, PolyError> {
    let coeffs = v
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlphaPoly::from_coeffs(coeffs))
}

impl From<&SparsePoly> for PolyJson {
    fn from(p: &SparsePoly) -> Self {
        PolyJson {
            version: JSON_FORMAT_VERSION,
            n: p.nvars,
            terms: p
                .terms_graded()
                .into_iter()
                .map(|(e, c)| TermJson {
                    exponents: e.0.clone(),
                    coeff: CoeffJson {
                        num: poly_to_strings(c.numerator()),
                        den: poly_to_strings(c.denominator()),
                    },
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for SparsePoly {
    type Error = PolyError;

    fn try_from(w: PolyJson) -> Result<Self, PolyError> {
        if w.version != JSON_FORMAT_VERSION {
            return Err(PolyError::Json(format!(
                "unsupported version {}",
                w.version
            )));
        }
        let terms = w
            .terms
            .into_iter()
            .map(|t| {
                let c = AlphaFrac::new(
                    strings_to_poly(&t.coeff.num)?,
                    strings_to_poly(&t.coeff.den)?,
                )?;
                Ok((ExponentVector(t.exponents), c))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        SparsePoly::from_terms(w.n, terms)
    }
}

macro_rules! ref_ops {
    ($($tr:ident $m:ident $checked:ident),*) => {$(
        impl $tr for &SparsePoly {
            type Output = SparsePoly;
            /// Panics on a variable-count mismatch.
            fn $m(self, rhs: &SparsePoly) -> SparsePoly {
                self.$checked(rhs).expect("polynomials over different variable counts")
            }
        }
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly { (&self).$m(&rhs) }
        }
    )*};
}
ref_ops!(Add add try_add, Sub sub try_sub, Mul mul try_mul);

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(s: &str) -> AlphaFrac {
        s.parse().unwrap()
    }

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        assert_eq!(&(&x1 + &x2) * &(&x1 - &x2), &x1 * &x1 - &x2 * &x2);
        assert!((&x1 - &x1).is_zero());
        let lhs = &(&x1 + &x2.scale(&f("1/(α+1)"))) * &SparsePoly::constant(2, f("α+1"));
        assert_eq!(lhs, &x1.scale(&f("α+1")) + &x2);
        assert_eq!(
            x(2, 0).try_add(&x(3, 0)),
            Err(PolyError::VariableCount { left: 2, right: 3 })
        );
    }

    #[test]
    fn derivative_examples() {
        let p = SparsePoly::x_pow(&[2, 1]);
        assert_eq!(
            p.partial_derivative(0).unwrap(),
            SparsePoly::x_pow(&[1, 1]).scale(&f("2"))
        );
        assert!(x(2, 0).partial_derivative(1).unwrap().is_zero());
        let q = &x(2, 0) + &x(2, 1).scale(&f("1/(α+1)"));
        assert_eq!(q.partial_derivative(0).unwrap(), SparsePoly::one(2));
        assert!(matches!(
            q.partial_derivative(2),
            Err(PolyError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let ones = vec![AlphaFrac::one(); 2];
        assert_eq!(x(2, 1).scale(&f("α+2")).evaluate(&ones).unwrap(), f("α+2"));
        assert_eq!(SparsePoly::x_pow(&[1, 1]).evaluate(&ones).unwrap(), f("1"));
        let p = &SparsePoly::constant(2, f("3/α")) + &x(2, 0);
        let zeros = vec![AlphaFrac::zero(); 2];
        assert_eq!(p.evaluate(&zeros).unwrap(), f("3/α"));
        assert!(matches!(
            p.evaluate(&ones[..1]),
            Err(PolyError::PointLength { .. })
        ));
    }

    #[test]
    fn text_and_latex() {
        assert_eq!(x(2, 1).scale(&f("α+2")).to_text(), "(α+2)·x2");
        assert_eq!((&x(2, 0) + &x(2, 1)).to_latex(), "x_{1}+x_{2}");
        let p = &(&SparsePoly::x_pow(&[2, 0]).scale(&f("-3α")) + &x(2, 1).scale(&f("1/(α+1)")))
            - &SparsePoly::one(2);
        assert_eq!(p.to_text(), "-3α·x1^2+(1/(α+1))·x2-1");
        assert_eq!(SparsePoly::zero(3).to_text(), "0");
    }

    #[test]
    fn json_shape() {
        let p = x(2, 1).scale(&f("(α+2)/3"));
        let v = p.to_json_value();
        assert_eq!(v["version"], 1);
        assert_eq!(v["terms"][0]["exponents"], serde_json::json!([0, 1]));
        assert_eq!(
            v["terms"][0]["coeff"]["num"],
            serde_json::json!(["2/3", "1/3"])
        );
        assert_eq!(v["terms"][0]["coeff"]["den"], serde_json::json!(["1"]));
        assert!(SparsePoly::from_json(r#"{"version":2,"n":1,"terms":[]}"#).is_err());
        assert!(SparsePoly::from_json(
            r#"{"version":1,"n":1,"terms":[{"exponents":[1],"coeff":{"num":["1"],"den":[]}}]}"#
        )
        .is_err());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, n), -3i64..=3, 0i64..3),
            0..5,
        )
        .prop_map(move |ts| {
            SparsePoly::from_terms(
                n,
                ts.into_iter().map(|(e, a, b)| {
                    let c = &AlphaFrac::from_int(a) + &AlphaFrac::linear(b, 1).recip().unwrap();
                    (ExponentVector(e), c)
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn json_round_trip(p in arb_poly(3)) {
            prop_assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
        }

        #[test]
        fn product_rule(a in arb_poly(2), b in arb_poly(2)) {
            let lhs = (&a * &b).partial_derivative(0).unwrap();
            let rhs = &(&a.partial_derivative(0).unwrap() * &b) + &(&a * &b.partial_derivative(0).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
