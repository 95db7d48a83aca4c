use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlphaPoly, FieldError};

/// An element of Q(α), kept as a reduced fraction with monic denominator.
///
/// Because the representation is canonical, structural equality (and `Hash`)
/// coincide with equality of field elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaFrac {
    num: AlphaPoly,
    den: AlphaPoly,
}

impl AlphaFrac {
    /// Canonical form of `num / den`.
    pub fn new(num: AlphaPoly, den: AlphaPoly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: AlphaPoly, den: AlphaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            AlphaFrac { num, den }
        } else {
            let inv = lc.recip();
            AlphaFrac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: AlphaPoly) -> Self {
        AlphaFrac {
            num: p,
            den: AlphaPoly::one(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::from_poly(AlphaPoly::constant(q))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(AlphaPoly::from_int(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn alpha() -> Self {
        Self::from_poly(AlphaPoly::alpha())
    }

    /// `a·α + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_poly(AlphaPoly::linear(a, b))
    }

    pub fn numerator(&self) -> &AlphaPoly {
        &self.num
    }

    pub fn denominator(&self) -> &AlphaPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value when no α appears.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn recip(&self) -> Result<Self, FieldError> {
        if self.num.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &AlphaFrac) -> Result<Self, FieldError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self, FieldError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(AlphaFrac {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact value at α = `at`; errors if `at` is a pole.
    pub fn evaluate_alpha(&self, at: &BigRational) -> Result<BigRational, FieldError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(FieldError::Pole { at: at.clone() });
        }
        Ok(self.num.eval(at) / d)
    }

    /// Same as [`evaluate_alpha`](Self::evaluate_alpha), kept inside the field type.
    pub fn specialize(&self, at: &BigRational) -> Result<Self, FieldError> {
        self.evaluate_alpha(at).map(Self::from_rational)
    }

    /// Numerator and denominator scaled to coprime integer coefficient vectors
    /// with a positive leading denominator coefficient. Used for rendering.
    pub(crate) fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let l = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let mut n = self.num.scaled_integers(&l);
        let mut d = self.den.scaled_integers(&l);
        let g = n
            .iter()
            .chain(d.iter())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            n.iter_mut().for_each(|c| *c = &*c / &g);
            d.iter_mut().for_each(|c| *c = &*c / &g);
        }
        (n, d)
    }

    pub fn to_latex(&self) -> String {
        if self.num.is_zero() {
            return "0".into();
        }
        let (n, d) = self.integer_form();
        if is_int_one(&d) {
            return render_int_poly(&n, Style::Latex);
        }
        let (neg, n) = strip_sign_if_leading_negative(n);
        format!(
            "{}\\frac{{{}}}{{{}}}",
            if neg { "-" } else { "" },
            render_int_poly(&n, Style::Latex),
            render_int_poly(&d, Style::Latex)
        )
    }

    /// Whether the plain-text rendering is a single signed product (no top-level `+`, `-` or `/`).
    pub(crate) fn is_simple_term(&self) -> bool {
        self.den.is_one() && self.num.term_count() <= 1
    }

    /// True when the leading numerator coefficient is negative.
    pub(crate) fn is_negative_leading(&self) -> bool {
        self.num.leading().is_some_and(Signed::is_negative)
    }
}

/// Series coefficient of `t^k` in `(1 - t)^(-c)`, i.e. `c(c+1)…(c+k-1)/k!`.
pub fn rising_factorial(c: &AlphaFrac, k: u32) -> AlphaFrac {
    let mut acc = AlphaFrac::one();
    for j in 0..k {
        let step = c + &AlphaFrac::from_int(j as i64);
        acc = &acc * &step;
        acc = &acc * &AlphaFrac::from_ratio(1, j as i64 + 1);
    }
    acc
}

#[derive(Clone, Copy)]
pub(crate) enum Style {
    Text,
    Latex,
}

fn is_int_one(v: &[BigInt]) -> bool {
    v.len() == 1 && v[0].is_one()
}

fn strip_sign_if_leading_negative(mut n: Vec<BigInt>) -> (bool, Vec<BigInt>) {
    if n.last().is_some_and(Signed::is_negative) {
        n.iter_mut().for_each(|c| *c = -&*c);
        (true, n)
    } else {
        (false, n)
    }
}

fn nonzero_terms(v: &[BigInt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// Highest power first, no spaces: `3α^2-α+1`.
pub(crate) fn render_int_poly(v: &[BigInt], style: Style) -> String {
    let mut out = String::new();
    let sym = match style {
        Style::Text => "α",
        Style::Latex => "\\alpha",
    };
    for (k, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        match (k, style) {
            (0, _) => {}
            (1, _) => out.push_str(sym),
            (_, Style::Text) => out.push_str(&format!("{sym}^{k}")),
            (_, Style::Latex) => out.push_str(&format!("{sym}^{{{k}}}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for AlphaFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            return f.write_str("0");
        }
        let (n, d) = self.integer_form();
        let num = render_int_poly(&n, Style::Text);
        if is_int_one(&d) {
            return f.write_str(&num);
        }
        let num = if nonzero_terms(&n) > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = render_int_poly(&d, Style::Text);
        // a lone coefficient·power needs parentheses, otherwise `1/2α` reads as `(1/2)α`
        let den_bare =
            nonzero_terms(&d) == 1 && (d.len() == 1 || d.last().is_some_and(One::is_one));
        if den_bare {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl Zero for AlphaFrac {
    fn zero() -> Self {
        AlphaFrac {
            num: AlphaPoly::zero(),
            den: AlphaPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for AlphaFrac {
    fn one() -> Self {
        Self::from_poly(AlphaPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl Default for AlphaFrac {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for AlphaFrac {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for AlphaFrac {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<AlphaPoly> for AlphaFrac {
    fn from(p: AlphaPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &AlphaFrac {
    type Output = AlphaFrac;
    fn add(self, rhs: &AlphaFrac) -> AlphaFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return AlphaFrac::from_poly(num);
            }
            return AlphaFrac::normalize(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = &(&self.num * &rhs.den) + &rhs.num;
            return AlphaFrac::normalize(num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            let num = &self.num + &(&rhs.num * &self.den);
            return AlphaFrac::normalize(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (ld, rd) = (self.den.div_exact(&g), rhs.den.div_exact(&g));
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        let den = &self.den * &rd;
        AlphaFrac::normalize(num, den)
    }
}

impl Sub for &AlphaFrac {
    type Output = AlphaFrac;
    fn sub(self, rhs: &AlphaFrac) -> AlphaFrac {
        self + &(-rhs)
    }
}

impl Neg for &AlphaFrac {
    type Output = AlphaFrac;
    fn neg(self) -> AlphaFrac {
        AlphaFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &AlphaFrac {
    type Output = AlphaFrac;
    fn mul(self, rhs: &AlphaFrac) -> AlphaFrac {
        if self.is_zero() || rhs.is_zero() {
            return AlphaFrac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return AlphaFrac::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already reduced up to scaling
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            AlphaFrac { num, den }
        } else {
            let inv = lc.recip();
            AlphaFrac {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl Div for &AlphaFrac {
    type Output = AlphaFrac;
    /// Panics on division by zero; use [`AlphaFrac::checked_div`] to handle it.
    fn div(self, rhs: &AlphaFrac) -> AlphaFrac {
        self.checked_div(rhs).expect("division by zero in Q(α)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for AlphaFrac {
            type Output = AlphaFrac;
            fn $m(self, rhs: AlphaFrac) -> AlphaFrac { (&self).$m(&rhs) }
        }
        impl $tr<&AlphaFrac> for AlphaFrac {
            type Output = AlphaFrac;
            fn $m(self, rhs: &AlphaFrac) -> AlphaFrac { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for AlphaFrac {
    type Output = AlphaFrac;
    fn neg(self) -> AlphaFrac {
        AlphaFrac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl AddAssign<&AlphaFrac> for AlphaFrac {
    fn add_assign(&mut self, rhs: &AlphaFrac) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&AlphaFrac> for AlphaFrac {
    fn sub_assign(&mut self, rhs: &AlphaFrac) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&AlphaFrac> for AlphaFrac {
    fn mul_assign(&mut self, rhs: &AlphaFrac) {
        *self = &*self * rhs;
    }
}

impl Sum for AlphaFrac {
    fn sum<I: Iterator<Item = AlphaFrac>>(iter: I) -> Self {
        iter.fold(AlphaFrac::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a AlphaFrac> for AlphaFrac {
    fn sum<I: Iterator<Item = &'a AlphaFrac>>(iter: I) -> Self {
        iter.fold(AlphaFrac::zero(), |acc, x| acc + x)
    }
}

impl Product for AlphaFrac {
    fn product<I: Iterator<Item = AlphaFrac>>(iter: I) -> Self {
        iter.fold(AlphaFrac::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a AlphaFrac> for AlphaFrac {
    fn product<I: Iterator<Item = &'a AlphaFrac>>(iter: I) -> Self {
        iter.fold(AlphaFrac::one(), |acc, x| acc * x)
    }
}
