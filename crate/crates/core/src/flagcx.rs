//! Invariant forms on the full flag manifold `F = SU(3)/S(U(1)³)`.
//!
//! For any invariant metric `ω = αΩ12 + βΩ13 + γΩ23` the star of a harmonic
//! two-form is not a multiple of its Poincaré dual, in contrast with the
//! hermitian symmetric cases.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{format_rational, rat, Rational};
use crate::error::{invalid, Error, Result};
use crate::linalg::Matrix;

/// Generators `Ω12`, `Ω13`, `Ω23` as bits 0, 1, 2 of a monomial mask.
pub const OMEGA_12: usize = 0b001;
pub const OMEGA_13: usize = 0b010;
pub const OMEGA_23: usize = 0b100;
pub const VOLUME: usize = 0b111;

const GENERATOR_NAMES: [&str; 3] = ["Ω12", "Ω13", "Ω23"];

/// An element of the invariant-form algebra `Λ[Ω12, Ω13, Ω23]`, where each
/// generator squares to zero and generators commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantForm<T = Rational> {
    coefficients: [T; 8],
}

impl<T: Clone + Zero> InvariantForm<T> {
    pub fn zero() -> Self {
        Self {
            coefficients: std::array::from_fn(|_| T::zero()),
        }
    }

    pub fn monomial(mask: usize, c: T) -> Self {
        let mut f = Self::zero();
        f.coefficients[mask] = c;
        f
    }

    pub fn from_coefficients(coefficients: [T; 8]) -> Self {
        Self { coefficients }
    }

    /// `aΩ12 + bΩ13 + cΩ23`.
    pub fn two_form(a: T, b: T, c: T) -> Self {
        let mut f = Self::zero();
        f.coefficients[OMEGA_12] = a;
        f.coefficients[OMEGA_13] = b;
        f.coefficients[OMEGA_23] = c;
        f
    }

    pub fn coefficient(&self, mask: usize) -> &T {
        &self.coefficients[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Cohomological degree if the form is homogeneous and non-zero.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = (0..8)
            .filter(|&m| !self.coefficients[m].is_zero())
            .map(|m: usize| 2 * m.count_ones() as usize);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn wedge(&self, other: &Self) -> Self
    where
        T: Mul<Output = T>,
    {
        let mut out = Self::zero();
        for a in 0..8 {
            if self.coefficients[a].is_zero() {
                continue;
            }
            for b in (0..8).filter(|b| a & b == 0) {
                let term = self.coefficients[a].clone() * other.coefficients[b].clone();
                out.coefficients[a | b] = out.coefficients[a | b].clone() + term;
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self
    where
        T: Mul<Output = T>,
    {
        Self {
            coefficients: std::array::from_fn(|m| self.coefficients[m].clone() * c.clone()),
        }
    }
}

impl<T: Clone + Zero> Add for InvariantForm<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            coefficients: std::array::from_fn(|m| self.coefficients[m].clone() + rhs.coefficients[m].clone()),
        }
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Neg for InvariantForm<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            coefficients: self.coefficients.map(|c| -c),
        }
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Sub for InvariantForm<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl fmt::Display for InvariantForm<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut masks: Vec<usize> = (0..8).filter(|&m| !self.coefficients[m].is_zero()).collect();
        if masks.is_empty() {
            return write!(f, "0");
        }
        masks.sort_by_key(|&m| (m.count_ones(), m));
        let terms: Vec<String> = masks
            .into_iter()
            .map(|m| {
                let name = if m == 0 {
                    "1".to_string()
                } else {
                    (0..3)
                        .filter(|b| m & (1 << b) != 0)
                        .map(|b| GENERATOR_NAMES[b])
                        .collect::<Vec<_>>()
                        .join("∧")
                };
                format!("{} · {name}", format_rational(&self.coefficients[m]))
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// An invariant metric `ω = αΩ12 + βΩ13 + γΩ23` with `V = ∫ Ω12∧Ω13∧Ω23`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub vol: Rational,
}

impl MetricParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, vol: Rational) -> Result<Self> {
        for (name, v) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma), ("vol", &vol)] {
            if !v.is_positive() {
                return Err(invalid(format!("{name} = {v} must be positive")));
            }
        }
        Ok(Self { alpha, beta, gamma, vol })
    }

    /// Integer parameters with `V = 1`.
    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Result<Self> {
        Self::new(rat(alpha, 1), rat(beta, 1), rat(gamma, 1), Rational::one())
    }

    pub fn kahler_form(&self) -> InvariantForm {
        InvariantForm::two_form(self.alpha.clone(), self.beta.clone(), self.gamma.clone())
    }
}

/// Polynomials in `α, β, γ` with rational coefficients, for identities that
/// must hold for every metric.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParamPolynomial(BTreeMap<[u32; 3], Rational>);

impl ParamPolynomial {
    /// `α`, `β` or `γ` for `i = 0, 1, 2`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self(BTreeMap::from([(e, Rational::one())]))
    }

    pub fn constant(c: Rational) -> Self {
        Self(BTreeMap::from([([0, 0, 0], c)])).normalize()
    }

    fn normalize(mut self) -> Self {
        self.0.retain(|_, c| !c.is_zero());
        self
    }
}

impl Zero for ParamPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.0.values().all(Zero::is_zero)
    }
}

impl Add for ParamPolynomial {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.0 {
            *self.0.entry(e).or_insert_with(Rational::zero) += c;
        }
        self.normalize()
    }
}

impl Mul for ParamPolynomial {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.0 {
            for (f, d) in &rhs.0 {
                let g = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                *out.0.entry(g).or_insert_with(Rational::zero) += c * d;
            }
        }
        out.normalize()
    }
}

impl Neg for ParamPolynomial {
    type Output = Self;

    fn neg(self) -> Self {
        Self(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

/// `ω²∧z = ω²∧z′ = 0` and the recombination identities
/// `3αΩ12 = ω+z−z′`, `3βΩ13 = ω−2z−z′`, `3γΩ23 = ω+z+2z′`, over `Q[α, β, γ]`.
pub fn symbolic_primitivity_check() -> bool {
    type P = ParamPolynomial;
    let (a, b, c) = (P::var(0), P::var(1), P::var(2));
    let omega = InvariantForm::two_form(a.clone(), b.clone(), c.clone());
    let z = InvariantForm::two_form(a.clone(), -b.clone(), P::zero());
    let zp = InvariantForm::two_form(-a.clone(), P::zero(), c.clone());
    let w2 = omega.wedge(&omega);
    let three = |p: P| p * P::constant(rat(3, 1));
    let twice = |f: InvariantForm<P>| f.clone() + f;
    w2.wedge(&z).is_zero()
        && w2.wedge(&zp).is_zero()
        && InvariantForm::two_form(three(a), P::zero(), P::zero()) == omega.clone() + z.clone() - zp.clone()
        && InvariantForm::two_form(P::zero(), three(b), P::zero())
            == omega.clone() - twice(z.clone()) - zp.clone()
        && InvariantForm::two_form(P::zero(), P::zero(), three(c)) == omega + z + twice(zp)
}

/// `h₁ = Ω12 + Ω13`, `h₂ = −Ω12 + Ω23`, `h₃ = −Ω13 − Ω23`.
pub fn harmonic_representatives() -> [InvariantForm; 3] {
    let (one, zero) = (Rational::one(), Rational::zero());
    [
        InvariantForm::two_form(one.clone(), one.clone(), zero.clone()),
        InvariantForm::two_form(-one.clone(), zero.clone(), one.clone()),
        InvariantForm::two_form(zero, -one.clone(), -one),
    ]
}

/// `z = αΩ12 − βΩ13` and `z′ = γΩ23 − αΩ12`, checked to be ω-primitive.
pub fn primitive_pair(params: &MetricParams) -> Result<(InvariantForm, InvariantForm)> {
    let zero = Rational::zero();
    let z = InvariantForm::two_form(params.alpha.clone(), -params.beta.clone(), zero.clone());
    let zp = InvariantForm::two_form(-params.alpha.clone(), zero, params.gamma.clone());
    let omega = params.kahler_form();
    let w2 = omega.wedge(&omega);
    if !w2.wedge(&z).is_zero() || !w2.wedge(&zp).is_zero() {
        return Err(Error::InternalInvariant("z or z′ is not primitive".into()));
    }
    Ok((z, zp))
}

/// Star of a two-form: write `x = aω + bz + cz′`, then use `*ω = ω²/2` and
/// `*z = −ω∧z`, `*z′ = −ω∧z′`.
pub fn star_two_form(params: &MetricParams, x: &InvariantForm) -> Result<InvariantForm> {
    if !matches!(x.degree(), Some(2) | None) {
        return Err(invalid("star_two_form expects a two-form"));
    }
    let omega = params.kahler_form();
    let (z, zp) = primitive_pair(params)?;
    let cols: Vec<Vec<Rational>> = [&omega, &z, &zp]
        .iter()
        .map(|f| [OMEGA_12, OMEGA_13, OMEGA_23].iter().map(|&m| f.coefficient(m).clone()).collect())
        .collect();
    let basis = Matrix::from_columns(3, &cols);
    let rhs: Vec<Rational> = [OMEGA_12, OMEGA_13, OMEGA_23].iter().map(|&m| x.coefficient(m).clone()).collect();
    let inv = basis
        .inverse()
        .ok_or_else(|| Error::InternalInvariant("ω, z, z′ are linearly dependent".into()))?;
    let c = inv.mul_vec(&rhs);
    let star = omega.wedge(&omega).scale(&(&c[0] / rat(2, 1)))
        - omega.wedge(&z).scale(&c[1])
        - omega.wedge(&zp).scale(&c[2]);
    Ok(star)
}

/// `V` times the volume coefficient.
pub fn integrate(x: &InvariantForm, params: &MetricParams) -> Rational {
    x.coefficient(VOLUME) * &params.vol
}

/// `λ = ∫(*h₁)∧(h₁+h₂)` and `μ = ∫(*h₁)∧h₁`, the coefficients of `*y₁ = λy₁² + μy₁y₂`.
pub fn lambda_mu_coefficients(params: &MetricParams) -> Result<(Rational, Rational)> {
    let [h1, h2, _] = harmonic_representatives();
    let star = star_two_form(params, &h1)?;
    let lambda = integrate(&star.wedge(&(h1.clone() + h2)), params);
    let mu = integrate(&star.wedge(&h1), params);
    let closed = &params.alpha * &params.gamma / &params.beta * &params.vol;
    if lambda != closed {
        return Err(Error::InternalInvariant(format!("λ = {lambda} differs from αγV/β = {closed}")));
    }
    Ok((lambda, mu))
}

/// The metric is Kähler exactly when `β = α + γ`.
pub fn kahler_check(params: &MetricParams) -> bool {
    params.beta == &params.alpha + &params.gamma
}

/// Cohomology of `F` as `Q[y₁, y₂]` modulo `y₂² = −y₁² − y₁y₂` and `y₁³ = 0`,
/// stored in normal form on the monomials `y₁^a y₂^b` with `a ≤ 2`, `b ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FlagRingClass {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Labels of the Schubert basis, in the order of [`FlagRingClass::schubert_coordinates`].
pub const SCHUBERT_BASIS: [&str; 6] = ["1", "y1", "y1+y2", "y1^2", "y1y2", "y1^2y2"];

impl FlagRingClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, Rational::one())
    }

    pub fn y1() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn y2() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn y3() -> Self {
        -(Self::y1() + Self::y2())
    }

    /// `c · y₁^a y₂^b`, reduced.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        let mut out = Self::zero();
        out.push(a, b, c);
        out
    }

    fn push(&mut self, a: u32, b: u32, c: Rational) {
        if c.is_zero() || a + b > 3 {
            return;
        }
        if b >= 2 {
            // y₂² = −y₁² − y₁y₂
            self.push(a + 2, b - 2, -c.clone());
            self.push(a + 1, b - 1, -c);
            return;
        }
        if a >= 3 {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), q) in &self.terms {
            out.push(a, b, q * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Coefficient of the orientation class `y₁²y₂`.
    pub fn integral(&self) -> Rational {
        self.coefficient(2, 1)
    }

    /// Coordinates on `1, y₁, y₁+y₂, y₁², y₁y₂, y₁²y₂`.
    pub fn schubert_coordinates(&self) -> [Rational; 6] {
        let c = |a, b| self.coefficient(a, b);
        [c(0, 0), c(1, 0) - c(0, 1), c(0, 1), c(2, 0), c(1, 1), c(2, 1)]
    }
}

impl Add for FlagRingClass {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for ((a, b), c) in rhs.terms {
            self.push(a, b, c);
        }
        self
    }
}

impl Neg for FlagRingClass {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Sub for FlagRingClass {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &FlagRingClass {
    type Output = FlagRingClass;

    fn mul(self, rhs: &FlagRingClass) -> FlagRingClass {
        let mut out = FlagRingClass::zero();
        for (&(a, b), p) in &self.terms {
            for (&(c, d), q) in &rhs.terms {
                out.push(a + c, b + d, p * q);
            }
        }
        out
    }
}

impl fmt::Display for FlagRingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.schubert_coordinates();
        let terms: Vec<String> = coords
            .iter()
            .zip(SCHUBERT_BASIS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| format!("{} · ({name})", format_rational(c)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `*y₁ = λy₁² + μy₁y₂` from [`lambda_mu_coefficients`].
pub fn star_y1_expansion(params: &MetricParams) -> Result<FlagRingClass> {
    let (lambda, mu) = lambda_mu_coefficients(params)?;
    Ok(FlagRingClass::monomial(2, 0, lambda) + FlagRingClass::monomial(1, 1, mu))
}

/// Everything the worked example reports, in printable form.
#[derive(Clone, Debug, Serialize)]
pub struct FlagExample {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub vol: String,
    pub lambda: String,
    /// Derived inside the invariant-form model.
    pub mu: String,
    pub kahler: bool,
    pub star_h1: String,
    pub star_y1: String,
    /// `λ ≠ 0`: `*y₁` is not a multiple of the dual class `y₁y₂`.
    pub proportional_to_dual: bool,
}

pub fn flag_example(params: &MetricParams) -> Result<FlagExample> {
    let [h1, _, _] = harmonic_representatives();
    let (lambda, mu) = lambda_mu_coefficients(params)?;
    Ok(FlagExample {
        alpha: format_rational(&params.alpha),
        beta: format_rational(&params.beta),
        gamma: format_rational(&params.gamma),
        vol: format_rational(&params.vol),
        lambda: format_rational(&lambda),
        mu: format_rational(&mu),
        kahler: kahler_check(params),
        star_h1: star_two_form(params, &h1)?.to_string(),
        star_y1: star_y1_expansion(params)?.to_string(),
        proportional_to_dual: lambda.is_zero(),
    })
}
