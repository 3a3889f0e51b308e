//! Exact trivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use nalgebra::Vector3;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coordinate axis of the physical space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// Exponent triple `(a, b, c)` of the monomial `x^a y^b z^c`.
pub type Exponents = [u32; 3];

/// A polynomial in `x, y, z` kept in canonical form: no zero coefficients are stored,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly3 {
    terms: BTreeMap<Exponents, Rational64>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational64::one())
    }

    pub fn constant(c: Rational64) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational64::from_integer(c))
    }

    pub fn monomial(c: Rational64, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// The coordinate function of `axis`.
    pub fn var(axis: Axis) -> Self {
        let mut e = [0; 3];
        e[axis.index()] = 1;
        Self::monomial(Rational64::one(), e)
    }

    pub fn x() -> Self {
        Self::var(Axis::X)
    }

    pub fn y() -> Self {
        Self::var(Axis::Y)
    }

    pub fn z() -> Self {
        Self::var(Axis::Z)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; duplicates are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational64, Exponents)>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, c: Rational64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational64::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over the nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: Exponents) -> Rational64 {
        self.terms.get(&exps).copied().unwrap_or_else(Rational64::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0] + e[1] + e[2]).max()
    }

    pub fn scale(&self, s: Rational64) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, *c * s)).collect(),
        }
    }

    /// Formal partial derivative.
    pub fn diff(&self, axis: Axis) -> Self {
        let k = axis.index();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut de = *e;
            de[k] -= 1;
            out.add_term(de, *c * Rational64::from_integer(i64::from(e[k])));
        }
        out
    }

    pub fn gradient(&self) -> [Poly3; 3] {
        Axis::ALL.map(|a| self.diff(a))
    }

    pub fn eval(&self, p: &Vector3<f64>) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| rational_to_f64(*c) * monomial_value(e, p))
            .sum()
    }

    /// Converts to a floating-point evaluator for hot loops.
    pub fn compile(&self) -> CompiledPoly {
        CompiledPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, rational_to_f64(*c)))
                .collect(),
        }
    }
}

pub(crate) fn rational_to_f64(r: Rational64) -> f64 {
    r.to_f64().expect("rational coefficient representable as f64")
}

fn monomial_value(e: &Exponents, p: &Vector3<f64>) -> f64 {
    p.x.powi(e[0] as i32) * p.y.powi(e[1] as i32) * p.z.powi(e[2] as i32)
}

/// Floating-point image of a [`Poly3`].
#[derive(Debug, Clone, Default)]
pub struct CompiledPoly {
    terms: Vec<(Exponents, f64)>,
}

impl CompiledPoly {
    pub fn eval(&self, p: &Vector3<f64>) -> f64 {
        self.terms.iter().map(|(e, c)| c * monomial_value(e, p)).sum()
    }
}

impl From<i64> for Poly3 {
    fn from(c: i64) -> Self {
        Poly3::int(c)
    }
}

impl Add<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly3 {
    type Output = Poly3;
    fn add(mut self, rhs: Poly3) -> Poly3 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly3> for Poly3 {
    fn add_assign(&mut self, rhs: &Poly3) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, *c);
        }
    }
}

impl Sub<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly3 {
    type Output = Poly3;
    fn sub(mut self, rhs: Poly3) -> Poly3 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Poly3> for Poly3 {
    fn sub_assign(&mut self, rhs: &Poly3) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -*c);
        }
    }
}

impl Neg for &Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        self.scale(-Rational64::one())
    }
}

impl Neg for Poly3 {
    type Output = Poly3;
    fn neg(self) -> Poly3 {
        -&self
    }
}

impl Mul<&Poly3> for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], *ca * *cb);
            }
        }
        out
    }
}

impl Mul for Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: Poly3) -> Poly3 {
        &self * &rhs
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first reads more naturally
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&k| k == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            for (name, &k) in ["x", "y", "z"].iter().zip(e.iter()) {
                match k {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
