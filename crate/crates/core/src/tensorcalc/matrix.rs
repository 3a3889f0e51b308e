//! 3×3 matrices of polynomials and the matrix differential operators acting on them.
//!
//! `Curl` and `Di` act row-wise: row `i` of `Curl P` is `curl` of row `i` of `P`, and
//! component `i` of `Di P` is `div` of row `i`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use nalgebra::{Matrix3, Vector3};
use num_rational::Rational64;

use super::poly::{Axis, CompiledPoly, Poly3};

pub type PolyVector = [Poly3; 3];

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    pub entries: [[Poly3; 3]; 3],
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

impl PolyMatrix {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Poly3) -> Self {
        Self {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar_identity(&Poly3::one())
    }

    /// The spherical field `λ 𝟙`.
    pub fn scalar_identity(lambda: &Poly3) -> Self {
        Self::from_fn(|i, j| if i == j { lambda.clone() } else { Poly3::zero() })
    }

    /// Constant matrix with exact rational entries.
    pub fn constant(values: [[Rational64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| Poly3::constant(values[i][j]))
    }

    /// Every row equal to `row`.
    pub fn repeated_row(row: &PolyVector) -> Self {
        Self::from_fn(|_, j| row[j].clone())
    }

    /// The Jacobian `D u` of a vector field: row `i` is `∇u_i`.
    pub fn gradient_rows(u: &PolyVector) -> Self {
        Self::from_fn(|i, j| u[i].diff(Axis::ALL[j]))
    }

    /// `Anti(v)` for a polynomial vector, so that `Anti(v) w = v × w`.
    pub fn anti(v: &PolyVector) -> Self {
        let z = Poly3::zero;
        Self {
            entries: [
                [z(), -&v[2], v[1].clone()],
                [v[2].clone(), z(), -&v[0]],
                [-&v[1], v[0].clone(), z()],
            ],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly3 {
        &self.entries[i][j]
    }

    pub fn map(&self, f: impl Fn(&Poly3) -> Poly3) -> Self {
        Self::from_fn(|i, j| f(&self.entries[i][j]))
    }

    pub fn scale(&self, s: Rational64) -> Self {
        self.map(|p| p.scale(s))
    }

    /// Multiplies every entry by the scalar polynomial `p`.
    pub fn scale_poly(&self, p: &Poly3) -> Self {
        self.map(|e| e * p)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly3::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn sym(&self) -> Self {
        (self + &self.transpose()).scale(half())
    }

    pub fn skew(&self) -> Self {
        (self - &self.transpose()).scale(half())
    }

    pub fn trace(&self) -> Poly3 {
        &(&self.entries[0][0] + &self.entries[1][1]) + &self.entries[2][2]
    }

    /// `dev P = P - tr(P)/3 𝟙`.
    pub fn dev(&self) -> Self {
        let t = self.trace().scale(Rational64::new(1, 3));
        self - &Self::scalar_identity(&t)
    }

    /// Row-wise curl.
    pub fn curl(&self) -> Self {
        Self {
            entries: std::array::from_fn(|i| curl(&self.entries[i])),
        }
    }

    /// Row-wise divergence, the `Di` operator.
    pub fn div(&self) -> PolyVector {
        std::array::from_fn(|i| div(&self.entries[i]))
    }

    /// `di Di P`.
    pub fn div_div(&self) -> Poly3 {
        div(&self.div())
    }

    pub fn sym_curl(&self) -> Self {
        self.curl().sym()
    }

    /// The strong-form operator `sym P + Curl(sym Curl P)`.
    pub fn strong_operator(&self) -> Self {
        &self.sym() + &self.sym_curl().curl()
    }

    /// Maximum total degree over all entries; `None` for the zero matrix.
    pub fn degree(&self) -> Option<u32> {
        self.entries.iter().flatten().filter_map(Poly3::degree).max()
    }

    pub fn eval(&self, p: &Vector3<f64>) -> Matrix3<f64> {
        Matrix3::from_fn(|i, j| self.entries[i][j].eval(p))
    }

    pub fn compile(&self) -> CompiledMatrix {
        CompiledMatrix {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].compile())),
        }
    }
}

/// `curl v = ∇ × v`.
pub fn curl(v: &PolyVector) -> PolyVector {
    use Axis::*;
    [
        &v[2].diff(Y) - &v[1].diff(Z),
        &v[0].diff(Z) - &v[2].diff(X),
        &v[1].diff(X) - &v[0].diff(Y),
    ]
}

pub fn div(v: &PolyVector) -> Poly3 {
    Axis::ALL
        .iter()
        .zip(v.iter())
        .fold(Poly3::zero(), |acc, (a, p)| &acc + &p.diff(*a))
}

/// Floating-point image of a [`PolyMatrix`].
#[derive(Debug, Clone, Default)]
pub struct CompiledMatrix {
    entries: [[CompiledPoly; 3]; 3],
}

impl CompiledMatrix {
    pub fn eval(&self, p: &Vector3<f64>) -> Matrix3<f64> {
        Matrix3::from_fn(|i, j| self.entries[i][j].eval(p))
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(|i, j| &self.entries[i][j] + &rhs.entries[i][j])
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(|i, j| &self.entries[i][j] - &rhs.entries[i][j])
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
            if i < 2 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
