//! The three analytical benchmark fields on `Ω = [-1, 1]³`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::tensorcalc::{PiecewiseField, Poly3, PolyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Benchmark {
    /// Smooth rotational field vanishing at `x = ±1`.
    Vortex,
    /// `e₁ ⊗ e₁` for `x < 0`, zero otherwise: only the normal part jumps.
    NormalJump,
    /// `𝟙` for `x < 0`, zero otherwise.
    IdentityJump,
}

impl Benchmark {
    pub const ALL: [Benchmark; 3] = [Benchmark::Vortex, Benchmark::NormalJump, Benchmark::IdentityJump];

    pub fn name(self) -> &'static str {
        match self {
            Benchmark::Vortex => "vortex",
            Benchmark::NormalJump => "normal-jump",
            Benchmark::IdentityJump => "identity-jump",
        }
    }

    pub fn case(self) -> BenchmarkCase {
        match self {
            Benchmark::Vortex => {
                let exact = vortex_field();
                let moment = exact.strong_operator();
                BenchmarkCase {
                    benchmark: self,
                    exact: PiecewiseField::Smooth(exact),
                    moment: PiecewiseField::Smooth(moment),
                    smoothness: Smoothness::H1,
                }
            }
            Benchmark::NormalJump => {
                let mut e11 = PolyMatrix::zero();
                e11.entries[0][0] = Poly3::one();
                jump_case(self, e11, Smoothness::HCurl)
            }
            Benchmark::IdentityJump => jump_case(self, PolyMatrix::identity(), Smoothness::HSymCurl),
        }
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Benchmark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Benchmark::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown benchmark `{s}`")))
    }
}

/// The smallest of the three spaces the exact field belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    H1,
    HCurl,
    HSymCurl,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkCase {
    pub benchmark: Benchmark,
    /// The exact solution `P̃`, also the Dirichlet data.
    pub exact: PiecewiseField,
    /// The load `M = sym P̃ + Curl(sym Curl P̃)`.
    pub moment: PiecewiseField,
    pub smoothness: Smoothness,
}

pub fn make_case(name: &str) -> Result<BenchmarkCase> {
    Ok(name.parse::<Benchmark>()?.case())
}

fn jump_case(benchmark: Benchmark, negative: PolyMatrix, smoothness: Smoothness) -> BenchmarkCase {
    // piecewise constant, so sym Curl vanishes on each piece and M = P̃
    let exact = PiecewiseField::SplitX {
        negative,
        otherwise: PolyMatrix::zero(),
    };
    BenchmarkCase {
        benchmark,
        moment: exact.clone(),
        exact,
        smoothness,
    }
}

/// `(1 - x)(1 + x)` times the row `(-y - z, x, x)` in each of the three rows.
pub fn vortex_field() -> PolyMatrix {
    let x = Poly3::x();
    let bubble = &Poly3::one() - &(&x * &x);
    let row = [
        &bubble * &(-(&Poly3::y() + &Poly3::z())),
        &bubble * &x,
        &bubble * &x,
    ];
    PolyMatrix::repeated_row(&row)
}

/// The vortex load written out entry by entry, independent of the operator algebra.
pub fn vortex_moment_reference() -> PolyMatrix {
    let t = |c: i64, d: i64, a: u32, b: u32, e: u32| Poly3::monomial(Rational64::new(c, d), [a, b, e]);
    let sum = |terms: Vec<Poly3>| terms.into_iter().fold(Poly3::zero(), |acc, p| acc + p);
    // ½(x²y - x³ + x²z + k x - y - z)
    let off = |k: i64| {
        sum(vec![
            t(1, 2, 2, 1, 0),
            t(-1, 2, 3, 0, 0),
            t(1, 2, 2, 0, 1),
            t(k, 2, 1, 0, 0),
            t(-1, 2, 0, 1, 0),
            t(-1, 2, 0, 0, 1),
        ])
    };
    let m11 = sum(vec![t(1, 1, 2, 1, 0), t(1, 1, 2, 0, 1), t(-1, 1, 0, 1, 0), t(-1, 1, 0, 0, 1)]);
    let diag = sum(vec![t(-1, 1, 3, 0, 0), t(1, 1, 1, 0, 0)]);
    let cross = sum(vec![t(-1, 1, 3, 0, 0), t(9, 1, 1, 0, 0)]);
    PolyMatrix {
        entries: [
            [m11, off(9), off(9)],
            [off(1), diag.clone(), cross.clone()],
            [off(1), cross, diag],
        ],
    }
}

/// Entries `(i, j)` where the computed vortex load differs from the written-out one.
pub fn vortex_moment_mismatches() -> Vec<(usize, usize)> {
    let computed = vortex_field().strong_operator();
    let reference = vortex_moment_reference();
    (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| computed.get(i, j) != reference.get(i, j))
        .collect()
}
