//! Matrix fields that are polynomial on each side of the plane `x = 0`.

use nalgebra::{Matrix3, Vector3};

use super::matrix::{CompiledMatrix, PolyMatrix};

/// Which polynomial piece of a [`PiecewiseField`] is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `x < 0`.
    Negative,
    /// Everything else, including the interface `x = 0`.
    Otherwise,
}

impl Branch {
    pub fn of(point: &Vector3<f64>) -> Self {
        if point.x < 0.0 {
            Branch::Negative
        } else {
            Branch::Otherwise
        }
    }
}

/// A matrix field on Ω, either one polynomial or two pieces split at `x = 0`.
///
/// Points on the interface belong to the `otherwise` piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiecewiseField {
    Smooth(PolyMatrix),
    SplitX { negative: PolyMatrix, otherwise: PolyMatrix },
}

impl PiecewiseField {
    pub fn piece(&self, branch: Branch) -> &PolyMatrix {
        match (self, branch) {
            (PiecewiseField::Smooth(p), _) => p,
            (PiecewiseField::SplitX { negative, .. }, Branch::Negative) => negative,
            (PiecewiseField::SplitX { otherwise, .. }, Branch::Otherwise) => otherwise,
        }
    }

    pub fn is_smooth(&self) -> bool {
        matches!(self, PiecewiseField::Smooth(_))
    }

    /// Applies `f` to every piece.
    pub fn map(&self, f: impl Fn(&PolyMatrix) -> PolyMatrix) -> Self {
        match self {
            PiecewiseField::Smooth(p) => PiecewiseField::Smooth(f(p)),
            PiecewiseField::SplitX { negative, otherwise } => PiecewiseField::SplitX {
                negative: f(negative),
                otherwise: f(otherwise),
            },
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            PiecewiseField::Smooth(p) => p.degree().unwrap_or(0),
            PiecewiseField::SplitX { negative, otherwise } => {
                negative.degree().unwrap_or(0).max(otherwise.degree().unwrap_or(0))
            }
        }
    }

    pub fn eval(&self, point: &Vector3<f64>) -> Matrix3<f64> {
        self.piece(Branch::of(point)).eval(point)
    }

    pub fn compile(&self) -> CompiledField {
        match self {
            PiecewiseField::Smooth(p) => {
                let c = p.compile();
                CompiledField { negative: c.clone(), otherwise: c }
            }
            PiecewiseField::SplitX { negative, otherwise } => CompiledField {
                negative: negative.compile(),
                otherwise: otherwise.compile(),
            },
        }
    }
}

/// Floating-point image of a [`PiecewiseField`].
#[derive(Debug, Clone)]
pub struct CompiledField {
    negative: CompiledMatrix,
    otherwise: CompiledMatrix,
}

impl CompiledField {
    pub fn eval(&self, point: &Vector3<f64>) -> Matrix3<f64> {
        self.eval_branch(Branch::of(point), point)
    }

    pub fn eval_branch(&self, branch: Branch, point: &Vector3<f64>) -> Matrix3<f64> {
        match branch {
            Branch::Negative => self.negative.eval(point),
            Branch::Otherwise => self.otherwise.eval(point),
        }
    }
}
