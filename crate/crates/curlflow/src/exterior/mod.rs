//! Exterior calculus on ℝ³ with the Euclidean metric: wedge product,
//! exterior derivative, Hodge star, interior product, and the
//! constructive homotopy operator inverting d on closed forms.
//!
//! Component conventions (fixed throughout):
//!   degree 0: (1)
//!   degree 1: (dx, dy, dz)
//!   degree 2: (dy∧dz, dz∧dx, dx∧dy)
//!   degree 3: (dx∧dy∧dz), the positive orientation
//!
//! The degree-2 basis order makes curl, Hodge star and ι_vΩ share one
//! component layout.

mod homotopy;

pub use homotopy::{homotopy_operator, homotopy_potential, pullback_scaling, TimeForm, TimePoly};

use crate::analysis::VecField;
use crate::symbolic::Laurent;
use thiserror::Error;

/// Failures of exterior-calculus operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("operation would exceed degree 3")]
    DegreeOverflow,
    #[error("operation needs a form of higher degree")]
    DegreeUnderflow,
    #[error("operation requires polynomial coefficients (no negative exponents)")]
    LaurentNotSupported,
    #[error("form is not closed")]
    NotClosed,
}

/// Number of components of a degree-k form on ℝ³.
pub const fn component_count(degree: usize) -> usize {
    match degree {
        0 | 3 => 1,
        1 | 2 => 3,
        _ => 0,
    }
}

/// A differential form of degree 0–3 with Laurent coefficients, stored in
/// the fixed basis order above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffForm {
    degree: usize,
    comps: Vec<Laurent>,
}

impl DiffForm {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 3, "degree out of range");
        DiffForm {
            degree,
            comps: vec![Laurent::zero(); component_count(degree)],
        }
    }

    /// A 0-form (scalar function).
    pub fn scalar(f: Laurent) -> Self {
        DiffForm {
            degree: 0,
            comps: vec![f],
        }
    }

    /// a·dx + b·dy + c·dz.
    pub fn one_form(comps: [Laurent; 3]) -> Self {
        DiffForm {
            degree: 1,
            comps: comps.into(),
        }
    }

    /// p·dy∧dz + q·dz∧dx + r·dx∧dy.
    pub fn two_form(comps: [Laurent; 3]) -> Self {
        DiffForm {
            degree: 2,
            comps: comps.into(),
        }
    }

    /// f·dx∧dy∧dz.
    pub fn volume_form(f: Laurent) -> Self {
        DiffForm {
            degree: 3,
            comps: vec![f],
        }
    }

    /// The one-form v₁dx + v₂dy + v₃dz with the components of `v`.
    pub fn from_vector(v: &VecField) -> Self {
        DiffForm::one_form(v.components().clone())
    }

    /// The flux two-form ι_vΩ = v₁dy∧dz + v₂dz∧dx + v₃dx∧dy.
    pub fn flux(v: &VecField) -> Self {
        DiffForm::two_form(v.components().clone())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn component(&self, i: usize) -> &Laurent {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Laurent] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Laurent::is_zero)
    }

    /// True when every coefficient is polynomial (no negative exponents).
    pub fn is_polynomial(&self) -> bool {
        self.comps.iter().all(Laurent::is_polynomial)
    }

    pub fn scale(&self, f: &Laurent) -> DiffForm {
        DiffForm {
            degree: self.degree,
            comps: self.comps.iter().map(|c| c * f).collect(),
        }
    }

    pub fn add(&self, rhs: &DiffForm) -> DiffForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        DiffForm {
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &DiffForm) -> DiffForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        DiffForm {
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn three(&self) -> [&Laurent; 3] {
        [&self.comps[0], &self.comps[1], &self.comps[2]]
    }
}

/// Graded-anticommutative wedge product in canonical basis order.
///
/// Degrees summing past 3 are rejected rather than silently returning
/// zero.
pub fn wedge(a: &DiffForm, b: &DiffForm) -> Result<DiffForm, ExteriorError> {
    let (da, db) = (a.degree, b.degree);
    if da + db > 3 {
        return Err(ExteriorError::DegreeOverflow);
    }
    if da == 0 {
        return Ok(b.scale(&a.comps[0]));
    }
    if db == 0 {
        return Ok(a.scale(&b.comps[0]));
    }
    let form = match (da, db) {
        // (a∧b) on the 2-form basis is precisely the cross product.
        (1, 1) => {
            let [ax, ay, az] = a.three();
            let [bx, by, bz] = b.three();
            DiffForm::two_form([
                &(ay * bz) - &(az * by),
                &(az * bx) - &(ax * bz),
                &(ax * by) - &(ay * bx),
            ])
        }
        // A 1-form against a 2-form contracts like a dot product.
        (1, 2) | (2, 1) => {
            let mut vol = Laurent::zero();
            for i in 0..3 {
                vol = &vol + &(&a.comps[i] * &b.comps[i]);
            }
            DiffForm::volume_form(vol)
        }
        _ => unreachable!("degree pairs covered above"),
    };
    Ok(form)
}

/// Exact exterior derivative. d of a degree-3 form is rejected to surface
/// user errors (it could only be zero).
pub fn exterior_derivative(w: &DiffForm) -> Result<DiffForm, ExteriorError> {
    match w.degree {
        0 => {
            let f = &w.comps[0];
            Ok(DiffForm::one_form([
                f.partial(0),
                f.partial(1),
                f.partial(2),
            ]))
        }
        1 => {
            let [ax, ay, az] = w.three();
            Ok(DiffForm::two_form([
                &az.partial(1) - &ay.partial(2),
                &ax.partial(2) - &az.partial(0),
                &ay.partial(0) - &ax.partial(1),
            ]))
        }
        2 => {
            let [p, q, r] = w.three();
            Ok(DiffForm::volume_form(
                &(&p.partial(0) + &q.partial(1)) + &r.partial(2),
            ))
        }
        _ => Err(ExteriorError::DegreeOverflow),
    }
}

/// Hodge star for the Euclidean metric and positive orientation
/// dx∧dy∧dz. With the fixed basis orders the component vector is carried
/// over unchanged; only the degree flips (0↔3, 1↔2), so ★★ = identity in
/// every degree.
pub fn hodge_star(w: &DiffForm) -> DiffForm {
    DiffForm {
        degree: 3 - w.degree,
        comps: w.comps.clone(),
    }
}

/// Interior product (contraction in the first slot) of a vector field
/// with a form of degree ≥ 1.
pub fn interior_product(v: &VecField, w: &DiffForm) -> Result<DiffForm, ExteriorError> {
    let [vx, vy, vz] = v.components();
    match w.degree {
        0 => Err(ExteriorError::DegreeUnderflow),
        1 => {
            let mut out = Laurent::zero();
            for i in 0..3 {
                out = &out + &(&w.comps[i] * &v.components()[i]);
            }
            Ok(DiffForm::scalar(out))
        }
        2 => {
            // ι_v(B₁dy∧dz + B₂dz∧dx + B₃dx∧dy) = B × v on the 1-form basis.
            let [b1, b2, b3] = w.three();
            Ok(DiffForm::one_form([
                &(b2 * vz) - &(b3 * vy),
                &(b3 * vx) - &(b1 * vz),
                &(b1 * vy) - &(b2 * vx),
            ]))
        }
        3 => {
            let f = &w.comps[0];
            Ok(DiffForm::two_form([f * vx, f * vy, f * vz]))
        }
        _ => unreachable!("degree bounded at construction"),
    }
}

#[cfg(test)]
mod tests;
