//! The constructive homotopy operator for the scaling homotopy
//! F((x,y,z), t) = (tx, ty, tz) on ℝ³.
//!
//! A form pulled back along F lives on ℝ³ × [0,1] and splits uniquely as
//! ω = α₁ + α₂∧dt. The operator D_k integrates the dt-part,
//! D_k ω = (−1)^{k−1} ∫₀¹ α₂ dt, and satisfies
//! d(D_k F*ω) + D_{k+1}(d F*ω) = ω for degree ≥ 1, because the base point
//! (the origin) pulls every positive-degree form back to zero. On a
//! closed form this produces an exact potential: d(Dω) = ω.
//!
//! Coefficients must be polynomial: f(tx) would otherwise fail to be
//! polynomial in t and the t-integral may diverge.

use super::{component_count, DiffForm, ExteriorError};
use crate::symbolic::{Laurent, Rational};
use num_bigint::BigInt;

/// A polynomial in the homotopy parameter t with Laurent coefficients;
/// index = power of t. Trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TimePoly {
    coeffs: Vec<Laurent>,
}

impl TimePoly {
    pub fn zero() -> Self {
        TimePoly::default()
    }

    pub fn from_coeffs(coeffs: Vec<Laurent>) -> Self {
        let mut p = TimePoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Laurent::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of t^power.
    pub fn coefficient(&self, power: usize) -> Laurent {
        self.coeffs.get(power).cloned().unwrap_or_else(Laurent::zero)
    }

    /// Substitutes xᵢ → t·xᵢ into a polynomial Laurent: each term of
    /// total degree m picks up a factor t^m.
    fn substitute_scaling(f: &Laurent) -> TimePoly {
        let mut coeffs: Vec<Laurent> = Vec::new();
        for (m, c) in f.terms() {
            let deg = m.total_degree();
            debug_assert!(deg >= 0, "caller checks polynomiality");
            let deg = deg as usize;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Laurent::zero());
            }
            coeffs[deg] = &coeffs[deg] + &Laurent::term(*m, c.clone());
        }
        TimePoly::from_coeffs(coeffs)
    }

    /// Multiplication by t^n.
    fn shift(&self, n: usize) -> TimePoly {
        if self.is_zero() {
            return TimePoly::zero();
        }
        let mut coeffs = vec![Laurent::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        TimePoly { coeffs }
    }

    fn mul_laurent(&self, f: &Laurent) -> TimePoly {
        TimePoly::from_coeffs(self.coeffs.iter().map(|c| c * f).collect())
    }

    fn add(&self, rhs: &TimePoly) -> TimePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TimePoly::from_coeffs(
            (0..n)
                .map(|i| &self.coefficient(i) + &rhs.coefficient(i))
                .collect(),
        )
    }

    fn sub(&self, rhs: &TimePoly) -> TimePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TimePoly::from_coeffs(
            (0..n)
                .map(|i| &self.coefficient(i) - &rhs.coefficient(i))
                .collect(),
        )
    }

    fn neg(&self) -> TimePoly {
        TimePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// ∫₀¹ p(t) dt, exactly.
    fn integrate_unit(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (power, c) in self.coeffs.iter().enumerate() {
            let inv = Rational::new(BigInt::from(1), BigInt::from(power as i64 + 1));
            out = &out + &c.scale(&inv);
        }
        out
    }
}

/// A differential form on ℝ³ × [0,1] written as α₁ + α₂∧dt; the split is
/// unique. `spatial_part` has the degree of the original form, `dt_part`
/// one degree lower (absent for 0-forms, which cannot carry a dt term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeForm {
    degree: usize,
    spatial: Vec<TimePoly>,
    dt_part: Option<Vec<TimePoly>>,
}

impl TimeForm {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Components of α₁ in the canonical basis of its degree.
    pub fn spatial_part(&self) -> &[TimePoly] {
        &self.spatial
    }

    /// Components of α₂ (degree one lower), when present.
    pub fn dt_part(&self) -> Option<&[TimePoly]> {
        self.dt_part.as_deref()
    }
}

/// Pullback of a polynomial form along the scaling homotopy
/// F((x,y,z),t) = (tx,ty,tz): substitutes xᵢ → t·xᵢ and
/// dxᵢ → t·dxᵢ + xᵢ·dt, returning the unique α₁ + α₂∧dt split.
pub fn pullback_scaling(w: &DiffForm) -> Result<TimeForm, ExteriorError> {
    if !w.is_polynomial() {
        return Err(ExteriorError::LaurentNotSupported);
    }
    let k = w.degree();
    let sub: Vec<TimePoly> = w
        .components()
        .iter()
        .map(TimePoly::substitute_scaling)
        .collect();

    let spatial: Vec<TimePoly> = sub.iter().map(|p| p.shift(k)).collect();

    // The dt-part collects one xᵢ·dt factor from each basis slot:
    // α₂ = (−1)^{k−1} t^{k−1} ι_X(f(tx)·dx_I) with X the position field.
    let dt_part = if k == 0 {
        None
    } else {
        let x = [Laurent::var(0), Laurent::var(1), Laurent::var(2)];
        let contracted: Vec<TimePoly> = match k {
            1 => {
                let mut acc = TimePoly::zero();
                for i in 0..3 {
                    acc = acc.add(&sub[i].mul_laurent(&x[i]));
                }
                vec![acc]
            }
            // ι_X(B) = B × X on the 1-form basis.
            2 => vec![
                sub[1].mul_laurent(&x[2]).sub(&sub[2].mul_laurent(&x[1])),
                sub[2].mul_laurent(&x[0]).sub(&sub[0].mul_laurent(&x[2])),
                sub[0].mul_laurent(&x[1]).sub(&sub[1].mul_laurent(&x[0])),
            ],
            3 => vec![
                sub[0].mul_laurent(&x[0]),
                sub[0].mul_laurent(&x[1]),
                sub[0].mul_laurent(&x[2]),
            ],
            _ => unreachable!("degree bounded at construction"),
        };
        let sign_negative = k % 2 == 0; // (−1)^{k−1}
        Some(
            contracted
                .iter()
                .map(|p| {
                    let shifted = p.shift(k - 1);
                    if sign_negative {
                        shifted.neg()
                    } else {
                        shifted
                    }
                })
                .collect(),
        )
    };

    Ok(TimeForm {
        degree: k,
        spatial,
        dt_part,
    })
}

/// The composite homotopy operator D_k ∘ F*: maps a polynomial k-form
/// (k ≥ 1) to a (k−1)-form. For any polynomial ω of degree ≥ 1,
/// d(Dω) + D(dω) = ω.
pub fn homotopy_operator(w: &DiffForm) -> Result<DiffForm, ExteriorError> {
    let k = w.degree();
    if k == 0 {
        return Err(ExteriorError::DegreeUnderflow);
    }
    let pulled = pullback_scaling(w)?;
    let alpha2 = pulled.dt_part().expect("degree ≥ 1 has a dt part");
    let sign_negative = k % 2 == 0; // (−1)^{k−1}
    let comps: Vec<Laurent> = alpha2
        .iter()
        .map(|p| {
            let integral = p.integrate_unit();
            if sign_negative {
                -&integral
            } else {
                integral
            }
        })
        .collect();
    debug_assert_eq!(comps.len(), component_count(k - 1));
    Ok(match k {
        1 => DiffForm::scalar(comps[0].clone()),
        2 => DiffForm::one_form([comps[0].clone(), comps[1].clone(), comps[2].clone()]),
        3 => DiffForm::two_form([comps[0].clone(), comps[1].clone(), comps[2].clone()]),
        _ => unreachable!(),
    })
}

/// Exact potential of a closed polynomial form: returns β of one lower
/// degree with dβ = w, via the homotopy operator. Closedness is checked
/// (degree-3 forms are always closed on ℝ³).
pub fn homotopy_potential(w: &DiffForm) -> Result<DiffForm, ExteriorError> {
    let k = w.degree();
    if k == 0 {
        return Err(ExteriorError::DegreeUnderflow);
    }
    if !w.is_polynomial() {
        return Err(ExteriorError::LaurentNotSupported);
    }
    if k <= 2 {
        let dw = super::exterior_derivative(w).expect("degree ≤ 2");
        if !dw.is_zero() {
            return Err(ExteriorError::NotClosed);
        }
    }
    let beta = homotopy_operator(w)?;
    debug_assert!(
        super::exterior_derivative(&beta)
            .map(|d| d == *w)
            .unwrap_or(false),
        "homotopy potential must invert d on closed forms"
    );
    Ok(beta)
}
