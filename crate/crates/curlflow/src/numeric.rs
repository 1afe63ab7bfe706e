//! Floating-point cross-validation of the exact symbolic results:
//! fixed-step RK4 trajectories, invariant-drift monitoring, variational
//! volume-preservation checks, and finite-difference audits of symbolic
//! derivatives.
//!
//! Fixed steps keep drift comparisons reproducible; tolerances quoted in
//! the tests were calibrated by step-halving, not asserted a priori.

use crate::analysis::{divergence, VecField};
use crate::symbolic::{EvalError, Laurent, LogFunc, VARS};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum NumericError {
    /// The trajectory reached a point where a Laurent coefficient has a
    /// pole (negative exponent at a zero coordinate).
    #[error("pole encountered at t = {t}")]
    PoleEncountered { t: f64 },
    /// Overflow or NaN in the state.
    #[error("non-finite state at t = {t}")]
    NonFiniteState { t: f64 },
    /// ln of a non-positive coordinate while evaluating an integral.
    #[error("logarithm of a non-positive coordinate at t = {t}")]
    LogOfNonPositive { t: f64 },
}

impl NumericError {
    fn from_eval(e: EvalError, t: f64) -> Self {
        match e {
            EvalError::PoleAtPoint { .. } => NumericError::PoleEncountered { t },
            EvalError::LogOfNonPositive { .. } => NumericError::LogOfNonPositive { t },
        }
    }
}

/// A fixed-step trajectory: strictly increasing times and matching
/// states.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<[f64; VARS]>,
    step: f64,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[[f64; VARS]] {
        &self.states
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn final_state(&self) -> [f64; VARS] {
        *self.states.last().expect("trajectory has an initial state")
    }
}

/// Observed drift of a claimed invariant along a trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct DriftReport {
    pub integral_name: String,
    pub initial_value: f64,
    pub max_abs_drift: f64,
    /// max_abs_drift / |initial_value| when the initial value is nonzero,
    /// otherwise the absolute drift.
    pub relative_drift: f64,
}

fn rk4_step<F>(f: &F, x: &[f64; VARS], dt: f64, t: f64) -> Result<[f64; VARS], NumericError>
where
    F: Fn(&[f64; VARS], f64) -> Result<[f64; VARS], NumericError>,
{
    let k1 = f(x, t)?;
    let mut x2 = *x;
    for i in 0..VARS {
        x2[i] = x[i] + 0.5 * dt * k1[i];
    }
    let k2 = f(&x2, t)?;
    let mut x3 = *x;
    for i in 0..VARS {
        x3[i] = x[i] + 0.5 * dt * k2[i];
    }
    let k3 = f(&x3, t)?;
    let mut x4 = *x;
    for i in 0..VARS {
        x4[i] = x[i] + dt * k3[i];
    }
    let k4 = f(&x4, t)?;
    let mut out = *x;
    for i in 0..VARS {
        out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    Ok(out)
}

/// Classical fixed-step 4th-order Runge-Kutta integration of ẋ = v(x)
/// from `x0` to (within one step of) `t_end`.
pub fn rk4_integrate(
    v: &VecField,
    x0: [f64; VARS],
    t_end: f64,
    dt: f64,
) -> Result<Trajectory, NumericError> {
    assert!(dt > 0.0, "dt must be positive");
    assert!(t_end > 0.0, "t_end must be positive");
    let steps = (t_end / dt).round().max(1.0) as usize;

    let eval = |x: &[f64; VARS], t: f64| -> Result<[f64; VARS], NumericError> {
        v.eval(x).map_err(|e| NumericError::from_eval(e, t))
    };

    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(0.0);
    states.push(x0);
    let mut x = x0;
    for n in 0..steps {
        let t = n as f64 * dt;
        x = rk4_step(&eval, &x, dt, t)?;
        let t_next = (n + 1) as f64 * dt;
        if !x.iter().all(|c| c.is_finite()) {
            return Err(NumericError::NonFiniteState { t: t_next });
        }
        times.push(t_next);
        states.push(x);
    }
    Ok(Trajectory {
        times,
        states,
        step: dt,
    })
}

/// Maximum deviation |f(x(t)) − f(x₀)| along a trajectory, absolute and
/// relative.
pub fn invariant_drift(
    traj: &Trajectory,
    f: &LogFunc,
    name: &str,
) -> Result<DriftReport, NumericError> {
    let x0 = traj.states[0];
    let initial_value = f.eval(&x0).map_err(|e| NumericError::from_eval(e, 0.0))?;
    let mut max_abs_drift = 0.0f64;
    for (x, t) in traj.states.iter().zip(&traj.times) {
        let value = f.eval(x).map_err(|e| NumericError::from_eval(e, *t))?;
        max_abs_drift = max_abs_drift.max((value - initial_value).abs());
    }
    let relative_drift = if initial_value != 0.0 {
        max_abs_drift / initial_value.abs()
    } else {
        max_abs_drift
    };
    Ok(DriftReport {
        integral_name: name.to_string(),
        initial_value,
        max_abs_drift,
        relative_drift,
    })
}

fn det3(m: &[[f64; VARS]; VARS]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Integrates the variational system J' = Dv(x)·J, J(0) = 1, alongside
/// the flow and the accumulated divergence V' = ∇·v(x), and returns
/// max over the trajectory of |det J(t) − exp(V(t))|.
///
/// For divergence-free fields this is the volume-preservation defect
/// max |det J − 1|.
pub fn variational_volume_check(
    v: &VecField,
    x0: [f64; VARS],
    t_end: f64,
    dt: f64,
) -> Result<f64, NumericError> {
    assert!(dt > 0.0, "dt must be positive");
    assert!(t_end > 0.0, "t_end must be positive");
    let steps = (t_end / dt).round().max(1.0) as usize;
    let jac = v.jacobian();
    let div = divergence(v);

    // Augmented state: x (3), J row-major (9), V (1).
    const N: usize = 13;
    let deriv = |s: &[f64; N], t: f64| -> Result<[f64; N], NumericError> {
        let x = [s[0], s[1], s[2]];
        let vx = v.eval(&x).map_err(|e| NumericError::from_eval(e, t))?;
        let mut dv = [[0.0; VARS]; VARS];
        for i in 0..VARS {
            for j in 0..VARS {
                dv[i][j] = jac[i][j]
                    .eval(&x)
                    .map_err(|e| NumericError::from_eval(e, t))?;
            }
        }
        let mut out = [0.0; N];
        out[..VARS].copy_from_slice(&vx);
        for i in 0..VARS {
            for j in 0..VARS {
                let mut acc = 0.0;
                for k in 0..VARS {
                    acc += dv[i][k] * s[3 + k * VARS + j];
                }
                out[3 + i * VARS + j] = acc;
            }
        }
        out[12] = div.eval(&x).map_err(|e| NumericError::from_eval(e, t))?;
        Ok(out)
    };

    let mut s = [0.0; N];
    s[..VARS].copy_from_slice(&x0);
    s[3] = 1.0;
    s[7] = 1.0;
    s[11] = 1.0;

    let step = |s: &[f64; N], t: f64| -> Result<[f64; N], NumericError> {
        let k1 = deriv(s, t)?;
        let mut s2 = *s;
        for i in 0..N {
            s2[i] = s[i] + 0.5 * dt * k1[i];
        }
        let k2 = deriv(&s2, t)?;
        let mut s3 = *s;
        for i in 0..N {
            s3[i] = s[i] + 0.5 * dt * k2[i];
        }
        let k3 = deriv(&s3, t)?;
        let mut s4 = *s;
        for i in 0..N {
            s4[i] = s[i] + dt * k3[i];
        }
        let k4 = deriv(&s4, t)?;
        let mut out = *s;
        for i in 0..N {
            out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        Ok(out)
    };

    let mut worst = 0.0f64;
    for n in 0..steps {
        let t = n as f64 * dt;
        s = step(&s, t)?;
        if !s.iter().all(|c| c.is_finite()) {
            return Err(NumericError::NonFiniteState { t: t + dt });
        }
        let j = [
            [s[3], s[4], s[5]],
            [s[6], s[7], s[8]],
            [s[9], s[10], s[11]],
        ];
        worst = worst.max((det3(&j) - s[12].exp()).abs());
    }
    Ok(worst)
}

/// Central-difference audit of the symbolic gradient: the maximum over
/// coordinates of |finite difference − symbolic partial| at `point`.
/// Expected O(h²) for smooth f.
pub fn fd_derivative_audit(
    f: &LogFunc,
    point: [f64; VARS],
    h: f64,
) -> Result<f64, NumericError> {
    assert!(h > 0.0, "step must be positive");
    let from_eval = |e: EvalError| NumericError::from_eval(e, 0.0);
    let mut worst = 0.0f64;
    for i in 0..VARS {
        let mut plus = point;
        plus[i] += h;
        let mut minus = point;
        minus[i] -= h;
        let fd = (f.eval(&plus).map_err(from_eval)? - f.eval(&minus).map_err(from_eval)?)
            / (2.0 * h);
        let exact: Laurent = f.partial(i);
        let sym = exact.eval(&point).map_err(from_eval)?;
        worst = worst.max((fd - sym).abs());
    }
    Ok(worst)
}
