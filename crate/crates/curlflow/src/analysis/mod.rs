//! Structure analysis of 3D flows: vector-field operators, Jacobi/Nambu
//! and bi-Hamiltonian predicates and constructions, multiplier and
//! first-integral search, and decomposition verification.
//!
//! Everything is exact. Checks return their residual alongside the
//! verdict, so a failure is evidence rather than a bare boolean.

mod search;

pub use search::{find_polynomial_integrals, integral_ansatz_matrix, search_monomial_multiplier};

use crate::exterior::{exterior_derivative, interior_product, wedge, DiffForm};
use crate::symbolic::{EvalError, Laurent, LogFunc, VARS};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AnalysisError {
    /// Multipliers must be invertible Laurent elements (a nonzero
    /// rational times one monomial), so that 1/M stays exact.
    #[error("multiplier is not an invertible monomial")]
    NonInvertibleMultiplier,
    /// Exhaustive searches are capped to keep runtimes bounded.
    #[error("search bound {given} exceeds the maximum {max}")]
    BoundTooLarge { given: u32, max: u32 },
}

/// A 3-component vector of Laurent polynomials. Houses dynamics fields v,
/// vector potentials A, Poisson vectors J, and Hamiltonian one-form
/// coefficients η.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecField {
    components: [Laurent; VARS],
}

impl VecField {
    pub fn new(components: [Laurent; VARS]) -> Self {
        VecField { components }
    }

    pub fn zero() -> Self {
        VecField::new([Laurent::zero(), Laurent::zero(), Laurent::zero()])
    }

    pub fn component(&self, i: usize) -> &Laurent {
        &self.components[i]
    }

    pub fn components(&self) -> &[Laurent; VARS] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Laurent::is_zero)
    }

    pub fn is_polynomial(&self) -> bool {
        self.components.iter().all(Laurent::is_polynomial)
    }

    pub fn add(&self, rhs: &VecField) -> VecField {
        VecField::new([
            &self.components[0] + &rhs.components[0],
            &self.components[1] + &rhs.components[1],
            &self.components[2] + &rhs.components[2],
        ])
    }

    pub fn sub(&self, rhs: &VecField) -> VecField {
        VecField::new([
            &self.components[0] - &rhs.components[0],
            &self.components[1] - &rhs.components[1],
            &self.components[2] - &rhs.components[2],
        ])
    }

    pub fn neg(&self) -> VecField {
        VecField::new([
            -&self.components[0],
            -&self.components[1],
            -&self.components[2],
        ])
    }

    /// Componentwise multiplication by a scalar Laurent.
    pub fn scale(&self, f: &Laurent) -> VecField {
        VecField::new([
            &self.components[0] * f,
            &self.components[1] * f,
            &self.components[2] * f,
        ])
    }

    pub fn dot(&self, rhs: &VecField) -> Laurent {
        Laurent::dot(&self.components, &rhs.components)
    }

    pub fn cross(&self, rhs: &VecField) -> VecField {
        VecField::new(Laurent::cross(&self.components, &rhs.components))
    }

    /// Floating evaluation of all three components.
    pub fn eval(&self, point: &[f64; VARS]) -> Result<[f64; VARS], EvalError> {
        Ok([
            self.components[0].eval(point)?,
            self.components[1].eval(point)?,
            self.components[2].eval(point)?,
        ])
    }

    /// The exact Jacobian matrix ∂vᵢ/∂xⱼ.
    pub fn jacobian(&self) -> [[Laurent; VARS]; VARS] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.components[i].partial(j)))
    }
}

/// Gradient of a polynomial-plus-logarithm function; always a Laurent
/// vector since ∂(ln xᵢ)/∂xᵢ = xᵢ⁻¹.
pub fn gradient(f: &LogFunc) -> VecField {
    VecField::new(f.partials())
}

/// ∇·v, exactly.
pub fn divergence(v: &VecField) -> Laurent {
    let mut out = Laurent::zero();
    for i in 0..VARS {
        out = &out + &v.components[i].partial(i);
    }
    out
}

/// ∇×v, exactly.
pub fn curl(v: &VecField) -> VecField {
    let [vx, vy, vz] = &v.components;
    VecField::new([
        &vz.partial(1) - &vy.partial(2),
        &vx.partial(2) - &vz.partial(0),
        &vy.partial(0) - &vx.partial(1),
    ])
}

/// Helicity density A·(∇×A); its identical vanishing obstructs the Nambu
/// construction.
pub fn helicity_density(a: &VecField) -> Laurent {
    a.dot(&curl(a))
}

/// Frobenius integrability obstruction v·(∇×v). The verdict is invariant
/// under scaling: (μv)·∇×(μv) = μ²·(v·∇×v).
pub fn frobenius_obstruction(v: &VecField) -> Laurent {
    v.dot(&curl(v))
}

/// Verdict plus the exact residual that witnesses it.
#[derive(Debug, Clone)]
pub struct ResidualCheck {
    pub holds: bool,
    pub residual: Laurent,
}

impl ResidualCheck {
    fn from_residual(residual: Laurent) -> Self {
        ResidualCheck {
            holds: residual.is_zero(),
            residual,
        }
    }
}

/// Is f a first integral of v? The residual is v·∇f with monomial
/// denominators cleared.
pub fn is_first_integral(v: &VecField, f: &LogFunc) -> ResidualCheck {
    let residual = v.dot(&gradient(f)).clear_denominators();
    ResidualCheck::from_residual(residual)
}

/// Jacobi identity for a Poisson vector: J·(∇×J) = 0.
pub fn jacobi_identity_check(j: &VecField) -> ResidualCheck {
    ResidualCheck::from_residual(j.dot(&curl(j)))
}

/// Antisymmetric 3×3 Poisson matrix P building the Hamilton operator of
/// a Poisson vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonMatrix {
    entries: [[Laurent; VARS]; VARS],
}

impl PoissonMatrix {
    pub fn entry(&self, i: usize, k: usize) -> &Laurent {
        &self.entries[i][k]
    }

    pub fn entries(&self) -> &[[Laurent; VARS]; VARS] {
        &self.entries
    }

    /// P applied to a gradient (or any Laurent vector).
    pub fn apply(&self, w: &VecField) -> VecField {
        VecField::new(std::array::from_fn(|i| {
            let mut acc = Laurent::zero();
            for k in 0..VARS {
                acc = &acc + &(&self.entries[i][k] * w.component(k));
            }
            acc
        }))
    }
}

/// The Poisson matrix with entries P_ik = ε_ikm j_m, antisymmetric by
/// construction. With this sign convention P(j)·w = w × j; the first
/// displayed bi-Hamiltonian matrix of the superintegrable example is
/// exactly P(∇I₂).
pub fn poisson_matrix(j: &VecField) -> PoissonMatrix {
    let [j1, j2, j3] = &j.components;
    let zero = Laurent::zero;
    PoissonMatrix {
        entries: [
            [zero(), j3.clone(), -j2],
            [-j3, zero(), j1.clone()],
            [j2.clone(), -j1, zero()],
        ],
    }
}

/// Hamilton's equation for a Poisson vector: ẋ = J × ∇h.
pub fn hamiltonian_field(j: &VecField, h: &LogFunc) -> VecField {
    j.cross(&gradient(h))
}

/// The canonical Nambu bracket {f₁,f₂,f₃} = ∇f₁ · (∇f₂ × ∇f₃).
pub fn nambu_bracket(f1: &LogFunc, f2: &LogFunc, f3: &LogFunc) -> Laurent {
    gradient(f1).dot(&gradient(f2).cross(&gradient(f3)))
}

/// The Nambu-Hamiltonian vector field ẋ = ∇h₁ × ∇h₂. Its divergence
/// vanishes identically (Liouville).
pub fn nambu_field(h1: &LogFunc, h2: &LogFunc) -> VecField {
    gradient(h1).cross(&gradient(h2))
}

/// Verifies a Nambu representation with multiplier: m·v = ∇h₁ × ∇h₂,
/// equivalently v = (1/m)·∇h₁×∇h₂. The residual is a Laurent vector.
pub fn verify_nambu_rep(
    v: &VecField,
    h1: &LogFunc,
    h2: &LogFunc,
    m: &Laurent,
) -> Result<VectorResidualCheck, AnalysisError> {
    if !m.is_invertible() {
        return Err(AnalysisError::NonInvertibleMultiplier);
    }
    let residual = v.scale(m).sub(&nambu_field(h1, h2));
    Ok(VectorResidualCheck::from_residual(residual))
}

/// Verdict plus a vector residual.
#[derive(Debug, Clone)]
pub struct VectorResidualCheck {
    pub holds: bool,
    pub residual: VecField,
}

impl VectorResidualCheck {
    fn from_residual(residual: VecField) -> Self {
        VectorResidualCheck {
            holds: residual.is_zero(),
            residual,
        }
    }
}

/// Does ∇×a reproduce v? The residual is v − ∇×a.
pub fn verify_curl_potential(v: &VecField, a: &VecField) -> VectorResidualCheck {
    VectorResidualCheck::from_residual(v.sub(&curl(a)))
}

/// Gauge transform a ↦ a + ∇φ; the curl is unchanged.
pub fn gauge_transform(a: &VecField, phi: &LogFunc) -> VecField {
    a.add(&gradient(phi))
}

/// Result of checking a candidate decomposition ι_vΩ = m·(J₁∧J₂),
/// together with closedness and invariance of the one-forms.
#[derive(Debug, Clone)]
pub struct DecompositionCheck {
    /// m·(J₁∧J₂) = ι_vΩ holds exactly.
    pub matches: bool,
    /// The exact two-form residual m·(J₁∧J₂) − ι_vΩ.
    pub residual: DiffForm,
    pub j1_closed: bool,
    pub j2_closed: bool,
    /// ι_v J₁ = 0 and ι_v J₂ = 0.
    pub j1_invariant: bool,
    pub j2_invariant: bool,
}

/// Verifies ι_vΩ = m·(J₁∧J₂) for candidate one-forms and reports
/// closedness (dJᵢ = 0) and invariance (ι_vJᵢ = 0) alongside.
pub fn verify_decomposition(
    v: &VecField,
    j1: &DiffForm,
    j2: &DiffForm,
    m: &Laurent,
) -> Result<DecompositionCheck, AnalysisError> {
    assert_eq!(j1.degree(), 1, "J1 must be a one-form");
    assert_eq!(j2.degree(), 1, "J2 must be a one-form");
    if !m.is_invertible() {
        return Err(AnalysisError::NonInvertibleMultiplier);
    }
    let product = wedge(j1, j2).expect("1+1 ≤ 3").scale(m);
    let flux = DiffForm::flux(v);
    let residual = product.sub(&flux);
    let dj1 = exterior_derivative(j1).expect("degree 1");
    let dj2 = exterior_derivative(j2).expect("degree 1");
    let ij1 = interior_product(v, j1).expect("degree 1");
    let ij2 = interior_product(v, j2).expect("degree 1");
    Ok(DecompositionCheck {
        matches: residual.is_zero(),
        residual,
        j1_closed: dj1.is_zero(),
        j2_closed: dj2.is_zero(),
        j1_invariant: ij1.is_zero(),
        j2_invariant: ij2.is_zero(),
    })
}

/// Jacobi-last-multiplier check: is ∇·(m·v) = 0?
#[derive(Debug, Clone)]
pub struct MultiplierReport {
    pub multiplier: Laurent,
    pub divergence_residual: Laurent,
    pub verdict: bool,
}

/// Checks whether m makes m·v divergence free.
pub fn check_multiplier(v: &VecField, m: &Laurent) -> MultiplierReport {
    assert!(!m.is_zero(), "multiplier must be nonzero");
    let divergence_residual = divergence(&v.scale(m));
    MultiplierReport {
        multiplier: m.clone(),
        verdict: divergence_residual.is_zero(),
        divergence_residual,
    }
}

/// The vector Hamiltonian equations for a one-form η = η₁dx + η₂dy + η₃dz:
/// ẋ = −∂η₂/∂z + ∂η₃/∂y, ẏ = −∂η₃/∂x + ∂η₁/∂z, ż = −∂η₁/∂y + ∂η₂/∂x.
/// Equal to ∇×η.
pub fn field_from_one_form(eta: &VecField) -> VecField {
    let [e1, e2, e3] = &eta.components;
    VecField::new([
        &(-&e2.partial(2)) + &e3.partial(1),
        &(-&e3.partial(0)) + &e1.partial(2),
        &(-&e1.partial(1)) + &e2.partial(0),
    ])
}

/// The two Poisson descriptions of one flow built from a pair of
/// Hamiltonians and a multiplier.
#[derive(Debug, Clone)]
pub struct BiHamiltonianPair {
    /// Hamilton operator of J₁ = (1/m)∇f; satisfies p1·∇h = v.
    pub p1: PoissonMatrix,
    /// Hamilton operator of J₂ = −(1/m)∇h; satisfies p2·∇f = v.
    pub p2: PoissonMatrix,
    /// The common field v = J₁×∇h = J₂×∇f.
    pub field: VecField,
}

/// Builds the bi-Hamiltonian pair for ẋ = (1/m)·∇f×∇h. Both Poisson
/// vectors are gradients over a multiplier, so they satisfy the Jacobi
/// identity; p1 acts on ∇h and p2 on ∇f. In the ε_ikm convention the
/// matrices are P(−J₁) and P(−J₂) respectively, so that Pᵢ·∇(·) = Jᵢ×∇(·).
pub fn bihamiltonian_pair(
    f: &LogFunc,
    h: &LogFunc,
    m: &Laurent,
) -> Result<BiHamiltonianPair, AnalysisError> {
    let m_inv = m
        .try_inverse()
        .map_err(|_| AnalysisError::NonInvertibleMultiplier)?;
    let j1 = gradient(f).scale(&m_inv);
    let j2 = gradient(h).scale(&m_inv).neg();
    let field = hamiltonian_field(&j1, h);
    Ok(BiHamiltonianPair {
        p1: poisson_matrix(&j1.neg()),
        p2: poisson_matrix(&j2.neg()),
        field,
    })
}
