//! Structure reports: the full analysis of one system, and the
//! verification of its declared features. Text and JSON output both
//! derive from the same report value.

use crate::analysis::{
    check_multiplier, curl, divergence, field_from_one_form, find_polynomial_integrals,
    frobenius_obstruction, helicity_density, is_first_integral, search_monomial_multiplier,
    verify_curl_potential, verify_decomposition, verify_nambu_rep, VecField,
};
use crate::exterior::{homotopy_potential, DiffForm};
use crate::parser::{render, render_laurent, SystemDef};
use crate::symbolic::{Laurent, LogFunc};
use serde::Serialize;
use std::fmt::Write as _;

/// The strongest structure verified for a flow, in decreasing order of
/// strength. A Nambu-Hamiltonian flow is in particular bi-Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// ẋ = (1/m)·∇H₁×∇H₂ verified exactly for a concrete pair.
    NambuHamiltonian,
    /// A first integral and a Jacobi last multiplier exist, but no Nambu
    /// pair was found within the search bounds.
    BiHamiltonianOnly,
    /// Divergence-free polynomial flow with a Hamiltonian one-form η
    /// (ẋ = ∇×η) from the homotopy operator, and no verified Nambu
    /// representation within search bounds.
    VectorHamiltonianOnly,
    Unclassified,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::NambuHamiltonian => "nambu_hamiltonian",
            Classification::BiHamiltonianOnly => "bi_hamiltonian_only",
            Classification::VectorHamiltonianOnly => "vector_hamiltonian_only",
            Classification::Unclassified => "unclassified",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IntegralReport {
    pub expression: String,
    pub verified: bool,
    /// Exact residual v·∇f (denominators cleared) when verification
    /// fails.
    pub residual: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    /// ι_vΩ = m·(J₁∧J₂) holds.
    pub matches: bool,
    /// The decomposition multiplier m (inverse of the Nambu multiplier).
    pub multiplier: String,
    pub j1_closed: bool,
    pub j2_closed: bool,
    pub j1_invariant: bool,
    pub j2_invariant: bool,
}

/// Everything `analyze` learned about a system.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub system: String,
    pub classification: Classification,
    pub divergence_free: bool,
    pub curl_vanishes: bool,
    pub frobenius_zero: bool,
    /// A·(∇×A) = 0, when a potential is declared.
    pub helicity_zero: Option<bool>,
    /// ∇×A reproduces the field, when a potential is declared.
    pub potential_verified: Option<bool>,
    /// ∇×η reproduces the field, when a one-form is declared.
    pub one_form_verified: Option<bool>,
    pub integrals_verified: Vec<IntegralReport>,
    pub nambu_verified: bool,
    pub nambu_hamiltonians: Option<[String; 2]>,
    pub nambu_multiplier: Option<String>,
    pub decomposition: Option<DecompositionReport>,
    pub discovered_integrals: Vec<String>,
    pub discovered_multipliers: Vec<String>,
    /// η with ẋ = ∇×η, when the vector-Hamiltonian route applies.
    pub hamiltonian_one_form: Option<[String; 3]>,
}

/// Full structural analysis of a system. `dmax` bounds the integral
/// ansatz degree and `bound` the monomial-multiplier scan; both must be
/// ≤ 6.
pub fn analyze(sys: &SystemDef, dmax: u32, bound: u32) -> AnalysisReport {
    let v = &sys.field;
    let vars = &sys.variables;

    let divergence_free = divergence(v).is_zero();
    let curl_vanishes = curl(v).is_zero();
    let frobenius_zero = frobenius_obstruction(v).is_zero();

    let helicity_zero = sys
        .potential
        .as_ref()
        .map(|a| helicity_density(a).is_zero());
    let potential_verified = sys
        .potential
        .as_ref()
        .map(|a| verify_curl_potential(v, a).holds);
    let one_form_verified = sys
        .one_form
        .as_ref()
        .map(|eta| field_from_one_form(eta) == *v);

    let mut integrals_verified = Vec::new();
    let mut verified_pool: Vec<LogFunc> = Vec::new();
    for f in &sys.integrals {
        let check = is_first_integral(v, f);
        integrals_verified.push(IntegralReport {
            expression: render(f, vars),
            verified: check.holds,
            residual: (!check.holds).then(|| render_laurent(&check.residual, vars)),
        });
        if check.holds {
            verified_pool.push(f.clone());
        }
    }

    let discovered =
        find_polynomial_integrals(v, dmax, true).expect("dmax validated by the caller");
    let discovered_integrals: Vec<String> = discovered.iter().map(|f| render(f, vars)).collect();
    verified_pool.extend(discovered.iter().cloned());

    let searched_multipliers =
        search_monomial_multiplier(v, bound).expect("bound validated by the caller");
    let discovered_multipliers: Vec<String> = searched_multipliers
        .iter()
        .map(|m| render_laurent(m, vars))
        .collect();

    // Multiplier candidates in preference order: the declared one, the
    // trivial one, then the scan results.
    let mut candidates: Vec<Laurent> = Vec::new();
    if let Some(m) = &sys.multiplier {
        candidates.push(m.clone());
    }
    let one = Laurent::one();
    if !candidates.contains(&one) {
        candidates.push(one);
    }
    for m in &searched_multipliers {
        if !candidates.contains(m) {
            candidates.push(m.clone());
        }
    }

    // Nambu search over ordered pairs from the verified pool; trying both
    // orders covers the overall sign.
    let mut nambu: Option<(LogFunc, LogFunc, Laurent)> = None;
    'outer: for (i, h1) in verified_pool.iter().enumerate() {
        for (j, h2) in verified_pool.iter().enumerate() {
            if i == j {
                continue;
            }
            for m in &candidates {
                if let Ok(check) = verify_nambu_rep(v, h1, h2, m) {
                    if check.holds {
                        nambu = Some((h1.clone(), h2.clone(), m.clone()));
                        break 'outer;
                    }
                }
            }
        }
    }

    let nambu_verified = nambu.is_some();
    let mut nambu_hamiltonians = None;
    let mut nambu_multiplier = None;
    let mut decomposition = None;
    if let Some((h1, h2, m)) = &nambu {
        nambu_hamiltonians = Some([render(h1, vars), render(h2, vars)]);
        nambu_multiplier = Some(render_laurent(m, vars));
        // m·v = ∇h₁×∇h₂ means ι_vΩ = m⁻¹·(dh₁∧dh₂): the decomposition
        // multiplier is the inverse of the Nambu multiplier.
        let m_dec = m.try_inverse().expect("nambu multipliers are invertible");
        let j1 = DiffForm::from_vector(&crate::analysis::gradient(h1));
        let j2 = DiffForm::from_vector(&crate::analysis::gradient(h2));
        let check = verify_decomposition(v, &j1, &j2, &m_dec).expect("m_dec is invertible");
        decomposition = Some(DecompositionReport {
            matches: check.matches,
            multiplier: render_laurent(&m_dec, vars),
            j1_closed: check.j1_closed,
            j2_closed: check.j2_closed,
            j1_invariant: check.j1_invariant,
            j2_invariant: check.j2_invariant,
        });
    }

    // A multiplier in the Jacobi-last-multiplier sense: declared and
    // passing, or any scan hit.
    let has_multiplier = sys
        .multiplier
        .as_ref()
        .map(|m| check_multiplier(v, m).verdict)
        .unwrap_or(false)
        || !searched_multipliers.is_empty();

    let mut hamiltonian_one_form = None;
    let classification = if nambu_verified {
        Classification::NambuHamiltonian
    } else if !verified_pool.is_empty() && has_multiplier {
        Classification::BiHamiltonianOnly
    } else if divergence_free && v.is_polynomial() {
        let eta_form = homotopy_potential(&DiffForm::flux(v))
            .expect("flux of a divergence-free polynomial field is closed");
        let eta = VecField::new([
            eta_form.component(0).clone(),
            eta_form.component(1).clone(),
            eta_form.component(2).clone(),
        ]);
        debug_assert_eq!(field_from_one_form(&eta), *v);
        hamiltonian_one_form = Some([
            render_laurent(eta.component(0), vars),
            render_laurent(eta.component(1), vars),
            render_laurent(eta.component(2), vars),
        ]);
        Classification::VectorHamiltonianOnly
    } else {
        Classification::Unclassified
    };

    AnalysisReport {
        system: sys.name.clone(),
        classification,
        divergence_free,
        curl_vanishes,
        frobenius_zero,
        helicity_zero,
        potential_verified,
        one_form_verified,
        integrals_verified,
        nambu_verified,
        nambu_hamiltonians,
        nambu_multiplier,
        decomposition,
        discovered_integrals,
        discovered_multipliers,
        hamiltonian_one_form,
    }
}

/// One declared-feature verification.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub label: String,
    pub passed: bool,
    pub residual: Option<String>,
}

/// Verification of the declared integrals, multiplier, and potential
/// only — no searches.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub system: String,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

pub fn verify(sys: &SystemDef) -> VerifyReport {
    let v = &sys.field;
    let vars = &sys.variables;
    let mut checks = Vec::new();

    for f in &sys.integrals {
        let check = is_first_integral(v, f);
        checks.push(CheckReport {
            label: format!("integral {}", render(f, vars)),
            passed: check.holds,
            residual: (!check.holds).then(|| render_laurent(&check.residual, vars)),
        });
    }
    if let Some(m) = &sys.multiplier {
        let report = check_multiplier(v, m);
        checks.push(CheckReport {
            label: format!("multiplier {}", render_laurent(m, vars)),
            passed: report.verdict,
            residual: (!report.verdict)
                .then(|| render_laurent(&report.divergence_residual, vars)),
        });
    }
    if let Some(a) = &sys.potential {
        let check = verify_curl_potential(v, a);
        checks.push(CheckReport {
            label: "potential reproduces the field under curl".to_string(),
            passed: check.holds,
            residual: (!check.holds).then(|| {
                format!(
                    "({}; {}; {})",
                    render_laurent(check.residual.component(0), vars),
                    render_laurent(check.residual.component(1), vars),
                    render_laurent(check.residual.component(2), vars),
                )
            }),
        });
    }

    let passed = checks.iter().all(|c| c.passed);
    VerifyReport {
        system: sys.name.clone(),
        checks,
        passed,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: {}", self.system);
        let _ = writeln!(s, "classification: {}", self.classification.as_str());
        let _ = writeln!(s, "divergence free: {}", yes_no(self.divergence_free));
        let _ = writeln!(s, "curl vanishes: {}", yes_no(self.curl_vanishes));
        let _ = writeln!(
            s,
            "frobenius obstruction zero: {}",
            yes_no(self.frobenius_zero)
        );
        if let Some(h) = self.helicity_zero {
            let _ = writeln!(s, "helicity density zero: {}", yes_no(h));
        }
        if let Some(p) = self.potential_verified {
            let _ = writeln!(s, "potential verified: {}", yes_no(p));
        }
        if let Some(o) = self.one_form_verified {
            let _ = writeln!(s, "one-form verified: {}", yes_no(o));
        }
        for r in &self.integrals_verified {
            match &r.residual {
                None => {
                    let _ = writeln!(s, "integral {}: verified", r.expression);
                }
                Some(res) => {
                    let _ = writeln!(s, "integral {}: FAILED, residual {}", r.expression, res);
                }
            }
        }
        if self.nambu_verified {
            let [h1, h2] = self.nambu_hamiltonians.as_ref().expect("set together");
            let m = self.nambu_multiplier.as_ref().expect("set together");
            let _ = writeln!(s, "nambu representation: m*v = grad(H1) x grad(H2)");
            let _ = writeln!(s, "  H1 = {h1}");
            let _ = writeln!(s, "  H2 = {h2}");
            let _ = writeln!(s, "  m  = {m}");
        } else {
            let _ = writeln!(s, "nambu representation: none found within bounds");
        }
        if let Some(d) = &self.decomposition {
            let _ = writeln!(
                s,
                "decomposition i_v(Omega) = m*(J1^J2): {} (m = {})",
                yes_no(d.matches),
                d.multiplier
            );
            let _ = writeln!(
                s,
                "  J1 closed: {}, J2 closed: {}, i_v J1 = 0: {}, i_v J2 = 0: {}",
                yes_no(d.j1_closed),
                yes_no(d.j2_closed),
                yes_no(d.j1_invariant),
                yes_no(d.j2_invariant)
            );
        }
        if self.discovered_integrals.is_empty() {
            let _ = writeln!(s, "discovered integrals: none");
        } else {
            let _ = writeln!(s, "discovered integrals:");
            for f in &self.discovered_integrals {
                let _ = writeln!(s, "  {f}");
            }
        }
        if !self.discovered_multipliers.is_empty() {
            let _ = writeln!(
                s,
                "discovered multipliers: {}",
                self.discovered_multipliers.join(", ")
            );
        }
        if let Some([e1, e2, e3]) = &self.hamiltonian_one_form {
            let _ = writeln!(s, "hamiltonian one-form eta (field = curl eta):");
            let _ = writeln!(s, "  eta_1 = {e1}");
            let _ = writeln!(s, "  eta_2 = {e2}");
            let _ = writeln!(s, "  eta_3 = {e3}");
        }
        s
    }
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "system: {}", self.system);
        if self.checks.is_empty() {
            let _ = writeln!(s, "nothing declared to verify");
        }
        for c in &self.checks {
            match &c.residual {
                None if c.passed => {
                    let _ = writeln!(s, "PASS {}", c.label);
                }
                Some(res) => {
                    let _ = writeln!(s, "FAIL {} (residual: {res})", c.label);
                }
                None => {
                    let _ = writeln!(s, "FAIL {}", c.label);
                }
            }
        }
        let _ = writeln!(s, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        s
    }
}
