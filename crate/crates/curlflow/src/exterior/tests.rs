use super::*;
use crate::analysis::{curl, gradient};
use crate::parser::parse_expression;
use crate::sample;
use crate::symbolic::{Laurent, LogFunc};
use rand::Rng;

fn xyz() -> [String; 3] {
    ["x".into(), "y".into(), "z".into()]
}

fn lf(src: &str) -> LogFunc {
    parse_expression(src, &xyz(), &Default::default()).expect("test expression parses")
}

fn lau(src: &str) -> Laurent {
    lf(src).poly().clone()
}

fn one(a: &str, b: &str, c: &str) -> DiffForm {
    DiffForm::one_form([lau(a), lau(b), lau(c)])
}

fn two(a: &str, b: &str, c: &str) -> DiffForm {
    DiffForm::two_form([lau(a), lau(b), lau(c)])
}

fn vf(a: &str, b: &str, c: &str) -> VecField {
    VecField::new([lau(a), lau(b), lau(c)])
}

/// J₁ = z²dy − x²dx and J₂ = dz − (y²/z²)dx of the null-helicity flow.
fn null_helicity_pair() -> (DiffForm, DiffForm) {
    (one("-x^2", "z^2", "0"), one("-y^2*z^-2", "0", "1"))
}

#[test]
fn wedge_reproduces_null_helicity_two_form() {
    let (j1, j2) = null_helicity_pair();
    let product = wedge(&j1, &j2).unwrap();
    assert_eq!(product, two("z^2", "x^2", "y^2"));
}

#[test]
fn wedge_of_basis_form_with_itself_vanishes() {
    let dx = one("1", "0", "0");
    assert!(wedge(&dx, &dx).unwrap().is_zero());
}

#[test]
fn wedge_of_integral_differentials_is_flux_form() {
    // dI₁∧dI₂ for the superintegrable pair must equal ι_vΩ for
    // v = (y, z, xy).
    let di1 = DiffForm::from_vector(&gradient(&lf("x*z - 1/2*y^2 - 1/3*x^3")));
    let di2 = DiffForm::from_vector(&gradient(&lf("1/2*x^2 - z")));
    let product = wedge(&di1, &di2).unwrap();
    assert_eq!(product, two("y", "z", "x*y"));
}

#[test]
fn wedge_rejects_degree_overflow() {
    let a = two("1", "0", "0");
    let b = two("0", "1", "0");
    assert_eq!(wedge(&a, &b), Err(ExteriorError::DegreeOverflow));
}

#[test]
fn graded_anticommutativity_holds_exactly() {
    let mut rng = sample::rng(21);
    for _ in 0..40 {
        let da = rng.gen_range(0..=3usize);
        let db = rng.gen_range(0..=3 - da);
        let a = sample::laurent_form(&mut rng, da, 3, -2, 3);
        let b = sample::laurent_form(&mut rng, db, 3, -2, 3);
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        let expected = if (da * db) % 2 == 0 {
            ba
        } else {
            ba.scale(&Laurent::constant(crate::symbolic::rat_int(-1)))
        };
        assert_eq!(ab, expected);
    }
}

#[test]
fn exterior_derivative_of_j1_has_minus_two_z_component() {
    let (j1, _) = null_helicity_pair();
    let dj1 = exterior_derivative(&j1).unwrap();
    assert_eq!(dj1, two("-2*z", "0", "0"));
}

#[test]
fn exterior_derivative_of_deformed_integral() {
    let d = exterior_derivative(&DiffForm::scalar(lau("x*y + y*z + z*x"))).unwrap();
    assert_eq!(d, one("y + z", "x + z", "x + y"));
}

#[test]
fn d_squared_vanishes_on_scalars_and_one_forms() {
    let mut rng = sample::rng(22);
    for _ in 0..40 {
        let f = sample::laurent_form(&mut rng, 0, 4, -2, 3);
        assert!(exterior_derivative(&exterior_derivative(&f).unwrap())
            .unwrap()
            .is_zero());
        let a = sample::laurent_form(&mut rng, 1, 4, -2, 3);
        assert!(exterior_derivative(&exterior_derivative(&a).unwrap())
            .unwrap()
            .is_zero());
    }
}

#[test]
fn exterior_derivative_rejects_volume_forms() {
    let vol = DiffForm::volume_form(lau("x"));
    assert_eq!(exterior_derivative(&vol), Err(ExteriorError::DegreeOverflow));
}

#[test]
fn graded_leibniz_rule_holds_exactly() {
    let mut rng = sample::rng(23);
    for _ in 0..40 {
        let da = rng.gen_range(0..=1usize);
        let db = rng.gen_range(0..=2 - da);
        let a = sample::laurent_form(&mut rng, da, 3, -2, 3);
        let b = sample::laurent_form(&mut rng, db, 3, -2, 3);
        let lhs = exterior_derivative(&wedge(&a, &b).unwrap()).unwrap();
        let first = wedge(&exterior_derivative(&a).unwrap(), &b).unwrap();
        let mut second = wedge(&a, &exterior_derivative(&b).unwrap()).unwrap();
        if da % 2 == 1 {
            second = second.scale(&Laurent::constant(crate::symbolic::rat_int(-1)));
        }
        assert_eq!(lhs, first.add(&second));
    }
}

#[test]
fn hodge_star_of_basis_one_form() {
    let dx = one("1", "0", "0");
    assert_eq!(hodge_star(&dx), two("1", "0", "0"));
}

#[test]
fn hodge_star_of_curl_two_form_recovers_field_one_form() {
    // ★dα = (∇×A)·dx for the superintegrable vector potential.
    let a = vf(
        "1/4*z^2 - 1/4*x*y^2",
        "1/4*x^2*y - 1/2*y*z",
        "1/4*y^2 - 1/2*x*z",
    );
    let alpha = DiffForm::from_vector(&a);
    let star_d = hodge_star(&exterior_derivative(&alpha).unwrap());
    assert_eq!(star_d, one("y", "z", "x*y"));
}

#[test]
fn hodge_star_is_an_involution() {
    let mut rng = sample::rng(24);
    for degree in 0..=3usize {
        for _ in 0..10 {
            let w = sample::laurent_form(&mut rng, degree, 4, -2, 3);
            assert_eq!(hodge_star(&hodge_star(&w)), w);
        }
    }
}

#[test]
fn cartan_consistency_with_curl() {
    let mut rng = sample::rng(25);
    for _ in 0..30 {
        let a = sample::poly_vecfield(&mut rng, 4, 3);
        let lhs = hodge_star(&exterior_derivative(&DiffForm::from_vector(&a)).unwrap());
        assert_eq!(lhs, DiffForm::from_vector(&curl(&a)));
    }
}

#[test]
fn velocity_components_from_two_form_wedge() {
    // ★(dα ∧ dxᵢ) = vᵢ componentwise, for dα = ι_vΩ.
    let mut rng = sample::rng(26);
    for _ in 0..30 {
        let v = sample::laurent_vecfield(&mut rng, 3, -2, 3);
        let flux = DiffForm::flux(&v);
        let basis = [one("1", "0", "0"), one("0", "1", "0"), one("0", "0", "1")];
        for i in 0..3 {
            let wedge_i = wedge(&flux, &basis[i]).unwrap();
            assert_eq!(hodge_star(&wedge_i), DiffForm::scalar(v.component(i).clone()));
        }
    }
}

#[test]
fn interior_product_contracts_volume_form() {
    let v = vf("y", "z", "x*y");
    let omega = DiffForm::volume_form(Laurent::one());
    assert_eq!(interior_product(&v, &omega).unwrap(), two("y", "z", "x*y"));
}

#[test]
fn interior_product_annihilates_invariant_one_forms() {
    let v = vf("z^2", "x^2", "y^2");
    let (j1, j2) = null_helicity_pair();
    assert!(interior_product(&v, &j1).unwrap().is_zero());
    assert!(interior_product(&v, &j2).unwrap().is_zero());
}

#[test]
fn interior_product_is_nilpotent() {
    let mut rng = sample::rng(27);
    for _ in 0..30 {
        let v = sample::laurent_vecfield(&mut rng, 3, -2, 3);
        let w = sample::laurent_form(&mut rng, 2, 4, -2, 3);
        let once = interior_product(&v, &w).unwrap();
        assert!(interior_product(&v, &once).unwrap().is_zero());
    }
}

#[test]
fn interior_product_rejects_scalars() {
    let v = vf("1", "0", "0");
    let f = DiffForm::scalar(lau("x"));
    assert_eq!(interior_product(&v, &f), Err(ExteriorError::DegreeUnderflow));
}

#[test]
fn pullback_of_basis_one_form() {
    let dx = one("1", "0", "0");
    let pulled = pullback_scaling(&dx).unwrap();
    // Spatial part t·dx.
    assert_eq!(
        pulled.spatial_part()[0],
        TimePoly::from_coeffs(vec![Laurent::zero(), Laurent::one()])
    );
    assert!(pulled.spatial_part()[1].is_zero());
    assert!(pulled.spatial_part()[2].is_zero());
    // dt part is the 0-form x.
    let dt = pulled.dt_part().unwrap();
    assert_eq!(dt[0], TimePoly::from_coeffs(vec![lau("x")]));
}

#[test]
fn pullback_of_quadratic_two_form() {
    let w = two("0", "0", "y^2");
    let pulled = pullback_scaling(&w).unwrap();
    // Spatial part t⁴y²·dx∧dy.
    assert!(pulled.spatial_part()[0].is_zero());
    assert!(pulled.spatial_part()[1].is_zero());
    assert_eq!(pulled.spatial_part()[2].coefficient(4), lau("y^2"));
    // dt part t³(y³dx − xy²dy).
    let dt = pulled.dt_part().unwrap();
    assert_eq!(dt[0].coefficient(3), lau("y^3"));
    assert_eq!(dt[1].coefficient(3), lau("-x*y^2"));
    assert!(dt[2].is_zero());
}

#[test]
fn pullback_rejects_laurent_coefficients() {
    let w = one("y^2*z^-2", "0", "0");
    assert_eq!(pullback_scaling(&w), Err(ExteriorError::LaurentNotSupported));
}

#[test]
fn homotopy_potential_of_null_helicity_two_form() {
    // The closed two-form of the null-helicity flow has the exact
    // potential η = −¼((y³−x²z)dx + (z³−xy²)dy + (x³−z²y)dz).
    let w = two("z^2", "x^2", "y^2");
    let eta = homotopy_potential(&w).unwrap();
    let expected = one(
        "-1/4*y^3 + 1/4*x^2*z",
        "-1/4*z^3 + 1/4*x*y^2",
        "-1/4*x^3 + 1/4*y*z^2",
    );
    assert_eq!(eta, expected);
    assert_eq!(exterior_derivative(&eta).unwrap(), w);
}

#[test]
fn homotopy_potential_of_exact_monomial_form() {
    let w = one("2*x", "0", "0");
    let beta = homotopy_potential(&w).unwrap();
    assert_eq!(beta, DiffForm::scalar(lau("x^2")));
}

#[test]
fn homotopy_potential_inverts_d_on_random_exact_forms() {
    let mut rng = sample::rng(28);
    for _ in 0..50 {
        let beta0 = sample::poly_form(&mut rng, 1, 4, 4);
        let w = exterior_derivative(&beta0).unwrap();
        let beta = homotopy_potential(&w).unwrap();
        assert_eq!(exterior_derivative(&beta).unwrap(), w);
    }
}

#[test]
fn homotopy_potential_rejects_non_closed_forms() {
    let w = two("x", "0", "0");
    assert!(!exterior_derivative(&w).unwrap().is_zero());
    assert_eq!(homotopy_potential(&w), Err(ExteriorError::NotClosed));
}

#[test]
fn homotopy_identity_on_non_closed_forms() {
    // d(Dω) + D(dω) = ω for polynomial forms of degree ≥ 1; the scaling
    // homotopy is based at the origin, which kills the boundary term.
    let mut rng = sample::rng(29);
    for _ in 0..40 {
        let degree = rng.gen_range(1..=2usize);
        let w = sample::poly_form(&mut rng, degree, 4, 4);
        let left = exterior_derivative(&homotopy_operator(&w).unwrap()).unwrap();
        let right = homotopy_operator(&exterior_derivative(&w).unwrap()).unwrap();
        assert_eq!(left.add(&right), w);
    }
    // Degree 3: dω would overflow, but every 3-form is closed, so the
    // identity collapses to d(Dω) = ω.
    for _ in 0..20 {
        let w = sample::poly_form(&mut rng, 3, 4, 4);
        assert_eq!(
            exterior_derivative(&homotopy_operator(&w).unwrap()).unwrap(),
            w
        );
    }
}
