use approx::assert_relative_eq;
use num_bigint::BigUint;

use ribbon_census::bounds::{
    catalan_exact, catalan_table, construction_bound, derived_params, euler_char_moduli,
    gap_report, global_bound, ln_biguint, verify_chain, verify_sweep, BoundParams, Rounding,
    SystoleChoice, DEFAULT_DIGIT_CAP,
};
use ribbon_census::oracle::catalan_recurrence;

#[test]
fn catalan_forms_agree() {
    let rec = catalan_recurrence(300);
    assert_eq!(catalan_table(300), rec);
    for (n, c) in rec.iter().enumerate() {
        assert_eq!(&catalan_exact(n as u64), c);
    }
}

#[test]
fn binomial_identity() {
    for n in [0u64, 1, 7, 40, 333] {
        let binom: BigUint = (0..n).fold(BigUint::from(1u32), |acc, k| acc * (2 * n - k) / (k + 1));
        assert_eq!(catalan_exact(n) * (n + 1), binom);
    }
}

#[test]
fn exact_mode_at_a_small_bound() {
    let p = BoundParams::new(2, 0.0).unwrap();
    let exact = construction_bound(p, Rounding::Exact, DEFAULT_DIGIT_CAP).unwrap();
    let value = exact.exact.as_ref().unwrap();
    let log = construction_bound(p, Rounding::Real, 0).unwrap();
    assert_relative_eq!(ln_biguint(value), log.ln, max_relative = 1e-9);
    assert_eq!(exact.digits(), value.to_string().len() as u64);
}

#[test]
fn ceiled_never_below_real() {
    for g in [2u64, 3, 17] {
        for l in [0.1, 0.7, 2.3] {
            let p = BoundParams::new(g, l).unwrap();
            let real = construction_bound(p, Rounding::Real, 0).unwrap().ln;
            let ceiled = construction_bound(p, Rounding::Ceiled, 0).unwrap().ln;
            assert!(ceiled >= real);
        }
    }
}

#[test]
fn substitution_at_max_systole() {
    for g in [2u64, 10, 100] {
        let d = derived_params(BoundParams::at_max_systole(g).unwrap());
        let g = g as f64;
        assert_relative_eq!(d.v0, 5090.0 * g.powi(3), max_relative = 1e-12);
        assert_relative_eq!(d.g_gamma0, 15400.0 * g.powi(3), max_relative = 1e-12);
        assert_relative_eq!(d.deg0, 2f64.powf(1.25) * g.sqrt(), max_relative = 1e-12);
    }
}

#[test]
fn printed_edge_estimate_is_off_by_two() {
    // V0^(2 gGamma0) = (5090 g^3)^(30800 g^3), twice the printed exponent
    for g in [2u64, 50, 5000] {
        let r = verify_chain(BoundParams::at_max_systole(g).unwrap());
        let e = r.entry("b_item_printed").unwrap();
        assert!(!e.holds);
        assert_relative_eq!(e.lhs_ln, 2.0 * e.rhs_ln, max_relative = 1e-12);
    }
}

#[test]
fn relaxed_rotation_estimate_fails_everywhere() {
    // 2^(5/4) g^(1/2) * 5090 g^3 = 2^(5/2) * 2545 g^(7/2) and 2^(5/2) > 5.6
    let gb = global_bound(1000).unwrap();
    assert!(gb.c_item.ln > gb.c_item_relaxed.ln);
}

#[test]
fn sweep_orders_points_by_genus() {
    let s = verify_sweep(&[100, 2, 10, 10], SystoleChoice::Fixed(1.0)).unwrap();
    let gs: Vec<u64> = s.points.iter().map(|r| r.g).collect();
    assert_eq!(gs, vec![2, 10, 100]);
}

#[test]
fn euler_characteristic_known_values() {
    let chi = euler_char_moduli(5).unwrap();
    // B_10 = 5/66, so chi = 5/66 / 80
    assert_eq!(chi.to_string(), "1/1056");
}

#[test]
fn gap_rows_follow_input() {
    let r = gap_report(&[2, 3, 1000], 10.0).unwrap();
    assert_eq!(
        r.rows.iter().map(|x| x.g).collect::<Vec<_>>(),
        vec![2, 3, 1000]
    );
}
