mod common;

use common::*;
use lexcoh::groebner::{gin, initial_ideal};
use lexcoh::lex::lex_ideal;
use lexcoh::localcoh::*;
use lexcoh::{GinOptions, Ideal, MonomialIdeal};
use proptest::prelude::*;

fn table_matches_oracle(ideal: &MonomialIdeal, table: &CohomologyTable) {
    let n = ideal.nvars();
    for k in 0..=n {
        for j in table.window().degrees() {
            assert_eq!(
                table.value(k, j),
                local_cohomology_dim(ideal, k, j) as i128,
                "h^{k}_{j} of R/{ideal}"
            );
        }
    }
}

#[test]
fn fixed_tables_match_the_taylor_oracle() {
    let cases = [
        mono(2, &[&[1, 1]]),
        mono(2, &[&[2, 0], &[1, 1]]),
        mono(3, &[&[1, 1, 0], &[0, 1, 1]]),
        mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 2]]),
        mono(3, &[]),
    ];
    let window = Window::new(-7, 2).unwrap();
    for i in &cases {
        table_matches_oracle(i, &cohomology_ext_monomial(i, window).unwrap());
        table_matches_oracle(i, &cohomology_layers(i, window).unwrap());
    }
}

#[test]
fn layer_route_is_total_but_wrong_off_scm() {
    // two skew lines: not sequentially Cohen-Macaulay
    let i = mono(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
    let window = Window::new(-7, 2).unwrap();
    let ext = cohomology_ext_monomial(&i, window).unwrap();
    table_matches_oracle(&i, &ext);
    let layers = cohomology_layers(&i, window).unwrap();
    assert!(!layers.same_rows(&ext));
    assert_eq!(layers.value(2, 0), -1);
    assert_eq!(ext.value(1, 0), 1);
}

#[test]
fn polynomial_route_matches_the_monomial_route_on_monomial_input() {
    let i = mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 2]]);
    let w = Window::new(-9, 3).unwrap();
    let poly = cohomology_ext_poly(&lexcoh::PolyIdeal::from_monomial(&i), w).unwrap();
    let closed = cohomology_ext_monomial(&i, w).unwrap();
    assert!(poly.same_rows(&closed));
}

fn opts() -> GinOptions {
    GinOptions::default()
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn closed_form_matches_the_taylor_oracle(i in monomial_ideal(3, 3, 4)) {
        let w = Window::new(-6, 1).unwrap();
        table_matches_oracle(&i, &cohomology_ext_monomial(&i, w).unwrap());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn routes_agree_on_weakly_stable_ideals(i in weakly_stable_ideal(4, 4, 5)) {
        let w = default_window(&Ideal::Monomial(i.clone()), &opts()).unwrap();
        let a = cohomology_layers(&i, w).unwrap();
        let b = cohomology_ext_monomial(&i, w).unwrap();
        prop_assert!(a.equal_on_window(&b));
        prop_assert!(a.same_rows(&b));
    }

    #[test]
    fn routes_agree_on_scm_monomial_ideals(i in monomial_ideal(4, 4, 5)) {
        let ideal = Ideal::Monomial(i.clone());
        prop_assume!(!i.is_unit() && is_scm(&ideal, &opts()).unwrap());
        let w = default_window(&ideal, &opts()).unwrap();
        prop_assert!(cohomology_layers(&i, w).unwrap().same_rows(&cohomology_ext_monomial(&i, w).unwrap()));
    }

    #[test]
    fn inequality_chain_and_cancellation_for_monomial_ideals(i in monomial_ideal(4, 4, 5)) {
        let ideal = Ideal::Monomial(i.clone());
        let g = gin(&ideal.as_poly(), &opts()).unwrap();
        let l = lex_ideal(&i).unwrap();
        let w = window_for(i.nvars(), &[&i, &g, &l]);
        let own = cohomology_ext_monomial(&i, w).unwrap();
        let generic = cohomology_ext_monomial(&g, w).unwrap();
        let lex = cohomology_ext_monomial(&l, w).unwrap();
        prop_assert_eq!(own.exceeds(&generic), None);
        prop_assert_eq!(generic.exceeds(&lex), None);
        for (a, b) in [(&own, &generic), (&own, &lex), (&generic, &lex)] {
            let witness = cancellation_witness(a, b).unwrap();
            prop_assert!(witness.verify(a, b));
        }
    }

    #[test]
    fn serre_identity_holds(i in monomial_ideal(4, 4, 5)) {
        let hilb = lexcoh::hilbert::hilbert_numerator(&i);
        let w = default_window(&Ideal::Monomial(i.clone()), &opts()).unwrap();
        for t in [cohomology_layers(&i, w).unwrap(), cohomology_ext_monomial(&i, w).unwrap()] {
            prop_assert_eq!(serre_check(&t, &hilb), Ok(()));
        }
    }

    #[test]
    fn saturation_changes_only_row_zero(i in monomial_ideal(4, 4, 5)) {
        let s = i.saturate_m();
        let w = window_for(i.nvars(), &[&i, &s]);
        let a = cohomology_ext_monomial(&i, w).unwrap();
        let b = cohomology_ext_monomial(&s, w).unwrap();
        prop_assert!(a.rows_equal_from(&b, 1));
        // row 0 of R/I^sat vanishes and row 0 of R/I is the series of I^sat/I
        prop_assert!(b.row_series(0).is_zero());
        let diff = lexcoh::hilbert::hilbert_numerator(&i).as_rational()
            .sub(&lexcoh::hilbert::hilbert_numerator(&s).as_rational());
        for j in w.degrees() {
            prop_assert_eq!(a.value(0, j), diff.coeff(j));
        }
    }

    #[test]
    fn layers_telescope_to_the_hilbert_series(i in monomial_ideal(4, 4, 5)) {
        prop_assume!(!i.is_unit());
        let bw = bw_polynomial(&i).unwrap();
        let hilb = lexcoh::hilbert::hilbert_numerator(&i).as_rational();
        prop_assert!(bw.series().same_function(&hilb));
        for (k, layer) in layer_hilbert(&i).unwrap().iter().enumerate() {
            prop_assert!(layer.is_zero() || layer.dimension() == k as i32);
        }
    }

    #[test]
    fn scm_levels_are_upward_closed_and_criteria_agree(i in monomial_ideal(4, 3, 4)) {
        prop_assume!(!i.is_unit());
        let ideal = Ideal::Monomial(i.clone());
        let mut previous = false;
        for level in 0..=i.nvars() {
            let (rows, layers) = scm_criteria(&ideal, level, &opts()).unwrap();
            prop_assert_eq!(Some(rows), layers);
            prop_assert!(!previous || rows);
            previous = rows;
        }
        prop_assert!(previous);
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn inequality_chain_for_sparse_ideals(j in sparse_ideal(4, 3, 3)) {
        let ideal = Ideal::from_generators(j.context(), j.generators().to_vec()).unwrap();
        let g = gin(&j, &opts()).unwrap();
        let init = initial_ideal(&j).unwrap();
        let l = lex_ideal(&init).unwrap();
        let w = window_for(j.nvars(), &[&init, &g, &l]);
        let own = cohomology_ext(&ideal, w).unwrap();
        let initial = cohomology_ext_monomial(&init, w).unwrap();
        let generic = cohomology_ext_monomial(&g, w).unwrap();
        let lex = cohomology_ext_monomial(&l, w).unwrap();
        prop_assert_eq!(own.exceeds(&generic), None);
        prop_assert_eq!(generic.exceeds(&lex), None);
        prop_assert_eq!(own.exceeds(&initial), None);
        for b in [&initial, &lex] {
            prop_assert!(cancellation_witness(&own, b).unwrap().verify(&own, b));
        }
        let hilb = ideal_hilbert_series(&ideal).unwrap();
        prop_assert_eq!(serre_check(&own, &hilb), Ok(()));
    }
}
