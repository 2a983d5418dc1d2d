use proptest::prelude::*;

use tropstat::oracle::{
    classical_entropy, classical_entropy_gibbs, classical_free_energy, classical_level_prob,
    default_k_schedule, tropical_limit_estimate, Quantity,
};
use tropstat::{build_envelope, eval_free_energy, make_spectrum, Domain, Level, Spectrum};

fn spectrum_strategy() -> impl Strategy<Value = Spectrum<f64>> {
    prop::collection::btree_map(-100i32..100, -30i32..30, 1..=8).prop_map(|levels| {
        make_spectrum(
            levels
                .into_iter()
                .map(|(e, s)| Level::new(f64::from(e) / 10.0, f64::from(s) / 10.0))
                .collect(),
        )
        .unwrap()
    })
}

fn temperature() -> impl Strategy<Value = f64> {
    prop_oneof![0.05f64..5.0, -5.0f64..-0.05]
}

proptest! {
    #[test]
    fn probabilities_normalize(s in spectrum_strategy(), t in temperature(), k in 1e-3f64..1.0) {
        let total: f64 = classical_level_prob(&s, k, t).unwrap().iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_forms_agree(s in spectrum_strategy(), t in temperature(), k in 0.05f64..1.0) {
        let closed = classical_entropy(&s, k, t).unwrap();
        let gibbs = classical_entropy_gibbs(&s, k, t).unwrap();
        prop_assert!((closed - gibbs).abs() < 1e-9 * closed.abs().max(1.0));
    }

    #[test]
    fn free_energy_within_tropical_bound(s in spectrum_strategy(), t in temperature(), k in 1e-4f64..1.0) {
        let env = build_envelope(&s, Domain::of(&t).unwrap());
        let f_tr = eval_free_energy(&env, &t).unwrap();
        let f_k = classical_free_energy(&s, k, t).unwrap();
        let bound = k * t.abs() * (s.len() as f64).ln() + 1e-12;
        // Classical F lies below the envelope by at most kT ln n.
        prop_assert!((f_tr - f_k) * t.signum() >= -1e-12);
        prop_assert!((f_k - f_tr).abs() <= bound);
    }

    #[test]
    fn limit_estimate_approaches_envelope(s in spectrum_strategy(), t in temperature()) {
        let env = build_envelope(&s, Domain::of(&t).unwrap());
        let f_tr = eval_free_energy(&env, &t).unwrap();
        let est = tropical_limit_estimate(&s, t, Quantity::FreeEnergy, &default_k_schedule()).unwrap();
        prop_assert!((est.estimate - f_tr).abs() <= 2e-4 * t.abs() * (s.len() as f64).ln() + 1e-12);
    }
}

#[test]
fn single_precision_envelope() {
    let s = make_spectrum(vec![
        Level::new(1.0f32, 1.0),
        Level::new(2.0, 3.0),
        Level::new(4.0, 4.0),
    ])
    .unwrap();
    let env = build_envelope(&s, Domain::Positive);
    assert_eq!(env.segment_levels(), vec![0, 1, 2]);
    let temps: Vec<f32> = env.breakpoint_temperatures().copied().collect();
    assert_eq!(temps, vec![0.5, 2.0]);
}
