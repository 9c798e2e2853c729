//! Property tests for the transform and information layers.

use proptest::prelude::*;
use waveinfo::catalog::{builtin_filter_names, load_filter};
use waveinfo::infotheory::{
    mra_info_report, mra_joint_density, mutual_info_dyadic, MraVariant,
};
use waveinfo::transform::{dwt_periodized, idwt_periodized, SampledSignal};

fn signal_strategy(len: usize) -> impl Strategy<Value = SampledSignal> {
    prop::collection::vec(-100.0f64..100.0, len)
        .prop_filter("needs energy", |v| v.iter().any(|x| x.abs() > 1e-6))
        .prop_map(|v| SampledSignal::new(v).unwrap())
}

fn filter_strategy() -> impl Strategy<Value = &'static str> {
    prop::sample::select(builtin_filter_names())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Periodized analysis/synthesis is a lossless, energy-preserving pair
    /// on every catalog filter and admissible depth.
    #[test]
    fn perfect_reconstruction(f in signal_strategy(64), name in filter_strategy(), levels in 1u32..=6) {
        let p = load_filter(name).unwrap();
        let c = dwt_periodized(&f, &p, levels).unwrap();
        let energy = f.energy();
        prop_assert!((c.total_energy() - energy).abs() < 1e-10 * energy.max(1.0));
        let back = idwt_periodized(&c, &p).unwrap();
        for (a, b) in f.samples().iter().zip(back.samples()) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    /// The subband joint always normalizes and its information total is a
    /// true mutual information: nonnegative.
    #[test]
    fn subband_joint_normalizes(f in signal_strategy(16), name in filter_strategy(), levels in 1u32..=4) {
        let p = load_filter(name).unwrap();
        let c = dwt_periodized(&f, &p, levels).unwrap();
        let d = mra_joint_density(&c, MraVariant::SubbandPrimary).unwrap();
        prop_assert!((d.total_mass() - 1.0).abs() < 1e-12);
        let r = mra_info_report(&c, MraVariant::SubbandPrimary).unwrap();
        prop_assert!(r.total_bits >= -1e-12);
        let parts = r.approx_bits + r.detail_bits.iter().sum::<f64>();
        prop_assert!((parts - r.total_bits).abs() < 1e-12);
    }

    /// Rescaling the signal changes nothing measured in bits.
    #[test]
    fn amplitude_invariance(f in signal_strategy(32), name in filter_strategy(), factor in 0.01f64..50.0) {
        let p = load_filter(name).unwrap();
        let a = mra_info_report(&dwt_periodized(&f, &p, 2).unwrap(), MraVariant::SubbandPrimary).unwrap();
        let b = mra_info_report(&dwt_periodized(&f.scaled(factor), &p, 2).unwrap(), MraVariant::SubbandPrimary).unwrap();
        prop_assert!((a.total_bits - b.total_bits).abs() < 1e-11);
    }

    /// Dyadic mutual information is nonnegative for arbitrary coefficient
    /// fields and vanishes for rank-one magnitude patterns.
    #[test]
    fn dyadic_mi_properties(rows in prop::collection::vec(0.01f64..10.0, 2..5),
                            cols in prop::collection::vec(0.01f64..10.0, 2..5),
                            noise in prop::collection::vec(-3.0f64..3.0, 25)) {
        let mut separable = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in cols.iter().enumerate() {
                separable.push(((i as i64, j as i64), (r * c).sqrt()));
            }
        }
        let mi = mutual_info_dyadic(&separable).unwrap();
        prop_assert!(mi.abs() < 1e-12, "separable MI {mi}");

        let mut arbitrary = Vec::new();
        for (k, w) in noise.iter().enumerate() {
            arbitrary.push((((k / 5) as i64, (k % 5) as i64), *w));
        }
        if arbitrary.iter().any(|(_, w)| *w != 0.0) {
            let mi = mutual_info_dyadic(&arbitrary).unwrap();
            prop_assert!(mi >= -1e-12, "arbitrary MI {mi}");
        }
    }
}
