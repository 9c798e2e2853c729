//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values (visible under `--nocapture`). Tolerances are pinned
//! in the asserts; nothing here is calibrated after the fact.

use std::time::Instant;
use waveinfo::catalog::{
    builtin_filter_names, complex_morlet, gauss1, haar, load_filter, load_wavelet,
    DaughterWavelet, ANALYTIC_NAMES,
};
use waveinfo::crossdensity::{absolute_bound, cross_term};
use waveinfo::divergence::{
    gibbs_cross_entropy, kl_distance_normalized, kl_distance_time,
};
use waveinfo::entropy::{
    frequency_entropy, global_entropy, mra_entropy, mra_entropy_of_taps, time_entropy,
    QuadratureConfig,
};
use waveinfo::infotheory::{
    joint_density_cwt, mra_info_report, mra_joint_density, mutual_info_cwt, mutual_info_dyadic,
    JointDensity, MraVariant,
};
use waveinfo::transform::{
    cwt, dwt_periodized, idwt_periodized, recommended_cwt_grid, recommended_cwt_grid_densified,
    SampledSignal,
};

const LOG2_SQRT_PI_E: f64 = 1.547118882483543; // log2(sqrt(pi e))
const LOG2_PI_E: f64 = 3.094237764967086; // log2(pi e)

fn q() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn x1() -> SampledSignal {
    SampledSignal::new(
        (0..16)
            .map(|i| if i % 2 == 0 { 9.0 } else { 11.0 })
            .collect(),
    )
    .unwrap()
}

fn dc16() -> SampledSignal {
    SampledSignal::new(vec![1.0; 16]).unwrap()
}

fn x3() -> SampledSignal {
    SampledSignal::new(vec![
        0.9501, 0.2311, 0.6068, 0.4860, 0.8913, 0.7621, 0.4565, 0.0185, 0.8214, 0.4447, 0.6154,
        0.7919, 0.9218, 0.7382, 0.1763, 0.4057,
    ])
    .unwrap()
}

/// Deterministic test-signal generator (multiplicative congruential).
fn random_signal(len: usize, seed: u64) -> SampledSignal {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let samples: Vec<f64> = (0..len)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
        .collect();
    SampledSignal::new(samples).unwrap()
}

#[test]
fn criterion_01_haar_time_entropy_unity() {
    let start = Instant::now();
    let r = time_entropy(&haar(), &q()).unwrap();
    let elapsed = start.elapsed();
    assert!(
        (r.value - 1.0).abs() < 1e-6,
        "haar time entropy {} != 1",
        r.value
    );
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "PASS criterion 01: haar time entropy = {:.7} bits (1e-6 band), {:?}",
        r.value, elapsed
    );
}

#[test]
fn criterion_02_complex_morlet_entropies() {
    let start = Instant::now();
    let w = complex_morlet();
    let t = time_entropy(&w, &q()).unwrap();
    let f = frequency_entropy(&w, &q()).unwrap();
    let g = global_entropy(&w, &q()).unwrap();
    let elapsed = start.elapsed();
    assert!((t.value - LOG2_SQRT_PI_E).abs() < 1e-3, "H_t = {}", t.value);
    assert!((f.value - LOG2_SQRT_PI_E).abs() < 1e-3, "H_f = {}", f.value);
    assert!((g.value - LOG2_PI_E).abs() < 2e-3, "H = {}", g.value);
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "PASS criterion 02: cmor H_t = {:.5}, H_f = {:.5}, global = {:.5} (bands 1e-3/1e-3/2e-3), {:?}",
        t.value, f.value, g.value, elapsed
    );
}

#[test]
fn criterion_03_global_entropy_conservation() {
    let qq = q();
    let combos = [(2.0, 0.0), (0.5, 3.0), (4.0, -1.0)];
    for name in ANALYTIC_NAMES {
        let mother = load_wavelet(name).unwrap();
        let mother_t = time_entropy(&mother, &qq).unwrap().value;
        let mother_g = global_entropy(&mother, &qq).unwrap().value;
        for (a, b) in combos {
            let d = DaughterWavelet::new(mother.clone(), a, b).unwrap();
            let dt = time_entropy(&d, &qq).unwrap().value;
            let dg = global_entropy(&d, &qq).unwrap().value;
            assert!(
                (dg - mother_g).abs() < 3e-3,
                "{name} (a={a}, b={b}): global {dg} vs {mother_g}"
            );
            assert!(
                ((dt - mother_t) - a.abs().log2()).abs() < 3e-3,
                "{name} (a={a}, b={b}): time shift {} vs log2|a| {}",
                dt - mother_t,
                a.abs().log2()
            );
        }
    }
    println!(
        "PASS criterion 03: global entropy conserved and time entropy shifts by log2|a| \
         (3e-3 bands) for {} wavelets x 3 daughters",
        ANALYTIC_NAMES.len()
    );
}

#[test]
fn criterion_04_mra_entropy() {
    let db1 = load_filter("db1").unwrap();
    let h = mra_entropy(&db1).unwrap();
    assert!(
        (h - 1.0).abs() < 1e-12,
        "db1 entropy {h} (exact up to f64 rounding)"
    );
    for name in builtin_filter_names() {
        let p = load_filter(name).unwrap();
        let hg = mra_entropy_of_taps(p.highpass()).unwrap();
        let hh = mra_entropy_of_taps(p.lowpass()).unwrap();
        assert!((hg - hh).abs() < 1e-12, "{name}: g {hg} vs h {hh}");
    }
    println!(
        "PASS criterion 04: db1 mra entropy = {h:.15}; g/h readings agree to 1e-12 on all filters"
    );
}

#[test]
fn criterion_05_invariant_wavelets() {
    let qq = q();
    let cm = cross_term(&complex_morlet(), &qq).unwrap();
    let g1 = cross_term(&gauss1(), &qq).unwrap();
    for (name, value) in [("cmor", cm), ("gauss1", g1)] {
        assert!(
            (0.99..=1.0 + 1e-9).contains(&value),
            "{name} cross term {value}"
        );
    }
    for name in ANALYTIC_NAMES {
        let w = load_wavelet(name).unwrap();
        let ct = cross_term(&w, &qq).unwrap();
        let bound = absolute_bound(&w, &qq).unwrap();
        assert!(ct.abs() <= 1.0 + 1e-9, "{name}: |cross| = {ct}");
        assert!(
            ct.abs() <= bound + 1e-9,
            "{name}: cross {ct} exceeds integrability bound {bound}"
        );
    }
    println!(
        "PASS criterion 05: cross terms cmor = {cm:.9}, gauss1 = {g1:.9} in [0.99, 1+1e-9]; \
         Cauchy and integrability bounds hold on the catalog"
    );
}

#[test]
fn criterion_06_gibbs_and_kl_suite() {
    let qq = q();
    for name in ANALYTIC_NAMES {
        let w = load_wavelet(name).unwrap();
        let g = gibbs_cross_entropy(&w, &w, &qq).unwrap();
        let h = time_entropy(&w, &qq).unwrap().value;
        assert!((g - h).abs() < 3e-3, "{name}: gibbs {g} vs H_t {h}");
        let d = kl_distance_time(&w, &w, &qq).unwrap();
        assert!(d.value.abs() < 1e-9, "{name}: self distance {}", d.value);
    }
    let h = haar();
    let d2 = DaughterWavelet::new(h.clone(), 2.0, 0.0).unwrap();
    let dn = kl_distance_normalized(&h, &d2, &qq).unwrap();
    assert!(dn.value.abs() < 1e-6, "normalized {}", dn.value);
    let dl = kl_distance_time(&h, &d2, &qq).unwrap();
    assert!((dl.value - 1.0).abs() < 1e-6, "literal {}", dl.value);
    println!(
        "PASS criterion 06: gibbs(w,w) = H_t(w) (3e-3) on the catalog; self distances 0 (1e-9); \
         haar-vs-dilate normalized = {:.2e}, literal = {:.7}",
        dn.value, dl.value
    );
}

#[test]
fn criterion_07_transform_suite() {
    let mut signals = vec![x1(), dc16(), x3()];
    for i in 0..20 {
        signals.push(random_signal(64, 0x5EED + i as u64));
    }
    let mut checked = 0usize;
    for f in &signals {
        let energy = f.energy();
        for name in builtin_filter_names() {
            let p = load_filter(name).unwrap();
            for levels in 1..=3u32 {
                if !f.len().is_multiple_of(1 << levels) {
                    continue;
                }
                let c = dwt_periodized(f, &p, levels).unwrap();
                let residual = (c.total_energy() - energy).abs();
                assert!(
                    residual < 1e-10 * energy,
                    "{name} J={levels}: energy residual {residual}"
                );
                let back = idwt_periodized(&c, &p).unwrap();
                let err = f
                    .samples()
                    .iter()
                    .zip(back.samples())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                assert!(err < 1e-9, "{name} J={levels}: reconstruction error {err}");
                checked += 1;
            }
        }
    }
    println!(
        "PASS criterion 07: perfect reconstruction (<1e-9) and energy conservation \
         (<1e-10 E) over {checked} signal/filter/level combinations"
    );
}

#[test]
fn criterion_08_forced_table_entries() {
    let db1 = load_filter("db1").unwrap();
    let c = dwt_periodized(&x1(), &db1, 1).unwrap();
    let report = mra_info_report(&c, MraVariant::SubbandPrimary).unwrap();
    assert!(
        report.approx_bits.abs() < 1e-12,
        "x1/db1 approximation {}",
        report.approx_bits
    );
    assert!(
        report.total_bits.abs() < 1e-4,
        "x1/db1 total {}",
        report.total_bits
    );

    let dc = dc16();
    for name in builtin_filter_names() {
        let p = load_filter(name).unwrap();
        for levels in 1..=3u32 {
            let c = dwt_periodized(&dc, &p, levels).unwrap();
            let r = mra_info_report(&c, MraVariant::SubbandPrimary).unwrap();
            assert!(
                r.approx_bits.abs() < 1e-12,
                "{name} J={levels}: dc approximation info {}",
                r.approx_bits
            );
        }
    }
    println!(
        "PASS criterion 08: x1/db1 one-level report has zero approximation info \
         ({:.2e}) and total {:.2e} < 1e-4; dc approximation info vanishes at J = 1..3 \
         for every filter",
        report.approx_bits, report.total_bits
    );
}

/// Brute-force mutual information: recomputes both marginals from scratch
/// for every outcome.
fn mi_brute(cells: &[((usize, usize), f64)]) -> f64 {
    let total: f64 = cells.iter().map(|(_, m)| m).sum();
    let mut acc = 0.0;
    for &((r, c), m) in cells {
        if m <= 0.0 {
            continue;
        }
        let mut pr = 0.0;
        let mut pc = 0.0;
        for &((r2, c2), m2) in cells {
            if r2 == r {
                pr += m2;
            }
            if c2 == c {
                pc += m2;
            }
        }
        acc += (m / total) * ((m / total) / ((pr / total) * (pc / total))).log2();
    }
    acc
}

fn joint_cells(d: &JointDensity) -> Vec<((usize, usize), f64)> {
    let mut cells = Vec::new();
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            let m = d.mass_at(r, c);
            if m > 0.0 {
                cells.push(((r, c), m));
            }
        }
    }
    cells
}

#[test]
fn criterion_09_mi_property_suite() {
    // nonnegativity on every joint computed across the bundled signals
    let mut joints = 0usize;
    for f in [x1(), dc16(), x3()] {
        for name in builtin_filter_names() {
            let p = load_filter(name).unwrap();
            for levels in 1..=3u32 {
                let c = dwt_periodized(&f, &p, levels).unwrap();
                let d = mra_joint_density(&c, MraVariant::SubbandPrimary).unwrap();
                let mi = d.mutual_information();
                assert!(mi >= -1e-12, "{name} J={levels}: MI {mi}");
                joints += 1;

                // brute-force equivalence on small-outcome joints
                let cells = joint_cells(&d);
                if cells.len() <= 16 {
                    let brute = mi_brute(&cells);
                    assert!(
                        (mi - brute).abs() < 1e-12,
                        "{name} J={levels}: MI {mi} vs brute {brute}"
                    );
                }
            }
        }
    }

    // factorizable magnitudes carry no information
    let mut entries = Vec::new();
    for (i, r) in [0.9f64, 0.4, 0.1].iter().enumerate() {
        for (j, c) in [0.5f64, 1.2].iter().enumerate() {
            entries.push(((i as i64, j as i64), (r * c).sqrt()));
        }
    }
    let factorizable = mutual_info_dyadic(&entries).unwrap();
    assert!(factorizable.abs() < 1e-12, "{factorizable}");
    let brute_cells: Vec<((usize, usize), f64)> = entries
        .iter()
        .map(|&((i, j), w)| ((i as usize, j as usize), w * w))
        .collect();
    assert!((factorizable - mi_brute(&brute_cells)).abs() < 1e-12);

    // perfectly correlated binary pair carries exactly one bit
    let diagonal = mutual_info_dyadic(&[((0, 0), 1.0), ((1, 1), 1.0)]).unwrap();
    assert!((diagonal - 1.0).abs() < 1e-15, "{diagonal}");

    println!(
        "PASS criterion 09: MI >= -1e-12 on {joints} joints, factorizable grid at {factorizable:.2e}, \
         diagonal pair at exactly {diagonal} bit, brute-force agreement to 1e-12"
    );
}

#[test]
fn criterion_10_amplitude_invariance() {
    let factor = 7.3;
    for f in [x1(), x3()] {
        let scaled = f.scaled(factor);
        for name in builtin_filter_names() {
            let p = load_filter(name).unwrap();
            for levels in 1..=3u32 {
                let a = mra_info_report(
                    &dwt_periodized(&f, &p, levels).unwrap(),
                    MraVariant::SubbandPrimary,
                )
                .unwrap();
                let b = mra_info_report(
                    &dwt_periodized(&scaled, &p, levels).unwrap(),
                    MraVariant::SubbandPrimary,
                )
                .unwrap();
                assert!(
                    (a.total_bits - b.total_bits).abs() < 1e-12,
                    "{name} J={levels}: {} vs {}",
                    a.total_bits,
                    b.total_bits
                );
                assert!((a.approx_bits - b.approx_bits).abs() < 1e-12);
                for (x, y) in a.detail_bits.iter().zip(&b.detail_bits) {
                    assert!((x - y).abs() < 1e-12);
                }
            }
        }
    }

    // scalogram joint cells and MI are invariant too
    let f = x3();
    let w = complex_morlet();
    let (scales, translations) = recommended_cwt_grid(f.len());
    let d1 = joint_density_cwt(&cwt(&f, &w, &scales, &translations).unwrap()).unwrap();
    let d2 =
        joint_density_cwt(&cwt(&f.scaled(factor), &w, &scales, &translations).unwrap()).unwrap();
    let m1 = mutual_info_cwt(&d1, 0.85).unwrap();
    let m2 = mutual_info_cwt(&d2, 0.85).unwrap();
    assert!((m1 - m2).abs() < 1e-12, "cwt MI {m1} vs {m2}");
    println!(
        "PASS criterion 10: info reports and CWT mutual information unchanged (<1e-12) \
         under signal scaling by {factor}"
    );
}

#[test]
fn criterion_11_structural_table_facts() {
    // Exact reproduction of the published per-subband tables is not gated:
    // the source computation left its boundary mode and the meaning of its
    // duplicated rows unstated (and prints different values for the
    // identical db1/sym1 filters). The gated facts are the prose-level ones.
    for levels in [2u32, 3] {
        let db1 = load_filter("db1").unwrap();
        let c = dwt_periodized(&x1(), &db1, levels).unwrap();
        let r = mra_info_report(&c, MraVariant::SubbandPrimary).unwrap();
        let share = r.detail_bits[0] / r.total_bits;
        assert!(
            share > 0.5,
            "x1/db1 J={levels}: detail-1 share {share}"
        );
    }
    for f in [x1(), x3()] {
        for name in builtin_filter_names() {
            let p = load_filter(name).unwrap();
            for levels in 1..=3u32 {
                let c = dwt_periodized(&f, &p, levels).unwrap();
                let r = mra_info_report(&c, MraVariant::SubbandPrimary).unwrap();
                assert!(
                    r.total_bits >= -1e-12,
                    "{name} J={levels}: total {}",
                    r.total_bits
                );
            }
        }
    }
    println!(
        "PASS criterion 11: detail-1 dominates the x1 multi-level reports (>50%) and all \
         subband totals are nonnegative; published-table reproduction reported via the CLI \
         comparison mode only"
    );
}

#[test]
fn criterion_12_cwt_mi_stability() {
    let f = x3();
    let w = complex_morlet();
    let (scales, translations) = recommended_cwt_grid(f.len());
    let base = joint_density_cwt(&cwt(&f, &w, &scales, &translations).unwrap()).unwrap();
    assert!(base.coverage >= 0.85, "coverage {}", base.coverage);
    let mi_base = mutual_info_cwt(&base, 0.85).unwrap();

    let (scales2, translations2) = recommended_cwt_grid_densified(f.len(), 2);
    let dense = joint_density_cwt(&cwt(&f, &w, &scales2, &translations2).unwrap()).unwrap();
    let mi_dense = mutual_info_cwt(&dense, 0.85).unwrap();

    let rel = (mi_dense - mi_base).abs() / mi_base.abs();
    assert!(rel < 0.05, "MI {mi_base} vs {mi_dense}: rel change {rel}");
    println!(
        "PASS criterion 12: x3/cmor coverage = {:.4} (>= 0.85); grid doubling moves MI \
         {:.6} -> {:.6} bits ({:.2}% < 5%)",
        base.coverage,
        mi_base,
        mi_dense,
        100.0 * rel
    );
}
