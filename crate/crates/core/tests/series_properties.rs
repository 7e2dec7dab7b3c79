//! Property tests for the citation-dynamics formulas.

use proptest::prelude::*;

use dormancy::{awakening_time, beauty_coefficient, CitationSeries};

fn series(counts: Vec<u32>) -> CitationSeries {
    CitationSeries {
        pub_year: 1980,
        counts,
    }
}

/// Point-to-line distance evaluated directly from the definition.
fn distance(counts: &[u32], t_m: usize, t: usize) -> f64 {
    let c0 = counts[0] as f64;
    let ctm = counts[t_m] as f64;
    let denom = ((ctm - c0).powi(2) + (t_m as f64).powi(2)).sqrt();
    ((ctm - c0) * t as f64 - t_m as f64 * counts[t] as f64 + t_m as f64 * c0).abs() / denom
}

proptest! {
    /// The returned awakening age is a global argmax of d over [0, t_m]:
    /// no other age scores strictly higher, and every earlier age scores
    /// strictly lower (earliest-tie rule).
    #[test]
    fn awakening_age_is_global_argmax(counts in prop::collection::vec(0u32..500, 2..50)) {
        let s = series(counts.clone());
        let (_, t_m) = beauty_coefficient(&s).unwrap();
        let t_a = awakening_time(&s).unwrap();
        prop_assert!(t_a <= t_m);
        if t_m > 0 {
            let d_a = distance(&counts, t_m, t_a);
            for t in 0..=t_m {
                let d = distance(&counts, t_m, t);
                prop_assert!(d <= d_a + 1e-12, "d({t}) = {d} beats d({t_a}) = {d_a}");
                if t < t_a {
                    prop_assert!(d < d_a, "tie at {t} should have won over {t_a}");
                }
            }
            // The endpoints always sit on the line.
            prop_assert!(distance(&counts, t_m, 0).abs() < 1e-9);
            prop_assert!(distance(&counts, t_m, t_m).abs() < 1e-9);
        }
    }

    /// B only depends on the series up to the peak: appending zero years
    /// after t_m changes nothing.
    #[test]
    fn beauty_ignores_the_tail(
        counts in prop::collection::vec(0u32..500, 2..30),
        tail in 1usize..10,
    ) {
        let s = series(counts.clone());
        let (b1, t_m) = beauty_coefficient(&s).unwrap();
        let mut padded = counts.clone();
        padded.resize(counts.len() + tail, 0);
        let (b2, t_m2) = beauty_coefficient(&series(padded)).unwrap();
        prop_assert_eq!(t_m, t_m2);
        prop_assert_eq!(b1, b2);
    }

    /// Uniform series never produce positive B and always awaken at zero.
    #[test]
    fn flat_series_are_not_beauties(value in 0u32..100, len in 2usize..40) {
        let s = series(vec![value; len]);
        let (b, t_m) = beauty_coefficient(&s).unwrap();
        prop_assert_eq!(t_m, 0);
        prop_assert_eq!(b, 0.0);
        prop_assert_eq!(awakening_time(&s).unwrap(), 0);
    }
}
