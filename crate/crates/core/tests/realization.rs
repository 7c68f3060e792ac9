use charseq::pointlab::curve::rational_points;
use charseq::pointlab::measure_rcs;
use charseq::realize::{enumerate_admissible, realize, reduction_chain, RealizeOptions};
use charseq::verify::fixed_curve;
use charseq::Error;

#[test]
fn measuring_a_realization_returns_the_target() {
    for d in 2..=6u32 {
        let x = fixed_curve(1009, d, u64::from(d)).unwrap();
        let pool = rational_points(&x).unwrap();
        for target in enumerate_admissible(d as usize, 15) {
            let y = (0..3)
                .find_map(|seed| {
                    realize(&x, &target, seed, Some(&pool), RealizeOptions::default()).ok()
                })
                .unwrap_or_else(|| panic!("no realization of {target:?} on degree {d}"));
            assert_eq!(measure_rcs(&x, &y).unwrap().entries, target);
        }
    }
}

#[test]
fn realization_is_deterministic_in_the_seed() {
    let x = fixed_curve(101, 5, 5).unwrap();
    let target = [2, 3, 4, 4, 5];
    let a = realize(&x, &target, 9, None, RealizeOptions::default()).unwrap();
    let b = realize(&x, &target, 9, None, RealizeOptions::default()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len() as i64, target.iter().enumerate().map(|(i, n)| n - i as i64).sum::<i64>());
}

#[test]
fn chain_length_matches_the_degree_drop() {
    for t in enumerate_admissible(6, 12) {
        let chain = reduction_chain(&t);
        let degree = |v: &[i64]| v.iter().sum::<i64>();
        let base = chain.last().unwrap();
        assert_eq!(chain.len() as i64 - 1, degree(&t) - degree(base));
    }
}

#[test]
fn inadmissible_targets_are_rejected() {
    let x = fixed_curve(101, 4, 4).unwrap();
    for bad in [&[0, 2, 3, 4][..], &[1, 1, 2], &[0, 0, 2, 3]] {
        assert!(matches!(
            realize(&x, bad, 0, None, RealizeOptions::default()),
            Err(Error::InadmissibleTarget(_))
        ));
    }
}
