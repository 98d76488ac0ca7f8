use num_bigint::BigInt;
use proptest::prelude::*;

use spinfib::fib::decimal_digits;
use spinfib::{
    region_sum, sum_sequence, weighted_gfs_sum_closed, BoundaryConvention, DecompositionVariant,
    FibKernel, Grid, GridIndex, Region, SpinSeeds,
};

fn seeds() -> impl Strategy<Value = SpinSeeds> {
    prop::array::uniform4(-60i64..60).prop_map(|[a, b, c, d]| {
        SpinSeeds::new(
            BigInt::from(a),
            BigInt::from(b),
            BigInt::from(c),
            BigInt::from(d),
        )
    })
}

fn conventions() -> impl Strategy<Value = BoundaryConvention> {
    prop::sample::select(BoundaryConvention::EVERY.to_vec())
}

proptest! {
    #[test]
    fn closed_form_equals_recurrence(s in seeds(), m in 0u64..160, n in 0u64..160) {
        let g = Grid::default();
        let idx = GridIndex::new(m, n);
        prop_assert_eq!(
            g.eval_closed(&s, idx).unwrap(),
            g.eval_recurrence(&s, idx, BoundaryConvention::BWins).unwrap()
        );
    }

    #[test]
    fn symmetric_conventions(s in seeds(), m in 0u64..80, n in 0u64..80) {
        let g = Grid::default();
        for conv in BoundaryConvention::ALL {
            prop_assert_eq!(
                g.eval_recurrence(&s, GridIndex::new(m, n), conv).unwrap(),
                g.eval_recurrence(&s, GridIndex::new(n, m), conv).unwrap()
            );
        }
    }

    #[test]
    fn conventions_agree_when_b_equals_d(
        [a, b, c] in prop::array::uniform3(-60i64..60),
        m in 0u64..60,
        n in 0u64..60,
    ) {
        let s = SpinSeeds::new(BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(b));
        let g = Grid::default();
        let idx = GridIndex::new(m, n);
        let reference = g.eval_recurrence(&s, idx, BoundaryConvention::BWins).unwrap();
        for conv in BoundaryConvention::EVERY {
            prop_assert_eq!(&g.eval_recurrence(&s, idx, conv).unwrap(), &reference);
        }
    }

    #[test]
    fn conventions_differ_only_through_conflict_cells(s in seeds(), m in 0u64..60, n in 0u64..60) {
        // every convention produces a grid obeying the recurrence off the boundary
        let g = Grid::default();
        prop_assume!(m >= 2 && n >= 2);
        for conv in BoundaryConvention::EVERY {
            let at = |m, n| g.eval_recurrence(&s, GridIndex::new(m, n), conv).unwrap();
            prop_assert_eq!(at(m, n), at(m - 1, n - 1) + at(m - 2, n - 2));
        }
    }

    #[test]
    fn decomposition(s in seeds(), m in 0u64..90, n in 0u64..90) {
        prop_assume!(m.abs_diff(n) >= 2);
        let g = Grid::default();
        let idx = GridIndex::new(m, n);
        let truth = g.eval_recurrence(&s, idx, BoundaryConvention::BWins).unwrap();
        prop_assert_eq!(&g.decompose(&s, idx, DecompositionVariant::Corrected).unwrap(), &truth);
        let literal = g.decompose(&s, idx, DecompositionVariant::Literal).unwrap();
        let expected_gap = if m < n { g.literal_gap(&s, idx).unwrap() } else { BigInt::from(0) };
        prop_assert_eq!(literal - truth, expected_gap);
    }

    #[test]
    fn addition_law(m in -3000i64..3000, n in -3000i64..3000) {
        let k = FibKernel::default();
        let f = |i| k.fib(i).unwrap();
        prop_assert_eq!(f(m + n), f(m) * f(n + 1) + f(m - 1) * f(n));
    }

    #[test]
    fn gfs_terms_follow_the_recurrence(g0 in any::<i64>(), g1 in any::<i64>(), n in 0i64..400) {
        let k = FibKernel::default();
        let (g0, g1) = (BigInt::from(g0), BigInt::from(g1));
        let t = |i| k.gfs_term(&g0, &g1, i).unwrap();
        prop_assert_eq!(t(n + 2), t(n + 1) + t(n));
        prop_assert_eq!(t(0), g0.clone());
        prop_assert_eq!(t(1), g1.clone());
    }

    #[test]
    fn weighted_gfs_sum(g0 in -1000i64..1000, g1 in -1000i64..1000, n in 0i64..200) {
        let k = FibKernel::default();
        let (g0, g1) = (BigInt::from(g0), BigInt::from(g1));
        let direct: BigInt = (0..=n).map(|i| BigInt::from(i) * k.gfs_term(&g0, &g1, i).unwrap()).sum();
        prop_assert_eq!(weighted_gfs_sum_closed(&k, &g0, &g1, n).unwrap(), direct);
    }

    #[test]
    fn region_partitions(s in seeds(), n in 0i64..40, conv in conventions()) {
        let g = Grid::default();
        let r = |region| region_sum(&g, &s, region, n, conv).unwrap();
        let diagonal: BigInt = (0..=n).map(|i| g.kernel().gfs_term(&s.a, &s.c, i).unwrap()).sum();
        prop_assert_eq!(r(Region::LowerInclDiag), r(Region::LowerStrict) + &diagonal);
        prop_assert_eq!(r(Region::FullSquare), r(Region::LowerStrict) + r(Region::UpperInclDiag));
    }

    #[test]
    fn sequences_are_prefix_sums(s in seeds(), count in 1i64..30, conv in conventions()) {
        let g = Grid::default();
        for region in Region::ALL {
            let seq = sum_sequence(&g, &s, region, count, conv).unwrap();
            prop_assert_eq!(seq.len(), count as usize);
            let last = count - 1;
            prop_assert_eq!(&seq[last as usize], &region_sum(&g, &s, region, last, conv).unwrap());
        }
    }

    #[test]
    fn digit_count(digits in "[1-9][0-9]{0,400}", negative in any::<bool>()) {
        let mut x: BigInt = digits.parse().unwrap();
        if negative {
            x = -x;
        }
        prop_assert_eq!(decimal_digits(&x), digits.len() as u64);
    }

    #[test]
    fn seeds_round_trip(s in seeds()) {
        let parsed: SpinSeeds = s.to_string().parse().unwrap();
        prop_assert_eq!(parsed, s);
    }
}
