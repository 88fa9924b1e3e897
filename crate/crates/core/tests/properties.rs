use ldpc_dsss::gf2::{self, derive_generator, girth, parse_alist, peg_construct, to_alist_string, Girth};
use ldpc_dsss::spa::{check_update_signmag, check_update_tanh, CheckForm, DecoderWorkspace};
use ldpc_dsss::BitBlock;
use proptest::prelude::*;

fn peg_strategy() -> impl Strategy<Value = ldpc_dsss::ParityCheckMatrix> {
    (4usize..40, 2usize..20, 1usize..4, any::<u64>()).prop_filter_map(
        "degree must fit the rows",
        |(cols, rows, deg, seed)| {
            (deg <= rows).then(|| peg_construct(cols.max(rows + 1), rows, &vec![deg; cols.max(rows + 1)], seed).unwrap())
        },
    )
}

/// `C·Hᵀ` by dense multiplication, independent of the sparse routine.
fn dense_syndrome(h: &ldpc_dsss::ParityCheckMatrix, word: &BitBlock) -> Vec<u8> {
    let bits = word.to_bits();
    h.to_dense()
        .iter()
        .map(|row| row.iter().zip(&bits).map(|(a, b)| a & b).fold(0, |x, y| x ^ y))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generator_is_orthogonal_to_h(h in peg_strategy()) {
        if let Ok(g) = derive_generator(&h) {
            prop_assert_eq!(g.k() + g.rank(), h.cols());
            for row in g.rows() {
                prop_assert!(dense_syndrome(&h, row).iter().all(|&b| b == 0));
            }
        }
    }

    #[test]
    fn encoding_is_linear_and_systematic(h in peg_strategy(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let Ok(g) = derive_generator(&h) else { return Ok(()) };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a: BitBlock = (0..g.k()).map(|_| rng.random::<bool>()).collect();
        let b: BitBlock = (0..g.k()).map(|_| rng.random::<bool>()).collect();
        let mut ab = a.clone();
        ab ^= &b;
        let mut sum = g.encode(&a).unwrap();
        sum ^= &g.encode(&b).unwrap();
        prop_assert_eq!(g.encode(&ab).unwrap(), sum);
        let c = g.encode(&a).unwrap();
        prop_assert_eq!(g.extract_info(&c).unwrap(), a);
        prop_assert!(gf2::syndrome(&c, &h).unwrap().is_zero());
    }

    #[test]
    fn girth_is_even_and_at_least_four(h in peg_strategy()) {
        if let Girth::Cycle(n) = girth(&h) {
            prop_assert!(n >= 4 && n % 2 == 0);
        }
    }

    #[test]
    fn alist_round_trip(h in peg_strategy()) {
        prop_assert_eq!(parse_alist(&to_alist_string(&h)).unwrap(), h);
    }

    // Only meaningful when the all-ones word is a codeword: with an odd-weight
    // row, negating every input leaves that check's outputs unchanged.
    #[test]
    fn negated_channel_negates_everything(
        h in peg_strategy().prop_filter("even row weights", |h| h.row_weights().iter().all(|w| w % 2 == 0)),
        seed in any::<u64>(),
        iters in 1usize..6,
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let llrs: Vec<f64> = (0..h.cols()).map(|_| rng.random_range(-6.0..6.0)).collect();
        let neg: Vec<f64> = llrs.iter().map(|l| -l).collect();
        for form in [CheckForm::Tanh, CheckForm::SignMagnitude] {
            let mut a = DecoderWorkspace::new(&h, form, 100).unwrap();
            let mut b = DecoderWorkspace::new(&h, form, 100).unwrap();
            a.init(&llrs).unwrap();
            b.init(&neg).unwrap();
            for _ in 0..iters {
                a.iterate();
                b.iterate();
            }
            for (x, y) in a.check_to_var().iter().zip(b.check_to_var()) {
                prop_assert_eq!(*x, -*y);
            }
            for (x, y) in a.var_to_check().iter().zip(b.var_to_check()) {
                prop_assert_eq!(*x, -*y);
            }
            for (x, y) in a.totals().iter().zip(b.totals()) {
                prop_assert_eq!(*x, -*y);
            }
            let da = a.decision();
            let db = b.decision();
            for i in 0..h.cols() {
                if a.totals()[i] != 0.0 {
                    prop_assert_ne!(da.get(i), db.get(i));
                }
            }
        }
    }

    #[test]
    fn converged_implies_zero_syndrome(h in peg_strategy(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let llrs: Vec<f64> = (0..h.cols()).map(|_| rng.random_range(-3.0..5.0)).collect();
        let r = ldpc_dsss::spa::decode(&llrs, &h, 30, CheckForm::Tanh).unwrap();
        prop_assert_eq!(r.converged, gf2::syndrome(&r.bits, &h).unwrap().is_zero());
    }

    #[test]
    fn forms_agree(v in prop::collection::vec(-20.0f64..20.0, 1..16)) {
        prop_assert!((check_update_tanh(&v) - check_update_signmag(&v)).abs() <= 1e-9);
    }
}
