//! Property tests over randomly generated exact multivectors.

use proptest::prelude::*;

use paravec::algebra::{Backend, Multivector, Scalar, Signature};

const EX: Backend = Backend::Exact;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4).prop_map(|(rn, rd, in_, id)| {
        Scalar::from_ratio(EX, rn, rd).add(&Scalar::from_ratio(EX, in_, id).mul_imag())
    })
}

fn arb_multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    let blades = 1u16 << sig.dim();
    prop::collection::vec((0..blades, arb_scalar()), 0..6).prop_map(move |terms| {
        Multivector::from_terms(sig, EX, terms)
    })
}

fn arb_signature() -> impl Strategy<Value = Signature> {
    prop_oneof![
        Just(Signature::new(3, 0)),
        Just(Signature::new(1, 3)),
        Just(Signature::new(4, 1)),
        Just(Signature::new(0, 4)),
        Just(Signature::new(2, 2)),
    ]
}

proptest! {
    #[test]
    fn product_is_associative((sig, seed) in arb_signature().prop_flat_map(|s| (Just(s), any::<u64>()))) {
        // derive three multivectors from one seed to keep the strategy simple
        let mut sampler = paravec::verify::sample::Sampler::new(seed, EX);
        let a = sampler.multivector(sig, 5, true);
        let b = sampler.multivector(sig, 5, true);
        let c = sampler.multivector(sig, 5, true);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn involutions_interact_correctly(sig in arb_signature(), seed in any::<u64>()) {
        let mut sampler = paravec::verify::sample::Sampler::new(seed, EX);
        let a = sampler.multivector(sig, 5, true);
        let b = sampler.multivector(sig, 5, true);
        // reversion is an anti-automorphism
        prop_assert_eq!(a.mul(&b).reversion(), b.reversion().mul(&a.reversion()));
        // the grade involution is an automorphism
        prop_assert_eq!(
            a.mul(&b).grade_involution(),
            a.grade_involution().mul(&b.grade_involution())
        );
        // conjugation is their composition, in either order
        prop_assert_eq!(a.clifford_conjugation(), a.reversion().grade_involution());
        prop_assert_eq!(a.clifford_conjugation(), a.grade_involution().reversion());
        // all three are involutive
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.grade_involution().grade_involution(), a.clone());
        prop_assert_eq!(a.clifford_conjugation().clifford_conjugation(), a.clone());
    }

    #[test]
    fn multivector_json_round_trips(mv in arb_multivector(Signature::new(4, 1))) {
        let back = Multivector::from_json(&mv.to_json(), EX).unwrap();
        prop_assert_eq!(back, mv);
    }

    #[test]
    fn grade_projections_partition(sig in arb_signature(), seed in any::<u64>()) {
        let mut sampler = paravec::verify::sample::Sampler::new(seed, EX);
        let a = sampler.multivector(sig, 6, true);
        let mut sum = Multivector::zero(sig, EX);
        for k in 0..=sig.dim() {
            let part = a.grade_project(k);
            // idempotent
            prop_assert_eq!(part.grade_project(k), part.clone());
            // annihilates other grades
            for h in 0..=sig.dim() {
                if h != k {
                    prop_assert!(part.grade_project(h).is_zero());
                }
            }
            sum = sum.add(&part);
        }
        prop_assert_eq!(sum, a);
    }
}
