use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use vfcomb::bracket::{parse, render, render_placeholders, BracketString};
use vfcomb::counting::{c_total, hypergeometric_terms, p_rec, split_sequences};
use vfcomb::enumerate::enumerate;
use vfcomb::model::{to_separatrix, to_transversal, validate_transversal};
use vfcomb::moduli::rotate;
use vfcomb::PairingConfig;

fn configs(d: usize) -> &'static [PairingConfig] {
    static TABLES: OnceLock<Vec<Vec<PairingConfig>>> = OnceLock::new();
    &TABLES.get_or_init(|| {
        (0..=6)
            .map(|d| {
                if d == 0 {
                    Vec::new()
                } else {
                    enumerate(d).unwrap().collect()
                }
            })
            .collect()
    })[d]
}

fn config() -> impl Strategy<Value = PairingConfig> {
    (1usize..=6, any::<prop::sample::Index>()).prop_map(|(d, i)| i.get(configs(d)).clone())
}

proptest! {
    #[test]
    fn render_parse_identity(c in config()) {
        prop_assert_eq!(parse(&render(&c)).unwrap(), c.clone());
        prop_assert_eq!(parse(&render_placeholders(&c)).unwrap(), c);
    }

    #[test]
    fn enumerated_configs_are_structurally_valid(c in config()) {
        let t = c.to_transversal();
        prop_assert!(validate_transversal(&t).is_pass());
        for p in c.pairs() {
            prop_assert_eq!((p.high - p.low) % 2, 1);
        }
        prop_assert!(BracketString::tokenize(&render(&c)).unwrap().is_valid());
    }

    #[test]
    fn conversions_are_inverse(c in config()) {
        let t = c.to_transversal();
        let s = to_separatrix(&t).unwrap();
        prop_assert_eq!(to_transversal(&s).unwrap(), t);
    }

    #[test]
    fn rotation_is_a_group_action(c in config().prop_filter("degree at least 2", |c| c.degree() >= 2), a in -10i64..10, b in -10i64..10) {
        let order = c.degree() as i64 - 1;
        let ra = rotate(&c, a).unwrap();
        prop_assert_eq!(rotate(&ra, b).unwrap(), rotate(&c, a + b).unwrap());
        prop_assert_eq!(rotate(&ra, -a).unwrap(), c.clone());
        prop_assert_eq!(rotate(&c, order).unwrap(), c.clone());
        prop_assert_eq!(ra.invariants(), c.invariants());
    }

    #[test]
    fn closed_form_terms_sum_in_any_order(d in 1i64..40, seed in any::<u64>()) {
        let mut terms = hypergeometric_terms(d).unwrap();
        let forward = terms.iter().fold(BigRational::zero(), |acc, t| acc + t);
        let k = (seed as usize) % terms.len();
        terms.rotate_left(k);
        terms.reverse();
        let shuffled = terms.iter().fold(BigRational::zero(), |acc, t| acc + t);
        prop_assert_eq!(&forward, &shuffled);
        let weighted: BigRational = terms.iter().cloned().sum();
        prop_assert!(weighted.is_integer());
        // at z = 2 the same terms times 2^n give c_d
        let at_two = hypergeometric_terms(d).unwrap().into_iter().enumerate()
            .fold(BigRational::zero(), |acc, (n, t)| acc + t * BigRational::from_integer(BigInt::from(2).pow(n as u32)));
        prop_assert_eq!(at_two.to_integer(), BigInt::from(c_total(d).unwrap()));
    }
}

#[test]
fn enumeration_has_no_duplicates_and_matches_recursion() {
    for d in 1..=7usize {
        let all: Vec<PairingConfig> = enumerate(d).unwrap().collect();
        let unique: BTreeSet<&PairingConfig> = all.iter().collect();
        assert_eq!(unique.len(), all.len(), "duplicates at d={d}");
        assert_eq!(
            BigInt::from(all.len()),
            BigInt::from(p_rec(2 * d as i64 - 2))
        );
    }
}

#[test]
fn split_recursions_reproduce_p() {
    let (q, r) = split_sequences(100);
    for n in 0..=100i64 {
        assert_eq!(q[n as usize], p_rec(2 * n));
        assert_eq!(r[n as usize], p_rec(2 * n - 1));
    }
}
