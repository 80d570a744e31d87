mod common;

use common::{all_part_lists, counts, merge_until_stable, split_until_regular, to_partition, to_parts};
use lglaisher::glaisher::{
    dissection_sums, phi_forward_direct, phi_forward_iterative, phi_inverse, LargestFirst,
    RandomOrder, SmallestFirst,
};
use lglaisher::{Error, Partition};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(phi_forward_direct(&p("1^3 3"), 2).unwrap(), p("1 2 3"));
    assert_eq!(phi_forward_direct(&p("5"), 3).unwrap(), p("5"));
    assert_eq!(phi_forward_direct(&p("1^6"), 2).unwrap(), p("2 4"));
    assert_eq!(phi_forward_direct(&Partition::new(), 7).unwrap(), Partition::new());
    assert_eq!(phi_forward_direct(&p("1^7 5"), 2).unwrap(), p("1 2 4 5"));
    assert_eq!(phi_inverse(&p("1 2 3"), 2).unwrap(), p("1^3 3"));
    assert_eq!(phi_inverse(&p("1 3^2 5"), 3).unwrap(), p("1^7 5"));
    assert_eq!(phi_inverse(&Partition::new(), 5).unwrap(), Partition::new());
}

#[test]
fn trace_of_one_to_the_sixth() {
    let (out, trace) = phi_forward_iterative(&p("1^6"), 2, &mut SmallestFirst).unwrap();
    assert_eq!(out, p("2 4"));
    let states: Vec<String> = trace
        .replay(&p("1^6"))
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(states, ["1^6", "1^4 2", "1^2 2^2", "2^3", "2 4"]);
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(
        phi_forward_direct(&p("1"), 1),
        Err(Error::ParameterTooSmall { .. })
    ));
    assert!(phi_forward_direct(&p("2 3"), 2).is_err());
    assert!(phi_inverse(&p("1^2"), 2).is_err());
}

/// Every k-regular partition of weight ≤ 25 for k in 2..=7, compared with the
/// random-merge and splitting oracles.
#[test]
fn exhaustive_against_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 2..=7 {
        for n in 0..=25 {
            for parts in all_part_lists(n).into_iter().filter(|ps| ps.iter().all(|x| x % k != 0)) {
                let lambda = to_partition(&parts);
                let image = phi_forward_direct(&lambda, k).unwrap();
                assert_eq!(to_parts(&image), merge_until_stable(&parts, k, &mut rng));
                assert!(counts(&to_parts(&image)).values().all(|&m| m < k));
                assert_eq!(split_until_regular(&to_parts(&image), k), parts);
                assert_eq!(phi_inverse(&image, k).unwrap(), lambda);
            }
        }
    }
}

#[test]
fn policies_agree_and_conserve() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 2..=4 {
        for n in 0..=14 {
            for parts in all_part_lists(n).into_iter().filter(|ps| ps.iter().all(|x| x % k != 0)) {
                let lambda = to_partition(&parts);
                let direct = phi_forward_direct(&lambda, k).unwrap();
                let sums = dissection_sums(&lambda, k).unwrap();
                let bound = parts.len() as u64 / (k - 1);
                let (largest, _) = phi_forward_iterative(&lambda, k, &mut LargestFirst).unwrap();
                assert_eq!(largest, direct);
                for _ in 0..100 {
                    let (img, trace) =
                        phi_forward_iterative(&lambda, k, &mut RandomOrder(&mut rng)).unwrap();
                    assert_eq!(img, direct);
                    assert!(trace.len() as u64 <= bound);
                    for state in trace.replay(&lambda).unwrap() {
                        assert_eq!(state.weight(), n);
                        assert_eq!(dissection_sums(&state, k).unwrap(), sums);
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn random_partitions_round_trip(k in 2u64..9, parts in prop::collection::vec(1u64..60, 0..40), seed: u64) {
        let parts: Vec<u64> = parts.into_iter().filter(|x| x % k != 0).collect();
        let lambda = to_partition(&parts);
        let direct = phi_forward_direct(&lambda, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (iter, trace) = phi_forward_iterative(&lambda, k, &mut RandomOrder(&mut rng)).unwrap();
        prop_assert_eq!(&iter, &direct);
        prop_assert!(trace.len() as u64 <= lambda.num_parts() / (k - 1));
        prop_assert_eq!(phi_inverse(&direct, k).unwrap(), lambda);
    }

    #[test]
    fn digits_of_each_multiplicity(k in 2u64..6, i in 1u64..20, f in 0u64..500) {
        prop_assume!(i % k != 0);
        let lambda = Partition::from_frequencies([(i, f)]).unwrap();
        let image = phi_forward_direct(&lambda, k).unwrap();
        let (mut rest, mut scale) = (f, 1u64);
        while rest > 0 {
            prop_assert_eq!(image.multiplicity(i * scale), rest % k);
            rest /= k;
            scale *= k;
        }
    }
}
