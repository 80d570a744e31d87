mod common;

use common::{all_part_lists, counts, regular_by_filter, to_parts};
use lglaisher::partition::{enumerate_overpartitions, enumerate_partitions, regular_partitions};
use lglaisher::{OverPartition, Partition};
use proptest::prelude::*;

#[test]
fn text_form() {
    let p: Partition = "1^2 3^5 5^3".parse().unwrap();
    assert_eq!(p.weight(), 32);
    assert_eq!(p.num_parts(), 10);
    assert_eq!(p.to_string(), "1^2 3^5 5^3");
    assert_eq!("5 3 1 3".parse::<Partition>().unwrap().to_string(), "1 3^2 5");
    assert_eq!(Partition::new().to_string(), "∅");
    assert_eq!("∅".parse::<Partition>().unwrap(), Partition::new());
    assert_eq!("".parse::<Partition>().unwrap(), Partition::new());
    for bad in ["0", "2^0", "x", "3~", "-1", "2^", "^2"] {
        assert!(bad.parse::<Partition>().is_err(), "{bad}");
    }
    let o: OverPartition = "1 1~ 4^2".parse().unwrap();
    assert_eq!(o.weight(), 10);
    assert_eq!(o.to_string(), "1 1~ 4^2");
    assert!("2~ 2~".parse::<OverPartition>().is_err());
    assert!("2~^2".parse::<OverPartition>().is_err());
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=24 {
        let got: Vec<Vec<u64>> = enumerate_partitions(n, |_| true).iter().map(to_parts).collect();
        // the oracle emits descending lexicographic order as well
        assert_eq!(got, all_part_lists(n));
        for (k, l) in [(2, 6), (3, 2), (4, 3), (5, 5)] {
            let fast: Vec<Vec<u64>> = regular_partitions(n, k, l).iter().map(to_parts).collect();
            assert_eq!(fast, regular_by_filter(n, k, l), "n={n} k={k} l={l}");
        }
    }
}

#[test]
fn two_six_regular_of_ten() {
    let got: Vec<String> = regular_partitions(10, 2, 6).iter().map(ToString::to_string).collect();
    assert_eq!(got.len(), 8);
    let mut sorted = got.clone();
    sorted.sort();
    let mut expect = ["1 9", "3 7", "1^3 7", "5^2", "1^2 3 5", "1^5 5", "1 3^3", "1^4 3^2"].map(String::from);
    expect.sort();
    assert_eq!(sorted, expect);
}

#[test]
fn overpartitions() {
    let two: Vec<String> = enumerate_overpartitions(2, |_| true).iter().map(ToString::to_string).collect();
    assert_eq!(two, ["2~", "2", "1 1~", "1^2"]);
    // each partition spawns 2^(distinct parts) over-partitions
    for n in 0..=18 {
        let expect: u64 = all_part_lists(n).iter().map(|p| 1u64 << counts(p).len()).sum();
        let all = enumerate_overpartitions(n, |_| true);
        assert_eq!(all.len() as u64, expect, "n={n}");
        let keys: Vec<_> = all.iter().map(OverPartition::order_key).collect();
        assert!(keys.windows(2).all(|w| w[0] > w[1]), "n={n}");
    }
}

#[test]
fn serde_round_trip() {
    let p: Partition = "1^4 3^2".parse().unwrap();
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(json, "\"1^4 3^2\"");
    assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
}

proptest! {
    #[test]
    fn display_parse_round_trip(parts in prop::collection::vec(1u64..40, 0..30)) {
        let p = Partition::from_parts(&parts).unwrap();
        prop_assert_eq!(p.weight(), parts.iter().sum::<u64>());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(p.parts_desc(), sorted);
    }

    #[test]
    fn over_round_trip(plain in prop::collection::vec(1u64..20, 0..10), over in prop::collection::btree_set(1u64..20, 0..5)) {
        let over: Vec<u64> = over.into_iter().collect();
        let o = OverPartition::from_parts(&plain, &over).unwrap();
        prop_assert_eq!(o.weight(), plain.iter().sum::<u64>() + over.iter().sum::<u64>());
        prop_assert_eq!(o.to_string().parse::<OverPartition>().unwrap(), o);
    }

    #[test]
    fn scaling_round_trip(parts in prop::collection::vec(1u64..40, 0..12), f in 1u64..9) {
        let p = Partition::from_parts(&parts).unwrap();
        let s = p.scaled(f).unwrap();
        prop_assert_eq!(s.weight(), f * p.weight());
        prop_assert_eq!(s.descaled(f), Some(p));
    }
}
