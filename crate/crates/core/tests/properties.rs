mod common;

use std::ops::ControlFlow;

use proptest::prelude::*;

use proxsearch::engine::{enumerate_exp, enumerate_exp_with, OutputOrder, Problem};
use proxsearch::oracle::brute_force_maximal;
use proxsearch::registry::VARIANTS;

fn instance(variant_ix: usize, seed: u64) -> (Box<dyn Problem>, String) {
    let mut r = common::rng(seed);
    common::random_instance(VARIANTS[variant_ix], &mut r)
}

fn variant() -> impl Strategy<Value = usize> {
    0..VARIANTS.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn comp_returns_a_maximal_superset(v in variant(), seed in any::<u64>(), pick in any::<u64>()) {
        let (p, desc) = instance(v, seed);
        let n = p.ground_size();
        // a random solution: grow from a random element while it stays one
        let mut x: Vec<usize> = Vec::new();
        for i in 0..n {
            let e = (i + pick as usize) % n;
            let mut y = x.clone();
            y.push(e);
            y.sort_unstable();
            if (pick >> (i % 64)) & 1 == 1 && p.is_solution(&y) {
                x = y;
            }
        }
        prop_assume!(!x.is_empty());
        let s = p.comp(&x);
        prop_assert!(x.iter().all(|e| s.binary_search(e).is_ok()), "{desc}");
        prop_assert!(p.is_maximal_solution(&s), "{desc}: {s:?}");
    }

    #[test]
    fn neighbors_are_maximal_solutions(v in variant(), seed in any::<u64>()) {
        let (p, desc) = instance(v, seed);
        let s = p.first_solution();
        for x in p.neighbors(&s) {
            prop_assert!(p.is_maximal_solution(&x), "{desc}: {x:?}");
        }
    }

    #[test]
    fn proximity_is_bounded_and_full_on_itself(v in variant(), seed in any::<u64>()) {
        let (p, desc) = instance(v, seed);
        let sols = brute_force_maximal(p.as_ref()).unwrap();
        for s in &sols {
            prop_assert_eq!(p.proximity(s, s), s.len(), "{}", desc);
            for t in &sols {
                prop_assert!(p.proximity(s, t) <= t.len().min(s.len()));
            }
        }
    }

    #[test]
    fn limited_output_is_a_prefix(v in variant(), seed in any::<u64>(), limit in 1usize..6) {
        let (p, _) = instance(v, seed);
        let mut full = Vec::new();
        enumerate_exp(p.as_ref(), |s: &[usize]| {
            full.push(s.to_vec());
            Ok::<_, std::convert::Infallible>(ControlFlow::Continue(()))
        }).unwrap();
        let mut part = Vec::new();
        let c = enumerate_exp(p.as_ref(), |s: &[usize]| {
            part.push(s.to_vec());
            Ok::<_, std::convert::Infallible>(if part.len() == limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            })
        }).unwrap();
        prop_assert_eq!(&part[..], &full[..part.len()]);
        prop_assert_eq!(part.len(), limit.min(full.len()));
        prop_assert_eq!(c.solutions_emitted as usize, part.len());
    }

    #[test]
    fn output_orders_agree(v in variant(), seed in any::<u64>()) {
        let (p, _) = instance(v, seed);
        let run = |order| {
            let mut all = Vec::new();
            enumerate_exp_with(p.as_ref(), order, |s: &[usize]| {
                all.push(s.to_vec());
                Ok::<_, std::convert::Infallible>(ControlFlow::Continue(()))
            }).unwrap();
            all.sort();
            all
        };
        prop_assert_eq!(run(OutputOrder::PreOrder), run(OutputOrder::Alternating));
    }

    #[test]
    fn oracle_output_is_an_antichain(v in variant(), seed in any::<u64>()) {
        let (p, _) = instance(v, seed);
        let sols = brute_force_maximal(p.as_ref()).unwrap();
        for a in &sols {
            prop_assert!(p.is_solution(a));
            for b in &sols {
                prop_assert!(a == b || !a.iter().all(|e| b.binary_search(e).is_ok()));
            }
        }
    }
}
