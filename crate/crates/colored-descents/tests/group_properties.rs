//! Structural checks of the group layer against an independent model: an
//! element acts on the r*n colored symbols, and multiplication must be
//! composition of those actions. This pins the multiplication convention
//! without reference to the pair-form bookkeeping.

use colored_descents::group::{ColoredPermutation, GroupParams};
use colored_descents::stats::{count, DescentStatistic};
use num_bigint::BigUint;
use proptest::prelude::*;

fn params(r: u32, n: u32) -> GroupParams {
    GroupParams::new(r, n).unwrap()
}

/// The action of an element on the set of r*n colored symbols: the symbol
/// (value v, shift j) maps to (window value at v, window color at v plus j).
/// Symbol (v, j) lives at index j*n + (v-1).
fn symbol_map(x: &ColoredPermutation) -> Vec<usize> {
    let n = x.n() as usize;
    let r = x.r() as usize;
    let mut map = vec![0usize; r * n];
    for (i, letter) in x.letters().iter().enumerate() {
        for j in 0..r {
            let from = j * n + i;
            let to_color = (letter.color as usize + j) % r;
            map[from] = to_color * n + (letter.value as usize - 1);
        }
    }
    map
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&s| outer[s]).collect()
}

fn decode(p: GroupParams, map: &[usize]) -> ColoredPermutation {
    let n = p.n() as usize;
    let mut values = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    for i in 0..n {
        let image = map[i]; // image of (i+1, 0)
        values.push((image % n) as u32 + 1);
        colors.push((image / n) as u32);
    }
    ColoredPermutation::from_parts(p, &values, &colors).unwrap()
}

#[test]
fn multiplication_is_composition_of_symbol_actions() {
    for r in 1..=3 {
        for n in 0..=3 {
            let p = params(r, n);
            let elements: Vec<_> = p.iter_elements().collect();
            for a in &elements {
                let map_a = symbol_map(a);
                for b in &elements {
                    let product = a.multiply(b).unwrap();
                    let expected = decode(p, &compose(&map_a, &symbol_map(b)));
                    assert_eq!(product, expected, "a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn associativity_exhaustive() {
    for r in 1..=3 {
        for n in 0..=3 {
            let p = params(r, n);
            let elements: Vec<_> = p.iter_elements().collect();
            for a in &elements {
                for b in &elements {
                    let ab = a.multiply(b).unwrap();
                    for c in &elements {
                        let bc = b.multiply(c).unwrap();
                        assert_eq!(
                            ab.multiply(c).unwrap(),
                            a.multiply(&bc).unwrap(),
                            "a={a} b={b} c={c}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn colored_order_is_a_strict_total_order() {
    use colored_descents::group::ColoredLetter;
    use std::cmp::Ordering;
    for r in 1..=4u32 {
        for n in 1..=6u32 {
            let letters: Vec<ColoredLetter> = (0..r)
                .flat_map(|color| (1..=n).map(move |value| ColoredLetter { value, color }))
                .collect();
            for a in &letters {
                for b in &letters {
                    match a.cmp(b) {
                        Ordering::Equal => assert_eq!(a, b),
                        Ordering::Less => assert_eq!(b.cmp(a), Ordering::Greater),
                        Ordering::Greater => assert_eq!(b.cmp(a), Ordering::Less),
                    }
                    for c in &letters {
                        if a.cmp(b) == Ordering::Less && b.cmp(c) == Ordering::Less {
                            assert_eq!(a.cmp(c), Ordering::Less);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn negation_exchanges_positive_and_negative_descents() {
    for n in 0..=6u32 {
        let p = params(2, n);
        let mut pdes_hist = vec![0u64; n as usize + 1];
        let mut ndes_hist = vec![0u64; n as usize + 1];
        for x in p.iter_elements() {
            let pdes = count(&x, &DescentStatistic::Pdes).unwrap();
            let ndes = count(&x, &DescentStatistic::Ndes).unwrap();
            pdes_hist[pdes as usize] += 1;
            ndes_hist[ndes as usize] += 1;
            let y = x.negate().unwrap();
            assert_eq!(count(&y, &DescentStatistic::Ndes).unwrap(), pdes);
            assert_eq!(count(&y, &DescentStatistic::Pdes).unwrap(), ndes);
        }
        assert_eq!(pdes_hist, ndes_hist, "n={n}");
    }
}

#[test]
fn color_rotation_shifts_same_color_descents() {
    for r in 1..=4u32 {
        for n in 0..=5u32 {
            let p = params(r, n);
            for x in p.iter_elements() {
                let y = x.rotate_colors();
                for c in 0..r {
                    let shifted = (c + 1) % r;
                    assert_eq!(
                        count(&x, &DescentStatistic::DesCc { c }).unwrap(),
                        count(&y, &DescentStatistic::DesCc { c: shifted }).unwrap(),
                        "x={x} c={c}"
                    );
                }
            }
        }
    }
}

#[test]
fn reduction_maps_respect_the_case_table() {
    for (r, n) in [(2u32, 4u32), (3, 4), (4, 3)] {
        let p = params(r, n);
        for x in p.iter_elements() {
            let first = x.letters()[0].color;
            let reduced = x.drop_first().unwrap();
            for c in 0..r {
                for d in c + 1..r {
                    let stat = DescentStatistic::DesCd { c, d };
                    let full = count(&x, &stat).unwrap();
                    if first != c {
                        assert_eq!(full, count(&reduced, &stat).unwrap(), "x={x} c={c} d={d}");
                    } else if n >= 2 {
                        let second = x.letters()[1].color;
                        let double = x.drop_first_two().unwrap();
                        let expected = if second == c {
                            count(&reduced, &stat).unwrap()
                        } else if second == d {
                            count(&double, &stat).unwrap() + 1
                        } else {
                            count(&double, &stat).unwrap()
                        };
                        assert_eq!(full, expected, "x={x} c={c} d={d}");
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn rank_round_trip(r in 1u32..=5, n in 0u32..=7, seed in any::<u64>()) {
        let p = params(r, n);
        let order = p.order();
        let index = BigUint::from(seed) % &order;
        let x = p.unrank(&index).unwrap();
        prop_assert_eq!(x.rank(), index);
    }

    #[test]
    fn inverse_is_two_sided(r in 1u32..=4, n in 0u32..=6, seed in any::<u64>()) {
        let p = params(r, n);
        let index = BigUint::from(seed) % p.order();
        let x = p.unrank(&index).unwrap();
        let inv = x.inverse();
        prop_assert!(x.multiply(&inv).unwrap().is_identity());
        prop_assert!(inv.multiply(&x).unwrap().is_identity());
    }

    #[test]
    fn parse_display_round_trip(r in 1u32..=5, n in 0u32..=7, seed in any::<u64>()) {
        let p = params(r, n);
        let index = BigUint::from(seed) % p.order();
        let x = p.unrank(&index).unwrap();
        let reparsed = ColoredPermutation::parse(p, &x.to_string()).unwrap();
        prop_assert_eq!(reparsed, x);
    }
}
