use std::cmp::Ordering;

use bel::{Monomial, TermOrder};
use proptest::prelude::*;

const NVARS: usize = 6;

fn exps() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..4, NVARS)
}

/// Lex written out from the definition: the first differing exponent decides.
fn lex_oracle(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn block_oracle(block: usize, a: &[u16], b: &[u16]) -> Ordering {
    let deg = |v: &[u16]| v[..block].iter().map(|&e| e as u32).sum::<u32>();
    deg(a)
        .cmp(&deg(b))
        .then_with(|| lex_oracle(&a[..block], &b[..block]))
        .then_with(|| lex_oracle(&a[block..], &b[block..]))
}

fn orders() -> Vec<TermOrder> {
    vec![TermOrder::Lex, TermOrder::BlockElimination { block: 1 }, TermOrder::BlockElimination { block: 3 }]
}

fn m(e: &[u16]) -> Monomial {
    Monomial::from_exponents(e)
}

proptest! {
    #[test]
    fn matches_definition(a in exps(), b in exps()) {
        prop_assert_eq!(TermOrder::Lex.compare(&m(&a), &m(&b)).unwrap(), lex_oracle(&a, &b));
        for block in [1, 3] {
            let ord = TermOrder::BlockElimination { block };
            prop_assert_eq!(ord.compare(&m(&a), &m(&b)).unwrap(), block_oracle(block, &a, &b));
        }
    }

    #[test]
    fn total_and_antisymmetric(a in exps(), b in exps()) {
        for ord in orders() {
            let ab = ord.compare(&m(&a), &m(&b)).unwrap();
            let ba = ord.compare(&m(&b), &m(&a)).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }
    }

    #[test]
    fn transitive(a in exps(), b in exps(), c in exps()) {
        for ord in orders() {
            let (x, y, z) = (m(&a), m(&b), m(&c));
            if ord.compare(&x, &y).unwrap().is_le() && ord.compare(&y, &z).unwrap().is_le() {
                prop_assert!(ord.compare(&x, &z).unwrap().is_le());
            }
        }
    }

    #[test]
    fn multiplicative(a in exps(), b in exps(), c in exps()) {
        for ord in orders() {
            let (x, y, z) = (m(&a), m(&b), m(&c));
            prop_assert_eq!(ord.compare(&x.mul(&z), &y.mul(&z)).unwrap(), ord.compare(&x, &y).unwrap());
        }
    }

    #[test]
    fn one_is_least(a in exps()) {
        for ord in orders() {
            let one = Monomial::one(NVARS);
            let c = ord.compare(&one, &m(&a)).unwrap();
            prop_assert_eq!(c.is_eq(), a.iter().all(|&e| e == 0));
            prop_assert!(c.is_le());
        }
    }

    #[test]
    fn divisors_are_smaller(a in exps(), b in exps()) {
        let (x, y) = (m(&a), m(&b));
        let product = x.mul(&y);
        prop_assert!(x.divides(&product));
        prop_assert_eq!(x.divide_into(&product), Some(y.clone()));
        for ord in orders() {
            prop_assert!(ord.compare(&x, &product).unwrap().is_le());
        }
    }
}

#[test]
fn roster_ranks_x_above_y() {
    // x1 > x2 > y1 > y2 in the roster x1, x2, y1, y2.
    let vars: Vec<Monomial> = (0..4).map(|i| Monomial::variable(4, i)).collect();
    for w in vars.windows(2) {
        assert_eq!(TermOrder::Lex.compare(&w[0], &w[1]).unwrap(), Ordering::Greater);
    }
    // x2 beats any power of y1.
    assert!(TermOrder::Lex.compare(&m(&[0, 1, 0, 0]), &m(&[0, 0, 9, 9])).unwrap().is_gt());
}

#[test]
fn mismatched_rings_are_rejected() {
    assert!(TermOrder::Lex.compare(&Monomial::one(2), &Monomial::one(3)).is_err());
    assert!(TermOrder::BlockElimination { block: 5 }.compare(&Monomial::one(3), &Monomial::one(3)).is_err());
}
