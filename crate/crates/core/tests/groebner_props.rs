use std::collections::BTreeSet;
use std::sync::Arc;

use bel::bei::{admissible_paths, binomial_edge_ideal, groebner_combinatorial, initial_monomials};
use bel::poly::{buchberger, is_groebner_basis, normal_form};
use bel::suite::graded_membership;
use bel::{FieldKind, Fp, Graph, Ideal, Labeling, Monomial, Polynomial, Rational, Ring};
use proptest::prelude::*;

const Q: FieldKind = FieldKind::Rational;

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), 0u32..(1u32 << m)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn labelings(n: usize) -> impl Strategy<Value = Labeling> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Labeling::new(v).unwrap())
}

/// Small multilinear polynomials in `k[x1, x2, y1, y2]`; higher degrees make
/// lex bases of random input explode.
fn polys() -> impl Strategy<Value = Vec<Vec<(Vec<u16>, i64)>>> {
    let term = (prop::collection::vec(0u16..2, 4), -3i64..=3);
    prop::collection::vec(prop::collection::vec(term, 1..=3), 1..=3)
}

fn build(ring: &Ring, raw: &[Vec<(Vec<u16>, i64)>]) -> Vec<Polynomial<Rational>> {
    raw.iter()
        .map(|terms| {
            Polynomial::from_terms(
                ring,
                terms.iter().map(|(e, c)| (Monomial::from_exponents(e), ring.coeff::<Rational>(*c))).collect(),
            )
        })
        .collect()
}

/// Admissible paths found by plain enumeration of simple paths, with both
/// conditions checked literally.
fn admissible_oracle(g: &Graph) -> BTreeSet<(usize, usize, Vec<usize>)> {
    fn walk(g: &Graph, j: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == j {
            out.push(path.clone());
            return;
        }
        for v in 1..=g.n() {
            if g.has_edge(last, v) && !path.contains(&v) {
                path.push(v);
                walk(g, j, path, out);
                path.pop();
            }
        }
    }
    let is_path = |seq: &[usize]| seq.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let mut found = BTreeSet::new();
    for i in 1..=g.n() {
        for j in i + 1..=g.n() {
            let mut all = Vec::new();
            walk(g, j, &mut vec![i], &mut all);
            for p in all {
                let interior = &p[1..p.len() - 1];
                if interior.iter().any(|&v| v > i && v < j) {
                    continue;
                }
                let r = interior.len();
                let shortcut = (0..(1u32 << r) - 1).any(|keep| {
                    let mut seq = vec![i];
                    seq.extend((0..r).filter(|k| keep >> k & 1 == 1).map(|k| interior[k]));
                    seq.push(j);
                    is_path(&seq)
                });
                if !shortcut {
                    found.insert((i, j, interior.to_vec()));
                }
            }
        }
    }
    found
}

/// `x_v ↦ x_σ(v)`, `y_v ↦ y_σ(v)` as a roster permutation.
fn roster_permutation(ring: &Ring, sigma: &Labeling) -> Vec<usize> {
    let mut perm = vec![0; ring.nvars()];
    for v in 1..=ring.n() {
        perm[ring.x(v)] = ring.x(sigma.label(v));
        perm[ring.y(v)] = ring.y(sigma.label(v));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_is_idempotent_and_reduced(raw in polys()) {
        let ring = Ring::new(2, Q);
        let gens = build(&ring, &raw);
        let gb = buchberger(&gens, &ring);
        prop_assert_eq!(&buchberger(&gb, &ring), &gb);
        prop_assert!(is_groebner_basis(&gb, &ring));
        for (k, g) in gb.iter().enumerate() {
            prop_assert!(g.is_monic());
            for (l, h) in gb.iter().enumerate() {
                if k != l {
                    prop_assert!(g.terms().iter().all(|(m, _)| !h.lm().divides(m)));
                }
            }
        }
        for g in &gens {
            prop_assert!(normal_form(g, &gb, &ring).is_zero());
        }
    }

    #[test]
    fn combinations_of_generators_are_members(raw in polys(), mult in polys()) {
        let ring = Arc::new(Ring::new(2, Q));
        let gens = build(&ring, &raw);
        let ideal = Ideal::new(ring.clone(), gens.clone()).unwrap();
        let coeffs = build(&ring, &mult);
        let mut f = Polynomial::zero();
        for (g, c) in gens.iter().zip(&coeffs) {
            f = f.add(&g.mul(c, &ring), &ring);
        }
        prop_assert!(ideal.member(&f).unwrap());
    }

    #[test]
    fn combinatorial_basis_matches_buchberger(g in graphs(6)) {
        let ring = Ring::new(g.n(), Q);
        let j = binomial_edge_ideal::<Rational>(&g, Q);
        prop_assert_eq!(groebner_combinatorial::<Rational>(&g, Q), buchberger(j.generators(), &ring));
    }

    #[test]
    fn admissible_paths_match_enumeration(g in graphs(6)) {
        let found: BTreeSet<(usize, usize, Vec<usize>)> =
            admissible_paths(&g).into_iter().map(|p| (p.i, p.j, p.interior)).collect();
        prop_assert_eq!(found, admissible_oracle(&g));
    }

    #[test]
    fn u_pi_divides_leading_monomial(g in graphs(6)) {
        let ring = Ring::new(g.n(), Q);
        for p in admissible_paths(&g) {
            let u = p.u_pi(&ring);
            let lead = ring.minor::<Rational>(p.i, p.j).mul_term(&u, &ring.coeff(1));
            prop_assert!(u.divides(lead.lm()));
            prop_assert!(u.is_squarefree());
            prop_assert_eq!(u.degree() as usize, p.interior.len());
            prop_assert_eq!(u.exponent(ring.x(p.i)) + u.exponent(ring.y(p.j)), 0);
            if p.interior.is_empty() {
                prop_assert!(u.is_one());
                prop_assert!(g.has_edge(p.i, p.j));
            }
        }
        prop_assert!(initial_monomials(&g).iter().all(Monomial::is_squarefree));
    }

    #[test]
    fn relabeling_transforms_the_basis(
        (g, sigma) in graphs(5).prop_flat_map(|g| { let n = g.n(); (Just(g), labelings(n)) })
    ) {
        let ring = Ring::new(g.n(), Q);
        let perm = roster_permutation(&ring, &sigma);
        let moved: Vec<Polynomial<Rational>> = binomial_edge_ideal::<Rational>(&g, Q)
            .generators()
            .iter()
            .map(|f| f.permute_vars(&perm, &ring))
            .collect();
        let h = g.relabel(&sigma).unwrap();
        let direct = binomial_edge_ideal::<Rational>(&h, Q);
        prop_assert_eq!(buchberger(&moved, &ring), direct.gb().to_vec());
        let moved = Ideal::new(Arc::new(ring), moved).unwrap();
        prop_assert!(moved.equal(&direct).unwrap());
    }

    #[test]
    fn prime_field_agrees_with_rationals(g in graphs(5)) {
        let fp = FieldKind::prime(32003).unwrap();
        let exact = binomial_edge_ideal::<Rational>(&g, Q);
        let modular = binomial_edge_ideal::<Fp>(&g, fp);
        prop_assert_eq!(exact.render_gb(), modular.render_gb());
    }

    #[test]
    fn membership_agrees_with_linear_algebra(
        (g, a, b) in graphs(4).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 1..=n, 1..n).prop_map(move |(g, a, b)| (g, a, if b >= a { b + 1 } else { b }))
        }),
        k in 0usize..8,
    ) {
        let ring = Ring::new(g.n(), Q);
        let j = binomial_edge_ideal::<Rational>(&g, Q);
        // f_ab times a monomial of small degree.
        let v = 1 + k % g.n();
        let var = if k % 2 == 0 { ring.x(v) } else { ring.y(v) };
        let f = ring.minor::<Rational>(a.min(b), a.max(b)).mul(&ring.var(var), &ring);
        prop_assert_eq!(j.member(&f).unwrap(), graded_membership(&f, j.generators(), &ring));
        let bare = ring.minor::<Rational>(a.min(b), a.max(b));
        prop_assert_eq!(j.member(&bare).unwrap(), graded_membership(&bare, j.generators(), &ring));
    }
}

#[test]
fn star_basis_has_degree_three_elements() {
    let star = Graph::star(3).unwrap();
    let ring = Ring::new(4, Q);
    let rendered: Vec<String> = groebner_combinatorial::<Rational>(&star, Q).iter().map(|f| f.render(&ring)).collect();
    let mut expected: Vec<Polynomial<Rational>> = [(1, 2), (1, 3), (1, 4)]
        .iter()
        .map(|&(i, j)| ring.minor(i, j))
        .chain([(2, 3), (2, 4), (3, 4)].iter().map(|&(i, j)| ring.minor(i, j).mul(&ring.var(ring.y(1)), &ring)))
        .collect();
    expected.sort_by(|a, b| ring.order().compare(b.lm(), a.lm()).unwrap());
    let expected: Vec<String> = expected.iter().map(|f| f.render(&ring)).collect();
    assert_eq!(rendered, expected);
}

#[test]
fn disjoint_leading_terms_need_no_s_pairs() {
    let path = Graph::path(3).unwrap();
    let ring = Ring::new(3, Q);
    let j = binomial_edge_ideal::<Rational>(&path, Q);
    assert_eq!(j.gb(), &[ring.minor::<Rational>(1, 2), ring.minor(2, 3)]);
}
