//! The verification suite: each criterion recomputes a theorem-level claim
//! on a deterministic corpus and reports pass or fail.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bei::{binomial_edge_ideal, groebner_combinatorial};
use crate::complex::{find_special_odd_cycle, initial_complex};
use crate::corpus;
use crate::decomp::{
    equality_verdict, intersect_all, minimal_primes, prime_component, EqualityVerdict, PRIME_ENUMERATION_CAP,
};
use crate::error::Result;
use crate::graph::{net_graph, Graph};
use crate::ideal::Ideal;
use crate::poly::{buchberger, Coeff, FieldKind, Fp, Monomial, Polynomial, Rational, Ring, TermOrder, DEFAULT_PRIME};
use crate::report::{CriterionRecord, Status, SuiteResult};

const Q: FieldKind = FieldKind::Rational;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Skip the net computation at `t = 2`.
    pub quick: bool,
    /// Number of sampled connected graphs on six vertices.
    pub samples: usize,
    pub seed: u64,
    /// Prime for the exact-versus-modular agreement check.
    pub prime: u32,
    /// Worker threads; `None` uses one per core.
    pub threads: Option<usize>,
    /// Graph used as the net by the criteria that need it.
    pub net: Graph,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            quick: false,
            samples: 25,
            seed: corpus::SAMPLE_SEED,
            prime: DEFAULT_PRIME,
            threads: None,
            net: net_graph(),
        }
    }
}

pub const CRITERIA: [&str; 9] = [
    "combinatorial Groebner basis",
    "prime decomposition",
    "two associated primes",
    "two primes imply equal powers",
    "caterpillar trees",
    "net: unequal second powers",
    "net-free generalized caterpillars",
    "weak closedness and comparability",
    "property checks",
];

enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(if pass { Outcome::Pass(detail) } else { Outcome::Fail(detail) })
}

/// Shared state across criteria.
#[derive(Default)]
struct Context {
    /// `(instance, J^t ⊆ J^(t))` for every verdict computed so far.
    containments: Mutex<Vec<(String, bool)>>,
}

impl Context {
    fn record<C: Coeff>(&self, v: &EqualityVerdict<C>) {
        let label = format!("{:?} t={}", v.graph.edges(), v.t);
        self.containments.lock().expect("unpoisoned").push((label, v.ordinary_in_symbolic));
    }

    fn verdict(&self, g: &Graph, t: usize) -> Result<EqualityVerdict<Rational>> {
        let v = equality_verdict::<Rational>(g, t, PRIME_ENUMERATION_CAP, Q)?;
        self.record(&v);
        Ok(v)
    }
}

/// Run every criterion in order, reporting each record to `sink` as soon as
/// it is available.
pub fn run_with(opts: &SuiteOptions, mut sink: impl FnMut(&CriterionRecord)) -> SuiteResult {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = opts.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().expect("thread pool");
    let ctx = Context::default();
    let mut criteria = Vec::with_capacity(CRITERIA.len());
    for id in 1..=CRITERIA.len() {
        let start = Instant::now();
        let outcome = pool.install(|| run_one(id, opts, &ctx));
        let (status, detail) = match outcome {
            Ok(Outcome::Pass(d)) => (Status::Pass, d),
            Ok(Outcome::Fail(d)) => (Status::Fail, d),
            Ok(Outcome::Skipped(d)) => (Status::Skipped, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        let record = CriterionRecord {
            id,
            name: CRITERIA[id - 1].to_string(),
            status,
            detail,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        };
        sink(&record);
        criteria.push(record);
    }
    SuiteResult { criteria }
}

pub fn run(opts: &SuiteOptions) -> SuiteResult {
    run_with(opts, |_| {})
}

fn run_one(id: usize, opts: &SuiteOptions, ctx: &Context) -> Result<Outcome> {
    match id {
        1 => gb_theorem(opts),
        2 => decomposition(),
        3 => two_primes(),
        4 => two_primes_equal(ctx),
        5 => caterpillars(ctx),
        6 => net_inequality(opts, ctx),
        7 => generalized_caterpillars(ctx),
        8 => weak_closedness(&opts.net),
        9 => properties(opts, ctx),
        _ => unreachable!("criterion ids are 1..=9"),
    }
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(corpus::all_connected_labeled).collect()
}

fn first_failures(labels: Vec<String>) -> String {
    let shown: Vec<&String> = labels.iter().take(3).collect();
    format!("{} failures, e.g. {shown:?}", labels.len())
}

fn gb_theorem(opts: &SuiteOptions) -> Result<Outcome> {
    let classes = (1..=5).map(|n| corpus::isomorphism_classes(n, true).len()).sum::<usize>();
    let mut graphs = connected_up_to(5);
    let labeled = graphs.len();
    graphs.extend(corpus::random_connected(6, opts.samples, opts.seed));
    let failures: Vec<String> = graphs
        .par_iter()
        .filter(|g| {
            let ring = Ring::new(g.n(), Q);
            let j = binomial_edge_ideal::<Rational>(g, Q);
            groebner_combinatorial::<Rational>(g, Q) != buchberger(j.generators(), &ring)
        })
        .map(|g| format!("{:?}", g.edges()))
        .collect();
    let detail = format!(
        "{labeled} labeled connected graphs n <= 5 ({classes} classes) + {} sampled n = 6; {} identical",
        opts.samples,
        graphs.len() - failures.len()
    );
    Ok(if failures.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(first_failures(failures)) })
}

fn decomposition() -> Result<Outcome> {
    let graphs = connected_up_to(5);
    let failures: Vec<String> = graphs
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let meet = intersect_all(all_components(g)?)?;
            let j = binomial_edge_ideal::<Rational>(g, Q);
            Ok((!meet.equal(&j)?).then(|| format!("{:?}", g.edges())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let detail = format!("{} labeled connected graphs n <= 5, all 2^n components intersected", graphs.len());
    Ok(if failures.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(first_failures(failures)) })
}

fn two_primes() -> Result<Outcome> {
    let graphs = connected_up_to(5);
    let results: Vec<(bool, bool)> = graphs
        .par_iter()
        .map(|g| -> Result<(bool, bool)> {
            let two = g.ass_count_is_two()?;
            let count = minimal_primes::<Rational>(g, PRIME_ENUMERATION_CAP, Q)?.len();
            Ok((two, two == (count == 2)))
        })
        .collect::<Result<_>>()?;
    let agree = results.iter().filter(|r| r.1).count();
    let positives = results.iter().filter(|r| r.0).count();
    outcome(
        agree == graphs.len(),
        format!("{agree}/{} labeled connected graphs n <= 5 agree ({positives} with two primes)", graphs.len()),
    )
}

fn two_primes_equal(ctx: &Context) -> Result<Outcome> {
    let graphs: Vec<Graph> = connected_up_to(5).into_iter().filter(|g| g.ass_count_is_two().unwrap_or(false)).collect();
    let cases: Vec<(&Graph, usize)> = graphs.iter().flat_map(|g| [(g, 2), (g, 3)]).collect();
    let failures: Vec<String> = cases
        .par_iter()
        .map(|&(g, t)| -> Result<Option<String>> {
            let v = ctx.verdict(g, t)?;
            Ok((!v.equal).then(|| format!("{:?} t={t}", g.edges())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let detail =
        format!("{} graphs with two primes, t = 2 and 3: {} equal", graphs.len(), cases.len() - failures.len());
    Ok(if failures.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(first_failures(failures)) })
}

fn caterpillars(ctx: &Context) -> Result<Outcome> {
    let trees = corpus::caterpillars(6);
    let failures: Vec<String> = trees
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let sigma = g.caterpillar_labeling()?;
            let h = g.relabel(&sigma)?;
            let mut problems = Vec::new();
            if !ctx.verdict(&h, 2)?.equal {
                problems.push("t=2 unequal");
            }
            if find_special_odd_cycle(&initial_complex(&h)?).is_some() {
                problems.push("special odd cycle");
            }
            if g.gb_max_degree(&sigma)? > 3 {
                problems.push("degree > 3");
            }
            Ok((!problems.is_empty()).then(|| format!("{:?}: {}", g.edges(), problems.join(", "))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let star = Graph::star(3)?;
    let star_t3 = ctx.verdict(&star, 3)?.equal;
    let detail = format!(
        "{} caterpillar trees n <= 6: t = 2 equal, no special odd cycle, degree <= 3; K_1,3 at t = 3 {}",
        trees.len(),
        if star_t3 { "equal" } else { "UNEQUAL" }
    );
    Ok(if failures.is_empty() && star_t3 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(first_failures(failures) + &detail)
    })
}

fn net_inequality(opts: &SuiteOptions, ctx: &Context) -> Result<Outcome> {
    if opts.quick {
        return Ok(Outcome::Skipped("net at t = 2 skipped by --quick".into()));
    }
    let net = &opts.net;
    let v = ctx.verdict(net, 2)?;
    let Some(w) = &v.witness else {
        return Ok(Outcome::Fail(format!("equal = {} with no witness", v.equal)));
    };
    let ring = v.ring().clone();
    // Membership in every P^2 separately, without the intersection.
    let in_symbolic = v
        .minimal_primes
        .iter()
        .map(|p| p.ideal.power(2)?.member(w))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    // Non-membership in J^2 by graded linear algebra, without Gröbner bases.
    let j = binomial_edge_ideal::<Rational>(net, Q);
    let in_ordinary = graded_membership(w, j.power(2)?.generators(), &ring);
    let detail = format!(
        "equal = {}, witness {} of degree {}; in every P_U^2: {in_symbolic}; in J^2 by linear algebra: {in_ordinary}",
        v.equal,
        w.render(&ring),
        w.total_degree()
    );
    outcome(!v.equal && in_symbolic && !in_ordinary, detail)
}

fn generalized_caterpillars(ctx: &Context) -> Result<Outcome> {
    let graphs = corpus::net_free_generalized_caterpillars(6);
    let failures: Vec<String> = graphs
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let sigma = g.gencat_labeling()?;
            let mut problems = Vec::new();
            if !g.is_weakly_closed_with_labeling(&sigma)? {
                problems.push("labeling not weakly closed");
            }
            if !ctx.verdict(g, 2)?.equal {
                problems.push("t=2 unequal");
            }
            Ok((!problems.is_empty()).then(|| format!("{:?}: {}", g.edges(), problems.join(", "))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let detail =
        format!("{} net-free generalized caterpillars n <= 6: weakly closed labeling, t = 2 equal", graphs.len());
    Ok(if failures.is_empty() && graphs.len() >= 10 {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(first_failures(failures) + &detail)
    })
}

fn weak_closedness(net: &Graph) -> Result<Outcome> {
    let graphs: Vec<Graph> = (1..=6).flat_map(corpus::all_labeled).collect();
    let mismatches = graphs.par_iter().filter(|g| g.is_weakly_closed() != g.complement().is_comparability()).count();
    let gencats = corpus::generalized_caterpillars(6);
    let gencat_mismatches = gencats.iter().filter(|g| g.is_net_free() != g.is_weakly_closed()).count();
    let net_complement = net.complement().is_comparability();
    let detail = format!(
        "{} labeled graphs n <= 6: {mismatches} mismatches; {} generalized caterpillars: {gencat_mismatches} \
         net-free/weakly-closed mismatches; complement of net comparability = {net_complement}",
        graphs.len(),
        gencats.len()
    );
    outcome(mismatches == 0 && gencat_mismatches == 0 && !net_complement, detail)
}

fn properties(opts: &SuiteOptions, ctx: &Context) -> Result<Outcome> {
    let mut problems = Vec::new();

    let containments = ctx.containments.lock().expect("unpoisoned").clone();
    let bad: Vec<&String> = containments.iter().filter(|c| !c.1).map(|c| &c.0).collect();
    if !bad.is_empty() {
        problems.push(format!("J^t not in J^(t) for {bad:?}"));
    }

    let order_cases = order_axioms(opts.seed);
    if let Err(e) = &order_cases {
        problems.push(e.clone());
    }

    let mut idempotent = 0;
    for n in 1..=5 {
        for g in corpus::isomorphism_classes(n, true) {
            let ring = Ring::new(n, Q);
            let gb = buchberger(binomial_edge_ideal::<Rational>(&g, Q).generators(), &ring);
            if buchberger(&gb, &ring) != gb {
                problems.push(format!("basis of {:?} not idempotent", g.edges()));
            }
            idempotent += 1;
        }
    }

    let intersections = intersection_checks(opts.seed)?;
    if let Err(e) = &intersections {
        problems.push(e.clone());
    }

    let mut agreement_graphs: Vec<Graph> = (2..=4).flat_map(|n| corpus::isomorphism_classes(n, true)).collect();
    agreement_graphs.push(Graph::star(3)?);
    if !opts.quick {
        agreement_graphs.push(opts.net.clone());
    }
    let field = FieldKind::prime(opts.prime)?;
    let disagreements: Vec<String> = agreement_graphs
        .par_iter()
        .map(|g| -> Result<Option<String>> {
            let exact = equality_verdict::<Rational>(g, 2, PRIME_ENUMERATION_CAP, Q)?;
            let modular = equality_verdict::<Fp>(g, 2, PRIME_ENUMERATION_CAP, field)?;
            ctx.record(&exact);
            ctx.record(&modular);
            let same = exact.equal == modular.equal
                && exact.ordinary.render_gb() == modular.ordinary.render_gb()
                && exact.symbolic.render_gb() == modular.symbolic.render_gb();
            Ok((!same).then(|| format!("{:?}", g.edges())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    if !disagreements.is_empty() {
        problems.push(format!("Q and F_{} disagree on {disagreements:?}", opts.prime));
    }

    let detail = format!(
        "{} containments J^t in J^(t); {} order axiom cases; {idempotent} idempotent bases; {} intersection cases; \
         {} Q vs F_{} verdicts",
        containments.len(),
        order_cases.unwrap_or(0),
        intersections.unwrap_or(0),
        agreement_graphs.len(),
        opts.prime
    );
    if containments.is_empty() {
        problems.push("no power containments were recorded".into());
    }
    Ok(if problems.is_empty() { Outcome::Pass(detail) } else { Outcome::Fail(problems.join("; ")) })
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize) -> Monomial {
    let exps: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..3)).collect();
    Monomial::from_exponents(&exps)
}

/// Totality, antisymmetry, transitivity, multiplicativity and `1` minimal,
/// for lex and a block elimination order.
fn order_axioms(seed: u64) -> std::result::Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0de7);
    let mut cases = 0;
    for ord in [TermOrder::Lex, TermOrder::BlockElimination { block: 2 }] {
        for _ in 0..500 {
            let (a, b, c) = (random_monomial(&mut rng, 8), random_monomial(&mut rng, 8), random_monomial(&mut rng, 8));
            let ab = ord.compare(&a, &b).map_err(|e| e.to_string())?;
            let ba = ord.compare(&b, &a).map_err(|e| e.to_string())?;
            let bc = ord.compare(&b, &c).map_err(|e| e.to_string())?;
            let ac = ord.compare(&a, &c).map_err(|e| e.to_string())?;
            if ab != ba.reverse() || (ab.is_eq() != (a == b)) {
                return Err(format!("{ord:?} not antisymmetric on {a:?}, {b:?}"));
            }
            if ab.is_lt() && bc.is_lt() && !ac.is_lt() {
                return Err(format!("{ord:?} not transitive"));
            }
            if ord.compare(&a.mul(&c), &b.mul(&c)).map_err(|e| e.to_string())? != ab {
                return Err(format!("{ord:?} not multiplicative"));
            }
            if !a.is_one() && !ord.compare(&Monomial::one(8), &a).map_err(|e| e.to_string())?.is_lt() {
                return Err(format!("{ord:?} has a monomial below 1"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// `I ∩ J ⊆ I`, `I ∩ J ⊆ J` and `I J ⊆ I ∩ J` for pairs of prime component
/// powers of random connected graphs.
fn intersection_checks(seed: u64) -> Result<std::result::Result<usize, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1e7);
    let graphs = corpus::random_connected(5, 6, seed ^ 0x5);
    let mut cases = 0;
    for g in &graphs {
        for _ in 0..3 {
            let pick = |rng: &mut ChaCha8Rng| -> Vec<usize> { (1..=5).filter(|_| rng.gen_bool(0.3)).collect() };
            let (u, v) = (pick(&mut rng), pick(&mut rng));
            let a = prime_component::<Rational>(g, &u, Q)?.ideal.power(rng.gen_range(1..=2))?;
            let b = prime_component::<Rational>(g, &v, Q)?.ideal;
            let meet = a.intersect(&b)?;
            if !a.contains(&meet)? || !b.contains(&meet)? || !meet.contains(&a.product(&b)?)? {
                return Ok(Err(format!("intersection containment fails for {:?}, U = {u:?}, V = {v:?}", g.edges())));
            }
            cases += 1;
        }
    }
    Ok(Ok(cases))
}

/// Grade of a monomial in `k[x, y]`: the degree at each vertex and the
/// `x`-degree. Binomial edge ideals and their prime components are
/// homogeneous for this grading.
fn grade(ring: &Ring, m: &Monomial) -> Vec<u32> {
    let n = ring.n();
    let mut g = vec![0u32; n + 1];
    for v in 1..=n {
        let (x, y) = (m.exponent(ring.x(v)) as u32, m.exponent(ring.y(v)) as u32);
        g[v - 1] = x + y;
        g[n] += x;
    }
    g
}

/// Monomials of the given grade.
fn monomials_of_grade(ring: &Ring, target: &[u32]) -> Vec<Monomial> {
    let n = ring.n();
    let mut out = Vec::new();
    let mut exps = vec![0u16; ring.nvars()];
    fn rec(ring: &Ring, target: &[u32], v: usize, x_left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = ring.n();
        if v > n {
            if x_left == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let d = target[v - 1];
        for x in 0..=d.min(x_left) {
            exps[ring.x(v)] = x as u16;
            exps[ring.y(v)] = (d - x) as u16;
            rec(ring, target, v + 1, x_left - x, exps, out);
        }
        exps[ring.x(v)] = 0;
        exps[ring.y(v)] = 0;
    }
    rec(ring, target, 1, target[n], &mut exps, &mut out);
    out
}

/// Whether `f` lies in the ideal generated by `gens`, decided by Gaussian
/// elimination in the graded piece of `f`. Requires `f` and every generator
/// to be homogeneous for [`grade`].
pub fn graded_membership<C: Coeff>(f: &Polynomial<C>, gens: &[Polynomial<C>], ring: &Ring) -> bool {
    if f.is_zero() {
        return true;
    }
    let target = grade(ring, f.lm());
    assert!(f.terms().iter().all(|(m, _)| grade(ring, m) == target), "f is not homogeneous");
    let mut columns: Vec<Polynomial<C>> = Vec::new();
    let one = ring.coeff::<C>(1);
    for g in gens {
        let gg = grade(ring, g.lm());
        assert!(g.terms().iter().all(|(m, _)| grade(ring, m) == gg), "generator is not homogeneous");
        if gg.iter().zip(&target).any(|(a, b)| a > b) {
            continue;
        }
        let rest: Vec<u32> = target.iter().zip(&gg).map(|(a, b)| a - b).collect();
        for m in monomials_of_grade(ring, &rest) {
            columns.push(g.mul_term(&m, &one));
        }
    }
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in columns.iter().chain(std::iter::once(f)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let dense = |p: &Polynomial<C>| -> Vec<C> {
        let mut v = vec![ring.coeff::<C>(0); index.len()];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    // Echelon rows keyed by pivot column.
    let mut rows: Vec<(usize, Vec<C>)> = Vec::new();
    let reduce = |rows: &[(usize, Vec<C>)], mut v: Vec<C>| -> Vec<C> {
        for (pivot, row) in rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *a = a.sub(&factor.mul(b));
                    }
                }
            }
        }
        v
    };
    for p in &columns {
        let v = reduce(&rows, dense(p));
        if let Some(pivot) = v.iter().position(|c| !c.is_zero()) {
            let inv = v[pivot].inv();
            let v: Vec<C> = v.iter().map(|c| c.mul(&inv)).collect();
            for (_, row) in rows.iter_mut() {
                if !row[pivot].is_zero() {
                    let factor = row[pivot].clone();
                    for (a, b) in row.iter_mut().zip(&v) {
                        if !b.is_zero() {
                            *a = a.sub(&factor.mul(b));
                        }
                    }
                }
            }
            rows.push((pivot, v));
        }
    }
    reduce(&rows, dense(f)).iter().all(Coeff::is_zero)
}

/// `P_U(G)` for every `U ⊆ [n]`.
pub fn all_components(g: &Graph) -> Result<Vec<Ideal<Rational>>> {
    (0..1u64 << g.n())
        .map(|mask| {
            let u: Vec<usize> = (1..=g.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            prime_component::<Rational>(g, &u, Q).map(|p| p.ideal)
        })
        .collect()
}
