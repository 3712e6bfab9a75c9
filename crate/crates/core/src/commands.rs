//! The operations behind each `bel` subcommand, producing [`Report`]s.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use crate::bei::{admissible_paths, combinatorial_gb_max_degree, groebner_combinatorial, initial_monomials};
use crate::complex::{find_special_odd_cycle, initial_complex};
use crate::decomp::{equality_verdict, minimal_primes, PRIME_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling, LABELING_SEARCH_CAP, MIN_DEGREE_SEARCH_CAP};
use crate::poly::{buchberger, Coeff, FieldKind, Fp, Rational, Ring};
use crate::report::*;
use crate::suite::{self, SuiteOptions};

/// Caps and switches shared by all commands.
#[derive(Clone, Debug)]
pub struct Options {
    pub field: FieldKind,
    /// Largest `n` for the `2^n` prime enumeration.
    pub max_n: usize,
    /// Largest `n` for exhaustive labeling searches.
    pub labeling_cap: usize,
    /// Largest `n` for the exhaustive m-closed minimum.
    pub m_closed_cap: usize,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: FieldKind::Rational,
            max_n: PRIME_ENUMERATION_CAP,
            labeling_cap: LABELING_SEARCH_CAP,
            m_closed_cap: MIN_DEGREE_SEARCH_CAP,
            timings: true,
        }
    }
}

/// Labeling applied to the graph before an algebraic command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Relabel {
    #[default]
    None,
    Caterpillar,
    Gencat,
}

impl std::str::FromStr for Relabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Relabel::None),
            "caterpillar" => Ok(Relabel::Caterpillar),
            "gencat" => Ok(Relabel::Gencat),
            other => Err(Error::InvalidLabeling(format!("unknown relabeling {other:?}"))),
        }
    }
}

fn apply(g: &Graph, relabel: Relabel) -> Result<(Graph, Option<Vec<usize>>)> {
    let sigma = match relabel {
        Relabel::None => return Ok((g.clone(), None)),
        Relabel::Caterpillar => g.caterpillar_labeling()?,
        Relabel::Gencat => g.gencat_labeling()?,
    };
    Ok((g.relabel(&sigma)?, Some(sigma.labels().to_vec())))
}

struct Clock {
    enabled: bool,
    start: Instant,
    phases: BTreeMap<String, f64>,
}

impl Clock {
    fn new(enabled: bool) -> Self {
        Clock { enabled, start: Instant::now(), phases: BTreeMap::new() }
    }

    fn lap(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.phases.insert(name.to_string(), (now - self.start).as_secs_f64() * 1e3);
            self.start = now;
        }
    }

    fn finish(self) -> BTreeMap<String, f64> {
        self.phases
    }
}

fn report(command: &str, g: Option<&Graph>, opts: &Options, results: Results, clock: Clock) -> Report {
    Report {
        command: command.to_string(),
        graph: g.map(GraphRecord::from),
        field: opts.field.to_string(),
        results,
        timings: clock.finish(),
    }
}

fn labels(sigma: Result<Labeling>) -> Option<Vec<usize>> {
    sigma.ok().map(|s| s.labels().to_vec())
}

pub fn classify(g: &Graph, opts: &Options) -> Result<Report> {
    let mut clock = Clock::new(opts.timings);
    let mut skipped = Vec::new();
    let mut capped = |r: Result<Option<Labeling>>| -> Result<Option<Option<Labeling>>> {
        match r {
            Ok(found) => Ok(Some(found)),
            Err(e @ Error::SizeCap { .. }) => {
                skipped.push(e.to_string());
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };
    let closed = capped(g.find_closed_labeling_capped(opts.labeling_cap))?;
    let weakly = capped(g.find_weakly_closed_labeling_capped(opts.labeling_cap))?;
    let min_degree = match g.min_gb_max_degree_capped(opts.m_closed_cap) {
        Ok((d, _)) => Some(d),
        Err(e @ Error::SizeCap { .. }) => {
            skipped.push(e.to_string());
            None
        }
        Err(e) => return Err(e),
    };
    let witness = g.generalized_caterpillar();
    let results = Classification {
        connected: g.is_connected(),
        tree: g.is_tree(),
        caterpillar: g.is_caterpillar(),
        central_path: g.central_path().ok().map(|p| p.vertices().to_vec()),
        caterpillar_labeling: labels(g.caterpillar_labeling()),
        block_graph: g.is_block_graph(),
        cutpoints: g.cutpoints().into_iter().collect(),
        blocks: g.blocks(),
        net_free: g.is_net_free(),
        induced_net: g.find_induced_net(),
        gen_caterpillar: witness.is_some(),
        gen_caterpillar_witness: witness.as_ref().map(WitnessRecord::from),
        gencat_labeling: labels(g.gencat_labeling()),
        closed: closed.as_ref().map(Option::is_some),
        closed_labeling: closed.flatten().map(|s| s.labels().to_vec()),
        weakly_closed: match &weakly {
            Some(found) => found.is_some(),
            None => g.complement().is_comparability(),
        },
        weakly_closed_labeling: weakly.flatten().map(|s| s.labels().to_vec()),
        complement_comparability: g.complement().is_comparability(),
        dominating_vertices: g.dominating_set_t().into_iter().collect(),
        ass_two: g.ass_count_is_two().ok(),
        gb_max_degree: combinatorial_gb_max_degree(g),
        min_gb_max_degree: min_degree,
        skipped,
    };
    clock.lap("classify");
    Ok(report("classify", Some(g), opts, Results::Classify(results), clock))
}

pub fn gb(g: &Graph, relabel: Relabel, check_buchberger: bool, opts: &Options) -> Result<Report> {
    match opts.field {
        FieldKind::Rational => gb_in::<Rational>(g, relabel, check_buchberger, opts),
        FieldKind::Prime(_) => gb_in::<Fp>(g, relabel, check_buchberger, opts),
    }
}

fn gb_in<C: Coeff>(g: &Graph, relabel: Relabel, check: bool, opts: &Options) -> Result<Report> {
    let mut clock = Clock::new(opts.timings);
    let (h, labeling) = apply(g, relabel)?;
    let ring = Ring::new(h.n(), opts.field);
    let elements = groebner_combinatorial::<C>(&h, opts.field);
    let paths = admissible_paths(&h);
    clock.lap("combinatorial");
    let buchberger_agrees = if check {
        let gens: Vec<_> = h.edges().into_iter().map(|(i, j)| ring.minor::<C>(i, j)).collect();
        let agrees = buchberger(&gens, &ring) == elements;
        clock.lap("buchberger");
        Some(agrees)
    } else {
        None
    };
    let results = GbResult {
        labeling,
        elements: elements.iter().map(|p| p.render(&ring)).collect(),
        admissible_paths: paths
            .iter()
            .map(|p| PathRecord {
                i: p.i,
                j: p.j,
                interior: p.interior.clone(),
                u_pi: ring.render_monomial(&p.u_pi(&ring)),
            })
            .collect(),
        initial_ideal: initial_monomials(&h).iter().map(|m| ring.render_monomial(m)).collect(),
        max_degree: combinatorial_gb_max_degree(&h),
        buchberger_agrees,
    };
    Ok(report("gb", Some(g), opts, Results::Gb(results), clock))
}

pub fn primes(g: &Graph, opts: &Options) -> Result<Report> {
    let mut clock = Clock::new(opts.timings);
    let primes = minimal_primes::<Rational>(g, opts.max_n, FieldKind::Rational)?;
    clock.lap("minimal_primes");
    let results = PrimesResult {
        minimal_primes: primes.iter().map(PrimeRecord::from).collect(),
        ass_two: g.ass_count_is_two().ok(),
    };
    Ok(report("primes", Some(g), opts, Results::Primes(results), clock))
}

pub fn powers(g: &Graph, t: usize, opts: &Options) -> Result<Report> {
    match opts.field {
        FieldKind::Rational => powers_in::<Rational>(g, t, opts),
        FieldKind::Prime(_) => powers_in::<Fp>(g, t, opts),
    }
}

fn powers_in<C: Coeff>(g: &Graph, t: usize, opts: &Options) -> Result<Report> {
    let mut clock = Clock::new(opts.timings);
    let v = equality_verdict::<C>(g, t, opts.max_n, opts.field)?;
    clock.lap("verdict");
    let results = PowersResult {
        t,
        equal: v.equal,
        ordinary_in_symbolic: v.ordinary_in_symbolic,
        witness: v.render_witness(),
        minimal_primes: v.minimal_primes.iter().map(PrimeRecord::from).collect(),
        ordinary_gb_size: v.ordinary.gb().len(),
        symbolic_gb_size: v.symbolic.gb().len(),
    };
    Ok(report("powers", Some(g), opts, Results::Powers(results), clock))
}

pub fn complex(g: &Graph, relabel: Relabel, search: bool, opts: &Options) -> Result<Report> {
    let mut clock = Clock::new(opts.timings);
    let (h, labeling) = apply(g, relabel)?;
    let delta = initial_complex(&h)?;
    clock.lap("complex");
    let cycle = if search {
        let found = find_special_odd_cycle(&delta).map(|c| CycleRecord::new(&delta, &c));
        clock.lap("search");
        found
    } else {
        None
    };
    let results = ComplexResult {
        labeling,
        facets: (0..delta.facets().len()).map(|f| delta.render_facet(f)).collect(),
        searched: search,
        special_odd_cycle: cycle,
    };
    Ok(report("complex", Some(g), opts, Results::Complex(results), clock))
}

pub fn suite(suite_opts: &SuiteOptions, opts: &Options, sink: impl FnMut(&CriterionRecord)) -> Report {
    let clock = Clock::new(opts.timings);
    let result = suite::run_with(suite_opts, sink);
    report("suite", None, opts, Results::Suite(result), clock)
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    match &r.results {
        Results::Classify(c) => {
            let mut line = |k: &str, v: String| {
                let _ = writeln!(out, "{k}: {v}");
            };
            line("connected", c.connected.to_string());
            line("tree", c.tree.to_string());
            line("caterpillar", c.caterpillar.to_string());
            line("central_path", opt(&c.central_path));
            line("caterpillar_labeling", opt(&c.caterpillar_labeling));
            line("block_graph", c.block_graph.to_string());
            line("cutpoints", format!("{:?}", c.cutpoints));
            line("blocks", format!("{:?}", c.blocks));
            line("net_free", c.net_free.to_string());
            line("induced_net", opt(&c.induced_net));
            line("gen_caterpillar", c.gen_caterpillar.to_string());
            line("gencat_labeling", opt(&c.gencat_labeling));
            line("closed", opt(&c.closed));
            line("closed_labeling", opt(&c.closed_labeling));
            line("weakly_closed", c.weakly_closed.to_string());
            line("weakly_closed_labeling", opt(&c.weakly_closed_labeling));
            line("complement_comparability", c.complement_comparability.to_string());
            line("dominating_vertices", format!("{:?}", c.dominating_vertices));
            line("ass_two", opt(&c.ass_two));
            line("gb_max_degree", c.gb_max_degree.to_string());
            line("min_gb_max_degree", opt(&c.min_gb_max_degree));
            for s in &c.skipped {
                line("skipped", s.clone());
            }
        }
        Results::Gb(gb) => {
            for e in &gb.elements {
                let _ = writeln!(out, "{e}");
            }
        }
        Results::Primes(p) => {
            for prime in &p.minimal_primes {
                let _ = writeln!(out, "U = {:?}: {}", prime.u, prime.generators.join(", "));
            }
        }
        Results::Powers(p) => {
            let _ = writeln!(out, "t: {}", p.t);
            let _ = writeln!(out, "equal: {}", p.equal);
            let _ = writeln!(out, "ordinary_in_symbolic: {}", p.ordinary_in_symbolic);
            let _ = writeln!(out, "minimal_primes: {}", p.minimal_primes.len());
            if let Some(w) = &p.witness {
                let _ = writeln!(out, "witness: {w}");
            }
        }
        Results::Complex(c) => {
            for f in &c.facets {
                let _ = writeln!(out, "{{{}}}", f.join(", "));
            }
            if c.searched {
                match &c.special_odd_cycle {
                    Some(cycle) => {
                        let _ = writeln!(out, "special odd cycle: {}", cycle.vertices.join(" "));
                    }
                    None => {
                        let _ = writeln!(out, "special odd cycle: none");
                    }
                }
            }
        }
        Results::Suite(s) => {
            for c in &s.criteria {
                let _ = writeln!(out, "{}", c.line());
            }
        }
    }
    out
}

fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
    match v {
        Some(v) => format!("{v:?}"),
        None => "-".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::net_graph;

    fn quiet() -> Options {
        Options { timings: false, ..Options::default() }
    }

    #[test]
    fn classify_net() {
        let r = classify(&net_graph(), &quiet()).unwrap();
        let Results::Classify(c) = &r.results else { panic!("wrong kind") };
        assert!(c.block_graph && !c.net_free && !c.weakly_closed && c.gen_caterpillar);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn classify_single_vertex() {
        let g = Graph::parse("n 1\n").unwrap();
        let r = classify(&g, &quiet()).unwrap();
        let Results::Classify(c) = &r.results else { panic!("wrong kind") };
        assert!(c.tree && c.caterpillar && c.connected);
    }

    #[test]
    fn powers_of_path() {
        let g = Graph::parse("1 2\n2 3\n").unwrap();
        let r = powers(&g, 2, &quiet()).unwrap();
        let Results::Powers(p) = &r.results else { panic!("wrong kind") };
        assert!(p.equal && p.witness.is_none());
        assert!(r.timings.is_empty());
    }

    #[test]
    fn gb_check() {
        let r = gb(&Graph::star(3).unwrap(), Relabel::None, true, &quiet()).unwrap();
        let Results::Gb(gb) = &r.results else { panic!("wrong kind") };
        assert_eq!(gb.buchberger_agrees, Some(true));
        assert_eq!(gb.elements.len(), 6);
    }
}
