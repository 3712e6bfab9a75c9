//! Serializable reports produced by the command-line front end.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, SpecialCycle};
use crate::decomp::PrimeComponent;
use crate::graph::{GenCatWitness, Graph};
use crate::poly::Coeff;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub graph: Option<GraphRecord>,
    pub field: String,
    pub results: Results,
    /// Wall-clock milliseconds per phase; empty when timings are disabled.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord { n: g.n(), edges: g.edges() }
    }
}

impl GraphRecord {
    pub fn to_graph(&self) -> crate::Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Classify(Classification),
    Gb(GbResult),
    Primes(PrimesResult),
    Powers(PowersResult),
    Complex(ComplexResult),
    Suite(SuiteResult),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub connected: bool,
    pub tree: bool,
    pub caterpillar: bool,
    pub central_path: Option<Vec<usize>>,
    pub caterpillar_labeling: Option<Vec<usize>>,
    pub block_graph: bool,
    pub cutpoints: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub net_free: bool,
    /// Triangle and the pendant attached to each of its corners.
    pub induced_net: Option<([usize; 3], [usize; 3])>,
    pub gen_caterpillar: bool,
    pub gen_caterpillar_witness: Option<WitnessRecord>,
    pub gencat_labeling: Option<Vec<usize>>,
    pub closed: Option<bool>,
    pub closed_labeling: Option<Vec<usize>>,
    pub weakly_closed: bool,
    pub weakly_closed_labeling: Option<Vec<usize>>,
    pub complement_comparability: bool,
    pub dominating_vertices: Vec<usize>,
    pub ass_two: Option<bool>,
    pub gb_max_degree: usize,
    pub min_gb_max_degree: Option<usize>,
    /// Recognizers skipped because a size cap was exceeded.
    pub skipped: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub base_vertices: Vec<usize>,
    pub central_path: Vec<usize>,
    pub joins: Vec<JoinRecord>,
    pub whiskers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinRecord {
    pub edge: (usize, usize),
    pub size: usize,
    pub new_vertices: Vec<usize>,
}

impl From<&GenCatWitness> for WitnessRecord {
    fn from(w: &GenCatWitness) -> Self {
        WitnessRecord {
            base_vertices: w.base_vertices.clone(),
            central_path: w.central_path.vertices().to_vec(),
            joins: w
                .joins
                .iter()
                .map(|j| JoinRecord { edge: j.edge, size: j.size, new_vertices: j.new_vertices.clone() })
                .collect(),
            whiskers: w.whiskers.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbResult {
    /// Labeling applied before computing, as the label of each vertex.
    pub labeling: Option<Vec<usize>>,
    pub elements: Vec<String>,
    pub admissible_paths: Vec<PathRecord>,
    pub initial_ideal: Vec<String>,
    pub max_degree: usize,
    pub buchberger_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
    pub u_pi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    #[serde(rename = "U")]
    pub u: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub generators: Vec<String>,
}

impl<C: Coeff> From<&PrimeComponent<C>> for PrimeRecord {
    fn from(p: &PrimeComponent<C>) -> Self {
        PrimeRecord { u: p.u.clone(), components: p.components.clone(), generators: p.ideal.render_generators() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimesResult {
    pub minimal_primes: Vec<PrimeRecord>,
    pub ass_two: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowersResult {
    pub t: usize,
    pub equal: bool,
    pub ordinary_in_symbolic: bool,
    pub witness: Option<String>,
    pub minimal_primes: Vec<PrimeRecord>,
    pub ordinary_gb_size: usize,
    pub symbolic_gb_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexResult {
    pub labeling: Option<Vec<usize>>,
    pub facets: Vec<Vec<String>>,
    /// Whether the special odd cycle search ran.
    pub searched: bool,
    pub special_odd_cycle: Option<CycleRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl CycleRecord {
    pub fn new(delta: &SimplicialComplex, cycle: &SpecialCycle) -> Self {
        CycleRecord {
            vertices: cycle.vertices.iter().map(|&v| delta.name(v).to_string()).collect(),
            facets: cycle.facets.iter().map(|&f| delta.render_facet(f)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionRecord {
    pub id: usize,
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: f64,
}

impl CriterionRecord {
    /// One-line summary, e.g. `[PASS] 3 two associated primes (12 ms): …`.
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        };
        format!("[{tag}] {} {} ({:.0} ms): {}", self.id, self.name, self.elapsed_ms, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub criteria: Vec<CriterionRecord>,
}

impl SuiteResult {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.status != Status::Fail)
    }
}
