//! JSON documents read and written by the command-line tool.
//!
//! Every document carries `"format": "k5n/1"`. Rotations are strings of
//! symbols in canonical order (`"01234"`), transpositions are `"(0 1)"`.
//! Field order is fixed by the struct definitions and maps are ordered, so
//! equal values serialize to identical bytes.

use std::collections::BTreeMap;

use k5n_core::classify::{
    CandidateKey, ClassificationResult, Elimination, Filter, FragmentRefutation, Realization,
    Verdict,
};
use k5n_core::construct::Decomposition;
use k5n_core::cyclic::{white_rotation, CyclicPermutation, Route, Transposition};
use k5n_core::drawing::{optimal_crossings, AbstractDrawing, CleanReport, ValidationReport};
use k5n_core::graph::SimpleGraph;
use k5n_core::keycore::{KeyGraph, StructureReport};
use k5n_core::linsys::{KeyLinearSystem, SolutionSet};
use k5n_core::realize::{
    CombinationRecord, Fate, FragmentVerdict, GammaNode, QMap, Realizability,
    RefutationCertificate, BLACK_PAIRS,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const FORMAT: &str = "k5n/1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format {found:?}, expected {FORMAT:?}")]
    Version { found: String },
    #[error("\"n\" is {n} but {found} rotations are listed")]
    Count { n: usize, found: usize },
    #[error("{0}")]
    Invalid(#[from] k5n_core::Error),
}

fn default_format() -> String {
    FORMAT.to_string()
}

fn check_format(found: &str) -> Result<(), FormatError> {
    if found == FORMAT {
        Ok(())
    } else {
        Err(FormatError::Version {
            found: found.to_string(),
        })
    }
}

/// Parses a document, accepting a missing `format` field as the current one.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}

fn rotation_strings(rotations: &[CyclicPermutation]) -> Vec<String> {
    rotations.iter().map(ToString::to_string).collect()
}

fn parse_rotations(words: &[String]) -> Result<Vec<CyclicPermutation>, FormatError> {
    words
        .iter()
        .map(|w| white_rotation(w).map_err(FormatError::from))
        .collect()
}

fn transposition_strings(ts: &[Transposition]) -> Vec<String> {
    ts.iter().map(ToString::to_string).collect()
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask & (1 << v) != 0).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingDoc {
    #[serde(default = "default_format")]
    pub format: String,
    pub n: usize,
    pub rotations: Vec<String>,
    pub lambda: Vec<Vec<u32>>,
}

impl DrawingDoc {
    pub fn from_drawing(d: &AbstractDrawing) -> Self {
        Self {
            format: default_format(),
            n: d.n(),
            rotations: rotation_strings(d.rotations()),
            lambda: d.labels(),
        }
    }

    pub fn to_drawing(&self) -> Result<AbstractDrawing, FormatError> {
        check_format(&self.format)?;
        if self.n != self.rotations.len() {
            return Err(FormatError::Count {
                n: self.n,
                found: self.rotations.len(),
            });
        }
        Ok(AbstractDrawing::new(
            parse_rotations(&self.rotations)?,
            &self.lambda,
        )?)
    }
}

pub fn drawing_to_json(d: &AbstractDrawing) -> String {
    to_json(&DrawingDoc::from_drawing(d))
}

pub fn drawing_from_json(text: &str) -> Result<AbstractDrawing, FormatError> {
    parse::<DrawingDoc>(text)?.to_drawing()
}

/// A key; unknown fields (such as the `core` of an emitted key) are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyDoc {
    #[serde(default = "default_format")]
    pub format: String,
    pub rotations: Vec<String>,
    pub labels: Vec<Vec<u32>>,
}

impl KeyDoc {
    pub fn from_key(k: &KeyGraph) -> Self {
        Self {
            format: default_format(),
            rotations: rotation_strings(k.vertices()),
            labels: k.labels(),
        }
    }

    pub fn to_key(&self) -> Result<KeyGraph, FormatError> {
        check_format(&self.format)?;
        Ok(KeyGraph::new(
            parse_rotations(&self.rotations)?,
            &self.labels,
        )?)
    }
}

pub fn key_from_json(text: &str) -> Result<KeyGraph, FormatError> {
    parse::<KeyDoc>(text)?.to_key()
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureDoc {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub odd_cycle: Option<Vec<usize>>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Option<usize>,
    pub k23: Option<Vec<usize>>,
    pub subdivided_k4: Option<Vec<usize>>,
    pub degree_two_off_four_cycles: Vec<usize>,
    pub lonely_path: Option<[usize; 4]>,
    pub is_four_cycle: bool,
    pub is_c6_bar: bool,
}

impl From<&StructureReport> for StructureDoc {
    fn from(r: &StructureReport) -> Self {
        Self {
            vertex_count: r.vertex_count,
            edge_count: r.edge_count,
            connected: r.connected,
            bipartite: r.bipartite(),
            odd_cycle: r.odd_cycle.clone(),
            max_degree: r.max_degree,
            min_degree: r.min_degree,
            girth: r.girth,
            k23: r.k23.clone(),
            subdivided_k4: r.subdivided_k4.clone(),
            degree_two_off_four_cycles: r.degree_two_off_four_cycles.clone(),
            lonely_path: r.lonely_path,
            is_four_cycle: r.is_four_cycle,
            is_c6_bar: r.is_c6_bar,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoreDoc {
    pub edges: Vec<(usize, usize)>,
    pub structure: StructureDoc,
}

impl CoreDoc {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        Self {
            edges: g.edges(),
            structure: StructureDoc::from(&k5n_core::keycore::structure_report(g)),
        }
    }
}

/// A key together with its core, as emitted by `key`.
#[derive(Clone, Debug, Serialize)]
pub struct KeyReportDoc {
    pub format: String,
    pub rotations: Vec<String>,
    pub labels: Vec<Vec<u32>>,
    pub triangle_valid: bool,
    pub core: CoreDoc,
}

impl KeyReportDoc {
    pub fn new(k: &KeyGraph) -> Self {
        let key = KeyDoc::from_key(k);
        Self {
            format: key.format,
            rotations: key.rotations,
            labels: key.labels,
            triangle_valid: k5n_core::keycore::key_triangle_check(k),
            core: CoreDoc::from_graph(&k.core().graph),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationDoc {
    pub asymmetric: Vec<(usize, usize)>,
    pub nonzero_diagonal: Vec<usize>,
    pub triangle: Vec<(usize, usize, usize)>,
    pub below_antidistance: Vec<(usize, usize)>,
}

impl From<&ValidationReport> for ValidationDoc {
    fn from(r: &ValidationReport) -> Self {
        Self {
            asymmetric: r.asymmetric.clone(),
            nonzero_diagonal: r.nonzero_diagonal.clone(),
            triangle: r.triangle.clone(),
            below_antidistance: r.below_antidistance.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CleanDoc {
    pub same_rotation_not_four: Vec<(usize, usize)>,
    pub nonuniform: Vec<(usize, usize, usize)>,
    pub above_four: Vec<(usize, usize)>,
}

impl From<&CleanReport> for CleanDoc {
    fn from(r: &CleanReport) -> Self {
        Self {
            same_rotation_not_four: r.same_rotation_not_four.clone(),
            nonuniform: r.nonuniform.clone(),
            above_four: r.above_four.clone(),
        }
    }
}

/// Output of `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyDoc {
    pub format: String,
    pub n: usize,
    pub valid: bool,
    pub crossings: u64,
    pub optimal_crossings: u64,
    pub optimal: bool,
    pub antipodal_free: bool,
    pub antipodal_pairs: Vec<(usize, usize)>,
    pub clean: bool,
    pub validation: ValidationDoc,
    pub cleanliness: CleanDoc,
}

impl VerifyDoc {
    pub fn new(d: &AbstractDrawing) -> Self {
        let validation = d.validate();
        let clean = d.clean_report();
        let pairs = d.antipodal_pairs();
        let crossings = d.total_crossings();
        let optimal = optimal_crossings(d.n());
        Self {
            format: default_format(),
            n: d.n(),
            valid: validation.is_valid(),
            crossings,
            optimal_crossings: optimal,
            optimal: crossings == optimal,
            antipodal_free: pairs.is_empty(),
            antipodal_pairs: pairs,
            clean: clean.is_clean(),
            validation: ValidationDoc::from(&validation),
            cleanliness: CleanDoc::from(&clean),
        }
    }
}

/// Output of `solve-key`.
#[derive(Clone, Debug, Serialize)]
pub struct SystemDoc {
    pub format: String,
    pub n: u64,
    pub variables: usize,
    pub equations: Vec<Vec<i64>>,
    pub kernel_rank: usize,
    pub kernel_basis: Vec<Vec<i64>>,
    pub solutions: Vec<Vec<u64>>,
}

impl SystemDoc {
    pub fn new(system: &KeyLinearSystem, n: u64, solutions: &SolutionSet) -> Self {
        Self {
            format: default_format(),
            n,
            variables: system.variable_count(),
            equations: (0..system.variable_count())
                .map(|i| system.equation(i))
                .collect(),
            kernel_rank: solutions.kernel_rank,
            kernel_basis: system.kernel_basis(),
            solutions: solutions.solutions.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RouteDoc {
    pub transpositions: Vec<String>,
    pub order: Vec<String>,
}

impl From<&Route> for RouteDoc {
    fn from(r: &Route) -> Self {
        Self {
            transpositions: transposition_strings(r.transpositions()),
            order: transposition_strings(r.witness_order()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RouteOptionsDoc {
    pub pair: (usize, usize),
    pub routes: Vec<RouteDoc>,
}

fn q_doc(q: &QMap) -> BTreeMap<String, Vec<String>> {
    BLACK_PAIRS
        .iter()
        .zip(q.iter())
        .map(|(&(k, l), set)| (format!("{k}{l}"), transposition_strings(set)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FateDoc {
    Conflict { with: u8 },
    Expanded { children: Vec<GammaNodeDoc> },
    Complete,
}

/// One node of the depth-first black-rotation search.
#[derive(Clone, Debug, Serialize)]
pub struct GammaNodeDoc {
    pub black: u8,
    pub gamma: String,
    #[serde(flatten)]
    pub fate: FateDoc,
}

impl From<&GammaNode> for GammaNodeDoc {
    fn from(node: &GammaNode) -> Self {
        let fate = match &node.fate {
            Fate::Conflict { with } => FateDoc::Conflict { with: *with },
            Fate::Expanded(children) => FateDoc::Expanded {
                children: children.iter().map(GammaNodeDoc::from).collect(),
            },
            Fate::Complete => FateDoc::Complete,
        };
        Self {
            black: node.black,
            gamma: node.gamma.to_string(),
            fate,
        }
    }
}

/// One choice of white-pair antiroutes, its induced black-pair sets and the
/// search that failed to fit black rotations to them.
#[derive(Clone, Debug, Serialize)]
pub struct CombinationDoc {
    pub choice: Vec<usize>,
    pub q: BTreeMap<String, Vec<String>>,
    pub search: Vec<GammaNodeDoc>,
}

impl From<&CombinationRecord> for CombinationDoc {
    fn from(c: &CombinationRecord) -> Self {
        Self {
            choice: c.choice.clone(),
            q: q_doc(&c.q),
            search: c.tree.iter().map(GammaNodeDoc::from).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateDoc {
    pub rotations: Vec<String>,
    pub labels: Vec<Vec<u32>>,
    pub route_options: Vec<RouteOptionsDoc>,
    pub combinations: Vec<CombinationDoc>,
}

impl From<&RefutationCertificate> for CertificateDoc {
    fn from(c: &RefutationCertificate) -> Self {
        Self {
            rotations: rotation_strings(&c.rotations),
            labels: c.labels.clone(),
            route_options: c
                .route_options
                .iter()
                .map(|(pair, routes)| RouteOptionsDoc {
                    pair: *pair,
                    routes: routes.iter().map(RouteDoc::from).collect(),
                })
                .collect(),
            combinations: c.combinations.iter().map(CombinationDoc::from).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessDoc {
    pub routes: BTreeMap<String, RouteDoc>,
    pub gamma: Vec<String>,
    pub q: BTreeMap<String, Vec<String>>,
}

/// Output of `forbid-check`.
#[derive(Clone, Debug, Serialize)]
pub struct FragmentDoc {
    pub format: String,
    pub realizable: bool,
    pub combinations: usize,
    pub examined: usize,
    pub certificate_verified: Option<bool>,
    pub witness: Option<WitnessDoc>,
    pub certificate: Option<CertificateDoc>,
}

impl From<&FragmentVerdict> for FragmentDoc {
    fn from(v: &FragmentVerdict) -> Self {
        let (witness, certificate, verified) = match &v.outcome {
            Realizability::Realizable {
                assignment,
                profile,
            } => {
                let witness = WitnessDoc {
                    routes: assignment
                        .routes
                        .iter()
                        .map(|(&(i, j), r)| (format!("{i}-{j}"), RouteDoc::from(r)))
                        .collect(),
                    gamma: rotation_strings(&profile.gamma),
                    q: q_doc(&profile.q),
                };
                (Some(witness), None, None)
            }
            Realizability::Refuted(cert) => {
                (None, Some(CertificateDoc::from(cert)), Some(cert.verify()))
            }
        };
        Self {
            format: default_format(),
            realizable: v.is_realizable(),
            combinations: v.combinations,
            examined: v.examined,
            certificate_verified: verified,
            witness,
            certificate,
        }
    }
}

/// Output of `decompose`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionDoc {
    pub format: String,
    pub pairs: Vec<(usize, usize)>,
    pub residual: DrawingDoc,
    pub r: usize,
    pub s: usize,
    pub residual_indices: Vec<usize>,
    pub intermediate_crossings: Vec<u64>,
}

impl From<&Decomposition> for DecompositionDoc {
    fn from(d: &Decomposition) -> Self {
        Self {
            format: default_format(),
            pairs: d.pairs.clone(),
            residual: DrawingDoc::from_drawing(&d.residual),
            r: d.identified.0,
            s: d.identified.1,
            residual_indices: d.residual_indices.clone(),
            intermediate_crossings: d.intermediate_crossings.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FragmentRefutationDoc {
    pub rotations: Vec<String>,
    pub vertices: Vec<usize>,
    pub certificate: CertificateDoc,
}

impl From<&FragmentRefutation> for FragmentRefutationDoc {
    fn from(f: &FragmentRefutation) -> Self {
        Self {
            rotations: rotation_strings(&f.rotations),
            vertices: f.vertices.clone(),
            certificate: CertificateDoc::from(&f.certificate),
        }
    }
}

/// The witness of an elimination, tagged by kind.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EliminationWitnessDoc {
    OddLabelCycle { cycle: Vec<usize> },
    Disconnected { component: Vec<usize> },
    DegreeAboveThree { vertex: usize },
    ContainsK23 { embedding: Vec<usize> },
    DegreeBelowTwo { vertex: usize },
    GirthNotFour { girth: Option<usize> },
    DegreeTwoOffFourCycle { vertex: usize },
    ContainsSubdividedK4 { embedding: Vec<usize> },
    LonelyPath { path: [usize; 4] },
    NoPositiveSolution { n: u64 },
    NoRotationAssignment,
    FragmentRefuted { refutations: Vec<FragmentRefutationDoc> },
}

impl From<&Elimination> for EliminationWitnessDoc {
    fn from(e: &Elimination) -> Self {
        match e {
            Elimination::OddLabelCycle(c) => Self::OddLabelCycle { cycle: c.clone() },
            Elimination::Disconnected { component } => Self::Disconnected {
                component: mask_vertices(*component),
            },
            Elimination::DegreeAboveThree { vertex } => Self::DegreeAboveThree { vertex: *vertex },
            Elimination::ContainsK23(v) => Self::ContainsK23 {
                embedding: v.clone(),
            },
            Elimination::DegreeBelowTwo { vertex } => Self::DegreeBelowTwo { vertex: *vertex },
            Elimination::GirthNotFour { girth } => Self::GirthNotFour { girth: *girth },
            Elimination::DegreeTwoOffFourCycle { vertex } => {
                Self::DegreeTwoOffFourCycle { vertex: *vertex }
            }
            Elimination::ContainsSubdividedK4(v) => Self::ContainsSubdividedK4 {
                embedding: v.clone(),
            },
            Elimination::LonelyPath(p) => Self::LonelyPath { path: *p },
            Elimination::NoPositiveSolution { n } => Self::NoPositiveSolution { n: *n },
            Elimination::NoRotationAssignment => Self::NoRotationAssignment,
            Elimination::FragmentRefuted(list) => Self::FragmentRefuted {
                refutations: list.iter().map(FragmentRefutationDoc::from).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationDoc {
    pub filter: &'static str,
    pub property: &'static str,
    pub witness: EliminationWitnessDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateDoc {
    pub index: usize,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub side: Option<Vec<usize>>,
    pub labels: Option<Vec<Vec<u32>>>,
    pub passed: Vec<&'static str>,
    pub eliminated: Option<EliminationDoc>,
    pub assignments: Vec<Vec<String>>,
    pub refuted_assignments: Vec<FragmentRefutationDoc>,
    pub solutions: Vec<Vec<u64>>,
}

impl CandidateDoc {
    pub fn new(index: usize, c: &CandidateKey) -> Self {
        Self {
            index,
            vertices: c.vertex_count(),
            edges: c.core.edges(),
            side: c.side.map(mask_vertices),
            labels: c.labels.clone(),
            passed: c.passed.iter().map(|f| f.name()).collect(),
            eliminated: c.eliminated.as_ref().map(|e| EliminationDoc {
                filter: e.filter().name(),
                property: e.filter().property(),
                witness: EliminationWitnessDoc::from(e),
            }),
            assignments: c.assignments.iter().map(|a| rotation_strings(a)).collect(),
            refuted_assignments: c
                .refuted_assignments
                .iter()
                .map(FragmentRefutationDoc::from)
                .collect(),
            solutions: c.solutions.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterDoc {
    pub name: &'static str,
    pub property: &'static str,
    pub eliminated: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyDoc {
    pub r: usize,
    pub s: usize,
    pub core: &'static str,
    pub classes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationDoc {
    pub candidate: usize,
    pub rotations: Vec<String>,
    pub bags: Vec<u64>,
    pub identified: Option<(usize, usize)>,
}

impl From<&Realization> for RealizationDoc {
    fn from(r: &Realization) -> Self {
        Self {
            candidate: r.candidate,
            rotations: rotation_strings(&r.rotations),
            bags: r.bags.clone(),
            identified: r.identified,
        }
    }
}

/// Output of `classify`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationDoc {
    pub format: String,
    pub n: u64,
    pub verdict: &'static str,
    pub families: Vec<FamilyDoc>,
    pub assumptions: Vec<&'static str>,
    pub filters: Vec<FilterDoc>,
    pub survivors: Vec<usize>,
    pub realizations: Vec<RealizationDoc>,
    pub candidates: Vec<CandidateDoc>,
}

pub fn core_name(core: k5n_core::classify::CoreShape) -> &'static str {
    match core {
        k5n_core::classify::CoreShape::FourCycle => "four-cycle",
        k5n_core::classify::CoreShape::C6Bar => "c6-bar",
    }
}

impl From<&ClassificationResult> for ClassificationDoc {
    fn from(r: &ClassificationResult) -> Self {
        let (verdict, families) = match &r.verdict {
            Verdict::NoAntipodalFreeDrawing => ("none", Vec::new()),
            Verdict::Families(list) => (
                "families",
                list.iter()
                    .map(|f| FamilyDoc {
                        r: f.r,
                        s: f.s,
                        core: core_name(f.core),
                        classes: f.classes.clone(),
                    })
                    .collect(),
            ),
        };
        Self {
            format: default_format(),
            n: r.n,
            verdict,
            families,
            assumptions: r.assumptions.clone(),
            filters: Filter::ALL
                .iter()
                .map(|&f| FilterDoc {
                    name: f.name(),
                    property: f.property(),
                    eliminated: r.eliminated_by(f),
                })
                .collect(),
            survivors: r
                .candidates
                .iter()
                .enumerate()
                .filter(|(_, c)| c.survived())
                .map(|(i, _)| i)
                .collect(),
            realizations: r.realizations.iter().map(RealizationDoc::from).collect(),
            candidates: r
                .candidates
                .iter()
                .enumerate()
                .map(|(i, c)| CandidateDoc::new(i, c))
                .collect(),
        }
    }
}

/// A plain-text summary of a classification run.
pub fn classification_table(r: &ClassificationResult) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "n = {}, {} candidate keys\n\n",
        r.n,
        r.candidates.len()
    ));
    let width = Filter::ALL.iter().map(|f| f.name().len()).max().unwrap_or(0);
    out.push_str(&format!("{:<width$}  eliminated\n", "filter"));
    for f in Filter::ALL {
        out.push_str(&format!("{:<width$}  {:>10}\n", f.name(), r.eliminated_by(f)));
    }
    out.push_str(&format!(
        "{:<width$}  {:>10}\n\n",
        "survivors",
        r.survivors().count()
    ));
    match &r.verdict {
        Verdict::NoAntipodalFreeDrawing => {
            out.push_str("verdict: no antipodal-free optimal drawing\n");
        }
        Verdict::Families(list) => {
            out.push_str("verdict: families\n");
            for f in list {
                let classes: Vec<String> = f
                    .classes
                    .iter()
                    .map(|(r, s)| format!("D({r},{s})"))
                    .collect();
                out.push_str(&format!(
                    "  D({},{})  core {}  classes {}\n",
                    f.r,
                    f.s,
                    core_name(f.core),
                    classes.join(" ")
                ));
            }
        }
    }
    out.push_str("\nassuming:\n");
    for a in &r.assumptions {
        out.push_str(&format!("  {a}\n"));
    }
    out
}
