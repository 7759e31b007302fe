//! Machine-readable analysis reports with a stable key set. Reports are
//! deterministic apart from the trailing `timing_ms` field: two runs over
//! the same input produce byte-identical JSON up to that block.

use serde::Serialize;

use crate::analysis::{Analysis, CheckStatus, LemmaVerdict};

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub group: String,
    pub order: u64,
    pub centre_size: usize,
    pub components: Vec<JsonComponent>,
    pub prime_graph: JsonPrimeGraph,
    pub bijection: String,
    pub lemmas: Vec<JsonLemma>,
    pub timing_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct JsonComponent {
    pub id: u32,
    pub elements: u64,
    pub vertices: usize,
    pub diameter: u32,
    pub primes: Vec<u64>,
    pub is_isolated_subgroup: bool,
    pub orbit_id: u32,
}

#[derive(Debug, Serialize)]
pub struct JsonPrimeGraph {
    pub primes: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub components: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct JsonLemma {
    pub id: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn build_report(
    analysis: &Analysis,
    verdicts: &[LemmaVerdict],
    timing_ms: u128,
) -> JsonReport {
    let components = analysis
        .summaries
        .iter()
        .map(|s| JsonComponent {
            id: s.id,
            elements: s.element_count,
            vertices: s.vertex_count,
            diameter: s.diameter,
            primes: s.primes.clone(),
            is_isolated_subgroup: s.is_subgroup_with_identity,
            orbit_id: s.orbit_id,
        })
        .collect();
    let prime_graph = JsonPrimeGraph {
        primes: analysis.prime_graph.primes().to_vec(),
        edges: analysis
            .prime_graph
            .edges()
            .iter()
            .map(|&(r, s)| [r, s])
            .collect(),
        components: analysis.prime_graph.components(),
    };
    let bijection = verdicts
        .iter()
        .find(|v| v.lemma == "component_prime_bijection")
        .map(|v| v.status.as_str().to_string())
        .unwrap_or_else(|| "NOT_APPLICABLE".to_string());
    let lemmas = verdicts
        .iter()
        .map(|v| JsonLemma {
            id: v.lemma.to_string(),
            status: v.status.as_str().to_string(),
            witness: v.witness.clone(),
        })
        .collect();
    JsonReport {
        group: analysis.name.clone(),
        order: analysis.order as u64,
        centre_size: analysis.centre.len(),
        components,
        prime_graph,
        bijection,
        lemmas,
        timing_ms,
    }
}

/// True when no verdict failed (inapplicable checks do not count).
pub fn no_failures(verdicts: &[LemmaVerdict]) -> bool {
    verdicts.iter().all(|v| v.status != CheckStatus::Fail)
}
