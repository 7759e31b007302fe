//! The prime graph of a finite group and the bijection between conjugation
//! classes of commuting-graph components and prime-graph components.
//!
//! Vertices are the primes dividing the group order; two primes `r`, `s`
//! are joined exactly when the group has an element of order `rs`. Edge
//! detection works from the conjugacy-class representative orders: an
//! element whose order is divisible by `rs` powers down to one of order
//! exactly `rs`, so divisibility is the right test.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::commgraph::{CommGraph, DisjointSets, Orbits};
use crate::group::{ConjugacyClassSet, ElementTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeGraphError {
    #[error("the component/prime-component bijection requires a trivial centre (centre has size {0})")]
    NontrivialCentre(usize),
}

/// Prime divisors of `n`, ascending, by trial division.
pub fn prime_factors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// The prime graph: primes dividing the group order, with `{r, s}` an edge
/// exactly when some element order is divisible by `rs`.
#[derive(Debug, Clone)]
pub struct PrimeGraph {
    primes: Vec<u64>,
    edges: Vec<(u64, u64)>,
}

impl PrimeGraph {
    pub fn build(order: u128, table: &ElementTable, classes: &ConjugacyClassSet) -> PrimeGraph {
        let primes = prime_factors(order);
        let rep_orders: BTreeSet<u64> = classes
            .classes()
            .iter()
            .map(|c| table.order_of(c.representative) as u64)
            .collect();
        let mut edges = Vec::new();
        for (i, &r) in primes.iter().enumerate() {
            for &s in &primes[i + 1..] {
                if rep_orders.iter().any(|&o| o % (r * s) == 0) {
                    edges.push((r, s));
                }
            }
        }
        PrimeGraph { primes, edges }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    /// Connected components as sorted prime lists, ordered by least prime.
    pub fn components(&self) -> Vec<Vec<u64>> {
        let idx = |p: u64| self.primes.iter().position(|&q| q == p).unwrap();
        let mut dsu = DisjointSets::new(self.primes.len());
        for &(r, s) in &self.edges {
            dsu.union(idx(r), idx(s));
        }
        let mut comps: Vec<Vec<u64>> = Vec::new();
        let mut comp_of = vec![usize::MAX; self.primes.len()];
        for (i, &p) in self.primes.iter().enumerate() {
            let root = dsu.find(i);
            if comp_of[root] == usize::MAX {
                comp_of[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[comp_of[root]].push(p);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// The set of primes dividing the order of some member of the component.
pub fn component_prime_set(graph: &CommGraph, component: u32) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &v in graph.component_vertices(component) {
        for p in prime_factors(graph.rep_order(v) as u128) {
            out.insert(p);
        }
    }
    out
}

/// Conjugation orbits of commuting-graph components together with the prime
/// set shared by each orbit.
#[derive(Debug)]
pub struct ComponentClassPartition {
    pub orbits: Orbits,
    pub pi_sets: Vec<BTreeSet<u64>>,
}

impl ComponentClassPartition {
    pub fn compute(
        graph: &CommGraph,
        table: &ElementTable,
    ) -> Result<ComponentClassPartition, PrimeGraphError> {
        if graph.centre_size() != 1 {
            return Err(PrimeGraphError::NontrivialCentre(graph.centre_size()));
        }
        let orbits = graph.component_orbits(table);
        let pi_sets = orbits
            .orbits
            .iter()
            .map(|members| component_prime_set(graph, members[0]))
            .collect();
        Ok(ComponentClassPartition { orbits, pi_sets })
    }
}

/// Outcome of the bijection check between component classes and prime-graph
/// components. A failure would falsify the implementation, not the theorem,
/// so the counterexample is described for debugging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionOutcome {
    Pass,
    Fail(String),
}

impl BijectionOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, BijectionOutcome::Pass)
    }
}

/// Checks that component-class -> prime-set is a bijection onto the
/// prime-graph components, and that the two graphs agree on connectivity.
pub fn verify_bijection(
    graph: &CommGraph,
    table: &ElementTable,
    prime_graph: &PrimeGraph,
) -> Result<BijectionOutcome, PrimeGraphError> {
    let partition = ComponentClassPartition::compute(graph, table)?;
    let prime_components: Vec<BTreeSet<u64>> = prime_graph
        .components()
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();

    // the prime set must be constant across each conjugation orbit
    for (orbit, pi) in partition.orbits.orbits.iter().zip(&partition.pi_sets) {
        for &c in orbit {
            if component_prime_set(graph, c) != *pi {
                return Ok(BijectionOutcome::Fail(format!(
                    "component {c} disagrees with its orbit on the prime set"
                )));
            }
        }
    }

    if partition.orbits.orbits.len() != prime_components.len() {
        return Ok(BijectionOutcome::Fail(format!(
            "{} component classes vs {} prime-graph components",
            partition.orbits.orbits.len(),
            prime_components.len()
        )));
    }

    let mut hit = vec![false; prime_components.len()];
    for pi in &partition.pi_sets {
        match prime_components.iter().position(|pc| pc == pi) {
            None => {
                return Ok(BijectionOutcome::Fail(format!(
                    "prime set {pi:?} of a component class is not a prime-graph component"
                )));
            }
            Some(i) if hit[i] => {
                return Ok(BijectionOutcome::Fail(format!(
                    "two component classes map to the prime-graph component {pi:?}"
                )));
            }
            Some(i) => hit[i] = true,
        }
    }
    if !hit.iter().all(|&b| b) {
        return Ok(BijectionOutcome::Fail(
            "some prime-graph component is not covered".to_string(),
        ));
    }

    let gamma_connected = graph.component_count() <= 1;
    if gamma_connected != (prime_components.len() <= 1) {
        return Ok(BijectionOutcome::Fail(
            "connectivity of the two graphs disagrees".to_string(),
        ));
    }
    Ok(BijectionOutcome::Pass)
}
