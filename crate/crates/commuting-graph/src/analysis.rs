//! Executable checkers for structural facts about commuting graphs:
//! isolated subgroups, strongly embedded stabilizers, involution distance
//! bounds, Frobenius criteria, distance bounds for elements outside a
//! normal subgroup, odd-order clique components, and the corpus-level
//! diameter bound.
//!
//! Every checker returns [`CheckStatus::Pass`] or
//! [`CheckStatus::NotApplicable`] on sound input; a [`CheckStatus::Fail`]
//! carries a witness and indicates an implementation bug, since each checked
//! statement is a theorem for the groups it applies to.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::commgraph::{AdjacencyMode, CommGraph, CommGraphError, Engine, Orbits};
use crate::group::{ConjugacyClassSet, ElementTable, Group, GroupError};
use crate::perm::Permutation;
use crate::primegraph::{
    self, component_prime_set, BijectionOutcome, PrimeGraph, PrimeGraphError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    CommGraph(#[from] CommGraphError),
    #[error(transparent)]
    PrimeGraph(#[from] PrimeGraphError),
    #[error("the reduced engine requires a trivial centre (centre has size {0}); use the full engine")]
    ReducedNeedsTrivialCentre(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

/// Verdict of one checker on one group. A failure always carries a witness;
/// passes and inapplicable checks never do.
#[derive(Debug, Clone)]
pub struct LemmaVerdict {
    pub lemma: &'static str,
    pub group: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

impl LemmaVerdict {
    fn pass(lemma: &'static str, group: &str) -> LemmaVerdict {
        LemmaVerdict {
            lemma,
            group: group.to_string(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    fn not_applicable(lemma: &'static str, group: &str) -> LemmaVerdict {
        LemmaVerdict {
            lemma,
            group: group.to_string(),
            status: CheckStatus::NotApplicable,
            witness: None,
        }
    }

    fn fail(lemma: &'static str, group: &str, witness: String) -> LemmaVerdict {
        LemmaVerdict {
            lemma,
            group: group.to_string(),
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }
}

/// Per-component record produced by the pipeline.
#[derive(Debug, Clone)]
pub struct ComponentSummary {
    pub id: u32,
    pub element_count: u64,
    pub vertex_count: usize,
    /// Diameter in the original element graph.
    pub diameter: u32,
    pub primes: Vec<u64>,
    pub is_subgroup_with_identity: bool,
    /// Index of the conjugation orbit of this component.
    pub orbit_id: u32,
    /// Index of the setwise stabilizer of the component, i.e. the orbit size.
    pub stabilizer_index: u64,
}

/// The full per-group pipeline: enumerate, collapse, components, diameters,
/// prime graph.
#[derive(Debug)]
pub struct Analysis {
    pub name: String,
    pub order: u128,
    pub table: ElementTable,
    pub centre: Vec<u32>,
    pub classes: ConjugacyClassSet,
    pub graph: CommGraph,
    pub engine: Engine,
    pub diameters: Vec<u32>,
    pub component_orbits: Orbits,
    pub prime_graph: PrimeGraph,
    pub summaries: Vec<ComponentSummary>,
}

impl Analysis {
    /// Runs the pipeline. `engine` of `None` picks the reduced engine for
    /// trivial-centre groups and plain BFS otherwise; requesting the
    /// reduced engine for a group with a nontrivial centre is an error.
    pub fn run(
        group: &Group,
        name: &str,
        engine: Option<Engine>,
        cap: usize,
        mode: AdjacencyMode,
    ) -> Result<Analysis, AnalysisError> {
        let order = group.order();
        let table = group.enumerate(cap)?;
        let centre = table.center();
        let engine = match engine {
            Some(Engine::Reduced) if centre.len() != 1 => {
                return Err(AnalysisError::ReducedNeedsTrivialCentre(centre.len()));
            }
            Some(e) => e,
            None if centre.len() == 1 => Engine::Reduced,
            None => Engine::Full,
        };
        let classes = table.conjugacy_classes();
        let graph = CommGraph::build(&table, &centre, mode);
        let carried: u64 = (0..graph.component_count() as u32)
            .map(|c| graph.component_element_count(c))
            .sum();
        assert_eq!(
            carried,
            (table.len() - centre.len()) as u64,
            "components must partition the non-central elements"
        );
        let diameters = graph.component_diameters(&table, engine)?;
        let component_orbits = graph.component_orbits(&table);
        let prime_graph = PrimeGraph::build(order, &table, &classes);

        let orbit_subgroup: Vec<bool> = component_orbits
            .orbits
            .iter()
            .map(|orbit| {
                let ids = component_element_ids(&graph, orbit[0]);
                table.is_subgroup(&ids)
            })
            .collect();
        let summaries = (0..graph.component_count() as u32)
            .map(|c| {
                let orbit_id = component_orbits.orbit_of[c as usize];
                ComponentSummary {
                    id: c,
                    element_count: graph.component_element_count(c),
                    vertex_count: graph.component_vertices(c).len(),
                    diameter: diameters[c as usize],
                    primes: component_prime_set(&graph, c).into_iter().collect(),
                    is_subgroup_with_identity: orbit_subgroup[orbit_id as usize],
                    orbit_id,
                    stabilizer_index: component_orbits.orbits[orbit_id as usize].len() as u64,
                }
            })
            .collect();

        Ok(Analysis {
            name: name.to_string(),
            order,
            table,
            centre,
            classes,
            graph,
            engine,
            diameters,
            component_orbits,
            prime_graph,
            summaries,
        })
    }

    pub fn trivial_centre(&self) -> bool {
        self.centre.len() == 1
    }

    pub fn max_component_diameter(&self) -> u32 {
        self.diameters.iter().copied().max().unwrap_or(0)
    }
}

/// All element ids of a component, ascending, identity excluded.
pub fn component_element_ids(graph: &CommGraph, component: u32) -> Vec<u32> {
    let mut ids: Vec<u32> = graph
        .component_vertices(component)
        .iter()
        .flat_map(|&v| graph.vertices().members(v).iter().copied())
        .collect();
    ids.sort_unstable();
    ids
}

/// The main diameter bound: every component of a trivial-centre group has
/// diameter at most 10.
pub fn check_diameter_bound(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "component_diameter_le_10";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    match a
        .diameters
        .iter()
        .enumerate()
        .find(|&(_, &d)| d > 10)
    {
        Some((c, &d)) => LemmaVerdict::fail(
            LEMMA,
            &a.name,
            format!("component {c} has diameter {d} > 10"),
        ),
        None => LemmaVerdict::pass(LEMMA, &a.name),
    }
}

/// Bijection between component classes and prime-graph components.
pub fn check_bijection(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "component_prime_bijection";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    match primegraph::verify_bijection(&a.graph, &a.table, &a.prime_graph) {
        Ok(BijectionOutcome::Pass) => LemmaVerdict::pass(LEMMA, &a.name),
        Ok(BijectionOutcome::Fail(detail)) => LemmaVerdict::fail(LEMMA, &a.name, detail),
        Err(e) => LemmaVerdict::fail(LEMMA, &a.name, e.to_string()),
    }
}

/// A component containing a whole conjugacy class is a normal subset.
pub fn check_class_component_normality(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "class_component_normality";
    let mut any = false;
    for class in a.classes.classes() {
        if class.representative == 0 {
            continue;
        }
        let comps: BTreeSet<u32> = class
            .members
            .iter()
            .filter_map(|&m| a.graph.vertices().vertex_of(m))
            .map(|v| a.graph.component_of(v))
            .collect();
        if comps.len() != 1 {
            continue;
        }
        any = true;
        let c = *comps.iter().next().unwrap();
        let ids = component_element_ids(&a.graph, c);
        if !a.table.is_normal_subset(&ids) {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!(
                    "component {c} contains the class of {} but is not a normal subset",
                    a.table.element(class.representative).cycle_string()
                ),
            );
        }
    }
    if any {
        LemmaVerdict::pass(LEMMA, &a.name)
    } else {
        LemmaVerdict::not_applicable(LEMMA, &a.name)
    }
}

/// With at least two conjugacy classes of involutions, the involutions span
/// a connected subgraph of diameter at most 3, and every element of even
/// order lies in their component.
pub fn check_involution_bound(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "involution_diameter_le_3";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let involution_classes = a
        .classes
        .classes()
        .iter()
        .filter(|c| a.table.order_of(c.representative) == 2)
        .count();
    if involution_classes < 2 {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let inv_vertices: Vec<u32> = (0..a.graph.vertex_count() as u32)
        .filter(|&v| a.graph.rep_order(v) == 2)
        .collect();
    let comps: BTreeSet<u32> = inv_vertices
        .iter()
        .map(|&v| a.graph.component_of(v))
        .collect();
    if comps.len() != 1 {
        return LemmaVerdict::fail(
            LEMMA,
            &a.name,
            format!("involutions spread over {} components", comps.len()),
        );
    }
    let even_component = *comps.iter().next().unwrap();

    // pairwise distances within the involution-induced subgraph, swept from
    // one involution per conjugation orbit
    let is_involution = |v: u32| a.graph.rep_order(v) == 2;
    let orbits = a.graph.vertex_orbits(&a.table);
    for orbit in &orbits.orbits {
        let v = orbit[0];
        if !is_involution(v) {
            continue;
        }
        let dist = a.graph.restricted_distances(&[v], is_involution);
        for &w in &inv_vertices {
            match dist[w as usize] {
                Some(d) if d <= 3 => {}
                Some(d) => {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        format!(
                            "involutions {} and {} are {d} apart in the involution subgraph",
                            a.table
                                .element(a.graph.vertices().representative(v))
                                .cycle_string(),
                            a.table
                                .element(a.graph.vertices().representative(w))
                                .cycle_string(),
                        ),
                    );
                }
                None => {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        "the involution subgraph is disconnected".to_string(),
                    );
                }
            }
        }
    }

    // every even-order element shares the involution component
    for v in 0..a.graph.vertex_count() as u32 {
        if a.graph.rep_order(v).is_multiple_of(2) && a.graph.component_of(v) != even_component {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!(
                    "even-order element {} avoids the involution component",
                    a.table
                        .element(a.graph.vertices().representative(v))
                        .cycle_string()
                ),
            );
        }
    }
    LemmaVerdict::pass(LEMMA, &a.name)
}

/// Direct test of the isolation conditions for a subgroup `H`: every
/// centralizer of a nontrivial member stays in `H`, and distinct conjugates
/// of `H` meet trivially.
fn isolation_witness(table: &ElementTable, ids: &[u32]) -> Option<String> {
    let mut member = vec![false; table.len()];
    member[0] = true;
    for &id in ids {
        member[id as usize] = true;
    }
    for &h in ids {
        if let Some(&y) = table
            .centralizer(h)
            .iter()
            .find(|&&y| !member[y as usize])
        {
            return Some(format!(
                "centralizer of {} leaks outside: contains {}",
                table.element(h).cycle_string(),
                table.element(y).cycle_string()
            ));
        }
    }
    let nontrivial = ids.iter().filter(|&&id| id != 0).count();
    let mut scratch = vec![0u16; table.degree()];
    for g in 0..table.len() as u32 {
        let mut inside = 0usize;
        let mut sample = None;
        for &h in ids {
            if h == 0 {
                continue;
            }
            let hg = table.conjugate_into(h, g, &mut scratch);
            if member[hg as usize] {
                inside += 1;
                sample = Some(h);
            }
        }
        if inside != 0 && inside != nontrivial {
            return Some(format!(
                "H and its conjugate by {} meet in a proper nontrivial subset (e.g. {}^g)",
                table.element(g).cycle_string(),
                table.element(sample.unwrap()).cycle_string()
            ));
        }
    }
    None
}

/// Components that are subgroups with the identity must satisfy the full
/// isolation definition.
pub fn check_isolated_components(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "isolated_component_subgroups";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let mut any = false;
    for orbit in &a.component_orbits.orbits {
        let c = orbit[0];
        if !a.summaries[c as usize].is_subgroup_with_identity {
            continue;
        }
        any = true;
        // a connected graph makes the lone component all of G, which is
        // isolated for free: every centralizer lands inside it and there is
        // nothing outside its normalizer
        if a.summaries[c as usize].element_count + 1 == a.table.len() as u64 {
            continue;
        }
        let ids = component_element_ids(&a.graph, c);
        if let Some(witness) = isolation_witness(&a.table, &ids) {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!("component {c}: {witness}"),
            );
        }
    }
    if any {
        LemmaVerdict::pass(LEMMA, &a.name)
    } else {
        LemmaVerdict::not_applicable(LEMMA, &a.name)
    }
}

/// For a component with a proper setwise stabilizer `M`, `M` is strongly
/// `p`-embedded for every prime `p` of the component: `p` divides `|M|` but
/// no intersection `M \cap M^g` with `g` outside `M` has order divisible
/// by `p`.
pub fn check_strongly_embedded(a: &Analysis) -> LemmaVerdict {
    const LEMMA: &str = "stabilizer_strongly_embedded";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let mut any = false;
    for orbit in &a.component_orbits.orbits {
        if orbit.len() == 1 {
            continue; // stabilizer is the whole group
        }
        any = true;
        let c = orbit[0];
        let primes = component_prime_set(&a.graph, c);
        let anchor = a
            .graph
            .vertices()
            .representative(a.graph.component_vertices(c)[0]);
        let mut scratch = vec![0u16; a.table.degree()];
        let mut in_m = vec![false; a.table.len()];
        let mut m_ids = Vec::new();
        for g in 0..a.table.len() as u32 {
            let img = a.table.conjugate_into(anchor, g, &mut scratch);
            let v = a.graph.vertices().vertex_of(img).unwrap();
            if a.graph.component_of(v) == c {
                in_m[g as usize] = true;
                m_ids.push(g);
            }
        }
        assert_eq!(
            m_ids.len() as u64 * orbit.len() as u64,
            a.table.len() as u64,
            "orbit-stabilizer mismatch for the component stabilizer"
        );
        for &p in &primes {
            if !(m_ids.len() as u64).is_multiple_of(p) {
                return LemmaVerdict::fail(
                    LEMMA,
                    &a.name,
                    format!("{p} does not divide |Stab| = {}", m_ids.len()),
                );
            }
        }
        // one representative per right coset of M
        let mut covered = in_m.clone();
        let mut prod = Vec::with_capacity(a.table.degree());
        for g in 0..a.table.len() as u32 {
            if covered[g as usize] {
                continue;
            }
            for &m in &m_ids {
                covered[a.table.product_into(m, g, &mut prod) as usize] = true;
            }
            let mut overlap = 0u64;
            for &m in &m_ids {
                if in_m[a.table.conjugate_into(m, g, &mut scratch) as usize] {
                    overlap += 1;
                }
            }
            for &p in &primes {
                if overlap.is_multiple_of(p) {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        format!(
                            "|M meet M^g| = {overlap} is divisible by {p} for g = {}",
                            a.table.element(g).cycle_string()
                        ),
                    );
                }
            }
        }
    }
    if any {
        LemmaVerdict::pass(LEMMA, &a.name)
    } else {
        LemmaVerdict::not_applicable(LEMMA, &a.name)
    }
}

/// In a non-soluble group, a component avoiding the prime 2 is the set of
/// nontrivial elements of an abelian subgroup, hence a clique.
pub fn check_odd_components_are_cliques(a: &Analysis, non_soluble: bool) -> LemmaVerdict {
    const LEMMA: &str = "odd_components_are_cliques";
    if !non_soluble || !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    for orbit in &a.component_orbits.orbits {
        let c = orbit[0];
        let summary = &a.summaries[c as usize];
        if summary.primes.contains(&2) {
            continue;
        }
        if summary.diameter > 1 {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!(
                    "odd component {c} has diameter {} > 1",
                    summary.diameter
                ),
            );
        }
        if !summary.is_subgroup_with_identity {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!("odd component {c} is not a subgroup with the identity"),
            );
        }
    }
    LemmaVerdict::pass(LEMMA, &a.name)
}

/// A normal subgroup of the analyzed group, materialized as element ids of
/// the ambient table.
#[derive(Debug)]
pub struct NormalSubgroup {
    pub name: String,
    pub member: Vec<bool>,
    pub generator_ids: Vec<u32>,
    pub size: u64,
}

impl NormalSubgroup {
    /// Closes the given generators inside the ambient table and verifies
    /// normality. Errors if a generator is not in the group or the closure
    /// is not normal.
    pub fn resolve(
        table: &ElementTable,
        name: &str,
        generators: &[Permutation],
    ) -> Result<NormalSubgroup, GroupError> {
        let mut generator_ids = Vec::new();
        for g in generators {
            generator_ids.push(table.id_of(g).ok_or(GroupError::BadElementId)?);
        }
        let mut member = vec![false; table.len()];
        member[0] = true;
        let mut queue = vec![0u32];
        for &g in &generator_ids {
            if !member[g as usize] {
                member[g as usize] = true;
                queue.push(g);
            }
        }
        let mut scratch = Vec::with_capacity(table.degree());
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &generator_ids {
                let y = table.product_into(x, g, &mut scratch);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        let ids: Vec<u32> = (0..table.len() as u32)
            .filter(|&i| member[i as usize])
            .collect();
        if !table.is_normal_subset(&ids) {
            return Err(GroupError::NotNormal);
        }
        Ok(NormalSubgroup {
            name: name.to_string(),
            member,
            generator_ids,
            size: ids.len() as u64,
        })
    }

    pub fn contains(&self, id: u32) -> bool {
        self.member[id as usize]
    }
}

/// Distance from every vertex to the nearest vertex containing a member of
/// the class, plus the element-level adjustment encoded as: distance 0 at a
/// source vertex means some member shares the vertex.
fn class_vertex_distances(a: &Analysis, class_members: &[u32]) -> Vec<Option<u32>> {
    let sources: BTreeSet<u32> = class_members
        .iter()
        .filter_map(|&m| a.graph.vertices().vertex_of(m))
        .collect();
    let sources: Vec<u32> = sources.into_iter().collect();
    a.graph.multi_source_distances(&sources)
}

/// For a class with `a^G = a^K` (`K` normal), every non-central element
/// outside `K` is within distance 4 of the class.
pub fn check_outside_distance4(a: &Analysis, k: &NormalSubgroup) -> LemmaVerdict {
    const LEMMA: &str = "outside_distance_le_4";
    if !a.trivial_centre() {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let mut applicable = false;
    let mut scratch = vec![0u16; a.table.degree()];
    for class in a.classes.classes() {
        if class.representative == 0 {
            continue;
        }
        // a^K = a^G exactly when the K-orbit reaches the whole class
        let mut k_orbit = vec![class.representative];
        let mut seen: BTreeSet<u32> = k_orbit.iter().copied().collect();
        let mut head = 0;
        while head < k_orbit.len() {
            let x = k_orbit[head];
            head += 1;
            for &g in &k.generator_ids {
                let y = a.table.conjugate_into(x, g, &mut scratch);
                if seen.insert(y) {
                    k_orbit.push(y);
                }
            }
        }
        if k_orbit.len() != class.members.len() {
            continue;
        }
        applicable = true;
        let dist = class_vertex_distances(a, &class.members);
        for v in 0..a.graph.vertex_count() as u32 {
            let rep = a.graph.vertices().representative(v);
            if k.contains(rep) {
                continue;
            }
            // vertex distance 0 means an element of the class shares the
            // vertex, so the element distance is at most 1
            match dist[v as usize] {
                Some(d) if d <= 4 => {}
                Some(d) => {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        format!(
                            "d({}, class of {}) = {d} > 4 outside {}",
                            a.table.element(rep).cycle_string(),
                            a.table.element(class.representative).cycle_string(),
                            k.name
                        ),
                    );
                }
                None => {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        format!(
                            "{} outside {} cannot reach the class of {}",
                            a.table.element(rep).cycle_string(),
                            k.name,
                            a.table.element(class.representative).cycle_string()
                        ),
                    );
                }
            }
        }
    }
    if applicable {
        LemmaVerdict::pass(LEMMA, &a.name)
    } else {
        LemmaVerdict::not_applicable(LEMMA, &a.name)
    }
}

/// Instance scan for the sharper bound: `x` outside `K` with a prime-order
/// power `x_p` inside `K` whose centralizer in `K` is cyclic, and a class
/// representative `a` whose centralizer in `<x>K` has order divisible by
/// `p` (so a nontrivial `p`-element `f` centralizes `a`). Each instance
/// found must satisfy `d(x, a^G) <= 3`. Scans are capped at groups of order
/// at most `10^4`.
pub fn check_outside_distance3(a: &Analysis, k: &NormalSubgroup) -> LemmaVerdict {
    const LEMMA: &str = "outside_distance_le_3";
    if !a.trivial_centre() || a.table.len() > 10_000 {
        return LemmaVerdict::not_applicable(LEMMA, &a.name);
    }
    let mut instances = 0usize;
    let mut scratch = Vec::with_capacity(a.table.degree());
    for xclass in a.classes.classes() {
        let x = xclass.representative;
        if x == 0 || k.contains(x) {
            continue;
        }
        let m = a.table.order_of(x) as u64;
        for &p in &primegraph::prime_factors(m as u128) {
            // the unique subgroup of order p in <x>, if it lies in K
            let xp = power_id(&a.table, x, m / p, &mut scratch);
            if !k.contains(xp) {
                continue;
            }
            let ck: Vec<u32> = a
                .table
                .centralizer(xp)
                .into_iter()
                .filter(|&y| k.contains(y))
                .collect();
            if !is_cyclic(&a.table, &ck) {
                continue;
            }
            // G0 = <x>K as an id set
            let g0 = span(&a.table, &k.generator_ids, x);
            for aclass in a.classes.classes() {
                let rep = aclass.representative;
                if rep == 0 {
                    continue;
                }
                let c_g0 = g0
                    .iter()
                    .filter(|&&y| {
                        a.table
                            .element(y)
                            .commutes_with_unchecked(a.table.element(rep))
                    })
                    .count() as u64;
                if !c_g0.is_multiple_of(p) {
                    continue; // no nontrivial p-element centralizes a in G0
                }
                instances += 1;
                let dist = class_vertex_distances(a, &aclass.members);
                let v = a.graph.vertices().vertex_of(x).unwrap();
                let d_ok = if aclass.members.binary_search(&x).is_ok() {
                    true
                } else {
                    matches!(dist[v as usize], Some(d) if d <= 3)
                };
                if !d_ok {
                    return LemmaVerdict::fail(
                        LEMMA,
                        &a.name,
                        format!(
                            "d({}, class of {}) exceeds 3 with x_p = {}, p = {p}",
                            a.table.element(x).cycle_string(),
                            a.table.element(rep).cycle_string(),
                            a.table.element(xp).cycle_string()
                        ),
                    );
                }
            }
        }
    }
    if instances == 0 {
        LemmaVerdict::not_applicable(LEMMA, &a.name)
    } else {
        LemmaVerdict::pass(LEMMA, &a.name)
    }
}

fn power_id(table: &ElementTable, x: u32, exp: u64, scratch: &mut Vec<u16>) -> u32 {
    let mut acc = 0u32; // identity
    for _ in 0..exp {
        acc = table.product_into(acc, x, scratch);
    }
    acc
}

fn is_cyclic(table: &ElementTable, ids: &[u32]) -> bool {
    let n = ids.len() as u32;
    ids.iter().any(|&y| table.order_of(y) == n)
}

/// Id set of `<gens, x>` inside the ambient table.
fn span(table: &ElementTable, gens: &[u32], x: u32) -> Vec<u32> {
    let mut member = vec![false; table.len()];
    member[0] = true;
    let mut queue = vec![0u32];
    let mut all_gens: Vec<u32> = gens.to_vec();
    all_gens.push(x);
    for &g in &all_gens {
        if !member[g as usize] {
            member[g as usize] = true;
            queue.push(g);
        }
    }
    let mut scratch = Vec::with_capacity(table.degree());
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        for &g in &all_gens {
            let z = table.product_into(y, g, &mut scratch);
            if !member[z as usize] {
                member[z as usize] = true;
                queue.push(z);
            }
        }
    }
    (0..table.len() as u32)
        .filter(|&i| member[i as usize])
        .collect()
}

/// Ids of the subgroup generated by the given permutations inside the
/// ambient table; errors if a generator does not belong to the group.
pub fn subgroup_span(
    table: &ElementTable,
    generators: &[Permutation],
) -> Result<Vec<u32>, GroupError> {
    let mut gen_ids = Vec::new();
    for g in generators {
        gen_ids.push(table.id_of(g).ok_or(GroupError::BadElementId)?);
    }
    Ok(span(table, &gen_ids, 0))
}

/// Evaluates both Frobenius criteria on a (kernel, complement) pair and
/// compares against the expected verdict. The kernel and complement forms
/// must agree whenever the complement really is one.
pub fn check_frobenius_fixture(
    a: &Analysis,
    kernel: &[Permutation],
    complement: Option<&[Permutation]>,
    expected: bool,
) -> LemmaVerdict {
    const LEMMA: &str = "frobenius_centralizer_criterion";
    let kernel_ids = match subgroup_span(&a.table, kernel) {
        Ok(ids) => ids,
        Err(e) => return LemmaVerdict::fail(LEMMA, &a.name, format!("bad kernel: {e}")),
    };
    let by_kernel = match frobenius_kernel_criterion(&a.table, &kernel_ids) {
        Ok(b) => b,
        Err(e) => return LemmaVerdict::fail(LEMMA, &a.name, format!("kernel: {e}")),
    };
    if let Some(complement) = complement {
        let comp_ids = match subgroup_span(&a.table, complement) {
            Ok(ids) => ids,
            Err(e) => {
                return LemmaVerdict::fail(LEMMA, &a.name, format!("bad complement: {e}"));
            }
        };
        let sizes_ok = kernel_ids.len() * comp_ids.len() == a.table.len();
        let meets_trivially = comp_ids
            .iter()
            .filter(|id| kernel_ids.binary_search(id).is_ok())
            .count()
            == 1;
        if !(sizes_ok && meets_trivially) {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!(
                    "complement of size {} does not complement a kernel of size {} in a group of order {}",
                    comp_ids.len(),
                    kernel_ids.len(),
                    a.table.len()
                ),
            );
        }
        let by_complement = frobenius_complement_criterion(&a.table, &comp_ids);
        if by_complement != by_kernel {
            return LemmaVerdict::fail(
                LEMMA,
                &a.name,
                format!("kernel form says {by_kernel}, complement form says {by_complement}"),
            );
        }
    }
    if by_kernel == expected {
        LemmaVerdict::pass(LEMMA, &a.name)
    } else {
        LemmaVerdict::fail(
            LEMMA,
            &a.name,
            format!("criterion returned {by_kernel}, expected {expected}"),
        )
    }
}

/// The kernel form of the Frobenius criterion: with `J` a proper normal
/// subgroup, the group is Frobenius over `J` exactly when no centralizer of
/// a nontrivial element of `J` leaks outside `J`.
pub fn frobenius_kernel_criterion(
    table: &ElementTable,
    kernel_ids: &[u32],
) -> Result<bool, GroupError> {
    let mut member = vec![false; table.len()];
    member[0] = true;
    for &id in kernel_ids {
        member[id as usize] = true;
    }
    let ids: Vec<u32> = (0..table.len() as u32)
        .filter(|&i| member[i as usize])
        .collect();
    if !table.is_subgroup(&ids) || !table.is_normal_subset(&ids) {
        return Err(GroupError::NotNormal);
    }
    Ok(ids.iter().all(|&j| {
        j == 0
            || table
                .centralizer(j)
                .iter()
                .all(|&y| member[y as usize])
    }))
}

/// The complement form: every centralizer of a nontrivial element of the
/// complement stays inside the complement.
pub fn frobenius_complement_criterion(table: &ElementTable, complement_ids: &[u32]) -> bool {
    let mut member = vec![false; table.len()];
    member[0] = true;
    for &id in complement_ids {
        member[id as usize] = true;
    }
    complement_ids.iter().all(|&k| {
        k == 0
            || table
                .centralizer(k)
                .iter()
                .all(|&y| member[y as usize])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commgraph::AdjacencyMode;

    fn analyze(degree: usize, gens: &[&str], name: &str) -> Analysis {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree).unwrap())
            .collect();
        let group = Group::new(degree, gens).unwrap();
        Analysis::run(&group, name, None, 100_000, AdjacencyMode::Auto).unwrap()
    }

    fn subgroup_ids(a: &Analysis, gens: &[&str]) -> Vec<u32> {
        let gen_ids: Vec<u32> = gens
            .iter()
            .map(|s| {
                a.table
                    .id_of(&Permutation::parse_cycles(s, a.table.degree()).unwrap())
                    .unwrap()
            })
            .collect();
        span(&a.table, &gen_ids, 0)
    }

    #[test]
    fn alt5_klein_four_components_are_isolated_subgroups() {
        let a = analyze(5, &["(1,2,3)", "(3,4,5)"], "alt(5)");
        let v4: Vec<&ComponentSummary> = a
            .summaries
            .iter()
            .filter(|s| s.element_count == 3)
            .collect();
        assert_eq!(v4.len(), 5, "five Klein four-group components");
        assert!(v4.iter().all(|s| s.is_subgroup_with_identity));
        assert_eq!(
            check_isolated_components(&a).status,
            CheckStatus::Pass
        );
    }

    #[test]
    fn sym5_even_component_is_not_a_subgroup() {
        let a = analyze(5, &["(1,2)", "(1,2,3,4,5)"], "sym(5)");
        let biggest = a
            .summaries
            .iter()
            .max_by_key(|s| s.element_count)
            .unwrap();
        assert_eq!(biggest.element_count, 95);
        assert!(!biggest.is_subgroup_with_identity);
    }

    #[test]
    fn sym3_transposition_components_are_isolated() {
        let a = analyze(3, &["(1,2)", "(1,2,3)"], "sym(3)");
        assert_eq!(check_isolated_components(&a).status, CheckStatus::Pass);
        let singles = a
            .summaries
            .iter()
            .filter(|s| s.element_count == 1)
            .count();
        assert_eq!(singles, 3);
    }

    #[test]
    fn strongly_embedded_in_alt5() {
        let a = analyze(5, &["(1,2,3)", "(3,4,5)"], "alt(5)");
        // all orbits have more than one component, all checks must pass
        assert_eq!(check_strongly_embedded(&a).status, CheckStatus::Pass);
    }

    #[test]
    fn strongly_embedded_not_applicable_when_all_components_normal() {
        // Sym(3): the 3-cycle component is normal, transposition components
        // are conjugate with stabilizer of index 3
        let a = analyze(3, &["(1,2)", "(1,2,3)"], "sym(3)");
        let verdict = check_strongly_embedded(&a);
        assert_eq!(verdict.status, CheckStatus::Pass);
    }

    #[test]
    fn involution_bound_statuses() {
        let sym5 = analyze(5, &["(1,2)", "(1,2,3,4,5)"], "sym(5)");
        assert_eq!(check_involution_bound(&sym5).status, CheckStatus::Pass);

        let alt5 = analyze(5, &["(1,2,3)", "(3,4,5)"], "alt(5)");
        assert_eq!(
            check_involution_bound(&alt5).status,
            CheckStatus::NotApplicable,
            "one involution class only"
        );

        let sym6 = analyze(6, &["(1,2)", "(1,2,3,4,5,6)"], "sym(6)");
        assert_eq!(check_involution_bound(&sym6).status, CheckStatus::Pass);
    }

    #[test]
    fn outside_distance_bound_in_sym5_over_alt5() {
        let a = analyze(5, &["(1,2)", "(1,2,3,4,5)"], "sym(5)");
        let alt5_gens = [
            Permutation::parse_cycles("(1,2,3)", 5).unwrap(),
            Permutation::parse_cycles("(3,4,5)", 5).unwrap(),
        ];
        let k = NormalSubgroup::resolve(&a.table, "alt(5)", &alt5_gens).unwrap();
        assert_eq!(k.size, 60);
        assert_eq!(check_outside_distance4(&a, &k).status, CheckStatus::Pass);
        assert_eq!(check_outside_distance3(&a, &k).status, CheckStatus::Pass);
    }

    #[test]
    fn outside_rejects_non_normal_subgroups() {
        let a = analyze(4, &["(1,2)", "(1,2,3,4)"], "sym(4)");
        let sub = [Permutation::parse_cycles("(1,2)", 4).unwrap()];
        assert_eq!(
            NormalSubgroup::resolve(&a.table, "bad", &sub).unwrap_err(),
            GroupError::NotNormal
        );
    }

    #[test]
    fn frobenius_criteria() {
        let s3 = analyze(3, &["(1,2)", "(1,2,3)"], "sym(3)");
        let j = subgroup_ids(&s3, &["(1,2,3)"]);
        assert!(frobenius_kernel_criterion(&s3.table, &j).unwrap());

        let a4 = analyze(4, &["(1,2,3)", "(2,3,4)"], "alt(4)");
        let v4 = subgroup_ids(&a4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert!(frobenius_kernel_criterion(&a4.table, &v4).unwrap());

        let s4 = analyze(4, &["(1,2)", "(1,2,3,4)"], "sym(4)");
        let v4 = subgroup_ids(&s4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert!(!frobenius_kernel_criterion(&s4.table, &v4).unwrap());

        // 5:4 Frobenius group: kernel and complement forms agree
        let f20 = analyze(5, &["(1,2,3,4,5)", "(2,3,5,4)"], "frobenius_20");
        let kernel = subgroup_ids(&f20, &["(1,2,3,4,5)"]);
        let comp = subgroup_ids(&f20, &["(2,3,5,4)"]);
        assert!(frobenius_kernel_criterion(&f20.table, &kernel).unwrap());
        assert!(frobenius_complement_criterion(&f20.table, &comp));
    }

    #[test]
    fn williams_odd_components_in_alt5() {
        let a = analyze(5, &["(1,2,3)", "(3,4,5)"], "alt(5)");
        assert_eq!(
            check_odd_components_are_cliques(&a, true).status,
            CheckStatus::Pass
        );
        assert_eq!(
            check_odd_components_are_cliques(&a, false).status,
            CheckStatus::NotApplicable
        );
    }

    #[test]
    fn class_normality_in_sym5() {
        let a = analyze(5, &["(1,2)", "(1,2,3,4,5)"], "sym(5)");
        assert_eq!(
            check_class_component_normality(&a).status,
            CheckStatus::Pass
        );
    }

    #[test]
    fn main_theorem_bound_on_small_groups() {
        for (deg, gens, name) in [
            (5, vec!["(1,2,3)", "(3,4,5)"], "alt(5)"),
            (5, vec!["(1,2)", "(1,2,3,4,5)"], "sym(5)"),
            (6, vec!["(1,2)", "(1,2,3,4,5,6)"], "sym(6)"),
        ] {
            let a = analyze(deg, &gens, name);
            assert_eq!(check_diameter_bound(&a).status, CheckStatus::Pass);
            assert!(a.max_component_diameter() <= 10);
        }
    }

    #[test]
    fn bijection_checker_passes() {
        let a = analyze(5, &["(1,2)", "(1,2,3,4,5)"], "sym(5)");
        assert_eq!(check_bijection(&a).status, CheckStatus::Pass);
    }

    #[test]
    fn reduced_engine_error_for_nontrivial_centre() {
        let gens = vec![
            Permutation::parse_cycles("(1,2,3,4)", 4).unwrap(),
            Permutation::parse_cycles("(1,3)", 4).unwrap(),
        ];
        let d8 = Group::new(4, gens).unwrap();
        let err = Analysis::run(&d8, "d8", Some(Engine::Reduced), 100, AdjacencyMode::Auto)
            .unwrap_err();
        assert_eq!(err, AnalysisError::ReducedNeedsTrivialCentre(2));
        // the full engine still works
        let a = Analysis::run(&d8, "d8", None, 100, AdjacencyMode::Auto).unwrap();
        assert_eq!(a.engine, Engine::Full);
    }
}
