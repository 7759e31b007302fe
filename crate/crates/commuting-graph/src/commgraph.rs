//! The commuting graph of a finite group: one vertex per cyclic-generator
//! class of non-central elements, adjacency by commuting, connected
//! components, BFS distances, and component diameters.
//!
//! Collapsing the elements that generate the same cyclic subgroup is sound
//! because an element and its generating powers have the same centralizer:
//! adjacency only depends on the cyclic subgroup. For distinct vertices the
//! collapsed-graph distance equals the element-graph distance; two distinct
//! elements sharing a vertex are at element distance 1, which is the only
//! correction needed when reporting diameters in the element graph.
//!
//! Distances can be computed by plain BFS, or (for groups with trivial
//! centre) by the reduced engine that searches only across vertices of prime
//! order: any geodesic can be rewritten so that all interior vertices have
//! prime order, so restricting the interior of the search loses nothing.

use thiserror::Error;

use crate::group::ElementTable;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommGraphError {
    #[error("element {0} is central; the vertices of the commuting graph are the non-central elements")]
    CentralElement(u32),
    #[error("the prime-order interior reduction requires a trivial centre (centre has size {0})")]
    NontrivialCentre(usize),
}

/// Distance between two vertices or elements of the commuting graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u32),
    Disconnected,
}

/// Which distance engine to use for eccentricity sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Plain BFS over all collapsed vertices.
    Full,
    /// BFS whose interior is restricted to prime-order vertices; only valid
    /// for groups with trivial centre.
    Reduced,
}

/// How adjacency is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjacencyMode {
    /// Bitset matrix up to 65536 vertices, on-demand oracle above.
    Auto,
    Bitset,
    /// Recompute neighbor rows from commuting scans on demand; slower but
    /// memory stays linear in the vertex count.
    Oracle,
}

/// Partition of the non-central elements by "generates the same cyclic
/// subgroup". Central element ids are left unassigned.
#[derive(Debug)]
pub struct CollapsedVertexSet {
    vertex_of: Vec<Option<u32>>,
    members: Vec<Vec<u32>>,
    representative: Vec<u32>,
}

impl CollapsedVertexSet {
    /// Collapses the non-central elements of `table`; `central` must be
    /// exactly the centre (as produced by [`ElementTable::center`]).
    pub fn collapse(table: &ElementTable, central: &[u32]) -> CollapsedVertexSet {
        let n = table.len();
        let mut is_central = vec![false; n];
        for &c in central {
            is_central[c as usize] = true;
        }
        let mut vertex_of: Vec<Option<u32>> = vec![None; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        let mut representative: Vec<u32> = Vec::new();
        let mut scratch = Vec::with_capacity(table.degree());
        for id in 0..n as u32 {
            if is_central[id as usize] || vertex_of[id as usize].is_some() {
                continue;
            }
            // powers of id; the generators of <id> are the powers with
            // exponent coprime to the order
            let ord = table.order_of(id) as u64;
            let mut power = id;
            let mut gens = Vec::new();
            for k in 1..=ord {
                if crate::perm::gcd(k, ord) == 1 {
                    gens.push(power);
                }
                if k < ord {
                    power = table.product_into(power, id, &mut scratch);
                }
            }
            gens.sort_unstable();
            let v = members.len() as u32;
            for &g in &gens {
                debug_assert!(vertex_of[g as usize].is_none());
                vertex_of[g as usize] = Some(v);
            }
            representative.push(gens[0]);
            members.push(gens);
        }
        CollapsedVertexSet {
            vertex_of,
            members,
            representative,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    /// Vertex of a non-central element id, `None` for central ids.
    pub fn vertex_of(&self, id: u32) -> Option<u32> {
        self.vertex_of[id as usize]
    }

    /// Element ids sharing the vertex, ascending.
    pub fn members(&self, v: u32) -> &[u32] {
        &self.members[v as usize]
    }

    /// Minimal member id of the vertex.
    pub fn representative(&self, v: u32) -> u32 {
        self.representative[v as usize]
    }
}

#[derive(Debug)]
struct BitMatrix {
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> BitMatrix {
        let stride = n.div_ceil(64);
        BitMatrix {
            stride,
            words: vec![0u64; stride * n],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / 64] |= 1u64 << (j % 64);
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

#[derive(Debug)]
enum Adjacency {
    Bitset(BitMatrix),
    Oracle,
}

/// Conjugation orbits of vertices or of components.
#[derive(Debug)]
pub struct Orbits {
    pub orbit_of: Vec<u32>,
    /// Members per orbit, ascending; orbits ordered by smallest member.
    pub orbits: Vec<Vec<u32>>,
}

/// The collapsed commuting graph with its component partition.
#[derive(Debug)]
pub struct CommGraph {
    vertices: CollapsedVertexSet,
    reps: Vec<Permutation>,
    rep_orders: Vec<u32>,
    prime_mask: Vec<u64>,
    adjacency: Adjacency,
    comp_of: Vec<u32>,
    components: Vec<Vec<u32>>,
    element_counts: Vec<u64>,
    centre_size: usize,
}

impl CommGraph {
    /// Builds the graph from an enumerated group. `central` must be the
    /// centre of the group; it determines the vertex set and whether the
    /// reduced engine is available.
    pub fn build(table: &ElementTable, central: &[u32], mode: AdjacencyMode) -> CommGraph {
        let vertices = CollapsedVertexSet::collapse(table, central);
        let n = vertices.vertex_count();
        let reps: Vec<Permutation> = (0..n)
            .map(|v| table.element(vertices.representative(v as u32)).clone())
            .collect();
        let rep_orders: Vec<u32> = (0..n)
            .map(|v| table.order_of(vertices.representative(v as u32)))
            .collect();
        let stride = n.div_ceil(64);
        let mut prime_mask = vec![0u64; stride];
        for (v, &ord) in rep_orders.iter().enumerate() {
            if is_prime(ord as u64) {
                prime_mask[v / 64] |= 1u64 << (v % 64);
            }
        }

        let use_bitset = match mode {
            AdjacencyMode::Bitset => true,
            AdjacencyMode::Oracle => false,
            AdjacencyMode::Auto => n <= 65536,
        };

        let mut dsu = DisjointSets::new(n);
        let adjacency = if use_bitset {
            let mut m = BitMatrix::new(n);
            for v in 0..n {
                for w in v + 1..n {
                    if reps[v].commutes_with_unchecked(&reps[w]) {
                        m.set(v, w);
                        m.set(w, v);
                        dsu.union(v, w);
                    }
                }
            }
            Adjacency::Bitset(m)
        } else {
            for v in 0..n {
                for w in v + 1..n {
                    if reps[v].commutes_with_unchecked(&reps[w]) {
                        dsu.union(v, w);
                    }
                }
            }
            Adjacency::Oracle
        };

        // components numbered by smallest vertex
        let mut comp_of = vec![u32::MAX; n];
        let mut components: Vec<Vec<u32>> = Vec::new();
        for v in 0..n {
            let root = dsu.find(v);
            if comp_of[root] == u32::MAX {
                comp_of[root] = components.len() as u32;
                components.push(Vec::new());
            }
            comp_of[v] = comp_of[root];
            components[comp_of[v] as usize].push(v as u32);
        }
        let element_counts: Vec<u64> = components
            .iter()
            .map(|vs| vs.iter().map(|&v| vertices.members(v).len() as u64).sum())
            .collect();

        CommGraph {
            vertices,
            reps,
            rep_orders,
            prime_mask,
            adjacency,
            comp_of,
            components,
            element_counts,
            centre_size: central.len(),
        }
    }

    pub fn vertices(&self) -> &CollapsedVertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.reps.len()
    }

    pub fn centre_size(&self) -> usize {
        self.centre_size
    }

    /// Order of the representative (hence of every member) of the vertex.
    pub fn rep_order(&self, v: u32) -> u32 {
        self.rep_orders[v as usize]
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: u32) -> u32 {
        self.comp_of[v as usize]
    }

    /// Vertices of one component, ascending.
    pub fn component_vertices(&self, c: u32) -> &[u32] {
        &self.components[c as usize]
    }

    /// Number of group elements carried by the component.
    pub fn component_element_count(&self, c: u32) -> u64 {
        self.element_counts[c as usize]
    }

    pub fn adjacent(&self, v: u32, w: u32) -> bool {
        if v == w {
            return false;
        }
        match &self.adjacency {
            Adjacency::Bitset(m) => m.get(v as usize, w as usize),
            Adjacency::Oracle => {
                self.reps[v as usize].commutes_with_unchecked(&self.reps[w as usize])
            }
        }
    }

    fn row_into(&self, v: usize, out: &mut Vec<u64>) {
        let stride = self.prime_mask.len();
        match &self.adjacency {
            Adjacency::Bitset(m) => {
                out.clear();
                out.extend_from_slice(m.row(v));
            }
            Adjacency::Oracle => {
                out.clear();
                out.resize(stride, 0);
                for w in 0..self.vertex_count() {
                    if w != v && self.reps[v].commutes_with_unchecked(&self.reps[w]) {
                        out[w / 64] |= 1u64 << (w % 64);
                    }
                }
            }
        }
    }

    /// BFS distances over collapsed vertices from one source. Unreachable
    /// vertices stay `None`.
    pub fn bfs_distances(&self, v: u32) -> Vec<Option<u32>> {
        self.bfs_masked(&[v], None)
    }

    /// BFS distances from a set of sources (all at distance 0).
    pub fn multi_source_distances(&self, sources: &[u32]) -> Vec<Option<u32>> {
        self.bfs_masked(sources, None)
    }

    /// BFS distances within the subgraph induced on the vertices where
    /// `allowed` holds; the sources should themselves be allowed.
    pub fn restricted_distances(
        &self,
        sources: &[u32],
        allowed: impl Fn(u32) -> bool,
    ) -> Vec<Option<u32>> {
        let n = self.vertex_count();
        let mut mask = vec![0u64; n.div_ceil(64)];
        for v in 0..n {
            if allowed(v as u32) {
                mask[v / 64] |= 1u64 << (v % 64);
            }
        }
        self.bfs_masked(sources, Some(&mask))
    }

    fn bfs_masked(&self, sources: &[u32], mask: Option<&[u64]>) -> Vec<Option<u32>> {
        let n = self.vertex_count();
        let stride = n.div_ceil(64);
        let mut dist: Vec<Option<u32>> = vec![None; n];
        let mut frontier = vec![0u64; stride];
        for &s in sources {
            frontier[s as usize / 64] |= 1u64 << (s as usize % 64);
            dist[s as usize] = Some(0);
        }
        let mut visited = frontier.clone();
        let mut next = vec![0u64; stride];
        let mut row = Vec::new();
        let mut level = 0u32;
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            match &self.adjacency {
                Adjacency::Bitset(m) => {
                    for v in iter_bits(&frontier) {
                        for (acc, &w) in next.iter_mut().zip(m.row(v)) {
                            *acc |= w;
                        }
                    }
                }
                Adjacency::Oracle => {
                    for v in iter_bits(&frontier) {
                        self.row_into(v, &mut row);
                        for (acc, &w) in next.iter_mut().zip(row.iter()) {
                            *acc |= w;
                        }
                    }
                }
            }
            if let Some(mask) = mask {
                for (acc, &p) in next.iter_mut().zip(mask.iter()) {
                    *acc &= p;
                }
            }
            let mut any = false;
            for i in 0..stride {
                next[i] &= !visited[i];
                any |= next[i] != 0;
            }
            if !any {
                break;
            }
            level += 1;
            for w in iter_bits(&next) {
                dist[w] = Some(level);
            }
            for i in 0..stride {
                visited[i] |= next[i];
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        dist
    }

    /// Vertex-level distances from `v` via the prime-order interior
    /// reduction. Agrees with [`CommGraph::bfs_distances`] whenever the
    /// centre is trivial.
    pub fn reduced_distances_from(&self, v: u32) -> Result<Vec<Option<u32>>, CommGraphError> {
        if self.centre_size != 1 {
            return Err(CommGraphError::NontrivialCentre(self.centre_size));
        }
        let n = self.vertex_count();
        let mut row = Vec::new();
        self.row_into(v as usize, &mut row);
        let sources: Vec<u32> = iter_bits(&row)
            .filter(|&w| self.prime_mask[w / 64] >> (w % 64) & 1 == 1)
            .map(|w| w as u32)
            .collect();
        let prime_mask = self.prime_mask.clone();
        let interior = self.bfs_masked(&sources, Some(&prime_mask));
        let mut out: Vec<Option<u32>> = vec![None; n];
        out[v as usize] = Some(0);
        let mut row2 = Vec::new();
        for (w, slot) in out.iter_mut().enumerate() {
            if w == v as usize {
                continue;
            }
            if self.adjacent(v, w as u32) {
                *slot = Some(1);
                continue;
            }
            self.row_into(w, &mut row2);
            let best = iter_bits(&row2)
                .filter(|&q| self.prime_mask[q / 64] >> (q % 64) & 1 == 1)
                .filter_map(|q| interior[q])
                .min();
            *slot = best.map(|d| d + 2);
        }
        Ok(out)
    }

    /// Distance in the original element graph between two non-central
    /// elements, by collapsed-graph BFS.
    pub fn element_distance(&self, x: u32, y: u32) -> Result<Distance, CommGraphError> {
        self.element_distance_impl(x, y, Engine::Full)
    }

    /// Same as [`CommGraph::element_distance`] but through the prime-order
    /// reduction; requires a trivial centre.
    pub fn prime_reduced_element_distance(
        &self,
        x: u32,
        y: u32,
    ) -> Result<Distance, CommGraphError> {
        if self.centre_size != 1 {
            return Err(CommGraphError::NontrivialCentre(self.centre_size));
        }
        self.element_distance_impl(x, y, Engine::Reduced)
    }

    fn element_distance_impl(
        &self,
        x: u32,
        y: u32,
        engine: Engine,
    ) -> Result<Distance, CommGraphError> {
        let v = self
            .vertices
            .vertex_of(x)
            .ok_or(CommGraphError::CentralElement(x))?;
        let w = self
            .vertices
            .vertex_of(y)
            .ok_or(CommGraphError::CentralElement(y))?;
        if x == y {
            return Ok(Distance::Finite(0));
        }
        if v == w || self.adjacent(v, w) {
            return Ok(Distance::Finite(1));
        }
        if self.comp_of[v as usize] != self.comp_of[w as usize] {
            return Ok(Distance::Disconnected);
        }
        let dist = match engine {
            Engine::Full => self.bfs_distances(v),
            Engine::Reduced => self.reduced_distances_from(v)?,
        };
        Ok(match dist[w as usize] {
            Some(d) => Distance::Finite(d),
            None => Distance::Disconnected,
        })
    }

    /// Eccentricity of a vertex within its component (collapsed graph).
    pub fn eccentricity(&self, v: u32, engine: Engine) -> Result<u32, CommGraphError> {
        let dist = match engine {
            Engine::Full => self.bfs_distances(v),
            Engine::Reduced => self.reduced_distances_from(v)?,
        };
        Ok(dist.iter().filter_map(|d| *d).max().unwrap_or(0))
    }

    /// Conjugation orbits of vertices: a vertex is conjugated by mapping its
    /// representative through `x -> x^g` for each generator.
    pub fn vertex_orbits(&self, table: &ElementTable) -> Orbits {
        let n = self.vertex_count();
        self.close_orbits(n, |v| {
            let rep = self.vertices.representative(v);
            table
                .generator_ids()
                .iter()
                .map(|&g| {
                    self.vertices
                        .vertex_of(table.conjugate(rep, g))
                        .expect("conjugates of non-central elements are non-central")
                })
                .collect()
        })
    }

    /// Conjugation orbits of components.
    pub fn component_orbits(&self, table: &ElementTable) -> Orbits {
        let n = self.component_count();
        self.close_orbits(n, |c| {
            let rep = self
                .vertices
                .representative(self.components[c as usize][0]);
            table
                .generator_ids()
                .iter()
                .map(|&g| {
                    let img = self
                        .vertices
                        .vertex_of(table.conjugate(rep, g))
                        .expect("conjugates of non-central elements are non-central");
                    self.comp_of[img as usize]
                })
                .collect()
        })
    }

    fn close_orbits(&self, n: usize, images: impl Fn(u32) -> Vec<u32>) -> Orbits {
        let mut orbit_of = vec![u32::MAX; n];
        let mut orbits: Vec<Vec<u32>> = Vec::new();
        for start in 0..n as u32 {
            if orbit_of[start as usize] != u32::MAX {
                continue;
            }
            let orbit_id = orbits.len() as u32;
            let mut members = vec![start];
            orbit_of[start as usize] = orbit_id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for w in images(v) {
                    if orbit_of[w as usize] == u32::MAX {
                        orbit_of[w as usize] = orbit_id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        Orbits { orbit_of, orbits }
    }

    /// Per-component diameters in the original element graph.
    ///
    /// Eccentricities are swept from one vertex per conjugation orbit
    /// (distances are conjugation-invariant) and maximized over each orbit
    /// of components; a component with at least two elements has diameter at
    /// least 1 even when it has a single vertex, and a single-involution
    /// component has diameter 0.
    pub fn component_diameters(
        &self,
        table: &ElementTable,
        engine: Engine,
    ) -> Result<Vec<u32>, CommGraphError> {
        let vertex_orbits = self.vertex_orbits(table);
        let component_orbits = self.component_orbits(table);
        let mut orbit_diam = vec![0u32; component_orbits.orbits.len()];
        for orbit in &vertex_orbits.orbits {
            let v = orbit[0];
            let ecc = self.eccentricity(v, engine)?;
            let co = component_orbits.orbit_of[self.comp_of[v as usize] as usize];
            orbit_diam[co as usize] = orbit_diam[co as usize].max(ecc);
        }
        Ok((0..self.component_count())
            .map(|c| {
                let vertex_diam = orbit_diam[component_orbits.orbit_of[c] as usize];
                if self.element_counts[c] >= 2 {
                    vertex_diam.max(1)
                } else {
                    0
                }
            })
            .collect())
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> DisjointSets {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let mut a = self.find(x);
        let mut b = self.find(y);
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::perm::Permutation;

    fn enumerated(degree: usize, gens: &[&str]) -> crate::group::ElementTable {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree).unwrap())
            .collect();
        Group::new(degree, gens).unwrap().enumerate(10_000).unwrap()
    }

    fn graph(degree: usize, gens: &[&str]) -> (crate::group::ElementTable, CommGraph) {
        let t = enumerated(degree, gens);
        let central = t.center();
        let g = CommGraph::build(&t, &central, AdjacencyMode::Auto);
        (t, g)
    }

    #[test]
    fn collapse_counts() {
        // Sym(3): 5 non-central elements, the two 3-cycles share a vertex
        let (_, g) = graph(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(g.vertex_count(), 4);

        // Alt(5): 59 non-central -> 15 + 10 + 6 = 31 vertices
        let (_, g) = graph(5, &["(1,2,3)", "(3,4,5)"]);
        assert_eq!(g.vertex_count(), 31);
    }

    #[test]
    fn component_counts() {
        // Sym(3): one 3-cycle pair, three singleton transpositions
        let (_, g) = graph(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(g.component_count(), 4);

        // Alt(5): five Klein four-groups, ten 3-cycle vertices, six 5-cycle
        // vertices
        let (_, g) = graph(5, &["(1,2,3)", "(3,4,5)"]);
        assert_eq!(g.component_count(), 21);
    }

    #[test]
    fn component_element_counts_sum() {
        let (t, g) = graph(5, &["(1,2,3)", "(3,4,5)"]);
        let total: u64 = (0..g.component_count() as u32)
            .map(|c| g.component_element_count(c))
            .sum();
        assert_eq!(total, t.len() as u64 - 1);
    }

    #[test]
    fn alt5_diameters_all_one() {
        let (t, g) = graph(5, &["(1,2,3)", "(3,4,5)"]);
        let diams = g.component_diameters(&t, Engine::Full).unwrap();
        assert!(diams.iter().all(|&d| d == 1), "{diams:?}");
    }

    #[test]
    fn sym3_diameters() {
        let (t, g) = graph(3, &["(1,2)", "(1,2,3)"]);
        let mut diams = g.component_diameters(&t, Engine::Full).unwrap();
        diams.sort_unstable();
        // three singleton involutions (diameter 0), one two-element
        // 3-cycle component (diameter 1)
        assert_eq!(diams, vec![0, 0, 0, 1]);
    }

    #[test]
    fn distances_in_sym4() {
        let (t, g) = graph(4, &["(1,2)", "(1,2,3,4)"]);
        let id = |s: &str| t.id_of(&Permutation::parse_cycles(s, 4).unwrap()).unwrap();
        assert_eq!(
            g.element_distance(id("(1,2)"), id("(3,4)")).unwrap(),
            Distance::Finite(1)
        );
        let x = id("(1,2,3,4)");
        let x2 = id("(1,3)(2,4)");
        assert_eq!(g.element_distance(x, x2).unwrap(), Distance::Finite(1));
        assert_eq!(g.element_distance(x, x).unwrap(), Distance::Finite(0));
        assert_eq!(
            g.element_distance(0, x),
            Err(CommGraphError::CentralElement(0))
        );
    }

    #[test]
    fn disconnected_pair_in_sym3() {
        let (t, g) = graph(3, &["(1,2)", "(1,2,3)"]);
        let a = t
            .id_of(&Permutation::parse_cycles("(1,2)", 3).unwrap())
            .unwrap();
        let b = t
            .id_of(&Permutation::parse_cycles("(1,2,3)", 3).unwrap())
            .unwrap();
        assert_eq!(g.element_distance(a, b).unwrap(), Distance::Disconnected);
    }

    #[test]
    fn same_cyclic_subgroup_is_distance_one() {
        let (t, g) = graph(5, &["(1,2,3,4,5)", "(1,2)"]);
        let x = t
            .id_of(&Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap())
            .unwrap();
        let x2 = t.product(x, x);
        assert_eq!(g.vertices().vertex_of(x), g.vertices().vertex_of(x2));
        assert_eq!(g.element_distance(x, x2).unwrap(), Distance::Finite(1));
    }

    #[test]
    fn reduced_engine_needs_trivial_centre() {
        let (_, g) = graph(4, &["(1,2,3,4)", "(1,3)"]); // dihedral of order 8
        assert_eq!(
            g.reduced_distances_from(0),
            Err(CommGraphError::NontrivialCentre(2))
        );
    }

    #[test]
    fn reduced_equals_full_on_small_groups() {
        for (deg, gens) in [
            (3, vec!["(1,2)", "(1,2,3)"]),
            (4, vec!["(1,2)", "(1,2,3,4)"]),
            (5, vec!["(1,2,3)", "(3,4,5)"]),
            (5, vec!["(1,2)", "(1,2,3,4,5)"]),
            (5, vec!["(1,2,3,4,5)", "(2,3,5,4)"]),
        ] {
            let (_, g) = graph(deg, &gens);
            for v in 0..g.vertex_count() as u32 {
                assert_eq!(
                    g.bfs_distances(v),
                    g.reduced_distances_from(v).unwrap(),
                    "degree {deg} vertex {v}"
                );
            }
        }
    }

    #[test]
    fn oracle_mode_agrees_with_bitset() {
        let t = enumerated(5, &["(1,2)", "(1,2,3,4,5)"]);
        let central = t.center();
        let a = CommGraph::build(&t, &central, AdjacencyMode::Bitset);
        let b = CommGraph::build(&t, &central, AdjacencyMode::Oracle);
        assert_eq!(a.component_count(), b.component_count());
        for v in 0..a.vertex_count() as u32 {
            assert_eq!(a.bfs_distances(v), b.bfs_distances(v));
            assert_eq!(a.component_of(v), b.component_of(v));
        }
        assert_eq!(
            a.component_diameters(&t, Engine::Full).unwrap(),
            b.component_diameters(&t, Engine::Full).unwrap()
        );
    }

    #[test]
    fn orbit_counts_for_small_groups() {
        let (t, g) = graph(5, &["(1,2,3)", "(3,4,5)"]);
        let orbits = g.component_orbits(&t);
        let mut sizes: Vec<usize> = orbits.orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![5, 6, 10]);

        let (t, g) = graph(5, &["(1,2)", "(1,2,3,4,5)"]);
        assert_eq!(g.component_orbits(&t).orbits.len(), 2);

        let (t, g) = graph(3, &["(1,2)", "(1,2,3)"]);
        assert_eq!(g.component_orbits(&t).orbits.len(), 2);
    }

    #[test]
    fn conjugation_equivariance_of_distance() {
        let (t, g) = graph(5, &["(1,2)", "(1,2,3,4,5)"]);
        let gid = t.generator_ids()[1];
        for x in 1..40u32 {
            for y in 1..40u32 {
                if g.vertices().vertex_of(x).is_none() || g.vertices().vertex_of(y).is_none() {
                    continue;
                }
                let d1 = g.element_distance(x, y).unwrap();
                let d2 = g
                    .element_distance(t.conjugate(x, gid), t.conjugate(y, gid))
                    .unwrap();
                assert_eq!(d1, d2);
            }
        }
    }

    #[test]
    fn sym5_max_component_diameter_is_five() {
        let (t, g) = graph(5, &["(1,2)", "(1,2,3,4,5)"]);
        let diams = g.component_diameters(&t, Engine::Full).unwrap();
        assert_eq!(diams.iter().copied().max(), Some(5));
        let reduced = g.component_diameters(&t, Engine::Reduced).unwrap();
        assert_eq!(diams, reduced);
    }
}
