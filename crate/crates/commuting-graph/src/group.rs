//! Finite permutation groups: order and membership through a stabilizer
//! chain, full element enumeration at desk scale, centres, centralizers and
//! conjugacy classes.
//!
//! The stabilizer chain is built by a deterministic Schreier-Sims: base
//! points are always the first point moved by the offending generator, so
//! two runs over the same generator list produce identical chains.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::Permutation;

/// Default cap on full element enumeration.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one generator (use the identity for the trivial group)")]
    NoGenerators,
    #[error("the degree must be positive")]
    ZeroDegree,
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group too large: order {order} exceeds the enumeration cap {cap}")]
    TooLarge { order: u128, cap: usize },
    #[error("element ids out of range for this table")]
    BadElementId,
    #[error("the given subset is not a normal subgroup")]
    NotNormal,
}

/// A finite permutation group given by generators, with a lazily built
/// stabilizer chain providing order and membership.
#[derive(Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Group {
    /// Builds a group from a nonempty generator list of uniform degree.
    /// The trivial group is `Group::new(n, vec![Permutation::identity(n)])`.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Group, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Group {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilizer chain, built on first use.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    /// Group order, as the product of transversal sizes along the chain.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// Enumerates every element by breadth-first closure of the generators.
    ///
    /// Fails cleanly when the chain order exceeds `cap`; on success the
    /// element count is asserted against the chain order, cross-validating
    /// the Schreier-Sims result.
    pub fn enumerate(&self, cap: usize) -> Result<ElementTable, GroupError> {
        let order = self.order();
        if order > cap as u128 {
            return Err(GroupError::TooLarge { order, cap });
        }
        let table = ElementTable::closure(self.degree, &self.generators);
        assert_eq!(
            table.len() as u128,
            order,
            "enumeration disagrees with the stabilizer chain order"
        );
        Ok(table)
    }
}

/// One level of a stabilizer chain: a base point, the strong generators
/// fixing all earlier base points, and a transversal mapping each orbit
/// point to a coset representative sending the base there.
#[derive(Debug)]
struct ChainLevel {
    base: usize,
    gens: Vec<Permutation>,
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// Base, strong generating set and transversals for a permutation group.
#[derive(Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabilizerChain {
    /// Deterministic Schreier-Sims over the given generators.
    pub fn build(degree: usize, generators: &[Permutation]) -> StabilizerChain {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                chain.place(g.clone());
            }
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.verify(i as usize) {
                Some(resume) => i = resume as isize,
                None => i -= 1,
            }
        }
        chain
    }

    /// The base points, in chain order.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Orbit sizes per level; the order is their product.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .expect("group order exceeds u128")
        })
    }

    /// Sifts `p` through the chain; membership means the residue is trivial.
    pub fn contains(&self, p: &Permutation) -> bool {
        match self.sift(p.clone(), 0) {
            Sift::Member => true,
            Sift::Stalled { .. } => false,
        }
    }

    fn sift(&self, mut h: Permutation, start: usize) -> Sift {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let img = h.apply(level.base);
            match &level.transversal[img] {
                None => return Sift::Stalled { residue: h, level: j },
                Some(u) => {
                    h = h.compose_unchecked(&u.inverse());
                    if h.is_identity() {
                        return Sift::Member;
                    }
                }
            }
        }
        if h.is_identity() {
            Sift::Member
        } else {
            Sift::Stalled {
                residue: h,
                level: self.levels.len(),
            }
        }
    }

    fn push_level(&mut self, g: &Permutation) {
        let base = g
            .first_moved_point()
            .expect("cannot open a chain level for the identity");
        self.levels.push(ChainLevel {
            base,
            gens: Vec::new(),
            transversal: vec![None; self.degree],
            orbit: Vec::new(),
        });
    }

    /// Adds `g` to every level whose preceding base points it fixes.
    fn place(&mut self, g: Permutation) {
        let mut j = 0;
        while j < self.levels.len() && g.apply(self.levels[j].base) == self.levels[j].base {
            self.levels[j].gens.push(g.clone());
            self.rebuild_orbit(j);
            j += 1;
        }
        if j == self.levels.len() {
            self.push_level(&g);
        }
        self.levels[j].gens.push(g);
        self.rebuild_orbit(j);
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let base = self.levels[level].base;
        let degree = self.degree;
        let lvl = &mut self.levels[level];
        lvl.transversal.iter_mut().for_each(|t| *t = None);
        lvl.transversal[base] = Some(Permutation::identity(degree));
        lvl.orbit.clear();
        lvl.orbit.push(base);
        let mut i = 0;
        while i < lvl.orbit.len() {
            let pt = lvl.orbit[i];
            i += 1;
            for k in 0..lvl.gens.len() {
                let img = lvl.gens[k].apply(pt);
                if lvl.transversal[img].is_none() {
                    let u = lvl.transversal[pt].as_ref().unwrap();
                    lvl.transversal[img] = Some(u.compose_unchecked(&lvl.gens[k]));
                    lvl.orbit.push(img);
                }
            }
        }
    }

    /// Checks the Schreier generators of one level; on a sift failure the
    /// residue is installed below and the level to resume from is returned.
    fn verify(&mut self, i: usize) -> Option<usize> {
        let schreier: Vec<Permutation> = {
            let lvl = &self.levels[i];
            let mut v = Vec::new();
            for &pt in &lvl.orbit {
                let u = lvl.transversal[pt].as_ref().unwrap();
                for s in &lvl.gens {
                    let t_inv = lvl.transversal[s.apply(pt)].as_ref().unwrap().inverse();
                    let sch = u.compose_unchecked(s).compose_unchecked(&t_inv);
                    if !sch.is_identity() {
                        v.push(sch);
                    }
                }
            }
            v
        };
        for sch in schreier {
            if let Sift::Stalled { residue, level } = self.sift(sch, i + 1) {
                if level == self.levels.len() {
                    self.push_level(&residue);
                }
                for j in i + 1..=level {
                    self.levels[j].gens.push(residue.clone());
                    self.rebuild_orbit(j);
                }
                return Some(level);
            }
        }
        None
    }
}

enum Sift {
    Member,
    Stalled { residue: Permutation, level: usize },
}

/// Every element of a group, indexed; id 0 is the identity.
#[derive(Debug)]
pub struct ElementTable {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Box<[u16]>, u32>,
    orders: Vec<u32>,
    inverses: Vec<u32>,
    generator_ids: Vec<u32>,
}

impl ElementTable {
    fn closure(degree: usize, generators: &[Permutation]) -> ElementTable {
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Box<[u16]>, u32> = HashMap::new();
        index.insert(elements[0].images().into(), 0);
        let mut scratch: Vec<u16> = Vec::with_capacity(degree);
        let mut head = 0usize;
        while head < elements.len() {
            for g in generators {
                elements[head].compose_into(g, &mut scratch);
                if !index.contains_key(scratch.as_slice()) {
                    let id = elements.len() as u32;
                    let p = Permutation::from_images_unchecked(scratch.clone());
                    index.insert(p.images().into(), id);
                    elements.push(p);
                }
            }
            head += 1;
        }
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let inverses: Vec<u32> = elements
            .iter()
            .map(|p| index[p.inverse().images()])
            .collect();
        let generator_ids = generators
            .iter()
            .map(|g| index[g.images()])
            .collect();
        ElementTable {
            degree,
            elements,
            index,
            orders,
            inverses,
            generator_ids,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the identity is always present
    }

    pub fn element(&self, id: u32) -> &Permutation {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.images()).copied()
    }

    /// Order of the element with this id.
    pub fn order_of(&self, id: u32) -> u32 {
        self.orders[id as usize]
    }

    pub fn inverse_of(&self, id: u32) -> u32 {
        self.inverses[id as usize]
    }

    /// Ids of the original generators.
    pub fn generator_ids(&self) -> &[u32] {
        &self.generator_ids
    }

    /// Id of the product (left-to-right) of two elements.
    pub fn product(&self, a: u32, b: u32) -> u32 {
        let mut scratch = Vec::with_capacity(self.degree);
        self.product_into(a, b, &mut scratch)
    }

    #[inline]
    pub(crate) fn product_into(&self, a: u32, b: u32, scratch: &mut Vec<u16>) -> u32 {
        self.elements[a as usize].compose_into(&self.elements[b as usize], scratch);
        self.index[scratch.as_slice()]
    }

    /// Id of the conjugate `x^g`.
    pub fn conjugate(&self, x: u32, g: u32) -> u32 {
        let mut scratch = vec![0u16; self.degree];
        self.conjugate_into(x, g, &mut scratch)
    }

    #[inline]
    pub(crate) fn conjugate_into(&self, x: u32, g: u32, scratch: &mut [u16]) -> u32 {
        self.elements[x as usize].conjugate_into(&self.elements[g as usize], scratch);
        self.index[&scratch[..]]
    }

    /// Ids of the elements commuting with every generator; always contains 0.
    /// For the centre of the group this is exact: an element commuting with
    /// all generators commutes with everything.
    pub fn center(&self) -> Vec<u32> {
        let gens: Vec<&Permutation> = self
            .generator_ids
            .iter()
            .map(|&g| self.element(g))
            .collect();
        (0..self.len() as u32)
            .filter(|&id| {
                let p = self.element(id);
                gens.iter().all(|g| p.commutes_with_unchecked(g))
            })
            .collect()
    }

    /// Ids of all elements commuting with `x`, ascending.
    pub fn centralizer(&self, x: u32) -> Vec<u32> {
        let p = self.element(x);
        (0..self.len() as u32)
            .filter(|&id| self.element(id).commutes_with_unchecked(p))
            .collect()
    }

    /// The conjugation orbits, computed by closing each unvisited element
    /// under conjugation by the generators.
    pub fn conjugacy_classes(&self) -> ConjugacyClassSet {
        let n = self.len();
        let mut class_of: Vec<u32> = vec![u32::MAX; n];
        let mut classes: Vec<ConjugacyClass> = Vec::new();
        let mut scratch = vec![0u16; self.degree];
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let class_id = classes.len() as u32;
            let mut members = vec![start];
            class_of[start as usize] = class_id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &g in &self.generator_ids {
                    let y = self.conjugate_into(x, g, &mut scratch);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = class_id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }
        ConjugacyClassSet { classes, class_of }
    }

    /// Whether `ids` together with the identity is closed under products
    /// and inverses, i.e. forms a subgroup.
    ///
    /// Runs in `O(|S| log |S|)` products: the span of a growing generating
    /// sample is closed; a product escaping the set disproves closure, and
    /// the span covering the set proves it.
    pub fn is_subgroup(&self, ids: &[u32]) -> bool {
        let mut member = vec![false; self.len()];
        member[0] = true;
        for &id in ids {
            member[id as usize] = true;
        }
        let all: Vec<u32> = (0..self.len() as u32)
            .filter(|&i| member[i as usize])
            .collect();
        // Lagrange check first: it rejects almost every non-subgroup cheaply.
        if !(self.len() as u128).is_multiple_of(all.len() as u128) {
            return false;
        }
        for &id in &all {
            if !member[self.inverses[id as usize] as usize] {
                return false;
            }
        }
        let mut in_span = vec![false; self.len()];
        in_span[0] = true;
        let mut span = vec![0u32];
        let mut generators: Vec<u32> = Vec::new();
        let mut scratch = Vec::with_capacity(self.degree);
        loop {
            match all.iter().find(|&&id| !in_span[id as usize]) {
                None => return true, // span covers the set, so it is <S>
                Some(&fresh) => {
                    generators.push(fresh);
                    let mut head = 0;
                    in_span[fresh as usize] = true;
                    span.push(fresh);
                    // re-close the span under the enlarged generator list
                    while head < span.len() {
                        let x = span[head];
                        head += 1;
                        for &g in &generators {
                            let y = self.product_into(x, g, &mut scratch);
                            if !member[y as usize] {
                                return false; // a product of members escapes
                            }
                            if !in_span[y as usize] {
                                in_span[y as usize] = true;
                                span.push(y);
                            }
                        }
                    }
                }
            }
        }
    }

    /// Whether `ids` is closed under conjugation by every generator.
    pub fn is_normal_subset(&self, ids: &[u32]) -> bool {
        let mut member = vec![false; self.len()];
        for &id in ids {
            member[id as usize] = true;
        }
        let mut scratch = vec![0u16; self.degree];
        ids.iter().all(|&x| {
            self.generator_ids
                .iter()
                .all(|&g| member[self.conjugate_into(x, g, &mut scratch) as usize])
        })
    }
}

/// One conjugacy class: its minimal member as representative, members sorted.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub members: Vec<u32>,
}

/// The partition of a group into conjugacy classes.
#[derive(Debug)]
pub struct ConjugacyClassSet {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

impl ConjugacyClassSet {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, id: u32) -> u32 {
        self.class_of[id as usize]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }
}
