//! Enumeration of finite subgroups of the projective mod-2 image by
//! breadth-first closure, plus the structural queries (center, derived
//! subgroup, exponent, nilpotency class) used to verify the presented
//! structure of the stabilizer family.
//!
//! Elements are canonical projective matrices over F2[t, t^-1]; their
//! canonical byte strings double as dedup keys and fix a deterministic
//! element order (sorted keys), so two enumerations of the same group are
//! bit-identical regardless of generator order.

mod cache;
mod relations;

pub use cache::{load_stab7, parse_stab7_text, save_stab7, stab7_cache_filename};
pub use relations::{
    check_relations, claim1_eqs_15_17, eqs_12_14, lemma_a2_relations, theorem_a1_relations,
    xa_assignment, xb_assignment, Relation, RelationReport,
};

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::burau::gamma_eval;
use crate::error::{Error, Result};
use crate::matrix::ProjMat;
use crate::ring::LaurentF2;
use crate::words::{family_a, family_b, word_x, GroupWord};

pub type Element = ProjMat<LaurentF2>;

/// Fully enumerated finite projective matrix group.
pub struct FiniteGroupTable {
    elements: Vec<Element>,
    keys: Vec<String>,
    index: HashMap<String, usize>,
    generators: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroupTable {
    /// Breadth-first closure under right-multiplication by the generators
    /// and their inverses. Aborts with a resource error if the element count
    /// would exceed `cap`.
    pub fn closure(gens: &[Element], cap: usize) -> Result<Self> {
        let mut step: Vec<Element> = Vec::new();
        let mut seen_step: BTreeSet<String> = BTreeSet::new();
        for g in gens {
            for m in [g.clone(), g.inv()] {
                if seen_step.insert(m.canonical_string()) {
                    step.push(m);
                }
            }
        }
        let id = Element::identity();
        let mut reached: BTreeMap<String, Element> = BTreeMap::new();
        reached.insert(id.canonical_string(), id.clone());
        let mut queue: VecDeque<Element> = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for s in &step {
                let p = e.mul(s);
                let key = p.canonical_string();
                if !reached.contains_key(&key) {
                    if reached.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    reached.insert(key, p.clone());
                    queue.push_back(p);
                }
            }
        }
        Self::from_sorted(reached, gens)
    }

    fn from_sorted(reached: BTreeMap<String, Element>, gens: &[Element]) -> Result<Self> {
        let mut elements = Vec::with_capacity(reached.len());
        let mut keys = Vec::with_capacity(reached.len());
        let mut index = HashMap::with_capacity(reached.len());
        for (i, (key, e)) in reached.into_iter().enumerate() {
            index.insert(key.clone(), i);
            keys.push(key);
            elements.push(e);
        }
        let position = |e: &Element, what: &str| -> Result<usize> {
            index
                .get(&e.canonical_string())
                .copied()
                .ok_or_else(|| Error::Inconsistency(format!("{what} not in the element set")))
        };
        let identity = position(&Element::identity(), "identity")?;
        let generators = gens
            .iter()
            .map(|g| position(g, "generator"))
            .collect::<Result<Vec<_>>>()?;
        let inverses = elements
            .iter()
            .map(|e| position(&e.inv(), "inverse"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            elements,
            keys,
            index,
            generators,
            identity,
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, pos: usize) -> &Element {
        &self.elements[pos]
    }

    pub fn canonical_key(&self, pos: usize) -> &str {
        &self.keys[pos]
    }

    pub fn identity_pos(&self) -> usize {
        self.identity
    }

    pub fn generator_positions(&self) -> &[usize] {
        &self.generators
    }

    pub fn position_of(&self, e: &Element) -> Option<usize> {
        self.index.get(&e.canonical_string()).copied()
    }

    pub fn mul_pos(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul(&self.elements[b]);
        *self
            .index
            .get(&p.canonical_string())
            .expect("table is closed under multiplication")
    }

    pub fn inv_pos(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// [a, b] = a^-1 b^-1 a b.
    pub fn commutator_pos(&self, a: usize, b: usize) -> usize {
        let ab = self.mul_pos(a, b);
        let ia_ib = self.mul_pos(self.inv_pos(a), self.inv_pos(b));
        self.mul_pos(ia_ib, ab)
    }

    pub fn power_pos(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv_pos(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul_pos(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut p = a;
        let mut n = 1u64;
        while p != self.identity {
            p = self.mul_pos(p, a);
            n += 1;
            assert!(
                n <= self.order() as u64,
                "element order exceeds group order"
            );
        }
        n
    }

    /// lcm of the element orders.
    pub fn exponent(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        (0..self.order())
            .map(|i| self.element_order(i))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    /// Closure of the given positions under multiplication and inversion.
    pub fn close_positions<I: IntoIterator<Item = usize>>(&self, seed: I) -> BTreeSet<usize> {
        let mut members: BTreeSet<usize> = BTreeSet::new();
        members.insert(self.identity);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for p in seed {
            if members.insert(p) {
                queue.push_back(p);
            }
        }
        let gens: Vec<usize> = queue.iter().copied().collect();
        let mut step: Vec<usize> = Vec::new();
        for &g in &gens {
            step.push(g);
            step.push(self.inv_pos(g));
        }
        let mut frontier: VecDeque<usize> = members.iter().copied().collect();
        while let Some(e) = frontier.pop_front() {
            for &s in &step {
                let p = self.mul_pos(e, s);
                if members.insert(p) {
                    frontier.push_back(p);
                }
            }
        }
        members
    }

    pub fn subgroup<'a>(&'a self, seed: &[usize]) -> SubgroupHandle<'a> {
        SubgroupHandle {
            table: self,
            members: self.close_positions(seed.iter().copied()),
        }
    }

    /// Exact center, computed by testing commutation against the
    /// generators (sufficient since they generate).
    pub fn center(&self) -> SubgroupHandle<'_> {
        let members: BTreeSet<usize> = (0..self.order())
            .filter(|&z| {
                self.generators
                    .iter()
                    .all(|&g| self.mul_pos(z, g) == self.mul_pos(g, z))
            })
            .collect();
        SubgroupHandle {
            table: self,
            members,
        }
    }

    /// One representative per coset of the given central subgroup.
    fn coset_reps_mod(&self, central: &BTreeSet<usize>) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for e in 0..self.order() {
            if !covered[e] {
                reps.push(e);
                for &c in central {
                    covered[self.mul_pos(e, c)] = true;
                }
            }
        }
        reps
    }

    /// Subgroup generated by all commutators [a, b], a, b in the group.
    ///
    /// Central factors cancel inside commutators, so the full commutator
    /// set equals the commutator set of center-coset representatives; the
    /// result is identical to the all-pairs definition.
    pub fn derived_subgroup(&self) -> SubgroupHandle<'_> {
        let center = self.center().members;
        let reps = self.coset_reps_mod(&center);
        let mut comms: BTreeSet<usize> = BTreeSet::new();
        for &a in &reps {
            for &b in &reps {
                comms.insert(self.commutator_pos(a, b));
            }
        }
        SubgroupHandle {
            table: self,
            members: self.close_positions(comms),
        }
    }

    /// Nilpotency class via the lower central series; `None` when the
    /// series stabilizes above the trivial subgroup.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let center = self.center().members;
        let reps = self.coset_reps_mod(&center);
        let mut current: BTreeSet<usize> = (0..self.order()).collect();
        let mut class = 0;
        loop {
            if current.len() == 1 {
                return Some(class);
            }
            let mut comms: BTreeSet<usize> = BTreeSet::new();
            for &a in &current {
                for &b in &reps {
                    comms.insert(self.commutator_pos(a, b));
                }
            }
            let next = self.close_positions(comms);
            if next == current {
                return None;
            }
            current = next;
            class += 1;
        }
    }

    /// The ordered canonical serializations, one element per line; the
    /// deterministic-output contract of the enumeration.
    pub fn canonical_lines(&self) -> impl Iterator<Item = &str> {
        self.keys.iter().map(|s| s.as_str())
    }
}

/// Subgroup of an enumerated table, as a closed member set.
pub struct SubgroupHandle<'a> {
    table: &'a FiniteGroupTable,
    members: BTreeSet<usize>,
}

impl<'a> SubgroupHandle<'a> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.members.contains(&pos)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn member_set(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn is_abelian(&self) -> bool {
        let v: Vec<usize> = self.members.iter().copied().collect();
        v.iter().enumerate().all(|(i, &a)| {
            v[i + 1..]
                .iter()
                .all(|&b| self.table.mul_pos(a, b) == self.table.mul_pos(b, a))
        })
    }

    /// `Some(r)` iff the subgroup is elementary abelian of order 2^r.
    pub fn elementary_abelian_2_rank(&self) -> Option<u32> {
        if !self.len().is_power_of_two() || !self.is_abelian() {
            return None;
        }
        let all_order_two = self
            .members
            .iter()
            .all(|&m| m == self.table.identity_pos() || self.table.element_order(m) == 2);
        if all_order_two {
            Some(self.len().trailing_zeros())
        } else {
            None
        }
    }
}

/// Generator words of the n-th stabilizer subgroup: x, a_0, ..., a_n.
pub fn stab7_generator_words(n: i64) -> Result<Vec<GroupWord>> {
    let mut words = vec![word_x()];
    for i in 0..=n {
        words.push(family_a(i)?);
    }
    Ok(words)
}

/// Enumerates the stabilizer subgroup generated by the projective images
/// of x, a_0, ..., a_n, and checks the expected order 2^(2n+4).
pub fn stab7(n: i64, max_n: i64, cap: usize) -> Result<FiniteGroupTable> {
    if n < 0 || n > max_n {
        return Err(Error::DepthExceeded {
            what: "stab7 index",
            requested: n,
            bound: max_n,
        });
    }
    let gens = stab7_generator_words(n)?
        .iter()
        .map(gamma_eval)
        .collect::<Result<Vec<_>>>()?;
    let table = FiniteGroupTable::closure(&gens, cap)?;
    let expected = 1usize << (2 * n + 4);
    if table.order() != expected {
        return Err(Error::Inconsistency(format!(
            "stab7({n}) has order {}, expected {expected}",
            table.order()
        )));
    }
    Ok(table)
}

/// Position of the projective image of b_i inside a stabilizer table.
pub fn b_position(table: &FiniteGroupTable, i: i64) -> Result<usize> {
    let img = gamma_eval(&family_b(i)?)?;
    table
        .position_of(&img)
        .ok_or_else(|| Error::Inconsistency(format!("b_{i} is not in the table")))
}

/// Position of the projective image of an arbitrary word.
pub fn word_position(table: &FiniteGroupTable, w: &GroupWord) -> Result<usize> {
    let img = gamma_eval(w)?;
    table
        .position_of(&img)
        .ok_or_else(|| Error::Inconsistency(format!("word {w} is not in the table")))
}

/// Whether (z, p) -> z * p is a bijection Z x P -> table, where Z is the
/// closure of `z_gens` and P ranges over the 2^k subset-products of
/// `factors` in order.
pub fn normal_form_bijection(
    table: &FiniteGroupTable,
    z_gens: &[usize],
    factors: &[usize],
) -> bool {
    let z = table.close_positions(z_gens.iter().copied());
    let mut seen = vec![false; table.order()];
    let mut count = 0usize;
    for mask in 0u32..(1u32 << factors.len()) {
        let mut p = table.identity_pos();
        for (bit, &f) in factors.iter().enumerate() {
            if (mask >> bit) & 1 == 1 {
                p = table.mul_pos(p, f);
            }
        }
        for &zp in &z {
            let g = table.mul_pos(zp, p);
            if seen[g] {
                return false;
            }
            seen[g] = true;
            count += 1;
        }
    }
    count == table.order()
}

/// The normal form g = C(g) x^(i0) b_1^(i1) ... b_(n+1)^(i_(n+1)) with
/// C(g) central and exponents in {0, 1}: checks the induced bijection.
pub fn normal_form_check(table: &FiniteGroupTable, n: i64) -> Result<bool> {
    let x = word_position(table, &word_x())?;
    let mut b = Vec::new();
    for i in 1..=n + 1 {
        b.push(b_position(table, i)?);
    }
    let mut z_gens = vec![table.power_pos(x, 2)];
    for &bi in &b {
        z_gens.push(table.power_pos(bi, 2));
    }
    let mut factors = vec![x];
    factors.extend_from_slice(&b);
    Ok(normal_form_bijection(table, &z_gens, &factors))
}
