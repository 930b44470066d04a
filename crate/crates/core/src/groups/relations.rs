//! Relation checking inside enumerated tables.
//!
//! Relations are pairs of words over named generators; an assignment maps
//! generator ids to table positions. The suite builders below instantiate
//! the presented relation families of the stabilizer subgroups for a given
//! index bound n.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{GroupWord, Letter, Sign};

use super::FiniteGroupTable;

/// A single relation lhs = rhs over named generators.
pub struct Relation {
    pub label: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
}

impl Relation {
    fn new(label: impl Into<String>, lhs: GroupWord, rhs: GroupWord) -> Self {
        Self {
            label: label.into(),
            lhs,
            rhs,
        }
    }
}

pub struct RelationReport {
    outcomes: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|(_, ok)| *ok)
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.outcomes
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(label, _)| label.as_str())
    }

    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.failures().collect();
        if failed.is_empty() {
            format!("{} relations hold", self.outcomes.len())
        } else {
            format!(
                "{}/{} relations fail: {}",
                failed.len(),
                self.outcomes.len(),
                failed.join(", ")
            )
        }
    }
}

fn eval_in_table(
    table: &FiniteGroupTable,
    assignment: &HashMap<u16, usize>,
    w: &GroupWord,
) -> Result<usize> {
    let mut acc = table.identity_pos();
    for &(l, s) in w.letters() {
        let Letter::Named(id) = l else {
            return Err(Error::AlphabetMismatch(format!(
                "relation words must use named generators, found {w}"
            )));
        };
        let &pos = assignment
            .get(&id)
            .ok_or_else(|| Error::MissingAssignment(format!("g{id}")))?;
        let factor = match s {
            Sign::Pos => pos,
            Sign::Neg => table.inv_pos(pos),
        };
        acc = table.mul_pos(acc, factor);
    }
    Ok(acc)
}

/// Evaluates both sides of every relation and reports pass/fail per
/// relation.
pub fn check_relations(
    table: &FiniteGroupTable,
    assignment: &HashMap<u16, usize>,
    relations: &[Relation],
) -> Result<RelationReport> {
    let mut outcomes = Vec::with_capacity(relations.len());
    for r in relations {
        let lhs = eval_in_table(table, assignment, &r.lhs)?;
        let rhs = eval_in_table(table, assignment, &r.rhs)?;
        outcomes.push((r.label.clone(), lhs == rhs));
    }
    Ok(RelationReport { outcomes })
}

fn g(id: u16) -> GroupWord {
    GroupWord::gen(Letter::Named(id))
}

fn comm(a: &GroupWord, b: &GroupWord) -> GroupWord {
    GroupWord::commutator(a, b).expect("named alphabet")
}

/// Assignment for generators x (id 0) and a_0..a_n (ids 1..n+1).
pub fn xa_assignment(table: &FiniteGroupTable, n: i64) -> Result<HashMap<u16, usize>> {
    let mut map = HashMap::new();
    map.insert(0u16, super::word_position(table, &crate::words::word_x())?);
    for i in 0..=n {
        let pos = super::word_position(table, &crate::words::family_a(i)?)?;
        map.insert(1 + i as u16, pos);
    }
    Ok(map)
}

/// Assignment for generators x (id 0) and b_1..b_(n+1) (ids 1..n+1).
pub fn xb_assignment(table: &FiniteGroupTable, n: i64) -> Result<HashMap<u16, usize>> {
    let mut map = HashMap::new();
    map.insert(0u16, super::word_position(table, &crate::words::word_x())?);
    for i in 1..=n + 1 {
        map.insert(i as u16, super::b_position(table, i)?);
    }
    Ok(map)
}

/// Relations 1a-5a on the generators x, a_0..a_n (ids as in
/// `xa_assignment`; a_i has id i+1).
pub fn theorem_a1_relations(n: i64) -> Vec<Relation> {
    let x = g(0);
    let a = |i: i64| g(1 + i as u16);
    let one = GroupWord::empty();
    let mut rels = vec![Relation::new("1a: x^4 = 1", x.pow(4), one.clone())];
    for i in 0..=n {
        rels.push(Relation::new(
            format!("2a: x^2 = a_{i}^2"),
            x.pow(2),
            a(i).pow(2),
        ));
    }
    for i in 0..=n {
        rels.push(Relation::new(
            format!("3a: (x a_{i})^4 = 1"),
            x.concat(&a(i)).unwrap().pow(4),
            one.clone(),
        ));
    }
    for i in 0..=n {
        for j in i + 1..=n {
            for k in 1..=n - j {
                rels.push(Relation::new(
                    format!("4a: [a_{i}, a_{j}] = [a_{}, a_{}]", i + k, j + k),
                    comm(&a(i), &a(j)),
                    comm(&a(i + k), &a(j + k)),
                ));
            }
        }
    }
    // 5a as printed: 0 <= i, 1 <= k <= n - i
    for i in 0..=n {
        for k in 1..=n - i {
            rels.push(Relation::new(
                format!("5a: [x, a_{i}] = [a_{}, a_{}]", k - 1, i + k),
                comm(&x, &a(i)),
                comm(&a(k - 1), &a(i + k)),
            ));
        }
    }
    rels
}

/// Relations 1b-3b on the generators x, b_1..b_(n+1) (b_i has id i).
pub fn lemma_a2_relations(n: i64) -> Vec<Relation> {
    let x = g(0);
    let b = |i: i64| g(i as u16);
    let one = GroupWord::empty();
    let mut rels = vec![Relation::new("1b: x^4 = 1", x.pow(4), one.clone())];
    for i in 1..=n + 1 {
        rels.push(Relation::new(
            format!("1b: b_{i}^4 = 1"),
            b(i).pow(4),
            one.clone(),
        ));
        rels.push(Relation::new(
            format!("2b: [x, b_{i}] = b_{i}^2"),
            comm(&x, &b(i)),
            b(i).pow(2),
        ));
    }
    for i in 1..=n + 1 {
        for j in i + 1..=n + 1 {
            rels.push(Relation::new(
                format!("3b: [b_{i}, b_{j}] = b_{i}^2 b_{}^2 b_{j}^2", j - i),
                comm(&b(i), &b(j)),
                GroupWord::compose(&[(&b(i), 2), (&b(j - i), 2), (&b(j), 2)]).unwrap(),
            ));
        }
    }
    rels
}

/// The commutation identities x^-1 b_i^-1 = b_i x^-1, [x^2, b_i] = 1 and
/// [x, b_i^2] = 1, for i = 1..n+1.
pub fn eqs_12_14(n: i64) -> Vec<Relation> {
    let x = g(0);
    let b = |i: i64| g(i as u16);
    let one = GroupWord::empty();
    let mut rels = Vec::new();
    for i in 1..=n + 1 {
        rels.push(Relation::new(
            format!("(12): x^-1 b_{i}^-1 = b_{i} x^-1"),
            GroupWord::compose(&[(&x, -1), (&b(i), -1)]).unwrap(),
            GroupWord::compose(&[(&b(i), 1), (&x, -1)]).unwrap(),
        ));
        rels.push(Relation::new(
            format!("(13): [x^2, b_{i}] = 1"),
            comm(&x.pow(2), &b(i)),
            one.clone(),
        ));
        rels.push(Relation::new(
            format!("(14): [x, b_{i}^2] = 1"),
            comm(&x, &b(i).pow(2)),
            one.clone(),
        ));
    }
    rels
}

/// The centrality recursion: (b_i b_(N+2)^-1)^2 = b_(N-i+2)^2 and its two
/// commutation consequences, for N+2 <= n+1. Empty at n = 0.
pub fn claim1_eqs_15_17(n: i64) -> Vec<Relation> {
    let b = |i: i64| g(i as u16);
    let one = GroupWord::empty();
    let mut rels = Vec::new();
    for big_n in 0..=n - 1 {
        for i in 1..=big_n + 1 {
            let lhs = GroupWord::compose(&[(&b(i), 1), (&b(big_n + 2), -1)])
                .unwrap()
                .pow(2);
            rels.push(Relation::new(
                format!("(15): (b_{i} b_{}^-1)^2 = b_{}^2", big_n + 2, big_n - i + 2),
                lhs,
                b(big_n - i + 2).pow(2),
            ));
            rels.push(Relation::new(
                format!("(16): [b_{}^2, b_{}] = 1", big_n - i + 2, big_n + 2),
                comm(&b(big_n - i + 2).pow(2), &b(big_n + 2)),
                one.clone(),
            ));
            rels.push(Relation::new(
                format!("(17): [b_{}^2, b_{}] = 1", big_n + 2, big_n - i + 2),
                comm(&b(big_n + 2).pow(2), &b(big_n - i + 2)),
                one.clone(),
            ));
        }
    }
    rels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::stab7;

    #[test]
    fn theorem_a1_suite_passes() {
        for n in 0..=1 {
            let table = stab7(n, 3, 1 << 20).unwrap();
            let assignment = xa_assignment(&table, n).unwrap();
            let report = check_relations(&table, &assignment, &theorem_a1_relations(n)).unwrap();
            assert!(report.all_pass(), "{}", report.summary());
        }
    }

    #[test]
    fn lemma_a2_suite_passes() {
        for n in 0..=1 {
            let table = stab7(n, 3, 1 << 20).unwrap();
            let assignment = xb_assignment(&table, n).unwrap();
            let report = check_relations(&table, &assignment, &lemma_a2_relations(n)).unwrap();
            assert!(report.all_pass(), "{}", report.summary());
            let eqs = check_relations(&table, &assignment, &eqs_12_14(n)).unwrap();
            assert!(eqs.all_pass(), "{}", eqs.summary());
        }
    }

    #[test]
    fn claim1_suite() {
        assert!(claim1_eqs_15_17(0).is_empty());
        let table = stab7(1, 3, 1 << 20).unwrap();
        let assignment = xb_assignment(&table, 1).unwrap();
        let report = check_relations(&table, &assignment, &claim1_eqs_15_17(1)).unwrap();
        assert!(!report.is_empty());
        assert!(report.all_pass(), "{}", report.summary());
    }

    #[test]
    fn corrupted_relation_fails() {
        let table = stab7(0, 3, 1 << 20).unwrap();
        let assignment = xa_assignment(&table, 0).unwrap();
        let bogus = vec![Relation::new("x^3 = 1", g(0).pow(3), GroupWord::empty())];
        let report = check_relations(&table, &assignment, &bogus).unwrap();
        assert!(!report.all_pass());
    }

    #[test]
    fn missing_assignment_is_an_error() {
        let table = stab7(0, 3, 1 << 20).unwrap();
        let assignment = HashMap::new();
        let rels = vec![Relation::new("x = x", g(0), g(0))];
        assert!(matches!(
            check_relations(&table, &assignment, &rels),
            Err(Error::MissingAssignment(_))
        ));
    }
}
