//! Minimal correction subsets as preferred models: clause `i` becomes
//! `clause_i ∨ s_i` with a fresh selector `s_i`, the selectors are minimized
//! and every original atom is irrelevant. The true selectors of a preferred
//! model name a minimal set of clauses whose removal restores satisfiability.

use crate::engine::CircInstance;
use crate::types::{Atom, Theory};

use super::dimacs::ProblemFile;

/// Selector atoms in clause order; clause indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McsMap {
    first: u32,
    len: u32,
}

impl McsMap {
    pub fn selectors(&self) -> Vec<Atom> {
        (self.first..self.first + self.len).map(Atom::new).collect()
    }

    pub fn selector(&self, index: usize) -> Atom {
        assert!(
            index >= 1 && index <= self.len as usize,
            "clause index {index} out of range"
        );
        Atom::new(self.first + index as u32 - 1)
    }

    pub fn clause_index(&self, atom: Atom) -> Option<usize> {
        let id = atom.id();
        (id >= self.first && id < self.first + self.len).then(|| (id - self.first + 1) as usize)
    }

    /// Clause indices of the true selectors among `atoms`, ascending when
    /// `atoms` is.
    pub fn indices(&self, atoms: &[Atom]) -> Vec<usize> {
        atoms.iter().filter_map(|&a| self.clause_index(a)).collect()
    }
}

pub fn mcs_transform(pf: &ProblemFile) -> (CircInstance, McsMap) {
    let n = pf.num_atoms;
    let len = pf.clauses.len() as u32;
    let mut theory = Theory::new(n);
    let first = theory.add_atoms(len).id();
    let map = McsMap { first, len };
    for (i, c) in pf.clauses.iter().enumerate() {
        let mut relaxed = c.clone();
        relaxed.push(map.selector(i + 1).positive());
        theory.add_clause(&relaxed);
    }
    let originals: Vec<Atom> = (1..=n).map(Atom::new).collect();
    let selectors = map.selectors();
    let instance = CircInstance::new(theory, &selectors, &originals)
        .and_then(|i| i.with_visible(&selectors))
        .expect("selectors and original atoms are disjoint");
    (instance, map)
}
