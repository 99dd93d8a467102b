//! Brute-force reference implementations for testing.
//!
//! Interpretations are bitmasks: bit `i - 1` holds the value of atom `i`.
//! Everything here is exhaustive and deliberately naive, so sizes are capped.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::types::{Atom, Clause, Lit, Theory};

pub const MAX_ATOMS: u32 = 20;
pub const MAX_CLAUSES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} atoms exceed the oracle limit of {MAX_ATOMS}")]
    TooManyAtoms(u32),
    #[error("{0} clauses exceed the oracle limit of {MAX_CLAUSES}")]
    TooManyClauses(usize),
}

/// Every total assignment over `atoms` atoms, in counting order.
#[derive(Debug, Clone)]
pub struct InterpretationTable {
    atoms: u32,
}

impl InterpretationTable {
    pub fn new(atoms: u32) -> Result<InterpretationTable, OracleError> {
        if atoms > MAX_ATOMS {
            return Err(OracleError::TooManyAtoms(atoms));
        }
        Ok(InterpretationTable { atoms })
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> {
        (1..=self.atoms).map(Atom::new)
    }

    pub fn rows(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.atoms)
    }
}

#[inline]
pub fn lit_holds(lit: Lit, interp: u32) -> bool {
    let id = lit.atom().id();
    if id == 0 {
        return lit.is_negative();
    }
    ((interp >> (id - 1)) & 1 == 1) == lit.is_positive()
}

pub fn clause_holds(clause: &Clause, interp: u32) -> bool {
    clause.lits().iter().any(|&l| lit_holds(l, interp))
}

pub fn theory_holds(theory: &Theory, interp: u32) -> bool {
    theory.clauses().iter().all(|c| clause_holds(c, interp))
        && theory.cardinalities().iter().all(|c| {
            c.lits().iter().filter(|&&l| lit_holds(l, interp)).count() >= c.bound() as usize
        })
}

pub fn mask<I: IntoIterator<Item = Atom>>(atoms: I) -> u32 {
    atoms.into_iter().fold(0, |m, a| {
        assert!(a.id() >= 1 && a.id() <= MAX_ATOMS);
        m | (1 << (a.id() - 1))
    })
}

pub fn atoms_of(interp: u32) -> Vec<Atom> {
    (1..=32u32)
        .filter(|i| (interp >> (i - 1)) & 1 == 1)
        .map(Atom::new)
        .collect()
}

/// Mask with bits set for atoms `1..=n`.
pub fn full_mask(n: u32) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Value vector indexed by atom id (index 0 is `⊥`).
pub fn values_of(interp: u32, n: u32) -> Vec<bool> {
    std::iter::once(false)
        .chain((1..=n).map(|i| (interp >> (i - 1)) & 1 == 1))
        .collect()
}

/// All models of `theory`.
pub fn all_models(theory: &Theory) -> Result<Vec<u32>, OracleError> {
    models_with(theory, &[])
}

/// All models of `theory` that contain every literal of `assumptions`.
pub fn models_with(theory: &Theory, assumptions: &[Lit]) -> Result<Vec<u32>, OracleError> {
    let table = InterpretationTable::new(theory.num_atoms())?;
    Ok(table
        .rows()
        .filter(|&i| assumptions.iter().all(|&l| lit_holds(l, i)))
        .filter(|&i| theory_holds(theory, i))
        .collect())
}

/// `I <=^{PZ} J`: agreement outside `P ∪ Z` and `I ∩ P ⊆ J ∩ P`.
pub fn leq_pz(i: u32, j: u32, p: u32, z: u32) -> bool {
    let outside = !(p | z);
    (i & outside) == (j & outside) && (i & p) & !(j & p) == 0
}

/// Keeps the models that no other model strictly precedes under `<=^{PZ}`.
pub fn circ_filter(models: &[u32], p: u32, z: u32) -> Vec<u32> {
    let outside = !(p | z);
    // only models agreeing outside P ∪ Z are comparable
    let mut groups: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for &m in models {
        groups.entry(m & outside).or_default().insert(m & p);
    }
    models
        .iter()
        .copied()
        .filter(|&i| {
            let ip = i & p;
            !groups[&(i & outside)]
                .iter()
                .any(|&jp| jp != ip && jp & !ip == 0)
        })
        .collect()
}

/// `CIRC(T, P, Z)` as a set of true-atom masks.
pub fn circ(theory: &Theory, p: u32, z: u32) -> Result<BTreeSet<u32>, OracleError> {
    Ok(circ_filter(&all_models(theory)?, p, z)
        .into_iter()
        .collect())
}

/// Minimal correction subsets of a clause list, as sorted 1-based indices.
pub fn all_mcs(num_atoms: u32, clauses: &[Clause]) -> Result<BTreeSet<Vec<usize>>, OracleError> {
    if clauses.len() > MAX_CLAUSES {
        return Err(OracleError::TooManyClauses(clauses.len()));
    }
    let table = InterpretationTable::new(num_atoms)?;
    // For each interpretation, the clauses it falsifies. T \ S is
    // satisfiable iff S covers one of these sets.
    let falsified: BTreeSet<u32> = table
        .rows()
        .map(|i| {
            clauses
                .iter()
                .enumerate()
                .filter(|(_, c)| !clause_holds(c, i))
                .fold(0u32, |m, (k, _)| m | (1 << k))
        })
        .collect();
    let corrects = |s: u32| falsified.iter().any(|&f| f & !s == 0);
    let m = clauses.len();
    let mut out = BTreeSet::new();
    for s in 0..(1u32 << m) {
        if !corrects(s) {
            continue;
        }
        let minimal = (0..m)
            .filter(|k| s >> k & 1 == 1)
            .all(|k| !corrects(s & !(1 << k)));
        if minimal {
            out.insert((0..m).filter(|k| s >> k & 1 == 1).map(|k| k + 1).collect());
        }
    }
    Ok(out)
}

/// Projects masks onto `visible`.
pub fn project(models: &[u32], visible: u32) -> BTreeSet<u32> {
    models.iter().map(|m| m & visible).collect()
}

/// Small fixture theories shared by the tests.
///
/// Atom numbering: `a = 1`, `b = 2`, `x0 = 3`, `x1 = 4`, `x2 = 5`; in `switch`
/// `r = 6`; in `relaxed` `y1 = 6`, `y2 = 7`.
pub mod fixtures {
    use crate::types::{Atom, Lit, Theory};

    pub const A: Atom = Atom::new(1);
    pub const B: Atom = Atom::new(2);
    pub const X0: Atom = Atom::new(3);
    pub const X1: Atom = Atom::new(4);
    pub const X2: Atom = Atom::new(5);
    pub const R: Atom = Atom::new(6);
    pub const Y1: Atom = Atom::new(6);
    pub const Y2: Atom = Atom::new(7);

    fn lits(v: &[i64]) -> Vec<Lit> {
        v.iter().map(|&x| Lit::from_dimacs(x)).collect()
    }

    pub const BASE_CLAUSES: [&[i64]; 3] = [&[1, 3], &[-1, 2, 4], &[-1, -2, 5]];

    /// `{a ∨ x0, ¬a ∨ b ∨ x1, ¬a ∨ ¬b ∨ x2}`
    pub fn base() -> Theory {
        let mut t = Theory::new(5);
        for c in BASE_CLAUSES {
            t.add_clause(&lits(c));
        }
        t
    }

    /// `base` plus `r → x0 ∧ x1 ∧ x2`.
    pub fn switch() -> Theory {
        let mut t = base();
        t.add_atoms(1);
        for x in [3, 4, 5] {
            t.add_clause(&lits(&[-6, x]));
        }
        t
    }

    /// `base` plus `¬x0 + ¬x1 + ¬x2 + y1 + y2 >= 2` and `y2 → y1`.
    pub fn relaxed() -> Theory {
        let mut t = base();
        t.add_atoms(2);
        t.add_cardinality(&lits(&[-3, -4, -5, 6, 7]), 2)
            .expect("feasible");
        t.add_clause(&lits(&[-7, 6]));
        t
    }

    /// Preferred models of `base` with `x0, x1, x2` minimized.
    pub fn base_minimal() -> Vec<Vec<Atom>> {
        vec![vec![X0], vec![B, X0], vec![A, X1], vec![A, B, X2]]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(models: &[Vec<Atom>]) -> BTreeSet<u32> {
        models.iter().map(|m| mask(m.iter().copied())).collect()
    }

    fn clauses(v: &[&[i64]]) -> Vec<Clause> {
        v.iter()
            .map(|c| {
                let lits: Vec<Lit> = c.iter().map(|&x| Lit::from_dimacs(x)).collect();
                Clause::normalize(&lits).unwrap()
            })
            .collect()
    }

    #[test]
    fn base_has_sixteen_models() {
        assert_eq!(all_models(&base()).unwrap().len(), 16);
    }

    #[test]
    fn contradiction_has_no_models() {
        let mut t = Theory::new(1);
        t.add_clause(&[Lit::from_dimacs(1)]);
        t.add_clause(&[Lit::from_dimacs(-1)]);
        assert!(all_models(&t).unwrap().is_empty());
    }

    #[test]
    fn relaxed_with_fresh_atoms_false_gives_the_minimal_models() {
        let found: BTreeSet<u32> = models_with(&relaxed(), &[Y1.negative(), Y2.negative()])
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(found, set(&base_minimal()));
    }

    #[test]
    fn circ_of_base() {
        let p = mask([X0, X1, X2]);
        assert_eq!(circ(&base(), p, 0).unwrap(), set(&base_minimal()));
        // Z = {a, b} gives the same set
        assert_eq!(
            circ(&base(), p, mask([A, B])).unwrap(),
            set(&base_minimal())
        );
    }

    #[test]
    fn circ_of_switch() {
        let p = mask([X0, X1, X2]);
        let z = mask([A, B]);
        let mut expected = set(&base_minimal());
        for extra in [vec![], vec![A], vec![B], vec![A, B]] {
            let mut m = vec![X0, X1, X2, R];
            m.extend(extra);
            expected.insert(mask(m));
        }
        let got = circ(&switch(), p, z).unwrap();
        assert_eq!(got.len(), 8);
        assert_eq!(got, expected);
        // r irrelevant as well: back to the four
        assert_eq!(
            circ(&switch(), p, z | mask([R])).unwrap(),
            set(&base_minimal())
        );
    }

    #[test]
    fn circ_of_relaxed_minimizing_fresh_atoms() {
        let p = mask([Y1, Y2]);
        let z = mask([X0, X1, X2]);
        let projected: BTreeSet<u32> = circ(&relaxed(), p, z)
            .unwrap()
            .into_iter()
            .map(|m| m & full_mask(5))
            .collect();
        assert_eq!(projected, set(&base_minimal()));
    }

    #[test]
    fn empty_p_keeps_everything() {
        let models = all_models(&base()).unwrap();
        assert_eq!(circ_filter(&models, 0, 0), models);
        assert_eq!(circ_filter(&models, 0, mask([A])), models);
    }

    #[test]
    fn mcs_examples() {
        let pair = clauses(&[&[1], &[-1]]);
        let expected: BTreeSet<Vec<usize>> = [vec![1], vec![2]].into_iter().collect();
        assert_eq!(all_mcs(1, &pair).unwrap(), expected);

        let sat = clauses(&[&[1, 2], &[-1]]);
        let expected: BTreeSet<Vec<usize>> = [vec![]].into_iter().collect();
        assert_eq!(all_mcs(2, &sat).unwrap(), expected);

        let chain = clauses(&[&[1], &[-1, 2], &[-2]]);
        let expected: BTreeSet<Vec<usize>> = [vec![1], vec![2], vec![3]].into_iter().collect();
        assert_eq!(all_mcs(2, &chain).unwrap(), expected);
    }

    #[test]
    fn size_caps() {
        assert_eq!(
            all_models(&Theory::new(21)).unwrap_err(),
            OracleError::TooManyAtoms(21)
        );
        let many = clauses(&[&[1i64][..]; 13]);
        assert_eq!(
            all_mcs(1, &many).unwrap_err(),
            OracleError::TooManyClauses(13)
        );
    }
}
