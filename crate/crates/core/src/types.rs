//! Atoms, literals and the constraint forms a theory is built from.

use std::fmt;
use std::ops::Not;

/// A propositional atom, identified by a dense positive index.
///
/// Index 0 is reserved for the falsum atom, which every solver fixes to
/// false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(u32);

impl Atom {
    /// The permanently false atom.
    pub const BOTTOM: Atom = Atom(0);

    pub const fn new(id: u32) -> Atom {
        Atom(id)
    }

    #[inline]
    pub const fn id(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn positive(self) -> Lit {
        Lit::positive(self)
    }

    #[inline]
    pub fn negative(self) -> Lit {
        Lit::negative(self)
    }

    pub fn is_bottom(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An atom with a polarity. Encoded as `2 * atom + negated`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    #[inline]
    pub fn positive(atom: Atom) -> Lit {
        Lit(atom.0 << 1)
    }

    #[inline]
    pub fn negative(atom: Atom) -> Lit {
        Lit((atom.0 << 1) | 1)
    }

    #[inline]
    pub fn new(atom: Atom, positive: bool) -> Lit {
        if positive {
            Lit::positive(atom)
        } else {
            Lit::negative(atom)
        }
    }

    /// Converts a non-zero DIMACS integer.
    pub fn from_dimacs(value: i64) -> Lit {
        assert!(value != 0, "0 is not a DIMACS literal");
        let atom = Atom(value.unsigned_abs() as u32);
        Lit::new(atom, value > 0)
    }

    pub fn to_dimacs(self) -> i64 {
        let id = i64::from(self.atom().id());
        if self.is_positive() {
            id
        } else {
            -id
        }
    }

    #[inline]
    pub fn atom(self) -> Atom {
        Atom(self.0 >> 1)
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    #[inline]
    pub fn complement(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    #[inline]
    pub(crate) fn code(self) -> usize {
        self.0 as usize
    }

    /// Truth value of this literal given the value of its atom.
    #[inline]
    pub fn holds_if(self, atom_value: bool) -> bool {
        atom_value == self.is_positive()
    }
}

impl Not for Lit {
    type Output = Lit;

    #[inline]
    fn not(self) -> Lit {
        self.complement()
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A disjunction of literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    lits: Vec<Lit>,
}

impl Clause {
    /// Normalizes `lits` into a clause.
    ///
    /// Duplicates are dropped (first occurrence order is kept) and literals
    /// `⊥` are removed. Returns `None` for clauses that are trivially true:
    /// those containing a complementary pair or the literal `¬⊥`.
    pub fn normalize(lits: &[Lit]) -> Option<Clause> {
        let mut out: Vec<Lit> = Vec::with_capacity(lits.len());
        for &lit in lits {
            if lit.atom().is_bottom() {
                if lit.is_negative() {
                    return None;
                }
                continue;
            }
            if out.contains(&!lit) {
                return None;
            }
            if !out.contains(&lit) {
                out.push(lit);
            }
        }
        Some(Clause { lits: out })
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        self.lits
            .iter()
            .any(|l| l.holds_if(values[l.atom().index()]))
    }
}

/// Result of normalizing a cardinality constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CardinalityNorm {
    /// Satisfied by every interpretation.
    Trivial,
    /// No interpretation satisfies it.
    Unsatisfiable,
    Constraint(CardinalityConstraint),
}

/// `l_1 + ... + l_n >= k`: at least `k` of the literals are true.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardinalityConstraint {
    lits: Vec<Lit>,
    bound: u32,
}

impl CardinalityConstraint {
    /// Normalizes a constraint over a set of literals.
    ///
    /// Duplicate literals count once. A complementary pair contributes exactly
    /// one true literal, as does `¬⊥`; `⊥` never contributes. Fails when the
    /// bound exceeds the number of distinct literals.
    pub fn normalize(lits: &[Lit], bound: u32) -> Result<CardinalityNorm, InfeasibleConstraint> {
        let mut distinct: Vec<Lit> = Vec::with_capacity(lits.len());
        for &lit in lits {
            if !distinct.contains(&lit) {
                distinct.push(lit);
            }
        }
        if bound as usize > distinct.len() {
            return Err(InfeasibleConstraint {
                bound,
                len: distinct.len(),
            });
        }
        let mut k = i64::from(bound);
        let mut out: Vec<Lit> = Vec::with_capacity(distinct.len());
        for &lit in &distinct {
            if lit.atom().is_bottom() {
                if lit.is_negative() {
                    k -= 1;
                }
                continue;
            }
            if let Some(pos) = out.iter().position(|&l| l == !lit) {
                out.remove(pos);
                k -= 1;
                continue;
            }
            out.push(lit);
        }
        if k <= 0 {
            return Ok(CardinalityNorm::Trivial);
        }
        if k as usize > out.len() {
            return Ok(CardinalityNorm::Unsatisfiable);
        }
        Ok(CardinalityNorm::Constraint(CardinalityConstraint {
            lits: out,
            bound: k as u32,
        }))
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Number of literals that may be false before the rest are forced.
    pub fn slack(&self) -> usize {
        self.lits.len() - self.bound as usize
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        let count = self
            .lits
            .iter()
            .filter(|l| l.holds_if(values[l.atom().index()]))
            .count();
        count >= self.bound as usize
    }

    /// Equivalent clauses: one per subset of `n - k + 1` literals.
    pub fn to_clauses(&self) -> Vec<Clause> {
        let size = self.slack() + 1;
        let mut out = Vec::new();
        let mut pick: Vec<usize> = (0..size).collect();
        let n = self.lits.len();
        loop {
            let lits: Vec<Lit> = pick.iter().map(|&i| self.lits[i]).collect();
            out.extend(Clause::normalize(&lits));
            let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                return out;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cardinality bound {bound} exceeds the {len} distinct literals of the constraint")]
pub struct InfeasibleConstraint {
    pub bound: u32,
    pub len: usize,
}

/// A set of clauses and cardinality constraints over atoms `1..=num_atoms`.
///
/// The constraint `¬⊥` is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Theory {
    num_atoms: u32,
    clauses: Vec<Clause>,
    cardinalities: Vec<CardinalityConstraint>,
}

impl Theory {
    pub fn new(num_atoms: u32) -> Theory {
        Theory {
            num_atoms,
            clauses: Vec::new(),
            cardinalities: Vec::new(),
        }
    }

    pub fn num_atoms(&self) -> u32 {
        self.num_atoms
    }

    pub fn atoms(&self) -> impl Iterator<Item = Atom> {
        (1..=self.num_atoms).map(Atom::new)
    }

    /// Grows the atom universe; returns the first new atom.
    pub fn add_atoms(&mut self, count: u32) -> Atom {
        let first = Atom::new(self.num_atoms + 1);
        self.num_atoms += count;
        first
    }

    /// Adds a clause after normalization; tautologies are dropped.
    pub fn add_clause(&mut self, lits: &[Lit]) {
        self.check_atoms(lits);
        if let Some(clause) = Clause::normalize(lits) {
            self.clauses.push(clause);
        }
    }

    pub fn add_cardinality(
        &mut self,
        lits: &[Lit],
        bound: u32,
    ) -> Result<(), InfeasibleConstraint> {
        self.check_atoms(lits);
        match CardinalityConstraint::normalize(lits, bound)? {
            CardinalityNorm::Trivial => {}
            CardinalityNorm::Unsatisfiable => self.clauses.push(Clause { lits: Vec::new() }),
            CardinalityNorm::Constraint(c) => self.cardinalities.push(c),
        }
        Ok(())
    }

    pub(crate) fn push_clause(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub(crate) fn push_cardinality(&mut self, card: CardinalityConstraint) {
        self.cardinalities.push(card);
    }

    pub(crate) fn set_num_atoms(&mut self, n: u32) {
        self.num_atoms = n;
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn cardinalities(&self) -> &[CardinalityConstraint] {
        &self.cardinalities
    }

    /// `values` is indexed by atom id; index 0 (`⊥`) must be false.
    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        !values[0]
            && self.clauses.iter().all(|c| c.is_satisfied_by(values))
            && self.cardinalities.iter().all(|c| c.is_satisfied_by(values))
    }

    fn check_atoms(&self, lits: &[Lit]) {
        for lit in lits {
            assert!(
                lit.atom().id() <= self.num_atoms,
                "literal {lit} refers to an unallocated atom"
            );
        }
    }
}
