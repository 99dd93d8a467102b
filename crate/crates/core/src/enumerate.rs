//! Polyspace enumeration of all models extending a set of assumptions.
//!
//! The search keeps a stack of assumptions: the caller's literals, a guard
//! `¬⊥`, and the branching literals of previously found models. After each
//! answer the topmost unflipped literal is flipped; an unsatisfiable core
//! lets the stack backjump over literals that played no part in the
//! conflict. Enumeration ends when the guard itself is flipped. No blocking
//! clauses are added, so memory does not grow with the number of models.
//!
//! The solver is asked to branch on visible atoms first, and only branching
//! literals over visible atoms are pushed. Every visible atom is then fixed
//! by the pushed literals and propagation, so each visible projection is
//! reported exactly once even when invisible atoms are unconstrained.

use crate::sat::{Model, SolveOutcome, Solver};
use crate::types::{Atom, Lit};

/// What `enumerate` needs from a solver.
pub trait AssumptionSolver {
    fn solve_under(&mut self, assumptions: &[Lit]) -> SolveOutcome;

    /// Hint to decide on `atoms` before any other atom.
    fn prioritize(&mut self, _atoms: &[Atom]) {}
}

impl AssumptionSolver for Solver {
    fn solve_under(&mut self, assumptions: &[Lit]) -> SolveOutcome {
        self.solve(assumptions)
    }

    fn prioritize(&mut self, atoms: &[Atom]) {
        self.set_decision_priority(atoms);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Frame {
    lit: Lit,
    flipped: bool,
}

/// Input assumptions, the `¬⊥` guard above them, and pushed branching
/// literals above the guard. Only frames above the guard are ever flipped
/// or popped, except for the final flip of the guard itself.
#[derive(Clone, Debug)]
pub struct AssumptionStack {
    frames: Vec<Frame>,
    guard: usize,
}

impl AssumptionStack {
    pub fn new(base: &[Lit]) -> AssumptionStack {
        let mut frames: Vec<Frame> = base
            .iter()
            .map(|&lit| Frame {
                lit,
                flipped: false,
            })
            .collect();
        let guard = frames.len();
        frames.push(Frame {
            lit: Atom::BOTTOM.negative(),
            flipped: false,
        });
        AssumptionStack { frames, guard }
    }

    pub fn top(&self) -> Lit {
        self.frames.last().expect("guard frame").lit
    }

    /// True once the guard has been flipped to `⊥`.
    pub fn is_done(&self) -> bool {
        self.frames.len() == self.guard + 1 && self.top() == Atom::BOTTOM.positive()
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn lits(&self) -> Vec<Lit> {
        self.frames.iter().map(|f| f.lit).collect()
    }

    pub fn flipped(&self) -> Vec<Lit> {
        self.frames
            .iter()
            .filter(|f| f.flipped)
            .map(|f| f.lit)
            .collect()
    }

    pub fn push(&mut self, lit: Lit) {
        self.frames.push(Frame {
            lit,
            flipped: false,
        });
    }

    fn above_guard(&self) -> bool {
        self.frames.len() > self.guard + 1
    }

    /// Pops frames not mentioned in `core`, stopping at the guard.
    pub fn backjump(&mut self, core: &[Lit]) {
        while self.above_guard() && !core.contains(&self.top()) {
            self.frames.pop();
        }
    }

    /// Drops flipped frames, then flips the new top.
    pub fn flip(&mut self) {
        while self.above_guard() && self.frames.last().is_some_and(|f| f.flipped) {
            self.frames.pop();
        }
        let top = self.frames.last_mut().expect("guard frame");
        top.lit = !top.lit;
        top.flipped = true;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationOutcome {
    pub emitted: u64,
    /// False when the limit cut the enumeration short and a further model
    /// exists.
    pub exhausted: bool,
    pub solves: u64,
    /// Largest stack height seen, guard included.
    pub max_depth: usize,
}

/// Reports every model of the solver's theory that extends `assumptions`,
/// once per distinct projection onto `visible`.
///
/// The theory must not change during the call. With a `limit`, stops before
/// reporting model `limit + 1`.
pub fn enumerate<S, F>(
    solver: &mut S,
    visible: &[Atom],
    assumptions: &[Lit],
    limit: Option<u64>,
    mut sink: F,
) -> EnumerationOutcome
where
    S: AssumptionSolver + ?Sized,
    F: FnMut(&Model),
{
    let max_visible = visible.iter().map(|a| a.index()).max().unwrap_or(0);
    let mut is_visible = vec![false; max_visible + 1];
    for a in visible {
        is_visible[a.index()] = true;
    }
    solver.prioritize(visible);

    let mut stack = AssumptionStack::new(assumptions);
    let mut out = EnumerationOutcome {
        exhausted: true,
        max_depth: stack.len(),
        ..Default::default()
    };
    while !stack.is_done() {
        out.solves += 1;
        match solver.solve_under(&stack.lits()) {
            SolveOutcome::Sat { model, branching } => {
                if limit.is_some_and(|l| out.emitted >= l) {
                    out.exhausted = false;
                    break;
                }
                out.emitted += 1;
                sink(&model);
                for b in branching {
                    if is_visible.get(b.atom().index()).copied().unwrap_or(false) {
                        stack.push(b);
                    }
                }
                out.max_depth = out.max_depth.max(stack.len());
            }
            SolveOutcome::Unsat { core } => stack.backjump(&core),
        }
        stack.flip();
    }
    solver.prioritize(&[]);
    out
}

/// True atoms of `model` among `visible`, in the order of `visible`.
pub fn project(model: &Model, visible: &[Atom]) -> Vec<Atom> {
    visible
        .iter()
        .copied()
        .filter(|&a| model.value(a))
        .collect()
}
