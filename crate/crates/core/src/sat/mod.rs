//! Incremental CDCL solver with assumptions and native cardinality
//! constraints.
//!
//! Clauses use two watched literals. Cardinality constraints use a counter
//! of falsified literals per constraint; once the counter reaches the slack
//! `n - k` the remaining literals are implied, and their reasons are built
//! lazily from trail positions when conflict analysis asks for them.
//!
//! Assumptions occupy the first decision levels, one level each. When an
//! assumption is found false, the implication graph is walked back to the
//! assumption levels to produce the unsatisfiable core.
//!
//! Theory constraints are never removed. Learnt clauses are logical
//! consequences of the theory and stay valid as it grows; the learnt
//! database is periodically halved by activity.

mod heap;

use crate::types::{
    Atom, CardinalityConstraint, CardinalityNorm, Clause, InfeasibleConstraint, Lit, Theory,
};
use heap::VarHeap;

/// A total assignment over the solver's atoms at the time of a `Sat` answer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Model {
    values: Vec<bool>,
}

impl Model {
    pub fn from_values(values: Vec<bool>) -> Model {
        assert!(!values.is_empty() && !values[0], "⊥ must be false");
        Model { values }
    }

    /// Value of `atom`; `⊥` is false in every model.
    pub fn value(&self, atom: Atom) -> bool {
        self.values[atom.index()]
    }

    pub fn lit_value(&self, lit: Lit) -> bool {
        lit.holds_if(self.value(lit.atom()))
    }

    pub fn num_atoms(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// Values indexed by atom id, including `⊥` at index 0.
    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn true_atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &v)| v)
            .map(|(i, _)| Atom::new(i as u32))
    }

    /// The model as one literal per atom (excluding `⊥`).
    pub fn literals(&self) -> impl Iterator<Item = Lit> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &v)| Lit::new(Atom::new(i as u32), v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// `branching` holds the decision literals of the final trail, in
    /// decision order, excluding the assumptions.
    Sat { model: Model, branching: Vec<Lit> },
    /// `core` is a subset of the assumptions that is inconsistent with the
    /// theory. Empty when the theory itself is unsatisfiable.
    Unsat { core: Vec<Lit> },
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat { .. })
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub var_decay: f64,
    pub clause_decay: f64,
    /// Conflicts before the first restart.
    pub restart_first: u64,
    pub restart_factor: f64,
    /// Learnt clauses kept before the first database reduction.
    pub learnt_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            var_decay: 0.95,
            clause_decay: 0.999,
            restart_first: 100,
            restart_factor: 1.5,
            learnt_limit: 4000,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub solves: u64,
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    pub restarts: u64,
    pub learnts: u64,
    pub learnts_deleted: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Reason {
    None,
    Clause(u32),
    Card(u32),
}

#[derive(Clone, Copy, Debug)]
enum Conflict {
    Clause(u32),
    Card(u32),
}

#[derive(Debug)]
struct ClauseData {
    lits: Vec<Lit>,
    learnt: bool,
    deleted: bool,
    activity: f64,
}

#[derive(Clone, Copy, Debug)]
struct Watcher {
    cref: u32,
    blocker: Lit,
}

#[derive(Debug)]
struct CardData {
    lits: Vec<Lit>,
    slack: usize,
    false_count: usize,
}

#[derive(Debug)]
pub struct Solver {
    config: SolverConfig,
    theory: Theory,
    ok: bool,

    assigns: Vec<Option<bool>>,
    level: Vec<u32>,
    reason: Vec<Reason>,
    trail_pos: Vec<u32>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    level_decision: Vec<Option<Lit>>,
    qhead: usize,

    clauses: Vec<ClauseData>,
    learnts: Vec<u32>,
    watches: Vec<Vec<Watcher>>,
    cards: Vec<CardData>,
    card_occs: Vec<Vec<u32>>,

    activity: Vec<f64>,
    var_inc: f64,
    cla_inc: f64,
    priority: Vec<bool>,
    phase: Vec<bool>,
    heap: VarHeap,
    seen: Vec<bool>,
    max_learnts: f64,

    stats: SolverStats,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Solver {
        Solver::with_config(SolverConfig::default())
    }

    pub fn with_config(config: SolverConfig) -> Solver {
        let max_learnts = config.learnt_limit as f64;
        let mut solver = Solver {
            config,
            theory: Theory::new(0),
            ok: true,
            assigns: Vec::new(),
            level: Vec::new(),
            reason: Vec::new(),
            trail_pos: Vec::new(),
            trail: Vec::new(),
            trail_lim: Vec::new(),
            level_decision: Vec::new(),
            qhead: 0,
            clauses: Vec::new(),
            learnts: Vec::new(),
            watches: Vec::new(),
            cards: Vec::new(),
            card_occs: Vec::new(),
            activity: Vec::new(),
            var_inc: 1.0,
            cla_inc: 1.0,
            priority: Vec::new(),
            phase: Vec::new(),
            heap: VarHeap::default(),
            seen: Vec::new(),
            max_learnts,
            stats: SolverStats::default(),
        };
        solver.grow(1);
        solver.enqueue(Atom::BOTTOM.negative(), Reason::None);
        solver.qhead = solver.trail.len();
        solver
    }

    /// Highest allocated atom id.
    pub fn num_atoms(&self) -> u32 {
        (self.assigns.len() - 1) as u32
    }

    /// Every constraint added so far, normalized.
    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn stats(&self) -> &SolverStats {
        &self.stats
    }

    /// False once the theory is known to be unsatisfiable.
    pub fn is_ok(&self) -> bool {
        self.ok
    }

    /// Allocates `count` fresh atoms with consecutive ids.
    pub fn add_atoms(&mut self, count: u32) -> Vec<Atom> {
        assert!(count >= 1, "add_atoms needs a positive count");
        let first = self.num_atoms() + 1;
        self.grow(count as usize);
        self.theory.set_num_atoms(self.num_atoms());
        (first..first + count).map(Atom::new).collect()
    }

    fn grow(&mut self, count: usize) {
        let old = self.assigns.len();
        let new = old + count;
        self.assigns.resize(new, None);
        self.level.resize(new, 0);
        self.reason.resize(new, Reason::None);
        self.trail_pos.resize(new, 0);
        self.activity.resize(new, 0.0);
        self.priority.resize(new, false);
        self.phase.resize(new, false);
        self.seen.resize(new, false);
        self.watches.resize_with(2 * new, Vec::new);
        self.card_occs.resize_with(2 * new, Vec::new);
        self.heap.grow(new - 1);
        for v in old.max(1)..new {
            self.heap.insert(v as u32, &self.activity, &self.priority);
        }
    }

    fn check_atoms(&self, lits: &[Lit]) {
        for lit in lits {
            assert!(
                lit.atom().id() <= self.num_atoms(),
                "literal {lit} refers to an unallocated atom"
            );
        }
    }

    /// Adds a clause. The empty clause makes the solver permanently
    /// unsatisfiable.
    pub fn add_clause(&mut self, lits: &[Lit]) {
        self.check_atoms(lits);
        debug_assert_eq!(self.decision_level(), 0);
        let Some(clause) = Clause::normalize(lits) else {
            return;
        };
        let lits = clause.lits().to_vec();
        self.theory.push_clause(clause);
        self.install_clause(lits);
    }

    fn install_clause(&mut self, lits: Vec<Lit>) {
        if !self.ok {
            return;
        }
        if lits.iter().any(|&l| self.lit_value(l) == Some(true)) {
            return;
        }
        let open: Vec<Lit> = lits
            .into_iter()
            .filter(|&l| self.lit_value(l).is_none())
            .collect();
        match open.len() {
            0 => self.ok = false,
            1 => {
                self.enqueue(open[0], Reason::None);
                if self.propagate().is_some() {
                    self.ok = false;
                }
            }
            _ => {
                self.attach_clause(open, false);
            }
        }
    }

    /// Adds `lits[0] + ... + lits[n-1] >= k`.
    pub fn add_cardinality(&mut self, lits: &[Lit], k: u32) -> Result<(), InfeasibleConstraint> {
        self.check_atoms(lits);
        debug_assert_eq!(self.decision_level(), 0);
        let card = match CardinalityConstraint::normalize(lits, k)? {
            CardinalityNorm::Trivial => return Ok(()),
            CardinalityNorm::Unsatisfiable => {
                self.theory
                    .push_clause(Clause::normalize(&[]).expect("empty clause"));
                self.ok = false;
                return Ok(());
            }
            CardinalityNorm::Constraint(card) => card,
        };
        self.theory.push_cardinality(card.clone());
        if !self.ok {
            return Ok(());
        }
        // Level-0 values are permanent: fold them into the bound.
        let mut bound = card.bound() as usize;
        let mut open = Vec::with_capacity(card.lits().len());
        for &l in card.lits() {
            match self.lit_value(l) {
                Some(true) => bound = bound.saturating_sub(1),
                Some(false) => {}
                None => open.push(l),
            }
        }
        if bound == 0 {
            return Ok(());
        }
        if bound > open.len() {
            self.ok = false;
        } else if bound == open.len() {
            for l in open {
                self.enqueue(l, Reason::None);
            }
            if self.propagate().is_some() {
                self.ok = false;
            }
        } else if bound == 1 {
            self.attach_clause(open, false);
        } else {
            let ci = self.cards.len() as u32;
            for &l in &open {
                self.card_occs[l.code()].push(ci);
            }
            self.cards.push(CardData {
                slack: open.len() - bound,
                lits: open,
                false_count: 0,
            });
        }
        Ok(())
    }

    /// Marks atoms to be branched on before all others. Replaces any
    /// previous priority set.
    pub fn set_decision_priority(&mut self, atoms: &[Atom]) {
        self.priority.iter_mut().for_each(|p| *p = false);
        for a in atoms {
            self.priority[a.index()] = true;
        }
        self.heap.rebuild(&self.activity, &self.priority);
    }

    pub fn clear_decision_priority(&mut self) {
        self.set_decision_priority(&[]);
    }

    /// Searches for a model containing every assumption.
    pub fn solve(&mut self, assumptions: &[Lit]) -> SolveOutcome {
        self.solve_limited(assumptions, None)
            .expect("unbounded search always decides")
    }

    /// Like [`Solver::solve`] but gives up with `None` after
    /// `conflict_budget` conflicts.
    pub fn solve_limited(
        &mut self,
        assumptions: &[Lit],
        conflict_budget: Option<u64>,
    ) -> Option<SolveOutcome> {
        self.check_atoms(assumptions);
        self.stats.solves += 1;
        if !self.ok {
            return Some(SolveOutcome::Unsat { core: Vec::new() });
        }
        let outcome = self.search(assumptions, conflict_budget);
        self.cancel_until(0);
        outcome
    }

    fn search(&mut self, assumptions: &[Lit], budget: Option<u64>) -> Option<SolveOutcome> {
        let mut conflicts_here: u64 = 0;
        let mut restart_at = self.config.restart_first as f64;
        let mut since_restart: u64 = 0;
        let mut learnt = Vec::new();
        loop {
            if let Some(conflict) = self.propagate() {
                self.stats.conflicts += 1;
                conflicts_here += 1;
                since_restart += 1;
                if self.decision_level() == 0 {
                    self.ok = false;
                    return Some(SolveOutcome::Unsat { core: Vec::new() });
                }
                let backjump = self.analyze(conflict, &mut learnt);
                self.cancel_until(backjump);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], Reason::None);
                } else {
                    let cref = self.attach_clause(learnt.clone(), true);
                    self.bump_clause(cref);
                    self.enqueue(learnt[0], Reason::Clause(cref));
                }
                self.var_inc /= self.config.var_decay;
                self.cla_inc /= self.config.clause_decay;
                continue;
            }

            if budget.is_some_and(|b| conflicts_here >= b) {
                return None;
            }
            if since_restart as f64 >= restart_at {
                since_restart = 0;
                restart_at *= self.config.restart_factor;
                self.stats.restarts += 1;
                let keep = self.decision_level().min(assumptions.len());
                self.cancel_until(keep);
            }
            if self.learnts.len() as f64 >= self.max_learnts + self.trail.len() as f64 {
                self.reduce_learnts();
            }

            let mut next = None;
            while self.decision_level() < assumptions.len() {
                let a = assumptions[self.decision_level()];
                match self.lit_value(a) {
                    Some(true) => self.new_decision_level(None),
                    Some(false) => {
                        let core = self.analyze_final(a);
                        return Some(SolveOutcome::Unsat { core });
                    }
                    None => {
                        next = Some(a);
                        break;
                    }
                }
            }
            let next = match next {
                Some(a) => a,
                None => match self.pick_branch() {
                    Some(l) => {
                        self.stats.decisions += 1;
                        l
                    }
                    None => return Some(self.sat_outcome(assumptions.len())),
                },
            };
            self.new_decision_level(Some(next));
            self.enqueue(next, Reason::None);
        }
    }

    fn sat_outcome(&self, num_assumptions: usize) -> SolveOutcome {
        let values: Vec<bool> = self
            .assigns
            .iter()
            .map(|v| v.expect("total assignment"))
            .collect();
        let branching = self
            .level_decision
            .iter()
            .skip(num_assumptions)
            .map(|d| d.expect("heuristic levels carry a decision"))
            .collect();
        SolveOutcome::Sat {
            model: Model { values },
            branching,
        }
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap.pop(&self.activity, &self.priority) {
            if self.assigns[v as usize].is_none() {
                return Some(Lit::new(Atom::new(v), self.phase[v as usize]));
            }
        }
        None
    }

    #[inline]
    fn decision_level(&self) -> usize {
        self.trail_lim.len()
    }

    fn new_decision_level(&mut self, decision: Option<Lit>) {
        self.trail_lim.push(self.trail.len());
        self.level_decision.push(decision);
    }

    #[inline]
    fn lit_value(&self, lit: Lit) -> Option<bool> {
        self.assigns[lit.atom().index()].map(|v| lit.holds_if(v))
    }

    fn enqueue(&mut self, lit: Lit, reason: Reason) {
        let v = lit.atom().index();
        debug_assert!(self.assigns[v].is_none());
        self.assigns[v] = Some(lit.is_positive());
        self.level[v] = self.decision_level() as u32;
        self.reason[v] = reason;
        self.trail_pos[v] = self.trail.len() as u32;
        self.trail.push(lit);
    }

    fn cancel_until(&mut self, target: usize) {
        if self.decision_level() <= target {
            return;
        }
        let start = self.trail_lim[target];
        for i in (start..self.trail.len()).rev() {
            let lit = self.trail[i];
            if i < self.qhead {
                for &ci in &self.card_occs[(!lit).code()] {
                    self.cards[ci as usize].false_count -= 1;
                }
            }
            let v = lit.atom().index();
            self.assigns[v] = None;
            self.reason[v] = Reason::None;
            self.phase[v] = lit.is_positive();
            self.heap.insert(v as u32, &self.activity, &self.priority);
        }
        self.qhead = start;
        self.trail.truncate(start);
        self.trail_lim.truncate(target);
        self.level_decision.truncate(target);
    }

    fn attach_clause(&mut self, lits: Vec<Lit>, learnt: bool) -> u32 {
        debug_assert!(lits.len() >= 2);
        let cref = self.clauses.len() as u32;
        self.watches[lits[0].code()].push(Watcher {
            cref,
            blocker: lits[1],
        });
        self.watches[lits[1].code()].push(Watcher {
            cref,
            blocker: lits[0],
        });
        self.clauses.push(ClauseData {
            lits,
            learnt,
            deleted: false,
            activity: 0.0,
        });
        if learnt {
            self.learnts.push(cref);
            self.stats.learnts += 1;
        }
        cref
    }

    /// Unit propagation. Watch lists are indexed by the literal whose
    /// falsification they react to.
    fn propagate(&mut self) -> Option<Conflict> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let falsified = !p;

            // Every counter for `falsified` is bumped before any early
            // return so that backtracking can undo them uniformly.
            let mut conflict = None;
            let occs = std::mem::take(&mut self.card_occs[falsified.code()]);
            for &ci in &occs {
                let card = &mut self.cards[ci as usize];
                card.false_count += 1;
                if conflict.is_some() {
                    continue;
                }
                if card.false_count > card.slack {
                    conflict = Some(Conflict::Card(ci));
                } else if card.false_count == card.slack {
                    for i in 0..self.cards[ci as usize].lits.len() {
                        let l = self.cards[ci as usize].lits[i];
                        if self.lit_value(l).is_none() {
                            self.enqueue(l, Reason::Card(ci));
                        }
                    }
                }
            }
            self.card_occs[falsified.code()] = occs;
            if conflict.is_some() {
                return conflict;
            }

            let mut ws = std::mem::take(&mut self.watches[falsified.code()]);
            let mut keep = 0;
            let mut i = 0;
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if self.lit_value(w.blocker) == Some(true) {
                    ws[keep] = w;
                    keep += 1;
                    continue;
                }
                let cref = w.cref as usize;
                if self.clauses[cref].deleted {
                    continue;
                }
                {
                    let lits = &mut self.clauses[cref].lits;
                    if lits[0] == falsified {
                        lits.swap(0, 1);
                    }
                }
                let first = self.clauses[cref].lits[0];
                if first != w.blocker && self.lit_value(first) == Some(true) {
                    ws[keep] = Watcher {
                        cref: w.cref,
                        blocker: first,
                    };
                    keep += 1;
                    continue;
                }
                let len = self.clauses[cref].lits.len();
                let mut moved = false;
                for k in 2..len {
                    let l = self.clauses[cref].lits[k];
                    if self.lit_value(l) != Some(false) {
                        self.clauses[cref].lits.swap(1, k);
                        self.watches[l.code()].push(Watcher {
                            cref: w.cref,
                            blocker: first,
                        });
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[keep] = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                keep += 1;
                if self.lit_value(first) == Some(false) {
                    while i < ws.len() {
                        ws[keep] = ws[i];
                        keep += 1;
                        i += 1;
                    }
                    ws.truncate(keep);
                    self.watches[falsified.code()] = ws;
                    return Some(Conflict::Clause(w.cref));
                }
                self.enqueue(first, Reason::Clause(w.cref));
            }
            ws.truncate(keep);
            self.watches[falsified.code()] = ws;
        }
        None
    }

    /// Appends the false antecedents of the implied atom `v`.
    fn explain(&self, v: usize, out: &mut Vec<Lit>) {
        match self.reason[v] {
            Reason::None => {}
            Reason::Clause(cref) => out.extend_from_slice(&self.clauses[cref as usize].lits[1..]),
            Reason::Card(ci) => {
                let pos = self.trail_pos[v];
                out.extend(self.cards[ci as usize].lits.iter().copied().filter(|&l| {
                    self.lit_value(l) == Some(false) && self.trail_pos[l.atom().index()] < pos
                }));
            }
        }
    }

    fn conflict_lits(&self, conflict: Conflict, out: &mut Vec<Lit>) {
        match conflict {
            Conflict::Clause(cref) => out.extend_from_slice(&self.clauses[cref as usize].lits),
            Conflict::Card(ci) => out.extend(
                self.cards[ci as usize]
                    .lits
                    .iter()
                    .copied()
                    .filter(|&l| self.lit_value(l) == Some(false)),
            ),
        }
    }

    /// First-UIP learning. Fills `learnt` (asserting literal first, highest
    /// remaining level second) and returns the backjump level.
    fn analyze(&mut self, conflict: Conflict, learnt: &mut Vec<Lit>) -> usize {
        learnt.clear();
        learnt.push(Lit::positive(Atom::BOTTOM));
        let current = self.decision_level() as u32;
        let mut antecedents = Vec::new();
        self.conflict_lits(conflict, &mut antecedents);
        if let Conflict::Clause(cref) = conflict {
            self.bump_clause(cref);
        }
        let mut pending = 0usize;
        let mut index = self.trail.len();
        let uip;
        loop {
            for &q in &antecedents {
                let v = q.atom().index();
                if self.seen[v] || self.level[v] == 0 {
                    continue;
                }
                self.seen[v] = true;
                self.bump_var(v);
                if self.level[v] >= current {
                    pending += 1;
                } else {
                    learnt.push(q);
                }
            }
            let p = loop {
                index -= 1;
                let l = self.trail[index];
                if self.seen[l.atom().index()] {
                    break l;
                }
            };
            let v = p.atom().index();
            self.seen[v] = false;
            pending -= 1;
            if pending == 0 {
                uip = p;
                break;
            }
            antecedents.clear();
            if let Reason::Clause(cref) = self.reason[v] {
                self.bump_clause(cref);
            }
            self.explain(v, &mut antecedents);
        }
        learnt[0] = !uip;

        // Drop literals whose whole reason is already in the clause.
        let marked = learnt.clone();
        let mut kept = 1;
        let mut scratch = Vec::new();
        for i in 1..learnt.len() {
            let l = learnt[i];
            let v = l.atom().index();
            let redundant = self.reason[v] != Reason::None && {
                scratch.clear();
                self.explain(v, &mut scratch);
                scratch.iter().all(|r| {
                    let rv = r.atom().index();
                    self.seen[rv] || self.level[rv] == 0
                })
            };
            if !redundant {
                learnt[kept] = l;
                kept += 1;
            }
        }
        for l in &marked {
            self.seen[l.atom().index()] = false;
        }
        learnt.truncate(kept);

        if learnt.len() == 1 {
            return 0;
        }
        let mut max_i = 1;
        for i in 2..learnt.len() {
            if self.level[learnt[i].atom().index()] > self.level[learnt[max_i].atom().index()] {
                max_i = i;
            }
        }
        learnt.swap(1, max_i);
        self.level[learnt[1].atom().index()] as usize
    }

    /// Core for a falsified assumption `a`: `a` plus every assumption from
    /// which its complement was derived.
    fn analyze_final(&mut self, a: Lit) -> Vec<Lit> {
        let mut core = vec![a];
        let av = a.atom().index();
        if self.level[av] == 0 {
            return core;
        }
        self.seen[av] = true;
        let mut antecedents = Vec::new();
        for i in (self.trail_lim[0]..self.trail.len()).rev() {
            let x = self.trail[i];
            let v = x.atom().index();
            if !self.seen[v] {
                continue;
            }
            if self.reason[v] == Reason::None {
                core.push(x);
            } else {
                antecedents.clear();
                self.explain(v, &mut antecedents);
                for r in &antecedents {
                    let rv = r.atom().index();
                    if self.level[rv] > 0 {
                        self.seen[rv] = true;
                    }
                }
            }
            self.seen[v] = false;
        }
        self.seen[av] = false;
        core
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in self.activity.iter_mut() {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap
            .increased(v as u32, &self.activity, &self.priority);
    }

    fn bump_clause(&mut self, cref: u32) {
        let c = &mut self.clauses[cref as usize];
        if !c.learnt {
            return;
        }
        c.activity += self.cla_inc;
        if c.activity > 1e20 {
            for &l in &self.learnts {
                self.clauses[l as usize].activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    fn locked(&self, cref: u32) -> bool {
        let first = self.clauses[cref as usize].lits[0];
        self.lit_value(first) == Some(true)
            && self.reason[first.atom().index()] == Reason::Clause(cref)
    }

    fn reduce_learnts(&mut self) {
        let mut order = self.learnts.clone();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&self.clauses[a as usize], &self.clauses[b as usize]);
            ca.activity
                .partial_cmp(&cb.activity)
                .expect("finite activity")
                .then(a.cmp(&b))
        });
        let target = order.len() / 2;
        let mut removed = 0;
        for &cref in &order {
            if removed >= target {
                break;
            }
            if self.clauses[cref as usize].lits.len() > 2 && !self.locked(cref) {
                let c = &mut self.clauses[cref as usize];
                c.deleted = true;
                c.lits = Vec::new();
                removed += 1;
            }
        }
        let clauses = &self.clauses;
        self.learnts.retain(|&c| !clauses[c as usize].deleted);
        for ws in self.watches.iter_mut() {
            ws.retain(|w| !clauses[w.cref as usize].deleted);
        }
        self.stats.learnts_deleted += removed as u64;
        self.max_learnts *= 1.1;
    }
}
