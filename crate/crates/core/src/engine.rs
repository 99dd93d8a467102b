//! Enumeration of the preferred models of a circumscribed theory.
//!
//! The engine keeps a set `O` of objective atoms, initially the minimized
//! atoms `P`, and repeatedly asks the solver for a model falsifying all of
//! them:
//!
//! * A model is `<=^{PZ}`-minimal. Every model agreeing with it on `P ∪ R`
//!   is enumerated (its witnesses), then a blocking clause
//!   `⋀ I|_R → ⋁ {¬p | p ∈ P ∩ I}` discards everything it dominates.
//! * A non-empty core `{¬x_0, ..., ¬x_n}` is replaced by `n` fresh
//!   objectives `y_1..y_n` plus `¬x_0 + ... + ¬x_n + y_1 + ... + y_n >= n`
//!   and `y_i → y_{i-1}`, which keeps the preferred models unchanged.
//! * An empty core means no model is left.
//!
//! Minimal models therefore come out sorted by `|I ∩ P|`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::enumerate::enumerate;
use crate::sat::{Model, SolveOutcome, Solver, SolverConfig, SolverStats};
use crate::types::{Atom, Clause, Lit, Theory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("atom {0} is both minimized and irrelevant")]
    Overlap(Atom),
    #[error("atom {0} is not part of the theory")]
    UnknownAtom(Atom),
}

/// A theory with its atoms split into minimized (`P`), irrelevant (`Z`) and
/// relevant (`R`, everything else). `visible` is the set reported in each
/// model; by default all atoms of the theory.
#[derive(Debug, Clone)]
pub struct CircInstance {
    theory: Theory,
    minimized: Vec<Atom>,
    irrelevant: Vec<Atom>,
    relevant: Vec<Atom>,
    visible: Vec<Atom>,
}

fn sorted_set(atoms: &[Atom]) -> Vec<Atom> {
    atoms
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

impl CircInstance {
    pub fn new(
        theory: Theory,
        minimized: &[Atom],
        irrelevant: &[Atom],
    ) -> Result<CircInstance, InstanceError> {
        let minimized = sorted_set(minimized);
        let irrelevant = sorted_set(irrelevant);
        let n = theory.num_atoms();
        for &a in minimized.iter().chain(&irrelevant) {
            if a.is_bottom() || a.id() > n {
                return Err(InstanceError::UnknownAtom(a));
            }
        }
        if let Some(&a) = minimized
            .iter()
            .find(|a| irrelevant.binary_search(a).is_ok())
        {
            return Err(InstanceError::Overlap(a));
        }
        let relevant = theory
            .atoms()
            .filter(|a| minimized.binary_search(a).is_err() && irrelevant.binary_search(a).is_err())
            .collect();
        let visible = theory.atoms().collect();
        Ok(CircInstance {
            theory,
            minimized,
            irrelevant,
            relevant,
            visible,
        })
    }

    /// Restricts the reported atoms.
    pub fn with_visible(mut self, visible: &[Atom]) -> Result<CircInstance, InstanceError> {
        let visible = sorted_set(visible);
        if let Some(&a) = visible
            .iter()
            .find(|a| a.is_bottom() || a.id() > self.theory.num_atoms())
        {
            return Err(InstanceError::UnknownAtom(a));
        }
        self.visible = visible;
        Ok(self)
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn minimized(&self) -> &[Atom] {
        &self.minimized
    }

    pub fn irrelevant(&self) -> &[Atom] {
        &self.irrelevant
    }

    pub fn relevant(&self) -> &[Atom] {
        &self.relevant
    }

    pub fn visible(&self) -> &[Atom] {
        &self.visible
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    /// Total models to report; `None` for all.
    pub max_models: Option<u64>,
    /// Models to report per minimal assignment of `P ∪ R`; `None` for all.
    /// With `Some(1)` witnesses are not enumerated at all.
    pub max_witnesses: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    pub limits: Limits,
    /// Conflict budget of each solver call made while shrinking a core.
    pub shrink_budget: u64,
    pub solver: SolverConfig,
}

pub const DEFAULT_SHRINK_BUDGET: u64 = 1000;

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            limits: Limits::default(),
            shrink_budget: DEFAULT_SHRINK_BUDGET,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Solver calls trying to falsify all objectives.
    pub top_solve_calls: u64,
    pub cores_analyzed: u64,
    pub shrink_solves: u64,
    pub models_emitted: u64,
    /// Minimal assignments of `P ∪ R` found.
    pub cones: u64,
    /// Models found by witness enumeration.
    pub witnesses: u64,
    pub enum_solves: u64,
    pub blocking_clauses: u64,
    /// Constraints added by core analysis.
    pub core_constraints: u64,
    /// Theory constraints held by the solver before the run started.
    pub input_constraints: u64,
}

/// A reported model: the true visible atoms, and how many minimized atoms
/// are true.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimalModel {
    pub atoms_true: Vec<Atom>,
    pub p_size: usize,
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    /// True when the run ended on an empty core rather than on a limit.
    pub complete: bool,
    pub models: u64,
    pub stats: EngineStats,
    pub solver: SolverStats,
    /// Clauses plus cardinality constraints in the solver's theory at the end.
    pub theory_constraints: u64,
}

/// Objectives and counters of a run.
#[derive(Debug, Clone, Default)]
pub struct EngineState {
    pub objectives: BTreeSet<Atom>,
    pub stats: EngineStats,
}

/// One iteration of the main loop.
#[derive(Debug, Clone)]
pub enum Step {
    /// A minimal model was found and its witnesses reported.
    Cone {
        model: Model,
        witnesses: u64,
        blocking: Clause,
    },
    /// A core was found, shrunk and analyzed.
    Core {
        found: Vec<Lit>,
        shrunk: Vec<Lit>,
        fresh: Vec<Atom>,
    },
    Finished {
        complete: bool,
    },
}

pub struct CircEngine {
    instance: CircInstance,
    config: EngineConfig,
    solver: Solver,
    state: EngineState,
    // indexed by atom id, original atoms only
    in_p: Vec<bool>,
    finished: Option<bool>,
}

impl CircEngine {
    pub fn new(instance: CircInstance, config: EngineConfig) -> CircEngine {
        let mut solver = Solver::with_config(config.solver.clone());
        let theory = instance.theory();
        if theory.num_atoms() > 0 {
            solver.add_atoms(theory.num_atoms());
        }
        for c in theory.clauses() {
            solver.add_clause(c.lits());
        }
        for c in theory.cardinalities() {
            solver
                .add_cardinality(c.lits(), c.bound())
                .expect("normalized constraint is feasible");
        }
        let mut in_p = vec![false; theory.num_atoms() as usize + 1];
        for a in instance.minimized() {
            in_p[a.index()] = true;
        }
        let state = EngineState {
            objectives: instance.minimized().iter().copied().collect(),
            stats: EngineStats {
                input_constraints: constraint_count(solver.theory()),
                ..Default::default()
            },
        };
        CircEngine {
            instance,
            config,
            solver,
            state,
            in_p,
            finished: None,
        }
    }

    pub fn instance(&self) -> &CircInstance {
        &self.instance
    }

    pub fn solver(&self) -> &Solver {
        &self.solver
    }

    pub fn objectives(&self) -> &BTreeSet<Atom> {
        &self.state.objectives
    }

    pub fn stats(&self) -> &EngineStats {
        &self.state.stats
    }

    pub fn is_finished(&self) -> bool {
        self.finished.is_some()
    }

    fn is_minimized(&self, a: Atom) -> bool {
        self.in_p.get(a.index()).copied().unwrap_or(false)
    }

    fn finish(&mut self, complete: bool) -> Step {
        self.finished = Some(complete);
        Step::Finished { complete }
    }

    fn to_reported(&self, model: &Model) -> MinimalModel {
        MinimalModel {
            atoms_true: crate::enumerate::project(model, &self.instance.visible),
            p_size: self
                .instance
                .minimized
                .iter()
                .filter(|&&p| model.value(p))
                .count(),
        }
    }

    /// Runs one iteration, reporting any models found to `sink`.
    pub fn step<F: FnMut(&MinimalModel)>(&mut self, mut sink: F) -> Step {
        if let Some(complete) = self.finished {
            return Step::Finished { complete };
        }
        let limits = self.config.limits;
        let assumptions: Vec<Lit> = self.state.objectives.iter().map(|a| a.negative()).collect();
        self.state.stats.top_solve_calls += 1;
        match self.solver.solve(&assumptions) {
            SolveOutcome::Sat { model, .. } => {
                let emitted = self.state.stats.models_emitted;
                if limits.max_models.is_some_and(|m| emitted >= m) {
                    return self.finish(false);
                }
                self.state.stats.cones += 1;
                let witnesses;
                if limits.max_witnesses == Some(1) {
                    sink(&self.to_reported(&model));
                    witnesses = 1;
                } else {
                    let assumptions = witness_assumptions(
                        &model,
                        &self.instance.minimized,
                        &self.instance.relevant,
                        &self.state.objectives,
                        |a| self.is_minimized(a),
                    );
                    let remaining = limits.max_models.map(|m| m - emitted);
                    let limit = match (remaining, limits.max_witnesses) {
                        (Some(r), Some(w)) => Some(r.min(w)),
                        (r, w) => r.or(w),
                    };
                    let visible = self.instance.visible.clone();
                    let minimized = &self.instance.minimized;
                    let outcome = enumerate(&mut self.solver, &visible, &assumptions, limit, |m| {
                        sink(&MinimalModel {
                            atoms_true: crate::enumerate::project(m, &visible),
                            p_size: minimized.iter().filter(|&&p| m.value(p)).count(),
                        })
                    });
                    self.state.stats.enum_solves += outcome.solves;
                    self.state.stats.witnesses += outcome.emitted;
                    witnesses = outcome.emitted;
                    let stopped_by_total = remaining.is_some_and(|r| limit == Some(r));
                    if !outcome.exhausted && stopped_by_total {
                        self.state.stats.models_emitted += witnesses;
                        return self.finish(false);
                    }
                }
                self.state.stats.models_emitted += witnesses;
                let blocking =
                    blocking_clause(&model, &self.instance.minimized, &self.instance.relevant);
                self.solver.add_clause(blocking.lits());
                self.state.stats.blocking_clauses += 1;
                Step::Cone {
                    model,
                    witnesses,
                    blocking,
                }
            }
            SolveOutcome::Unsat { core } if core.is_empty() => self.finish(true),
            SolveOutcome::Unsat { core } => {
                let mut found = core;
                found.sort();
                let (shrunk, solves) =
                    shrink_core(&mut self.solver, &found, self.config.shrink_budget);
                self.state.stats.shrink_solves += solves;
                if shrunk.is_empty() {
                    return self.finish(true);
                }
                let fresh = analyze_core(&mut self.state, &mut self.solver, &shrunk);
                Step::Core {
                    found,
                    shrunk,
                    fresh,
                }
            }
        }
    }

    /// Iterates until an empty core or a limit.
    pub fn run<F: FnMut(&MinimalModel)>(&mut self, mut sink: F) -> EnumerationReport {
        let complete = loop {
            if let Step::Finished { complete } = self.step(&mut sink) {
                break complete;
            }
        };
        EnumerationReport {
            complete,
            models: self.state.stats.models_emitted,
            stats: self.state.stats.clone(),
            solver: self.solver.stats().clone(),
            theory_constraints: constraint_count(self.solver.theory()),
        }
    }
}

fn constraint_count(theory: &Theory) -> u64 {
    (theory.clauses().len() + theory.cardinalities().len()) as u64
}

/// Enumerates `CIRC(T, P, Z)` projected onto the visible atoms.
pub fn circ_enumerate<F: FnMut(&MinimalModel)>(
    instance: CircInstance,
    config: EngineConfig,
    sink: F,
) -> EnumerationReport {
    CircEngine::new(instance, config).run(sink)
}

/// Replaces the objectives of a core `{¬x_0, ..., ¬x_n}` by fresh atoms
/// `y_1..y_n` and adds `¬x_0 + ... + ¬x_n + y_1 + ... + y_n >= n` together
/// with `y_i → y_{i-1}`. Returns the fresh atoms.
///
/// Panics if a core literal is not the negation of a current objective.
pub fn analyze_core(state: &mut EngineState, solver: &mut Solver, core: &[Lit]) -> Vec<Atom> {
    assert!(!core.is_empty(), "core analysis needs a non-empty core");
    let mut xs: Vec<Atom> = core
        .iter()
        .map(|l| {
            assert!(
                l.is_negative() && state.objectives.contains(&l.atom()),
                "core literal {l} is not a negated objective"
            );
            l.atom()
        })
        .collect();
    xs.sort();
    xs.dedup();
    for x in &xs {
        state.objectives.remove(x);
    }
    state.stats.cores_analyzed += 1;
    let n = xs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let ys = solver.add_atoms(n as u32);
    let lits: Vec<Lit> = xs
        .iter()
        .map(|x| x.negative())
        .chain(ys.iter().map(|y| y.positive()))
        .collect();
    solver
        .add_cardinality(&lits, n as u32)
        .expect("bound n over 2n + 1 literals");
    for i in 1..n {
        solver.add_clause(&[ys[i].negative(), ys[i - 1].positive()]);
    }
    state.stats.core_constraints += n as u64;
    state.objectives.extend(ys.iter().copied());
    ys
}

/// `⋀ I|_R → ⋁ {¬p | p ∈ P ∩ I}` as a clause: the complements of `I|_R`
/// (in `relevant` order) followed by `¬p` for the true minimized atoms.
pub fn blocking_clause(model: &Model, minimized: &[Atom], relevant: &[Atom]) -> Clause {
    let lits: Vec<Lit> = relevant
        .iter()
        .map(|&r| Lit::new(r, !model.value(r)))
        .chain(
            minimized
                .iter()
                .filter(|&&p| model.value(p))
                .map(|p| p.negative()),
        )
        .collect();
    Clause::normalize(&lits).expect("distinct atoms never form a tautology")
}

/// `I|_{P ∪ R}` plus every fresh objective as a positive literal, which
/// switches off the constraints added by core analysis.
pub fn witness_assumptions<F: Fn(Atom) -> bool>(
    model: &Model,
    minimized: &[Atom],
    relevant: &[Atom],
    objectives: &BTreeSet<Atom>,
    is_minimized: F,
) -> Vec<Lit> {
    let mut fixed: Vec<Atom> = minimized.iter().chain(relevant).copied().collect();
    fixed.sort();
    fixed
        .into_iter()
        .map(|a| Lit::new(a, model.value(a)))
        .chain(
            objectives
                .iter()
                .filter(|&&o| !is_minimized(o))
                .map(|o| o.positive()),
        )
        .collect()
}

/// Shrinks an unsatisfiable core by solving under prefixes of sizes
/// 1, 2, 4, ... (the last one capped at the whole core). An unsatisfiable
/// prefix yields a smaller core and restarts the progression. Each call is
/// limited to `budget` conflicts; running out stops shrinking.
///
/// Returns the shrunk core, in the order of the input, and the number of
/// solver calls made.
pub fn shrink_core(solver: &mut Solver, core: &[Lit], budget: u64) -> (Vec<Lit>, u64) {
    let mut current = core.to_vec();
    let mut solves = 0;
    if budget == 0 || current.len() <= 1 {
        return (current, solves);
    }
    let mut size = 1usize;
    loop {
        let take = size.min(current.len());
        solves += 1;
        match solver.solve_limited(&current[..take], Some(budget)) {
            None => break,
            Some(SolveOutcome::Sat { .. }) => {
                if take == current.len() {
                    break;
                }
                size *= 2;
            }
            Some(SolveOutcome::Unsat { core: smaller }) => {
                if smaller.len() >= current.len() {
                    break;
                }
                current.retain(|l| smaller.contains(l));
                if current.len() <= 1 {
                    break;
                }
                size = 1;
            }
        }
    }
    (current, solves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures::*;

    fn l(v: i64) -> Lit {
        Lit::from_dimacs(v)
    }

    fn set<T: Ord + Clone>(v: &[T]) -> BTreeSet<T> {
        v.iter().cloned().collect()
    }

    fn model_from(n: u32, true_atoms: &[Atom]) -> Model {
        let mut values = vec![false; n as usize + 1];
        for a in true_atoms {
            values[a.index()] = true;
        }
        Model::from_values(values)
    }

    fn collect(instance: CircInstance, limits: Limits) -> (Vec<MinimalModel>, EnumerationReport) {
        let mut out = Vec::new();
        let config = EngineConfig {
            limits,
            ..Default::default()
        };
        let report = circ_enumerate(instance, config, |m| out.push(m.clone()));
        (out, report)
    }

    #[test]
    fn base_minimal_models() {
        let inst = CircInstance::new(base(), &[X0, X1, X2], &[]).unwrap();
        assert_eq!(inst.relevant(), &[A, B]);
        let (models, report) = collect(inst, Limits::default());
        let got: BTreeSet<Vec<Atom>> = models.iter().map(|m| m.atoms_true.clone()).collect();
        assert_eq!(got, set(&base_minimal()));
        assert_eq!(models.len(), 4);
        assert!(report.complete);
        assert!(models.iter().all(|m| m.p_size == 1));
    }

    #[test]
    fn switch_with_irrelevant_ab() {
        let inst = CircInstance::new(switch(), &[X0, X1, X2], &[A, B]).unwrap();
        let (models, report) = collect(inst, Limits::default());
        assert_eq!(models.len(), 8);
        assert!(report.complete);
        let sizes: Vec<usize> = models.iter().map(|m| m.p_size).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(sizes.iter().filter(|&&s| s == 3).count(), 4);
    }

    #[test]
    fn contradiction_yields_nothing() {
        let mut t = Theory::new(1);
        t.add_clause(&[l(1)]);
        t.add_clause(&[l(-1)]);
        let inst = CircInstance::new(t, &[Atom::new(1)], &[]).unwrap();
        let (models, report) = collect(inst, Limits::default());
        assert!(models.is_empty());
        assert!(report.complete);
    }

    #[test]
    fn empty_p_enumerates_all_models() {
        let inst = CircInstance::new(base(), &[], &[]).unwrap();
        let (models, report) = collect(inst, Limits::default());
        assert_eq!(models.len(), 16);
        assert!(report.complete);
    }

    #[test]
    fn later_cone_after_relaxed_core() {
        // {x1, x2} is preferred but costs more than {x0}; after the core
        // {¬x0, ¬x1} it is found only once ¬x0 is blocked.
        let mut t = Theory::new(3);
        t.add_clause(&[l(1), l(2)]);
        t.add_clause(&[l(-2), l(3)]);
        let p = [Atom::new(1), Atom::new(2), Atom::new(3)];
        let (models, report) = collect(CircInstance::new(t, &p, &[]).unwrap(), Limits::default());
        let got: Vec<(Vec<Atom>, usize)> = models
            .into_iter()
            .map(|m| (m.atoms_true, m.p_size))
            .collect();
        assert_eq!(got, vec![(vec![p[0]], 1), (vec![p[1], p[2]], 2)]);
        assert!(report.complete);
    }

    #[test]
    fn instance_validation() {
        assert_eq!(
            CircInstance::new(base(), &[A], &[A]).unwrap_err(),
            InstanceError::Overlap(A)
        );
        assert_eq!(
            CircInstance::new(base(), &[Atom::new(9)], &[]).unwrap_err(),
            InstanceError::UnknownAtom(Atom::new(9))
        );
    }

    #[test]
    fn model_limit() {
        let inst = CircInstance::new(base(), &[X0, X1, X2], &[]).unwrap();
        let limits = Limits {
            max_models: Some(1),
            max_witnesses: None,
        };
        let (models, report) = collect(inst.clone(), limits);
        assert_eq!(models.len(), 1);
        assert!(!report.complete);

        // exactly as many as exist: the run still proves completeness
        let limits = Limits {
            max_models: Some(4),
            max_witnesses: None,
        };
        let (models, report) = collect(inst, limits);
        assert_eq!(models.len(), 4);
        assert!(report.complete);
    }

    #[test]
    fn witness_limit_keeps_later_cones() {
        let inst = CircInstance::new(switch(), &[X0, X1, X2], &[A, B]).unwrap();
        for w in [1, 2] {
            let limits = Limits {
                max_models: None,
                max_witnesses: Some(w),
            };
            let (models, report) = collect(inst.clone(), limits);
            assert!(report.complete);
            // 4 cones: {x0}, {x1}, {x2}, {x0,x1,x2,r}
            assert_eq!(report.stats.cones, 4);
            assert!(models.len() as u64 <= 4 * w);
            let cones: BTreeSet<Vec<Atom>> = models
                .iter()
                .map(|m| {
                    m.atoms_true
                        .iter()
                        .copied()
                        .filter(|a| ![A, B].contains(a))
                        .collect()
                })
                .collect();
            assert_eq!(cones.len(), 4);
        }
    }

    #[test]
    fn core_analysis_on_base_builds_relaxed() {
        let mut solver = Solver::new();
        solver.add_atoms(5);
        for c in base().clauses() {
            solver.add_clause(c.lits());
        }
        let mut state = EngineState {
            objectives: set(&[X0, X1, X2]),
            stats: EngineStats::default(),
        };
        let fresh = analyze_core(
            &mut state,
            &mut solver,
            &[X2.negative(), X0.negative(), X1.negative()],
        );
        assert_eq!(fresh, vec![Y1, Y2]);
        assert_eq!(state.objectives, set(&[Y1, Y2]));
        assert_eq!(solver.theory(), &relaxed());
    }

    #[test]
    fn singleton_core_drops_objective() {
        let mut solver = Solver::new();
        solver.add_atoms(5);
        let mut state = EngineState {
            objectives: set(&[X0, X1]),
            stats: EngineStats::default(),
        };
        let fresh = analyze_core(&mut state, &mut solver, &[X0.negative()]);
        assert!(fresh.is_empty());
        assert_eq!(state.objectives, set(&[X1]));
        assert_eq!(solver.num_atoms(), 5);
        assert!(solver.theory().cardinalities().is_empty());
    }

    #[test]
    #[should_panic(expected = "not a negated objective")]
    fn foreign_core_literal_panics() {
        let mut solver = Solver::new();
        solver.add_atoms(5);
        let mut state = EngineState {
            objectives: set(&[X0]),
            stats: EngineStats::default(),
        };
        analyze_core(&mut state, &mut solver, &[X1.negative()]);
    }

    #[test]
    fn blocking_clauses_on_the_fixtures() {
        let m = model_from(5, &[X0]);
        assert_eq!(
            blocking_clause(&m, &[X0, X1, X2], &[A, B]).lits(),
            &[A.positive(), B.positive(), X0.negative()]
        );
        let m = model_from(5, &[X0, B]);
        assert_eq!(
            blocking_clause(&m, &[X0, X1, X2], &[]).lits(),
            &[X0.negative()]
        );
        let m = model_from(6, &[X0, X1, X2, R]);
        assert_eq!(
            blocking_clause(&m, &[X0, X1, X2], &[R]).lits(),
            &[R.negative(), X0.negative(), X1.negative(), X2.negative()]
        );
        // nothing relevant and nothing minimized true: the empty clause
        let m = model_from(5, &[A]);
        assert!(blocking_clause(&m, &[X0], &[]).is_empty());
    }

    #[test]
    fn witness_assumptions_on_the_fixtures() {
        let m = model_from(7, &[X0, Y1, Y2]);
        let objectives = set(&[Y1, Y2]);
        let is_p = |a: Atom| [X0, X1, X2].contains(&a);
        let got = witness_assumptions(&m, &[X0, X1, X2], &[A, B], &objectives, is_p);
        assert_eq!(
            set(&got),
            set(&[l(3), l(-4), l(-5), l(-1), l(-2), l(6), l(7)])
        );
        let got = witness_assumptions(&m, &[X0, X1, X2], &[], &objectives, is_p);
        assert_eq!(set(&got), set(&[l(3), l(-4), l(-5), l(6), l(7)]));
        let objectives = set(&[X0, X1, X2]);
        let m = model_from(5, &[A, X1]);
        let got = witness_assumptions(&m, &[X0, X1, X2], &[A, B], &objectives, is_p);
        assert_eq!(set(&got), set(&[l(-3), l(4), l(-5), l(1), l(-2)]));
    }

    fn base_solver_with_free_atom() -> Solver {
        let mut solver = Solver::new();
        solver.add_atoms(6);
        for c in base().clauses() {
            solver.add_clause(c.lits());
        }
        solver
    }

    #[test]
    fn shrink_removes_irrelevant_literal() {
        let mut solver = base_solver_with_free_atom();
        let q = Atom::new(6);
        let core = [X0.negative(), X1.negative(), X2.negative(), q.negative()];
        let (shrunk, _) = shrink_core(&mut solver, &core, 1000);
        assert_eq!(shrunk, vec![X0.negative(), X1.negative(), X2.negative()]);
        // ¬q first: the progression still finds the three-literal core
        let core = [q.negative(), X0.negative(), X1.negative(), X2.negative()];
        let (shrunk, _) = shrink_core(&mut solver, &core, 1000);
        assert_eq!(
            set(&shrunk),
            set(&[X0.negative(), X1.negative(), X2.negative()])
        );
    }

    #[test]
    fn shrink_keeps_minimal_core_and_respects_zero_budget() {
        let mut solver = base_solver_with_free_atom();
        let core = [X0.negative(), X1.negative(), X2.negative()];
        assert_eq!(shrink_core(&mut solver, &core, 1000).0, core.to_vec());
        let q = Atom::new(6);
        let padded = [X0.negative(), X1.negative(), X2.negative(), q.negative()];
        assert_eq!(shrink_core(&mut solver, &padded, 0), (padded.to_vec(), 0));
    }
}
