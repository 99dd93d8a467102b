#![allow(dead_code)]

use std::collections::BTreeSet;

use circenum::engine::{CircEngine, CircInstance, EngineConfig, Limits, MinimalModel, Step};
use circenum::oracle;
use circenum::{Atom, Lit, Solver, Theory};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A clause over `len` distinct atoms of `1..=n`.
pub fn random_clause(rng: &mut StdRng, n: u32, len: usize) -> Vec<Lit> {
    let mut atoms: Vec<u32> = (1..=n).collect();
    atoms.shuffle(rng);
    atoms
        .into_iter()
        .take(len)
        .map(|a| Lit::new(Atom::new(a), rng.gen_bool(0.5)))
        .collect()
}

fn clause_len(rng: &mut StdRng, n: u32) -> usize {
    let len = if rng.gen_bool(0.1) {
        1
    } else {
        rng.gen_range(2..=4)
    };
    len.min(n as usize)
}

pub fn random_cnf(rng: &mut StdRng, n: u32, m: usize) -> Theory {
    let mut t = Theory::new(n);
    for _ in 0..m {
        let len = clause_len(rng, n);
        t.add_clause(&random_clause(rng, n, len));
    }
    t
}

/// A random cardinality constraint over distinct atoms.
pub fn random_cardinality(rng: &mut StdRng, n: u32, max_len: usize) -> (Vec<Lit>, u32) {
    let len = rng.gen_range(1..=max_len.min(n as usize));
    let lits = random_clause(rng, n, len);
    let bound = rng.gen_range(0..=len as u32);
    (lits, bound)
}

#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub theory: Theory,
    pub p: Vec<Atom>,
    pub z: Vec<Atom>,
}

impl RandomInstance {
    pub fn instance(&self) -> CircInstance {
        CircInstance::new(self.theory.clone(), &self.p, &self.z).expect("disjoint")
    }

    pub fn p_mask(&self) -> u32 {
        oracle::mask(self.p.iter().copied())
    }

    pub fn z_mask(&self) -> u32 {
        oracle::mask(self.z.iter().copied())
    }
}

/// Up to `max_atoms` atoms and `max_clauses` clauses, occasionally with a
/// cardinality constraint, and a random split into P, Z and R.
pub fn random_instance(rng: &mut StdRng, max_atoms: u32, max_clauses: usize) -> RandomInstance {
    let n = rng.gen_range(1..=max_atoms);
    let m = rng.gen_range(0..=max_clauses);
    let mut theory = random_cnf(rng, n, m);
    if rng.gen_bool(0.2) {
        let (lits, k) = random_cardinality(rng, n, 5);
        theory
            .add_cardinality(&lits, k)
            .expect("bound within length");
    }
    let (mut p, mut z) = (Vec::new(), Vec::new());
    for a in theory.atoms() {
        match rng.gen_range(0..10) {
            0..=3 => p.push(a),
            4..=6 => z.push(a),
            _ => {}
        }
    }
    RandomInstance { theory, p, z }
}

pub fn solver_for(theory: &Theory) -> Solver {
    let mut s = Solver::new();
    if theory.num_atoms() > 0 {
        s.add_atoms(theory.num_atoms());
    }
    for c in theory.clauses() {
        s.add_clause(c.lits());
    }
    for c in theory.cardinalities() {
        s.add_cardinality(c.lits(), c.bound()).expect("normalized");
    }
    s
}

pub fn model_mask(m: &MinimalModel) -> u32 {
    oracle::mask(m.atoms_true.iter().copied())
}

/// Everything observed while running the engine to completion.
#[derive(Debug, Default)]
pub struct Run {
    pub models: Vec<MinimalModel>,
    pub complete: bool,
    pub top_solve_calls: u64,
}

pub fn run_engine(inst: CircInstance, limits: Limits) -> Run {
    let config = EngineConfig {
        limits,
        ..Default::default()
    };
    let mut engine = CircEngine::new(inst, config);
    let mut run = Run::default();
    loop {
        if let Step::Finished { complete } = engine.step(|m| run.models.push(m.clone())) {
            run.complete = complete;
            break;
        }
    }
    run.top_solve_calls = engine.stats().top_solve_calls;
    run
}

/// Outcome of comparing one run against the oracle.
#[derive(Debug)]
pub struct Checked {
    pub models_of_t: usize,
    pub p_len: usize,
    pub top_solve_calls: u64,
}

impl Checked {
    pub fn strict_bound(&self) -> bool {
        self.top_solve_calls <= (self.models_of_t + self.p_len) as u64
    }

    pub fn relaxed_bound(&self) -> bool {
        self.top_solve_calls <= (self.models_of_t + self.p_len + 1) as u64
    }
}

/// Runs the engine on `ri` and checks the emitted set against the oracle,
/// the absence of duplicates and the size order.
pub fn check_against_oracle(ri: &RandomInstance) -> Result<Checked, String> {
    let run = run_engine(ri.instance(), Limits::default());
    let expected = oracle::circ(&ri.theory, ri.p_mask(), ri.z_mask()).map_err(|e| e.to_string())?;
    let got: Vec<u32> = run.models.iter().map(model_mask).collect();
    let got_set: BTreeSet<u32> = got.iter().copied().collect();
    if got_set.len() != got.len() {
        return Err(format!("duplicate models in {got:?}"));
    }
    if got_set != expected {
        return Err(format!(
            "emitted {got_set:?}, expected {expected:?} on {ri:?}"
        ));
    }
    if !run.complete {
        return Err("run not complete".into());
    }
    let sizes: Vec<usize> = run.models.iter().map(|m| m.p_size).collect();
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("sizes out of order: {sizes:?}"));
    }
    let models_of_t = oracle::all_models(&ri.theory)
        .map_err(|e| e.to_string())?
        .len();
    Ok(Checked {
        models_of_t,
        p_len: ri.p.len(),
        top_solve_calls: run.top_solve_calls,
    })
}

/// Random unsatisfiable CNF with at most `max_clauses` clauses.
pub fn random_unsat_cnf(rng: &mut StdRng, max_clauses: usize) -> Theory {
    loop {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(2..=max_clauses);
        let mut t = Theory::new(n);
        for _ in 0..m {
            let len = rng.gen_range(1..=3.min(n as usize));
            t.add_clause(&random_clause(rng, n, len));
        }
        if oracle::all_models(&t).expect("small").is_empty() {
            return t;
        }
    }
}

/// DIMACS text of a theory's clauses.
pub fn dimacs(t: &Theory) -> String {
    let mut s = format!("p cnf {} {}\n", t.num_atoms(), t.clauses().len());
    for c in t.clauses() {
        for l in c.lits() {
            s.push_str(&format!("{l} "));
        }
        s.push_str("0\n");
    }
    s
}

/// Runs the binary-free CLI entry point on `input`.
pub fn run_cli(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["circenum"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = circenum::frontend::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

/// Parses `m i j ... 0` lines into index sets.
pub fn mcs_lines(out: &str) -> Vec<Vec<usize>> {
    out.lines()
        .filter(|l| l.starts_with("m "))
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|t| t.parse::<usize>().unwrap())
                .take_while(|&v| v != 0)
                .collect()
        })
        .collect()
}

/// `clauses` minus the 1-based indices in `removed`, solved from scratch.
pub fn satisfiable_without(t: &Theory, removed: &[usize]) -> bool {
    let mut s = Solver::new();
    if t.num_atoms() > 0 {
        s.add_atoms(t.num_atoms());
    }
    for (i, c) in t.clauses().iter().enumerate() {
        if !removed.contains(&(i + 1)) {
            s.add_clause(c.lits());
        }
    }
    s.solve(&[]).is_sat()
}

/// Soundness and minimality of a reported correction set.
pub fn verify_mcs(t: &Theory, set: &[usize]) -> bool {
    satisfiable_without(t, set)
        && (0..set.len()).all(|k| {
            let mut smaller = set.to_vec();
            smaller.remove(k);
            !satisfiable_without(t, &smaller)
        })
}
