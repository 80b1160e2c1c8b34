//! Exhaustive enumeration of `G`-invariant weak `d`-pseudomanifolds on `n`
//! vertices with at least `N` facets and half-complementarity.
//!
//! Decisions are made per orbit of `(d+1)`-subsets. Two facets `F`, `F'`
//! violate half-complementarity exactly when `F ∪ F' = V`, so the
//! constraint reduces to pairwise conflicts between orbits. Propagation:
//!
//! * an orbit set IN forces OUT every conflicting orbit;
//! * a ridge of degree 2 forces OUT its remaining cofacet orbits;
//! * a ridge of degree 1 forces OUT orbits that would add two facets, fails
//!   with no candidate left, and forces IN a unique candidate;
//! * a ridge of degree 0 with a single single-facet candidate forces it OUT;
//! * `IN facets + undecided facets < N` fails.
//!
//! Branching is on the degree-1 ridge with the fewest candidates, trying
//! each candidate IN after the previous ones OUT. When no ridge is open
//! the IN family is a weak pseudomanifold; it is emitted if large enough
//! and the search continues by adding further undecided orbits.

mod checkpoint;
mod state;
mod tables;

pub use checkpoint::Checkpoint;
pub use tables::{FacetOrbit, Tables, MAX_CANDIDATE_FACETS};

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::fixed_points::validate_action;
use crate::group::PermGroup;
use crate::vertex_set::VertexSet;
use state::{State, IN, OUT};

#[derive(Clone, Debug, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub d: usize,
    pub n: usize,
    pub min_facets: usize,
    pub group: PermGroup,
    pub seed_facets: Vec<VertexSet>,
    pub limits: SearchLimits,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("seed facets are infeasible: {0}")]
    InfeasibleSeed(String),
    #[error("search budget exhausted after {nodes} nodes; {completed}/{total} tasks done")]
    BudgetExceeded {
        nodes: u64,
        completed: usize,
        total: usize,
        checkpoint: Option<PathBuf>,
    },
    #[error("{needed} candidate facets exceed the table limit")]
    MemoryBudget { needed: u64 },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_interval: Option<Duration>,
    /// Number of subtree tasks to aim for when splitting the tree.
    pub target_tasks: Option<usize>,
    pub progress: bool,
}

pub const DEFAULT_TARGET_TASKS: usize = 256;

#[derive(Clone, Debug, Serialize)]
pub struct SearchStats {
    pub orbits: usize,
    pub ridges: usize,
    pub tasks: usize,
    pub resumed_tasks: usize,
    pub nodes: u64,
    pub elapsed_secs: f64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// Sorted by facet list.
    pub solutions: Vec<SimplicialComplex>,
    pub stats: SearchStats,
}

/// A branching decision: orbit index and whether it goes IN.
pub type Decision = (u32, bool);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Task {
    pub id: usize,
    pub prefix: Vec<Decision>,
}

impl SearchProblem {
    pub fn new(d: usize, n: usize, min_facets: usize, group: PermGroup) -> Self {
        SearchProblem {
            d,
            n,
            min_facets,
            group,
            seed_facets: Vec::new(),
            limits: SearchLimits::default(),
        }
    }

    pub fn with_seeds(mut self, seeds: Vec<VertexSet>) -> Self {
        self.seed_facets = seeds;
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.group.degree() != self.n {
            return Err(SearchError::InvalidProblem(format!(
                "group degree {} differs from n = {}",
                self.group.degree(),
                self.n
            )));
        }
        if self.d + 1 > self.n || self.n > 64 || self.d == 0 {
            return Err(SearchError::InvalidProblem(format!("need 1 ≤ d < n ≤ 64, got d = {}, n = {}", self.d, self.n)));
        }
        let full = VertexSet::full(self.n);
        for s in &self.seed_facets {
            if s.len() != self.d + 1 || !s.is_subset(full) {
                return Err(SearchError::InvalidProblem(format!("seed {s} is not a {}-subset of 1..={}", self.d + 1, self.n)));
            }
        }
        Ok(())
    }

    /// Hash of everything that determines the search tree.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("d={} n={} N={}\n", self.d, self.n, self.min_facets));
        for g in self.group.elements() {
            h.update(g.to_cycle_string());
            h.update(b"\n");
        }
        let mut seeds = self.seed_facets.clone();
        seeds.sort_unstable();
        for s in seeds {
            h.update(s.bits().to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

/// The `G`-orbits of `(d+1)`-subsets with their ridge and conflict data.
pub fn facet_orbits(problem: &SearchProblem) -> Result<Vec<FacetOrbit>, SearchError> {
    problem.validate()?;
    Ok(Tables::build(problem)?.orbits)
}

struct Shared {
    nodes: AtomicU64,
    abort: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if (*local).is_multiple_of(1024) {
            let total = self.nodes.fetch_add(1024, Ordering::Relaxed) + 1024;
            if self.max_nodes.is_some_and(|m| total > m)
                || self.deadline.is_some_and(|d| Instant::now() > d)
            {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }

    fn flush(&self, local: u64) {
        let total = self.nodes.fetch_add(local % 1024, Ordering::Relaxed) + local % 1024;
        if self.max_nodes.is_some_and(|m| total > m) {
            self.abort.store(true, Ordering::Relaxed);
        }
    }
}

enum Mode<'a> {
    /// Stop at branching depth `cutoff` and record the prefix as a task.
    Split { cutoff: usize, tasks: &'a mut Vec<Vec<Decision>> },
    Solve,
}

struct Dfs<'s, 't> {
    st: State<'t>,
    shared: &'s Shared,
    local_nodes: u64,
    prefix: Vec<Decision>,
    depth: usize,
    solutions: Vec<Vec<VertexSet>>,
    full: VertexSet,
    min_facets: usize,
}

impl Dfs<'_, '_> {
    fn emit_if_complete(&mut self) {
        if self.st.in_facets >= self.min_facets && self.st.in_facets > 0 && self.st.covered() == self.full {
            self.solutions.push(self.st.facets());
        }
    }

    /// Tries `cands[i]` IN with `cands[..i]` OUT, for each `i`.
    /// Returns false if the search was aborted.
    fn branch(&mut self, cands: &[u32], mode: &mut Mode) -> bool {
        for (i, &c) in cands.iter().enumerate() {
            let mark = self.st.mark();
            let plen = self.prefix.len();
            for &o in &cands[..i] {
                self.st.push(o, OUT);
                self.prefix.push((o, false));
            }
            self.st.push(c, IN);
            self.prefix.push((c, true));
            self.depth += 1;
            let ok = self.st.propagate();
            let alive = if ok { self.node(mode) } else { true };
            self.st.undo(mark);
            self.prefix.truncate(plen);
            self.depth -= 1;
            if !alive {
                return false;
            }
        }
        true
    }

    fn node(&mut self, mode: &mut Mode) -> bool {
        if !self.shared.tick(&mut self.local_nodes) {
            return false;
        }
        if let Mode::Split { cutoff, tasks } = mode {
            if self.depth >= *cutoff {
                tasks.push(self.prefix.clone());
                return true;
            }
        }
        if let Some(r) = self.st.pick_open_ridge() {
            let cands = self.st.undecided_candidates(r);
            return self.branch(&cands, mode);
        }
        // A closed state above the split cutoff is emitted by the split pass.
        self.emit_if_complete();
        let cands = self.st.undecided_orbits();
        self.branch(&cands, mode)
    }
}

fn seed_state<'t>(tables: &'t Tables, problem: &SearchProblem) -> Result<State<'t>, SearchError> {
    let mut st = State::new(tables, problem.min_facets);
    for s in &problem.seed_facets {
        st.push(tables.facet_orbit[s], IN);
    }
    if !st.propagate() {
        return Err(SearchError::InfeasibleSeed(
            "propagating the seed orbits reaches a contradiction".into(),
        ));
    }
    Ok(st)
}

/// Splits the tree into at least `target` tasks (or as many as exist),
/// returning the tasks and the solutions met above the split.
fn split(
    tables: &Tables,
    problem: &SearchProblem,
    shared: &Shared,
    target: usize,
    progress: bool,
) -> Result<(Vec<Vec<Decision>>, Vec<Vec<VertexSet>>), SearchError> {
    let mut cutoff = 1;
    loop {
        let st = seed_state(tables, problem)?;
        let mut dfs = Dfs {
            st,
            shared,
            local_nodes: 0,
            prefix: Vec::new(),
            depth: 0,
            solutions: Vec::new(),
            full: VertexSet::full(problem.n),
            min_facets: problem.min_facets,
        };
        let mut tasks = Vec::new();
        // Root emission belongs to the split pass.
        dfs.node(&mut Mode::Split { cutoff, tasks: &mut tasks });
        shared.flush(dfs.local_nodes);
        if progress {
            eprintln!("split: cutoff {cutoff} -> {} tasks, {} nodes", tasks.len(), shared.nodes.load(Ordering::Relaxed));
        }
        if tasks.len() >= target || tasks.is_empty() || cutoff >= 64 {
            return Ok((tasks, dfs.solutions));
        }
        cutoff += 1;
    }
}

fn run_task(tables: &Tables, problem: &SearchProblem, shared: &Shared, prefix: &[Decision]) -> Option<Vec<Vec<VertexSet>>> {
    let mut st = seed_state(tables, problem).expect("seed checked during split");
    for &(o, v) in prefix {
        st.push(o, if v { IN } else { OUT });
    }
    assert!(st.propagate(), "task prefix replays consistently");
    let mut dfs = Dfs {
        st,
        shared,
        local_nodes: 0,
        prefix: prefix.to_vec(),
        depth: 0,
        solutions: Vec::new(),
        full: VertexSet::full(problem.n),
        min_facets: problem.min_facets,
    };
    let alive = dfs.node(&mut Mode::Solve);
    shared.flush(dfs.local_nodes);
    alive.then_some(dfs.solutions)
}

/// Knuth's random-probe estimate of the search tree size, averaged over
/// `samples` root-to-leaf walks.
pub fn estimate_tree_size(problem: &SearchProblem, samples: usize, seed: u64) -> Result<f64, SearchError> {
    problem.validate()?;
    let tables = Tables::build(problem)?;
    let mut rng = seed.max(1);
    let mut next = move |k: usize| {
        // xorshift64
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        (rng % k as u64) as usize
    };
    let mut total = 0.0;
    for _ in 0..samples {
        let mut st = seed_state(&tables, problem)?;
        let (mut weight, mut est) = (1.0f64, 1.0f64);
        loop {
            let cands = match st.pick_open_ridge() {
                Some(r) => st.undecided_candidates(r),
                None => st.undecided_orbits(),
            };
            if cands.is_empty() {
                break;
            }
            weight *= cands.len() as f64;
            est += weight;
            let i = next(cands.len());
            for &o in &cands[..i] {
                st.push(o, OUT);
            }
            st.push(cands[i], IN);
            if !st.propagate() {
                break;
            }
        }
        total += est;
    }
    Ok(total / samples as f64)
}

/// Independent re-check of one emitted facet family.
pub fn verify_solution(problem: &SearchProblem, facets: &[VertexSet]) -> Result<SimplicialComplex, String> {
    let k = SimplicialComplex::from_facets(problem.n, facets.iter().copied()).map_err(|e| e.to_string())?;
    if k.facets().len() != facets.len() || k.facets().len() < problem.min_facets {
        return Err("facet count".into());
    }
    let status = k.pseudomanifold_status(problem.d);
    if !status.weak {
        return Err("not a weak pseudomanifold".into());
    }
    let comp = k.complementarity_status().map_err(|e| e.to_string())?;
    if !comp.at_most_one() {
        return Err("violates half-complementarity".into());
    }
    validate_action(&k, problem.group.generators()).map_err(|e| e.to_string())?;
    if !problem.seed_facets.iter().all(|s| k.facets().contains(s)) {
        return Err("missing a seed facet".into());
    }
    Ok(k)
}

pub fn enumerate(problem: &SearchProblem) -> Result<SearchOutcome, SearchError> {
    enumerate_with(problem, &SearchOptions::default())
}

pub fn enumerate_with(problem: &SearchProblem, opts: &SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    problem.validate()?;
    let tables = Tables::build(problem)?;
    let shared = Shared {
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        max_nodes: problem.limits.max_nodes,
        deadline: problem.limits.max_time.map(|t| start + t),
    };
    let target = opts.target_tasks.unwrap_or(DEFAULT_TARGET_TASKS);
    let (prefixes, top_solutions) = split(&tables, problem, &shared, target, opts.progress)?;
    if shared.abort.load(Ordering::Relaxed) {
        return Err(SearchError::BudgetExceeded {
            nodes: shared.nodes.load(Ordering::Relaxed),
            completed: 0,
            total: 0,
            checkpoint: None,
        });
    }
    let tasks: Vec<Task> = prefixes
        .into_iter()
        .enumerate()
        .map(|(id, prefix)| Task { id, prefix })
        .collect();

    let fingerprint = problem.fingerprint();
    let mut ckpt = match &opts.checkpoint {
        Some(path) if path.exists() => {
            let c = Checkpoint::load(path)?;
            if c.fingerprint != fingerprint || c.total_tasks != tasks.len() {
                return Err(SearchError::Checkpoint(format!(
                    "{} belongs to a different problem or task split",
                    path.display()
                )));
            }
            c
        }
        _ => Checkpoint::new(fingerprint, tasks.len()),
    };
    let resumed = ckpt.completed.len();
    let done: std::collections::HashSet<usize> = ckpt.completed.iter().map(|c| c.task).collect();
    let pending: Vec<&Task> = tasks.iter().filter(|t| !done.contains(&t.id)).collect();
    if opts.progress {
        eprintln!(
            "search: {} orbits, {} ridges, {} tasks ({} already done)",
            tables.orbits.len(),
            tables.ridges.len(),
            tasks.len(),
            resumed
        );
    }

    let ckpt_lock = Mutex::new((&mut ckpt, Instant::now()));
    let interval = opts.checkpoint_interval.unwrap_or(Duration::from_secs(60));
    let work = || {
        pending.par_iter().for_each(|task| {
            if shared.abort.load(Ordering::Relaxed) {
                return;
            }
            let Some(found) = run_task(&tables, problem, &shared, &task.prefix) else {
                return;
            };
            let mut guard = ckpt_lock.lock().unwrap();
            let (c, last) = &mut *guard;
            c.record(task.id, &found);
            if opts.progress {
                eprintln!(
                    "search: task {} done ({}/{}), {} nodes, {:.0}s",
                    task.id,
                    c.completed.len(),
                    c.total_tasks,
                    shared.nodes.load(Ordering::Relaxed),
                    start.elapsed().as_secs_f64()
                );
            }
            if let Some(path) = &opts.checkpoint {
                if last.elapsed() >= interval {
                    if let Err(e) = c.save(path) {
                        eprintln!("search: failed to write checkpoint: {e}");
                    }
                    *last = Instant::now();
                }
            }
        })
    };
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .stack_size(16 << 20)
            .build()
            .map_err(|e| SearchError::InvalidProblem(e.to_string()))?
            .install(work),
        None => work(),
    }
    if let Some(path) = &opts.checkpoint {
        ckpt.save(path)?;
    }
    let nodes = shared.nodes.load(Ordering::Relaxed);
    if shared.abort.load(Ordering::Relaxed) && ckpt.completed.len() < tasks.len() {
        return Err(SearchError::BudgetExceeded {
            nodes,
            completed: ckpt.completed.len(),
            total: tasks.len(),
            checkpoint: opts.checkpoint.clone(),
        });
    }

    let mut families: Vec<Vec<VertexSet>> = top_solutions;
    for c in &ckpt.completed {
        families.extend(c.solutions.iter().map(|s| s.to_vec()));
    }
    families.sort();
    families.dedup();
    let solutions = families
        .iter()
        .map(|f| {
            verify_solution(problem, f).unwrap_or_else(|e| panic!("search emitted an invalid complex: {e}"))
        })
        .collect();
    Ok(SearchOutcome {
        solutions,
        stats: SearchStats {
            orbits: tables.orbits.len(),
            ridges: tables.ridges.len(),
            tasks: tasks.len(),
            resumed_tasks: resumed,
            nodes,
            elapsed_secs: start.elapsed().as_secs_f64(),
        },
    })
}

/// One representative per isomorphism class, sorted by canonical form.
pub fn dedup_up_to_iso(results: &[SimplicialComplex]) -> Vec<SimplicialComplex> {
    let mut forms: Vec<SimplicialComplex> = results.iter().map(crate::iso::canonical_form).collect();
    forms.sort();
    forms.dedup();
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cp2_9, heisenberg_on_plane, rp2_6};
    use crate::iso::are_isomorphic;
    use crate::vertex_set::k_subsets;

    /// Brute force over every family of `(d+1)`-subsets of a given size.
    fn brute_force(n: usize, d: usize, size: usize) -> Vec<SimplicialComplex> {
        let all: Vec<VertexSet> = k_subsets(n, d + 1).collect();
        let mut out = Vec::new();
        let m = all.len();
        assert!(m <= 24);
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let fam: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            if fam.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f)) != VertexSet::full(n) {
                continue;
            }
            let k = SimplicialComplex::from_facets(n, fam).unwrap();
            if k.pseudomanifold_status(d).weak
                && k.complementarity_status().unwrap().at_most_one()
            {
                out.push(k);
            }
        }
        out
    }

    #[test]
    fn six_vertex_planes_match_brute_force() {
        let p = SearchProblem::new(2, 6, 10, PermGroup::trivial(6));
        let got = enumerate(&p).unwrap().solutions;
        let mut want = brute_force(6, 2, 10);
        want.sort();
        assert_eq!(got, want);
        assert_eq!(got.len(), 12);
        assert!(got.iter().all(|k| are_isomorphic(k, &rp2_6()).is_some()));
        assert_eq!(dedup_up_to_iso(&got).len(), 1);
    }

    #[test]
    fn nine_vertex_labelled_count_matches_orbit_stabilizer() {
        // Every class contributes 9!/|Aut| labelled copies.
        let p = SearchProblem::new(4, 9, 36, PermGroup::trivial(9));
        let got = enumerate(&p).unwrap().solutions;
        let classes = dedup_up_to_iso(&got);
        let expected: u64 = classes
            .iter()
            .map(|k| 362_880 / crate::iso::symmetry_group(k).unwrap().order() as u64)
            .sum();
        assert_eq!(got.len() as u64, expected);
        assert!(classes.iter().any(|k| are_isomorphic(k, &cp2_9()).is_some()));
    }

    #[test]
    fn nine_vertex_heisenberg_search_finds_only_cp2() {
        let p = SearchProblem::new(4, 9, 36, heisenberg_on_plane());
        let out = enumerate(&p).unwrap();
        assert!(!out.solutions.is_empty());
        assert!(out.solutions.iter().all(|k| are_isomorphic(k, &cp2_9()).is_some()));
        assert!(out.solutions.contains(&cp2_9()));
    }

    #[test]
    fn split_and_threads_do_not_change_the_answer() {
        let p = SearchProblem::new(2, 6, 10, PermGroup::trivial(6));
        let base = enumerate(&p).unwrap().solutions;
        for (threads, target) in [(1, 1), (2, 7), (4, 64)] {
            let opts = SearchOptions {
                threads: Some(threads),
                target_tasks: Some(target),
                ..Default::default()
            };
            assert_eq!(enumerate_with(&p, &opts).unwrap().solutions, base);
        }
    }

    #[test]
    fn budget_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let mut p = SearchProblem::new(4, 9, 36, PermGroup::trivial(9));
        let full = enumerate(&p).unwrap().solutions;
        p.limits.max_nodes = Some(40_000);
        let opts = SearchOptions {
            threads: Some(1),
            checkpoint: Some(path.clone()),
            checkpoint_interval: Some(Duration::ZERO),
            ..Default::default()
        };
        match enumerate_with(&p, &opts) {
            Err(SearchError::BudgetExceeded { completed, total, .. }) => assert!(completed > 0 && completed < total),
            other => panic!("expected budget error, got {other:?}"),
        }
        p.limits.max_nodes = None;
        let resumed = enumerate_with(&p, &opts).unwrap();
        assert!(resumed.stats.resumed_tasks > 0);
        assert_eq!(resumed.solutions, full);
        let other = SearchProblem::new(4, 9, 35, PermGroup::trivial(9));
        assert!(matches!(enumerate_with(&other, &opts), Err(SearchError::Checkpoint(_))));
    }

    #[test]
    fn infeasible_seed_is_reported() {
        // Two complementary-covering triangles on 6 vertices.
        let seeds = vec![VertexSet::from_vertices([1, 2, 3]), VertexSet::from_vertices([4, 5, 6])];
        let p = SearchProblem::new(2, 6, 10, PermGroup::trivial(6)).with_seeds(seeds);
        assert!(matches!(enumerate(&p), Err(SearchError::InfeasibleSeed(_))));
    }
}
