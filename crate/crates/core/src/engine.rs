//! Exponential-space traversal of the solution graph.
//!
//! Starting from one maximal solution, the traversal visits every solution
//! reachable through [`Problem::neighbors`], remembering visited solutions in
//! a [`SolutionDict`]. Each frame keeps the full candidate list of its
//! solution, so emitting in pre-order leaves exactly one `neighbors` call
//! between consecutive outputs. [`OutputOrder::Alternating`] instead emits
//! in pre-order at even depth and post-order at odd depth, which bounds the
//! gap by two calls even when candidates are produced lazily.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::dict::SolutionDict;
use crate::error::{Error, Result};

/// A maximal solution: strictly increasing element ids.
pub type Solution = Vec<usize>;

/// Whether ground-set ids denote vertices or edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Vertex,
    Edge,
}

impl ElementKind {
    pub fn prefix(self) -> &'static str {
        match self {
            ElementKind::Vertex => "v",
            ElementKind::Edge => "e",
        }
    }
}

/// Counts `comp` invocations of a problem instance.
#[derive(Debug, Default)]
pub struct CompCounter(AtomicU64);

impl CompCounter {
    pub fn tick(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

/// A maximal-subgraph listing problem, as seen by the traversal.
pub trait Problem {
    /// Variant name, as accepted by the CLI.
    fn name(&self) -> &'static str;

    fn element_kind(&self) -> ElementKind;

    /// Size of the ground set; elements are `0..ground_size()`.
    fn ground_size(&self) -> usize;

    /// Whether the sorted element set `cand` is a (not necessarily maximal)
    /// solution.
    fn is_solution(&self, cand: &[usize]) -> bool;

    /// Extends the solution `partial` to a maximal solution.
    fn comp(&self, partial: &[usize]) -> Solution;

    /// Maximal solutions adjacent to `s` in the solution graph. May contain
    /// duplicates and `s` itself.
    fn neighbors(&self, s: &[usize]) -> Vec<Solution>;

    /// Number of `comp` calls made so far on this instance.
    fn comp_calls(&self) -> u64;

    /// Upper bound on the `comp` calls a single `neighbors` call makes.
    fn neighbors_comp_bound(&self) -> u64;

    /// Canonical order of a maximal solution; `None` when proximity is plain
    /// intersection.
    fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>>;

    /// The poly-space view of this instance, when its orders allow one.
    fn as_pspace(&self) -> Option<&dyn crate::pspace::PspaceProblem> {
        None
    }

    fn first_solution(&self) -> Solution {
        self.comp(&[])
    }

    /// Every strict single-element extension fails. All supported set systems
    /// are strongly accessible, so this is equivalent to maximality.
    fn is_maximal_solution(&self, s: &[usize]) -> bool {
        self.is_solution(s) && (0..self.ground_size()).all(|e| s.contains(&e) || !self.is_solution(&insert_sorted(s, e)))
    }

    /// Size of the proximity of `s` to `target`.
    fn proximity(&self, s: &[usize], target: &[usize]) -> usize {
        match self.canonical_order(target) {
            Some(order) => prefix_proximity(&order, s),
            None => sorted_intersection_len(s, target),
        }
    }
}

/// Length of the longest prefix of `order` whose elements all lie in the
/// sorted set `s`.
pub fn prefix_proximity(order: &[usize], s: &[usize]) -> usize {
    order.iter().take_while(|e| s.binary_search(e).is_ok()).count()
}

pub fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|e| b.binary_search(e).is_ok()).count()
}

/// Copy of sorted `s` with `e` inserted.
pub fn insert_sorted(s: &[usize], e: usize) -> Vec<usize> {
    let mut out = s.to_vec();
    if let Err(i) = out.binary_search(&e) {
        out.insert(i, e);
    }
    out
}

/// Run statistics. All fields only grow during a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counters {
    pub solutions_emitted: u64,
    pub neighbors_calls: u64,
    pub comp_calls: u64,
    pub dict_operations: u64,
    /// Largest number of `comp` calls between two consecutive emissions.
    pub max_comp_gap: u64,
    /// `comp` calls made before the first emission.
    pub comp_before_first: u64,
    /// Whether a solution dictionary was allocated.
    pub dict_allocated: bool,
}

/// Tracks emissions and the comp-call gap between them.
pub(crate) struct Emitter<'a, F> {
    pub(crate) counters: Counters,
    sink: F,
    comp_base: u64,
    last_emit_comp: u64,
    comp_source: &'a dyn Fn() -> u64,
}

impl<'a, F, E> Emitter<'a, F>
where
    F: FnMut(&[usize]) -> std::result::Result<ControlFlow<()>, E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    pub(crate) fn new(sink: F, comp_source: &'a dyn Fn() -> u64) -> Self {
        let base = comp_source();
        Emitter {
            counters: Counters::default(),
            sink,
            comp_base: base,
            last_emit_comp: base,
            comp_source,
        }
    }

    pub(crate) fn sync(&mut self) {
        self.counters.comp_calls = (self.comp_source)() - self.comp_base;
    }

    pub(crate) fn emit(&mut self, s: &[usize]) -> Result<ControlFlow<()>> {
        let now = (self.comp_source)();
        let gap = now - self.last_emit_comp;
        if self.counters.solutions_emitted == 0 {
            self.counters.comp_before_first = gap;
        } else {
            self.counters.max_comp_gap = self.counters.max_comp_gap.max(gap);
        }
        self.last_emit_comp = now;
        self.sync();
        self.counters.solutions_emitted += 1;
        (self.sink)(s).map_err(|e| Error::Sink {
            emitted: self.counters.solutions_emitted - 1,
            source: e.into(),
        })
    }
}

/// When the exponential-space traversal emits a solution.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OutputOrder {
    /// On discovery.
    #[default]
    PreOrder,
    /// On discovery at even depth, on leaving at odd depth.
    Alternating,
}

impl OutputOrder {
    fn on_enter(self, depth: usize) -> bool {
        self == OutputOrder::PreOrder || depth.is_multiple_of(2)
    }
}

struct Frame {
    solution: Solution,
    pending: std::vec::IntoIter<Solution>,
    depth: usize,
}

/// Lists every maximal solution of `p` exactly once, streaming each to
/// `sink`. The sink can stop the run early with `ControlFlow::Break`.
pub fn enumerate_exp<P, F, E>(p: &P, sink: F) -> Result<Counters>
where
    P: Problem + ?Sized,
    F: FnMut(&[usize]) -> std::result::Result<ControlFlow<()>, E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    enumerate_exp_with(p, OutputOrder::PreOrder, sink)
}

/// [`enumerate_exp`] with an explicit output order.
pub fn enumerate_exp_with<P, F, E>(p: &P, order: OutputOrder, sink: F) -> Result<Counters>
where
    P: Problem + ?Sized,
    F: FnMut(&[usize]) -> std::result::Result<ControlFlow<()>, E>,
    E: Into<Box<dyn std::error::Error + Send + Sync>>,
{
    let comp_source = || p.comp_calls();
    let mut out = Emitter::new(sink, &comp_source);
    out.counters.dict_allocated = true;
    let mut dict = SolutionDict::new();

    let first = p.first_solution();
    let mut stack: Vec<Frame> = Vec::new();
    let mut next = Some((first, 0usize));

    loop {
        if let Some((s, depth)) = next.take() {
            dict.insert(&s);
            if order.on_enter(depth) && out.emit(&s)?.is_break() {
                break;
            }
            out.counters.neighbors_calls += 1;
            let pending = p.neighbors(&s).into_iter();
            stack.push(Frame {
                solution: s,
                pending,
                depth,
            });
            continue;
        }
        let Some(top) = stack.last_mut() else { break };
        match top.pending.next() {
            Some(cand) => {
                if dict.insert(&cand) {
                    next = Some((cand, top.depth + 1));
                }
            }
            None => {
                let done = stack.pop().unwrap();
                if !order.on_enter(done.depth) && out.emit(&done.solution)?.is_break() {
                    break;
                }
            }
        }
    }
    out.sync();
    out.counters.dict_operations = dict.operations();
    Ok(out.counters)
}

/// Convenience wrapper collecting every solution, sorted.
pub fn collect_exp<P: Problem + ?Sized>(p: &P) -> (Vec<Solution>, Counters) {
    let mut all = Vec::new();
    let counters = enumerate_exp(p, |s: &[usize]| {
        all.push(s.to_vec());
        Ok::<_, std::convert::Infallible>(ControlFlow::Continue(()))
    })
    .expect("infallible sink");
    all.sort();
    (all, counters)
}

/// Builds `neighbors(S)` from per-extender partial solutions: for every
/// element `v` outside `s`, each set produced by `reconstruct(v)` is
/// completed with `comp`.
pub fn neighbors_by_reconstruction<P, R>(p: &P, s: &[usize], mut reconstruct: R) -> Vec<Solution>
where
    P: Problem + ?Sized,
    R: FnMut(usize) -> Vec<Solution>,
{
    let mut out = Vec::new();
    let mut in_s = vec![false; p.ground_size()];
    for &e in s {
        in_s[e] = true;
    }
    for v in (0..p.ground_size()).filter(|&v| !in_s[v]) {
        for partial in reconstruct(v) {
            out.push(p.comp(&partial));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::RefCell;

    /// Independent sets of a path, with a deliberately redundant neighbor
    /// function: every maximal solution lists every other one.
    struct AllToAll {
        sols: Vec<Solution>,
        calls: CompCounter,
        order_log: RefCell<Vec<Solution>>,
    }

    impl Problem for AllToAll {
        fn name(&self) -> &'static str {
            "all-to-all"
        }
        fn element_kind(&self) -> ElementKind {
            ElementKind::Vertex
        }
        fn ground_size(&self) -> usize {
            5
        }
        fn is_solution(&self, cand: &[usize]) -> bool {
            self.sols.iter().any(|s| cand.iter().all(|e| s.contains(e)))
        }
        fn comp(&self, partial: &[usize]) -> Solution {
            self.calls.tick();
            self.sols
                .iter()
                .find(|s| partial.iter().all(|e| s.contains(e)))
                .unwrap()
                .clone()
        }
        fn neighbors(&self, s: &[usize]) -> Vec<Solution> {
            self.order_log.borrow_mut().push(s.to_vec());
            let mut v = self.sols.clone();
            v.push(s.to_vec());
            v
        }
        fn comp_calls(&self) -> u64 {
            self.calls.get()
        }
        fn neighbors_comp_bound(&self) -> u64 {
            0
        }
        fn canonical_order(&self, s: &[usize]) -> Option<Vec<usize>> {
            Some(s.to_vec())
        }
    }

    fn path_mis() -> AllToAll {
        AllToAll {
            sols: vec![vec![0, 2, 4], vec![0, 3], vec![1, 3], vec![1, 4]],
            calls: CompCounter::default(),
            order_log: RefCell::new(Vec::new()),
        }
    }

    #[test]
    fn visits_each_solution_once() {
        let p = path_mis();
        let (sols, c) = collect_exp(&p);
        assert_eq!(sols, vec![vec![0, 2, 4], vec![0, 3], vec![1, 3], vec![1, 4]]);
        assert_eq!(c.solutions_emitted, 4);
        assert_eq!(c.neighbors_calls, 4);
        assert!(c.dict_allocated);
        assert_eq!(p.order_log.borrow().len(), 4);
    }

    #[test]
    fn limit_stops_early_and_output_is_prefix() {
        let p = path_mis();
        let mut full = Vec::new();
        enumerate_exp(&p, |s: &[usize]| {
            full.push(s.to_vec());
            Ok::<_, std::io::Error>(ControlFlow::Continue(()))
        })
        .unwrap();
        let p = path_mis();
        let mut part = Vec::new();
        enumerate_exp(&p, |s: &[usize]| {
            part.push(s.to_vec());
            Ok::<_, std::io::Error>(if part.len() == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            })
        })
        .unwrap();
        assert_eq!(part, full[..2]);
    }

    #[test]
    fn sink_failure_is_reported() {
        let p = path_mis();
        let err = enumerate_exp(&p, |_: &[usize]| {
            Err::<ControlFlow<()>, _>(std::io::Error::other("closed"))
        })
        .unwrap_err();
        assert!(matches!(err, Error::Sink { emitted: 0, .. }));
    }

    #[test]
    fn output_orders_list_the_same_solutions() {
        let mut seen = Vec::new();
        let c = enumerate_exp_with(&path_mis(), OutputOrder::Alternating, |s: &[usize]| {
            seen.push(s.to_vec());
            Ok::<_, std::convert::Infallible>(ControlFlow::Continue(()))
        })
        .unwrap();
        seen.sort();
        assert_eq!(seen, collect_exp(&path_mis()).0);
        assert_eq!(c.neighbors_calls, c.solutions_emitted);
    }

    #[test]
    fn proximity_helpers() {
        assert_eq!(prefix_proximity(&[2, 3, 8, 12, 11], &[2, 3, 5, 7, 8, 10, 11]), 3);
        assert_eq!(sorted_intersection_len(&[1, 2, 3], &[2, 3, 4]), 2);
        assert_eq!(insert_sorted(&[1, 4], 2), vec![1, 2, 4]);
        assert_eq!(insert_sorted(&[1, 4], 4), vec![1, 4]);
    }
}
