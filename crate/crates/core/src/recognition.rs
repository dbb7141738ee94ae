//! Exhaustive recognition at desk scale.
//!
//! Ordering classes are decided by a backtracking search over vertex
//! orderings that places one vertex per level and prunes as soon as the
//! placed prefix contains a violating tuple. Only prefix-monotone
//! conditions are used for pruning, so a non-member verdict means no
//! ordering exists at all.
//!
//! Also here: a direct asteroidal-triple test and a brute-force perfection
//! oracle.

use std::fmt;

use serde::Serialize;

use crate::error::RecognitionError;
use crate::exec::Execution;
use crate::graph::{Graph, OrderedAdjacency, VertexOrdering};
use crate::orderings::{check_tail, Condition};

pub const DEFAULT_SEARCH_BOUND: usize = 11;
pub const DEFAULT_PERFECTION_BOUND: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderingClass {
    Mptg,
    ProperMptg,
    /// Orderings satisfying the necessary condition for proper
    /// max-tolerance graphs.
    ProperMaxTolNecessary,
}

impl OrderingClass {
    pub fn conditions(self) -> &'static [Condition] {
        match self {
            OrderingClass::Mptg => &[Condition::FourPoint],
            OrderingClass::ProperMptg => &Condition::PROPER_MPTG,
            OrderingClass::ProperMaxTolNecessary => &[Condition::ProperMaxTol],
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub bound: usize,
    pub execution: Execution,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            bound: DEFAULT_SEARCH_BOUND,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Prefixes placed and tested.
    pub nodes: u64,
    /// Prefixes rejected by a violated condition.
    pub prunes: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, rhs: Self) {
        self.nodes += rhs.nodes;
        self.prunes += rhs.prunes;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub class: OrderingClass,
    pub verdict: Verdict,
    /// Lexicographically least passing ordering, when one exists.
    pub witness: Option<VertexOrdering>,
    /// Node counts depend on the execution mode; verdict and witness do not.
    pub stats: SearchStats,
    /// Set when membership only shows a necessary condition is satisfiable.
    pub necessary_only: bool,
}

impl RecognitionResult {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

/// The placed prefix of a search, seen as an ordered matrix.
struct Prefix<'a> {
    g: &'a Graph,
    placed: &'a [usize],
}

impl OrderedAdjacency for Prefix<'_> {
    fn size(&self) -> usize {
        self.placed.len()
    }

    #[inline]
    fn entry(&self, i: usize, j: usize) -> bool {
        i == j || self.g.has_edge(self.placed[i], self.placed[j])
    }
}

struct Search<'a> {
    g: &'a Graph,
    conditions: &'a [Condition],
    placed: Vec<usize>,
    used: Vec<bool>,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, conditions: &'a [Condition]) -> Self {
        Search {
            g,
            conditions,
            placed: Vec::with_capacity(g.n()),
            used: vec![false; g.n()],
            stats: SearchStats::default(),
        }
    }

    /// Places `v` next; false if the new prefix violates a condition.
    fn push(&mut self, v: usize) -> bool {
        self.placed.push(v);
        self.used[v] = true;
        self.stats.nodes += 1;
        let last = self.placed.len() - 1;
        let prefix = Prefix {
            g: self.g,
            placed: &self.placed,
        };
        let ok = self.conditions.iter().all(|&c| check_tail(c, &prefix, last).is_ok());
        if !ok {
            self.stats.prunes += 1;
        }
        ok
    }

    fn pop(&mut self) {
        let v = self.placed.pop().expect("non-empty prefix");
        self.used[v] = false;
    }

    fn extend(&mut self) -> bool {
        let n = self.g.n();
        if self.placed.len() == n {
            return true;
        }
        for v in 0..n {
            if self.used[v] {
                continue;
            }
            if self.push(v) && self.extend() {
                return true;
            }
            self.pop();
        }
        false
    }

    fn run_from(mut self, first: Option<usize>) -> (Option<Vec<usize>>, SearchStats) {
        let found = match first {
            Some(v) => self.push(v) && self.extend(),
            None => self.extend(),
        };
        (found.then_some(self.placed), self.stats)
    }
}

fn check_bound(g: &Graph, bound: usize) -> Result<(), RecognitionError> {
    if g.n() > bound {
        Err(RecognitionError::TooLarge { n: g.n(), bound })
    } else {
        Ok(())
    }
}

/// Searches for an ordering of `g` in `class`.
///
/// In parallel mode the permutation tree is split by its first vertex and
/// the branch with the smallest first vertex that succeeds wins, which is
/// the same witness the sequential search returns.
pub fn find_ordering(
    g: &Graph,
    class: OrderingClass,
    config: &SearchConfig,
) -> Result<RecognitionResult, RecognitionError> {
    check_bound(g, config.bound)?;
    let conditions = class.conditions();
    let (witness, stats) = if config.execution.is_parallel() && g.n() > 1 {
        let branches = config
            .execution
            .map_range(g.n(), |v| Search::new(g, conditions).run_from(Some(v)));
        let mut stats = SearchStats::default();
        for (_, s) in &branches {
            stats += *s;
        }
        let witness = branches.into_iter().find_map(|(w, _)| w);
        (witness, stats)
    } else {
        Search::new(g, conditions).run_from(None)
    };
    let verdict = if witness.is_some() {
        Verdict::Member
    } else {
        Verdict::NonMember
    };
    Ok(RecognitionResult {
        class,
        verdict,
        witness: witness.map(|w| VertexOrdering::new(w).expect("search yields permutations")),
        stats,
        necessary_only: class == OrderingClass::ProperMaxTolNecessary && verdict == Verdict::Member,
    })
}

pub fn find_mptg_ordering(g: &Graph) -> Result<RecognitionResult, RecognitionError> {
    find_ordering(g, OrderingClass::Mptg, &SearchConfig::default())
}

pub fn find_proper_mptg_ordering(g: &Graph) -> Result<RecognitionResult, RecognitionError> {
    find_ordering(g, OrderingClass::ProperMptg, &SearchConfig::default())
}

/// A member verdict only says the necessary ordering condition is
/// satisfiable; non-member is a certificate of non-membership.
pub fn find_proper_maxtol_ordering(g: &Graph) -> Result<RecognitionResult, RecognitionError> {
    find_ordering(g, OrderingClass::ProperMaxTolNecessary, &SearchConfig::default())
}

/// An independent triple where each pair is joined by a path avoiding the
/// closed neighbourhood of the third.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AsteroidalTriple(pub [usize; 3]);

impl fmt::Display for AsteroidalTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, w] = self.0;
        write!(f, "asteroidal triple {{v{}, v{}, v{}}}", u + 1, v + 1, w + 1)
    }
}

/// Component labels of `g` minus the closed neighbourhood of `w`;
/// removed vertices get `usize::MAX`.
fn components_avoiding(g: &Graph, w: usize) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let removed = |x: usize| x == w || g.has_edge(x, w);
    let mut next = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if removed(s) || label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x) {
                if !removed(y) && label[y] == usize::MAX {
                    label[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Direct-definition AT test; reports the lexicographically least triple.
pub fn is_at_free(g: &Graph) -> Result<(), AsteroidalTriple> {
    let n = g.n();
    let comps: Vec<Vec<usize>> = (0..n).map(|w| components_avoiding(g, w)).collect();
    let joined = |x: usize, y: usize, avoid: usize| {
        let c = &comps[avoid];
        c[x] != usize::MAX && c[x] == c[y]
    };
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) || g.has_edge(v, w) {
                    continue;
                }
                if joined(u, v, w) && joined(u, w, v) && joined(v, w, u) {
                    return Err(AsteroidalTriple([u, v, w]));
                }
            }
        }
    }
    Ok(())
}

/// Induced subgraph whose chromatic number exceeds its clique number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImperfectWitness {
    pub vertices: Vec<usize>,
    pub chromatic: usize,
    pub clique: usize,
}

fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn clique_number(nbr: &[u64], candidates: u64) -> usize {
    if candidates == 0 {
        return 0;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    let with = 1 + clique_number(nbr, rest & nbr[v]);
    if with > rest.count_ones() as usize {
        return with;
    }
    with.max(clique_number(nbr, rest))
}

fn colorable(nbr: &[u64], order: &[usize], colors: &mut [usize], k: usize, idx: usize) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // colours 0..=max used so far + 1 are enough (symmetry breaking)
    let max_used = order[..idx].iter().map(|&u| colors[u] + 1).max().unwrap_or(0);
    for c in 0..k.min(max_used + 1) {
        let clash = order[..idx].iter().any(|&u| colors[u] == c && nbr[v] >> u & 1 == 1);
        if !clash {
            colors[v] = c;
            if colorable(nbr, order, colors, k, idx + 1) {
                return true;
            }
        }
    }
    false
}

fn chromatic_number(nbr: &[u64], mask: u64, lower: usize) -> usize {
    let order = mask_vertices(mask);
    let mut colors = vec![0; nbr.len()];
    (lower.max(1)..=order.len())
        .find(|&k| colorable(nbr, &order, &mut colors, k, 0))
        .unwrap_or(0)
}

/// Brute-force perfection oracle: compares exact chromatic and clique
/// numbers on every induced subgraph, smallest subsets first.
pub fn find_imperfect_subgraph(g: &Graph, bound: usize) -> Result<Option<ImperfectWitness>, RecognitionError> {
    check_bound(g, bound.min(63))?;
    let n = g.n();
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    for size in 1..=n {
        // Gosper's hack: masks with `size` bits in increasing order
        let mut mask: u64 = (1 << size) - 1;
        while mask < 1 << n {
            let clique = clique_number(&nbr, mask);
            let chromatic = chromatic_number(&nbr, mask, clique);
            if chromatic > clique {
                return Ok(Some(ImperfectWitness {
                    vertices: mask_vertices(mask),
                    chromatic,
                    clique,
                }));
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    Ok(None)
}

pub fn is_perfect_bruteforce(g: &Graph) -> Result<bool, RecognitionError> {
    Ok(find_imperfect_subgraph(g, DEFAULT_PERFECTION_BOUND)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::g1_spider;
    use crate::graph::{make_complete, make_complete_bipartite, make_cycle, make_path, make_wheel, AugmentedMatrix};
    use crate::orderings::{is_mptg_ordering, is_proper_mptg_ordering};

    fn sequential() -> SearchConfig {
        SearchConfig {
            execution: Execution::Sequential,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn k1_and_empty_are_members() {
        for n in [0, 1] {
            let g = Graph::empty(n);
            let r = find_mptg_ordering(&g).unwrap();
            assert!(r.is_member());
            assert_eq!(r.witness.unwrap().len(), n);
        }
    }

    #[test]
    fn spider_is_mptg_member() {
        let g = g1_spider();
        let r = find_mptg_ordering(&g).unwrap();
        assert!(r.is_member());
        let a = AugmentedMatrix::new(&g, r.witness.as_ref().unwrap()).unwrap();
        assert!(is_mptg_ordering(&a));
        assert!(!find_proper_mptg_ordering(&g).unwrap().is_member());
    }

    #[test]
    fn c4_proper_c5_not() {
        let c4 = find_proper_mptg_ordering(&make_cycle(4).unwrap()).unwrap();
        assert!(c4.is_member());
        let a = AugmentedMatrix::new(&make_cycle(4).unwrap(), c4.witness.as_ref().unwrap()).unwrap();
        assert!(is_proper_mptg_ordering(&a));
        assert!(!find_proper_mptg_ordering(&make_cycle(5).unwrap()).unwrap().is_member());
    }

    #[test]
    fn wheels() {
        assert!(find_proper_mptg_ordering(&make_wheel(4).unwrap()).unwrap().is_member());
        assert!(!find_proper_mptg_ordering(&make_wheel(5).unwrap()).unwrap().is_member());
    }

    #[test]
    fn c7_complement_not_mptg() {
        let g = make_cycle(7).unwrap().complement();
        let r = find_mptg_ordering(&g).unwrap();
        assert_eq!(r.verdict, Verdict::NonMember);
        assert!(r.witness.is_none());
        assert!(r.stats.prunes > 0);
    }

    #[test]
    fn maxtol_condition_verdicts() {
        let k23 = find_proper_maxtol_ordering(&make_complete_bipartite(2, 3).unwrap()).unwrap();
        assert!(!k23.is_member());
        assert!(!k23.necessary_only);
        let c5 = find_proper_maxtol_ordering(&make_cycle(5).unwrap()).unwrap();
        assert!(c5.is_member());
        assert!(c5.necessary_only);
        assert!(find_proper_maxtol_ordering(&make_complete(6).unwrap()).unwrap().is_member());
    }

    #[test]
    fn bound_is_enforced() {
        let g = make_path(12).unwrap();
        assert_eq!(
            find_mptg_ordering(&g),
            Err(RecognitionError::TooLarge { n: 12, bound: 11 })
        );
        let cfg = SearchConfig {
            bound: 12,
            ..SearchConfig::default()
        };
        assert!(find_ordering(&g, OrderingClass::Mptg, &cfg).unwrap().is_member());
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let par = SearchConfig {
            execution: Execution::Parallel,
            ..SearchConfig::default()
        };
        for g in [
            make_cycle(6).unwrap(),
            make_wheel(4).unwrap(),
            make_cycle(7).unwrap().complement(),
            g1_spider(),
        ] {
            for class in [OrderingClass::Mptg, OrderingClass::ProperMptg, OrderingClass::ProperMaxTolNecessary] {
                let a = find_ordering(&g, class, &sequential()).unwrap();
                let b = find_ordering(&g, class, &par).unwrap();
                assert_eq!(a.verdict, b.verdict);
                assert_eq!(a.witness, b.witness);
            }
        }
    }

    #[test]
    fn sequential_witness_is_lexicographically_least() {
        let g = make_cycle(5).unwrap();
        let r = find_ordering(&g, OrderingClass::Mptg, &sequential()).unwrap();
        let least = crate::sweep::permutations(5)
            .find(|p| is_mptg_ordering(&AugmentedMatrix::new(&g, &VertexOrdering::new(p.clone()).unwrap()).unwrap()))
            .unwrap();
        assert_eq!(r.witness.unwrap().as_slice(), least.as_slice());
    }

    #[test]
    fn at_free_cases() {
        assert_eq!(is_at_free(&g1_spider()), Err(AsteroidalTriple([0, 1, 2])));
        let c6 = make_cycle(6).unwrap();
        let AsteroidalTriple(t) = is_at_free(&c6).unwrap_err();
        assert_eq!(t, [0, 2, 4]);
        assert_eq!(is_at_free(&make_complete(5).unwrap()), Ok(()));
        assert_eq!(is_at_free(&Graph::empty(2)), Ok(()));
        assert_eq!(is_at_free(&make_cycle(5).unwrap()), Ok(()));
        // three isolated vertices are not joined by any path
        assert_eq!(is_at_free(&Graph::empty(3)), Ok(()));
    }

    #[test]
    fn perfection_cases() {
        let w = find_imperfect_subgraph(&make_cycle(5).unwrap(), 10).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!((w.chromatic, w.clique), (3, 2));
        assert!(is_perfect_bruteforce(&make_cycle(4).unwrap()).unwrap());
        assert!(is_perfect_bruteforce(&make_complete(6).unwrap()).unwrap());
        // W_5 contains C_5 as the rim
        let w5 = find_imperfect_subgraph(&make_wheel(5).unwrap(), 10).unwrap().unwrap();
        assert_eq!(w5.vertices, vec![1, 2, 3, 4, 5]);
        let c7bar = find_imperfect_subgraph(&make_cycle(7).unwrap().complement(), 10).unwrap().unwrap();
        assert_eq!(c7bar.vertices.len(), 7);
        assert_eq!((c7bar.chromatic, c7bar.clique), (4, 3));
        assert!(find_imperfect_subgraph(&make_path(11).unwrap(), 10).is_err());
    }
}
