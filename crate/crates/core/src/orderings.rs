//! Checkers for the vertex-ordering conditions on an augmented adjacency
//! matrix.
//!
//! Every checker scans tuples of ordering positions in lexicographic order
//! and reports the first violating tuple, so witnesses are deterministic.
//! All positions are 0-based.
//!
//! Conditions (positions written `v1 < v2 < ...`, `e(x, y)` = matrix entry):
//!
//! | condition        | statement |
//! |------------------|-----------|
//! | 4-point          | `x<u<v<y`, `e(x,v)`, `e(u,y)` ⇒ `e(u,v)` |
//! | non-edge         | `u<v`, `¬e(u,v)` ⇒ `¬e(u,w)` for all `w>v`, or `¬e(w,v)` for all `w<u` |
//! | matrix-zero      | every zero above the diagonal is right open or up open |
//! | 3-point          | `e(v1,v3)` ⇒ `e(v1,v2)` or `e(v2,v3)` |
//! | 5-point-1        | `e(v1,v4)`, `e(v2,v5)`, (`e(v1,v2)` or `e(v4,v5)`) ⇒ `e(v1,v3)` or `e(v3,v5)` |
//! | 5-point-2        | `e(v1,v3)`, `e(v3,v5)` ⇒ `e(v1,v2)` or `e(v2,v4)` or `e(v4,v5)` |
//! | 6-point          | `v1<v2<vj,vk<v5<v6` (`j≠k`, either order), `e(v1,vj)`, `e(vj,v5)`, `e(v2,vk)`, `e(vk,v6)` ⇒ `e(v1,v2)` or `e(v2,v5)` or `e(v5,v6)` |
//! | proper-maxtol    | `e(v1,v3)`, `e(v2,v4)` ⇒ `e(v2,v3)` and (`e(v1,v2)` or `e(v3,v4)`) |
//!
//! The 4-point condition alone characterizes MPTG orderings; together with
//! the 3-, 5- and 6-point conditions it gives proper MPTG orderings. The
//! proper-maxtol condition is only necessary for proper max-tolerance graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::OrderedAdjacency;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    FourPoint,
    NonEdge,
    MatrixZero,
    ThreePoint,
    FivePointOne,
    FivePointTwo,
    SixPoint,
    ProperMaxTol,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::FourPoint,
        Condition::NonEdge,
        Condition::MatrixZero,
        Condition::ThreePoint,
        Condition::FivePointOne,
        Condition::FivePointTwo,
        Condition::SixPoint,
        Condition::ProperMaxTol,
    ];

    /// The conjunction that defines a proper MPTG ordering.
    pub const PROPER_MPTG: [Condition; 5] = [
        Condition::FourPoint,
        Condition::ThreePoint,
        Condition::FivePointOne,
        Condition::FivePointTwo,
        Condition::SixPoint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::FourPoint => "4point",
            Condition::NonEdge => "nonedge",
            Condition::MatrixZero => "matrix-zero",
            Condition::ThreePoint => "3point",
            Condition::FivePointOne => "5point-1",
            Condition::FivePointTwo => "5point-2",
            Condition::SixPoint => "6point",
            Condition::ProperMaxTol => "proper-maxtol",
        }
    }

    /// Whether a violation inside a prefix of the ordering survives every
    /// extension. Only these conditions are usable for search pruning.
    pub fn is_prefix_monotone(self) -> bool {
        !matches!(self, Condition::NonEdge | Condition::MatrixZero)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Condition::ALL.iter().map(|c| c.name()).collect();
                format!("unknown condition `{s}`; expected one of {}", names.join(", "))
            })
    }
}

/// A tuple of ordering positions on which a condition fails.
///
/// Layout of `positions` per condition:
/// 4-point `[x, u, v, y]`; non-edge and matrix-zero `[u, v, w_right, w_up]`
/// (the stuck zero plus the first blocking one to its right and above it);
/// 3-point `[v1, v2, v3]`; 5-point `[v1, .., v5]`;
/// 6-point `[v1, v2, vj, vk, v5, v6]`; proper-maxtol `[v1, v2, v3, v4]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ViolationWitness {
    pub condition: Condition,
    pub positions: Vec<usize>,
    /// The offending zero entry, where the condition has one.
    pub cell: Option<(usize, usize)>,
}

impl ViolationWitness {
    fn new(condition: Condition, positions: Vec<usize>, cell: Option<(usize, usize)>) -> Self {
        ViolationWitness {
            condition,
            positions,
            cell,
        }
    }

    /// Re-evaluates the condition on the recorded tuple.
    pub fn replays_on<M: OrderedAdjacency + ?Sized>(&self, a: &M) -> bool {
        let n = a.size();
        let p = &self.positions;
        if p.iter().any(|&x| x >= n) {
            return false;
        }
        let e = |i: usize, j: usize| a.entry(p[i], p[j]);
        let increasing = |idx: &[usize]| idx.windows(2).all(|w| p[w[0]] < p[w[1]]);
        match self.condition {
            Condition::FourPoint => p.len() == 4 && increasing(&[0, 1, 2, 3]) && e(0, 2) && e(1, 3) && !e(1, 2),
            Condition::NonEdge | Condition::MatrixZero => {
                p.len() == 4 && p[0] < p[1] && p[2] > p[1] && p[3] < p[0] && !e(0, 1) && e(0, 2) && e(3, 1)
            }
            Condition::ThreePoint => p.len() == 3 && increasing(&[0, 1, 2]) && violates_3(e),
            Condition::FivePointOne => p.len() == 5 && increasing(&[0, 1, 2, 3, 4]) && violates_5_1(e),
            Condition::FivePointTwo => p.len() == 5 && increasing(&[0, 1, 2, 3, 4]) && violates_5_2(e),
            Condition::SixPoint => {
                p.len() == 6
                    && p[2] != p[3]
                    && increasing(&[0, 1, 2, 4, 5])
                    && increasing(&[0, 1, 3, 4, 5])
                    && violates_6(e)
            }
            Condition::ProperMaxTol => p.len() == 4 && increasing(&[0, 1, 2, 3]) && violates_maxtol(e),
        }
    }
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.positions.iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "{} condition fails at positions ({})", self.condition, labels.join(", "))?;
        if let Some((i, j)) = self.cell {
            write!(f, ", zero at ({}, {})", i + 1, j + 1)?;
        }
        Ok(())
    }
}

pub type CheckResult = Result<(), ViolationWitness>;

// Predicates on local tuple indices; `e(i, j)` reads the entry between the
// i-th and j-th tuple members.

#[inline]
fn violates_3(e: impl Fn(usize, usize) -> bool) -> bool {
    e(0, 2) && !e(0, 1) && !e(1, 2)
}

#[inline]
fn violates_5_1(e: impl Fn(usize, usize) -> bool) -> bool {
    e(0, 3) && e(1, 4) && (e(0, 1) || e(3, 4)) && !e(0, 2) && !e(2, 4)
}

#[inline]
fn violates_5_2(e: impl Fn(usize, usize) -> bool) -> bool {
    e(0, 2) && e(2, 4) && !e(0, 1) && !e(1, 3) && !e(3, 4)
}

#[inline]
fn violates_6(e: impl Fn(usize, usize) -> bool) -> bool {
    // local layout [v1, v2, vj, vk, v5, v6]
    e(0, 2) && e(2, 4) && e(1, 3) && e(3, 5) && !e(0, 1) && !e(1, 4) && !e(4, 5)
}

#[inline]
fn violates_maxtol(e: impl Fn(usize, usize) -> bool) -> bool {
    e(0, 2) && e(1, 3) && (!e(1, 2) || (!e(0, 1) && !e(2, 3)))
}

/// Range of the last tuple index: everything from `lo`, or only `tail`.
#[inline]
fn last_index(lo: usize, n: usize, tail: Option<usize>) -> std::ops::Range<usize> {
    match tail {
        None => lo..n,
        Some(t) if t >= lo && t < n => t..t + 1,
        Some(_) => 0..0,
    }
}

fn scan_4point<M: OrderedAdjacency + ?Sized>(a: &M, tail: Option<usize>) -> CheckResult {
    let n = a.size();
    for x in 0..n {
        for u in x + 1..n {
            for v in u + 1..n {
                if a.entry(u, v) || !a.entry(x, v) {
                    continue;
                }
                for y in last_index(v + 1, n, tail) {
                    if a.entry(u, y) {
                        return Err(ViolationWitness::new(Condition::FourPoint, vec![x, u, v, y], Some((u, v))));
                    }
                }
            }
        }
    }
    Ok(())
}

fn scan_3point<M: OrderedAdjacency + ?Sized>(a: &M, tail: Option<usize>) -> CheckResult {
    let n = a.size();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            if a.entry(v1, v2) {
                continue;
            }
            for v3 in last_index(v2 + 1, n, tail) {
                let t = [v1, v2, v3];
                if violates_3(|i, j| a.entry(t[i], t[j])) {
                    return Err(ViolationWitness::new(Condition::ThreePoint, t.to_vec(), None));
                }
            }
        }
    }
    Ok(())
}

fn scan_5point<M: OrderedAdjacency + ?Sized>(a: &M, tail: Option<usize>, which: Condition) -> CheckResult {
    let n = a.size();
    let violates = |t: &[usize; 5]| {
        let e = |i: usize, j: usize| a.entry(t[i], t[j]);
        match which {
            Condition::FivePointOne => violates_5_1(e),
            _ => violates_5_2(e),
        }
    };
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            for v3 in v2 + 1..n {
                for v4 in v3 + 1..n {
                    for v5 in last_index(v4 + 1, n, tail) {
                        let t = [v1, v2, v3, v4, v5];
                        if violates(&t) {
                            return Err(ViolationWitness::new(which, t.to_vec(), None));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn scan_6point<M: OrderedAdjacency + ?Sized>(a: &M, tail: Option<usize>) -> CheckResult {
    let n = a.size();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            if a.entry(v1, v2) {
                continue;
            }
            for vj in v2 + 1..n {
                if !a.entry(v1, vj) {
                    continue;
                }
                for vk in v2 + 1..n {
                    if vk == vj || !a.entry(v2, vk) {
                        continue;
                    }
                    for v5 in vj.max(vk) + 1..n {
                        for v6 in last_index(v5 + 1, n, tail) {
                            let t = [v1, v2, vj, vk, v5, v6];
                            if violates_6(|i, j| a.entry(t[i], t[j])) {
                                return Err(ViolationWitness::new(Condition::SixPoint, t.to_vec(), None));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn scan_maxtol<M: OrderedAdjacency + ?Sized>(a: &M, tail: Option<usize>) -> CheckResult {
    let n = a.size();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            for v3 in v2 + 1..n {
                if !a.entry(v1, v3) {
                    continue;
                }
                for v4 in last_index(v3 + 1, n, tail) {
                    let t = [v1, v2, v3, v4];
                    if violates_maxtol(|i, j| a.entry(t[i], t[j])) {
                        return Err(ViolationWitness::new(Condition::ProperMaxTol, t.to_vec(), None));
                    }
                }
            }
        }
    }
    Ok(())
}

/// 4-point condition.
pub fn check_4point<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_4point(a, None)
}

/// Non-edge condition, evaluated literally by searching for a neighbour of
/// `u` beyond `v` and a neighbour of `v` before `u`.
pub fn check_nonedge_condition<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    let n = a.size();
    for u in 0..n {
        for v in u + 1..n {
            if a.entry(u, v) {
                continue;
            }
            let later = (v + 1..n).find(|&w| a.entry(u, w));
            let earlier = (0..u).find(|&w| a.entry(w, v));
            if let (Some(w1), Some(w2)) = (later, earlier) {
                return Err(ViolationWitness::new(Condition::NonEdge, vec![u, v, w1, w2], Some((u, v))));
            }
        }
    }
    Ok(())
}

/// Right-open / up-open condition on the zeros above the diagonal.
///
/// Computed from per-row last ones and per-column first ones rather than
/// by scanning, so it is an independent route to the non-edge condition.
#[allow(clippy::needless_range_loop)]
pub fn check_matrix_zero_condition<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    let n = a.size();
    let last_in_row: Vec<usize> = (0..n)
        .map(|i| (0..n).rev().find(|&j| a.entry(i, j)).unwrap_or(i))
        .collect();
    let first_in_col: Vec<usize> = (0..n).map(|j| (0..n).find(|&i| a.entry(i, j)).unwrap_or(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if a.entry(i, j) {
                continue;
            }
            let right_open = last_in_row[i] < j;
            let up_open = first_in_col[j] > i;
            if !right_open && !up_open {
                let right = (j + 1..n).find(|&k| a.entry(i, k)).expect("row has a later one");
                let up = (0..i).find(|&k| a.entry(k, j)).expect("column has an earlier one");
                return Err(ViolationWitness::new(Condition::MatrixZero, vec![i, j, right, up], Some((i, j))));
            }
        }
    }
    Ok(())
}

pub fn check_3point<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_3point(a, None)
}

pub fn check_5point_1<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_5point(a, None, Condition::FivePointOne)
}

pub fn check_5point_2<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_5point(a, None, Condition::FivePointTwo)
}

pub fn check_6point<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_6point(a, None)
}

/// Necessary condition for proper max-tolerance graphs. Passing it does not
/// certify membership.
pub fn check_proper_maxtol_ordering<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    scan_maxtol(a, None)
}

pub fn check<M: OrderedAdjacency + ?Sized>(condition: Condition, a: &M) -> CheckResult {
    match condition {
        Condition::FourPoint => check_4point(a),
        Condition::NonEdge => check_nonedge_condition(a),
        Condition::MatrixZero => check_matrix_zero_condition(a),
        Condition::ThreePoint => check_3point(a),
        Condition::FivePointOne => check_5point_1(a),
        Condition::FivePointTwo => check_5point_2(a),
        Condition::SixPoint => check_6point(a),
        Condition::ProperMaxTol => check_proper_maxtol_ordering(a),
    }
}

/// Checks only tuples whose last member is position `last`.
///
/// For prefix-monotone conditions, scanning each newly placed position this
/// way over a growing prefix visits every tuple exactly once.
pub fn check_tail<M: OrderedAdjacency + ?Sized>(condition: Condition, a: &M, last: usize) -> CheckResult {
    let tail = Some(last);
    match condition {
        Condition::FourPoint => scan_4point(a, tail),
        Condition::ThreePoint => scan_3point(a, tail),
        Condition::FivePointOne | Condition::FivePointTwo => scan_5point(a, tail, condition),
        Condition::SixPoint => scan_6point(a, tail),
        Condition::ProperMaxTol => scan_maxtol(a, tail),
        Condition::NonEdge | Condition::MatrixZero => {
            panic!("{condition} quantifies over later positions and has no tail check")
        }
    }
}

pub fn is_mptg_ordering<M: OrderedAdjacency + ?Sized>(a: &M) -> bool {
    check_4point(a).is_ok()
}

/// First failing condition among the proper MPTG conjunction, if any.
pub fn check_proper_mptg_ordering<M: OrderedAdjacency + ?Sized>(a: &M) -> CheckResult {
    Condition::PROPER_MPTG.into_iter().try_for_each(|c| check(c, a))
}

pub fn is_proper_mptg_ordering<M: OrderedAdjacency + ?Sized>(a: &M) -> bool {
    check_proper_mptg_ordering(a).is_ok()
}
