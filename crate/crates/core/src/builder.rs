//! From a proper MPTG ordering to a representation.
//!
//! The right endpoints are ordered by the precedence relation built from
//! the two zero-pattern relations R1 and R2, the left endpoints in the same
//! vertex order, and all endpoints are merged with the points (placed in
//! ordering order) into the canonical sequence. Numbering that sequence
//! `1..=3n` gives an integer representation; a second pass gives one with
//! all intervals of a fixed length.
//!
//! All vertex indices in this module are ordering positions, 0-based.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{BuildError, GraphError};
use crate::graph::{AugmentedMatrix, Graph, VertexOrdering};
use crate::orderings::{check_4point, check_proper_mptg_ordering};
use crate::repr::{int, IntervalPoint, IntervalPointRep, Rational};

fn pair_ok(a: &AugmentedMatrix, i: usize, j: usize) -> Result<(), BuildError> {
    if i < j && j < a.n() {
        Ok(())
    } else {
        Err(BuildError::BadPair { i, j, n: a.n() })
    }
}

fn r1(a: &AugmentedMatrix, i: usize, j: usize) -> bool {
    (j + 1..a.n()).any(|k| !a.get(j, k) && a.get(i, k))
}

fn r2(a: &AugmentedMatrix, i: usize, j: usize) -> bool {
    (0..i).any(|k| !a.get(k, i) && a.get(k, j))
}

/// `b_j R1 b_i`: some `k > j` has `a[j][k] = 0` and `a[i][k] = 1`.
pub fn relation_r1(a: &AugmentedMatrix, i: usize, j: usize) -> Result<bool, BuildError> {
    pair_ok(a, i, j)?;
    check_4point(a).map_err(BuildError::NotMptgOrdering)?;
    Ok(r1(a, i, j))
}

/// `b_j R2 b_i`: some `k < i` has `a[k][i] = 0` and `a[k][j] = 1`.
pub fn relation_r2(a: &AugmentedMatrix, i: usize, j: usize) -> Result<bool, BuildError> {
    pair_ok(a, i, j)?;
    check_4point(a).map_err(BuildError::NotMptgOrdering)?;
    Ok(r2(a, i, j))
}

/// Which clauses put `b_j` before `b_i` for a pair `i < j`. All false means
/// the default `b_i ≺ b_j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub r1: bool,
    pub r2: bool,
    /// Some `k` strictly between with `b_j R1 b_k` and `b_k R2 b_i`.
    pub composite: Option<usize>,
}

impl Derivation {
    pub fn reverses(&self) -> bool {
        self.r1 || self.r2 || self.composite.is_some()
    }
}

/// Total order on right endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecedenceRelation {
    n: usize,
    /// `derivations[i][j]` for `i < j`.
    derivations: Vec<Vec<Derivation>>,
    order: Vec<usize>,
}

impl PrecedenceRelation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `b_i ≺ b_j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => !self.derivations[i][j].reverses(),
            std::cmp::Ordering::Greater => self.derivations[j][i].reverses(),
            std::cmp::Ordering::Equal => false,
        }
    }

    /// Clauses that fired for the pair `i < j`.
    pub fn derivation(&self, i: usize, j: usize) -> Derivation {
        assert!(i < j && j < self.n);
        self.derivations[i][j]
    }

    /// Positions by increasing right endpoint: the sequence P1.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Builds `≺` and checks that it is a strict total order respecting the
/// zeros of the matrix.
pub fn precedes(a: &AugmentedMatrix) -> Result<PrecedenceRelation, BuildError> {
    check_4point(a).map_err(BuildError::NotMptgOrdering)?;
    let n = a.n();
    let mut r1s = vec![vec![false; n]; n];
    let mut r2s = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            r1s[i][j] = r1(a, i, j);
            r2s[i][j] = r2(a, i, j);
        }
    }
    let mut derivations = vec![vec![Derivation::default(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            derivations[i][j] = Derivation {
                r1: r1s[i][j],
                r2: r2s[i][j],
                composite: (i + 1..j).find(|&k| r1s[k][j] && r2s[i][k]),
            };
        }
    }
    let mut rel = PrecedenceRelation {
        n,
        derivations,
        order: Vec::new(),
    };

    for i in 0..n {
        for j in i + 1..n {
            if !a.get(i, j) && !rel.precedes(i, j) {
                return Err(BuildError::NonEdgeOrder { i, j });
            }
        }
    }

    // a tournament is transitive iff its out-degrees are 0..n-1
    let below: Vec<usize> = (0..n).map(|i| (0..n).filter(|&j| rel.precedes(j, i)).count()).collect();
    let mut slots = vec![usize::MAX; n];
    for (i, &rank) in below.iter().enumerate() {
        if slots[rank] != usize::MAX {
            return Err(BuildError::Inconsistent {
                cycle: find_cycle(&rel).expect("non-transitive tournament has a 3-cycle"),
            });
        }
        slots[rank] = i;
    }
    rel.order = slots;
    Ok(rel)
}

fn find_cycle(rel: &PrecedenceRelation) -> Option<[usize; 3]> {
    let n = rel.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if rel.precedes(x, y) && rel.precedes(y, z) && rel.precedes(z, x) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EndpointKind {
    A,
    P,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EndpointTag {
    pub kind: EndpointKind,
    pub vertex: usize,
}

impl EndpointTag {
    pub fn a(vertex: usize) -> Self {
        EndpointTag {
            kind: EndpointKind::A,
            vertex,
        }
    }

    pub fn p(vertex: usize) -> Self {
        EndpointTag {
            kind: EndpointKind::P,
            vertex,
        }
    }

    pub fn b(vertex: usize) -> Self {
        EndpointTag {
            kind: EndpointKind::B,
            vertex,
        }
    }
}

impl fmt::Display for EndpointTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            EndpointKind::A => 'a',
            EndpointKind::P => 'p',
            EndpointKind::B => 'b',
        };
        write!(f, "{c}{}", self.vertex + 1)
    }
}

/// The merged sequence of all `a`, `p`, `b` tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSequence {
    entries: Vec<EndpointTag>,
    n: usize,
}

impl CanonicalSequence {
    /// Checks each vertex has one tag of each kind, in `a < p < b` order.
    pub fn from_tags(entries: Vec<EndpointTag>) -> Result<Self, BuildError> {
        if !entries.len().is_multiple_of(3) {
            return Err(BuildError::MalformedSequence(format!(
                "{} tags is not a multiple of three",
                entries.len()
            )));
        }
        let n = entries.len() / 3;
        let mut seen = vec![[usize::MAX; 3]; n];
        for (idx, tag) in entries.iter().enumerate() {
            if tag.vertex >= n {
                return Err(BuildError::MalformedSequence(format!("{tag} names a vertex beyond {n}")));
            }
            let slot = &mut seen[tag.vertex][tag.kind as usize];
            if *slot != usize::MAX {
                return Err(BuildError::MalformedSequence(format!("{tag} appears twice")));
            }
            *slot = idx;
        }
        for (v, [a, p, b]) in seen.iter().enumerate() {
            if !(a < p && p < b) {
                return Err(BuildError::MalformedSequence(format!(
                    "tags of vertex {} are not in a < p < b order",
                    v + 1
                )));
            }
        }
        Ok(CanonicalSequence { entries, n })
    }

    /// Reads whitespace-separated tags such as `a2 a1 p1 b2`.
    pub fn parse(text: &str) -> Result<Self, BuildError> {
        let tags = text
            .split_whitespace()
            .map(|word| {
                let bad = || BuildError::MalformedSequence(format!("bad tag `{word}`"));
                let mut chars = word.chars();
                let kind = match chars.next() {
                    Some('a') => EndpointKind::A,
                    Some('p') => EndpointKind::P,
                    Some('b') => EndpointKind::B,
                    _ => return Err(bad()),
                };
                let label: usize = chars.as_str().parse().map_err(|_| bad())?;
                if label == 0 {
                    return Err(bad());
                }
                Ok(EndpointTag { kind, vertex: label - 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        CanonicalSequence::from_tags(tags)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[EndpointTag] {
        &self.entries
    }

    fn restricted(&self, kind: EndpointKind) -> Vec<usize> {
        self.entries.iter().filter(|t| t.kind == kind).map(|t| t.vertex).collect()
    }

    /// Vertices in order of their `b` tags.
    pub fn p1(&self) -> Vec<usize> {
        self.restricted(EndpointKind::B)
    }

    /// Vertices in order of their `a` tags.
    pub fn p2(&self) -> Vec<usize> {
        self.restricted(EndpointKind::A)
    }

    /// Vertices in order of their `p` tags.
    pub fn points(&self) -> Vec<usize> {
        self.restricted(EndpointKind::P)
    }
}

impl fmt::Display for CanonicalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Merges endpoints and points.
///
/// Points go down in ordering order, `p_1 .. p_n`. Each `a_v` lands in the
/// gap just before `p_{first(v)}` (first one in row `v`) and each `b_v` just
/// after `p_{last(v)}`, except that an `a` is pulled left to stay before
/// the next `a` in the precedence order, and a `b` pushed right to stay
/// after the previous `b`. Within a gap, `b`s come before `a`s, each group
/// in precedence order.
///
/// The pull compares against where the next `a` actually landed, not
/// against its first column: comparing columns alone lets an `a` that was
/// itself pulled left overtake its predecessor (e.g. the 6-vertex graph
/// with rows `111000 111100 111111 011100 001010 001001`).
pub fn canonical_sequence(a: &AugmentedMatrix, prec: &PrecedenceRelation) -> Result<CanonicalSequence, BuildError> {
    let n = a.n();
    if prec.n() != n {
        return Err(BuildError::MalformedSequence(format!(
            "precedence covers {} vertices, matrix has {n}",
            prec.n()
        )));
    }
    let order = prec.order();
    if n == 0 {
        return CanonicalSequence::from_tags(Vec::new());
    }

    // gap g sits just before p_g; gap n is after the last point
    let mut gap_a = vec![0; n];
    let last = order[n - 1];
    gap_a[last] = a.first_one(last);
    for k in (0..n - 1).rev() {
        let (v, next) = (order[k], order[k + 1]);
        gap_a[v] = a.first_one(v).min(gap_a[next]);
    }
    let mut gap_b = vec![0; n];
    gap_b[order[0]] = a.last_one(order[0]) + 1;
    for k in 1..n {
        let (v, prev) = (order[k], order[k - 1]);
        gap_b[v] = (a.last_one(v) + 1).max(gap_b[prev]);
    }

    let mut entries = Vec::with_capacity(3 * n);
    for g in 0..=n {
        entries.extend(order.iter().filter(|&&v| gap_b[v] == g).map(|&v| EndpointTag::b(v)));
        entries.extend(order.iter().filter(|&&v| gap_a[v] == g).map(|&v| EndpointTag::a(v)));
        if g < n {
            entries.push(EndpointTag::p(g));
        }
    }
    let seq = CanonicalSequence::from_tags(entries)?;
    if seq.p1() != order {
        return Err(BuildError::OrderBroken { which: "P1" });
    }
    if seq.p2() != order {
        return Err(BuildError::OrderBroken { which: "P2" });
    }
    Ok(seq)
}

/// Numbers the sequence `1..=3n`. Entry `v` of the result is ordering
/// position `v`.
pub fn realize_integer(seq: &CanonicalSequence) -> IntervalPointRep {
    let mut coords = vec![[0i64; 3]; seq.n()];
    for (idx, tag) in seq.entries().iter().enumerate() {
        coords[tag.vertex][tag.kind as usize] = idx as i64 + 1;
    }
    IntervalPointRep::new(coords.iter().map(|&[a, p, b]| IntervalPoint::from_ints(a, b, p)).collect())
        .expect("a < p < b by sequence invariant")
}

/// Realizes the sequence with every interval of length `l`, keeping the
/// relative order of all `3n` values.
///
/// Left endpoints are fixed in precedence order: `α_1 = 0`, then each `α_i`
/// is the midpoint of its feasible window, bounded below by the previous
/// left endpoint and by every right endpoint that must precede it, and
/// above by every right endpoint that must follow it. Points are then
/// spread evenly inside the gaps between consecutive endpoint values.
pub fn realize_unit(seq: &CanonicalSequence, l: &Rational) -> Result<IntervalPointRep, BuildError> {
    if !l.is_positive() {
        return Err(BuildError::NonPositiveLength);
    }
    let n = seq.n();
    let mut index = vec![[0usize; 3]; n];
    for (idx, tag) in seq.entries().iter().enumerate() {
        index[tag.vertex][tag.kind as usize] = idx;
    }
    let (ka, kb) = (EndpointKind::A as usize, EndpointKind::B as usize);
    let order = seq.p1();
    let two = int(2);
    let mut alpha: Vec<Rational> = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        if i == 0 {
            alpha.push(Rational::zero());
            continue;
        }
        let mut lower = alpha[i - 1].clone();
        let mut upper: Option<Rational> = None;
        for (j, &u) in order[..i].iter().enumerate() {
            let right = &alpha[j] + l;
            if index[u][kb] < index[v][ka] {
                if right > lower {
                    lower = right;
                }
            } else if upper.as_ref().is_none_or(|m| right < *m) {
                upper = Some(right);
            }
        }
        let next = match upper {
            Some(m) if lower >= m => return Err(BuildError::UnitInfeasible { step: i + 1 }),
            Some(m) => (lower + m) / &two,
            None => lower + l / &two,
        };
        alpha.push(next);
    }

    let mut value: Vec<Option<Rational>> = vec![None; 3 * n];
    for (i, &v) in order.iter().enumerate() {
        value[index[v][ka]] = Some(alpha[i].clone());
        value[index[v][kb]] = Some(&alpha[i] + l);
    }
    // runs of points between consecutive endpoint values
    let mut idx = 0;
    while idx < value.len() {
        if value[idx].is_some() {
            idx += 1;
            continue;
        }
        let start = idx;
        while value[idx].is_none() {
            idx += 1;
        }
        let lo = value[start - 1].clone().expect("sequence starts with an endpoint");
        let hi = value[idx].clone().expect("sequence ends with an endpoint");
        let run = idx - start;
        for t in 0..run {
            let step = int(t as i64 + 1) / int(run as i64 + 1);
            value[start + t] = Some(&lo + (&hi - &lo) * step);
        }
    }
    let value: Vec<Rational> = value.into_iter().map(|v| v.expect("all filled")).collect();
    if value.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BuildError::MalformedSequence("unit values out of order".into()));
    }
    let vertices = (0..n)
        .map(|v| {
            let [a, p, b] = index[v];
            IntervalPoint::new(value[a].clone(), value[b].clone(), value[p].clone())
        })
        .collect();
    Ok(IntervalPointRep::new(vertices).expect("a < p < b preserved"))
}

/// Moves shared points apart without changing the induced graph or the
/// containment order of intervals.
///
/// Repeatedly takes the smallest point value `v` shared by several vertices
/// and `ε` = half the distance to the next larger coordinate (or 1). The
/// sharing points move to `v + ε/(m+1), v + ε/m, .., v + ε/2` in vertex
/// order and every right endpoint at `v` moves to `v + ε`. Nothing else
/// lies in `(v, v + 2ε)`, so every comparison the semantics use keeps its
/// outcome.
pub fn normalize_distinct_points(rep: &IntervalPointRep) -> IntervalPointRep {
    let mut vs = rep.vertices().to_vec();
    loop {
        let mut ps: Vec<&Rational> = vs.iter().map(|x| &x.p).collect();
        ps.sort();
        let Some(v) = ps.windows(2).find(|w| w[0] == w[1]).map(|w| w[0].clone()) else {
            break;
        };
        let next = vs
            .iter()
            .flat_map(|x| [&x.a, &x.b, &x.p])
            .filter(|c| **c > v)
            .min()
            .cloned();
        let eps = match next {
            Some(w) => (w - &v) / int(2),
            None => Rational::one(),
        };
        let sharing: Vec<usize> = (0..vs.len()).filter(|&u| vs[u].p == v).collect();
        let m = sharing.len() as i64;
        for (l, &u) in sharing.iter().enumerate() {
            vs[u].p = &v + &eps / int(m + 1 - l as i64);
        }
        for x in vs.iter_mut() {
            if x.b == v {
                x.b = &v + &eps;
            }
        }
    }
    IntervalPointRep::new(vs).expect("points stay inside their intervals")
}

/// Everything derived from a proper MPTG ordering.
#[derive(Clone, Debug)]
pub struct Construction {
    pub ordering: VertexOrdering,
    pub matrix: AugmentedMatrix,
    pub precedence: PrecedenceRelation,
    pub sequence: CanonicalSequence,
}

impl Construction {
    /// Checks the ordering is a proper MPTG ordering and builds the
    /// precedence relation and canonical sequence.
    pub fn new(g: &Graph, ordering: &VertexOrdering) -> Result<Self, BuildError> {
        let matrix = AugmentedMatrix::new(g, ordering)?;
        Construction::from_matrix(matrix, ordering.clone())
    }

    pub fn from_matrix(matrix: AugmentedMatrix, ordering: VertexOrdering) -> Result<Self, BuildError> {
        if ordering.len() != matrix.n() {
            return Err(GraphError::OrderingLength {
                expected: matrix.n(),
                got: ordering.len(),
            }
            .into());
        }
        check_proper_mptg_ordering(&matrix).map_err(BuildError::NotProperOrdering)?;
        let precedence = precedes(&matrix)?;
        let sequence = canonical_sequence(&matrix, &precedence)?;
        Ok(Construction {
            ordering,
            matrix,
            precedence,
            sequence,
        })
    }

    /// Integer representation indexed by vertex label.
    pub fn integer_rep(&self) -> IntervalPointRep {
        realize_integer(&self.sequence)
            .to_vertex_labels(&self.ordering)
            .expect("lengths agree")
    }

    /// Length-`l` representation indexed by vertex label.
    pub fn unit_rep(&self, l: &Rational) -> Result<IntervalPointRep, BuildError> {
        Ok(realize_unit(&self.sequence, l)?.to_vertex_labels(&self.ordering)?)
    }
}
