//! Semantics of representations: induced graphs, properness, unit length
//! and certification against a target graph.
//!
//! All comparisons are exact and closed: a point on an interval endpoint
//! lies in the interval, and an intersection of length exactly `t` meets a
//! tolerance of `t`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::graph::Graph;
use crate::repr::{IntervalPointRep, Rational, ToleranceRep};

/// Something that assigns each vertex an interval and induces a graph.
pub trait Representation {
    fn vertex_count(&self) -> usize;
    fn interval(&self, v: usize) -> (&Rational, &Rational);
    fn induced_graph(&self) -> Graph;
}

impl Representation for IntervalPointRep {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn interval(&self, v: usize) -> (&Rational, &Rational) {
        let ip = self.get(v);
        (&ip.a, &ip.b)
    }

    fn induced_graph(&self) -> Graph {
        induced_mptg(self)
    }
}

impl Representation for ToleranceRep {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn interval(&self, v: usize) -> (&Rational, &Rational) {
        let it = self.get(v);
        (&it.a, &it.b)
    }

    fn induced_graph(&self) -> Graph {
        induced_maxtol(self)
    }
}

fn build<F: Fn(usize, usize) -> bool>(n: usize, adjacent: F) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs in range")
}

/// `uv` is an edge iff both points lie in both intervals.
pub fn induced_mptg(rep: &IntervalPointRep) -> Graph {
    let vs = rep.vertices();
    let contains = |x: usize, y: usize| vs[x].a <= vs[y].p && vs[y].p <= vs[x].b;
    build(rep.len(), |u, v| contains(u, v) && contains(v, u))
}

/// Length of `[a1, b1] ∩ [a2, b2]`, zero when they miss or touch.
pub fn overlap(a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational) -> Rational {
    let lo = a1.max(a2);
    let hi = b1.min(b2);
    if hi > lo {
        hi - lo
    } else {
        Rational::zero()
    }
}

/// `uv` is an edge iff `|I_u ∩ I_v| >= max(t_u, t_v)`.
pub fn induced_maxtol(rep: &ToleranceRep) -> Graph {
    let vs = rep.vertices();
    build(rep.len(), |u, v| {
        let common = overlap(&vs[u].a, &vs[u].b, &vs[v].a, &vs[v].b);
        common >= vs[u].t && common >= vs[v].t
    })
}

/// `I_inner` is a proper subset of `I_outer`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub inner: usize,
    pub outer: usize,
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "interval of v{} properly contains that of v{}", self.outer + 1, self.inner + 1)
    }
}

/// Fails on the first strict containment. Equal intervals are allowed.
pub fn is_proper<R: Representation + ?Sized>(rep: &R) -> Result<(), Containment> {
    let n = rep.vertex_count();
    for inner in 0..n {
        let (ai, bi) = rep.interval(inner);
        for outer in 0..n {
            let (ao, bo) = rep.interval(outer);
            if ao <= ai && bi <= bo && (ao, bo) != (ai, bi) {
                return Err(Containment { inner, outer });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthMismatch {
    pub vertex: usize,
    #[serde(serialize_with = "as_text")]
    pub expected: Rational,
    #[serde(serialize_with = "as_text")]
    pub got: Rational,
}

fn as_text<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl fmt::Display for LengthMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{} has length {}, v1 has {}", self.vertex + 1, self.got, self.expected)
    }
}

/// Every interval has the length of vertex 0's.
#[allow(clippy::result_large_err)]
pub fn is_unit<R: Representation + ?Sized>(rep: &R) -> Result<(), LengthMismatch> {
    if rep.vertex_count() == 0 {
        return Ok(());
    }
    let len = |v: usize| {
        let (a, b) = rep.interval(v);
        b - a
    };
    let expected = len(0);
    (1..rep.vertex_count()).try_for_each(|v| {
        let got = len(v);
        if got == expected {
            Ok(())
        } else {
            Err(LengthMismatch {
                vertex: v,
                expected: expected.clone(),
                got,
            })
        }
    })
}

/// A pair whose adjacency differs between the target graph and the
/// representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub u: usize,
    pub v: usize,
    pub expected: bool,
    pub got: bool,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |e: bool| if e { "edge" } else { "non-edge" };
        write!(
            f,
            "v{} v{}: expected {}, representation gives {}",
            self.u + 1,
            self.v + 1,
            word(self.expected),
            word(self.got)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyError {
    VertexCount { expected: usize, got: usize },
    Edges(Vec<Mismatch>),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::VertexCount { expected, got } => {
                write!(f, "graph has {expected} vertices, representation has {got}")
            }
            CertifyError::Edges(list) => {
                write!(f, "{} mismatched pair(s)", list.len())?;
                for m in list {
                    write!(f, "\n  {m}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for CertifyError {}

/// Compares the induced graph with `g` pair by pair.
pub fn certify<R: Representation + ?Sized>(rep: &R, g: &Graph) -> Result<(), CertifyError> {
    if rep.vertex_count() != g.n() {
        return Err(CertifyError::VertexCount {
            expected: g.n(),
            got: rep.vertex_count(),
        });
    }
    let h = rep.induced_graph();
    let mut list = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (expected, got) = (g.has_edge(u, v), h.has_edge(u, v));
            if expected != got {
                list.push(Mismatch { u, v, expected, got });
            }
        }
    }
    if list.is_empty() {
        Ok(())
    } else {
        Err(CertifyError::Edges(list))
    }
}
