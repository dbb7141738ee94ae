//! Exact-rational representations and their JSON form.
//!
//! Coordinates are written as strings: an integer (`"21"`, `"-20"`), a
//! fraction (`"13/2"`) or a finite decimal (`"7.1"`, `"0.25"`). JSON numbers
//! are accepted on input and read through the same grammar. Output always
//! uses the integer or `num/den` form, so documents round-trip exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ReprError;
use crate::graph::VertexOrdering;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `-3`, `13/2`, `7.1`, `-.5`.
pub fn parse_rational(text: &str) -> Result<Rational, ReprError> {
    let bad = || ReprError::BadRational(text.to_string());
    let s = text.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, fraction) = body.split_once('.').unwrap_or((body, ""));
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if (whole.is_empty() && fraction.is_empty()) || !digits_ok(whole) || !digits_ok(fraction) {
        return Err(bad());
    }
    let digits = format!("{whole}{fraction}");
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let den = BigInt::from(10u32).pow(fraction.len() as u32);
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Closed interval `[a, b]` with a point `p` inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPoint {
    pub a: Rational,
    pub b: Rational,
    pub p: Rational,
}

impl IntervalPoint {
    pub fn new(a: Rational, b: Rational, p: Rational) -> Self {
        IntervalPoint { a, b, p }
    }

    pub fn from_ints(a: i64, b: i64, p: i64) -> Self {
        IntervalPoint::new(int(a), int(b), int(p))
    }

    pub fn parse(a: &str, b: &str, p: &str) -> Result<Self, ReprError> {
        Ok(IntervalPoint::new(parse_rational(a)?, parse_rational(b)?, parse_rational(p)?))
    }

    pub fn length(&self) -> Rational {
        &self.b - &self.a
    }
}

/// Closed interval `[a, b]` with a tolerance `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalTolerance {
    pub a: Rational,
    pub b: Rational,
    pub t: Rational,
}

impl IntervalTolerance {
    pub fn new(a: Rational, b: Rational, t: Rational) -> Self {
        IntervalTolerance { a, b, t }
    }

    pub fn parse(a: &str, b: &str, t: &str) -> Result<Self, ReprError> {
        Ok(IntervalTolerance::new(parse_rational(a)?, parse_rational(b)?, parse_rational(t)?))
    }

    pub fn length(&self) -> Rational {
        &self.b - &self.a
    }
}

/// Max-point-tolerance representation; vertex `v` is entry `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPointRep {
    vertices: Vec<IntervalPoint>,
}

impl IntervalPointRep {
    /// Requires `a <= p <= b` for every vertex.
    pub fn new(vertices: Vec<IntervalPoint>) -> Result<Self, ReprError> {
        for (v, ip) in vertices.iter().enumerate() {
            if ip.a > ip.b {
                return Err(ReprError::EmptyInterval { vertex: v });
            }
            if ip.p < ip.a || ip.p > ip.b {
                return Err(ReprError::PointOutside { vertex: v });
            }
        }
        Ok(IntervalPointRep { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[IntervalPoint] {
        &self.vertices
    }

    pub fn get(&self, v: usize) -> &IntervalPoint {
        &self.vertices[v]
    }

    pub fn into_vertices(self) -> Vec<IntervalPoint> {
        self.vertices
    }

    /// Treats entry `i` as belonging to the vertex at ordering position `i`
    /// and returns the representation indexed by vertex label.
    pub fn to_vertex_labels(&self, ordering: &VertexOrdering) -> Result<Self, crate::error::GraphError> {
        ordering.check_len(self.len())?;
        let mut out = self.vertices.clone();
        for (pos, &v) in ordering.as_slice().iter().enumerate() {
            out[v] = self.vertices[pos].clone();
        }
        Ok(IntervalPointRep { vertices: out })
    }

    pub fn points_distinct(&self) -> bool {
        let mut ps: Vec<&Rational> = self.vertices.iter().map(|v| &v.p).collect();
        ps.sort();
        ps.windows(2).all(|w| w[0] != w[1])
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDoc {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(v, ip)| JsonIntervalPoint {
                    id: v + 1,
                    a: Coord::Text(format_rational(&ip.a)),
                    b: Coord::Text(format_rational(&ip.b)),
                    p: Coord::Text(format_rational(&ip.p)),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ReprError> {
        let doc: JsonDoc<JsonIntervalPoint> = serde_json::from_str(text)?;
        let ids: Vec<usize> = doc.vertices.iter().map(|v| v.id).collect();
        let mut slots: Vec<Option<IntervalPoint>> = vec![None; ids.len()];
        for (entry, slot) in doc.vertices.iter().zip(id_slots(&ids)?) {
            slots[slot] = Some(IntervalPoint::new(entry.a.value()?, entry.b.value()?, entry.p.value()?));
        }
        IntervalPointRep::new(slots.into_iter().map(|s| s.expect("ids checked")).collect())
    }
}

/// Max-tolerance representation; vertex `v` is entry `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToleranceRep {
    vertices: Vec<IntervalTolerance>,
}

impl ToleranceRep {
    /// Requires `a < b` and `t > 0` for every vertex.
    pub fn new(vertices: Vec<IntervalTolerance>) -> Result<Self, ReprError> {
        for (v, it) in vertices.iter().enumerate() {
            if it.a >= it.b {
                return Err(ReprError::EmptyInterval { vertex: v });
            }
            if !it.t.is_positive() {
                return Err(ReprError::NonPositiveTolerance { vertex: v });
            }
        }
        Ok(ToleranceRep { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[IntervalTolerance] {
        &self.vertices
    }

    pub fn get(&self, v: usize) -> &IntervalTolerance {
        &self.vertices[v]
    }

    /// Vertices whose tolerance exceeds their interval length; such a
    /// vertex can only be isolated.
    pub fn warnings(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.vertices[v].t > self.vertices[v].length())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = JsonDoc {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(v, it)| JsonIntervalTolerance {
                    id: v + 1,
                    a: Coord::Text(format_rational(&it.a)),
                    b: Coord::Text(format_rational(&it.b)),
                    t: Coord::Text(format_rational(&it.t)),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ReprError> {
        let doc: JsonDoc<JsonIntervalTolerance> = serde_json::from_str(text)?;
        let ids: Vec<usize> = doc.vertices.iter().map(|v| v.id).collect();
        let mut slots: Vec<Option<IntervalTolerance>> = vec![None; ids.len()];
        for (entry, slot) in doc.vertices.iter().zip(id_slots(&ids)?) {
            slots[slot] = Some(IntervalTolerance::new(entry.a.value()?, entry.b.value()?, entry.t.value()?));
        }
        ToleranceRep::new(slots.into_iter().map(|s| s.expect("ids checked")).collect())
    }
}

/// Either kind of representation, as found in a JSON document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRep {
    Point(IntervalPointRep),
    Tolerance(ToleranceRep),
}

impl AnyRep {
    /// Decides the kind by whether the first vertex carries `p` or `t`.
    pub fn from_json(text: &str) -> Result<Self, ReprError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let first = value
            .get("vertices")
            .and_then(|v| v.as_array())
            .and_then(|v| v.first());
        match first {
            Some(v) if v.get("t").is_some() => Ok(AnyRep::Tolerance(ToleranceRep::from_json(text)?)),
            _ => Ok(AnyRep::Point(IntervalPointRep::from_json(text)?)),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyRep::Point(r) => r.to_json(),
            AnyRep::Tolerance(r) => r.to_json(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyRep::Point(r) => r.len(),
            AnyRep::Tolerance(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Maps 1-based ids to slots, insisting they are exactly `1..=n`.
fn id_slots(ids: &[usize]) -> Result<Vec<usize>, ReprError> {
    let n = ids.len();
    let mut seen = vec![false; n];
    ids.iter()
        .map(|&id| {
            if id == 0 || id > n {
                return Err(ReprError::Ids(format!("id {id} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[id - 1], true) {
                return Err(ReprError::Ids(format!("id {id} repeated")));
            }
            Ok(id - 1)
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct JsonDoc<T> {
    vertices: Vec<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Text(String),
    Number(serde_json::Number),
}

impl Coord {
    fn value(&self) -> Result<Rational, ReprError> {
        match self {
            Coord::Text(s) => parse_rational(s),
            Coord::Number(n) => parse_rational(&n.to_string()),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIntervalPoint {
    id: usize,
    a: Coord,
    b: Coord,
    p: Coord,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIntervalTolerance {
    id: usize,
    a: Coord,
    b: Coord,
    t: Coord,
}

impl fmt::Display for IntervalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] p={}", self.a, self.b, self.p)
    }
}

impl fmt::Display for IntervalTolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] t={}", self.a, self.b, self.t)
    }
}

/// `1/2`, used often enough to name.
pub fn half() -> Rational {
    Rational::one() / int(2)
}
