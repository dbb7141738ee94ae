//! Explicit constructions and the worked numeric examples.

use std::fmt;

use crate::error::FamilyError;
use crate::graph::{
    make_caterpillar, make_complete, make_complete_bipartite, make_cycle, make_wheel, AugmentedMatrix, Graph,
};
use crate::repr::{frac, int, AnyRep, IntervalPoint, IntervalPointRep, IntervalTolerance, Rational, ToleranceRep};

/// Proper representation of `K_n`: `I_i = [1 + i/n, n + i]`, `p_i = i`,
/// except `p_1 = 2` and `p_2 = 5/2`.
pub fn gen_kn_proper_mptg(n: usize) -> Result<IntervalPointRep, FamilyError> {
    make_complete(n)?;
    let nn = n as i64;
    let vertices = (1..=nn)
        .map(|i| {
            let p = match i {
                1 => int(2),
                2 => frac(5, 2),
                _ => int(i),
            };
            IntervalPoint::new(int(1) + frac(i, nn), int(nn + i), p)
        })
        .collect();
    Ok(IntervalPointRep::new(vertices).expect("points inside intervals"))
}

/// Representation of `K_{m,n}` with the `m` side first:
/// `x_i = ([i, m + n + iε/m], i)` and `y_j = ([jε/n, j + m], j + m)`.
pub fn gen_kmn_mptg(m: usize, n: usize, eps: &Rational) -> Result<IntervalPointRep, FamilyError> {
    make_complete_bipartite(m, n)?;
    if *eps <= int(0) || *eps >= int(1) {
        return Err(FamilyError::BadEpsilon);
    }
    let (mm, nn) = (int(m as i64), int(n as i64));
    let total = int((m + n) as i64);
    let xs = (1..=m as i64).map(|i| IntervalPoint::new(int(i), &total + int(i) * eps / &mm, int(i)));
    let ys = (1..=n as i64).map(|j| IntervalPoint::new(int(j) * eps / &nn, int(j) + &mm, int(j) + &mm));
    Ok(IntervalPointRep::new(xs.chain(ys).collect()).expect("points inside intervals"))
}

/// Default `ε` for [`gen_kmn_mptg`].
pub fn default_epsilon() -> Rational {
    frac(1, 2)
}

/// Proper representation of the caterpillar of [`make_caterpillar`].
///
/// Spine `s_i = ([2i-3, 2i+2], 2i)`. Leaf `j` of `n` on `s_i` gets
/// `[2i - 3 - (n-j+1)/(n+1), 2i + 2j/(2n+1)]` and point `2i + (2j-1)/(2n+1)`.
pub fn gen_caterpillar_proper_mptg(leg_counts: &[usize]) -> Result<IntervalPointRep, FamilyError> {
    make_caterpillar(leg_counts)?;
    let spine = (1..=leg_counts.len() as i64).map(|i| IntervalPoint::from_ints(2 * i - 3, 2 * i + 2, 2 * i));
    let leaves = leg_counts.iter().enumerate().flat_map(|(idx, &legs)| {
        let i = idx as i64 + 1;
        let n = legs as i64;
        (1..=n).map(move |j| {
            IntervalPoint::new(
                int(2 * i - 3) - frac(n - j + 1, n + 1),
                int(2 * i) + frac(2 * j, 2 * n + 1),
                int(2 * i) + frac(2 * j - 1, 2 * n + 1),
            )
        })
    });
    Ok(IntervalPointRep::new(spine.chain(leaves).collect()).expect("points inside intervals"))
}

const FIGURE5_ROWS: [&str; 7] = ["1101000", "1110000", "0111110", "1011111", "0011100", "0011010", "0001001"];

/// The 7-vertex proper MPTG of the worked example, identity ordering.
pub fn figure5_matrix() -> AugmentedMatrix {
    AugmentedMatrix::from_rows(&FIGURE5_ROWS).expect("valid rows")
}

fn rep_from_ints(rows: &[(i64, i64, i64)]) -> IntervalPointRep {
    IntervalPointRep::new(rows.iter().map(|&(a, b, p)| IntervalPoint::from_ints(a, b, p)).collect())
        .expect("valid fixture")
}

/// The worked example's integer representation, read off the numbered
/// canonical sequence.
pub fn figure5_rep() -> IntervalPointRep {
    rep_from_ints(&[(2, 13, 6), (1, 10, 8), (7, 20, 9), (5, 19, 12), (3, 15, 14), (4, 17, 16), (11, 21, 18)])
}

/// The intervals printed beside the worked example's matrix. They differ
/// from [`figure5_rep`] by swapping the left endpoints of v1 and v2, which
/// still induces the graph but nests `[2,10]` inside `[1,13]`.
pub fn figure5_printed_rep() -> IntervalPointRep {
    rep_from_ints(&[(1, 13, 6), (2, 10, 8), (7, 20, 9), (5, 19, 12), (3, 15, 14), (4, 17, 16), (11, 21, 18)])
}

/// Right endpoints in precedence order, 1-based.
pub const FIGURE5_P1: [usize; 7] = [2, 1, 5, 6, 4, 3, 7];

pub const FIGURE5_SEQUENCE: &str = "a2 a1 a5 a6 a4 p1 a3 p2 p3 b2 a7 p4 b1 p5 b5 p6 b6 p7 b4 b3 b7";

/// Integer coordinates of the worked example, by tag.
pub const FIGURE5_TABLE: [(&str, i64); 21] = [
    ("a2", 1),
    ("a1", 2),
    ("a5", 3),
    ("a6", 4),
    ("a4", 5),
    ("p1", 6),
    ("a3", 7),
    ("p2", 8),
    ("p3", 9),
    ("b2", 10),
    ("a7", 11),
    ("p4", 12),
    ("b1", 13),
    ("p5", 14),
    ("b5", 15),
    ("p6", 16),
    ("b6", 17),
    ("p7", 18),
    ("b4", 19),
    ("b3", 20),
    ("b7", 21),
];

/// The spider with legs of length two: centre v5, legs v5-v4-v1,
/// v5-v6-v2, v5-v7-v3 (0-based here).
pub fn g1_spider() -> Graph {
    Graph::from_edges(7, [(0, 3), (3, 4), (4, 5), (5, 1), (4, 6), (6, 2)]).expect("valid edges")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Mptg,
    ProperMptg,
    MaxTolerance,
    ProperMaxTolerance,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::Mptg => "mptg",
            ClassTag::ProperMptg => "proper-mptg",
            ClassTag::MaxTolerance => "max-tolerance",
            ClassTag::ProperMaxTolerance => "proper-max-tolerance",
        })
    }
}

/// A graph with a representation taken from the worked examples.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub representation: AnyRep,
    /// Classes the representation witnesses.
    pub classes: &'static [ClassTag],
}

const PROPER_POINT: &[ClassTag] = &[ClassTag::Mptg, ClassTag::ProperMptg];
const PROPER_TOL: &[ClassTag] = &[ClassTag::MaxTolerance, ClassTag::ProperMaxTolerance];

fn points(rows: &[(&str, &str, &str)]) -> AnyRep {
    let vs = rows
        .iter()
        .map(|&(a, b, p)| IntervalPoint::parse(a, b, p).expect("fixture literal"))
        .collect();
    AnyRep::Point(IntervalPointRep::new(vs).expect("valid fixture"))
}

fn tolerances(rows: &[(&str, &str, &str)]) -> AnyRep {
    let vs = rows
        .iter()
        .map(|&(a, b, t)| IntervalTolerance::parse(a, b, t).expect("fixture literal"))
        .collect();
    AnyRep::Tolerance(ToleranceRep::new(vs).expect("valid fixture"))
}

pub const FIXTURE_NAMES: [&str; 7] = [
    "figure5",
    "w4_proper_mptg",
    "c6bar_proper_mptg",
    "c5_proper_maxtol",
    "c6bar_proper_maxtol",
    "g1_maxtol",
    "k23_maxtol",
];

pub fn fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES
        .iter()
        .map(|name| fixture(name).expect("known fixture"))
        .collect()
}

/// Looks a fixture up by name; `-` and `_` are interchangeable.
pub fn fixture(name: &str) -> Result<Fixture, FamilyError> {
    let key = name.replace('-', "_");
    let c6bar = || make_cycle(6).expect("n >= 3").complement();
    let f = match key.as_str() {
        "figure5" => Fixture {
            name: "figure5",
            graph: figure5_matrix().to_graph(),
            representation: AnyRep::Point(figure5_rep()),
            classes: PROPER_POINT,
        },
        "w4_proper_mptg" => Fixture {
            name: "w4_proper_mptg",
            graph: make_wheel(4)?,
            representation: points(&[
                ("30", "130", "80"),
                ("20", "120", "50"),
                ("10", "100", "70"),
                ("60", "150", "90"),
                ("40", "140", "110"),
            ]),
            classes: PROPER_POINT,
        },
        "c6bar_proper_mptg" => Fixture {
            name: "c6bar_proper_mptg",
            graph: c6bar(),
            representation: points(&[
                ("20", "40", "39"),
                ("15", "38", "30"),
                ("32", "46", "33"),
                ("25", "42", "27"),
                ("28", "44", "37"),
                ("10", "36", "34"),
            ]),
            classes: PROPER_POINT,
        },
        "c5_proper_maxtol" => Fixture {
            name: "c5_proper_maxtol",
            graph: make_cycle(5)?,
            representation: tolerances(&[
                ("1", "6", "0.25"),
                ("1.2", "8", "4.7"),
                ("3", "10", "4.8"),
                ("5", "12", "4"),
                ("5.5", "13", "0.35"),
            ]),
            classes: PROPER_TOL,
        },
        "c6bar_proper_maxtol" => Fixture {
            name: "c6bar_proper_maxtol",
            graph: c6bar(),
            representation: tolerances(&[
                ("2", "8", "2.9"),
                ("4", "10", "4.5"),
                ("1", "7.1", "1"),
                ("5", "11", "3"),
                ("3", "9", "4.1"),
                ("5.2", "12", "1.5"),
            ]),
            classes: PROPER_TOL,
        },
        "g1_maxtol" => Fixture {
            name: "g1_maxtol",
            graph: g1_spider(),
            representation: tolerances(&[
                ("10", "25", "5"),
                ("45", "53", "8"),
                ("65", "75", "10"),
                ("20", "40", "5"),
                ("30", "70", "10"),
                ("45", "60", "8"),
                ("60", "80", "10"),
            ]),
            classes: &[ClassTag::MaxTolerance],
        },
        "k23_maxtol" => Fixture {
            name: "k23_maxtol",
            graph: make_complete_bipartite(2, 3)?,
            representation: tolerances(&[
                ("-20", "0", "1"),
                ("0", "20", "1"),
                ("-2", "2", "1"),
                ("-6", "6", "5"),
                ("-20", "20", "19"),
            ]),
            classes: &[ClassTag::MaxTolerance],
        },
        _ => return Err(FamilyError::UnknownFixture(name.to_string())),
    };
    Ok(f)
}
