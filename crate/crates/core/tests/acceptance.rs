//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Oracles here are written independently of the library where the library
//! result is the thing under test (interval graphs from raw intervals,
//! permutation sweeps, hand-coded expected values).

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mptg::builder::{canonical_sequence, normalize_distinct_points, precedes, realize_integer, Construction};
use mptg::families::{
    default_epsilon, figure5_matrix, fixtures, g1_spider, gen_caterpillar_proper_mptg, gen_kmn_mptg,
    gen_kn_proper_mptg, FIGURE5_P1, FIGURE5_SEQUENCE, FIGURE5_TABLE,
};
use mptg::graph::{
    make_caterpillar, make_complete, make_complete_bipartite, make_cycle, make_wheel, AugmentedMatrix, Graph,
    VertexOrdering,
};
use mptg::orderings::{check_4point, check_matrix_zero_condition, check_nonedge_condition, check_proper_maxtol_ordering};
use mptg::recognition::{
    find_imperfect_subgraph, find_mptg_ordering, find_proper_maxtol_ordering, find_proper_mptg_ordering, is_at_free,
};
use mptg::repr::{int, IntervalPoint};
use mptg::sweep::{map_all_graphs, permutations};
use mptg::verify::{certify, induced_mptg, is_proper, is_unit, overlap};
use mptg::{AnyRep, Execution, IntervalPointRep};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent <= limit, || format!("took {spent:?}, limit {limit:?}"))
}

/// Criterion 1: the worked example end to end.
fn figure5_end_to_end() -> Outcome {
    let start = Instant::now();
    let a = figure5_matrix();
    let prec = precedes(&a).map_err(|e| e.to_string())?;
    let p1: Vec<usize> = prec.order().iter().map(|v| v + 1).collect();
    ensure(p1 == FIGURE5_P1, || format!("P1 = {p1:?}"))?;
    let seq = canonical_sequence(&a, &prec).map_err(|e| e.to_string())?;
    ensure(seq.to_string() == FIGURE5_SEQUENCE, || format!("P = {seq}"))?;
    let rep = realize_integer(&seq);
    for (label, value) in FIGURE5_TABLE {
        let v: usize = label[1..].parse::<usize>().unwrap() - 1;
        let ip = rep.get(v);
        let got = match &label[..1] {
            "a" => &ip.a,
            "p" => &ip.p,
            _ => &ip.b,
        };
        ensure(*got == int(value), || format!("{label} = {got}, expected {value}"))?;
    }
    certify(&rep, &a.to_graph()).map_err(|e| e.to_string())?;
    is_proper(&rep).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(1))?;
    Ok("P1, P and the 1..21 table reproduced; certified and proper".into())
}

/// Criterion 2: every numeric fixture certifies.
fn fixtures_certify() -> Outcome {
    let start = Instant::now();
    let all = fixtures();
    ensure(all.len() == 7, || format!("{} fixtures", all.len()))?;
    for f in &all {
        let res = match &f.representation {
            AnyRep::Point(r) => certify(r, &f.graph),
            AnyRep::Tolerance(r) => certify(r, &f.graph),
        };
        res.map_err(|e| format!("{}: {e}", f.name))?;
    }
    let g1 = all.iter().find(|f| f.name == "g1_maxtol").unwrap();
    let AnyRep::Tolerance(rep) = &g1.representation else {
        return Err("g1 is not a tolerance fixture".into());
    };
    let (v1, v4) = (rep.get(0), rep.get(3));
    let common = overlap(&v1.a, &v1.b, &v4.a, &v4.b);
    ensure(common == int(5) && v1.t == int(5) && g1.graph.has_edge(0, 3), || {
        format!("g1 equality edge: |I1 ∩ I4| = {common}")
    })?;
    within(start, Duration::from_secs(1))?;
    Ok("7 fixtures certify, including |I1 ∩ I4| = 5 = t1 in g1".into())
}

/// Criterion 3: named class verdicts.
fn class_verdicts() -> Outcome {
    let start = Instant::now();
    let member = |g: &Graph| find_proper_mptg_ordering(g).map(|r| r.is_member()).map_err(|e| e.to_string());
    ensure(member(&make_cycle(4).unwrap())?, || "C_4 rejected".into())?;
    ensure(member(&make_wheel(4).unwrap())?, || "W_4 rejected".into())?;
    for n in 5..=8 {
        ensure(!member(&make_cycle(n).unwrap())?, || format!("C_{n} accepted"))?;
    }
    for n in 5..=7 {
        ensure(!member(&make_wheel(n).unwrap())?, || format!("W_{n} accepted"))?;
    }
    let c7bar = make_cycle(7).unwrap().complement();
    ensure(!find_mptg_ordering(&c7bar).map_err(|e| e.to_string())?.is_member(), || {
        "complement of C_7 accepted as MPTG".into()
    })?;
    let k23 = make_complete_bipartite(2, 3).unwrap();
    let mut failing = 0;
    for perm in permutations(5) {
        let a = AugmentedMatrix::new(&k23, &VertexOrdering::new(perm).unwrap()).unwrap();
        if check_proper_maxtol_ordering(&a).is_err() {
            failing += 1;
        }
    }
    ensure(failing == 120, || format!("K_2,3 passes in {} orderings", 120 - failing))?;
    ensure(!find_proper_maxtol_ordering(&k23).unwrap().is_member(), || "K_2,3 search".into())?;
    let g1 = g1_spider();
    ensure(find_mptg_ordering(&g1).unwrap().is_member(), || "G_1 not MPTG".into())?;
    let triple = is_at_free(&g1).err().map(|t| t.0);
    ensure(triple == Some([0, 1, 2]), || format!("G_1 AT = {triple:?}"))?;
    ensure(!member(&g1)?, || "G_1 accepted as proper MPTG".into())?;
    within(start, Duration::from_secs(120))?;
    Ok(format!("all verdicts match ({:.2?})", start.elapsed()))
}

/// Criterion 4: the three MPTG ordering conditions agree.
fn ordering_equivalence() -> Outcome {
    let mut pairs = 0u64;
    for n in 0..=5 {
        let counts = map_all_graphs(n, Execution::default(), |g| {
            let mut checked = 0u64;
            for perm in permutations(n) {
                let a = AugmentedMatrix::new(g, &VertexOrdering::new(perm.clone()).unwrap()).unwrap();
                let four = check_4point(&a).is_ok();
                let nonedge = check_nonedge_condition(&a).is_ok();
                let zero = check_matrix_zero_condition(&a).is_ok();
                if four != nonedge || four != zero {
                    return Err(format!("{g:?} ordering {perm:?}: 4pt {four}, nonedge {nonedge}, zero {zero}"));
                }
                checked += 1;
            }
            Ok(checked)
        });
        for c in counts {
            pairs += c?;
        }
    }
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..500 {
        let g = random_graph(&mut rng, 7, 0.5);
        let perm = random_permutation(&mut rng, 7);
        let a = AugmentedMatrix::new(&g, &VertexOrdering::new(perm.clone()).unwrap()).unwrap();
        let four = check_4point(&a).is_ok();
        if four != check_nonedge_condition(&a).is_ok() || four != check_matrix_zero_condition(&a).is_ok() {
            return Err(format!("{g:?} ordering {perm:?} disagrees"));
        }
    }
    Ok(format!("{pairs} exhaustive pairs (n <= 5) + 500 random at n = 7 agree"))
}

/// Proper MPTG members among all labeled graphs on `n` vertices, with
/// their witness orderings.
fn proper_members(n: usize) -> Vec<(Graph, VertexOrdering)> {
    map_all_graphs(n, Execution::default(), |g| {
        let r = find_proper_mptg_ordering(g).expect("within bound");
        r.witness.map(|w| (g.clone(), w))
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Criterion 5: integer round trip on every proper MPTG with n <= 6.
fn integer_round_trip(members: &[(Graph, VertexOrdering)]) -> Outcome {
    let failures: Vec<String> = Execution::default()
        .map_slice(members, |(g, sigma)| {
            let c = Construction::new(g, sigma).map_err(|e| format!("{g:?}: {e}"))?;
            let rep = c.integer_rep();
            certify(&rep, g).map_err(|e| format!("{g:?}: {e}"))?;
            is_proper(&rep).map_err(|e| format!("{g:?}: {e}"))
        })
        .into_iter()
        .filter_map(Result::err)
        .collect();
    match failures.first() {
        None => Ok(format!("{} graphs round-trip, no inconsistency", members.len())),
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
    }
}

/// Criterion 6: unit-length realization on the same graphs.
fn unit_round_trip(members: &[(Graph, VertexOrdering)]) -> Outcome {
    let one = int(1);
    let failures: Vec<String> = Execution::default()
        .map_slice(members, |(g, sigma)| {
            let c = Construction::new(g, sigma).map_err(|e| e.to_string())?;
            let rep = c.unit_rep(&one).map_err(|e| format!("{g:?}: {e}"))?;
            if rep.vertices().iter().any(|v| v.length() != one) {
                return Err(format!("{g:?}: a length differs from 1"));
            }
            is_unit(&rep).map_err(|e| e.to_string())?;
            certify(&rep, g).map_err(|e| format!("{g:?}: {e}"))
        })
        .into_iter()
        .filter_map(Result::err)
        .collect();
    match failures.first() {
        None => Ok(format!("{} graphs realized with unit length 1", members.len())),
        Some(f) => Err(format!("{} failures, first: {f}", failures.len())),
    }
}

/// Criterion 7: proper members are AT-free and perfect.
fn at_free_and_perfect(members: &[(Graph, VertexOrdering)]) -> Outcome {
    let start = Instant::now();
    let check = |g: &Graph| -> Result<(), String> {
        if let Err(t) = is_at_free(g) {
            return Err(format!("{g:?}: {t}"));
        }
        match find_imperfect_subgraph(g, 10) {
            Ok(None) => Ok(()),
            Ok(Some(w)) => Err(format!("{g:?}: imperfect on {:?}", w.vertices)),
            Err(e) => Err(e.to_string()),
        }
    };
    for r in Execution::default().map_slice(members, |(g, _)| check(g)) {
        r?;
    }
    let mut rng = StdRng::seed_from_u64(7);
    let sample: Vec<Graph> = (0..500)
        .map(|_| {
            let p = rng.random_range(0.3..0.95);
            random_graph(&mut rng, 7, p)
        })
        .collect();
    let sampled_members: Vec<Option<Result<(), String>>> = Execution::default().map_slice(&sample, |g| {
        let member = find_proper_mptg_ordering(g).expect("within bound").is_member();
        member.then(|| check(g))
    });
    let mut n7 = 0;
    for r in sampled_members.into_iter().flatten() {
        r?;
        n7 += 1;
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} members with n <= 6 and {n7} of 500 sampled n = 7 graphs are AT-free and perfect",
        members.len()
    ))
}

/// Criterion 8: generators certify.
fn generators() -> Outcome {
    for n in 1..=8 {
        let rep = gen_kn_proper_mptg(n).map_err(|e| e.to_string())?;
        certify(&rep, &make_complete(n).unwrap()).map_err(|e| format!("K_{n}: {e}"))?;
        is_proper(&rep).map_err(|e| format!("K_{n}: {e}"))?;
    }
    let eps = default_epsilon();
    for m in 1..=5 {
        for n in 1..=5 {
            let rep = gen_kmn_mptg(m, n, &eps).map_err(|e| e.to_string())?;
            certify(&rep, &make_complete_bipartite(m, n).unwrap()).map_err(|e| format!("K_{m},{n}: {e}"))?;
        }
    }
    let profiles = leg_profiles(8);
    ensure(profiles.len() >= 10, || format!("only {} profiles", profiles.len()))?;
    for legs in &profiles {
        let rep = gen_caterpillar_proper_mptg(legs).map_err(|e| e.to_string())?;
        let g = make_caterpillar(legs).unwrap();
        certify(&rep, &g).map_err(|e| format!("caterpillar {legs:?}: {e}"))?;
        is_proper(&rep).map_err(|e| format!("caterpillar {legs:?}: {e}"))?;
    }
    Ok(format!("K_1..K_8, K_m,n for m,n <= 5, {} caterpillar profiles", profiles.len()))
}

/// Every leg-count vector with at most `max` vertices in total.
fn leg_profiles(max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for legs in 0..max.saturating_sub(used) {
            if used + 1 + legs > max {
                break;
            }
            prefix.push(legs);
            extend(prefix, used + 1 + legs, max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, max, &mut out);
    out
}

/// Criterion 9: interval graphs are proper MPTG.
fn interval_graphs_accepted() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let graphs: Vec<Graph> = (0..200)
        .map(|_| {
            let n = rng.random_range(1..=7);
            let intervals: Vec<(i32, i32)> = (0..n)
                .map(|_| {
                    let a = rng.random_range(0..20);
                    (a, a + rng.random_range(0..8))
                })
                .collect();
            interval_graph(&intervals)
        })
        .collect();
    let rejected = Execution::default()
        .map_slice(&graphs, |g| !find_proper_mptg_ordering(g).expect("within bound").is_member())
        .into_iter()
        .filter(|&r| r)
        .count();
    ensure(rejected == 0, || format!("{rejected} interval graphs rejected"))?;
    Ok("200 random interval graphs accepted".into())
}

/// Criterion 10: shared points are separated without changing the graph.
fn normalization() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    for case in 0..200 {
        let rep = collided_rep(&mut rng);
        let out = normalize_distinct_points(&rep);
        ensure(out.points_distinct(), || format!("case {case}: points still shared"))?;
        ensure(induced_mptg(&out) == induced_mptg(&rep), || format!("case {case}: graph changed"))?;
        ensure(is_proper(&out).is_ok() == is_proper(&rep).is_ok(), || format!("case {case}: properness changed"))?;
        ensure(normalize_distinct_points(&out) == out, || format!("case {case}: not idempotent"))?;
    }
    Ok("200 collided representations separated, graphs unchanged".into())
}

/// Random representation where at least two points coincide.
fn collided_rep(rng: &mut StdRng) -> IntervalPointRep {
    let n = rng.random_range(2..=7);
    let shared: Vec<i64> = (0..rng.random_range(1..=3)).map(|_| rng.random_range(0..10)).collect();
    let mut vs: Vec<IntervalPoint> = (0..n)
        .map(|_| {
            let p = shared[rng.random_range(0..shared.len())];
            IntervalPoint::from_ints(p - rng.random_range(0..4), p + rng.random_range(0..4), p)
        })
        .collect();
    let forced = vs[0].p.clone();
    let last = vs.last_mut().unwrap();
    if last.p != forced {
        last.p = forced.clone();
        if last.a > forced {
            last.a = forced.clone();
        }
        if last.b < forced {
            last.b = forced;
        }
    }
    IntervalPointRep::new(vs).unwrap()
}

fn interval_graph(intervals: &[(i32, i32)]) -> Graph {
    let n = intervals.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (intervals[u], intervals[v]);
            if a.0.max(b.0) <= a.1.min(b.1) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let started = Instant::now();
    let members: Vec<(Graph, VertexOrdering)> = (0..=6).flat_map(proper_members).collect();
    let criteria: Vec<(&str, Criterion<'_>)> = vec![
        ("worked example end to end", Box::new(figure5_end_to_end)),
        ("fixture certification", Box::new(fixtures_certify)),
        ("class verdicts", Box::new(class_verdicts)),
        ("ordering condition equivalence", Box::new(ordering_equivalence)),
        ("integer round trip", Box::new(|| integer_round_trip(&members))),
        ("unit realization", Box::new(|| unit_round_trip(&members))),
        ("AT-free and perfect", Box::new(|| at_free_and_perfect(&members))),
        ("generators", Box::new(generators)),
        ("interval graphs accepted", Box::new(interval_graphs_accepted)),
        ("distinct-point normalization", Box::new(normalization)),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{elapsed:.2?}]", idx + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass ({:.2?})",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
