//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use valmat_core::ends::{self, delta, dress_terhalle_metric, require_simple, ultrametric_matrix};
use valmat_core::generators::fixtures::{rep23, tree, tree_instance};
use valmat_core::generators::{gen_representable, PolyMatrix};
use valmat_core::lattice::{self, LatticePoint};
use valmat_core::oracle;
use valmat_core::reconstruct::{omega_from_lattice, project_xb, roundtrip_check};
use valmat_core::tropical::tight_span_point;
use valmat_core::{Caps, ElementSet, GroundSet, Point, Rational, Valuation};

use common::{corpus, rng, sample_points, walk, Instance};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn pt(c: &[i64]) -> Point {
    Point::new(c.to_vec())
}

fn roundtrip(instances: &[Instance]) -> Outcome {
    let mut checks = 0;
    for (i, inst) in instances.iter().enumerate() {
        let v = &inst.simple;
        let mut r = rng(100 + i as u64);
        for x in sample_points(v, 5, 6, &mut r) {
            let rt = ok(roundtrip_check(v, &x), &inst.name)?;
            let top = oracle::naive_height(v, x.point());
            for (j, &b) in v.family().bases().iter().enumerate() {
                let expected = v.eval(j, x.point()) - top;
                ensure!(
                    rt.reconstructed.values()[j] as i128 == expected,
                    "{}: base {} at {}",
                    inst.name,
                    v.ground().format_set(b),
                    x.point()
                );
                checks += 1;
            }
            for (j, (b, w)) in v.iter().enumerate() {
                let shifted = Rational::from_integer(w) + rt.witness.sum_over(b);
                ensure!(
                    shifted == Rational::from_integer(rt.reconstructed.values()[j]),
                    "{}: witness {} fails on {}",
                    inst.name,
                    rt.witness,
                    v.ground().format_set(b)
                );
            }
        }
    }
    Ok(format!("{} instances, {checks} basewise identities", instances.len()))
}

fn definitions(instances: &[Instance], caps: &Caps) -> Outcome {
    let mut points = 0;
    let mut counted = 0;
    for inst in instances.iter().filter(|i| i.raw.ground().len() <= 5) {
        let n = inst.raw.ground().len();
        let boxed = ok(oracle::box_points(&Point::constant(n, -2), &Point::constant(n, 2), caps), &inst.name)?;
        for x in &boxed {
            let cross = ok(oracle::brute_member_cross(&inst.raw, x, caps), &inst.name)?;
            ensure!(cross == oracle::naive_member(&inst.raw, x), "{}: naive membership differs at {x}", inst.name);
        }
        points += boxed.len();
        counted += 1;
    }
    Ok(format!("{counted} instances, {points} points"))
}

fn flats_isomorphism(v: &Valuation, x: &LatticePoint, caps: &Caps) -> Result<(), String> {
    let top = ok(lattice::shift(v, x, 1), "shift")?;
    let members = ok(lattice::interval(v, x, &top, caps), "interval")?;
    let flats = ok(x.matroid().flats(caps), "flats")?;
    let support = |z: &LatticePoint| -> ElementSet {
        (0..z.point().len()).filter(|&e| z.point().get(e) > x.point().get(e)).collect()
    };
    let mut images: Vec<ElementSet> = members.iter().map(support).collect();
    images.sort();
    let mut sorted = flats.clone();
    sorted.sort();
    ensure!(images == sorted, "[x, x+1] at {} is not the flats of M_(ω+x)", x.point());
    for a in &members {
        for b in &members {
            ensure!(a.le(b) == support(a).is_subset(support(b)), "order mismatch in [x, x+1] at {}", x.point());
        }
    }
    Ok(())
}

fn lattice_axioms(instances: &[Instance], caps: &Caps) -> Outcome {
    let mut pairs = 0;
    for (i, inst) in instances.iter().enumerate() {
        let v = &inst.simple;
        let mut r = rng(300 + i as u64);
        let start = ok(lattice::find_point(v), &inst.name)?;
        for _ in 0..200 {
            let x = walk(v, &start, r.gen_range(0..=4), &mut r);
            let y = walk(v, &x, r.gen_range(0..=4), &mut r);
            let m = ok(lattice::meet(v, &x, &y), &inst.name)?;
            ensure!(m.point() == &x.point().inf(y.point()), "{}: meet is not min", inst.name);
            ensure!(oracle::naive_member(v, m.point()), "{}: min {} not a member", inst.name, m.point());
            let j = ok(lattice::join(v, &x, &y), &inst.name)?;
            let brute = ok(oracle::brute_join(v, x.point(), y.point(), caps), &inst.name)?;
            ensure!(j.point() == &brute, "{}: join {} vs brute {}", inst.name, j.point(), brute);
            ensure!(
                x.height() + y.height() >= m.height() + j.height(),
                "{}: semimodularity fails at {}, {}",
                inst.name,
                x.point(),
                y.point()
            );
            let covers = ok(lattice::covers(v, &x), &inst.name)?;
            let up = ok(lattice::join_all(v, covers.iter()), &inst.name)?.expect("covers exist");
            ensure!(up.point() == &ok(x.point().shifted(1), "shift")?, "{}: ⋁ covers ≠ x + 1", inst.name);
            flats_isomorphism(v, &x, caps).map_err(|e| format!("{}: {e}", inst.name))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn ultrametric(instances: &[Instance]) -> Outcome {
    let (mut triples, mut ray_checks, mut tight) = (0, 0, 0);
    for (i, inst) in instances.iter().enumerate() {
        let v = &inst.simple;
        let n = v.ground().len();
        let mut r = rng(400 + i as u64);
        for x in sample_points(v, 5, 6, &mut r) {
            let d = ok(ultrametric_matrix(v, &x), &inst.name)?;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if a == b || b == c || a == c {
                            continue;
                        }
                        let (ab, bc, ac) = (d.get(a, b).unwrap(), d.get(b, c).unwrap(), d.get(a, c).unwrap());
                        ensure!(ac >= ab.min(bc), "{}: ultrametric fails on {a},{b},{c} at {}", inst.name, x.point());
                        triples += 1;
                    }
                    if a < b {
                        let closed = d.get(a, b).unwrap();
                        let traced = ok(oracle::brute_delta(v, x.point(), a, b, closed as usize + 2), &inst.name)?;
                        ensure!(traced == closed, "{}: δ {closed} vs ray trace {traced} at {}", inst.name, x.point());
                        ray_checks += 1;
                    }
                }
            }
            let rank = v.rank() as i64;
            if x.height().rem_euclid(rank) != 0 {
                continue;
            }
            let zero = ok(lattice::shift(v, &x, -x.height() / rank), &inst.name)?;
            ensure!(zero.height() == 0, "{}: normalised height", inst.name);
            let p = ok(tight_span_point(v, zero.point()), &inst.name)?;
            ensure!(p == zero.point().to_rational().neg(), "{}: tight-span point is not -x", inst.name);
            for a in 0..n {
                for b in a + 1..n {
                    let dt = ok(dress_terhalle_metric(v, &p, a, b), &inst.name)?;
                    let dx = ok(delta(v, &zero, a, b), &inst.name)?;
                    ensure!(dt == Rational::from_integer(-dx), "{}: D exponent {dt} vs -δ {dx}", inst.name);
                    tight += 1;
                }
            }
        }
    }
    Ok(format!("{triples} triples, {ray_checks} ray traces, {tight} tight-span pairs"))
}

fn fixtures() -> Outcome {
    let m = ok(
        PolyMatrix::from_columns(&["e1", "e2", "e3"], &[&[&[1], &[0]], &[&[0], &[1]], &[&[1], &[0, 1]]]),
        "matrix",
    )?;
    let r = ok(gen_representable(&m), "REP23")?;
    ensure!(r.values() == [0, 1, 0], "REP23 values {:?}", r.values());
    ensure!(r == rep23(), "REP23 differs from the fixture");
    let found = ok(lattice::find_point(&r), "find_point")?;
    ensure!(found.point() == &pt(&[0, 1, 0]), "find_point(REP23) = {}", found.point());
    let x = ok(LatticePoint::new(&r, pt(&[1, 1, 0])), "(1,1,0)")?;
    let b23 = ElementSet::from_indices([1, 2]);
    let xb = ok(project_xb(&r, &x, b23), "x_23")?;
    ensure!(xb.point() == &pt(&[0, 1, 0]), "x_23 = {}", xb.point());
    let omega = ok(omega_from_lattice(&r, &x), "ω^L")?;
    ensure!(omega.value(b23) == Some(-1), "ω^L(23) = {:?}", omega.value(b23));

    let t = tree();
    ensure!(t.values() == [-2, 0, 0], "TREE values {:?}", t.values());
    let d = ok(tree_instance().distance_valuation(), "distances")?;
    let h = ok(d.projectively_equivalent(&t), "witness")?.ok_or("TREE not equivalent to d")?;
    ensure!(h.to_integer() == Some(pt(&[-2, -2, -1])), "TREE witness {h}");
    let zero = ok(LatticePoint::new(&t, Point::zeros(3)), "0")?;
    let du = ok(delta(&t, &zero, 0, 1), "δ")?;
    ensure!(du == 2, "δ_0(u,u') = {du}");
    ensure!(ok(oracle::brute_delta(&t, zero.point(), 0, 1, 6), "ray")? == 2, "ray trace δ_0(u,u')");
    Ok("REP23, x_B, ω^L, TREE, witness, δ".into())
}

fn infinity(instances: &[Instance]) -> Outcome {
    let mut count = 0;
    for inst in instances {
        let v = &inst.simple;
        if require_simple(v).is_err() {
            continue;
        }
        let m = ok(ends::matroid_at_infinity(v), &inst.name)?;
        ensure!(&m == v.family(), "{}: matroid at infinity differs", inst.name);
        ensure!(m.is_base_family(), "{}: not a base family", inst.name);
        count += 1;
    }
    Ok(format!("{count} simple instances"))
}

fn exc_violator() -> Valuation {
    let g = std::sync::Arc::new(GroundSet::numbered(4).unwrap());
    let set = |a: usize, b: usize| ElementSet::from_indices([a - 1, b - 1]);
    let pairs = vec![(set(1, 2), 0), (set(1, 3), 0), (set(1, 4), 0), (set(2, 3), 0), (set(2, 4), 0), (set(3, 4), 3)];
    Valuation::from_pairs(g, 2, pairs).unwrap()
}

fn maximizers(instances: &[Instance]) -> Outcome {
    let mut count = 0;
    for (i, inst) in instances.iter().enumerate() {
        let mut r = rng(700 + i as u64);
        for _ in 0..50 {
            let n = inst.raw.ground().len();
            let x = Point::new((0..n).map(|_| r.gen_range(-5..=5)).collect());
            let m = ok(inst.raw.maximizer_family(&x), &inst.name)?;
            ensure!(m.is_base_family(), "{}: maximizers at {x} fail exchange", inst.name);
            let mut naive = oracle::naive_maximizers(&inst.raw, &x);
            naive.sort();
            ensure!(m.bases() == naive.as_slice(), "{}: maximizers at {x} differ from oracle", inst.name);
            count += 1;
        }
    }
    let bad = exc_violator();
    let violation = ok(bad.check_exc(), "violator")?.ok_or("EXC violator accepted")?;
    ensure!(
        oracle::brute_exc_fails(&bad, violation.base, violation.other, violation.element),
        "oracle does not confirm the reported triple"
    );
    Ok(format!("{count} maximizer families, violator rejected"))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() -> ExitCode {
    let caps = Caps::default();
    let instances = corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        ("1 round trip", Box::new(|| roundtrip(&instances))),
        ("2 definition equivalence", Box::new(|| definitions(&instances, &caps))),
        ("3 lattice axioms", Box::new(|| lattice_axioms(&instances, &caps))),
        ("4 ultrametric suite", Box::new(|| ultrametric(&instances))),
        ("5 fixture regression", Box::new(fixtures)),
        ("6 matroid at infinity", Box::new(|| infinity(&instances))),
        ("7 maximizer matroids", Box::new(|| maximizers(&instances))),
    ];
    let mut failed = false;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                failed = true;
                println!("FAIL criterion {name}: {why} [{secs:.2}s]");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

