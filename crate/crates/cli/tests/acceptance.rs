//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::TAU;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use winding_core::crossings::{
    boundary_pairing, crossings, stokes_parity_check, stokes_signed_check, winding_via_ray,
};
use winding_core::geom::{in_general_position, TAU_ANG};
use winding_core::regions::{checkerboard_mask, mobius_alexander_grid};
use winding_core::testkit::{
    general_position_instance, general_position_open_pair, general_position_pair, lattice_point,
    random_closed, random_point_off, sampled_angle_oracle, CounterRng, GenConfig,
};
use winding_core::winding::{
    fan_decomposition, gen_sector_path, gen_symmetric, gen_three_paths, w_prime, winding_number,
    EPS_INT,
};
use winding_core::{ClosedPolyline, OpenPolyline, Point, Polyline, Segment};

type Outcome = Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn closed(v: &[(f64, f64)]) -> ClosedPolyline {
    ClosedPolyline::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

fn open(v: &[(f64, f64)]) -> OpenPolyline {
    OpenPolyline::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

fn integrality() -> Outcome {
    let cfg = GenConfig {
        seed: 1,
        max_vertices: 30,
        coord_range: 1_000_000,
        perturbation: 0.0,
    };
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for i in 0..10_000 {
        let l = random_closed(&mut rng, &cfg, 1);
        let o = random_point_off(&mut rng, &cfg, &l);
        let r = winding_number(&l, o).map_err(|e| format!("line {i}: {e}"))?;
        if r.residual >= EPS_INT {
            return fail(format!("line {i}: residual {}", r.residual));
        }
        worst = worst.max(r.residual);
    }
    Ok(format!("10000 lines, worst residual {worst:.3e}"))
}

fn triple_oracle() -> Outcome {
    let cfg = GenConfig {
        seed: 2,
        max_vertices: 12,
        ..GenConfig::default()
    };
    let mut rng = cfg.rng();
    for i in 0..1000 {
        let (l, o) = general_position_instance(&mut rng, &cfg).map_err(|e| e.to_string())?;
        let w = winding_number(&l, o).map_err(|e| e.to_string())?.w;
        let ray = winding_via_ray(&l, o).map_err(|e| e.to_string())?.w;
        let sampled =
            (sampled_angle_oracle(&l, o, 4).map_err(|e| e.to_string())? / TAU).round() as i64;
        if w != ray || w != sampled {
            return fail(format!(
                "instance {i}: angle sum {w}, ray {ray}, sampled {sampled}"
            ));
        }
    }
    Ok("1000 instances".into())
}

fn stokes() -> Outcome {
    let cfg = GenConfig {
        seed: 3,
        max_vertices: 12,
        ..GenConfig::default()
    };
    let mut rng = cfg.rng();
    for i in 0..1000 {
        let (l, q) = general_position_pair(&mut rng, &cfg).map_err(|e| e.to_string())?;
        let (jump, count) = stokes_parity_check(&l, &q).map_err(|e| e.to_string())?;
        let (diff, signed) = stokes_signed_check(&l, &q).map_err(|e| e.to_string())?;
        if jump != count || diff != signed {
            return fail(format!(
                "pair {i}: parity {jump}/{count}, signed {diff}/{signed}"
            ));
        }
    }
    Ok("1000 pairs".into())
}

fn pairing() -> Outcome {
    let cfg = GenConfig {
        seed: 4,
        max_vertices: 12,
        ..GenConfig::default()
    };
    let mut rng = cfg.rng();
    let mut empty = 0;
    for i in 0..1000 {
        let (l, q) = general_position_open_pair(&mut rng, &cfg).map_err(|e| e.to_string())?;
        let d = boundary_pairing(&l, &q).map_err(|e| format!("pair {i}: {e}"))?;
        let x = crossings(&l, &q).map_err(|e| e.to_string())?;
        if d.residual >= EPS_INT || d.rounded != x.signed_sum {
            return fail(format!(
                "pair {i}: ∂ = {} (residual {}), l·p = {}",
                d.value, d.residual, x.signed_sum
            ));
        }
        if x.count == 0 {
            empty += 1;
            if d.rounded != 0 {
                return fail(format!("pair {i}: no crossings but ∂ = {}", d.rounded));
            }
        }
    }
    Ok(format!("1000 pairs, {empty} without crossings"))
}

fn borsuk_ulam() -> Outcome {
    let mut rng = CounterRng::new(5);
    let cfg = GenConfig::default();
    for i in 0..1000u64 {
        let k = rng.int_in(2, 16) as usize;
        let c = lattice_point(&mut rng, &cfg);
        let l = gen_symmetric(k, c, i).map_err(|e| e.to_string())?;
        let w = winding_number(&l, c).map_err(|e| e.to_string())?.w;
        if w.rem_euclid(2) != 1 {
            return fail(format!("instance {i}: w = {w}"));
        }
    }
    Ok("1000 instances".into())
}

fn three_paths() -> Outcome {
    let configs = [
        (p(-5.0, 0.0), p(5.0, 0.0), p(0.0, 0.0)),
        (p(-3.0, 1.0), p(4.0, 2.5), p(0.5, -1.0)),
        (p(10.0, 10.0), p(12.0, 9.0), p(-7.0, 3.0)),
    ];
    let mut count = 0;
    for &(a, b, o) in &configs {
        for n1 in -5..=5 {
            for n2 in -5..=5 {
                let (l1, l2, l3) = gen_three_paths(n1, n2, a, b, o).map_err(|e| e.to_string())?;
                let w = |x: &OpenPolyline, y: &OpenPolyline| -> Result<i64, String> {
                    let c = x.concat(&y.reverse()).map_err(|e| e.to_string())?.close();
                    Ok(winding_number(&c, o).map_err(|e| e.to_string())?.w)
                };
                let got = (w(&l1, &l2)?, w(&l2, &l3)?, w(&l1, &l3)?);
                if got != (n1, n2, n1 + n2) {
                    return fail(format!("(n1, n2) = ({n1}, {n2}): got {got:?}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (n1, n2, configuration) triples"))
}

fn fan() -> Outcome {
    let cfg = GenConfig {
        seed: 7,
        max_vertices: 12,
        ..GenConfig::default()
    };
    let mut rng = cfg.rng();
    for i in 0..1000 {
        let l = random_closed(&mut rng, &cfg, 1);
        let o = random_point_off(&mut rng, &cfg, &l);
        let apex = loop {
            let a = lattice_point(&mut rng, &cfg);
            if a != o && l.points().iter().all(|&v| !Segment::new(a, v).contains(o)) {
                break a;
            }
        };
        let f = fan_decomposition(&l, o, apex).map_err(|e| e.to_string())?.w;
        let w = winding_number(&l, o).map_err(|e| e.to_string())?.w;
        if f != w {
            return fail(format!("instance {i}: fan {f}, winding {w}"));
        }
    }
    Ok("1000 instances".into())
}

fn sector() -> Outcome {
    let mut rng = CounterRng::new(8);
    let cfg = GenConfig::default();
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let o = lattice_point(&mut rng, &cfg);
        let r = rng.uniform(10.0, 1000.0);
        let phase = rng.uniform(0.0, TAU);
        let tri = [0.0, 1.0, 2.0].map(|j: f64| {
            let t = phase + j * TAU / 3.0;
            o.offset(r * t.cos(), r * t.sin())
        });
        let mut parts = Vec::new();
        for j in 0..3 {
            let l = gen_sector_path(j, tri, o, rng.next_u64()).map_err(|e| e.to_string())?;
            let wp = w_prime(&l, o).map_err(|e| e.to_string())?.value();
            let dev = (wp - 1.0 / 3.0).abs();
            if dev > TAU_ANG {
                return fail(format!("triple {i}: w′(l_{j}) = {wp}"));
            }
            worst = worst.max(dev);
            parts.push(l);
        }
        let joined = parts[0]
            .concat(&parts[1])
            .and_then(|x| x.concat(&parts[2]))
            .map_err(|e| e.to_string())?;
        let w = winding_number(&joined.close(), o)
            .map_err(|e| e.to_string())?
            .w;
        if w.abs() != 1 {
            return fail(format!("triple {i}: w(l_0 l_1 l_2) = {w}"));
        }
    }
    Ok(format!("100 triples, worst |w′ − 1/3| {worst:.3e}"))
}

fn worked_examples() -> Outcome {
    let w =
        |l: &ClosedPolyline, o: Point| winding_number(l, o).map(|r| r.w).map_err(|e| e.to_string());
    let o = Point::ORIGIN;
    let abc = closed(&[(2.0, -1.0), (0.5, 2.0), (-2.0, -1.5)]);
    if w(&abc, o)? != 1 {
        return fail("w(ABC) ≠ 1");
    }
    let abcd = closed(&[(1.0, -1.0), (3.0, -0.5), (3.0, 1.5), (1.0, 1.0)]);
    if w(&abcd, o)? != 0 {
        return fail("w(ABCD) ≠ 0");
    }
    let mut twice = abc.points().to_vec();
    twice.extend_from_slice(abc.points());
    if w(&ClosedPolyline::new(twice).unwrap(), o)? != 2 * w(&abc, o)? {
        return fail("w(ABCABC) ≠ 2·w(ABC)");
    }
    let (a, b, c) = ((1.0, 2.0), (-1.0, 0.5), (2.0, -2.0));
    for l in [closed(&[a]), closed(&[a, b]), closed(&[a, b, c, b])] {
        for q in [p(0.0, 0.0), p(0.3, 0.1), p(-5.0, 4.0), p(1.5, 0.0)] {
            if w(&l, q)? != 0 {
                return fail(format!("w ≠ 0 for a degenerate line at {q}"));
            }
        }
    }
    let q = open(&[(0.03, 0.01), (10.07, 0.13)]);
    let l = open(&[
        (1.01, 1.02),
        (1.13, -1.05),
        (-1.11, -1.17),
        (-1.19, 1.23),
        (2.05, 1.29),
        (2.21, -1.31),
        (3.17, -1.37),
        (3.29, 1.41),
        (4.31, 1.43),
        (4.37, -1.47),
    ]);
    let mut all = l.points().to_vec();
    all.extend_from_slice(q.points());
    if !in_general_position(&all) {
        return fail("four-crossing configuration is not in general position");
    }
    let x = crossings(&l, &q).map_err(|e| e.to_string())?;
    let d = boundary_pairing(&l, &q).map_err(|e| e.to_string())?;
    if x.count % 2 != 0 || x.signed_sum.abs() != 2 || d.rounded != x.signed_sum {
        return fail(format!(
            "count {}, l·p {}, ∂ {}",
            x.count, x.signed_sum, d.rounded
        ));
    }
    Ok(format!("all exact; four-crossing l·p = ∂ = {}", d.rounded))
}

fn regions() -> Outcome {
    const N: usize = 64;
    let cfg = GenConfig {
        seed: 10,
        max_vertices: 10,
        coord_range: 1000,
        perturbation: 0.0,
    };
    let mut rng = cfg.rng();
    let mut singles = 0;
    for i in 0..20 {
        let l = random_closed(&mut rng, &cfg, 3);
        let g = mobius_alexander_grid(&l, N, N).map_err(|e| e.to_string())?;
        if let Some((ix, iy)) = g.frame().find(|&(ix, iy)| g.label(ix, iy) != Some(0)) {
            return fail(format!(
                "line {i}: frame cell ({ix}, {iy}) is {:?}",
                g.label(ix, iy)
            ));
        }

        let mut pairs = 0;
        while pairs < 100 {
            let (a, b) = ((rng.index(N), rng.index(N)), (rng.index(N), rng.index(N)));
            let s = Segment::new(g.center(a.0, a.1), g.center(b.0, b.1));
            let free = a != b
                && l.segments()
                    .iter()
                    .all(|&t| matches!(winding_core::geom::segment_intersection(s, t), Ok(None)));
            if !free {
                continue;
            }
            pairs += 1;
            if g.label(a.0, a.1) != g.label(b.0, b.1) {
                return fail(format!("line {i}: cells {a:?} and {b:?} differ"));
            }
        }

        for iy in 0..N {
            for ix in 0..N {
                for (jx, jy) in [(ix + 1, iy), (ix, iy + 1)] {
                    if jx >= N || jy >= N {
                        continue;
                    }
                    let (Some(u), Some(v)) = (g.label(ix, iy), g.label(jx, jy)) else {
                        continue;
                    };
                    let path = OpenPolyline::new(vec![g.center(ix, iy), g.center(jx, jy)]).unwrap();
                    if let Ok(r) = crossings(&l, &path) {
                        if r.count == 1 {
                            singles += 1;
                            if (v - u).abs() != 1 {
                                return fail(format!(
                                    "line {i}: labels {u}, {v} across one crossing"
                                ));
                            }
                        }
                    }
                }
            }
        }

        let mask = checkerboard_mask(&g);
        for iy in 0..N {
            for ix in 0..N {
                if mask.get(ix, iy) != g.label(ix, iy).map(|k| k.rem_euclid(2) == 1) {
                    return fail(format!("line {i}: parity mask differs at ({ix}, {iy})"));
                }
            }
        }
    }
    Ok(format!(
        "20 lines on 64x64, {singles} single-crossing neighbors"
    ))
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_winding"))
            .args(["verify", "--suite", "all", "--n", "1000", "--seed", "42"])
            .current_dir(std::env::temp_dir())
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        return fail(format!(
            "exit codes {:?}, {:?}",
            a.status.code(),
            b.status.code()
        ));
    }
    if a.stdout != b.stdout {
        return fail("reports differ between runs");
    }
    let last = String::from_utf8_lossy(&a.stdout)
        .lines()
        .last()
        .unwrap_or("")
        .to_string();
    Ok(format!("identical reports, {last}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("integrality", integrality, 10),
        ("triple-oracle agreement", triple_oracle, 30),
        ("discrete Stokes", stokes, 30),
        ("boundary pairing", pairing, 30),
        ("odd winding of symmetric lines", borsuk_ulam, 5),
        ("three-path additivity", three_paths, 5),
        ("fan decomposition", fan, 10),
        ("sector lemma", sector, 10),
        ("worked examples", worked_examples, 10),
        ("regions", regions, 60),
        ("CLI determinism", cli_determinism, 120),
    ];
    let total = criteria.len();
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit}s"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name}: {detail} ({elapsed:.2?})",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", total - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
