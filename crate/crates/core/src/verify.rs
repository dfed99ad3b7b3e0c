//! Property suites: every identity of the winding-number calculus, run on
//! generated instances and checked against independent oracles.
//!
//! Case `i` of property `name` draws from
//! `CounterRng::new(seed).split(fnv1a(name)).split(i)`, so results do not
//! depend on which suites run or in what order. The first failing case of a
//! property is shrunk and, when a directory is given, written out as a
//! counterexample document.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::crossings::{
    bilinearity_check, boundary_pairing, boundary_pairing_by_segments, crossings, four_angle_sum,
    ray_crossings, CrossingReport,
};
use crate::error::Error;
use crate::geom::{
    orientation, oriented_angle, segment_intersection, verify_triangle_angle_sum, Point, Segment,
    TAU_ANG,
};
use crate::polyline::{
    convex_hull, hull_contains, ClosedPolyline, OneCycle, OpenPolyline, Polyline,
};
use crate::regions::{
    checkerboard_mask, classify_point, interior_mod2, mobius_alexander_grid, RegionGrid,
};
use crate::testkit::{
    general_position_closed_pair, general_position_instance, general_position_open_pair,
    general_position_pair, general_position_vertices, inside_triangle_barycentric, lattice_point,
    lattice_points, random_closed, random_open, random_point_off, sampled_angle_oracle, shrink,
    star_polygon, Case, CaseLine, CounterRng, GenConfig,
};
use crate::winding::{
    fan_decomposition, gen_sector_path, gen_symmetric, gen_three_paths, w_prime, winding_number,
    winding_of_cycle, EPS_INT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Angles,
    Winding,
    Stokes,
    Boundary,
    Regions,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Angles => "angles",
            Suite::Winding => "winding",
            Suite::Stokes => "stokes",
            Suite::Boundary => "boundary",
            Suite::Regions => "regions",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "all" => Suite::All,
            "angles" => Suite::Angles,
            "winding" => Suite::Winding,
            "stokes" => Suite::Stokes,
            "boundary" => Suite::Boundary,
            "regions" => Suite::Regions,
            other => return Err(Error::InvalidParameter(format!("unknown suite {other:?}"))),
        })
    }
}

/// Deliberate defects used to check that the suites catch bugs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Every crossing sign is negated.
    FlipCrossingSigns,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub n: usize,
    pub seed: u64,
    pub mutation: Option<Mutation>,
    pub counterexample_dir: Option<PathBuf>,
}

impl VerifyOptions {
    pub fn new(suite: Suite, n: usize, seed: u64) -> Self {
        Self {
            suite,
            n,
            seed,
            mutation: None,
            counterexample_dir: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub case_index: usize,
    pub reason: String,
    pub shrunk: Option<Case>,
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<Failure>,
}

impl PropertyOutcome {
    pub fn id(&self) -> String {
        format!("{}/{}", self.suite, self.name)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub n: usize,
    pub seed: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failure.is_none())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify suite={} n={} seed={}",
            self.suite.name(),
            self.n,
            self.seed
        );
        for o in &self.outcomes {
            match &o.failure {
                None => {
                    let _ = writeln!(out, "PASS {} cases={}", o.id(), o.cases);
                }
                Some(f) => {
                    let _ = write!(
                        out,
                        "FAIL {} cases={} case={} reason={:?}",
                        o.id(),
                        o.cases,
                        f.case_index,
                        f.reason
                    );
                    if let Some(c) = &f.shrunk {
                        let _ = write!(out, " shrunk_vertices={}", c.vertex_count());
                    }
                    if let Some(path) = &f.file {
                        let _ = write!(out, " counterexample={}", path.display());
                    }
                    out.push('\n');
                }
            }
        }
        let failed = self.outcomes.iter().filter(|o| o.failure.is_some()).count();
        let _ = writeln!(
            out,
            "properties={} passed={} failed={}",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        );
        out
    }
}

enum Verdict {
    /// The property is violated.
    Fail(String),
    /// The instance does not meet the property's preconditions.
    Invalid(String),
}

impl From<Error> for Verdict {
    fn from(e: Error) -> Self {
        Verdict::Invalid(e.to_string())
    }
}

type Check = Result<(), Verdict>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        match $cond {
            true => {}
            false => return Err(Verdict::Fail(format!($($fmt)+))),
        }
    };
}

struct Ctx {
    mutation: Option<Mutation>,
}

impl Ctx {
    fn signed(&self, r: &CrossingReport) -> i64 {
        match self.mutation {
            Some(Mutation::FlipCrossingSigns) => -r.signed_sum,
            None => r.signed_sum,
        }
    }

    fn ray_winding(&self, l: &ClosedPolyline, x: Point) -> Result<i64, Error> {
        ray_crossings(l, x).map(|r| self.signed(&r))
    }
}

struct Property {
    suite: Suite,
    name: &'static str,
    generate: fn(&mut CounterRng) -> Result<Case, Error>,
    check: fn(&Case, &Ctx) -> Check,
}

/// Grid resolution used by the region properties.
pub const REGION_GRID: usize = 32;

fn cfg() -> GenConfig {
    GenConfig::default()
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn turns_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TAU_ANG
}

/// Distance from `x` to the nearest multiple of 2π.
fn off_full_turn(x: f64) -> f64 {
    (x - TAU * (x / TAU).round()).abs()
}

fn line(case: &Case, i: usize) -> Result<&CaseLine, Verdict> {
    case.lines
        .get(i)
        .ok_or_else(|| Verdict::Invalid(format!("missing line {i}")))
}

fn closed(case: &Case, i: usize) -> Result<ClosedPolyline, Verdict> {
    Ok(line(case, i)?.as_closed()?)
}

fn open(case: &Case, i: usize) -> Result<OpenPolyline, Verdict> {
    Ok(line(case, i)?.as_open()?)
}

fn point(case: &Case, i: usize) -> Result<Point, Verdict> {
    case.points
        .get(i)
        .copied()
        .ok_or_else(|| Verdict::Invalid(format!("missing point {i}")))
}

fn param(case: &Case, i: usize) -> Result<i64, Verdict> {
    case.params
        .get(i)
        .copied()
        .ok_or_else(|| Verdict::Invalid(format!("missing param {i}")))
}

fn points_away_from(rng: &mut CounterRng, cfg: &GenConfig, o: Point, n: usize) -> Vec<Point> {
    (0..n)
        .map(|_| loop {
            let p = lattice_point(rng, cfg);
            if p != o {
                break p;
            }
        })
        .collect()
}

// ---------------------------------------------------------------- angles

fn gen_angle_points(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let o = lattice_point(rng, &c);
    let mut points = vec![o];
    points.extend(points_away_from(rng, &c, o, 3));
    Ok(Case {
        points,
        ..Case::default()
    })
}

fn check_antisymmetry(case: &Case, _: &Ctx) -> Check {
    let (o, a, b) = (point(case, 0)?, point(case, 1)?, point(case, 2)?);
    let ab = oriented_angle(o, a, b)?.value();
    let ba = oriented_angle(o, b, a)?.value();
    if ab == PI {
        ensure!(ba == PI, "half turn read back as {ba}");
    } else {
        ensure!((ab + ba).abs() <= TAU_ANG, "∠AOB = {ab}, ∠BOA = {ba}");
    }
    Ok(())
}

fn check_mod_2pi_additivity(case: &Case, _: &Ctx) -> Check {
    let (o, a, b, c) = (
        point(case, 0)?,
        point(case, 1)?,
        point(case, 2)?,
        point(case, 3)?,
    );
    let r = oriented_angle(o, a, b)?.value() + oriented_angle(o, b, c)?.value()
        - oriented_angle(o, a, c)?.value();
    ensure!(off_full_turn(r) <= TAU_ANG, "∠AOB + ∠BOC − ∠AOC = {r}");
    Ok(())
}

fn gen_triangle_query(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = GenConfig {
        coord_range: 50,
        ..cfg()
    };
    loop {
        let [o, a, b, t] = [0; 4].map(|_| lattice_point(rng, &c));
        let sides = [Segment::new(a, b), Segment::new(b, t), Segment::new(t, a)];
        if !crate::geom::point_on_segments(o, &sides) && ![a, b, t].contains(&o) {
            return Ok(Case {
                points: vec![o, a, b, t],
                ..Case::default()
            });
        }
    }
}

fn check_triangle_angle_sum(case: &Case, _: &Ctx) -> Check {
    let (o, a, b, c) = (
        point(case, 0)?,
        point(case, 1)?,
        point(case, 2)?,
        point(case, 3)?,
    );
    let sum = verify_triangle_angle_sum(o, a, b, c)?;
    if inside_triangle_barycentric(o, a, b, c) {
        ensure!(
            (sum.abs() - TAU).abs() <= 4.0 * TAU_ANG,
            "inside but sum = {sum}"
        );
    } else {
        ensure!(sum.abs() <= 4.0 * TAU_ANG, "outside but sum = {sum}");
    }
    Ok(())
}

fn check_orientation_swaps(case: &Case, _: &Ctx) -> Check {
    let (a, b, c) = (point(case, 1)?, point(case, 2)?, point(case, 3)?);
    let o = orientation(a, b, c);
    for (name, swapped) in [
        ("BAC", orientation(b, a, c)),
        ("ACB", orientation(a, c, b)),
        ("CBA", orientation(c, b, a)),
    ] {
        ensure!(swapped == o.reversed(), "{name} gave {swapped:?} for {o:?}");
    }
    Ok(())
}

fn gen_disjoint_segments(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    loop {
        let v = general_position_vertices(rng, &c, &[4])?;
        let p = &v[0];
        if segment_intersection(Segment::new(p[0], p[1]), Segment::new(p[2], p[3])) == Ok(None) {
            return Ok(Case {
                points: p.clone(),
                ..Case::default()
            });
        }
    }
}

fn check_four_angles(case: &Case, _: &Ctx) -> Check {
    let (a, b, c, d) = (
        point(case, 0)?,
        point(case, 1)?,
        point(case, 2)?,
        point(case, 3)?,
    );
    if segment_intersection(Segment::new(a, b), Segment::new(c, d)) != Ok(None) {
        return Err(Verdict::Invalid("segments meet".into()));
    }
    let s = four_angle_sum(a, b, c, d)?;
    ensure!(s.abs() <= 4.0 * TAU_ANG, "∠ADB + ∠DBC + ∠BCA + ∠CAD = {s}");
    Ok(())
}

// --------------------------------------------------------------- winding

fn gen_line_and_point(rng: &mut CounterRng, c: &GenConfig, min: usize) -> Case {
    let l = random_closed(rng, c, min);
    let o = random_point_off(rng, c, &l);
    Case {
        lines: vec![CaseLine::closed(&l)],
        points: vec![o],
        params: vec![],
    }
}

fn gen_integrality(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = GenConfig {
        max_vertices: 30,
        coord_range: 1_000_000,
        ..cfg()
    };
    Ok(gen_line_and_point(rng, &c, 1))
}

fn check_integrality(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    match winding_number(&l, point(case, 0)?) {
        Ok(r) => {
            ensure!(r.residual < EPS_INT, "residual {}", r.residual);
            Ok(())
        }
        Err(Error::IntegralityViolation { residual }) => {
            Err(Verdict::Fail(format!("residual {residual}")))
        }
        Err(e) => Err(e.into()),
    }
}

fn gen_gp_instance(rng: &mut CounterRng) -> Result<Case, Error> {
    let (l, o) = general_position_instance(rng, &cfg())?;
    Ok(Case {
        lines: vec![CaseLine::closed(&l)],
        points: vec![o],
        params: vec![],
    })
}

fn check_triple_oracle(case: &Case, ctx: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let o = point(case, 0)?;
    let w = winding_number(&l, o)?.w;
    let ray = ctx.ray_winding(&l, o)?;
    let sampled = sampled_angle_oracle(&l, o, 16)?;
    ensure!(w == ray, "angle sum gives {w}, ray gives {ray}");
    ensure!(
        (sampled - TAU * w as f64).abs() < EPS_INT,
        "angle sum gives {w}, sampled sweep gives {} turns",
        sampled / TAU
    );
    Ok(())
}

fn gen_open_and_point(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let l = random_open(rng, &c, 1);
    let o = random_point_off(rng, &c, &l);
    let j = rng.index(l.len()) as i64;
    Ok(Case {
        lines: vec![CaseLine::open(&l)],
        points: vec![o],
        params: vec![j],
    })
}

fn check_endpoint_angle(case: &Case, _: &Ctx) -> Check {
    let l = open(case, 0)?;
    let o = point(case, 0)?;
    let direct = oriented_angle(o, l.start(), l.end())?.value();
    let swept = TAU * w_prime(&l, o)?.value();
    ensure!(
        off_full_turn(direct - swept) <= TAU_ANG,
        "∠A_1OA_m = {direct} but 2π·w′ = {swept}"
    );
    Ok(())
}

fn check_reversal(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let o = point(case, 0)?;
    let w = winding_number(&l, o)?.w;
    let back = winding_number(&l.reverse(), o)?.w;
    ensure!(back == -w, "w = {w} but reversed line gives {back}");
    let open = l.to_open();
    let wp = w_prime(&open, o)?.value();
    let wp_back = w_prime(&open.reverse(), o)?.value();
    ensure!(
        turns_close(wp, -wp_back),
        "w′ = {wp}, reversed w′ = {wp_back}"
    );
    Ok(())
}

fn check_w_prime_identities(case: &Case, _: &Ctx) -> Check {
    let l = open(case, 0)?;
    let o = point(case, 0)?;
    let as_closed = l.close();
    let w = winding_number(&as_closed, o)?.w as f64;
    let unrolled = w_prime(&as_closed.unrolled(), o)?.value();
    ensure!(
        turns_close(unrolled, w),
        "w′(A_1…A_mA_1) = {unrolled}, w = {w}"
    );

    let j = param(case, 0)?.clamp(0, l.len() as i64 - 1) as usize;
    let whole = w_prime(&l, o)?.value();
    let parts = w_prime(&l.slice(0, j), o)?.value() + w_prime(&l.slice(j, l.len() - 1), o)?.value();
    ensure!(
        turns_close(whole, parts),
        "split at {j}: {whole} vs {parts}"
    );
    Ok(())
}

fn gen_concat(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let l1 = random_open(rng, &c, 1);
    let mut tail = vec![l1.end()];
    let extra = rng.int_in(0, 6) as usize;
    tail.extend(lattice_points(rng, &c, extra));
    let l2 = OpenPolyline::new(tail)?;
    let c1 = random_closed(rng, &c, 1);
    let extra = rng.int_in(0, 6) as usize;
    let mut c2 = lattice_points(rng, &c, extra);
    c2.push(c1.last());
    let c2 = ClosedPolyline::new(c2)?;
    let lines = vec![
        CaseLine::open(&l1),
        CaseLine::open(&l2),
        CaseLine::closed(&c1),
        CaseLine::closed(&c2),
    ];
    loop {
        let o = lattice_point(rng, &c);
        let all_clear = lines.iter().all(|l| {
            !l.as_open()
                .map(|x| x.close().passes_through(o))
                .unwrap_or(true)
        });
        if all_clear {
            return Ok(Case {
                lines,
                points: vec![o],
                params: vec![],
            });
        }
    }
}

fn check_concat(case: &Case, _: &Ctx) -> Check {
    let o = point(case, 0)?;
    let (l1, l2) = (open(case, 0)?, open(case, 1)?);
    let joined = w_prime(&l1.concat(&l2)?, o)?.value();
    let parts = w_prime(&l1, o)?.value() + w_prime(&l2, o)?.value();
    ensure!(
        turns_close(joined, parts),
        "w′(l1·l2) = {joined}, w′(l1) + w′(l2) = {parts}"
    );

    let (c1, c2) = (closed(case, 2)?, closed(case, 3)?);
    let joined = winding_number(&c1.concat(&c2)?, o)?.w;
    let parts = winding_number(&c1, o)?.w + winding_number(&c2, o)?.w;
    ensure!(
        joined == parts,
        "w(l1·l2) = {joined}, w(l1) + w(l2) = {parts}"
    );
    Ok(())
}

fn gen_symmetric_case(rng: &mut CounterRng) -> Result<Case, Error> {
    let o = lattice_point(rng, &cfg());
    let k = rng.int_in(2, 10) as usize;
    let l = gen_symmetric(k, o, rng.next_u64())?;
    Ok(Case {
        lines: vec![CaseLine::closed(&l)],
        points: vec![o],
        params: vec![],
    })
}

fn check_borsuk_ulam(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let o = point(case, 0)?;
    let pts = l.points();
    let k = pts.len() / 2;
    if pts.len() % 2 != 0
        || (0..k).any(|j| pts[j].midpoint(pts[j + k]).distance(o) > crate::geom::TAU_PT)
    {
        return Err(Verdict::Invalid("line is not centrally symmetric".into()));
    }
    let w = winding_number(&l, o)?.w;
    ensure!(w.rem_euclid(2) == 1, "symmetric line has even winding {w}");
    Ok(())
}

fn gen_three_paths_case(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let o = lattice_point(rng, &c);
    let ab = loop {
        let v = points_away_from(rng, &c, o, 2);
        if v[0] != v[1] {
            break v;
        }
    };
    Ok(Case {
        lines: vec![],
        points: vec![ab[0], ab[1], o],
        params: vec![rng.int_in(-5, 5), rng.int_in(-5, 5)],
    })
}

fn check_three_paths(case: &Case, _: &Ctx) -> Check {
    let (a, b, o) = (point(case, 0)?, point(case, 1)?, point(case, 2)?);
    let (n1, n2) = (param(case, 0)?, param(case, 1)?);
    let (l1, l2, l3) = gen_three_paths(n1, n2, a, b, o)?;
    let w = |x: &OpenPolyline, y: &OpenPolyline| -> Result<i64, Verdict> {
        Ok(winding_number(&x.concat(&y.reverse())?.close(), o)?.w)
    };
    let got = (w(&l1, &l2)?, w(&l2, &l3)?, w(&l1, &l3)?);
    ensure!(
        got == (n1, n2, n1 + n2),
        "pairwise windings {got:?} for ({n1}, {n2})"
    );
    ensure!(got.0 + got.1 == got.2, "additivity broken: {got:?}");
    Ok(())
}

fn gen_fan(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let mut case = gen_line_and_point(rng, &c, 1);
    let l = case.lines[0].as_closed()?;
    let o = case.points[0];
    loop {
        let apex = lattice_point(rng, &c);
        if apex != o
            && l.points()
                .iter()
                .all(|&a| !Segment::new(apex, a).contains(o))
        {
            case.points.push(apex);
            return Ok(case);
        }
    }
}

fn check_fan(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let (o, apex) = (point(case, 0)?, point(case, 1)?);
    let fan = fan_decomposition(&l, o, apex)?.w;
    let w = winding_number(&l, o)?.w;
    ensure!(fan == w, "fan sum {fan}, winding {w}");
    Ok(())
}

fn gen_sector(rng: &mut CounterRng) -> Result<Case, Error> {
    let o = lattice_point(rng, &cfg());
    let r = rng.uniform(10.0, 1000.0);
    let phase = rng.uniform(0.0, TAU);
    let tri: Vec<Point> = (0..3)
        .map(|j| {
            let t = phase + j as f64 * TAU / 3.0;
            o.offset(r * t.cos(), r * t.sin())
        })
        .collect();
    let mut points = vec![o];
    points.extend(tri);
    let params = (0..3).map(|_| (rng.next_u64() >> 1) as i64).collect();
    Ok(Case {
        lines: vec![],
        points,
        params,
    })
}

fn check_sector(case: &Case, _: &Ctx) -> Check {
    let o = point(case, 0)?;
    let tri = [point(case, 1)?, point(case, 2)?, point(case, 3)?];
    let mut parts = Vec::new();
    for j in 0..3 {
        let l = gen_sector_path(j, tri, o, param(case, j)? as u64)?;
        let wp = w_prime(&l, o)?.value();
        ensure!((wp - 1.0 / 3.0).abs() <= TAU_ANG, "w′(l_{j}) = {wp}");
        parts.push(l);
    }
    let joined = parts[0].concat(&parts[1])?.concat(&parts[2])?;
    let w = winding_number(&joined.close(), o)?.w;
    ensure!(w == 1, "w(l_0 l_1 l_2) = {w}");
    Ok(())
}

fn gen_convex(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    loop {
        let n = rng.int_in(3, 12) as usize;
        let hull = convex_hull(&lattice_points(rng, &c, n))?;
        if hull.len() < 3 {
            continue;
        }
        let queries: Vec<Point> = (0..16).map(|_| random_point_off(rng, &c, &hull)).collect();
        return Ok(Case {
            lines: vec![CaseLine::closed(&hull)],
            points: queries,
            params: vec![],
        });
    }
}

fn check_convex(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let hull = convex_hull(l.points())?;
    if hull != l {
        return Err(Verdict::Invalid(
            "not a convex polygon in hull order".into(),
        ));
    }
    for &q in &case.points {
        let w = winding_number(&l, q)?.w;
        let expected = hull_contains(&hull, q) as i64;
        ensure!(w == expected, "query {q}: winding {w}, expected {expected}");
    }
    Ok(())
}

fn gen_star(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let l = star_polygon(rng, &c);
    let queries: Vec<Point> = (0..16).map(|_| random_point_off(rng, &c, &l)).collect();
    Ok(Case {
        lines: vec![CaseLine::closed(&l)],
        points: queries,
        params: vec![],
    })
}

fn check_star(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let segs = l.segments();
    for i in 0..segs.len() {
        for j in i + 2..segs.len() {
            if !(i == 0 && j == segs.len() - 1)
                && segment_intersection(segs[i], segs[j]) != Ok(None)
            {
                return Err(Verdict::Invalid("polygon is not simple".into()));
            }
        }
    }
    for &q in &case.points {
        let w = winding_number(&l, q)?.w;
        ensure!(w.abs() <= 1, "simple polygon winds {w} times around {q}");
    }
    Ok(())
}

fn check_one_cycle(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let o = point(case, 0)?;
    let c = winding_of_cycle(&OneCycle::from_polyline(&l), o)?.w;
    let w = winding_number(&l, o)?.w;
    ensure!(c == w, "1-cycle gives {c}, polyline gives {w}");
    Ok(())
}

fn gen_plain(rng: &mut CounterRng) -> Result<Case, Error> {
    Ok(gen_line_and_point(rng, &cfg(), 1))
}

// ---------------------------------------------------------------- stokes

fn gen_closed_pair(rng: &mut CounterRng) -> Result<Case, Error> {
    let (a, b) = general_position_closed_pair(rng, &cfg())?;
    Ok(Case {
        lines: vec![CaseLine::closed(&a), CaseLine::closed(&b)],
        ..Case::default()
    })
}

fn check_parity_lemma(case: &Case, _: &Ctx) -> Check {
    let r = crossings(&closed(case, 0)?, &closed(case, 1)?)?;
    ensure!(r.count % 2 == 0, "closed lines cross {} times", r.count);
    Ok(())
}

fn gen_mixed_pair(rng: &mut CounterRng) -> Result<Case, Error> {
    let (l, p) = general_position_pair(rng, &cfg())?;
    Ok(Case {
        lines: vec![CaseLine::closed(&l), CaseLine::open(&p)],
        ..Case::default()
    })
}

fn winding_jump(l: &ClosedPolyline, p: &OpenPolyline) -> Result<i64, Error> {
    Ok(winding_number(l, p.end())?.w - winding_number(l, p.start())?.w)
}

fn check_stokes_parity(case: &Case, _: &Ctx) -> Check {
    let (l, p) = (closed(case, 0)?, open(case, 1)?);
    let r = crossings(&l, &p)?;
    let jump = winding_jump(&l, &p)?;
    ensure!(
        jump.rem_euclid(2) as usize == r.count % 2,
        "jump {jump}, {} crossings",
        r.count
    );
    Ok(())
}

fn check_stokes_signed(case: &Case, ctx: &Ctx) -> Check {
    let (l, p) = (closed(case, 0)?, open(case, 1)?);
    let lp = ctx.signed(&crossings(&l, &p)?);
    let jump = winding_jump(&l, &p)?;
    ensure!(jump == lp, "w(l,P1) − w(l,P0) = {jump}, l·p = {lp}");
    Ok(())
}

fn check_ray_oracle(case: &Case, ctx: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let x = point(case, 0)?;
    let ray = ctx.ray_winding(&l, x)?;
    let w = winding_number(&l, x)?.w;
    ensure!(ray == w, "ray count {ray}, winding {w}");
    Ok(())
}

// -------------------------------------------------------------- boundary

fn gen_open_pair(rng: &mut CounterRng) -> Result<Case, Error> {
    let (a, b) = general_position_open_pair(rng, &cfg())?;
    let split = rng.int_in(0, 64);
    Ok(Case {
        lines: vec![CaseLine::open(&a), CaseLine::open(&b)],
        points: vec![],
        params: vec![split],
    })
}

fn gen_maybe_disjoint_pair(rng: &mut CounterRng) -> Result<Case, Error> {
    let mut case = gen_open_pair(rng)?;
    if rng.coin() {
        let shift = 3.0 * cfg().coord_range as f64;
        for p in &mut case.lines[1].points {
            *p = p.offset(shift, 0.0);
        }
    }
    Ok(case)
}

fn check_lemma_b(case: &Case, ctx: &Ctx) -> Check {
    let (l, p) = (open(case, 0)?, open(case, 1)?);
    let lp = ctx.signed(&crossings(&l, &p)?);
    let bp = boundary_pairing(&l, &p)?;
    ensure!(bp.rounded == lp, "∂(l×p) = {} but l·p = {lp}", bp.value);
    ensure!(bp.residual < EPS_INT, "residual {}", bp.residual);
    Ok(())
}

fn check_lemma_a(case: &Case, _: &Ctx) -> Check {
    let (l, p) = (open(case, 0)?, open(case, 1)?);
    let r = crossings(&l, &p)?;
    let bp = boundary_pairing(&l, &p)?;
    if r.count == 0 {
        ensure!(bp.rounded == 0, "disjoint lines but ∂ = {}", bp.value);
    }
    Ok(())
}

fn check_bilinearity(case: &Case, _: &Ctx) -> Check {
    let (l, p) = (open(case, 0)?, open(case, 1)?);
    if l.len() < 3 {
        // Split the other line instead when this one is a single segment.
        if p.len() < 3 {
            return Ok(());
        }
    }
    let (whole, other) = if l.len() >= 3 { (&l, &p) } else { (&p, &l) };
    let j = 1 + (param(case, 0)?.unsigned_abs() as usize) % (whole.len() - 2);
    let (l1, l2) = (whole.slice(0, j), whole.slice(j, whole.len() - 1));
    ensure!(
        bilinearity_check(&l1, &l2, other)?,
        "∂ not additive when split at vertex {j}"
    );
    Ok(())
}

fn check_segment_sum(case: &Case, _: &Ctx) -> Check {
    let (l, p) = (open(case, 0)?, open(case, 1)?);
    let whole = boundary_pairing(&l, &p)?.value;
    let parts = boundary_pairing_by_segments(&l, &p)?;
    ensure!(
        (whole - parts).abs() <= 1e-9,
        "∂(l×p) = {whole}, segment sum = {parts}"
    );
    Ok(())
}

// --------------------------------------------------------------- regions

fn gen_region_line(rng: &mut CounterRng) -> Result<Case, Error> {
    let c = cfg();
    let l = random_closed(rng, &c, 3);
    let x = random_point_off(rng, &c, &l);
    Ok(Case {
        lines: vec![CaseLine::closed(&l)],
        points: vec![x],
        params: vec![(rng.next_u64() >> 1) as i64],
    })
}

fn grid_of(case: &Case) -> Result<(ClosedPolyline, RegionGrid), Verdict> {
    let l = closed(case, 0)?;
    let g = mobius_alexander_grid(&l, REGION_GRID, REGION_GRID)?;
    Ok((l, g))
}

fn check_frame(case: &Case, _: &Ctx) -> Check {
    let (_, g) = grid_of(case)?;
    for (ix, iy) in g.frame() {
        ensure!(
            g.label(ix, iy) == Some(0),
            "frame cell ({ix},{iy}) labeled {:?}",
            g.label(ix, iy)
        );
    }
    Ok(())
}

fn meets_line(l: &ClosedPolyline, s: Segment) -> bool {
    l.segments()
        .iter()
        .any(|&e| segment_intersection(e, s) != Ok(None))
}

fn check_constancy(case: &Case, _: &Ctx) -> Check {
    let (l, g) = grid_of(case)?;
    let mut rng = CounterRng::new(param(case, 0)? as u64);
    let n = g.nx as i64;
    for _ in 0..10 {
        let (ax, ay) = (rng.int_in(0, n - 1), rng.int_in(0, n - 1));
        let bx = (ax + rng.int_in(-6, 6)).clamp(0, n - 1);
        let by = (ay + rng.int_in(-6, 6)).clamp(0, n - 1);
        let (a, b) = ((ax as usize, ay as usize), (bx as usize, by as usize));
        let (la, lb) = (g.label(a.0, a.1), g.label(b.0, b.1));
        if la.is_none() || lb.is_none() || a == b {
            continue;
        }
        if !meets_line(&l, Segment::new(g.center(a.0, a.1), g.center(b.0, b.1))) {
            ensure!(
                la == lb,
                "cells {a:?} and {b:?} are joined off the line but labeled {la:?}, {lb:?}"
            );
        }
    }
    Ok(())
}

fn check_adjacency(case: &Case, ctx: &Ctx) -> Check {
    let (l, g) = grid_of(case)?;
    for iy in 0..g.ny {
        for ix in 0..g.nx {
            for (jx, jy) in [(ix + 1, iy), (ix, iy + 1)] {
                if jx >= g.nx || jy >= g.ny {
                    continue;
                }
                let (Some(a), Some(b)) = (g.label(ix, iy), g.label(jx, jy)) else {
                    continue;
                };
                let step = OpenPolyline::new(vec![g.center(ix, iy), g.center(jx, jy)])?;
                let Ok(r) = crossings(&l, &step) else {
                    continue;
                };
                if r.count == 1 {
                    let lp = ctx.signed(&r);
                    ensure!((b - a).abs() == 1, "labels {a} and {b} across one crossing");
                    ensure!(b - a == lp, "label jump {} but crossing sign {lp}", b - a);
                }
            }
        }
    }
    Ok(())
}

fn check_mask(case: &Case, _: &Ctx) -> Check {
    let (l, g) = grid_of(case)?;
    let mask = checkerboard_mask(&g);
    for iy in 0..g.ny {
        for ix in 0..g.nx {
            let Some(label) = g.label(ix, iy) else {
                continue;
            };
            let black = mask.get(ix, iy);
            ensure!(
                black == Some(label.rem_euclid(2) == 1),
                "mask {black:?} for label {label}"
            );
            let direct = interior_mod2(classify_point(&l, g.center(ix, iy)))?;
            ensure!(
                black == Some(direct),
                "mask {black:?}, interior mod 2 says {direct}"
            );
        }
    }
    Ok(())
}

fn check_interior_by_path(case: &Case, _: &Ctx) -> Check {
    let l = closed(case, 0)?;
    let x = point(case, 0)?;
    let by_path = ray_crossings(&l, x)?.count % 2 == 1;
    let by_winding = interior_mod2(classify_point(&l, x))?;
    ensure!(
        by_path == by_winding,
        "path parity {by_path}, winding parity {by_winding}"
    );
    Ok(())
}

fn properties() -> Vec<Property> {
    use Suite::*;
    macro_rules! prop {
        ($suite:expr, $name:literal, $gen:expr, $check:expr) => {
            Property {
                suite: $suite,
                name: $name,
                generate: $gen,
                check: $check,
            }
        };
    }
    vec![
        prop!(Angles, "antisymmetry", gen_angle_points, check_antisymmetry),
        prop!(
            Angles,
            "mod_2pi_additivity",
            gen_angle_points,
            check_mod_2pi_additivity
        ),
        prop!(
            Angles,
            "triangle_angle_sum",
            gen_triangle_query,
            check_triangle_angle_sum
        ),
        prop!(
            Angles,
            "orientation_swaps",
            gen_angle_points,
            check_orientation_swaps
        ),
        prop!(
            Angles,
            "four_angle_identity",
            gen_disjoint_segments,
            check_four_angles
        ),
        prop!(Winding, "integrality", gen_integrality, check_integrality),
        prop!(
            Winding,
            "triple_oracle",
            gen_gp_instance,
            check_triple_oracle
        ),
        prop!(
            Winding,
            "endpoint_angle",
            gen_open_and_point,
            check_endpoint_angle
        ),
        prop!(Winding, "reversal", gen_plain, check_reversal),
        prop!(
            Winding,
            "w_prime_identities",
            gen_open_and_point,
            check_w_prime_identities
        ),
        prop!(Winding, "concatenation", gen_concat, check_concat),
        prop!(
            Winding,
            "borsuk_ulam",
            gen_symmetric_case,
            check_borsuk_ulam
        ),
        prop!(
            Winding,
            "three_paths",
            gen_three_paths_case,
            check_three_paths
        ),
        prop!(Winding, "fan_decomposition", gen_fan, check_fan),
        prop!(Winding, "sector_lemma", gen_sector, check_sector),
        prop!(Winding, "convex_boundary", gen_convex, check_convex),
        prop!(Winding, "simple_polygon", gen_star, check_star),
        prop!(Winding, "one_cycle", gen_plain, check_one_cycle),
        prop!(Stokes, "parity_lemma", gen_closed_pair, check_parity_lemma),
        prop!(Stokes, "parity_jump", gen_mixed_pair, check_stokes_parity),
        prop!(Stokes, "signed_jump", gen_mixed_pair, check_stokes_signed),
        prop!(Stokes, "ray_oracle", gen_gp_instance, check_ray_oracle),
        prop!(
            Boundary,
            "pairing_equals_crossings",
            gen_open_pair,
            check_lemma_b
        ),
        prop!(
            Boundary,
            "disjoint_pairing_vanishes",
            gen_maybe_disjoint_pair,
            check_lemma_a
        ),
        prop!(Boundary, "bilinearity", gen_open_pair, check_bilinearity),
        prop!(
            Boundary,
            "segment_decomposition",
            gen_open_pair,
            check_segment_sum
        ),
        prop!(Regions, "outer_frame", gen_region_line, check_frame),
        prop!(
            Regions,
            "component_constancy",
            gen_region_line,
            check_constancy
        ),
        prop!(Regions, "adjacent_labels", gen_region_line, check_adjacency),
        prop!(Regions, "parity_mask", gen_region_line, check_mask),
        prop!(
            Regions,
            "interior_by_path",
            gen_region_line,
            check_interior_by_path
        ),
    ]
}

/// Names (`suite/property`) of every property in a suite.
pub fn property_ids(suite: Suite) -> Vec<String> {
    properties()
        .into_iter()
        .filter(|p| suite == Suite::All || p.suite == suite)
        .map(|p| format!("{}/{}", p.suite.name(), p.name))
        .collect()
}

fn write_counterexample(dir: &Path, id: &str, case: &Case) -> Option<PathBuf> {
    std::fs::create_dir_all(dir).ok()?;
    let path = dir.join(format!("{}.json", id.replace('/', ".")));
    let json = serde_json::to_string_pretty(&case.to_doc(id)).ok()?;
    std::fs::write(&path, json + "\n").ok()?;
    Some(path)
}

fn run_property(prop: &Property, opts: &VerifyOptions, ctx: &Ctx) -> PropertyOutcome {
    let id = format!("{}/{}", prop.suite.name(), prop.name);
    let base = CounterRng::new(opts.seed).split(fnv1a(&id));
    let mut outcome = PropertyOutcome {
        suite: prop.suite.name(),
        name: prop.name,
        cases: 0,
        failure: None,
    };
    for i in 0..opts.n {
        outcome.cases = i + 1;
        let mut rng = base.split(i as u64);
        let case = match (prop.generate)(&mut rng) {
            Ok(c) => c,
            Err(e) => {
                outcome.failure = Some(Failure {
                    case_index: i,
                    reason: format!("generation failed: {e}"),
                    shrunk: None,
                    file: None,
                });
                break;
            }
        };
        match (prop.check)(&case, ctx) {
            Ok(()) => {}
            Err(Verdict::Invalid(reason)) => {
                outcome.failure = Some(Failure {
                    case_index: i,
                    reason: format!("precondition not met: {reason}"),
                    shrunk: None,
                    file: opts
                        .counterexample_dir
                        .as_deref()
                        .and_then(|d| write_counterexample(d, &id, &case)),
                });
                break;
            }
            Err(Verdict::Fail(reason)) => {
                let small = shrink(&case, |c| {
                    matches!((prop.check)(c, ctx), Err(Verdict::Fail(_)))
                });
                let file = opts
                    .counterexample_dir
                    .as_deref()
                    .and_then(|d| write_counterexample(d, &id, &small));
                outcome.failure = Some(Failure {
                    case_index: i,
                    reason,
                    shrunk: Some(small),
                    file,
                });
                break;
            }
        }
    }
    outcome
}

/// Runs `opts.n` cases of every property in `opts.suite`.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let ctx = Ctx {
        mutation: opts.mutation,
    };
    let outcomes = properties()
        .iter()
        .filter(|p| opts.suite == Suite::All || p.suite == opts.suite)
        .map(|p| run_property(p, opts, &ctx))
        .collect();
    VerifyReport {
        suite: opts.suite,
        n: opts.n,
        seed: opts.seed,
        outcomes,
    }
}
