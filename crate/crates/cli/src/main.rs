use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use winding_core::crossings::{boundary_pairing, crossings};
use winding_core::fmt::report;
use winding_core::io::{grid_to_json, parse_polyline, polyline_to_json, AnyPolyline};
use winding_core::regions::{
    classify_point, mobius_alexander_grid, render_svg, PointClass, RenderMode,
};
use winding_core::verify::{self, Suite, VerifyOptions};
use winding_core::winding::{
    gen_loop, gen_sector_path, gen_symmetric, gen_three_paths, w_prime, winding_number,
};
use winding_core::{ClosedPolyline, Error, OpenPolyline, Point};

#[derive(Parser)]
#[command(
    name = "winding",
    version,
    about = "Winding numbers of polygonal lines in the plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Winding number of a closed line around a point.
    Wind(PointQuery),
    /// Fractional turn count of a line around a point.
    Wprime(PointQuery),
    /// Whether a point is on the line, and its winding number otherwise.
    Classify(PointQuery),
    /// Transversal crossings between two lines.
    Cross {
        a: PathBuf,
        b: PathBuf,
        /// Print every crossing with its sign, and the signed total.
        #[arg(long)]
        signed: bool,
    },
    /// The boundary pairing of two open lines, compared with their signed crossings.
    Boundary { a: PathBuf, b: PathBuf },
    /// Colors the complement of a closed line by winding number and writes an SVG.
    Color {
        file: PathBuf,
        /// Grid size as NXxNY.
        #[arg(long, default_value = "64x64")]
        grid: String,
        #[arg(long, value_enum, default_value_t = Mode::Integer)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
        /// Also write the label grid as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Emits a generated line as polyline JSON.
    #[command(subcommand)]
    Gen(GenKind),
    /// Runs the property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where shrunk counterexamples are written.
        #[arg(long, default_value = "counterexamples")]
        counterexamples: PathBuf,
    },
}

#[derive(Args)]
struct PointQuery {
    file: PathBuf,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    point: Point,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Integer,
    Parity,
}

#[derive(Subcommand)]
enum GenKind {
    /// A triangle traversed n times around the center.
    Loop {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        center: Point,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
    },
    /// A centrally symmetric line with 2k vertices around the center.
    Symmetric {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        center: Point,
    },
    /// Three paths from a to b with pairwise windings n1, n2 and n1+n2.
    Threepaths {
        #[arg(long, allow_hyphen_values = true)]
        n1: i64,
        #[arg(long, allow_hyphen_values = true)]
        n2: i64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: Point,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: Point,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        center: Point,
    },
    /// A path between two vertices of an equilateral triangle that avoids
    /// the ray from the center through the third.
    Sector {
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        center: Point,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let x: f64 = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x coordinate: {e}"))?;
    let y: f64 = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y coordinate: {e}"))?;
    Point::try_new(x, y).map_err(|e| e.to_string())
}

/// A failed invocation: exit status plus message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::GeneralPositionViolation { .. } | Error::NonGenericIntersection(_) => 4,
            Error::PointOnLine { .. }
            | Error::EndpointOnLine { .. }
            | Error::BoundaryPoint
            | Error::IntegralityViolation { .. }
            | Error::FanBlocked { .. }
            | Error::DegeneratePoint => 3,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn read_line(path: &Path) -> Result<AnyPolyline, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse_polyline(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_closed(path: &Path) -> Result<ClosedPolyline, Failure> {
    match read_line(path)? {
        AnyPolyline::Closed(l) => Ok(l),
        AnyPolyline::Open(_) => Err(input(format!("{}: expected a closed line", path.display()))),
    }
}

fn read_open(path: &Path) -> Result<OpenPolyline, Failure> {
    match read_line(path)? {
        AnyPolyline::Open(l) => Ok(l),
        AnyPolyline::Closed(_) => Err(input(format!("{}: expected an open line", path.display()))),
    }
}

fn parse_grid(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || input(format!("grid must look like 64x64, got {s:?}"));
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn equilateral(center: Point, radius: f64) -> [Point; 3] {
    use std::f64::consts::{FRAC_PI_2, TAU};
    [0.0, 1.0, 2.0].map(|k: f64| {
        let t = FRAC_PI_2 + k * TAU / 3.0;
        center.offset(radius * t.cos(), radius * t.sin())
    })
}

fn gen(kind: GenKind) -> Result<String, Failure> {
    Ok(match kind {
        GenKind::Loop { n, center, radius } => polyline_to_json(&gen_loop(n, center, radius)?),
        GenKind::Symmetric { k, seed, center } => {
            polyline_to_json(&gen_symmetric(k, center, seed)?)
        }
        GenKind::Threepaths {
            n1,
            n2,
            a,
            b,
            center,
        } => {
            let (l1, l2, l3) = gen_three_paths(n1, n2, a, b, center)?;
            let docs = [&l1, &l2, &l3].map(polyline_to_json);
            format!("[{}]", docs.join(","))
        }
        GenKind::Sector {
            j,
            seed,
            center,
            radius,
        } => {
            if !(radius.is_finite() && radius > 0.0) {
                return Err(input("radius must be positive"));
            }
            polyline_to_json(&gen_sector_path(
                j,
                equilateral(center, radius),
                center,
                seed,
            )?)
        }
    })
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Wind(q) => {
            let l = read_closed(&q.file)?;
            let r = winding_number(&l, q.point)?;
            out = format!("w={} residual={}\n", r.w, report(r.residual));
        }
        Command::Wprime(q) => {
            let l = match read_line(&q.file)? {
                AnyPolyline::Open(l) => l,
                AnyPolyline::Closed(l) => l.unrolled(),
            };
            out = format!("w'={}\n", report(w_prime(&l, q.point)?.value()));
        }
        Command::Classify(q) => {
            let l = read_closed(&q.file)?;
            out = match classify_point(&l, q.point) {
                PointClass::OnBoundary => "boundary\n".to_string(),
                PointClass::Off { winding } => {
                    format!("off w={winding} parity={}\n", winding.rem_euclid(2))
                }
            };
        }
        Command::Cross { a, b, signed } => {
            let (la, lb) = (read_line(&a)?, read_line(&b)?);
            let r = crossings(la.as_dyn(), lb.as_dyn())?;
            if signed {
                for c in &r.crossings {
                    out += &format!(
                        "({},{}) {:+}\n",
                        report(c.point.x),
                        report(c.point.y),
                        c.sign
                    );
                }
                out += &format!("count={} signed={}\n", r.count, r.signed_sum);
            } else {
                out = format!("count={}\n", r.count);
            }
        }
        Command::Boundary { a, b } => {
            let (l, p) = (read_open(&a)?, read_open(&b)?);
            let d = boundary_pairing(&l, &p)?;
            let c = crossings(&l, &p)?;
            out = format!(
                "∂={} l·p={} agree={} value={} residual={}\n",
                d.rounded,
                c.signed_sum,
                if d.rounded == c.signed_sum {
                    "yes"
                } else {
                    "no"
                },
                report(d.value),
                report(d.residual)
            );
        }
        Command::Color {
            file,
            grid,
            mode,
            out: svg_path,
            json,
        } => {
            let (nx, ny) = parse_grid(&grid)?;
            let l = read_closed(&file)?;
            let g = mobius_alexander_grid(&l, nx, ny)?;
            let mode = match mode {
                Mode::Integer => RenderMode::Integer,
                Mode::Parity => RenderMode::Parity,
            };
            write_file(&svg_path, &render_svg(&l, &g, mode))?;
            if let Some(path) = json {
                write_file(&path, &grid_to_json(&g))?;
            }
            for (label, cells) in g.histogram() {
                match label {
                    Some(k) => out += &format!("label={k} cells={cells}\n"),
                    None => out += &format!("label=boundary cells={cells}\n"),
                }
            }
        }
        Command::Gen(kind) => {
            out = gen(kind)?;
            out.push('\n');
        }
        Command::Verify {
            suite,
            n,
            seed,
            counterexamples,
        } => {
            let mut opts = VerifyOptions::new(suite, n, seed);
            opts.counterexample_dir = Some(counterexamples);
            if cfg!(feature = "inject-sign-flip") {
                opts.mutation = Some(verify::Mutation::FlipCrossingSigns);
            }
            let r = verify::run(&opts);
            return Ok((r.render(), if r.passed() { 0 } else { 1 }));
        }
    }
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
