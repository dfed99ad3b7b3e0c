use winding_core::io::CounterexampleDoc;
use winding_core::testkit::{gen_general_position_pair, shrink, Case, CaseLine, GenConfig};
use winding_core::verify::{property_ids, run, Mutation, Suite, VerifyOptions};
use winding_core::winding::winding_number;
use winding_core::Point;

#[test]
fn generators_are_pure_functions_of_the_config() {
    for seed in [0, 1, 42, u64::MAX] {
        let cfg = GenConfig::with_seed(seed);
        let a = gen_general_position_pair(&cfg).unwrap();
        let b = gen_general_position_pair(&cfg).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}

#[test]
fn reports_are_reproducible() {
    let opts = VerifyOptions::new(Suite::All, 20, 7);
    assert_eq!(run(&opts).render(), run(&opts).render());
    let other = run(&VerifyOptions::new(Suite::All, 20, 8));
    assert!(other.passed());
}

#[test]
fn every_suite_passes_separately() {
    for s in [
        Suite::Angles,
        Suite::Winding,
        Suite::Stokes,
        Suite::Boundary,
        Suite::Regions,
    ] {
        let r = run(&VerifyOptions::new(s, 50, 1));
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.outcomes.len(), property_ids(s).len());
    }
}

#[test]
fn sign_flip_is_caught_and_shrunk() {
    let dir = tempfile::tempdir().unwrap();
    let mut opts = VerifyOptions::new(Suite::All, 200, 42);
    opts.mutation = Some(Mutation::FlipCrossingSigns);
    opts.counterexample_dir = Some(dir.path().to_path_buf());
    let r = run(&opts);
    assert!(!r.passed());
    let failed: Vec<_> = r.outcomes.iter().filter(|o| o.failure.is_some()).collect();
    assert!(failed.iter().any(|o| o.id() == "stokes/signed_jump"));
    for o in failed {
        let f = o.failure.as_ref().unwrap();
        let shrunk = f.shrunk.as_ref().unwrap();
        assert!(
            shrunk.vertex_count() <= 8,
            "{} kept {} vertices",
            o.id(),
            shrunk.vertex_count()
        );
        let text = std::fs::read_to_string(f.file.as_ref().unwrap()).unwrap();
        let doc: CounterexampleDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.property, o.id());
    }
    assert!(r.render().contains("FAIL stokes/signed_jump"));
}

#[test]
fn shrinking_keeps_the_failure() {
    let pts = [
        (-90.0, -85.0),
        (1.0, -99.0),
        (87.0, -70.0),
        (99.0, 12.0),
        (60.0, 88.0),
        (-15.0, 96.0),
    ];
    let case = Case {
        lines: vec![CaseLine {
            closed: true,
            points: pts.iter().map(|&(x, y)| Point::new(x, y)).collect(),
        }],
        points: vec![Point::new(5.0, 3.0)],
        params: vec![],
    };
    // Pretend every line winding around its point is a bug.
    let fails = |c: &Case| {
        let Ok(l) = c.lines[0].as_closed() else {
            return false;
        };
        matches!(winding_number(&l, c.points[0]), Ok(r) if r.w != 0)
    };
    let small = shrink(&case, fails);
    assert!(fails(&small));
    assert_eq!(small.lines[0].points.len(), 3);
}
