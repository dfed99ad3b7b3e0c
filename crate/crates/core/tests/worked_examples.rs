use winding_core::crossings::{boundary_pairing, crossings};
use winding_core::geom::in_general_position;
use winding_core::winding::{gen_loop, gen_symmetric_spiral, winding_number};
use winding_core::{ClosedPolyline, OpenPolyline, Point, Polyline};

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn closed(v: &[(f64, f64)]) -> ClosedPolyline {
    ClosedPolyline::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

fn open(v: &[(f64, f64)]) -> OpenPolyline {
    OpenPolyline::new(v.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

#[test]
fn triangle_and_quadrilateral() {
    let o = Point::ORIGIN;
    let abc = closed(&[(2.0, -1.0), (0.5, 2.0), (-2.0, -1.5)]);
    assert_eq!(winding_number(&abc, o).unwrap().w, 1);
    // O lies outside, beyond the side DA.
    let abcd = closed(&[(1.0, -1.0), (3.0, -0.5), (3.0, 1.5), (1.0, 1.0)]);
    assert_eq!(winding_number(&abcd, o).unwrap().w, 0);
}

#[test]
fn doubled_triangle() {
    let o = p(0.1, 0.2);
    let abc = closed(&[(2.0, -1.0), (0.5, 2.0), (-2.0, -1.5)]);
    let mut twice = abc.points().to_vec();
    twice.extend_from_slice(abc.points());
    let twice = ClosedPolyline::new(twice).unwrap();
    assert_eq!(
        winding_number(&twice, o).unwrap().w,
        2 * winding_number(&abc, o).unwrap().w
    );
    assert_eq!(winding_number(&twice.reverse(), o).unwrap().w, -2);
}

#[test]
fn degenerate_lines_wind_zero_everywhere() {
    let (a, b, c) = ((1.0, 2.0), (-1.0, 0.5), (2.0, -2.0));
    for l in [closed(&[a]), closed(&[a, b]), closed(&[a, b, c, b])] {
        for o in [p(0.0, 0.0), p(0.3, 0.1), p(-5.0, 4.0), p(1.5, 0.0)] {
            assert_eq!(winding_number(&l, o).unwrap().w, 0);
        }
    }
}

#[test]
fn loops_of_every_multiplicity() {
    for n in -4..=4 {
        let l = gen_loop(n, p(3.0, -2.0), 0.5).unwrap();
        assert_eq!(winding_number(&l, p(3.0, -2.0)).unwrap().w, n);
        assert_eq!(
            l.len(),
            if n == 0 {
                1
            } else {
                3 * n.unsigned_abs() as usize
            }
        );
    }
}

#[test]
fn symmetric_line_winding_three_times() {
    let l = gen_symmetric_spiral(3, 5, Point::ORIGIN, 11).unwrap();
    assert_eq!(l.len(), 10);
    assert_eq!(winding_number(&l, Point::ORIGIN).unwrap().w, 3);
}

#[test]
fn four_crossings_with_pairing_two() {
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
    assert!(in_general_position(&all));
    let r = crossings(&l, &q).unwrap();
    assert_eq!(r.count, 4);
    assert_eq!(r.signed_sum.abs(), 2);
    assert_eq!(boundary_pairing(&l, &q).unwrap().rounded, r.signed_sum);
}
