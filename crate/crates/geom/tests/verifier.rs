use strandkit_geom::json::{rep_from_json, rep_to_json};
use strandkit_geom::*;
use strandkit_graph::{Graph, RotationScheme};

fn p(x: i64, y: i64) -> Pt {
    Pt::int(x, y)
}

fn curve(v: usize, pts: &[(i64, i64)]) -> Curve {
    Curve::new(v, pts.iter().map(|&(x, y)| p(x, y)).collect())
}

fn circle(r2: i64) -> Option<ContourWitness> {
    Some(ContourWitness::Circle { center: p(0, 0), r2: rat(r2, 1) })
}

#[test]
fn segment_examples() {
    let hit = segment_intersection(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).unwrap();
    assert_eq!(hit, SegHit::Point(p(1, 1)));
    assert_eq!(segment_intersection(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)).unwrap(), SegHit::None);
    assert_eq!(segment_intersection(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)).unwrap(), SegHit::Overlap);
    assert_eq!(segment_intersection(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)).unwrap(), SegHit::Point(p(1, 0)));
    assert!(matches!(
        segment_intersection(&p(0, 0), &p(0, 0), &p(1, 0), &p(3, 0)),
        Err(GeomError::DegenerateSegment(_))
    ));
    let half = Pt::new(rat(1, 2), rat(1, 2));
    assert_eq!(segment_intersection(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 0)).unwrap(), SegHit::Point(half));
}

#[test]
fn diameters_cross_once() {
    let rep = StringRep { curves: vec![curve(0, &[(-5, 0), (5, 0)]), curve(1, &[(0, -5), (0, 5)])], witness: circle(25) };
    let prof = crossing_profile(&rep).unwrap();
    assert_eq!(prof.count(0, 1), 1);
    assert_eq!(prof.sequences[&0], vec![1]);
    assert_eq!(prof.sequences[&1], vec![0]);
    verify_outer_string(&rep, OuterMode::BothEnds).unwrap();
}

#[test]
fn bend_resting_on_curve_is_touching() {
    let rep = StringRep::new(vec![curve(0, &[(-2, 0), (2, 0)]), curve(1, &[(-1, 1), (0, 0), (1, 1)])]);
    assert!(matches!(crossing_profile(&rep), Err(GeomError::TouchingPoint(0, 1, _))));
    // the same bend pushed through is a proper crossing at the bend
    let rep = StringRep::new(vec![curve(0, &[(-2, 0), (2, 0)]), curve(1, &[(-1, 1), (0, 0), (1, -1)])]);
    assert_eq!(crossing_profile(&rep).unwrap().count(0, 1), 1);
}

#[test]
fn forbidden_configurations() {
    let triple = StringRep::new(vec![
        curve(0, &[(-2, 0), (2, 0)]),
        curve(1, &[(0, -2), (0, 2)]),
        curve(2, &[(-2, -2), (2, 2)]),
    ]);
    assert!(matches!(crossing_profile(&triple), Err(GeomError::TripleIntersection(_))));
    let overlap = StringRep::new(vec![curve(0, &[(0, 0), (2, 0)]), curve(1, &[(1, 0), (3, 0)])]);
    assert_eq!(crossing_profile(&overlap).unwrap_err(), GeomError::CurveOverlap(0, 1));
    let ending = StringRep::new(vec![curve(0, &[(0, 0), (2, 0)]), curve(1, &[(1, 0), (1, 3)])]);
    assert_eq!(crossing_profile(&ending).unwrap_err(), GeomError::EndpointOnCurve(1, 0));
    let selfx = StringRep::new(vec![curve(0, &[(0, 0), (2, 2), (2, 0), (0, 2)])]);
    assert!(matches!(crossing_profile(&selfx), Err(GeomError::BadCurve(0, _))));
}

#[test]
fn one_string_failures_name_the_pair() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let missing = StringRep::new(vec![
        curve(0, &[(0, 0), (0, 4)]),
        curve(1, &[(-1, 1), (5, 1)]),
        curve(2, &[(10, 0), (10, 4)]),
    ]);
    assert_eq!(verify_1string(&missing, &g).unwrap_err(), GeomError::CrossingCount(1, 2, 0, 1));
    let twice = StringRep::new(vec![
        curve(0, &[(0, 0), (0, 4)]),
        curve(1, &[(-1, 1), (1, 1), (1, 3), (-1, 3)]),
        curve(2, &[(-2, 2), (3, 2)]),
    ]);
    assert_eq!(verify_1string(&twice, &g).unwrap_err(), GeomError::CrossingCount(0, 1, 2, 1));
}

/// Star with center 0 drawn as a horizontal segment crossed by vertical
/// leaves at x = 1..=4 in the order given.
fn star(order: &[usize]) -> StringRep {
    let mut curves = vec![curve(0, &[(0, 0), (5, 0)])];
    for (i, &leaf) in order.iter().enumerate() {
        let x = i as i64 + 1;
        curves.push(curve(leaf, &[(x, -1), (x, 1)]));
    }
    StringRep::new(curves)
}

#[test]
fn order_preservation_on_a_star() {
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let mut order = vec![vec![1, 2, 3, 4]];
    order.extend((1..5).map(|_| vec![0]));
    let rot = RotationScheme::from_clockwise(&g, order).unwrap();
    assert!(verify_order_preserving(&star(&[3, 4, 1, 2]), &g, &rot, false).is_ok());
    assert!(verify_order_preserving(&star(&[2, 1, 4, 3]), &g, &rot, false).is_ok());
    assert!(matches!(verify_order_preserving(&star(&[2, 1, 4, 3]), &g, &rot, true), Err(GeomError::OrderViolation { v: 0, .. })));
    let shuffled = verify_order_preserving(&star(&[1, 3, 2, 4]), &g, &rot, false);
    assert!(matches!(shuffled, Err(GeomError::OrderViolation { v: 0, .. })));
}

#[test]
fn triangle_is_always_order_preserving() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    let rep = StringRep::new(vec![
        curve(0, &[(0, 0), (10, 0)]),
        curve(1, &[(2, -1), (6, 5)]),
        curve(2, &[(8, -1), (4, 5)]),
    ]);
    for order in [vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![vec![2, 1], vec![0, 2], vec![1, 0]]] {
        let rot = RotationScheme::from_clockwise(&g, order).unwrap();
        verify_order_preserving(&rep, &g, &rot, false).unwrap();
    }
}

#[test]
fn outer_string_witness_checks() {
    let base = vec![curve(0, &[(0, 0), (2, 2)]), curve(1, &[(0, 2), (2, 0)])];
    let mut rep = StringRep::new(base.clone());
    assert_eq!(verify_outer_string(&rep, OuterMode::BothEnds).unwrap_err(), GeomError::MissingWitness);
    rep.witness = Some(ContourWitness::Polyline(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]));
    verify_outer_string(&rep, OuterMode::BothEnds).unwrap();
    // a square that cuts through both curves
    rep.witness = Some(ContourWitness::Polyline(vec![p(0, 0), p(1, 0), p(1, 3), p(0, 3)]));
    assert!(matches!(verify_outer_string(&rep, OuterMode::AtLeastOneEnd), Err(GeomError::WitnessCrossesCurve(_))));
    // larger square: curves inside, ends not on it
    rep.witness = Some(ContourWitness::Polyline(vec![p(-1, -1), p(3, -1), p(3, 3), p(-1, 3)]));
    assert_eq!(verify_outer_string(&rep, OuterMode::AtLeastOneEnd).unwrap_err(), GeomError::EndpointNotOnContour(0));
    // one end on the contour suffices in AtLeastOneEnd mode
    let rep2 = StringRep {
        curves: vec![curve(0, &[(0, 0), (1, 1)]), curve(1, &[(0, 2), (2, 0)])],
        witness: Some(ContourWitness::Polyline(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)])),
    };
    verify_outer_string(&rep2, OuterMode::AtLeastOneEnd).unwrap();
    assert_eq!(verify_outer_string(&rep2, OuterMode::BothEnds).unwrap_err(), GeomError::EndpointNotOnContour(0));
    // circle that is too small
    let rep3 = StringRep { curves: base, witness: circle(1) };
    assert!(matches!(verify_outer_string(&rep3, OuterMode::AtLeastOneEnd), Err(GeomError::CurveOutsideWitness(_))));
}

#[test]
fn svg_is_deterministic_and_valid_when_empty() {
    let empty = emit_svg(&StringRep::default(), &SvgOptions::default());
    assert!(empty.starts_with("<svg") && empty.trim_end().ends_with("</svg>"));
    let rep = StringRep { curves: vec![curve(0, &[(-5, 0), (5, 0)]), curve(1, &[(0, -5), (0, 5)])], witness: circle(25) };
    let a = emit_svg(&rep, &SvgOptions { mark_crossings: true, ..Default::default() });
    assert_eq!(a, emit_svg(&rep, &SvgOptions { mark_crossings: true, ..Default::default() }));
    assert_eq!(a.matches("<polyline").count(), 2);
    assert!(a.contains("stroke-dasharray"));
}

#[test]
fn json_round_trip() {
    let big = "123456789012345678901234567890".parse().unwrap();
    let rep = StringRep {
        curves: vec![
            Curve::new(3, vec![Pt::new(rat(1, 3), rat(-2, 7)), Pt::new(Rat::new(big, 7.into()), rat(0, 1))]),
            curve(0, &[(0, 0), (1, 1), (2, 0)]),
        ],
        witness: Some(ContourWitness::Polyline(vec![p(0, 0), p(1, 0), p(0, 1)])),
    };
    let text = rep_to_json(&rep);
    let back = rep_from_json(&text).unwrap();
    assert_eq!(back.curves.len(), 2);
    assert_eq!(back.curve(3), rep.curve(3));
    assert_eq!(back.witness, rep.witness);
    let circ = StringRep { curves: vec![], witness: circle(4) };
    assert_eq!(rep_from_json(&rep_to_json(&circ)).unwrap(), circ);
    for bad in ["", "[]", r#"{"curves":{"a":[]}}"#, r#"{"curves":{"0":[[1,0,1,1]]}}"#, r#"{"curves":{},"witness":{"square":1}}"#] {
        assert!(rep_from_json(bad).is_err(), "{bad}");
    }
}
