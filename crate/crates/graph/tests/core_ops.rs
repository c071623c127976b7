mod common;

use common::*;
use strandkit_graph::families::*;
use strandkit_graph::*;

fn plane(g: &Graph, order: Vec<Vec<usize>>) -> RotationScheme {
    RotationScheme::plane(g, order).unwrap()
}

#[test]
fn faces_of_triangle() {
    let g = cycle(3);
    let rot = plane(&g, vec![vec![1, 2], vec![2, 0], vec![0, 1]]);
    let fs = faces(&g, &rot).unwrap();
    assert_eq!(fs.len(), 2);
    assert!(fs.faces.iter().all(|f| f.len() == 3));
}

#[test]
fn faces_of_single_edge() {
    let g = path(2);
    let rot = plane(&g, vec![vec![1], vec![0]]);
    let fs = faces(&g, &rot).unwrap();
    assert_eq!(fs.len(), 1);
    assert_eq!(fs.faces[0].len(), 2);
}

#[test]
fn faces_of_planar_3tree() {
    let pg = random_planar_3tree(6, 11).unwrap();
    let fs = faces(&pg.graph, &pg.rot).unwrap();
    assert_eq!(fs.len(), 8);
    assert!(fs.faces.iter().all(|f| f.len() == 3));
}

#[test]
fn faces_reject_bad_rotation() {
    let g = cycle(3);
    let bad = RotationScheme::from_clockwise(&g, vec![vec![1, 1], vec![2, 0], vec![0, 1]]);
    assert_eq!(bad.unwrap_err(), GraphError::InconsistentRotation(0));
}

#[test]
fn counterclockwise_input_is_reversed() {
    let pg = wheel(5).unwrap();
    let ccw: Vec<Vec<usize>> = pg.rot.orders().iter().map(|o| o.iter().rev().copied().collect()).collect();
    let rot = RotationScheme::from_counterclockwise(&pg.graph, ccw).unwrap();
    assert_eq!(rot, pg.rot);
}

#[test]
fn nonplanar_scheme_fails_euler() {
    let g = complete(4);
    // a scheme of K4 that is not plane: all rotations ascending
    let order: Vec<Vec<usize>> = (0..4).map(|v| (0..4).filter(|&w| w != v).collect()).collect();
    let rot = RotationScheme::from_clockwise(&g, order.clone()).unwrap();
    if rot.euler_characteristic(&g) != 2 {
        assert!(matches!(RotationScheme::plane(&g, order), Err(GraphError::NotPlane(_))));
    }
}

#[test]
fn planarity_small_cases() {
    assert!(is_planar(&complete(4)));
    assert!(!is_planar(&complete(5)));
    assert!(!is_planar(&k33()));
    let rot = planar_embedding(&complete(4)).unwrap();
    rot.check_plane(&complete(4)).unwrap();
    assert!(planar_embedding(&complete(5)).is_none());
}

#[test]
fn planarity_exhaustive_six_vertices() {
    // YES answers are certified by the Euler check of the witness,
    // NO answers by an edge-minimal Kuratowski subdivision.
    for mask in 0..(1u64 << 15) {
        let g = from_mask(6, mask);
        if g.edge_count() == 0 {
            continue;
        }
        match planar_embedding(&g) {
            Some(rot) => {
                let rot = RotationScheme::from_clockwise(&g, rot.orders().to_vec()).unwrap();
                // faces are traced per component: 2 per component with edges, 1 per isolated vertex
                let iso = (0..6).filter(|&v| g.degree(v) == 0).count() as i64;
                let expect = 2 * (components(&g) as i64 - iso) + iso;
                assert_eq!(rot.euler_characteristic(&g), expect, "mask {mask}");
            }
            None => assert!(is_kuratowski_subdivision(&minimal_nonplanar(&g)), "mask {mask}"),
        }
    }
}

fn components(g: &Graph) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut c = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        c += 1;
        let mut st = vec![s];
        seen[s] = true;
        while let Some(v) = st.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    st.push(w);
                }
            }
        }
    }
    c
}

#[test]
fn outerplanarity_examples() {
    for n in 3..10 {
        let op = is_outerplanar(&cycle(n)).unwrap();
        assert_eq!(op.outer_face().len(), n);
    }
    assert!(is_outerplanar(&complete(4)).is_none());
    assert!(is_outerplanar(&wheel(7).unwrap().graph).is_none());
    assert!(is_outerplanar(&subdivided_k23()).is_none());
}

#[test]
fn outerplanarity_matches_book_embedding_up_to_six() {
    for n in 1..=6 {
        for mask in 0..(1u64 << (n * (n - 1) / 2)) {
            let g = from_mask(n, mask);
            if !g.is_connected() {
                continue;
            }
            let ours = is_outerplanar(&g);
            assert_eq!(ours.is_some(), has_one_page_book(&g), "n {n} mask {mask}");
            if let Some(op) = ours {
                op.rot.check_plane(&g).unwrap();
                let on = op.faces.vertices(op.outer_face_index());
                assert!((0..n).all(|v| on.contains(&v) || g.edge_count() == 0));
            }
        }
    }
}

#[test]
fn biconnect_examples() {
    let (h, added) = biconnect_outerplanar(&path(3)).unwrap();
    assert_eq!(added, vec![(0, 2)]);
    assert_eq!(h.edge_count(), 3);

    let mut star = Graph::new(4);
    for l in 1..4 {
        star.add_edge(0, l);
    }
    let (h, _) = biconnect_outerplanar(&star).unwrap();
    assert_eq!(h.n(), 4);
    assert!(is_biconnected(&h));
    assert!(is_outerplanar(&h).is_some());

    let c5 = cycle(5);
    let (h, added) = biconnect_outerplanar(&c5).unwrap();
    assert!(added.is_empty());
    assert_eq!(h, c5);

    assert_eq!(biconnect_outerplanar(&complete(4)).unwrap_err(), GraphError::NotOuterplanar);
}

#[test]
fn ear_decomposition_examples() {
    let c4 = cycle(4);
    let op = is_outerplanar(&c4).unwrap();
    let ed = ear_decomposition(&c4, &op, Some((0, 1))).unwrap();
    assert_eq!(ed.ears.len(), 1);
    assert_eq!(ed.ears[0].interior().len(), 2);

    // fan: 0 adjacent to 1..4, path 1-2-3-4
    let mut fan = path(5);
    for v in 2..5 {
        fan.add_edge(0, v);
    }
    let op = is_outerplanar(&fan).unwrap();
    let ed = ear_decomposition(&fan, &op, None).unwrap();
    assert_eq!(ed.ears.len(), 3);
    assert!(ed.ears.iter().all(|e| e.interior().len() == 1));
    assert_eq!(ed.replay(5).unwrap().sorted(), fan.clone().sorted());

    // two triangles sharing edge 1-2, rooted at 0-1
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let op = is_outerplanar(&g).unwrap();
    let ed = ear_decomposition(&g, &op, Some((0, 1))).unwrap();
    assert_eq!(ed.ears.len(), 2);
    assert_eq!(ed.replay(4).unwrap().sorted(), g.clone().sorted());
    assert_eq!(ear_decomposition(&g, &op, Some((1, 2))).unwrap_err(), GraphError::RootNotOnOuterFace(1, 2));
    assert_eq!(ear_decomposition(&path(3), &is_outerplanar(&path(3)).unwrap(), None).unwrap_err(), GraphError::NotBiconnected);
}

#[test]
fn two_tree_examples() {
    assert!(two_tree_completion(&cycle(3)).unwrap().fill_edges.is_empty());
    assert_eq!(two_tree_completion(&cycle(4)).unwrap().fill_edges.len(), 1);
    assert_eq!(two_tree_completion(&complete(4)).unwrap_err(), GraphError::NotPartialTwoTree);
    assert!(two_tree_completion(&subdivided_k23()).is_ok());
}

#[test]
fn family_counts() {
    let w3 = wheel(3).unwrap();
    assert_eq!(w3.graph.clone().sorted(), complete(4).sorted());
    let w7 = wheel(7).unwrap();
    assert_eq!((w7.graph.n(), w7.graph.edge_count(), w7.graph.degree(0)), (8, 14, 7));
    let x7 = extended_wheel(7).unwrap();
    assert_eq!((x7.graph.n(), x7.graph.edge_count()), (15, 28));
    assert_eq!(x7.graph.degree(0), 7);
    assert!((1..=7).all(|v| x7.graph.degree(v) == 5));
    assert!((8..15).all(|v| x7.graph.degree(v) == 2));
    assert_eq!(x7.graph.induced(&(0..8).collect::<Vec<_>>()).sorted(), w7.graph.clone().sorted());
    let body = x7.graph.induced(&(1..15).collect::<Vec<_>>());
    assert!(is_outerplanar(&body).is_some() && is_biconnected(&body));
    assert!(matches!(wheel(2), Err(GraphError::TooSmall { .. })));

    let k23 = subdivided_k23();
    let mut degs: Vec<usize> = (0..11).map(|v| k23.degree(v)).collect();
    degs.sort_unstable();
    assert_eq!((k23.n(), k23.edge_count()), (11, 12));
    assert_eq!(degs, [vec![2; 9], vec![3; 2]].concat());
}

#[test]
fn stellation_counts() {
    let g = cycle(3);
    let tri = PlaneGraph::new(g, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
    let s = stellate(&tri);
    assert_eq!((s.graph.n(), s.graph.edge_count(), s.face_count()), (5, 9, 6));

    let t = random_planar_3tree(6, 3).unwrap();
    let t3 = triple_stellation(&t);
    // 6 -> 14 -> 38 -> 110 vertices, always a triangulation
    assert_eq!(t3.graph.n(), 110);
    assert_eq!(t3.graph.edge_count(), 3 * 110 - 6);
    assert!(two_tree_completion(&t3.graph).is_err());
}

#[test]
fn random_generators() {
    for seed in 0..20 {
        let n = 4 + seed as usize;
        let t = random_planar_3tree(n, seed).unwrap();
        assert_eq!(t.graph.edge_count(), 3 * n - 6);
        assert_eq!(t.face_count(), 2 * n - 4);
        let m = random_maximal_outerplanar(n, seed).unwrap();
        assert_eq!(m.graph.edge_count(), 2 * n - 3);
        assert!(is_outerplanar(&m.graph).is_some());
        let p = random_partial_2tree(n, 0.6, seed).unwrap();
        assert!(p.is_connected());
        assert!(two_tree_completion(&p).is_ok());
    }
    let a = random_maximal_outerplanar(30, 9).unwrap();
    let b = random_maximal_outerplanar(30, 9).unwrap();
    assert_eq!(a.graph, b.graph);
    assert_eq!(a.rot, b.rot);
}
