use alternator::augment::augment_regions;
use alternator::codec::{emit_pd, parse_augmented_pd, parse_pd};
use alternator::merge::full_pipeline;
use alternator::samples;
use alternator::verify::{restriction, verify};
use alternator::{Diagram, Sign, Tag, TagFilter};

// Counts augmenting circles straight from the face structure of the input:
// pair the non-alternating incidences of every face as (1,2),(3,4),... and
// join the paired edges with union-find.
fn traced_circle_count(d: &Diagram) -> usize {
    let nonalt: Vec<bool> = (0..d.edge_count()).map(|e| !d.edge_labels(e).class.is_alternating()).collect();
    let mut parent: Vec<usize> = (0..d.edge_count()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for face in d.faces() {
        let hits: Vec<usize> = face.darts.iter().map(|&x| d.edge_of(x)).filter(|&e| nonalt[e]).collect();
        assert_eq!(hits.len() % 2, 0);
        for pair in hits.chunks(2) {
            let (a, b) = (root(&mut parent, pair[0]), root(&mut parent, pair[1]));
            parent[a] = b;
        }
    }
    let mut roots: Vec<usize> =
        (0..d.edge_count()).filter(|&e| nonalt[e]).map(|e| root(&mut parent, e)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

#[test]
fn sample_knots_are_single_component_diagrams() {
    for (name, pd) in samples::ALL {
        let d = parse_pd(pd).unwrap();
        assert_eq!(d.strand_components(TagFilter::Any).len(), 1, "{name}");
        assert_eq!(d.euler_characteristic(), 2, "{name}");
    }
    assert!(parse_pd(samples::TREFOIL).unwrap().is_alternating());
    assert!(samples::by_name("8_20").is_some());
    assert!(samples::by_name("unknot").is_none());
}

#[test]
fn flipped_trefoil_labels() {
    let code = alternator::codec::PdCode::parse(samples::FLIPPED_TREFOIL).unwrap();
    let d = code.to_diagram().unwrap();
    let class_of = |label| d.edge_labels(code.edge_of_label(&d, label).unwrap()).ends;
    assert_eq!(class_of(1), [Sign::Plus, Sign::Plus]);
    assert_eq!(class_of(2), [Sign::Plus, Sign::Plus]);
    assert_eq!(class_of(4), [Sign::Minus, Sign::Minus]);
    assert_eq!(class_of(5), [Sign::Minus, Sign::Minus]);
    assert_eq!(d.non_alternating_edges().len(), 4);
}

#[test]
fn augmentation_circle_count_matches_face_tracing() {
    for (name, pd) in samples::ALL {
        let d = parse_pd(pd).unwrap();
        let a = augment_regions(&d).unwrap();
        assert_eq!(a.circles().len(), traced_circle_count(&d), "{name}");
        assert_eq!(a.circles_of().unwrap().len(), a.circles().len(), "{name}");
    }
    let flipped = parse_pd(samples::FLIPPED_TREFOIL).unwrap();
    assert_eq!(augment_regions(&flipped).unwrap().circles().len(), 1);
}

#[test]
fn pipeline_on_every_sample() {
    for (name, pd) in samples::ALL {
        let d = parse_pd(pd).unwrap();
        let out = full_pipeline(&d).unwrap();
        let expected = if d.is_alternating() { 0 } else { 1 };
        let report = verify(&d, &out, expected);
        assert!(report.all_pass(), "{name}: {:?}", report.failures());
        assert_eq!(restriction(&out).unwrap(), d, "{name}");
    }
}

#[test]
fn emitted_pd_reparses_to_the_same_augmentation() {
    for (name, pd) in samples::ALL {
        let d = parse_pd(pd).unwrap();
        let out = full_pipeline(&d).unwrap();
        let text = emit_pd(out.diagram());
        let back = parse_augmented_pd(&text).unwrap();
        assert_eq!(back.circles().len(), out.circles().len(), "{name}");
        assert_eq!(back.diagram().crossing_count(), out.diagram().crossing_count(), "{name}");
        assert_eq!(emit_pd(back.diagram()), text, "{name}");
        let tags = |x: &Diagram| x.darts().filter(|&t| x.tag_of(t) == Tag::Augment).count();
        assert_eq!(tags(back.diagram()), tags(out.diagram()), "{name}");
        assert!(verify(&d, &back, out.circles().len()).restriction_ok, "{name}");
    }
}

#[test]
fn granny_has_one_two_edge_circle() {
    let d = parse_pd(samples::GRANNY).unwrap();
    let nonalt = d.non_alternating_edges();
    assert_eq!(nonalt.len(), 2);
    let classes: Vec<_> = nonalt.iter().map(|&e| d.edge_labels(e).ends[0]).collect();
    assert!(classes.contains(&Sign::Plus) && classes.contains(&Sign::Minus));
    let a = augment_regions(&d).unwrap();
    assert_eq!(a.diagram().crossing_count(), 8);
    assert_eq!(a.circles().len(), 1);
    assert_eq!(a.circles()[0].edges(a.diagram()).len(), 2);
}

#[test]
fn type_i_on_two_circle_fixture() {
    use alternator::moves::{type_i_merge, MoveSite};
    let d = parse_pd(samples::TWO_CIRCLES).unwrap();
    let a = augment_regions(&d).unwrap();
    assert_eq!(a.circles().len(), 2);
    assert!(a.circles().iter().all(|c| c.edges(a.diagram()).len() == 2));
    let site = a
        .diagram()
        .faces()
        .iter()
        .find_map(|f| {
            let on = |c| f.darts.iter().copied().find(|&x| a.circle_of_dart(x) == Some(c));
            Some(MoveSite { face: f.id, a: on(0)?, b: on(1)? })
        })
        .unwrap();
    let merged = type_i_merge(&a, site).unwrap();
    assert_eq!(merged.circles().len(), 1);
    assert_eq!(merged.diagram().crossing_count(), a.diagram().crossing_count());
    assert!(merged.diagram().is_alternating());
    assert_eq!(restriction(&merged).unwrap(), d);
}
