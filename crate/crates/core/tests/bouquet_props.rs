use std::collections::BTreeMap;

use twuality::binary::intersection_graph;
use twuality::format::{parse_chord_diagram, write_chord_diagram};
use twuality::mask::all_subsets;
use twuality::oracle::{enumerate_signed_chord_diagrams, sample_signed_chord_diagrams};
use twuality::{RWord, SignedChordDiagram, SubsetMask, WidthPolynomial};

fn all_diagrams() -> Vec<SignedChordDiagram> {
    (1..=3)
        .flat_map(|m| enumerate_signed_chord_diagrams(m).unwrap())
        .collect()
}

#[test]
fn genus_equals_width() {
    for b in all_diagrams()
        .into_iter()
        .chain(sample_signed_chord_diagrams(4, 200, 9))
    {
        let d = b.delta_matroid().unwrap();
        assert_eq!(b.euler_genus(), d.width().unwrap(), "{b}");
    }
}

#[test]
fn bouquet_delta_matroids_are_vf_safe() {
    for b in all_diagrams() {
        let d = b.delta_matroid().unwrap();
        assert!(d.is_normal() && d.is_vf_safe(), "{b}");
    }
}

#[test]
fn petrials_are_loop_complements() {
    for b in all_diagrams() {
        let d = b.delta_matroid().unwrap();
        for a in all_subsets(b.m()) {
            assert_eq!(
                b.petrial(a).delta_matroid().unwrap(),
                d.loop_complement(a),
                "{b} at {a:?}"
            );
        }
    }
}

#[test]
fn interleavement_is_the_intersection_graph() {
    for b in all_diagrams() {
        let d = b.delta_matroid().unwrap();
        assert_eq!(intersection_graph(&d).unwrap(), b.interleavement_graph(), "{b}");
    }
}

#[test]
fn the_graph_determines_the_polynomials() {
    let mut by_graph: BTreeMap<(usize, Vec<u64>), Vec<Vec<WidthPolynomial>>> = BTreeMap::new();
    for b in all_diagrams() {
        let polys = RWord::twualities()
            .iter()
            .map(|w| b.twuality_polynomial(w).unwrap())
            .collect();
        by_graph
            .entry((b.m(), b.interleavement_graph().adjacency().rows().to_vec()))
            .or_default()
            .push(polys);
    }
    for group in by_graph.values() {
        assert!(group.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn rotation_changes_nothing_measurable() {
    for b in all_diagrams() {
        for k in 0..2 * b.m() {
            let r = b.rotate(k);
            assert_eq!(r.euler_genus(), b.euler_genus());
            assert_eq!(r.delta_matroid().unwrap(), b.delta_matroid().unwrap());
        }
    }
}

#[test]
fn face_counts_examples() {
    let cd = |text: &str| parse_chord_diagram(text).unwrap();
    // A plane loop, a twisted loop and an interlaced pair (a torus).
    let plane = cd("word: a a\ntwisted:\n");
    assert_eq!(plane.boundary_components(SubsetMask::EMPTY).unwrap(), 1);
    assert_eq!(plane.boundary_components(SubsetMask::full(1)).unwrap(), 2);
    assert_eq!(cd("word: a a\ntwisted: a\n").euler_genus(), 1);
    assert_eq!(cd("word: a b a b\ntwisted:\n").euler_genus(), 2);
    assert_eq!(cd("word: a a b b\ntwisted:\n").euler_genus(), 0);
}

#[test]
fn text_round_trip() {
    for b in all_diagrams() {
        assert_eq!(parse_chord_diagram(&write_chord_diagram(&b)).unwrap(), b);
    }
}
