use qgraph::cert::{alpha_gap_witness, certificate_from_clique_partition, verify, Certificate, GapWitness};
use qgraph::embed::{gp_graph, gp_table_partition, piovesan_flip_signs, piovesan_vectors, sign_flip};
use qgraph::field::{er_graph, er_prime_graph, g13};
use qgraph::graph::orthogonality_graph;
use qgraph::perm::{find_isomorphism, verify_isomorphism};
use qgraph::solve::{max_independent_set, SolveOptions};
use qgraph::{Graph, InnerProduct, VectorSet};

#[test]
fn graph_and_vectors_survive_json() {
    let vs = piovesan_vectors();
    let back = VectorSet::from_json(&vs.to_json()).unwrap();
    assert_eq!(back, vs);
    let g = orthogonality_graph(&back, InnerProduct::Rational).unwrap();
    assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    assert_eq!(g.edges(), gp_graph().edges());
}

#[test]
fn certificate_survives_json_and_still_certifies() {
    let g = gp_graph();
    let c = certificate_from_clique_partition(&piovesan_vectors(), &gp_table_partition()).unwrap();
    let back = Certificate::from_json(&c.to_json()).unwrap();
    assert_eq!(back.to_json(), c.to_json());
    assert!(verify(&back, &g).unwrap().valid);
    assert_eq!(
        alpha_gap_witness(&g, &back, &SolveOptions::default()).unwrap(),
        GapWitness::KochenSpecker
    );
}

#[test]
fn flipped_table_gives_the_same_graph() {
    let flipped = sign_flip(&piovesan_vectors(), &piovesan_flip_signs()).unwrap();
    let g = orthogonality_graph(&flipped, InnerProduct::Rational).unwrap();
    assert_eq!(g.edges(), gp_graph().edges());
    assert_eq!(max_independent_set(&g, &SolveOptions::default()).unwrap().value, 5);
}

#[test]
fn er3_and_g13_agree() {
    let g = g13();
    for h in [er_graph(3).unwrap(), er_prime_graph(3).unwrap()] {
        let m = find_isomorphism(&h, &g).expect("isomorphic to G_13");
        assert!(verify_isomorphism(&h, &g, &m).unwrap());
    }
}

#[test]
fn dot_output_lists_every_edge() {
    let g = gp_graph();
    let dot = g.to_dot();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), g.edge_count());
}
