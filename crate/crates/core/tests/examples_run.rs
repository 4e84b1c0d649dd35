macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(nc_derivatives);
example!(taylor_expansion);
example!(ext_between_points);
example!(ext_between_modules);
example!(relation_ideal);
example!(ext_graph);
example!(trace_reduction);
example!(representation_variety);
example!(quadric_classification);
example!(quantum_plane);
example!(circle_rotation);
example!(degenerate_pairs);
example!(cusp);
example!(elliptic_partners);
example!(commutator_membership);
example!(factor_ext);
example!(acceptance_suite);

#[test]
fn algebra_examples_run() {
    nc_derivatives::run_example().expect("nc_derivatives");
    taylor_expansion::run_example().expect("taylor_expansion");
    representation_variety::run_example().expect("representation_variety");
    trace_reduction::run_example().expect("trace_reduction");
    commutator_membership::run_example().expect("commutator_membership");
}

#[test]
fn ext_examples_run() {
    ext_between_points::run_example().expect("ext_between_points");
    ext_between_modules::run_example().expect("ext_between_modules");
    relation_ideal::run_example().expect("relation_ideal");
    ext_graph::run_example().expect("ext_graph");
    factor_ext::run_example().expect("factor_ext");
}

#[test]
fn family_examples_run() {
    quadric_classification::run_example().expect("quadric_classification");
    quantum_plane::run_example().expect("quantum_plane");
    circle_rotation::run_example().expect("circle_rotation");
    degenerate_pairs::run_example().expect("degenerate_pairs");
    cusp::run_example().expect("cusp");
    elliptic_partners::run_example().expect("elliptic_partners");
}

#[test]
fn acceptance_example_runs() {
    acceptance_suite::run_example().expect("acceptance_suite");
}

#[test]
fn every_example_is_included() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");
    let here = include_str!("examples_run.rs");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned();
        assert!(here.contains(&format!("example!({name});")), "{name} is not exercised");
    }
}
