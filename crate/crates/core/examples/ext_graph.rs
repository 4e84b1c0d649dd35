// Extension graphs of two relations, with DOT export.

use ncplane::coeffs::{Assignment, Rational};
use ncplane::extgraph::{build_graph, ExtGraph};
use ncplane::freealg::{FreeAlgebra, Point};
use ncplane::{Error, Result};

fn graph(relation: &str, points: &[&str]) -> Result<ExtGraph> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse(relation)?;
    let pts = points.iter().map(|p| Point::<Rational>::parse(p)).collect::<Result<Vec<_>>>()?;
    build_graph(&pts, &[f], &Assignment::new())
}

pub fn run_example() -> Result<()> {
    let cycle = graph("x*y + y*x", &["0,1", "0,-1"])?;
    println!("complete cycle: {}", cycle.has_complete_cycle());
    print!("{}", cycle.to_dot());

    let chain = graph("x*y - 2*y*x", &["0,1", "0,1/2", "0,1/4"])?;
    let (m, n) = chain.split_no_cycle()?;
    println!("chain splits as M = {m:?}, N = {n:?}");
    if !cycle.has_complete_cycle() || chain.has_complete_cycle() {
        return Err(Error::Invariant("cycle detection".into()));
    }
    let again = ExtGraph::from_json(&chain.to_json())?;
    if again != chain {
        return Err(Error::Invariant("JSON round trip".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ext_graph");
}
