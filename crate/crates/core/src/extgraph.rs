//! Directed extension graphs on finitely many simple modules.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::coeffs::{Assignment, Scalar};
use crate::error::{Error, Result};
use crate::extcalc::{ext1_dim_points, ExtOptions};
use crate::freealg::{NCPoly, Point};

/// Vertices carry coordinate labels; an edge `(i, j)` means Ext¹(V_i, V_j) ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtGraph {
    vertices: Vec<Vec<String>>,
    edges: BTreeSet<(usize, usize)>,
}

impl ExtGraph {
    /// A graph on abstract labels; rejects out-of-range endpoints.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::with_coords(labels.into_iter().map(|l| vec![l]).collect(), edges)
    }

    pub fn with_coords<I>(vertices: Vec<Vec<String>>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = vertices.len();
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), len: n });
            }
            set.insert((i, j));
        }
        Ok(ExtGraph { vertices, edges: set })
    }

    /// `n` unlabeled vertices named `0..n`.
    pub fn unlabeled<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vec<String>] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: v, len: self.len() })
        }
    }

    fn closure(&self, v: usize, forward: bool) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut stack = vec![v];
        while let Some(a) = stack.pop() {
            for &(i, j) in &self.edges {
                let (from, to) = if forward { (i, j) } else { (j, i) };
                if from == a && seen.insert(to) {
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// E(v): everything reachable from `v`, including `v`.
    pub fn successors(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(self.closure(v, true))
    }

    /// P(v): everything that reaches `v`, including `v`.
    pub fn precursors(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check_vertex(v)?;
        Ok(self.closure(v, false))
    }

    /// A closed walk through every vertex: strong connectivity, plus a self-loop when
    /// there is a single vertex.
    pub fn has_complete_cycle(&self) -> bool {
        match self.len() {
            0 => false,
            1 => self.has_edge(0, 0),
            n => self.closure(0, true).len() == n && self.closure(0, false).len() == n,
        }
    }

    /// `(M, N)` with `M = E(ν)` for the lowest-index ν whose successor set is proper, and
    /// `N` its complement; no edge leads from `M` to `N`.
    pub fn split_no_cycle(&self) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
        for v in 0..self.len() {
            let m = self.closure(v, true);
            if m.len() < self.len() {
                let n: BTreeSet<usize> = (0..self.len()).filter(|i| !m.contains(i)).collect();
                return Ok((m, n));
            }
        }
        Err(Error::precondition(if self.is_empty() {
            "cannot split an empty graph"
        } else {
            "every successor set is the whole vertex set"
        }))
    }

    /// A necessary condition for a smooth completion point; not sufficient.
    pub fn completion_candidate_filter(&self) -> bool {
        self.has_complete_cycle()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        let vertices = v["vertices"]
            .as_array()
            .ok_or_else(|| bad("missing `vertices` array"))?
            .iter()
            .map(|c| match c {
                Value::Array(items) => items
                    .iter()
                    .map(|s| match s {
                        Value::String(s) => Ok(s.clone()),
                        Value::Number(n) => Ok(n.to_string()),
                        _ => Err(bad("vertex coordinates must be strings or numbers")),
                    })
                    .collect::<Result<Vec<String>>>(),
                Value::String(s) => Ok(vec![s.clone()]),
                _ => Err(bad("vertex must be an array or a label")),
            })
            .collect::<Result<Vec<_>>>()?;
        let edges = v["edges"]
            .as_array()
            .ok_or_else(|| bad("missing `edges` array"))?
            .iter()
            .map(|e| {
                let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("edge must be a pair"))?;
                let idx = |x: &Value| x.as_u64().map(|u| u as usize).ok_or_else(|| bad("edge endpoints must be naturals"));
                Ok((idx(&pair[0])?, idx(&pair[1])?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_coords(vertices, edges)
    }

    /// Graphviz DOT text.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ext {\n");
        for (i, c) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"({})\"];", c.join(", ").replace('"', "\\\""));
        }
        for (i, j) in &self.edges {
            let _ = writeln!(out, "  v{i} -> v{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Edge `(i, j)` iff dim Ext¹(k(p_i), k(p_j)) ≥ 1, self-loops included.
pub fn build_graph<S: Scalar>(points: &[Point<S>], fs: &[NCPoly], params: &Assignment<S>) -> Result<ExtGraph> {
    let opts = ExtOptions::default();
    for p in points {
        // validate once per point, then skip the per-pair checks
        ext1_dim_points(fs, p, p, params, opts)?;
    }
    let fast = ExtOptions { check_preconditions: false };
    let mut edges = Vec::new();
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            if ext1_dim_points(fs, p, q, params, fast)? >= 1 {
                edges.push((i, j));
            }
        }
    }
    let coords = points.iter().map(|p| p.coords().iter().map(ToString::to_string).collect()).collect();
    ExtGraph::with_coords(coords, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, Rational};
    use crate::freealg::FreeAlgebra;

    fn quantum(q: Rational) -> (Vec<NCPoly>, Assignment<Rational>) {
        let a = FreeAlgebra::plane(["q"]);
        let mut asg = Assignment::new();
        asg.insert("q".into(), q);
        (vec![a.parse("x*y - q*y*x").unwrap()], asg)
    }

    #[test]
    fn quantum_minus_one_swaps() {
        let (fs, asg) = quantum(int(-1));
        let pts = [Point::from_rationals(&[int(0), int(1)]), Point::from_rationals(&[int(0), int(-1)])];
        let g = build_graph(&pts, &fs, &asg).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(g.has_complete_cycle());
    }

    #[test]
    fn quantum_two_chain() {
        let (fs, asg) = quantum(int(2));
        let pts: Vec<_> = [int(1), rat(1, 2), rat(1, 4)].iter().map(|v| Point::from_rationals(&[int(0), v.clone()])).collect();
        let g = build_graph(&pts, &fs, &asg).unwrap();
        // smooth points carry self-loops
        assert_eq!(g.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)]);
        assert!(!g.has_complete_cycle());
        let (m, n) = g.split_no_cycle().unwrap();
        assert_eq!((m, n), (BTreeSet::from([1, 2]), BTreeSet::from([0])));
    }

    #[test]
    fn commutative_model_self_loops_only() {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let fs = vec![a.parse("x^2 + y^2 - 1").unwrap(), a.parse("[x,y]").unwrap()];
        let pts: [Point<Rational>; 2] = [Point::from_rationals(&[int(1), int(0)]), Point::from_rationals(&[rat(3, 5), rat(-4, 5)])];
        let g = build_graph(&pts, &fs, &Assignment::new()).unwrap();
        assert_eq!(g.edges().iter().copied().collect::<Vec<_>>(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn closures() {
        let g = ExtGraph::unlabeled(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.successors(0).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(g.precursors(0).unwrap(), BTreeSet::from([0]));
        let lone = ExtGraph::unlabeled(1, []).unwrap();
        assert_eq!(lone.successors(0).unwrap(), BTreeSet::from([0]));
        assert!(lone.successors(1).is_err());
        let two = ExtGraph::unlabeled(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(two.successors(1).unwrap(), two.precursors(1).unwrap());
    }

    #[test]
    fn singleton_convention() {
        assert!(ExtGraph::unlabeled(1, [(0, 0)]).unwrap().has_complete_cycle());
        assert!(!ExtGraph::unlabeled(1, []).unwrap().has_complete_cycle());
        assert!(ExtGraph::unlabeled(1, [(0, 0)]).unwrap().completion_candidate_filter());
    }

    #[test]
    fn chain_split_uses_lowest_proper_vertex() {
        let g = ExtGraph::unlabeled(3, [(0, 1), (1, 2)]).unwrap();
        let (m, n) = g.split_no_cycle().unwrap();
        assert_eq!((m, n), (BTreeSet::from([1, 2]), BTreeSet::from([0])));
        let loops = ExtGraph::unlabeled(2, [(0, 0), (1, 1)]).unwrap();
        assert_eq!(loops.split_no_cycle().unwrap(), (BTreeSet::from([0]), BTreeSet::from([1])));
        let cyc = ExtGraph::unlabeled(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(cyc.split_no_cycle().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn json_round_trip_and_dot() {
        let g = ExtGraph::with_coords(vec![vec!["0".into(), "1".into()], vec!["0".into(), "-1".into()]], [(0, 1), (1, 0)]).unwrap();
        let j = g.to_json();
        assert_eq!(j, serde_json::json!({"vertices": [["0", "1"], ["0", "-1"]], "edges": [[0, 1], [1, 0]]}));
        assert_eq!(ExtGraph::from_json(&j).unwrap(), g);
        assert_eq!(g.to_dot(), "digraph ext {\n  v0 [label=\"(0, 1)\"];\n  v1 [label=\"(0, -1)\"];\n  v0 -> v1;\n  v1 -> v0;\n}\n");
        assert!(ExtGraph::unlabeled(2, [(0, 2)]).is_err());
    }
}
