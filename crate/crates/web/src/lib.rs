//! WebAssembly bindings for the browser demo.
//!
//! Each export takes a poset file (`{"n", "covers", "labels"}`) as text and
//! returns a JSON string; errors come back as plain messages. The `*_json`
//! functions hold the logic so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use subfit_core::duality::{birkhoff_space, closed_points, qcop};
use subfit_core::io::poset_from_json;
use subfit_core::subfit::{
    indistinguishable_pair, is_join_subfit, subfit_elements, thm21_join_witness,
};
use subfit_core::{is_distributive_lattice, is_isomorphic, FiniteLattice, FinitePoset};

#[derive(Debug, Serialize)]
pub struct Node {
    pub index: usize,
    pub label: String,
    /// Horizontal position in `[0, 1]`.
    pub x: f64,
    /// Vertical position in `[0, 1]`, maximal elements at 0.
    pub y: f64,
}

#[derive(Debug, Serialize)]
pub struct Diagram {
    pub nodes: Vec<Node>,
    pub edges: Vec<[usize; 2]>,
}

/// Hasse diagram by longest-chain rank, each rank ordered by the mean
/// position of its lower covers.
pub fn layout(p: &FinitePoset) -> Diagram {
    let n = p.len();
    let mut rank = vec![0usize; n];
    for &i in &p.linear_extension() {
        rank[i] = p
            .lower_covers(i)
            .iter()
            .map(|j| rank[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let height = rank.iter().copied().max().unwrap_or(0);
    let mut x = vec![0.5; n];
    for r in 0..=height {
        let mut row: Vec<usize> = (0..n).filter(|&i| rank[i] == r).collect();
        let key = |i: usize| {
            let below = p.lower_covers(i);
            if below.is_empty() {
                i as f64
            } else {
                below.iter().map(|j| x[j]).sum::<f64>() / below.len() as f64
            }
        };
        let keys: Vec<f64> = row.iter().map(|&i| key(i)).collect();
        let mut order: Vec<usize> = (0..row.len()).collect();
        order.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]).then(row[a].cmp(&row[b])));
        row = order.into_iter().map(|k| row[k]).collect();
        for (k, &i) in row.iter().enumerate() {
            x[i] = (k + 1) as f64 / (row.len() + 1) as f64;
        }
    }
    let nodes = (0..n)
        .map(|i| Node {
            index: i,
            label: p.label(i),
            x: x[i],
            y: if height == 0 {
                0.5
            } else {
                1.0 - rank[i] as f64 / height as f64
            },
        })
        .collect();
    let edges = p.covers().into_iter().map(|(a, b)| [a, b]).collect();
    Diagram { nodes, edges }
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub diagram: Diagram,
    pub is_lattice: bool,
    pub is_distributive: bool,
    pub is_boolean: bool,
    pub join_subfit: bool,
    /// First pair with equal co-annihilators.
    pub indistinguishable_pair: Option<(usize, usize)>,
    pub subfit_elements: Vec<usize>,
    pub subfit_is_ideal: bool,
    /// Two subfit elements whose join is not subfit.
    pub offending_pair: Option<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct WitnessResult {
    pub a: usize,
    pub b: usize,
    pub s: usize,
    pub t: usize,
    pub z: usize,
    pub branch: String,
    pub swapped: bool,
    pub y: usize,
    pub w: Option<usize>,
    pub x: Option<usize>,
    pub s_join_z_below_top: bool,
    pub t_join_z_is_top: bool,
}

#[derive(Debug, Serialize)]
pub struct Dual {
    pub space: Diagram,
    /// Lattice index of each point.
    pub point_elements: Vec<usize>,
    pub closed_points: Vec<usize>,
    /// Points of the open set for each lattice element.
    pub opens: Vec<Vec<usize>>,
    pub round_trip: bool,
}

fn parse_lattice(text: &str) -> Result<FiniteLattice, String> {
    let p = poset_from_json(text).map_err(|e| e.to_string())?;
    FiniteLattice::from_poset(p).ok_or_else(|| "the poset is not a lattice".to_string())
}

/// `#3` is index 3; a bare name is a label first, then an index.
fn element(p: &FinitePoset, name: &str) -> Result<usize, String> {
    let name = name.trim();
    let index = match name.strip_prefix('#') {
        Some(digits) => digits.parse::<usize>().ok(),
        None => p.index_of(name).or_else(|| name.parse::<usize>().ok()),
    };
    index
        .filter(|&i| i < p.len())
        .ok_or_else(|| format!("no element {name:?}"))
}

fn to_json(v: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn analyze_json(text: &str) -> Result<String, String> {
    let l = parse_lattice(text)?;
    let s = l.semilattice();
    let report = subfit_elements(s);
    to_json(&Analysis {
        diagram: layout(l.poset()),
        is_lattice: true,
        is_distributive: is_distributive_lattice(&l),
        is_boolean: l.is_boolean(),
        join_subfit: is_join_subfit(s).map_err(|e| e.to_string())?,
        indistinguishable_pair: indistinguishable_pair(s).map_err(|e| e.to_string())?,
        subfit_elements: report.subfit_set.iter().collect(),
        subfit_is_ideal: report.is_ideal,
        offending_pair: report.offending_pair,
    })
}

pub fn witness_json(text: &str, a: &str, b: &str, s: &str, t: &str) -> Result<String, String> {
    let l = parse_lattice(text)?;
    let p = l.poset();
    let (a, b, s, t) = (
        element(p, a)?,
        element(p, b)?,
        element(p, s)?,
        element(p, t)?,
    );
    let w = thm21_join_witness(&l, a, b, s, t).map_err(|e| e.to_string())?;
    let top = l.top();
    let branch = serde_json::to_value(w.branch).map_err(|e| e.to_string())?;
    to_json(&WitnessResult {
        a,
        b,
        s,
        t,
        z: w.z,
        branch: branch.as_str().unwrap_or_default().to_string(),
        swapped: w.swapped,
        y: w.y,
        w: w.w,
        x: w.x,
        s_join_z_below_top: l.join(s, w.z) != top,
        t_join_z_is_top: l.join(t, w.z) == top,
    })
}

pub fn dualize_json(text: &str) -> Result<String, String> {
    let l = parse_lattice(text)?;
    let x = birkhoff_space(&l).map_err(|e| e.to_string())?;
    let q = qcop(&x).map_err(|e| e.to_string())?;
    let point_elements: Vec<usize> = l.join_irreducibles().iter().collect();
    // Element e corresponds to the points below it.
    let opens = (0..l.len())
        .map(|e| {
            (0..point_elements.len())
                .filter(|&k| l.le(point_elements[k], e))
                .collect()
        })
        .collect();
    to_json(&Dual {
        space: layout(x.specialization()),
        point_elements,
        closed_points: closed_points(&x).iter().collect(),
        opens,
        round_trip: is_isomorphic(q.lattice.poset(), l.poset()),
    })
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn witness(text: &str, a: &str, b: &str, s: &str, t: &str) -> Result<String, JsError> {
    witness_json(text, a, b, s, t).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dualize(text: &str) -> Result<String, JsError> {
    dualize_json(text).map_err(|e| JsError::new(&e))
}
