//! JSON codecs for every object class.
//!
//! Darts are 1-based on the wire and 0-based in the library.  Trees and
//! labels are indexed in prefix order.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use stickytree::decorated::DecoratedTree;
use stickytree::dyck::DyckPath;
use stickytree::flows::ForestFlow;
use stickytree::planar_map::RootedMap;
use stickytree::plane_tree::PlaneTree;
use stickytree::sticky::StickyTree;
use stickytree::tamari::TamariInterval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Class {
    Sticky,
    Bridgeless,
    Triangulation,
    Interval,
    Flow,
    Decorated,
}

#[derive(Debug, Clone)]
pub enum Object {
    Sticky(StickyTree),
    Map(RootedMap),
    Interval(TamariInterval),
    Flow(ForestFlow),
    Decorated(DecoratedTree),
}

#[derive(Serialize, Deserialize)]
pub struct TreeJson {
    pub parents: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct StickyJson {
    parents: Vec<Option<usize>>,
    labels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    /// Number of edges; darts are `1..=2n`.
    n: usize,
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    root: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    lower: String,
    upper: String,
}

#[derive(Serialize, Deserialize)]
struct FlowJson {
    forest: Vec<TreeJson>,
    inputs: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct DecoratedJson {
    parents: Vec<Option<usize>>,
    /// Leaf labels keyed by prefix index.
    leaf_labels: BTreeMap<String, i64>,
}

pub fn tree_to_json(tree: &PlaneTree) -> TreeJson {
    TreeJson { parents: tree.parents().to_vec() }
}

pub fn tree_from_json(json: &TreeJson) -> Result<PlaneTree> {
    PlaneTree::from_parents(&json.parents).map_err(|e| anyhow!("bad tree: {e}"))
}

fn shift_up(v: &[usize]) -> Vec<usize> {
    v.iter().map(|d| d + 1).collect()
}

fn shift_down(v: &[usize], n: usize, what: &str) -> Result<Vec<usize>> {
    v.iter()
        .map(|&d| match d {
            0 => bail!("{what}: dart 0 is invalid, darts are 1..={n}"),
            d if d > n => bail!("{what}: dart {d} out of range 1..={n}"),
            d => Ok(d - 1),
        })
        .collect()
}

pub fn map_to_value(map: &RootedMap) -> serde_json::Value {
    serde_json::to_value(MapJson {
        n: map.edge_count(),
        alpha: shift_up(map.alpha_vec()),
        sigma: shift_up(map.sigma_vec()),
        root: map.root().map(|d| d + 1),
    })
    .expect("map serializes")
}

pub fn map_from_value(value: &serde_json::Value) -> Result<RootedMap> {
    let json: MapJson = serde_json::from_value(value.clone()).context("bad map json")?;
    let darts = 2 * json.n;
    let alpha = shift_down(&json.alpha, darts, "alpha")?;
    let sigma = shift_down(&json.sigma, darts, "sigma")?;
    if darts == 0 {
        if !alpha.is_empty() || !sigma.is_empty() || json.root.is_some() {
            bail!("a map without edges has no darts");
        }
        return Ok(RootedMap::single_vertex());
    }
    let root = json.root.ok_or_else(|| anyhow!("a map with edges needs a root dart"))?;
    if root == 0 || root > darts {
        bail!("root: dart {root} out of range 1..={darts}");
    }
    RootedMap::new(alpha, sigma, root - 1).map_err(|e| anyhow!("bad map: {e}"))
}

pub fn to_value(object: &Object) -> serde_json::Value {
    match object {
        Object::Sticky(t) => serde_json::to_value(StickyJson {
            parents: t.shape().parents().to_vec(),
            labels: t.labels().to_vec(),
        })
        .expect("sticky tree serializes"),
        Object::Map(m) => map_to_value(m),
        Object::Interval(i) => serde_json::to_value(IntervalJson {
            lower: i.lower().to_string(),
            upper: i.upper().to_string(),
        })
        .expect("interval serializes"),
        Object::Flow(f) => serde_json::to_value(FlowJson {
            forest: f.forest().iter().map(tree_to_json).collect(),
            inputs: f.inputs().to_vec(),
        })
        .expect("flow serializes"),
        Object::Decorated(d) => serde_json::to_value(DecoratedJson {
            parents: d.shape().parents().to_vec(),
            leaf_labels: d
                .leaf_labels()
                .iter()
                .enumerate()
                .filter_map(|(v, l)| l.map(|l| (v.to_string(), l)))
                .collect(),
        })
        .expect("decorated tree serializes"),
    }
}

pub fn from_value(class: Class, value: &serde_json::Value) -> Result<Object> {
    Ok(match class {
        Class::Sticky => {
            let json: StickyJson =
                serde_json::from_value(value.clone()).context("bad sticky json")?;
            let shape = PlaneTree::from_parents(&json.parents)
                .map_err(|e| anyhow!("bad tree: {e}"))?;
            Object::Sticky(
                StickyTree::validate(shape, json.labels)
                    .map_err(|e| anyhow!("bad sticky tree: {e}"))?,
            )
        }
        Class::Bridgeless | Class::Triangulation => Object::Map(map_from_value(value)?),
        Class::Interval => {
            let json: IntervalJson =
                serde_json::from_value(value.clone()).context("bad interval json")?;
            let lower = DyckPath::parse(&json.lower).map_err(|e| anyhow!("bad lower: {e}"))?;
            let upper = DyckPath::parse(&json.upper).map_err(|e| anyhow!("bad upper: {e}"))?;
            Object::Interval(
                TamariInterval::new(lower, upper).map_err(|e| anyhow!("bad interval: {e}"))?,
            )
        }
        Class::Flow => {
            let json: FlowJson =
                serde_json::from_value(value.clone()).context("bad flow json")?;
            let forest = json
                .forest
                .iter()
                .map(tree_from_json)
                .collect::<Result<Vec<_>>>()?;
            Object::Flow(
                ForestFlow::validate(forest, json.inputs)
                    .map_err(|e| anyhow!("bad flow: {e}"))?,
            )
        }
        Class::Decorated => {
            let json: DecoratedJson =
                serde_json::from_value(value.clone()).context("bad decorated json")?;
            let shape = PlaneTree::from_parents(&json.parents)
                .map_err(|e| anyhow!("bad tree: {e}"))?;
            let mut labels = vec![None; shape.node_count()];
            for (key, label) in &json.leaf_labels {
                let v: usize = key.parse().with_context(|| format!("bad leaf index {key}"))?;
                if v >= labels.len() {
                    bail!("leaf index {v} out of range");
                }
                labels[v] = Some(*label);
            }
            Object::Decorated(
                DecoratedTree::validate(shape, labels)
                    .map_err(|e| anyhow!("bad decorated tree: {e}"))?,
            )
        }
    })
}

/// Writes a map in DOT syntax, one directed arc per edge, annotated with its
/// dart pair; the root edge is highlighted.
pub fn map_to_dot(map: &RootedMap) -> String {
    use std::fmt::Write;
    let mut out = String::from("digraph map {\n");
    for v in 0..map.vertex_count() {
        let _ = writeln!(out, "  v{v};");
    }
    for d in map.edges() {
        let a = map.alpha(d);
        let root = map.root() == Some(d) || map.root() == Some(a);
        let style = if root { ", style=bold, color=red" } else { "" };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{}/{}\"{}];",
            map.vertex_of(d),
            map.vertex_of(a),
            d + 1,
            a + 1,
            style
        );
    }
    out.push_str("}\n");
    out
}
