//! The four transformations between maps and sticky trees.
//!
//! * [`map_to_sticky`]: depth-first edge exploration of a bridgeless planar
//!   map; every traversed edge spawns a tree node (a copy of the vertex it
//!   reaches), the first copy of a vertex fixes its label as its tree depth.
//! * [`sticky_to_map`]: inverse gluing; the nodes of each label class (a
//!   primary or root node together with its equally-labeled descendants) are
//!   merged into one vertex, with rotations interleaved in prefix order.
//! * [`triangulation_to_sticky`]: clockwise depth-first exploration with
//!   edge deletion on the core of a triangulation.
//! * [`sticky_to_triangulation`]: reconstruction of the core by inserting
//!   non-crossing chords along the tree contour, then closing the core.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::planar_map::{CoreMap, Dart, MapError, RootedMap};
use crate::plane_tree::{NodeId, PlaneTree};
use crate::sticky::StickyTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    NotPlanar,
    NotBridgeless,
    MissingRoot,
    Map(MapError),
}

impl fmt::Display for BijectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionError::NotPlanar => write!(f, "the map is not planar"),
            BijectionError::NotBridgeless => write!(f, "the map has a bridge"),
            BijectionError::MissingRoot => write!(f, "the map has no root dart"),
            BijectionError::Map(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BijectionError {}

impl From<MapError> for BijectionError {
    fn from(e: MapError) -> Self {
        BijectionError::Map(e)
    }
}

/// Replay data of a depth-first exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplorationTrace {
    /// Darts in the order they were traversed.
    pub dart_order: Vec<Dart>,
    /// For each tree node, the dart whose traversal created it (`None` for
    /// the root node).
    pub discovery: Vec<Option<Dart>>,
    /// For each tree node, whether it is the first copy of its vertex.
    pub first_visit: Vec<bool>,
}

/// Depth-first edge exploration of a bridgeless planar map.
pub fn map_to_sticky(map: &RootedMap) -> Result<StickyTree, BijectionError> {
    map_to_sticky_traced(map).map(|(t, _)| t)
}

pub fn map_to_sticky_traced(
    map: &RootedMap,
) -> Result<(StickyTree, ExplorationTrace), BijectionError> {
    if !map.is_planar() {
        return Err(BijectionError::NotPlanar);
    }
    if !map.is_bridgeless() {
        return Err(BijectionError::NotBridgeless);
    }
    if map.dart_count() == 0 {
        let tree = StickyTree::validate(PlaneTree::singleton(), vec![0]).unwrap();
        let trace = ExplorationTrace {
            dart_order: Vec::new(),
            discovery: vec![None],
            first_visit: vec![true],
        };
        return Ok((tree, trace));
    }
    let root_dart = map.root().ok_or(BijectionError::MissingRoot)?;
    let mut visited = vec![false; map.dart_count()];
    let mut vertex_label: Vec<Option<usize>> = vec![None; map.vertex_count()];
    let mut nodes: Vec<DiscNode> = vec![DiscNode {
        parent: None,
        depth: 0,
        label: 0,
        children: Vec::new(),
    }];
    let mut meta: Vec<(Option<Dart>, bool)> = vec![(None, true)];
    let mut dart_order: Vec<Dart> = Vec::new();
    vertex_label[map.vertex_of(root_dart)] = Some(0);

    // recursive traversal; each call adds one node, the copy of the vertex
    // reached by h
    fn explore(
        map: &RootedMap,
        h: Dart,
        parent: usize,
        visited: &mut [bool],
        vertex_label: &mut [Option<usize>],
        nodes: &mut Vec<DiscNode>,
        meta: &mut Vec<(Option<Dart>, bool)>,
        dart_order: &mut Vec<Dart>,
    ) {
        visited[h] = true;
        visited[map.alpha(h)] = true;
        let node = nodes.len();
        let depth = nodes[parent].depth + 1;
        let w = map.vertex_of(map.alpha(h));
        let first = vertex_label[w].is_none();
        if first {
            vertex_label[w] = Some(depth);
        }
        nodes[parent].children.push(node);
        nodes.push(DiscNode {
            parent: Some(parent),
            depth,
            label: vertex_label[w].unwrap(),
            children: Vec::new(),
        });
        meta.push((Some(h), first));
        dart_order.push(h);
        let mut next = map.sigma(map.alpha(h));
        while !visited[next] {
            explore(map, next, node, visited, vertex_label, nodes, meta, dart_order);
            next = map.sigma(next);
        }
    }

    // the root fan starts at the root dart and sweeps clockwise like any
    // other vertex
    let mut h = root_dart;
    while !visited[h] {
        explore(
            map, h, 0, &mut visited, &mut vertex_label, &mut nodes, &mut meta,
            &mut dart_order,
        );
        h = map.sigma(h);
    }
    let (parents, labels, order) = prefix_arrays(&nodes);
    let trace = ExplorationTrace {
        dart_order,
        discovery: order.iter().map(|&d| meta[d].0).collect(),
        first_visit: order.iter().map(|&d| meta[d].1).collect(),
    };
    let shape = PlaneTree::from_parents(&parents).expect("exploration is a preorder");
    let tree = StickyTree::validate(shape, labels)
        .expect("exploration of a bridgeless planar map is sticky");
    Ok((tree, trace))
}

/// A node created during an exploration, in discovery order.
struct DiscNode {
    parent: Option<usize>,
    depth: usize,
    label: usize,
    children: Vec<usize>,
}

/// Explorations discover children in clockwise order, which places them from
/// right to left in the drawn tree; the plane tree reverses each child list.
/// Returns parent links and labels in prefix order, plus the discovery index
/// of every prefix node.
fn prefix_arrays(nodes: &[DiscNode]) -> (Vec<Option<NodeId>>, Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(nodes.len());
    let mut new_id = vec![0usize; nodes.len()];
    let mut parents = Vec::with_capacity(nodes.len());
    let mut labels = Vec::with_capacity(nodes.len());
    let mut stack = vec![0usize];
    while let Some(d) = stack.pop() {
        new_id[d] = order.len();
        order.push(d);
        parents.push(nodes[d].parent.map(|p| new_id[p]));
        labels.push(nodes[d].label);
        // pushed in discovery order, so the last-discovered child is
        // emitted first and becomes the leftmost
        stack.extend(&nodes[d].children);
    }
    (parents, labels, order)
}

/// Dart toward the parent at node `v` (`v >= 1`).
fn up(v: NodeId) -> Dart {
    2 * (v - 1)
}

/// Dart toward child `v`, placed at its parent.
fn down(v: NodeId) -> Dart {
    2 * (v - 1) + 1
}

/// Gluing inverse of [`map_to_sticky`].
pub fn sticky_to_map(tree: &StickyTree) -> RootedMap {
    let n = tree.size();
    if n == 0 {
        return RootedMap::single_vertex();
    }
    let shape = tree.shape();
    let mut alpha = vec![0usize; 2 * n];
    for v in 1..=n {
        alpha[up(v)] = down(v);
        alpha[down(v)] = up(v);
    }
    // one vertex per root-or-primary node: the class head followed by its
    // equally labeled descendants in prefix order; the cycle interleaves
    // each member's parent dart with its child darts from right to left
    let mut rotations: Vec<Vec<Dart>> = Vec::new();
    for head in 0..=n {
        if head != 0 && !tree.is_primary(head) {
            continue;
        }
        let d = shape.depth_of(head);
        let mut cycle = Vec::new();
        for member in head..shape.subtree_end(head) {
            if member != head && tree.label(member) != d {
                continue;
            }
            if member != 0 {
                cycle.push(up(member));
            }
            for &c in shape.children(member).iter().rev() {
                cycle.push(down(c));
            }
        }
        rotations.push(cycle);
    }
    let root_dart = down(*shape.children(0).last().expect("n >= 1"));
    RootedMap::from_rotations(&rotations, alpha, Some(root_dart))
        .expect("gluing a sticky tree yields a map")
}

/// Mutable view of a core used by the deleting exploration.
struct Peeler {
    rot: Vec<Vec<Dart>>,
    place: Vec<(usize, usize)>, // dart -> (vertex, index in rot[vertex])
    alive: Vec<bool>,
    tree_dart: Vec<bool>,
    alpha: Vec<Dart>,
    vertex_of: Vec<usize>,
    vlabel: Vec<Option<usize>>,
    nodes: Vec<DiscNode>,
}

impl Peeler {
    fn next_cw(&self, d: Dart) -> Dart {
        let (v, i) = self.place[d];
        let len = self.rot[v].len();
        for k in 1..=len {
            let cand = self.rot[v][(i + k) % len];
            if self.alive[cand] {
                return cand;
            }
        }
        d
    }

    fn next_ccw(&self, d: Dart) -> Dart {
        let (v, i) = self.place[d];
        let len = self.rot[v].len();
        for k in 1..=len {
            let cand = self.rot[v][(i + len - k) % len];
            if self.alive[cand] {
                return cand;
            }
        }
        d
    }

    fn delete(&mut self, d: Dart) {
        self.alive[d] = false;
        self.alive[self.alpha[d]] = false;
    }

    /// True iff the edge of `e` separates its endpoints among live edges.
    fn is_bridge(&self, e: Dart) -> bool {
        let a = self.vertex_of[e];
        let b = self.vertex_of[self.alpha[e]];
        let mut seen = vec![false; self.rot.len()];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            for &d in &self.rot[v] {
                if !self.alive[d] || d == e || d == self.alpha[e] {
                    continue;
                }
                let w = self.vertex_of[self.alpha[d]];
                if !seen[w] {
                    if w == b {
                        return false;
                    }
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        true
    }

    /// Explores the fan of edges at `vertex` clockwise, starting at `first`.
    fn explore(&mut self, node: usize, first: Dart) {
        let next_label = self.nodes[node].depth + 1;
        let mut e = first;
        loop {
            if self.tree_dart[e] || !self.alive[e] {
                return;
            }
            let v = self.vertex_of[self.alpha[e]];
            if self.vlabel[v].is_none() {
                self.vlabel[v] = Some(next_label);
                // clear the unlabeled fan after e, then find the labeled
                // stop edge
                let e_prime = loop {
                    let x = self.next_cw(e);
                    debug_assert!(x != e, "fan scan wrapped");
                    let t = self.vertex_of[self.alpha[x]];
                    match self.vlabel[t] {
                        Some(_) => break x,
                        None => {
                            self.vlabel[t] = Some(next_label);
                            self.delete(x);
                        }
                    }
                };
                debug_assert!(!self.tree_dart[e_prime], "stop edge already in the tree");
                // the stop edge is discarded as well; peeling happens in the
                // graph without it
                self.delete(e_prime);
                self.peel_until_bridge(e, self.alpha[e_prime]);
            } else {
                self.peel_until_bridge(e, self.alpha[e]);
            }
            let child = self.nodes.len();
            self.nodes[node].children.push(child);
            self.nodes.push(DiscNode {
                parent: Some(node),
                depth: next_label,
                label: self.vlabel[v].unwrap(),
                children: Vec::new(),
            });
            self.tree_dart[e] = true;
            self.tree_dart[self.alpha[e]] = true;
            let first_at_child = self.next_cw(self.alpha[e]);
            self.explore(child, first_at_child);
            e = self.next_cw(e);
        }
    }

    /// Deletes darts counter-clockwise after `anchor` (a dart of the stop
    /// vertex) until `e` separates its endpoints.
    fn peel_until_bridge(&mut self, e: Dart, anchor: Dart) {
        while !self.is_bridge(e) {
            let y = self.next_ccw(anchor);
            debug_assert!(y != anchor, "peeling consumed the whole vertex");
            debug_assert!(y != e && y != self.alpha[e], "peeling would cut the tree edge");
            self.delete(y);
        }
    }
}

/// Exploration with edge deletion on the core of a triangulation.
pub fn triangulation_to_sticky(map: &RootedMap) -> Result<StickyTree, BijectionError> {
    let core = map.core()?;
    if core.map.dart_count() == 0 {
        return Ok(StickyTree::validate(PlaneTree::singleton(), vec![0]).unwrap());
    }
    let m = &core.map;
    let rot = m.rotations();
    let mut place = vec![(0usize, 0usize); m.dart_count()];
    for (v, cycle) in rot.iter().enumerate() {
        for (i, &d) in cycle.iter().enumerate() {
            place[d] = (v, i);
        }
    }
    let mut peeler = Peeler {
        rot,
        place,
        alive: vec![true; m.dart_count()],
        tree_dart: vec![false; m.dart_count()],
        alpha: m.alpha_vec().to_vec(),
        vertex_of: (0..m.dart_count()).map(|d| m.vertex_of(d)).collect(),
        vlabel: vec![None; m.vertex_count()],
        nodes: vec![DiscNode { parent: None, depth: 0, label: 0, children: Vec::new() }],
    };
    for &w in &core.left {
        peeler.vlabel[w] = Some(0);
    }
    // start at the apex along its right-boundary edge
    let start = *peeler.rot[core.apex]
        .iter()
        .find(|&&d| peeler.vertex_of[peeler.alpha[d]] == core.right[1])
        .expect("apex touches the right boundary");
    peeler.explore(0, start);
    let (parents, labels, _) = prefix_arrays(&peeler.nodes);
    let shape = PlaneTree::from_parents(&parents).expect("exploration is a preorder");
    Ok(StickyTree::validate(shape, labels)
        .expect("core exploration of a triangulation is sticky"))
}

/// Core reconstruction: inserts the chord set of the sticky tree along its
/// contour, then closes the core into a triangulation.
pub fn sticky_to_triangulation(tree: &StickyTree) -> RootedMap {
    reconstruct_core(tree).close().expect("reconstruction closes to a triangulation")
}

/// Builds the core of the triangulation of `tree`, with apex the tree root
/// and base the last node in prefix order.
pub fn reconstruct_core(tree: &StickyTree) -> CoreMap {
    let n = tree.size();
    if n == 0 {
        return CoreMap {
            map: RootedMap::single_vertex(),
            apex: 0,
            base: 0,
            left: vec![0],
            right: vec![0],
        };
    }
    let shape = tree.shape();
    // every dart owns the corner between itself and its clockwise successor;
    // the counter-clockwise contour meets each corner once
    let mut pos = vec![usize::MAX; 2 * n];
    {
        let mut counter = 0usize;
        fn walk(shape: &PlaneTree, x: NodeId, pos: &mut [usize], counter: &mut usize) {
            for &c in shape.children(x) {
                pos[down(c)] = *counter;
                *counter += 1;
                walk(shape, c, pos, counter);
            }
            if x != 0 {
                pos[up(x)] = *counter;
                *counter += 1;
            }
        }
        walk(shape, 0, &mut pos, &mut counter);
    }
    // corner at the left flank of a node
    let west = |x: NodeId| -> Dart {
        match shape.children(x).first() {
            Some(&c) => down(c),
            None => up(x),
        }
    };
    // chords as corner pairs (owning darts)
    let mut chords: Vec<(Dart, Dart)> = Vec::new();
    for v in 1..=n {
        if tree.is_primary(v) {
            let d = shape.depth_of(v);
            // the corner just left of the edge to v, at v's parent
            let at_parent = down(v);
            for w in v + 1..shape.subtree_end(v) {
                if tree.label(w) == d {
                    chords.push((at_parent, west(w)));
                }
            }
            let cert = tree.certificate(v).expect("non-root node");
            chords.push((at_parent, west(cert)));
        }
        if let Some(sl) = shape.left_sibling(v) {
            let source = if tree.is_primary(v) {
                tree.certificate(v).expect("non-root node")
            } else {
                v
            };
            for p in shape.rightmost_branch(sl) {
                chords.push((west(source), up(p)));
            }
        }
    }
    // allocate chord darts and bucket the ends per corner
    let total = 2 * n + 2 * chords.len();
    let mut alpha = vec![0usize; total];
    for v in 1..=n {
        alpha[up(v)] = down(v);
        alpha[down(v)] = up(v);
    }
    // (new dart, other corner position, other corner is ahead)
    let mut ends: Vec<Vec<(Dart, usize, bool)>> = vec![Vec::new(); 2 * n];
    for (i, &(a, b)) in chords.iter().enumerate() {
        let (da, db) = (2 * n + 2 * i, 2 * n + 2 * i + 1);
        alpha[da] = db;
        alpha[db] = da;
        let (first, second, df, ds) = if pos[a] <= pos[b] { (a, b, da, db) } else { (b, a, db, da) };
        ends[first].push((df, pos[second], true));
        ends[second].push((ds, pos[first], false));
    }
    // inside each corner, clockwise from the owning dart: chords to corners
    // ahead by increasing distance, then chords to corners behind by
    // increasing position
    for bucket in ends.iter_mut() {
        bucket.sort_by_key(|&(_, other, ahead)| (!ahead, other));
    }
    let mut rotations: Vec<Vec<Dart>> = Vec::with_capacity(n + 1);
    for x in 0..=n {
        let mut base: Vec<Dart> = Vec::new();
        if x != 0 {
            base.push(up(x));
        }
        base.extend(shape.children(x).iter().rev().map(|&c| down(c)));
        let mut cycle = Vec::new();
        for d in base {
            cycle.push(d);
            cycle.extend(ends[d].iter().map(|&(nd, _, _)| nd));
        }
        rotations.push(cycle);
    }
    let map = RootedMap::from_rotations(&rotations, alpha, None)
        .expect("chord insertion yields a map");
    let vmap = |x: NodeId| -> usize {
        let d = if x == 0 { down(shape.children(0)[0]) } else { up(x) };
        map.vertex_of(d)
    };
    let left: Vec<usize> = core::iter::once(0)
        .chain((1..=n).filter(|&v| tree.label(v) == 0))
        .map(vmap)
        .collect();
    let right: Vec<usize> = shape.rightmost_branch(0).into_iter().map(vmap).collect();
    let (apex, base) = (vmap(0), vmap(n));
    CoreMap { map, apex, base, left, right }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sticky::enumerate_sticky;

    fn sticky(parents: &[Option<usize>], labels: &[usize]) -> StickyTree {
        StickyTree::validate(PlaneTree::from_parents(parents).unwrap(), labels.to_vec()).unwrap()
    }

    fn loop_map() -> RootedMap {
        RootedMap::new(vec![1, 0], vec![1, 0], 0).unwrap()
    }

    fn double_edge() -> RootedMap {
        RootedMap::new(vec![1, 0, 3, 2], vec![2, 3, 0, 1], 0).unwrap()
    }

    /// Three parallel edges between two vertices, worked out by hand.
    fn triple_edge() -> RootedMap {
        // v carries darts 0,2,4 with sigma cycle (0 2 4); u carries 1,3,5
        // with sigma cycle (1 5 3); root from v to u along dart 0
        RootedMap::new(vec![1, 0, 3, 2, 5, 4], vec![2, 5, 4, 1, 0, 3], 0).unwrap()
    }

    fn tetrahedron() -> RootedMap {
        let rotations = vec![
            vec![0, 2, 4],
            vec![1, 8, 6],
            vec![3, 7, 10],
            vec![5, 11, 9],
        ];
        let alpha = vec![1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10];
        RootedMap::from_rotations(&rotations, alpha, Some(0)).unwrap()
    }

    fn triangle() -> RootedMap {
        let rotations = vec![vec![0, 5], vec![1, 2], vec![3, 4]];
        RootedMap::from_rotations(&rotations, vec![1, 0, 3, 2, 5, 4], Some(0)).unwrap()
    }

    #[test]
    fn explore_examples() {
        let t = map_to_sticky(&loop_map()).unwrap();
        assert_eq!(t.shape().parents(), &[None, Some(0)]);
        assert_eq!(t.labels(), &[0, 0]);
        let t = map_to_sticky(&double_edge()).unwrap();
        assert_eq!(t.shape().parents(), &[None, Some(0), Some(1)]);
        assert_eq!(t.labels(), &[0, 1, 0]);
        let t = map_to_sticky(&triple_edge()).unwrap();
        assert_eq!(t.shape().parents(), &[None, Some(0), Some(1), Some(1)]);
        assert_eq!(t.labels(), &[0, 1, 0, 0]);
    }

    #[test]
    fn explore_rejects_bridges() {
        let bridge = RootedMap::new(vec![1, 0], vec![0, 1], 0).unwrap();
        assert_eq!(map_to_sticky(&bridge), Err(BijectionError::NotBridgeless));
    }

    #[test]
    fn glue_examples() {
        let canon = |m: &RootedMap| m.canonicalize().unwrap();
        let t = sticky(&[None, Some(0)], &[0, 0]);
        assert_eq!(canon(&sticky_to_map(&t)), canon(&loop_map()));
        let t = sticky(&[None, Some(0), Some(1)], &[0, 1, 0]);
        assert_eq!(canon(&sticky_to_map(&t)), canon(&double_edge()));
        let t = sticky(&[None, Some(0), Some(1), Some(1)], &[0, 1, 0, 0]);
        assert_eq!(canon(&sticky_to_map(&t)), canon(&triple_edge()));
    }

    #[test]
    fn explore_glue_round_trip() {
        for n in 0..=5 {
            for t in enumerate_sticky(n) {
                let m = sticky_to_map(&t);
                assert!(m.is_planar());
                assert!(m.is_bridgeless());
                assert_eq!(m.edge_count(), n);
                assert_eq!(m.vertex_count(), t.primary_count() + 1);
                assert_eq!(map_to_sticky(&m).unwrap(), t, "n={n}");
            }
        }
    }

    #[test]
    fn peel_examples() {
        let t = triangulation_to_sticky(&tetrahedron()).unwrap();
        assert_eq!(t.shape().parents(), &[None, Some(0)]);
        assert_eq!(t.labels(), &[0, 0]);
        let t = triangulation_to_sticky(&triangle()).unwrap();
        assert_eq!(t.shape().node_count(), 1);
    }

    #[test]
    fn reconstruct_examples() {
        let canon = |m: &RootedMap| m.canonicalize().unwrap();
        let t = sticky(&[None, Some(0)], &[0, 0]);
        assert_eq!(
            canon(&sticky_to_triangulation(&t)),
            canon(&tetrahedron())
        );
        let t = sticky(&[None], &[0]);
        assert_eq!(canon(&sticky_to_triangulation(&t)), canon(&triangle()));
    }

    #[test]
    fn reconstruct_peel_round_trip() {
        for n in 0..=4 {
            let mut canonical = Vec::new();
            for t in enumerate_sticky(n) {
                let m = sticky_to_triangulation(&t);
                assert!(m.is_triangulation(), "n={n} {t:?}");
                assert_eq!(m.edge_count(), 3 * (n + 1));
                assert_eq!(m.vertex_count(), n + 3);
                assert_eq!(m.internal_vertex_count().unwrap(), n);
                let back = triangulation_to_sticky(&m).unwrap();
                assert_eq!(back, t, "n={n}");
                canonical.push(m.canonicalize().unwrap());
                // closing and re-extracting the core is stable
                let again = sticky_to_triangulation(&back);
                assert_eq!(
                    again.canonicalize().unwrap(),
                    *canonical.last().unwrap()
                );
            }
            let count = canonical.len();
            canonical.sort();
            canonical.dedup();
            assert_eq!(canonical.len(), count, "reconstruction must be injective");
        }
    }
}
