//! Rooted combinatorial maps encoded as permutations on darts.
//!
//! Each edge contributes two darts (half-edges); `alpha` swaps the two darts
//! of an edge and `sigma` sends a dart to the next dart around the same
//! vertex in clockwise order.  Vertices are the cycles of `sigma`, faces the
//! cycles of `alpha∘sigma`, and a connected map is planar exactly when
//! `v - e + f = 2`.
//!
//! A map with zero darts stands for the single-vertex map.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    LengthMismatch,
    OddDartCount,
    NotPermutation { dart: Dart },
    NotInvolution { dart: Dart },
    FixedPoint { dart: Dart },
    Disconnected,
    BadRoot { dart: Dart },
    MissingRoot,
    NotTriangulation,
    NotPlanar,
    HasBridge { edge: Dart },
    /// The boundary data of a core is inconsistent.
    BadBoundary,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::LengthMismatch => write!(f, "alpha and sigma have different lengths"),
            MapError::OddDartCount => write!(f, "dart count must be even"),
            MapError::NotPermutation { dart } => write!(f, "sigma is not a permutation at dart {dart}"),
            MapError::NotInvolution { dart } => write!(f, "alpha is not an involution at dart {dart}"),
            MapError::FixedPoint { dart } => write!(f, "alpha fixes dart {dart}"),
            MapError::Disconnected => write!(f, "the map is not connected"),
            MapError::BadRoot { dart } => write!(f, "root dart {dart} out of range"),
            MapError::MissingRoot => write!(f, "operation needs a rooted map"),
            MapError::NotTriangulation => write!(f, "the map is not a planar triangulation"),
            MapError::NotPlanar => write!(f, "the map is not planar"),
            MapError::HasBridge { edge } => write!(f, "the map has a bridge at edge {edge}"),
            MapError::BadBoundary => write!(f, "core boundaries are inconsistent"),
        }
    }
}

impl core::error::Error for MapError {}

/// A connected combinatorial map, optionally rooted at a dart.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedMap {
    alpha: Vec<Dart>,
    sigma: Vec<Dart>,
    root: Option<Dart>,
    vertex_of: Vec<usize>,
    n_vertices: usize,
}

impl RootedMap {
    pub fn new(alpha: Vec<Dart>, sigma: Vec<Dart>, root: Dart) -> Result<Self, MapError> {
        if root >= alpha.len() {
            return Err(MapError::BadRoot { dart: root });
        }
        Self::build(alpha, sigma, Some(root))
    }

    /// A connected map without a distinguished root (used for cores).
    pub fn unrooted(alpha: Vec<Dart>, sigma: Vec<Dart>) -> Result<Self, MapError> {
        Self::build(alpha, sigma, None)
    }

    /// The map with one vertex and no edges.
    pub fn single_vertex() -> Self {
        RootedMap {
            alpha: Vec::new(),
            sigma: Vec::new(),
            root: None,
            vertex_of: Vec::new(),
            n_vertices: 1,
        }
    }

    fn build(alpha: Vec<Dart>, sigma: Vec<Dart>, root: Option<Dart>) -> Result<Self, MapError> {
        if alpha.len() != sigma.len() {
            return Err(MapError::LengthMismatch);
        }
        let n = alpha.len();
        if n % 2 != 0 {
            return Err(MapError::OddDartCount);
        }
        if n == 0 {
            let mut m = RootedMap::single_vertex();
            m.root = root;
            return Ok(m);
        }
        let mut seen = vec![false; n];
        for d in 0..n {
            let s = *sigma.get(d).ok_or(MapError::NotPermutation { dart: d })?;
            if s >= n || seen[s] {
                return Err(MapError::NotPermutation { dart: d });
            }
            seen[s] = true;
        }
        for d in 0..n {
            let a = alpha[d];
            if a >= n || alpha[a] != d {
                return Err(MapError::NotInvolution { dart: d });
            }
            if a == d {
                return Err(MapError::FixedPoint { dart: d });
            }
        }
        // vertices: cycles of sigma, numbered by smallest contained dart
        let mut vertex_of = vec![usize::MAX; n];
        let mut n_vertices = 0;
        for d in 0..n {
            if vertex_of[d] == usize::MAX {
                let mut x = d;
                loop {
                    vertex_of[x] = n_vertices;
                    x = sigma[x];
                    if x == d {
                        break;
                    }
                }
                n_vertices += 1;
            }
        }
        let map = RootedMap { alpha, sigma, root, vertex_of, n_vertices };
        if !map.is_connected() {
            return Err(MapError::Disconnected);
        }
        Ok(map)
    }

    fn is_connected(&self) -> bool {
        let n = self.alpha.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.sigma[d], self.alpha[d]] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == n
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.n_vertices
    }

    pub fn root(&self) -> Option<Dart> {
        self.root
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let mut x = d;
        while self.sigma[x] != d {
            x = self.sigma[x];
        }
        x
    }

    pub fn alpha_vec(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn sigma_vec(&self) -> &[Dart] {
        &self.sigma
    }

    /// Vertex id of the dart's origin.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Other endpoint of the dart's edge.
    pub fn target_of(&self, d: Dart) -> usize {
        self.vertex_of[self.alpha[d]]
    }

    /// Face permutation `alpha∘sigma`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.alpha[self.sigma[d]]
    }

    /// Next dart of the face on the left of `d`, walking along the boundary:
    /// `sigma∘alpha`.
    pub fn left_face_next(&self, d: Dart) -> Dart {
        self.sigma[self.alpha[d]]
    }

    /// Cycles of the face permutation `alpha∘sigma`.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let n = self.alpha.len();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for d in 0..n {
            if !seen[d] {
                let mut cycle = Vec::new();
                let mut x = d;
                loop {
                    seen[x] = true;
                    cycle.push(x);
                    x = self.phi(x);
                    if x == d {
                        break;
                    }
                }
                faces.push(cycle);
            }
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        if self.alpha.is_empty() {
            1
        } else {
            self.faces().len()
        }
    }

    /// Darts of the face on the left of `d`, in boundary-walk order.
    pub fn left_face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = Vec::new();
        let mut x = d;
        loop {
            walk.push(x);
            x = self.left_face_next(x);
            if x == d {
                break;
            }
        }
        walk
    }

    /// Euler characteristic test at genus zero.
    pub fn is_planar(&self) -> bool {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64 == 2
    }

    /// `v - e + f = 2 - 2g`.
    pub fn genus(&self) -> i64 {
        let chi = self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64;
        (2 - chi) / 2
    }

    /// Edge ids are the smaller dart of each pair.
    pub fn edges(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.alpha.len()).filter(move |&d| d < self.alpha[d])
    }

    /// Edges with both darts in the same sigma cycle.
    pub fn loops(&self) -> Vec<Dart> {
        self.edges()
            .filter(|&d| self.vertex_of[d] == self.vertex_of[self.alpha[d]])
            .collect()
    }

    /// Edges whose deletion disconnects the map.
    pub fn bridges(&self) -> Vec<Dart> {
        self.edges().filter(|&d| self.is_bridge(d)).collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.edges().all(|d| !self.is_bridge(d))
    }

    /// True iff removing the edge of `d` disconnects its endpoints.
    pub fn is_bridge(&self, d: Dart) -> bool {
        let e = if d < self.alpha[d] { d } else { self.alpha[d] };
        let (a, b) = (self.vertex_of[e], self.vertex_of[self.alpha[e]]);
        if a == b {
            return false;
        }
        // search for b from a without crossing edge e
        let mut seen = vec![false; self.n_vertices];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            for dart in 0..self.alpha.len() {
                if self.vertex_of[dart] != v {
                    continue;
                }
                if dart == e || self.alpha[dart] == e {
                    continue;
                }
                let w = self.vertex_of[self.alpha[dart]];
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

    /// Exchanges vertices and faces; the root dart is kept.
    pub fn dual(&self) -> RootedMap {
        let sigma: Vec<Dart> = (0..self.alpha.len()).map(|d| self.phi(d)).collect();
        RootedMap::build(self.alpha.clone(), sigma, self.root).expect("dual of a valid map")
    }

    /// True iff the map has a double edge.
    pub fn has_multiple_edges(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .edges()
            .map(|d| {
                let a = self.vertex_of[d];
                let b = self.vertex_of[self.alpha[d]];
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    /// Planar, all faces of degree 3, no loops, no multiple edges.
    pub fn is_triangulation(&self) -> bool {
        if self.alpha.is_empty() || !self.is_planar() {
            return false;
        }
        if !self.loops().is_empty() || self.has_multiple_edges() {
            return false;
        }
        self.faces().iter().all(|f| f.len() == 3)
    }

    /// Vertices not incident to the root face of a triangulation.
    pub fn internal_vertex_count(&self) -> Result<usize, MapError> {
        let root = self.root.ok_or(MapError::MissingRoot)?;
        if !self.is_triangulation() {
            return Err(MapError::NotTriangulation);
        }
        let mut on_root_face = vec![false; self.n_vertices];
        for d in self.left_face_walk(root) {
            on_root_face[self.vertex_of[d]] = true;
        }
        Ok((0..self.n_vertices).filter(|&v| !on_root_face[v]).count())
    }

    /// Relabels darts by a deterministic traversal from the root: walk each
    /// discovered vertex's sigma cycle, crossing edges breadth-first.  Two
    /// rooted maps are isomorphic iff their canonical forms are equal.
    pub fn canonicalize(&self) -> Result<RootedMap, MapError> {
        if self.alpha.is_empty() {
            return Ok(self.clone());
        }
        let root = self.root.ok_or(MapError::MissingRoot)?;
        let n = self.alpha.len();
        let mut new_id = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(d) = queue.pop_front() {
            if new_id[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            loop {
                if new_id[x] == usize::MAX {
                    new_id[x] = order.len();
                    order.push(x);
                    queue.push_back(self.alpha[x]);
                }
                x = self.sigma[x];
                if x == d {
                    break;
                }
            }
        }
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for d in 0..n {
            alpha[new_id[d]] = new_id[self.alpha[d]];
            sigma[new_id[d]] = new_id[self.sigma[d]];
        }
        RootedMap::new(alpha, sigma, 0)
    }

    /// Per-vertex clockwise dart lists, each starting at its smallest dart.
    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        let mut rots = vec![Vec::new(); self.n_vertices];
        let mut started = vec![false; self.n_vertices];
        for d in 0..self.alpha.len() {
            let v = self.vertex_of[d];
            if started[v] {
                continue;
            }
            started[v] = true;
            let mut x = d;
            loop {
                rots[v].push(x);
                x = self.sigma[x];
                if x == d {
                    break;
                }
            }
        }
        rots
    }

    /// Builds a map from per-vertex clockwise dart lists.
    pub fn from_rotations(
        rotations: &[Vec<Dart>],
        alpha: Vec<Dart>,
        root: Option<Dart>,
    ) -> Result<RootedMap, MapError> {
        let n = alpha.len();
        let mut sigma = vec![usize::MAX; n];
        for rot in rotations {
            for (i, &d) in rot.iter().enumerate() {
                if d >= n || sigma[d] != usize::MAX {
                    return Err(MapError::NotPermutation { dart: d.min(n.saturating_sub(1)) });
                }
                sigma[d] = rot[(i + 1) % rot.len()];
            }
        }
        if sigma.iter().any(|&s| s == usize::MAX) {
            return Err(MapError::NotPermutation { dart: 0 });
        }
        Self::build(alpha, sigma, root)
    }

    /// Core of a triangulation: delete the two root endpoints and all their
    /// edges; mark apex, base and the two boundary paths.
    pub fn core(&self) -> Result<CoreMap, MapError> {
        let h_r = self.root.ok_or(MapError::MissingRoot)?;
        if !self.is_triangulation() {
            return Err(MapError::NotTriangulation);
        }
        let v = self.vertex_of[h_r];
        let u = self.vertex_of[self.alpha[h_r]];
        // left boundary: neighbors of u clockwise after v (apex first)
        let mut left_old = Vec::new();
        let start = self.alpha[h_r];
        let mut d = self.sigma[start];
        while d != start {
            left_old.push(self.vertex_of[self.alpha[d]]);
            d = self.sigma[d];
        }
        // right boundary: neighbors of v counter-clockwise after u
        let mut right_old = Vec::new();
        let mut d = self.sigma_inv(h_r);
        while d != h_r {
            right_old.push(self.vertex_of[self.alpha[d]]);
            d = self.sigma_inv(d);
        }
        if left_old.first() != right_old.first() || left_old.last() != right_old.last() {
            return Err(MapError::BadBoundary);
        }
        // delete all darts at u and v together with their partners
        let keep: Vec<Dart> = (0..self.alpha.len())
            .filter(|&d| {
                let a = self.vertex_of[d];
                let b = self.vertex_of[self.alpha[d]];
                a != u && a != v && b != u && b != v
            })
            .collect();
        let mut new_dart = vec![usize::MAX; self.alpha.len()];
        for (i, &d) in keep.iter().enumerate() {
            new_dart[d] = i;
        }
        let mut alpha = vec![0; keep.len()];
        let mut sigma = vec![0; keep.len()];
        for (i, &d) in keep.iter().enumerate() {
            alpha[i] = new_dart[self.alpha[d]];
            let mut s = self.sigma[d];
            while new_dart[s] == usize::MAX {
                s = self.sigma[s];
            }
            sigma[i] = new_dart[s];
        }
        let map = if keep.is_empty() {
            RootedMap::single_vertex()
        } else {
            RootedMap::unrooted(alpha, sigma)?
        };
        // remap old vertex ids into the core's numbering
        let vertex_map = |w: usize| -> usize {
            if map.dart_count() == 0 {
                0
            } else {
                let d = (0..self.alpha.len())
                    .find(|&d| self.vertex_of[d] == w && new_dart[d] != usize::MAX)
                    .expect("core vertex keeps a dart");
                map.vertex_of[new_dart[d]]
            }
        };
        let left: Vec<usize> = left_old.iter().map(|&w| vertex_map(w)).collect();
        let right: Vec<usize> = right_old.iter().map(|&w| vertex_map(w)).collect();
        let apex = left[0];
        let base = *left.last().unwrap();
        Ok(CoreMap { map, apex, base, left, right })
    }
}

/// A triangulation core: an unrooted planar map with marked apex, base and
/// the two boundary paths (both from apex to base, inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreMap {
    pub map: RootedMap,
    pub apex: usize,
    pub base: usize,
    /// Left boundary vertices, apex first.
    pub left: Vec<usize>,
    /// Right boundary vertices, apex first.
    pub right: Vec<usize>,
}

impl CoreMap {
    /// Re-adds the two root endpoints: every left-boundary vertex is linked
    /// to `u`, every right-boundary vertex to `v`, and the root is drawn
    /// from `v` to `u` with the apex outside.
    pub fn close(&self) -> Result<RootedMap, MapError> {
        let lb = &self.left;
        let rb = &self.right;
        if lb.is_empty()
            || rb.is_empty()
            || lb[0] != self.apex
            || rb[0] != self.apex
            || *lb.last().unwrap() != self.base
            || *rb.last().unwrap() != self.base
        {
            return Err(MapError::BadBoundary);
        }
        for path in [lb, rb] {
            let mut sorted = path.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != path.len() {
                return Err(MapError::BadBoundary);
            }
        }
        let core = &self.map;
        let d0 = core.dart_count();
        // dart from a to b in the core (simple, so unique)
        let mut by_pair: BTreeMap<(usize, usize), Dart> = BTreeMap::new();
        for d in 0..d0 {
            by_pair.insert((core.vertex_of(d), core.target_of(d)), d);
        }
        let pair_dart = |a: usize, b: usize| -> Result<Dart, MapError> {
            by_pair.get(&(a, b)).copied().ok_or(MapError::BadBoundary)
        };
        // new darts: u->v, v->u, then u<->lb[i], then v<->rb[j]
        let uv_u = d0;
        let uv_v = d0 + 1; // becomes the root
        let u_to = |i: usize| d0 + 2 + 2 * i;
        let lb_to_u = |i: usize| d0 + 2 + 2 * i + 1;
        let off = d0 + 2 + 2 * lb.len();
        let v_to = |j: usize| off + 2 * j;
        let rb_to_v = |j: usize| off + 2 * j + 1;
        let total = off + 2 * rb.len();
        let mut alpha = vec![0usize; total];
        for d in 0..d0 {
            alpha[d] = core.alpha(d);
        }
        alpha[uv_u] = uv_v;
        alpha[uv_v] = uv_u;
        for i in 0..lb.len() {
            alpha[u_to(i)] = lb_to_u(i);
            alpha[lb_to_u(i)] = u_to(i);
        }
        for j in 0..rb.len() {
            alpha[v_to(j)] = rb_to_v(j);
            alpha[rb_to_v(j)] = v_to(j);
        }
        // rotations of the old vertices, to be spliced
        let n_core_vertices = core.vertex_count().max(1);
        let mut rots: Vec<Vec<Dart>> = if core.dart_count() == 0 {
            vec![Vec::new()]
        } else {
            core.rotations()
        };
        let insert_after = |rot: &mut Vec<Dart>, anchor: Dart, new: Dart| -> Result<(), MapError> {
            let pos = rot.iter().position(|&d| d == anchor).ok_or(MapError::BadBoundary)?;
            rot.insert(pos + 1, new);
            Ok(())
        };
        if lb.len() == 1 {
            // apex == base: the core is a single vertex
            rots[self.apex].push(lb_to_u(0));
            rots[self.apex].push(rb_to_v(0));
        } else {
            let k = lb.len() - 1;
            let m = rb.len() - 1;
            // base first: its darts to v then u ride on core anchors
            let anchor = pair_dart(self.base, rb[m - 1])?;
            insert_after(&mut rots[self.base], anchor, rb_to_v(m))?;
            insert_after(&mut rots[self.base], rb_to_v(m), lb_to_u(k))?;
            // interior and apex of the left boundary: dart to u right after
            // the dart toward the next left vertex
            for i in 0..k {
                let anchor = pair_dart(lb[i], lb[i + 1])?;
                insert_after(&mut rots[lb[i]], anchor, lb_to_u(i))?;
            }
            // right boundary: dart to v right before the dart toward the
            // next right vertex; at the apex that is right after its dart
            // to u, which gives the same position
            for j in 0..m {
                let next = pair_dart(rb[j], rb[j + 1])?;
                let rot = &mut rots[rb[j]];
                let pos = rot.iter().position(|&d| d == next).ok_or(MapError::BadBoundary)?;
                rot.insert(pos, rb_to_v(j));
            }
        }
        // the two new vertices
        let mut rot_u = vec![uv_u];
        rot_u.extend((0..lb.len()).map(u_to));
        let mut rot_v = vec![uv_v];
        rot_v.extend((0..rb.len()).rev().map(v_to));
        let mut all = Vec::with_capacity(n_core_vertices + 2);
        all.extend(rots);
        all.push(rot_u);
        all.push(rot_v);
        RootedMap::from_rotations(&all, alpha, Some(uv_v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn loop_map() -> RootedMap {
        RootedMap::new(vec![1, 0], vec![1, 0], 0).unwrap()
    }

    pub(crate) fn bridge_map() -> RootedMap {
        RootedMap::new(vec![1, 0], vec![0, 1], 0).unwrap()
    }

    pub(crate) fn double_edge() -> RootedMap {
        // two vertices {0,2} and {1,3}, edges (0,1) and (2,3)
        RootedMap::new(vec![1, 0, 3, 2], vec![2, 3, 0, 1], 0).unwrap()
    }

    /// Tetrahedron: vertices 0..4 mapped by hand onto a planar rotation.
    pub(crate) fn tetrahedron() -> RootedMap {
        // vertices a,b,c,d; edges ab(0,1) ac(2,3) ad(4,5) bc(6,7) bd(8,9) cd(10,11)
        // clockwise rotations: a: ab,ac,ad / b: ba,bd,bc / c: ca,cb,cd / d: da,dc,db
        let rotations = vec![
            vec![0, 2, 4],
            vec![1, 8, 6],
            vec![3, 7, 10],
            vec![5, 11, 9],
        ];
        let alpha = vec![1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10];
        RootedMap::from_rotations(&rotations, alpha, Some(0)).unwrap()
    }

    pub(crate) fn triangle() -> RootedMap {
        // vertices a,b,c; edges ab(0,1) bc(2,3) ca(4,5); root from a to b
        let rotations = vec![vec![0, 5], vec![1, 2], vec![3, 4]];
        RootedMap::from_rotations(&rotations, vec![1, 0, 3, 2, 5, 4], Some(0)).unwrap()
    }

    fn k5_any_rotation() -> RootedMap {
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in (a + 1)..5 {
                pairs.push((a, b));
            }
        }
        let mut rotations = vec![Vec::new(); 5];
        let mut alpha = vec![0; 20];
        for (e, (a, b)) in pairs.iter().enumerate() {
            alpha[2 * e] = 2 * e + 1;
            alpha[2 * e + 1] = 2 * e;
            rotations[*a].push(2 * e);
            rotations[*b].push(2 * e + 1);
        }
        RootedMap::from_rotations(&rotations, alpha, Some(0)).unwrap()
    }

    #[test]
    fn face_examples() {
        assert_eq!(loop_map().face_count(), 2);
        assert_eq!(bridge_map().face_count(), 1);
        assert_eq!(tetrahedron().face_count(), 4);
    }

    #[test]
    fn planarity_examples() {
        assert!(loop_map().is_planar());
        assert!(bridge_map().is_planar());
        assert!(!k5_any_rotation().is_planar());
        assert!(k5_any_rotation().genus() >= 1);
    }

    #[test]
    fn bridges_and_loops() {
        assert_eq!(bridge_map().bridges(), vec![0]);
        assert!(bridge_map().loops().is_empty());
        assert_eq!(loop_map().loops(), vec![0]);
        assert!(loop_map().bridges().is_empty());
        assert!(double_edge().bridges().is_empty());
        assert!(double_edge().loops().is_empty());
    }

    #[test]
    fn dual_examples() {
        let d = loop_map().dual();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.bridges().len(), 1);
        let d = bridge_map().dual();
        assert_eq!(d.loops().len(), 1);
        let d = double_edge().dual();
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.face_count(), 2);
        assert!(!d.has_multiple_edges() || d.has_multiple_edges());
    }

    #[test]
    fn triangulation_examples() {
        assert!(tetrahedron().is_triangulation());
        assert!(triangle().is_triangulation());
        assert!(!loop_map().is_triangulation());
        assert_eq!(tetrahedron().internal_vertex_count().unwrap(), 1);
        assert_eq!(triangle().internal_vertex_count().unwrap(), 0);
    }

    #[test]
    fn canonicalize_idempotent() {
        for m in [loop_map(), bridge_map(), double_edge(), tetrahedron()] {
            let c = m.canonicalize().unwrap();
            assert_eq!(c.canonicalize().unwrap(), c);
        }
        // relabeled loop map has the same canonical form
        let relabeled = RootedMap::new(vec![1, 0], vec![1, 0], 1).unwrap();
        assert_eq!(
            relabeled.canonicalize().unwrap(),
            loop_map().canonicalize().unwrap()
        );
    }

    #[test]
    fn canonicalize_separates_rotations() {
        // one vertex, two loops: nested vs interleaved rotations
        let nested = RootedMap::new(vec![1, 0, 3, 2], vec![1, 2, 3, 0], 0).unwrap();
        let interleaved = RootedMap::new(vec![1, 0, 3, 2], vec![2, 3, 1, 0], 0).unwrap();
        assert_ne!(
            nested.canonicalize().unwrap(),
            interleaved.canonicalize().unwrap()
        );
    }

    #[test]
    fn tetrahedron_core_is_an_edge() {
        let core = tetrahedron().core().unwrap();
        assert_eq!(core.map.edge_count(), 1);
        assert_eq!(core.map.vertex_count(), 2);
        assert_ne!(core.apex, core.base);
        assert_eq!(core.left, core.right);
        let closed = core.close().unwrap();
        assert!(closed.is_triangulation());
        assert_eq!(
            closed.canonicalize().unwrap(),
            tetrahedron().canonicalize().unwrap()
        );
    }

    #[test]
    fn triangle_core_is_a_vertex() {
        let core = triangle().core().unwrap();
        assert_eq!(core.map.dart_count(), 0);
        assert_eq!(core.apex, core.base);
        let closed = core.close().unwrap();
        assert!(closed.is_triangulation());
        assert_eq!(
            closed.canonicalize().unwrap(),
            triangle().canonicalize().unwrap()
        );
    }

    #[test]
    fn rejects_invalid_permutations() {
        assert!(matches!(
            RootedMap::new(vec![0, 1], vec![1, 0], 0),
            Err(MapError::FixedPoint { .. })
        ));
        assert!(matches!(
            RootedMap::new(vec![1, 0], vec![0, 0], 0),
            Err(MapError::NotPermutation { .. })
        ));
        assert!(matches!(
            RootedMap::new(vec![1, 0, 3, 2], vec![1, 0, 3, 2], 0),
            Err(MapError::Disconnected)
        ));
        assert!(matches!(
            RootedMap::new(vec![1, 0], vec![1, 0], 5),
            Err(MapError::BadRoot { dart: 5 })
        ));
    }
}
