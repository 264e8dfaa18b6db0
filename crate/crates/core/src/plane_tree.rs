//! Plane trees stored in prefix order.
//!
//! Node identity is the prefix-order index, which is also the order of first
//! visits in a counter-clockwise contour traversal.  The single-root tree
//! (zero edges) is legal everywhere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dyck::{DyckPath, Step};

pub type NodeId = usize;

/// An ordered rooted tree.  Node ids are prefix-order positions: the root is
/// `0`, parents precede children, and sibling order agrees with id order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    depth: Vec<usize>,
    /// `subtree_end[v]` is one past the last id in the subtree of `v`, so the
    /// subtree of `v` is the id range `v..subtree_end[v]`.
    subtree_end: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    Empty,
    /// `parent[0]` must be absent and nothing else may be.
    BadRoot,
    /// `parent[i]` does not precede `i`.
    ParentAfterChild { node: NodeId },
    /// The stored order is not a prefix order: `parent[i]` is not on the
    /// rightmost path of the tree built from nodes `0..i`.
    NotPrefixOrder { node: NodeId },
    UnknownNode { node: NodeId },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::Empty => write!(f, "a tree needs at least a root node"),
            TreeError::BadRoot => write!(f, "exactly node 0 must be parentless"),
            TreeError::ParentAfterChild { node } => {
                write!(f, "node {node} has a parent with a larger id")
            }
            TreeError::NotPrefixOrder { node } => {
                write!(f, "node {node} breaks the prefix order")
            }
            TreeError::UnknownNode { node } => write!(f, "unknown node id {node}"),
        }
    }
}

impl core::error::Error for TreeError {}

impl PlaneTree {
    /// Builds a tree from a prefix-order parent vector.
    pub fn from_parents(parents: &[Option<NodeId>]) -> Result<Self, TreeError> {
        if parents.is_empty() {
            return Err(TreeError::Empty);
        }
        if parents[0].is_some() {
            return Err(TreeError::BadRoot);
        }
        let n = parents.len();
        let mut children: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        let mut depth = vec![0usize; n];
        // rightmost path of the partial tree; a new node must attach to it
        let mut right_path: Vec<NodeId> = vec![0];
        for (i, p) in parents.iter().enumerate().skip(1) {
            let p = p.ok_or(TreeError::BadRoot)?;
            if p >= i {
                return Err(TreeError::ParentAfterChild { node: i });
            }
            match right_path.iter().position(|&r| r == p) {
                Some(pos) => right_path.truncate(pos + 1),
                None => return Err(TreeError::NotPrefixOrder { node: i }),
            }
            right_path.push(i);
            children[p].push(i);
            depth[i] = depth[p] + 1;
        }
        let mut subtree_end = vec![0usize; n];
        for v in (0..n).rev() {
            subtree_end[v] = children[v].last().map_or(v + 1, |&c| subtree_end[c]);
        }
        Ok(PlaneTree {
            parent: parents.to_vec(),
            children,
            depth,
            subtree_end,
        })
    }

    /// The one-node tree.
    pub fn singleton() -> Self {
        PlaneTree::from_parents(&[None]).unwrap()
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn parents(&self) -> &[Option<NodeId>] {
        &self.parent
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v]
    }

    pub fn depth(&self, v: NodeId) -> Result<usize, TreeError> {
        self.depth
            .get(v)
            .copied()
            .ok_or(TreeError::UnknownNode { node: v })
    }

    /// Depth without the bounds check, for internal use on known-good ids.
    pub(crate) fn depth_of(&self, v: NodeId) -> usize {
        self.depth[v]
    }

    /// One past the last id of the subtree rooted at `v`.
    pub fn subtree_end(&self, v: NodeId) -> usize {
        self.subtree_end[v]
    }

    /// True iff `a` is an ancestor of `b` (or equal).
    pub fn is_ancestor(&self, a: NodeId, b: NodeId) -> bool {
        a <= b && b < self.subtree_end[a]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.children[v].is_empty()
    }

    /// The last node in prefix order.
    pub fn last_node(&self) -> NodeId {
        self.parent.len() - 1
    }

    /// 1-based index of `v` among the children of its parent.
    pub fn child_index(&self, v: NodeId) -> Option<usize> {
        let p = self.parent[v]?;
        self.children[p].iter().position(|&c| c == v).map(|i| i + 1)
    }

    /// The sibling immediately to the left of `v`, if any.
    pub fn left_sibling(&self, v: NodeId) -> Option<NodeId> {
        let p = self.parent[v]?;
        let i = self.children[p].iter().position(|&c| c == v)?;
        if i == 0 {
            None
        } else {
            Some(self.children[p][i - 1])
        }
    }

    /// Rightmost branch starting at `v`: `v`, its last child, and so on down
    /// to a leaf.
    pub fn rightmost_branch(&self, v: NodeId) -> Vec<NodeId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(&c) = self.children[cur].last() {
            path.push(c);
            cur = c;
        }
        path
    }

    /// Leftmost branch starting at `v`.
    pub fn leftmost_branch(&self, v: NodeId) -> Vec<NodeId> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(&c) = self.children[cur].first() {
            path.push(c);
            cur = c;
        }
        path
    }

    /// Depth variation along the counter-clockwise contour: an up step at the
    /// first visit of each non-root node, a down step at its final leave.
    /// The `i`-th up step corresponds to the `i`-th non-root node in prefix
    /// order.
    pub fn contour_word(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.edge_count());
        fn walk(tree: &PlaneTree, v: NodeId, steps: &mut Vec<Step>) {
            for &c in &tree.children[v] {
                steps.push(Step::Up);
                walk(tree, c, steps);
                steps.push(Step::Down);
            }
        }
        walk(self, 0, &mut steps);
        DyckPath::new(steps).expect("contour of a tree is balanced")
    }

    /// Inverse of [`PlaneTree::contour_word`].
    pub fn from_contour(word: &DyckPath) -> Self {
        let mut parents: Vec<Option<NodeId>> = vec![None];
        let mut stack: Vec<NodeId> = vec![0];
        for s in word.steps() {
            match s {
                Step::Up => {
                    let id = parents.len();
                    parents.push(Some(*stack.last().unwrap()));
                    stack.push(id);
                }
                Step::Down => {
                    stack.pop();
                }
            }
        }
        PlaneTree::from_parents(&parents).expect("contour decoding is prefix-ordered")
    }

    /// Returns the subtree of `v` as a tree of its own, together with the map
    /// from new ids to old ids (which is just an offset, since subtrees are
    /// prefix intervals).
    pub fn subtree(&self, v: NodeId) -> PlaneTree {
        let end = self.subtree_end[v];
        let parents: Vec<Option<NodeId>> = (v..end)
            .map(|w| {
                if w == v {
                    None
                } else {
                    Some(self.parent[w].unwrap() - v)
                }
            })
            .collect();
        PlaneTree::from_parents(&parents).expect("subtree keeps prefix order")
    }

    /// Reverses the order of children of every node.
    pub fn mirror(&self) -> PlaneTree {
        // rebuild in the mirrored prefix order
        let mut parents: Vec<Option<NodeId>> = Vec::with_capacity(self.node_count());
        fn walk(tree: &PlaneTree, v: NodeId, parent_new: Option<NodeId>, parents: &mut Vec<Option<NodeId>>) {
            let id = parents.len();
            parents.push(parent_new);
            for &c in tree.children[v].iter().rev() {
                walk(tree, c, Some(id), parents);
            }
        }
        walk(self, 0, None, &mut parents);
        PlaneTree::from_parents(&parents).expect("mirroring keeps prefix order")
    }

    /// All plane trees with `n` edges.
    pub fn enumerate(n: usize) -> Vec<PlaneTree> {
        DyckPath::enumerate(n)
            .iter()
            .map(PlaneTree::from_contour)
            .collect()
    }
}
